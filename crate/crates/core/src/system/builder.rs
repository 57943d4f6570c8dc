//! The affine systems `g_{n+1} = M g_n + h` advanced by the state vectors.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{binom, PolyMatrix, QPoly};
use crate::sums::{ReducedForm, SystemVariant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSystem {
    pub k: u32,
    pub variant: SystemVariant,
    #[serde(skip)]
    pub matrix: PolyMatrix,
    #[serde(skip)]
    pub constant: Vec<QPoly>,
    /// Coordinate names, in matrix order.
    pub coordinates: Vec<String>,
}

impl LinearSystem {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `M g + h` at a fixed `q`.
    pub fn apply(&self, g: &[BigInt], q: &BigInt) -> Result<Vec<BigInt>> {
        if g.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: g.len(),
            });
        }
        let m = self.matrix.eval(q);
        Ok(m.mul_vec(g)
            .into_iter()
            .zip(&self.constant)
            .map(|(v, h)| v + h.eval(q))
            .collect())
    }
}

fn c(n: usize, r: usize) -> QPoly {
    QPoly::constant(binom(n as i64, r as i64))
}

fn cint(v: i64) -> QPoly {
    QPoly::constant(v)
}

fn pow2(e: usize) -> BigInt {
    BigInt::from(1) << e
}

/// `-2(q-4)`.
fn winger_correction() -> QPoly {
    QPoly::linear(8, -2)
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK { min: 2, got: k });
    }
    Ok(())
}

/// The `(k+2)`-dimensional system on `[(a^k), (a^{k-1}b), ..., (ab^{k-1}), (b^k), u]`.
///
/// For `0 <= i <= k-1` and `0 <= j <= k` the entries are
/// `C(k-i, j) + C(k-i, k-j)`; the last column holds `2^k - 2` in row 0 and
/// `2^{k-i} - 1` below; the two bottom rows carry the `q` dependence.
pub fn build_full_matrix(k: u32) -> Result<LinearSystem> {
    check_k(k)?;
    let k = k as usize;
    let n = k + 2;
    let mut m = PolyMatrix::zeros(n);
    for i in 0..k {
        for j in 0..=k {
            m.set(i, j, &c(k - i, j) + &c(k - i, k - j));
        }
        let last = if i == 0 { pow2(k) - 2 } else { pow2(k - i) - 1 };
        m.set(i, k + 1, QPoly::constant(last));
    }
    m.set(k, 0, QPoly::linear(-4, 1));
    m.set(k, k, QPoly::linear(-3, 1));
    m.set(k + 1, 0, QPoly::linear(-5, 1));
    m.set(k + 1, k, QPoly::linear(-4, 1));

    let mut constant = vec![cint(-2)];
    constant.extend(std::iter::repeat_n(cint(-1), k - 1));
    constant.push(winger_correction());
    constant.push(winger_correction());

    let mut coordinates: Vec<String> = (0..=k)
        .map(|j| {
            let mut s = String::new();
            if k - j > 0 {
                s.push_str(&format!("a^{}", k - j));
            }
            if j > 0 {
                s.push_str(&format!("b^{j}"));
            }
            format!("({s})")
        })
        .collect();
    coordinates.push("u".into());

    Ok(LinearSystem {
        k: k as u32,
        variant: SystemVariant::Full,
        matrix: m,
        constant,
        coordinates,
    })
}

/// The reduced system on `[(a^k), (b^k), c_1, ..., c_m, u]`, of dimension
/// `floor(k/2) + 3`, with `c_j = (a^{k-j}b^j) + (a^j b^{k-j})` for
/// `j <= l = floor((k-1)/2)` and, for even k, `c_{l+1} = (a^{k/2} b^{k/2})`.
///
/// [`ReducedForm::AsPrinted`] transcribes the reference equations verbatim.
/// [`ReducedForm::Folded`] sums the two full-system equations behind each `c_j`.
pub fn build_reduced_matrix(k: u32, form: ReducedForm) -> Result<LinearSystem> {
    check_k(k)?;
    let k = k as usize;
    let l = (k - 1) / 2;
    let m_top = k / 2;
    let even = k % 2 == 0;
    let dim = m_top + 3;
    let (ia, ib, iu) = (0, 1, dim - 1);
    let ic = |i: usize| 1 + i;

    let mut m = PolyMatrix::zeros(dim);
    let mut constant = vec![QPoly::zero(); dim];

    // (a^k)
    m.set(ia, ia, cint(2));
    m.set(ia, ib, cint(2));
    for i in 1..=m_top {
        m.set(ia, ic(i), QPoly::constant(binom(k as i64, i as i64) * 2));
    }
    m.set(ia, iu, QPoly::constant(pow2(k) - 2));
    constant[ia] = cint(-2);

    // (b^k)
    m.set(ib, ia, QPoly::linear(-4, 1));
    m.set(ib, ib, QPoly::linear(-3, 1));
    constant[ib] = winger_correction();

    // c_j, j = 1..=l
    for j in 1..=l {
        let row = ic(j);
        let (own, u_coef, h) = match form {
            ReducedForm::AsPrinted => (1, pow2(k - j) - 1, -1),
            ReducedForm::Folded => (2, pow2(k - j) + pow2(j) - 2, -2),
        };
        m.set(row, ia, cint(own));
        m.set(row, ib, cint(own));
        for i in 1..=m_top {
            let mut v = binom((k - j) as i64, i as i64) + binom(j as i64, i as i64);
            if i >= j {
                v += binom((k - j) as i64, (i - j) as i64);
            }
            m.set(row, ic(i), QPoly::constant(v));
        }
        m.set(row, iu, QPoly::constant(u_coef));
        constant[row] = cint(h);
    }

    // c_{l+1} for even k
    if even {
        let row = ic(l + 1);
        let h = k - l - 1;
        m.set(row, ia, cint(1));
        m.set(row, ib, cint(1));
        for i in 1..=l + 1 {
            let mut v = binom(h as i64, i as i64);
            if i == l + 1 {
                v += 1;
            }
            m.set(row, ic(i), QPoly::constant(v));
        }
        m.set(row, iu, QPoly::constant(pow2(h) - 1));
        constant[row] = cint(-1);
    }

    // u
    m.set(iu, ia, QPoly::linear(-5, 1));
    m.set(iu, ib, QPoly::linear(-4, 1));
    constant[iu] = winger_correction();

    let mut coordinates = vec![format!("(a^{k})"), format!("(b^{k})")];
    coordinates.extend((1..=m_top).map(|i| format!("c_{i}")));
    coordinates.push("u".into());

    Ok(LinearSystem {
        k: k as u32,
        variant: SystemVariant::Reduced(form),
        matrix: m,
        constant,
        coordinates,
    })
}

/// Builds the system for a given variant.
pub fn build_system(k: u32, variant: SystemVariant) -> Result<LinearSystem> {
    match variant {
        SystemVariant::Full => build_full_matrix(k),
        SystemVariant::Reduced(form) => build_reduced_matrix(k, form),
    }
}
