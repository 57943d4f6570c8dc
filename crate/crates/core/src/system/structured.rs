//! Characteristic polynomial of the full system through its row-reduced form.
//!
//! Row operations applied to `M - xI` (which preserve the determinant) turn it
//! into `x X + C`, where `X` is upper triangular with alternating binomial
//! entries apart from its last two rows, and `C` is a 0/1 matrix supported on
//! the diagonal, the antidiagonal of the leading `(k+1)x(k+1)` block and the
//! last column. Then `det(xI - M) = (-1)^k det(x X + C)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{
    binom, interpolate_x_coefficients, lagrange_interpolate, IntPoly, PolyMatrix, QPoly, XQPoly,
    Q_SAMPLE_START,
};

/// The pair `(X, C)` with `M̃ = x X + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredAddends {
    pub x_part: PolyMatrix,
    pub constant_part: PolyMatrix,
}

impl StructuredAddends {
    pub fn dim(&self) -> usize {
        self.x_part.dim()
    }

    fn eval(&self, q: &BigInt, x: &BigInt) -> crate::exactalg::IntMatrix {
        let xs = self.x_part.eval(q);
        let cs = self.constant_part.eval(q);
        let n = self.dim();
        let mut out = crate::exactalg::IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, x * xs.get(i, j) + cs.get(i, j));
            }
        }
        out
    }
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn structured_addends(k: u32) -> Result<StructuredAddends> {
    if k < 2 {
        return Err(Error::InvalidK { min: 2, got: k });
    }
    let k = k as usize;
    let n = k + 2;
    let mut x_part = PolyMatrix::zeros(n);
    let mut constant_part = PolyMatrix::zeros(n);

    for u in 0..k {
        let delta = k - u;
        for j in u..=k {
            let v = binom(delta as i64, (j - u) as i64) * sign(j - u + 1);
            x_part.set(u, j, QPoly::constant(v));
        }
        x_part.set(u, k + 1, QPoly::constant(sign(delta)));

        let diag = constant_part.get(u, u) + &QPoly::one();
        constant_part.set(u, u, diag);
        let anti = constant_part.get(u, k - u) + &QPoly::one();
        constant_part.set(u, k - u, anti);
        if u >= 1 {
            constant_part.set(u, k + 1, QPoly::one());
        }
    }

    x_part.set(k, k, QPoly::constant(-1));
    x_part.set(k, k + 1, QPoly::one());
    x_part.set(k + 1, k, QPoly::linear(-5, 1));
    x_part.set(k + 1, k + 1, QPoly::linear(4, -1));

    constant_part.set(k, 0, QPoly::one());
    constant_part.set(k, k, QPoly::one());
    constant_part.set(k + 1, k, QPoly::one());

    Ok(StructuredAddends {
        x_part,
        constant_part,
    })
}

/// `det(x X + C)` over Z\[q\]\[x\] by evaluation in both variables.
pub fn structured_determinant(addends: &StructuredAddends) -> Result<XQPoly> {
    let n = addends.dim();
    let q_bound = (0..n)
        .map(|i| {
            let deg = |m: &PolyMatrix| {
                m.row(i)
                    .iter()
                    .filter_map(IntPoly::degree)
                    .max()
                    .unwrap_or(0)
            };
            deg(&addends.x_part).max(deg(&addends.constant_part))
        })
        .sum::<usize>();

    let samples = (0..=q_bound as i64 + 1)
        .into_par_iter()
        .map(|i| {
            let q = BigInt::from(Q_SAMPLE_START + i);
            // degree in x is at most n; one extra point verifies
            let pts: Vec<(BigInt, BigInt)> = (0..=n as i64 + 1)
                .map(|xv| {
                    let x = BigInt::from(xv);
                    let d = addends.eval(&q, &x).det();
                    (x, d)
                })
                .collect();
            lagrange_interpolate(&pts, n).map(|p| (q, p))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate_x_coefficients(&samples, n, q_bound)
}

/// `k(x) = det(xI - M)` for the full system, computed as `(-1)^k det(x X + C)`.
pub fn build_structured_charpoly(k: u32) -> Result<XQPoly> {
    let addends = structured_addends(k)?;
    let det = structured_determinant(&addends)?;
    Ok(if k % 2 == 0 { det } else { -&det })
}
