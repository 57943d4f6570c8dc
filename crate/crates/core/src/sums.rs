//! Power sums, type-restricted power sums and adjacency pair sums of a row,
//! plus the row-to-row step oracle for the linear systems they satisfy.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::binom;
use crate::triangle::{Row, Tag, TriangleParams};

fn pow(v: &BigUint, e: u32) -> BigInt {
    BigInt::from(Pow::pow(v, e))
}

/// `(s^k)_n`: sum of the k-th powers of all entries.
pub fn power_sum(row: &Row, k: u32) -> BigInt {
    row.values().map(|v| pow(v, k)).sum()
}

/// `((a^k)_n, (b^k)_n)`: power sums restricted to type A and type B entries.
pub fn type_power_sums(row: &Row, k: u32) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for e in row.entries() {
        let p = pow(&e.value, k);
        match e.tag {
            Tag::A => a += p,
            Tag::B => b += p,
        }
    }
    (a, b)
}

/// `(x^i y^j)_n`: over adjacent positions `(l, l+1)` whose tags are
/// `(first, second)`, the sum of `value_l^i * value_{l+1}^j`.
pub fn pair_sum(row: &Row, i: u32, j: u32, first: Tag, second: Tag) -> BigInt {
    row.entries()
        .windows(2)
        .filter(|w| w[0].tag == first && w[1].tag == second)
        .map(|w| pow(&w[0].value, i) * pow(&w[1].value, j))
        .sum()
}

/// The coordinates `[(a^k), (a^{k-1}b), ..., (ab^{k-1}), (b^k), u]` of one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateVector {
    pub k: u32,
    #[serde(serialize_with = "crate::json::ser_big_vec")]
    pub coords: Vec<BigInt>,
}

impl StateVector {
    pub fn new(k: u32, coords: Vec<BigInt>) -> Result<Self> {
        check_k(k)?;
        if coords.len() != k as usize + 2 {
            return Err(Error::DimensionMismatch {
                expected: k as usize + 2,
                got: coords.len(),
            });
        }
        Ok(Self { k, coords })
    }

    pub fn a_k(&self) -> &BigInt {
        &self.coords[0]
    }

    pub fn b_k(&self) -> &BigInt {
        &self.coords[self.k as usize]
    }

    pub fn u(&self) -> &BigInt {
        &self.coords[self.k as usize + 1]
    }

    /// `(a^{k-j} b^j)` for `0 <= j <= k`; the endpoints are `(a^k)` and `(b^k)`.
    pub fn mixed(&self, j: usize) -> &BigInt {
        &self.coords[j]
    }

    pub fn power_sum(&self) -> BigInt {
        self.a_k() + self.b_k()
    }

    /// Folds into the reduced coordinates `[(a^k), (b^k), c_1, ..., c_m, u]`, where
    /// `c_j = (a^{k-j}b^j) + (a^j b^{k-j})` for `j <= l = floor((k-1)/2)`, and for
    /// even k the extra `c_{l+1} = (a^{k/2} b^{k/2})`.
    pub fn fold(&self) -> Vec<BigInt> {
        let k = self.k as usize;
        let l = (k - 1) / 2;
        let mut out = vec![self.a_k().clone(), self.b_k().clone()];
        for j in 1..=l {
            out.push(self.mixed(j) + self.mixed(k - j));
        }
        if k % 2 == 0 {
            out.push(self.mixed(k / 2).clone());
        }
        out.push(self.u().clone());
        out
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK { min: 2, got: k });
    }
    Ok(())
}

pub fn state_vector(row: &Row, k: u32) -> Result<StateVector> {
    check_k(k)?;
    let (a, b) = type_power_sums(row, k);
    let mut coords = Vec::with_capacity(k as usize + 2);
    coords.push(a);
    for j in 1..k {
        coords.push(pair_sum(row, k - j, j, Tag::A, Tag::B));
    }
    coords.push(b);
    coords.push(pair_sum(row, 1, k - 1, Tag::B, Tag::B));
    Ok(StateVector { k, coords })
}

/// Which form of the reduced system an equation set follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducedForm {
    /// The reference equations transcribed verbatim.
    AsPrinted,
    /// Obtained by adding the full-system equations of `(a^{k-j}b^j)` and `(a^j b^{k-j})`.
    Folded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "system", content = "form")]
pub enum SystemVariant {
    Full,
    Reduced(ReducedForm),
}

impl fmt::Display for SystemVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemVariant::Full => f.write_str("full"),
            SystemVariant::Reduced(ReducedForm::AsPrinted) => f.write_str("reduced-as-printed"),
            SystemVariant::Reduced(ReducedForm::Folded) => f.write_str("reduced-folded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub name: String,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub predicted: BigInt,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub actual: BigInt,
}

impl EquationCheck {
    pub fn holds(&self) -> bool {
        self.predicted == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub variant: SystemVariant,
    pub k: u32,
    pub q: u32,
    pub equations: Vec<EquationCheck>,
}

impl StepReport {
    pub fn all_hold(&self) -> bool {
        self.equations.iter().all(EquationCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &EquationCheck> {
        self.equations.iter().filter(|e| !e.holds())
    }
}

fn mixed_name(k: u32, j: u32) -> String {
    let mut s = String::new();
    if k - j > 0 {
        s.push_str(&format!("a^{}", k - j));
    }
    if j > 0 {
        s.push_str(&format!("b^{j}"));
    }
    format!("({s})")
}

fn two_pow(e: usize) -> BigInt {
    BigInt::from(1) << e
}

/// Evaluates the right-hand side of every equation of the chosen system at
/// `g_n` and compares it with `g_next`.
///
/// Both vectors must come from consecutive rows with `n >= 1`; the winger
/// corrections built into the equations do not apply to the step from row 0.
pub fn check_system_step(
    g_n: &StateVector,
    g_next: &StateVector,
    params: TriangleParams,
    k: u32,
    variant: SystemVariant,
) -> Result<StepReport> {
    for g in [g_n, g_next] {
        if g.k != k || g.coords.len() != k as usize + 2 {
            return Err(Error::DimensionMismatch {
                expected: k as usize + 2,
                got: g.coords.len(),
            });
        }
    }
    let q = BigInt::from(params.q());
    let equations = match variant {
        SystemVariant::Full => full_step(g_n, g_next, &q),
        SystemVariant::Reduced(form) => reduced_step(g_n, g_next, &q, form),
    };
    Ok(StepReport {
        variant,
        k,
        q: params.q(),
        equations,
    })
}

fn q_rows(a: &BigInt, b: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
    let corr = BigInt::from(2) * (q - 4);
    let b_next = (q - 4) * a + (q - 3) * b - &corr;
    let u_next = (q - 5) * a + (q - 4) * b - &corr;
    (b_next, u_next)
}

fn full_step(g: &StateVector, next: &StateVector, q: &BigInt) -> Vec<EquationCheck> {
    let k = g.k as usize;
    let ki = k as i64;
    let (a, b, u) = (g.a_k(), g.b_k(), g.u());
    let mut eqs = Vec::with_capacity(k + 2);

    // (a^k)_{n+1} = 2(a^k) + 2 sum_{i=1}^{k-1} C(k,i)(a^{k-i}b^i) + 2(b^k) + (2^k-2)u - 2
    let mut rhs = BigInt::from(2) * a + BigInt::from(2) * b + (two_pow(k) - 2) * u - 2;
    for i in 1..k {
        rhs += BigInt::from(2) * binom(ki, i as i64) * g.mixed(i);
    }
    eqs.push(EquationCheck {
        name: mixed_name(g.k, 0),
        predicted: rhs,
        actual: next.a_k().clone(),
    });

    // (a^{k-j}b^j)_{n+1} = (a^k) + sum_{i=0}^{k-j-1} C(k-j,i) [(a^{k-j-i}b^{j+i}) + (a^{j+i}b^{k-j-i})]
    //                      + (b^k) + (2^{k-j}-1)u - 1
    for j in 1..k {
        let mut rhs = a + b + (two_pow(k - j) - 1) * u - 1;
        for i in 0..k - j {
            let c = binom((k - j) as i64, i as i64);
            rhs += &c * g.mixed(j + i) + &c * g.mixed(k - j - i);
        }
        eqs.push(EquationCheck {
            name: mixed_name(g.k, j as u32),
            predicted: rhs,
            actual: next.mixed(j).clone(),
        });
    }

    let (b_next, u_next) = q_rows(a, b, q);
    eqs.push(EquationCheck {
        name: mixed_name(g.k, g.k),
        predicted: b_next,
        actual: next.b_k().clone(),
    });
    eqs.push(EquationCheck {
        name: "u".into(),
        predicted: u_next,
        actual: next.u().clone(),
    });
    eqs
}

fn reduced_step(
    g: &StateVector,
    next: &StateVector,
    q: &BigInt,
    form: ReducedForm,
) -> Vec<EquationCheck> {
    let k = g.k as usize;
    let ki = k as i64;
    let l = (k - 1) / 2;
    let m = k / 2; // ceil((k-1)/2)
    let even = k % 2 == 0;
    let cur = g.fold();
    let nxt = next.fold();
    let (a, b) = (&cur[0], &cur[1]);
    let c = |i: usize| &cur[1 + i];
    let u = &cur[cur.len() - 1];
    let mut eqs = Vec::with_capacity(cur.len());

    let mut rhs = BigInt::from(2) * a + BigInt::from(2) * b + (two_pow(k) - 2) * u - 2;
    for i in 1..=m {
        rhs += BigInt::from(2) * binom(ki, i as i64) * c(i);
    }
    eqs.push(EquationCheck {
        name: mixed_name(g.k, 0),
        predicted: rhs,
        actual: nxt[0].clone(),
    });

    let (b_next, u_next) = q_rows(a, b, q);
    eqs.push(EquationCheck {
        name: mixed_name(g.k, g.k),
        predicted: b_next,
        actual: nxt[1].clone(),
    });

    for j in 1..=l {
        let (kj, jj) = ((k - j) as i64, j as i64);
        let mut rhs = match form {
            ReducedForm::AsPrinted => a + b + (two_pow(k - j) - 1) * u - 1,
            ReducedForm::Folded => {
                BigInt::from(2) * a + BigInt::from(2) * b + (two_pow(k - j) + two_pow(j) - 2) * u
                    - 2
            }
        };
        for i in j..=m {
            rhs += binom(kj, i as i64 - jj) * c(i);
        }
        for i in 1..=m {
            rhs += (binom(kj, i as i64) + binom(jj, i as i64)) * c(i);
        }
        eqs.push(EquationCheck {
            name: format!("c_{j}"),
            predicted: rhs,
            actual: nxt[1 + j].clone(),
        });
    }

    if even {
        let h = (k - l - 1) as i64;
        let mut rhs = a + c(l + 1) + b + (two_pow(k - l - 1) - 1) * u - 1;
        for i in 1..=l + 1 {
            rhs += binom(h, i as i64) * c(i);
        }
        eqs.push(EquationCheck {
            name: format!("c_{}", l + 1),
            predicted: rhs,
            actual: nxt[l + 2].clone(),
        });
    }

    eqs.push(EquationCheck {
        name: "u".into(),
        predicted: u_next,
        actual: nxt[nxt.len() - 1].clone(),
    });
    eqs
}
