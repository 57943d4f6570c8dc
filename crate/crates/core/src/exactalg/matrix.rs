//! Dense square matrices over Z and Z\[q\], with exact characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::interp::lagrange_interpolate;
use super::poly::{IntPoly, QPoly, XQPoly};
use crate::error::{Error, Result};

/// First sample point used when evaluating `q`. Every sample is a valid mosaic parameter.
pub const Q_SAMPLE_START: i64 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// `det(xI - self)` via the Faddeev–LeVerrier iteration.
    ///
    /// All divisions are by `1..=n` and are exact over the integers.
    pub fn charpoly(&self) -> IntPoly {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = IntMatrix::zeros(n);
        for step in 1..=n {
            // aux <- A * aux + c_{n-step+1} I
            let mut next = self.mul(&aux);
            for i in 0..n {
                next.data[i * n + i] += &coeffs[n - step + 1];
            }
            aux = next;
            let t = self.mul(&aux).trace();
            let (quot, rem) = t.div_rem(&BigInt::from(step));
            debug_assert!(rem.is_zero(), "Faddeev–LeVerrier division must be exact");
            coeffs[n - step] = -quot;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix whose entries are polynomials in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    data: Vec<QPoly>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Self {
            n,
            data: vec![QPoly::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<QPoly>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QPoly) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[QPoly] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[QPoly]> {
        self.data.chunks(self.n)
    }

    pub fn eval(&self, q: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|p| p.eval(q)).collect(),
        }
    }

    pub fn max_entry_degree(&self) -> usize {
        self.data
            .iter()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Rows containing at least one non-constant entry.
    pub fn q_dependent_rows(&self) -> usize {
        self.rows()
            .filter(|r| r.iter().any(|p| p.degree().unwrap_or(0) > 0))
            .count()
    }

    /// Upper bound on the `q`-degree of `det(xI - self)`.
    ///
    /// The determinant is multilinear in rows, and only the q-dependent rows
    /// contribute powers of `q`.
    pub fn det_q_degree_bound(&self) -> usize {
        self.rows()
            .map(|r| r.iter().filter_map(IntPoly::degree).max().unwrap_or(0))
            .sum()
    }

    /// `det(xI - self)` as an exact element of Z\[q\]\[x\].
    ///
    /// Evaluates `q` at `bound + 1` integers starting at [`Q_SAMPLE_START`],
    /// computes each integer characteristic polynomial, interpolates each
    /// `x`-coefficient in `q`, and checks the result at one further point.
    pub fn charpoly(&self) -> Result<XQPoly> {
        let bound = self.det_q_degree_bound();
        let samples: Vec<(BigInt, IntPoly)> = (0..=bound as i64 + 1)
            .into_par_iter()
            .map(|i| {
                let q = BigInt::from(Q_SAMPLE_START + i);
                let cp = self.eval(&q).charpoly();
                (q, cp)
            })
            .collect();
        interpolate_x_coefficients(&samples, self.n, bound)
    }
}

/// Rebuilds an [`XQPoly`] from integer polynomials sampled at distinct `q`.
///
/// `samples` must contain `q_bound + 2` entries: all but the last are used to
/// interpolate, the last verifies.
pub(crate) fn interpolate_x_coefficients(
    samples: &[(BigInt, IntPoly)],
    x_degree: usize,
    q_bound: usize,
) -> Result<XQPoly> {
    let mut coeffs = Vec::with_capacity(x_degree + 1);
    for d in 0..=x_degree {
        let pts: Vec<(BigInt, BigInt)> = samples
            .iter()
            .map(|(q, p)| (q.clone(), p.coeff(d)))
            .collect();
        let c = lagrange_interpolate(&pts, q_bound).map_err(|e| match e {
            Error::DegreeBound { at, detail } => Error::DegreeBound {
                at,
                detail: format!("coefficient of x^{d}: {detail}"),
            },
            other => other,
        })?;
        coeffs.push(c);
    }
    Ok(XQPoly::from_coeffs(coeffs))
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let row: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let m = IntMatrix::from_i64_rows(&[&[5]]).unwrap();
        assert_eq!(m.charpoly(), IntPoly::from_i64s(&[-5, 1]));
    }

    #[test]
    fn identity_two() {
        assert_eq!(
            IntMatrix::identity(2).charpoly(),
            IntPoly::from_i64s(&[1, -2, 1])
        );
    }

    #[test]
    fn triangular_charpoly_is_product_of_diagonal_factors() {
        let m = IntMatrix::from_i64_rows(&[&[2, 7, -1], &[0, -3, 4], &[0, 0, 5]]).unwrap();
        let expected = [2, -3, 5]
            .iter()
            .fold(IntPoly::one(), |acc, &d| acc * IntPoly::from_i64s(&[-d, 1]));
        assert_eq!(m.charpoly(), expected);
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        let m = IntMatrix::from_i64_rows(&[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]]).unwrap();
        // 0*(0-1) - 2*(0-1) + 1*(3-0)
        assert_eq!(m.det(), BigInt::from(5));
        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.det(), BigInt::zero());
    }

    #[test]
    fn charpoly_constant_term_is_signed_determinant() {
        let m = IntMatrix::from_i64_rows(&[
            &[4, 1, 0, 2],
            &[1, -3, 2, 0],
            &[0, 5, 1, 1],
            &[7, 0, 0, -2],
        ])
        .unwrap();
        let cp = m.charpoly();
        assert_eq!(cp.coeff(0), m.det()); // (-1)^4 det
        assert_eq!(cp.coeff(3), -m.trace());
    }

    #[test]
    fn diagonal_poly_matrix() {
        let m = PolyMatrix::from_rows(vec![
            vec![QPoly::var(), QPoly::zero()],
            vec![QPoly::zero(), QPoly::one()],
        ])
        .unwrap();
        // (x - q)(x - 1) = x^2 - (q+1)x + q
        let expected = XQPoly::from_i64_table(&[&[0, 1], &[-1, -1], &[1]]);
        assert_eq!(m.charpoly().unwrap(), expected);
    }
}
