//! Recovering `M` from an orbit `g_{t+1} = M g_t` as `M = G* G^{-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) * BigRational::from(v[j].clone()))
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// The integer matrix, if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let v = self.get(i, j);
                        v.is_integer().then(|| v.to_integer())
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        IntMatrix::from_rows(rows).ok()
    }
}

/// Given `g_0, ..., g_nu` in `Z^nu` with `g_0..g_{nu-1}` independent, the unique
/// matrix with `g_{t+1} = M g_t` for `t < nu`.
pub fn matrix_from_orbit(orbit: &[Vec<BigInt>]) -> Result<RationalMatrix> {
    let nu = orbit
        .len()
        .checked_sub(1)
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidArgument("orbit needs at least two vectors".into()))?;
    for g in orbit {
        if g.len() != nu {
            return Err(Error::DimensionMismatch {
                expected: nu,
                got: g.len(),
            });
        }
    }

    // Solve G^T X = (G*)^T; then M = X^T.
    // Row t of G^T is g_t; row t of (G*)^T is g_{t+1}.
    let width = 2 * nu;
    let mut aug: Vec<Vec<BigRational>> = (0..nu)
        .map(|t| {
            orbit[t]
                .iter()
                .chain(&orbit[t + 1])
                .map(|v| BigRational::from(v.clone()))
                .collect()
        })
        .collect();

    for col in 0..nu {
        let pivot = (col..nu)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularOrbit)?;
        aug.swap(col, pivot);
        let inv = BigRational::one() / &aug[col][col];
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..nu {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            for c in col..width {
                let delta = &f * &aug[col][c];
                aug[r][c] -= delta;
            }
        }
    }

    // X[j][i] = aug[j][nu + i]; M[i][j] = X[j][i]
    let mut data = Vec::with_capacity(nu * nu);
    for i in 0..nu {
        for row in aug.iter() {
            data.push(row[nu + i].clone());
        }
    }
    Ok(RationalMatrix { n: nu, data })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn one_dimensional() {
        let m = matrix_from_orbit(&[v(&[2]), v(&[6])]).unwrap();
        assert_eq!(m.get(0, 0), &BigRational::from(BigInt::from(3)));
    }

    #[test]
    fn diagonal_orbit() {
        let d = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]).unwrap();
        let g0 = v(&[1, 1]);
        let g1 = d.mul_vec(&g0);
        let g2 = d.mul_vec(&g1);
        let m = matrix_from_orbit(&[g0.clone(), g1.clone(), g2.clone()]).unwrap();
        assert_eq!(m.to_int().unwrap(), d);
    }

    #[test]
    fn singular_orbit() {
        let r = matrix_from_orbit(&[v(&[1, 2]), v(&[2, 4]), v(&[4, 8])]);
        assert!(matches!(r, Err(Error::SingularOrbit)));
    }
}
