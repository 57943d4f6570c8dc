//! Exact Lagrange interpolation over the rationals, returning integer polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Interpolates the unique polynomial of degree `<= deg_bound` through the first
/// `deg_bound + 1` points. Any further points are checked against the result.
///
/// Fails if the interpolant has a non-integer coefficient, or if a surplus point
/// disagrees with it.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)], deg_bound: usize) -> Result<IntPoly> {
    let needed = deg_bound + 1;
    if points.len() < needed {
        return Err(Error::NotEnoughPoints {
            needed,
            got: points.len(),
        });
    }
    let (fit, extra) = points.split_at(needed);
    for (i, (a, _)) in fit.iter().enumerate() {
        if fit[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::NotEnoughPoints { needed, got: i });
        }
    }

    // Newton divided differences, then expand the Newton form.
    let xs: Vec<BigRational> = fit
        .iter()
        .map(|(a, _)| BigRational::from(a.clone()))
        .collect();
    let mut dd: Vec<BigRational> = fit
        .iter()
        .map(|(_, b)| BigRational::from(b.clone()))
        .collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); needed];
    for i in (0..needed).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); needed];
        for d in 0..needed {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < needed {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }

    let mut ints = Vec::with_capacity(needed);
    for c in coeffs {
        if !c.denom().is_one() {
            return Err(Error::NonIntegralInterpolation { bound: deg_bound });
        }
        ints.push(c.to_integer());
    }
    let poly = IntPoly::from_coeffs(ints);

    for (a, b) in extra {
        let got = poly.eval(a);
        if &got != b {
            return Err(Error::DegreeBound {
                at: i64::try_from(a).unwrap_or(i64::MAX),
                detail: format!("interpolant gives {got}, sample is {b}"),
            });
        }
    }
    Ok(poly)
}

/// Convenience wrapper for small integer samples.
pub fn interpolate_i64(points: &[(i64, i64)], deg_bound: usize) -> Result<IntPoly> {
    let pts: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|&(a, b)| (BigInt::from(a), BigInt::from(b)))
        .collect();
    lagrange_interpolate(&pts, deg_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_initial_value() {
        let p = interpolate_i64(&[(5, 24), (6, 28), (7, 32)], 1).unwrap();
        assert_eq!(p, IntPoly::linear(4, 4));
    }

    #[test]
    fn single_point_constant() {
        assert_eq!(interpolate_i64(&[(5, 7)], 0).unwrap(), IntPoly::constant(7));
    }

    #[test]
    fn quadratic_initial_value() {
        let f = |q: i64| 4 * q * q + 6 * q - 20;
        let pts: Vec<_> = (5..=8).map(|q| (q, f(q))).collect();
        let p = interpolate_i64(&pts, 2).unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[-20, 6, 4]));
    }

    #[test]
    fn non_integral_is_rejected() {
        // q(q-1)/2 sampled at 0, 1, 2 with bound 1 cannot fit; bound 2 has rational coefficients.
        let pts = [(0, 0), (1, 0), (2, 1)];
        assert!(matches!(
            interpolate_i64(&pts, 2),
            Err(Error::NonIntegralInterpolation { .. })
        ));
    }

    #[test]
    fn surplus_point_mismatch_is_degree_error() {
        let pts = [(0, 0), (1, 1), (2, 4)];
        assert!(matches!(
            interpolate_i64(&pts, 1),
            Err(Error::DegreeBound { at: 2, .. })
        ));
    }

    #[test]
    fn too_few_points() {
        assert!(interpolate_i64(&[(1, 1)], 1).is_err());
        assert!(interpolate_i64(&[(1, 1), (1, 2)], 1).is_err());
    }
}
