//! From characteristic polynomials to scalar recurrences for `(s^k)_n`.

use serde::Serialize;

use super::builder::build_system;
use super::initial::initial_values_symbolic;
use crate::error::{Error, Result};
use crate::exactalg::{QPoly, XQPoly};
use crate::sums::SystemVariant;

/// `(s^k)_n = sum_{j=1}^{d} c_j(q) (s^k)_{n-j}`.
///
/// The coefficients come from a monic polynomial
/// `x^d - c_1 x^{d-1} - ... - c_d`, obtained by dividing the maximal power of
/// `x` out of the lifted characteristic polynomial, so `c_d` is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recurrence {
    pub k: u32,
    pub variant: RecurrenceSource,
    pub order: usize,
    #[serde(serialize_with = "crate::json::ser_poly_vec")]
    pub coefficients: Vec<QPoly>,
    pub x_strip_count: usize,
    /// `(s^k)_1, ..., (s^k)_d` as polynomials in `q`.
    #[serde(serialize_with = "crate::json::ser_poly_vec")]
    pub initial_values: Vec<QPoly>,
}

/// Where a recurrence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceSource {
    /// Counting recurrences for `k = 0, 1`.
    Counting,
    Full,
    Reduced,
}

impl Recurrence {
    /// Maximum `q`-degree over all coefficients.
    pub fn max_q_degree(&self) -> usize {
        self.coefficients
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// The monic polynomial `x^d - c_1 x^{d-1} - ... - c_d`.
    pub fn polynomial(&self) -> XQPoly {
        let d = self.order;
        let mut coeffs = vec![QPoly::zero(); d + 1];
        coeffs[d] = QPoly::one();
        for (j, c) in self.coefficients.iter().enumerate() {
            coeffs[d - 1 - j] = -c;
        }
        XQPoly::from_coeffs(coeffs)
    }

    /// Coefficients padded with zeros to `len` (for comparison with reference rows
    /// that list trailing zero coefficients).
    pub fn padded_coefficients(&self, len: usize) -> Vec<QPoly> {
        let mut v = self.coefficients.clone();
        if v.len() < len {
            v.resize(len, QPoly::zero());
        }
        v
    }
}

/// `(x - 1) p(x)`: absorbs the constant term of an affine recursion.
pub fn lift_inhomogeneous(p: &XQPoly) -> XQPoly {
    &XQPoly::x_minus_one() * p
}

/// Strips `x` maximally, normalises the sign of the leading coefficient and
/// reads off `c_j` as negated coefficients.
///
/// Initial values are left empty; see [`recurrence_for_k`].
pub fn recurrence_from_polynomial(p: &XQPoly, k: u32) -> Result<Recurrence> {
    recurrence_stripping(p, k, p.x_valuation())
}

/// Like [`recurrence_from_polynomial`] but divides out only `x^strip`, so
/// trailing coefficients may vanish.
pub fn recurrence_stripping(p: &XQPoly, k: u32, strip: usize) -> Result<Recurrence> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if strip > p.x_valuation() {
        return Err(Error::InvalidArgument(format!(
            "x^{strip} does not divide the polynomial"
        )));
    }
    let mut s = p.strip_x(strip);
    let lead = s.coeff(s.degree().unwrap_or(0));
    match lead.as_constant() {
        Some(c) if c == 1.into() => {}
        Some(c) if c == (-1).into() => s = -&s,
        _ => return Err(Error::NotMonic(lead.to_string())),
    }
    let d = s.degree().unwrap_or(0);
    let coefficients = (1..=d).map(|j| -&s.coeff(d - j)).collect();
    Ok(Recurrence {
        k,
        variant: RecurrenceSource::Full,
        order: d,
        coefficients,
        x_strip_count: strip,
        initial_values: Vec::new(),
    })
}

/// Closed recurrences for `k = 0` (row lengths) and `k = 1` (row sums).
fn counting_recurrence(k: u32) -> Recurrence {
    let (coefficients, initial_values) = if k == 0 {
        (
            vec![
                QPoly::linear(-1, 1),
                QPoly::linear(1, -1),
                QPoly::constant(1),
            ],
            vec![QPoly::constant(2), QPoly::constant(3), QPoly::var()],
        )
    } else {
        (
            vec![QPoly::var(), QPoly::linear(-1, -1), QPoly::constant(2)],
            vec![QPoly::constant(2), QPoly::constant(4), QPoly::linear(0, 2)],
        )
    };
    Recurrence {
        k,
        variant: RecurrenceSource::Counting,
        order: 3,
        coefficients,
        x_strip_count: 0,
        initial_values,
    }
}

/// Coefficients only: characteristic polynomial of the chosen system, lifted
/// and stripped. `k = 0, 1` use the counting recurrences.
pub fn derive_recurrence(k: u32, variant: SystemVariant) -> Result<Recurrence> {
    Ok(derive_with_lift(k, variant)?.0)
}

/// Like [`derive_recurrence`], also returning the lifted polynomial `(x-1)k(x)`.
pub fn derive_with_lift(k: u32, variant: SystemVariant) -> Result<(Recurrence, XQPoly)> {
    if k < 2 {
        let rec = counting_recurrence(k);
        let lifted = rec.polynomial();
        return Ok((rec, lifted));
    }
    let system = build_system(k, variant)?;
    let lifted = lift_inhomogeneous(&system.matrix.charpoly()?);
    let mut rec = recurrence_from_polynomial(&lifted, k)?;
    rec.variant = match variant {
        SystemVariant::Full => RecurrenceSource::Full,
        SystemVariant::Reduced(_) => RecurrenceSource::Reduced,
    };
    Ok((rec, lifted))
}

/// The recurrence for `(s^k)_n` derived from the chosen system, with symbolic
/// initial values attached.
pub fn recurrence_for_k_with(k: u32, variant: SystemVariant) -> Result<Recurrence> {
    let mut rec = derive_recurrence(k, variant)?;
    if k >= 2 {
        rec.initial_values = initial_values_symbolic(k, rec.order)?;
    }
    Ok(rec)
}

/// The recurrence from the full system.
pub fn recurrence_for_k(k: u32) -> Result<Recurrence> {
    recurrence_for_k_with(k, SystemVariant::Full)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_k2() {
        let k1 = XQPoly::from_i64_table(&[&[], &[-2], &[6], &[-1, -1], &[1]]);
        let lifted = XQPoly::from_i64_table(&[&[], &[2], &[-8], &[7, 1], &[-2, -1], &[1]]);
        assert_eq!(lift_inhomogeneous(&k1), lifted);
    }

    #[test]
    fn lift_trivial() {
        let xm1 = XQPoly::x_minus_one();
        assert_eq!(lift_inhomogeneous(&xm1), &xm1 * &xm1);
        assert_eq!(lift_inhomogeneous(&XQPoly::one()), xm1);
    }

    #[test]
    fn extract_k2() {
        let lifted = XQPoly::from_i64_table(&[&[], &[2], &[-8], &[7, 1], &[-2, -1], &[1]]);
        let r = recurrence_from_polynomial(&lifted, 2).unwrap();
        assert_eq!(r.order, 4);
        assert_eq!(r.x_strip_count, 1);
        assert_eq!(
            r.coefficients,
            vec![
                QPoly::linear(2, 1),
                QPoly::linear(-7, -1),
                QPoly::constant(8),
                QPoly::constant(-2)
            ]
        );
        assert_eq!(r.polynomial(), lifted.strip_x(1));
    }

    #[test]
    fn geometric_after_stripping() {
        // x^3 - q x^2
        let p = XQPoly::from_i64_table(&[&[], &[], &[0, -1], &[1]]);
        let r = recurrence_from_polynomial(&p, 1).unwrap();
        assert_eq!((r.order, r.x_strip_count), (1, 2));
        assert_eq!(r.coefficients, vec![QPoly::var()]);
    }

    #[test]
    fn negative_leading_is_normalised() {
        let p = XQPoly::from_i64_table(&[&[3], &[-1]]);
        let r = recurrence_from_polynomial(&p, 0).unwrap();
        assert_eq!(r.coefficients, vec![QPoly::constant(3)]);
    }

    #[test]
    fn rejects_zero_and_non_monic() {
        assert!(matches!(
            recurrence_from_polynomial(&XQPoly::zero(), 2),
            Err(Error::ZeroPolynomial)
        ));
        let p = XQPoly::from_i64_table(&[&[1], &[0, 1]]);
        assert!(matches!(
            recurrence_from_polynomial(&p, 2),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn counting_cases() {
        let r0 = recurrence_for_k(0).unwrap();
        assert_eq!(
            r0.coefficients,
            vec![
                QPoly::linear(-1, 1),
                QPoly::linear(1, -1),
                QPoly::constant(1)
            ]
        );
        let r1 = recurrence_for_k(1).unwrap();
        assert_eq!(
            r1.coefficients,
            vec![QPoly::var(), QPoly::linear(-1, -1), QPoly::constant(2)]
        );
    }
}
