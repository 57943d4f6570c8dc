//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! [`IntPoly`] is used both for polynomials in the mosaic parameter `q`
//! (aliased as [`QPoly`]) and for integer characteristic polynomials in `x`.
//! [`XQPoly`] is a polynomial in `x` whose coefficients are [`QPoly`] values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial over the integers, coefficients in ascending degree order.
///
/// The representation is canonical: no trailing zero coefficients, and the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// A polynomial in the mosaic parameter `q`.
pub type QPoly = IntPoly;

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `q` (or `x`, depending on interpretation).
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `a + b*var`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `var^d` (zero past the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant polynomial's value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    /// Multiplies by `var^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Formats with an explicit variable name, descending powers, e.g. `-62q+404`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if d == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match d {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl std::str::FromStr for IntPoly {
    type Err = crate::error::Error;

    /// Parses sums of terms like `-62q+404`, `q^2-3`, `-x+1` (any single-letter variable).
    fn from_str(text: &str) -> crate::error::Result<Self> {
        let bad =
            || crate::error::Error::InvalidArgument(format!("cannot parse polynomial {text:?}"));
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let var_pos = body.find(|c: char| c.is_ascii_alphabetic());
            let (num, deg) = match var_pos {
                None => (body, 0usize),
                Some(p) => {
                    let rest = &body[p + 1..];
                    let deg = match rest.strip_prefix('^') {
                        Some(d) => d.parse().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (body[..p].trim_end_matches('*'), deg)
                }
            };
            let mut c: BigInt = if num.is_empty() {
                if var_pos.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                num.parse().map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] += c;
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], sign: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if sign => x + y,
                Some(y) => x - y,
                None => x,
            }
        })
        .collect()
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Polynomial in `x` whose coefficients are polynomials in `q` (an element of Z\[q\]\[x\]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XQPoly {
    coeffs: Vec<QPoly>,
}

impl XQPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![QPoly::one()])
    }

    /// `x - 1`.
    pub fn x_minus_one() -> Self {
        Self::from_coeffs(vec![QPoly::constant(-1), QPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(IntPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from a nested table `coeffs[x_power][q_power]`.
    pub fn from_i64_table(table: &[&[i64]]) -> Self {
        Self::from_coeffs(table.iter().map(|c| QPoly::from_i64s(c)).collect())
    }

    /// Lifts an integer polynomial in `x` to constant-in-`q` coefficients.
    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(QPoly::constant).collect())
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> QPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Maximum `q`-degree over all coefficients.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(IntPoly::degree).max()
    }

    /// Substitutes `q = at`, giving an integer polynomial in `x`.
    pub fn eval_q(&self, at: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(at)).collect())
    }

    /// Number of leading factors of `x` (multiplicity of the root 0).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^count`; the low coefficients must be zero.
    pub fn strip_x(&self, count: usize) -> Self {
        debug_assert!(count <= self.x_valuation());
        Self::from_coeffs(self.coeffs[count..].to_vec())
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpow = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            let body = c.to_string();
            let single_term = c.coeffs().iter().filter(|a| !a.is_zero()).count() == 1;
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) if single_term => (true, rest.to_string()),
                _ => (false, body),
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if d == 0 {
                out.push_str(&body);
            } else if single_term && body == "1" {
                out.push_str(&xpow);
            } else if single_term {
                out.push_str(&body);
                out.push_str(&xpow);
            } else {
                out.push('(');
                out.push_str(&body);
                out.push(')');
                out.push_str(&xpow);
            }
        }
        out
    }
}

impl fmt::Display for XQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &XQPoly {
    type Output = XQPoly;
    fn add(self, rhs: &XQPoly) -> XQPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XQPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &XQPoly {
    type Output = XQPoly;
    fn sub(self, rhs: &XQPoly) -> XQPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XQPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &XQPoly {
    type Output = XQPoly;
    fn mul(self, rhs: &XQPoly) -> XQPoly {
        if self.is_zero() || rhs.is_zero() {
            return XQPoly::zero();
        }
        let mut out = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XQPoly::from_coeffs(out)
    }
}

impl Neg for &XQPoly {
    type Output = XQPoly;
    fn neg(self) -> XQPoly {
        XQPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned!(XQPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_initial_value_polynomial() {
        assert_eq!(QPoly::linear(4, 4).eval_i64(6), BigInt::from(28));
    }

    #[test]
    fn additive_inverse_is_canonical_zero() {
        let s = &QPoly::linear(-1, 1) + &QPoly::linear(1, -1);
        assert!(s.is_zero());
        assert!(s.coeffs().is_empty());
        assert_eq!(s.degree(), None);
    }

    #[test]
    fn schoolbook_product() {
        let p = &QPoly::linear(2, 1) * &QPoly::linear(-1, 1);
        assert_eq!(p, QPoly::from_i64s(&[-2, 1, 1]));
    }

    #[test]
    fn table_style_printing() {
        assert_eq!(QPoly::linear(404, -62).to_string(), "-62q+404");
        assert_eq!(QPoly::linear(1, -1).to_string(), "-q+1");
        assert_eq!(QPoly::linear(2, 1).to_string(), "q+2");
        assert_eq!(QPoly::constant(-2).to_string(), "-2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_i64s(&[-20, 6, 4]).to_string(), "4q^2+6q-20");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["-62q+404", "q+2", "-q-1", "4q^2+6q-20", "0", "-2", "9174"] {
            let p: QPoly = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert_eq!(
            "\u{2212}7q + 31".parse::<QPoly>().unwrap(),
            QPoly::linear(31, -7)
        );
        assert!("q+".parse::<QPoly>().is_err());
        assert!("".parse::<QPoly>().is_err());
    }

    #[test]
    fn xq_display() {
        let p = XQPoly::from_i64_table(&[&[], &[-2], &[6], &[-1, -1], &[1]]);
        assert_eq!(p.to_string(), "x^4+(-q-1)x^3+6x^2-2x");
    }

    #[test]
    fn strip_and_valuation() {
        let p = XQPoly::from_i64_table(&[&[], &[], &[0, 1], &[1]]);
        assert_eq!(p.x_valuation(), 2);
        assert_eq!(p.strip_x(2), XQPoly::from_i64_table(&[&[0, 1], &[1]]));
    }
}
