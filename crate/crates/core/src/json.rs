//! Exact JSON encoding of big integers: every integer is written as a JSON
//! number with all of its decimal digits.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde_json::{Number, Value};

use crate::exactalg::IntPoly;

pub fn big_to_value(v: &BigInt) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("decimal integer is valid JSON"),
    )
}

pub fn value_to_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Ascending coefficient array, e.g. `4q+4` becomes `[4, 4]`.
pub fn poly_to_value(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big_to_value).collect())
}

pub fn value_to_poly(v: &Value) -> Option<IntPoly> {
    let arr = v.as_array()?;
    let coeffs = arr.iter().map(value_to_big).collect::<Option<Vec<_>>>()?;
    Some(IntPoly::from_coeffs(coeffs))
}

pub fn ser_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_some(&big_to_value(v))
}

pub fn ser_big_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&big_to_value(x))?;
    }
    seq.end()
}

pub fn ser_poly<S: Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_some(&poly_to_value(p))
}

pub fn ser_poly_vec<S: Serializer>(v: &[IntPoly], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for p in v {
        seq.serialize_element(&poly_to_value(p))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_survive() {
        let big: BigInt = "-123456789012345678901234567890123456789".parse().unwrap();
        let text = serde_json::to_string(&big_to_value(&big)).unwrap();
        assert_eq!(text, "-123456789012345678901234567890123456789");
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value_to_big(&back), Some(big));
    }

    #[test]
    fn poly_arrays() {
        let p = IntPoly::linear(4, 4);
        assert_eq!(serde_json::to_string(&poly_to_value(&p)).unwrap(), "[4,4]");
        assert_eq!(value_to_poly(&poly_to_value(&p)), Some(p));
    }
}
