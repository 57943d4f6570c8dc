//! Row lengths and row sums against their ternary recurrences.

use num_bigint::BigInt;
use serde::Serialize;

use super::oracle::Mismatch;
use crate::error::Result;
use crate::triangle::{row_counts, stream_profiles, RowProfile, Tag, TriangleParams};

/// One sequence `x_1, ..., x_depth` checked against its initial values and recurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub name: String,
    #[serde(serialize_with = "crate::json::ser_big_vec")]
    pub values: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::ser_big_vec")]
    pub expected_initial: Vec<BigInt>,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub q: u32,
    pub depth: usize,
    pub sequences: Vec<SequenceCheck>,
}

impl CountingReport {
    pub fn all_exact(&self) -> bool {
        self.sequences.iter().all(|s| s.mismatches.is_empty())
    }

    pub fn sequence(&self, name: &str) -> Option<&SequenceCheck> {
        self.sequences.iter().find(|s| s.name == name)
    }
}

fn check_sequence(
    name: &str,
    values: Vec<BigInt>,
    initial: [BigInt; 3],
    c: [BigInt; 3],
) -> SequenceCheck {
    let mut mismatches = Vec::new();
    for (i, want) in initial.iter().enumerate() {
        if values.get(i).is_some_and(|v| v != want) {
            mismatches.push(Mismatch {
                n: i + 1,
                predicted: want.clone(),
                actual: values[i].clone(),
            });
        }
    }
    for i in 3..values.len() {
        let predicted = &c[0] * &values[i - 1] + &c[1] * &values[i - 2] + &c[2] * &values[i - 3];
        if predicted != values[i] {
            mismatches.push(Mismatch {
                n: i + 1,
                predicted,
                actual: values[i].clone(),
            });
        }
    }
    SequenceCheck {
        name: name.to_string(),
        values,
        expected_initial: initial.to_vec(),
        mismatches,
    }
}

/// Checks `s_n, a_n, b_n` (vertex counts) and `â_n, b̂_n, ŝ_n` (value sums by type)
/// on the given row profiles, which must start at row 0.
pub fn check_counting(params: TriangleParams, profiles: &[RowProfile]) -> CountingReport {
    let q = BigInt::from(params.q());
    let b = |v: i64| BigInt::from(v);
    let rows = &profiles[1.min(profiles.len())..];
    let column = |f: &dyn Fn(&RowProfile) -> BigInt| rows.iter().map(f).collect::<Vec<_>>();

    let counting: [BigInt; 3] = [&q - 1u32, -(&q - 1u32), b(1)];
    let sums: [BigInt; 3] = [q.clone(), -(&q + 1u32), b(2)];
    let mut sequences = vec![
        check_sequence(
            "s",
            column(&|p| p.len().into()),
            [b(2), b(3), q.clone()],
            counting.clone(),
        ),
        check_sequence(
            "a_hat",
            column(&|p| p.power_sum(1, Some(Tag::A))),
            [b(0), b(2), b(6)],
            sums.clone(),
        ),
        check_sequence(
            "b_hat",
            column(&|p| p.power_sum(1, Some(Tag::B))),
            [b(2), b(2), 2 * &q - 6],
            sums.clone(),
        ),
        check_sequence(
            "s_hat",
            column(&|p| p.power_sum(1, None)),
            [b(2), b(4), 2 * &q],
            sums,
        ),
    ];

    // closed-form counts versus the enumerated rows
    for (name, tag) in [("a", Some(Tag::A)), ("b", Some(Tag::B)), ("s_closed", None)] {
        let mismatches = rows
            .iter()
            .filter_map(|p| {
                let rc = row_counts(params, p.index);
                let predicted = BigInt::from(match tag {
                    Some(Tag::A) => rc.a,
                    Some(Tag::B) => rc.b,
                    None => rc.s,
                });
                let actual = BigInt::from(tag.map_or(p.len(), |t| p.count(t)));
                (predicted != actual).then_some(Mismatch {
                    n: p.index,
                    predicted,
                    actual,
                })
            })
            .collect();
        sequences.push(SequenceCheck {
            name: name.to_string(),
            values: rows
                .iter()
                .map(|p| BigInt::from(tag.map_or(p.len(), |t| p.count(t))))
                .collect(),
            expected_initial: Vec::new(),
            mismatches,
        });
    }

    CountingReport {
        q: params.q(),
        depth: rows.len(),
        sequences,
    }
}

/// Streams rows `1..=depth` of `HPT_{4,q}` and checks all counting recurrences.
pub fn verify_counting(q: i64, depth: usize) -> Result<CountingReport> {
    let params = TriangleParams::new(q)?;
    Ok(check_counting(params, &stream_profiles(params, depth)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q6_depth8() {
        let r = verify_counting(6, 8).unwrap();
        assert!(r.all_exact(), "{r:?}");
        assert_eq!(r.sequence("a_hat").unwrap().values[..3], [b(0), b(2), b(6)]);
        assert_eq!(r.sequence("s").unwrap().values[3], b(17));
    }

    #[test]
    fn b_hat_at_q7() {
        let r = verify_counting(7, 5).unwrap();
        assert_eq!(r.sequence("b_hat").unwrap().values[2], b(8));
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }
}
