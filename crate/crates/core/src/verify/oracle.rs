//! Brute-force checks of recurrences and system steps on generated rows.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::sums::{check_system_step, power_sum, state_vector, SystemVariant};
use crate::system::{derive_recurrence, Recurrence, RecurrenceSource};
use crate::triangle::{generate_rows_until_cap, row_counts, Row, TriangleParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub predicted: BigInt,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub actual: BigInt,
}

/// Outcome of checking one recurrence against `(s^k)_n` at one `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCheck {
    pub k: u32,
    pub q: u32,
    pub source: RecurrenceSource,
    pub order: usize,
    /// Deepest row generated.
    pub depth: usize,
    pub first_verified: Option<usize>,
    pub last_verified: Option<usize>,
    pub mismatches: Vec<Mismatch>,
    pub all_exact: bool,
}

/// Checks `(s^k)_n = sum_j c_j(q) (s^k)_{n-j}` for every `n > order`, where
/// `sums[n]` is the power sum of row `n` (row 0 is never used).
pub fn check_recurrence_on(rec: &Recurrence, q: u32, sums: &[BigInt]) -> RecurrenceCheck {
    let c: Vec<BigInt> = rec
        .coefficients
        .iter()
        .map(|c| c.eval_i64(q as i64))
        .collect();
    let d = rec.order;
    let mut verified = Vec::new();
    let mut mismatches = Vec::new();
    for n in (d + 1)..sums.len() {
        let predicted: BigInt = (1..=d).map(|j| &c[j - 1] * &sums[n - j]).sum();
        if predicted == sums[n] {
            verified.push(n);
        } else {
            mismatches.push(Mismatch {
                n,
                predicted,
                actual: sums[n].clone(),
            });
        }
    }
    RecurrenceCheck {
        k: rec.k,
        q,
        source: rec.variant,
        order: d,
        depth: sums.len().saturating_sub(1),
        first_verified: verified.first().copied(),
        last_verified: verified.last().copied(),
        all_exact: mismatches.is_empty(),
        mismatches,
    }
}

/// `(s^k)_n` for every row.
pub fn power_sums(rows: &[Row], k: u32) -> Vec<BigInt> {
    rows.iter().map(|r| power_sum(r, k)).collect()
}

/// Checks a given recurrence on all rows of `HPT_{4,q}` with at most `cap` entries.
pub fn verify_recurrence_with(rec: &Recurrence, q: i64, cap: usize) -> Result<RecurrenceCheck> {
    let params = TriangleParams::new(q)?;
    let rows = generate_rows_until_cap(params, cap)?;
    Ok(check_recurrence_on(
        rec,
        params.q(),
        &power_sums(&rows, rec.k),
    ))
}

/// Checks the recurrence derived from the full system (or the counting
/// recurrence for `k < 2`).
pub fn verify_recurrence(k: u32, q: i64, cap: usize) -> Result<RecurrenceCheck> {
    TriangleParams::new(q)?;
    verify_recurrence_with(&derive_recurrence(k, SystemVariant::Full)?, q, cap)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepFailure {
    /// Source row of the step `n -> n+1`.
    pub n: usize,
    pub equation: String,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub predicted: BigInt,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub actual: BigInt,
}

/// Every equation of one system checked on every consecutive row pair `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepCheck {
    pub k: u32,
    pub q: u32,
    pub variant: SystemVariant,
    pub steps: usize,
    pub equations_per_step: usize,
    pub failures: Vec<StepFailure>,
}

impl StepCheck {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    /// Names of the equations that fail at least once.
    pub fn failing_equations(&self) -> Vec<String> {
        let mut names: Vec<String> = self.failures.iter().map(|f| f.equation.clone()).collect();
        names.dedup();
        names.sort();
        names.dedup();
        names
    }
}

pub fn check_steps(
    rows: &[Row],
    params: TriangleParams,
    k: u32,
    variant: SystemVariant,
) -> Result<StepCheck> {
    let vectors = rows
        .iter()
        .skip(1)
        .map(|r| state_vector(r, k))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut equations_per_step = 0;
    for (i, pair) in vectors.windows(2).enumerate() {
        let report = check_system_step(&pair[0], &pair[1], params, k, variant)?;
        equations_per_step = report.equations.len();
        failures.extend(report.failures().map(|e| StepFailure {
            n: i + 1,
            equation: e.name.clone(),
            predicted: e.predicted.clone(),
            actual: e.actual.clone(),
        }));
    }
    Ok(StepCheck {
        k,
        q: params.q(),
        variant,
        steps: vectors.len().saturating_sub(1),
        equations_per_step,
        failures,
    })
}

/// Rows up to the cap, with the truncation (if any) described.
pub fn rows_for(params: TriangleParams, cap: usize) -> Result<(Vec<Row>, String)> {
    let rows = generate_rows_until_cap(params, cap)?;
    let n = rows.len();
    let note = format!(
        "rows 0..={} generated; row {} would have {} entries (cap {cap})",
        n - 1,
        n,
        row_counts(params, n).s
    );
    Ok((rows, note))
}
