//! Coefficient table reproduction and the order/degree probe.

use rayon::prelude::*;
use serde::Serialize;

use super::fixture::{printed_row, FIXTURE_K_MAX};
use crate::error::{Error, Result};
use crate::exactalg::QPoly;
use crate::sums::{ReducedForm, SystemVariant};
use crate::system::{derive_recurrence, derive_with_lift, recurrence_stripping, Recurrence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureStatus {
    Matches,
    Differs,
    /// No reference row for this `k`.
    Exploratory,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: u32,
    /// Minimal order.
    pub order: usize,
    #[serde(serialize_with = "crate::json::ser_poly_vec")]
    pub coefficients: Vec<QPoly>,
    /// Coefficients in printed form, keeping vanishing trailing terms.
    #[serde(serialize_with = "crate::json::ser_poly_vec")]
    pub printed_coefficients: Vec<QPoly>,
    pub status: FixtureStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub k: u32,
    pub j: usize,
    #[serde(serialize_with = "crate::json::ser_poly")]
    pub expected: QPoly,
    #[serde(serialize_with = "crate::json::ser_poly")]
    pub computed: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub k_max: u32,
    pub rows: Vec<TableRow>,
    pub diff: Vec<TableMismatch>,
}

impl TableReport {
    pub fn is_clean(&self) -> bool {
        self.diff.is_empty()
    }
}

/// Cell-by-cell comparison; the shorter row is padded with zeros.
fn diff_row(k: u32, printed: &[QPoly], computed: &[QPoly]) -> Vec<TableMismatch> {
    let len = printed.len().max(computed.len());
    let at = |v: &[QPoly], j: usize| v.get(j).cloned().unwrap_or_else(QPoly::zero);
    (0..len)
        .filter(|&j| at(printed, j) != at(computed, j))
        .map(|j| TableMismatch {
            k,
            j: j + 1,
            expected: at(printed, j),
            computed: at(computed, j),
        })
        .collect()
}

/// The minimal recurrence (full system) and the printed form (reduced
/// system, one factor `x` removed). They coincide for `k < 2`.
pub fn minimal_and_printed(k: u32) -> Result<(Recurrence, Recurrence, usize)> {
    let full = derive_recurrence(k, SystemVariant::Full)?;
    if k < 2 {
        return Ok((full.clone(), full, 3));
    }
    let (reduced, lifted) = derive_with_lift(k, SystemVariant::Reduced(ReducedForm::Folded))?;
    let mut printed = recurrence_stripping(&lifted, k, lifted.x_valuation().min(1))?;
    printed.variant = reduced.variant;
    if reduced.coefficients != full.coefficients {
        return Err(Error::InvalidArgument(format!(
            "k={k}: reduced and full systems disagree ({:?} vs {:?})",
            reduced.coefficients, full.coefficients
        )));
    }
    let dim = lifted.degree().unwrap_or(0).saturating_sub(1);
    Ok((full, printed, dim))
}

/// Recurrence coefficients for `k = 0..=k_max`, compared with the reference
/// rows where they exist.
pub fn reproduce_tables(k_max: u32) -> Result<TableReport> {
    let computed = (0..=k_max)
        .into_par_iter()
        .map(minimal_and_printed)
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    let mut diff = Vec::new();
    for (rec, printed, _) in computed {
        let status = match printed_row(rec.k) {
            Some(expected) => {
                let d = diff_row(rec.k, &expected, &printed.coefficients);
                let status = if d.is_empty() {
                    FixtureStatus::Matches
                } else {
                    FixtureStatus::Differs
                };
                diff.extend(d);
                status
            }
            None => FixtureStatus::Exploratory,
        };
        rows.push(TableRow {
            k: rec.k,
            order: rec.order,
            coefficients: rec.coefficients,
            printed_coefficients: printed.coefficients,
            status,
        });
    }
    Ok(TableReport { k_max, rows, diff })
}

/// Order and degree data for one `k`.
///
/// The minimal order comes from stripping every factor `x` from the lifted
/// characteristic polynomial of the full system. The printed order strips a
/// single `x` from the lifted polynomial of the reduced system, which keeps
/// any vanishing trailing coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureFinding {
    pub k: u32,
    pub conjectured_order: usize,
    pub minimal_order: usize,
    pub printed_order: usize,
    pub trailing_zeros: usize,
    pub max_q_degree: usize,
    #[serde(serialize_with = "crate::json::ser_poly_vec")]
    pub printed_coefficients: Vec<QPoly>,
    pub reduced_dimension: usize,
    /// The reduced and full systems give the same minimal recurrence.
    pub reduced_agrees: bool,
    pub fixture: FixtureStatus,
    pub printed_order_matches: bool,
    pub minimal_order_matches: bool,
    pub linear_in_q: bool,
    pub anomalies: Vec<String>,
}

pub fn probe_k(k: u32) -> Result<ConjectureFinding> {
    if k < 2 {
        return Err(Error::InvalidK { min: 2, got: k });
    }
    let full = derive_recurrence(k, SystemVariant::Full)?;
    let (reduced, lifted) = derive_with_lift(k, SystemVariant::Reduced(ReducedForm::Folded))?;
    let printed = recurrence_stripping(&lifted, k, lifted.x_valuation().min(1))?;
    let reduced_dimension = lifted.degree().unwrap_or(0).saturating_sub(1);

    let conjectured_order = k as usize / 2 + 3;
    let max_q_degree = full.max_q_degree();
    let fixture = match printed_row(k) {
        Some(row) if row == printed.coefficients => FixtureStatus::Matches,
        Some(_) => FixtureStatus::Differs,
        None => FixtureStatus::Exploratory,
    };
    let mut anomalies = Vec::new();
    let trailing_zeros = printed.order.saturating_sub(full.order);
    if trailing_zeros > 0 {
        anomalies.push(format!(
            "minimal order {} is below {conjectured_order}; printed form ends in {trailing_zeros} zero coefficient(s)",
            full.order
        ));
    }
    if max_q_degree > 1 {
        anomalies.push(format!("a coefficient has degree {max_q_degree} in q"));
    }
    let reduced_agrees = reduced.coefficients == full.coefficients;
    if !reduced_agrees {
        anomalies.push("reduced system gives a different minimal recurrence".into());
    }
    if fixture == FixtureStatus::Differs {
        anomalies.push("printed coefficients differ from the reference row".into());
    }
    Ok(ConjectureFinding {
        k,
        conjectured_order,
        minimal_order: full.order,
        printed_order: printed.order,
        trailing_zeros,
        max_q_degree,
        printed_coefficients: printed.coefficients,
        reduced_dimension,
        reduced_agrees,
        fixture,
        printed_order_matches: printed.order == conjectured_order,
        minimal_order_matches: full.order == conjectured_order,
        linear_in_q: max_q_degree <= 1,
        anomalies,
    })
}

/// Probes `k_min..=k_max`; rows above the reference range are exploratory.
pub fn probe_conjecture(k_min: u32, k_max: u32) -> Result<Vec<ConjectureFinding>> {
    if k_min < 2 {
        return Err(Error::InvalidK { min: 2, got: k_min });
    }
    (k_min..=k_max).into_par_iter().map(probe_k).collect()
}

/// Whether `k` has a reference row.
pub fn has_fixture(k: u32) -> bool {
    k <= FIXTURE_K_MAX
}
