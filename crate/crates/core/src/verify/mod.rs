//! End-to-end checks against generated triangles and the reference table.

mod counting;
mod fixture;
mod oracle;
mod tables;

pub use counting::{check_counting, verify_counting, CountingReport, SequenceCheck};
pub use fixture::{printed_row, printed_table, PrintedCell, FIXTURE_K_MAX};
pub use oracle::{
    check_recurrence_on, check_steps, power_sums, rows_for, verify_recurrence,
    verify_recurrence_with, Mismatch, RecurrenceCheck, StepCheck, StepFailure,
};
pub use tables::{
    has_fixture, minimal_and_printed, probe_conjecture, probe_k, reproduce_tables,
    ConjectureFinding, FixtureStatus, TableMismatch, TableReport, TableRow,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sums::{ReducedForm, SystemVariant};
use crate::system::{derive_recurrence, Recurrence};
use crate::triangle::{RowProfile, TriangleParams};

/// Default grid: `k = 2..=8`, `q ∈ {5, 6, 7, 9}`, `10^5` entries per row.
pub const DEFAULT_K_RANGE: (u32, u32) = (2, 8);
pub const DEFAULT_Q_LIST: [i64; 4] = [5, 6, 7, 9];
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridConfig {
    pub k_min: u32,
    pub k_max: u32,
    pub q_list: Vec<i64>,
    pub cap: usize,
    /// Source of the recurrence under test; system steps are always checked
    /// for the full system and additionally for a reduced one when selected.
    pub variant: SystemVariant,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            k_min: DEFAULT_K_RANGE.0,
            k_max: DEFAULT_K_RANGE.1,
            q_list: DEFAULT_Q_LIST.to_vec(),
            cap: DEFAULT_CAP,
            variant: SystemVariant::Full,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Depth {
    pub q: u32,
    pub depth: usize,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<GridConfig>,
    pub depths: Vec<Depth>,
    pub recurrences: Vec<RecurrenceCheck>,
    pub steps: Vec<StepCheck>,
    pub counting: Vec<CountingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<TableReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conjecture: Vec<ConjectureFinding>,
    pub all_exact: bool,
}

impl VerificationReport {
    /// Recomputes `all_exact` from the recorded outcomes.
    pub fn finish(mut self) -> Self {
        self.all_exact = self.recurrences.iter().all(|r| r.all_exact)
            && self.steps.iter().all(StepCheck::all_hold)
            && self.counting.iter().all(CountingReport::all_exact)
            && self.table.as_ref().is_none_or(TableReport::is_clean);
        self
    }

    /// Human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for d in &self.depths {
            out.push_str(&format!("q={}: {}\n", d.q, d.note));
        }
        for r in &self.recurrences {
            out.push_str(&format!(
                "recurrence k={} q={} order={} verified n={}..{} mismatches={}\n",
                r.k,
                r.q,
                r.order,
                r.first_verified.map_or("-".into(), |n| n.to_string()),
                r.last_verified.map_or("-".into(), |n| n.to_string()),
                r.mismatches.len()
            ));
        }
        for s in &self.steps {
            out.push_str(&format!(
                "steps {} k={} q={} steps={} failing={:?}\n",
                s.variant,
                s.k,
                s.q,
                s.steps,
                s.failing_equations()
            ));
        }
        for c in &self.counting {
            let bad: Vec<_> = c
                .sequences
                .iter()
                .filter(|s| !s.mismatches.is_empty())
                .map(|s| &s.name)
                .collect();
            out.push_str(&format!(
                "counting q={} depth={} failing={:?}\n",
                c.q, c.depth, bad
            ));
        }
        out.push_str(if self.all_exact {
            "all exact\n"
        } else {
            "MISMATCH\n"
        });
        out
    }
}

/// Runs recurrence, system-step and counting checks over a `(k, q)` grid.
///
/// Rows are generated once per `q`; cells run in parallel and the report is
/// ordered by `(k, q)` regardless of completion order.
pub fn verify_grid(config: &GridConfig) -> Result<VerificationReport> {
    if config.k_min > config.k_max {
        return Err(Error::InvalidArgument(format!(
            "empty k range {}..{}",
            config.k_min, config.k_max
        )));
    }
    let params = config
        .q_list
        .iter()
        .map(|&q| TriangleParams::new(q))
        .collect::<Result<Vec<_>>>()?;
    let recurrences: Vec<Recurrence> = (config.k_min..=config.k_max)
        .into_par_iter()
        .map(|k| {
            let variant = if k < 2 {
                SystemVariant::Full
            } else {
                config.variant
            };
            derive_recurrence(k, variant)
        })
        .collect::<Result<_>>()?;

    let per_q = params
        .par_iter()
        .map(|&p| -> Result<_> {
            let (rows, note) = rows_for(p, config.cap)?;
            let depth = Depth {
                q: p.q(),
                depth: rows.len() - 1,
                note,
            };
            let profiles: Vec<RowProfile> = rows.iter().map(RowProfile::from).collect();
            let counting = (config.k_min <= 1).then(|| check_counting(p, &profiles));
            let cells = recurrences
                .par_iter()
                .map(|rec| -> Result<_> {
                    let check = check_recurrence_on(rec, p.q(), &power_sums(&rows, rec.k));
                    let mut steps = Vec::new();
                    if rec.k >= 2 {
                        steps.push(check_steps(&rows, p, rec.k, SystemVariant::Full)?);
                        if let SystemVariant::Reduced(form) = config.variant {
                            steps.push(check_steps(&rows, p, rec.k, SystemVariant::Reduced(form))?);
                        }
                    }
                    Ok((check, steps))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((depth, counting, cells))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport {
        scope: Some(config.clone()),
        ..Default::default()
    };
    for (depth, counting, cells) in per_q {
        report.depths.push(depth);
        report.counting.extend(counting);
        for (check, steps) in cells {
            report.recurrences.push(check);
            report.steps.extend(steps);
        }
    }
    report.recurrences.sort_by_key(|r| (r.k, r.q));
    report
        .steps
        .sort_by_key(|s| (s.k, s.q, s.variant.to_string()));
    Ok(report.finish())
}

/// Step checks of the reduced system as transcribed, for reporting
/// which printed equations fail.
pub fn printed_reduced_discrepancies(k: u32, q: i64, cap: usize) -> Result<StepCheck> {
    let params = TriangleParams::new(q)?;
    let (rows, _) = rows_for(params, cap)?;
    check_steps(
        &rows,
        params,
        k,
        SystemVariant::Reduced(ReducedForm::AsPrinted),
    )
}
