//! Initial values `(s^k)_1, ..., (s^k)_d`, numeric and as polynomials in `q`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{lagrange_interpolate, QPoly, Q_SAMPLE_START};
use crate::triangle::{row_counts, stream_profiles, RowProfile, TriangleParams};

/// Largest row that is streamed to obtain initial values.
pub const STREAM_ENTRY_CAP: u64 = 1_000_000_000;

type ProfileCache = Mutex<HashMap<u32, Arc<Vec<RowProfile>>>>;

fn cache() -> &'static ProfileCache {
    static CACHE: OnceLock<ProfileCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Profiles of rows `0..=d`, reusing earlier (possibly deeper) streams.
fn profiles(params: TriangleParams, d: usize) -> Result<Arc<Vec<RowProfile>>> {
    if let Some(p) = cache().lock().unwrap().get(&params.q()) {
        if p.len() > d {
            return Ok(p.clone());
        }
    }
    let len = row_counts(params, d).s;
    if len.to_u64().is_none_or(|l| l > STREAM_ENTRY_CAP) {
        return Err(Error::Truncated {
            n: d,
            len: len.to_string(),
            cap: STREAM_ENTRY_CAP as usize,
        });
    }
    let fresh = Arc::new(stream_profiles(params, d));
    let mut guard = cache().lock().unwrap();
    let slot = guard.entry(params.q()).or_insert_with(|| fresh.clone());
    if slot.len() < fresh.len() {
        *slot = fresh.clone();
    }
    Ok(fresh)
}

/// `[(s^k)_1, ..., (s^k)_d]` at a fixed `q`, by enumerating rows `1..=d`.
pub fn initial_values_numeric(k: u32, q: i64, d: usize) -> Result<Vec<BigInt>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "need at least one initial value".into(),
        ));
    }
    let params = TriangleParams::new(q)?;
    let rows = profiles(params, d)?;
    Ok(rows[1..=d].iter().map(|r| r.power_sum(k, None)).collect())
}

/// `(s^k)_n` for `n = 1..=d` as exact polynomials in `q`.
///
/// Row n is assumed to have `q`-degree at most `max(0, n-2)`. Each value is
/// interpolated from samples `q = 5, 6, ...` and checked at one extra point;
/// if the check fails the bound is raised, up to `n`.
pub fn initial_values_symbolic(k: u32, d: usize) -> Result<Vec<QPoly>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "need at least one initial value".into(),
        ));
    }
    let sample = |i: usize| initial_values_numeric(k, Q_SAMPLE_START + i as i64, d);
    // usual case: bound d-2 plus one verification point
    let mut sampled: Vec<Vec<BigInt>> = (0..d.max(2))
        .into_par_iter()
        .map(sample)
        .collect::<Result<_>>()?;

    (1..=d)
        .map(|n| {
            let mut bound = n.saturating_sub(2);
            loop {
                while sampled.len() < bound + 2 {
                    sampled.push(sample(sampled.len())?);
                }
                let pts: Vec<(BigInt, BigInt)> = (0..bound + 2)
                    .map(|i| {
                        (
                            BigInt::from(Q_SAMPLE_START + i as i64),
                            sampled[i][n - 1].clone(),
                        )
                    })
                    .collect();
                match lagrange_interpolate(&pts, bound) {
                    Ok(p) => return Ok(p),
                    Err(e) if bound >= n => return Err(e),
                    Err(_) => bound += 1,
                }
            }
        })
        .collect()
}
