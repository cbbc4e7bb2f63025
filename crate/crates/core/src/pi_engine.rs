//! Assembly of `pi(N) = N - (even composites) - (odd composites) - 1`.

use serde::Serialize;

use crate::ap_model::ap_count;
use crate::error::{Error, Result};
use crate::overlap::lambda_c;
use crate::restricted_index::{sieve_restricted, RestrictedIndexSet};

/// Every intermediate of one evaluation.
///
/// Serializes with the keys `n`, `pi`, `even_composites`,
/// `odd_composite_raw_sum`, `lambda_c`, `odd_composites`,
/// `restricted_indices`, in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiBreakdown {
    pub n: u64,
    pub pi: u64,
    pub even_composites: u64,
    #[serde(rename = "odd_composite_raw_sum")]
    pub raw_odd_sum: u64,
    pub lambda_c: u64,
    pub odd_composites: u64,
    pub restricted_indices: Vec<u64>,
}

/// Even composites `<= limit`: `limit/2 - 1`, and none below 4.
pub fn even_composite_count(limit: u64) -> u64 {
    (limit / 2).saturating_sub(1)
}

/// Sum of the restricted row counts, before removing duplicates.
pub fn raw_odd_sum(limit: u64, restricted: &RestrictedIndexSet) -> u64 {
    restricted
        .indices()
        .iter()
        .map(|&n| ap_count(n, limit))
        .sum()
}

pub fn odd_composite_count(limit: u64) -> u64 {
    let restricted = sieve_restricted(limit);
    raw_odd_sum(limit, &restricted) - lambda_c(limit, &restricted)
}

/// Number of primes `<= limit`. Returns 0 for 0 and 1.
pub fn prime_pi(limit: u64) -> u64 {
    if limit < 2 {
        return 0;
    }
    limit - even_composite_count(limit) - odd_composite_count(limit) - 1
}

/// Full trace of `prime_pi(limit)`; requires `limit >= 2`.
pub fn breakdown(limit: u64) -> Result<PiBreakdown> {
    if limit < 2 {
        return Err(Error::Domain(format!(
            "breakdown requires N >= 2, got {limit}"
        )));
    }
    let restricted = sieve_restricted(limit);
    let even_composites = even_composite_count(limit);
    let raw = raw_odd_sum(limit, &restricted);
    let lambda = lambda_c(limit, &restricted);
    let odd_composites = raw - lambda;
    Ok(PiBreakdown {
        n: limit,
        pi: limit - even_composites - odd_composites - 1,
        even_composites,
        raw_odd_sum: raw,
        lambda_c: lambda,
        odd_composites,
        restricted_indices: restricted.indices().to_vec(),
    })
}
