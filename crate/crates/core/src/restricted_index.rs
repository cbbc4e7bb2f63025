//! The restricted row set: indices `n` whose base `2n+1` is prime.
//!
//! Composite bases contribute nothing new, since every term of a composite
//! row already occurs in the row of its smallest prime factor. Rows are
//! rejected by walking the progressions themselves: `n_k` is dropped when
//! `2n_k + 1` is a term of an earlier row.

use serde::Serialize;

use crate::ap_model::{n_max, odd_base, ApSpec};
use crate::error::{Error, Result};

/// Default upper bound on the argument of [`wilson_is_prime`].
pub const WILSON_DEFAULT_CAP: u64 = 1_000_000;

/// Row indices `n <= n_max(limit)` with `2n+1` prime, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedIndexSet {
    limit: u64,
    indices: Vec<u64>,
}

impl RestrictedIndexSet {
    /// The `N` this set was built for.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    /// The prime bases `2n+1`, ascending.
    pub fn bases(&self) -> impl Iterator<Item = u64> + '_ {
        self.indices.iter().map(|&n| 2 * n + 1)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Builds the same set by testing each candidate with Wilson's theorem.
    /// Only usable while `2 n_max(limit) + 1` stays under `cap`.
    pub fn by_wilson(limit: u64, cap: u64) -> Result<Self> {
        let mut indices = Vec::new();
        for n in 1..=n_max(limit) {
            if wilson_is_prime_capped(2 * n + 1, cap)? {
                indices.push(n);
            }
        }
        Ok(RestrictedIndexSet { limit, indices })
    }
}

/// Restricted set for `limit`, found by striking out every row index that
/// is itself `(t - 1) / 2` for some progression term `t`.
///
/// Only odd values up to `2 n_max + 1` need to be classified, so only rows
/// starting at or below that value are walked.
pub fn sieve_restricted(limit: u64) -> RestrictedIndexSet {
    let top = n_max(limit);
    // rejected[k] is set when 2k+1 is a progression term
    let mut rejected = vec![false; top as usize + 1];
    let top_value = 2 * top + 1;
    let mut n = 1u64;
    while let Ok(ap) = ApSpec::new(n) {
        if ap.first_term > top_value {
            break;
        }
        if !rejected[n as usize] {
            let mut term = ap.first_term;
            while term <= top_value {
                rejected[((term - 1) / 2) as usize] = true;
                term += ap.step;
            }
        }
        n += 1;
    }
    let indices = (1..=top).filter(|&k| !rejected[k as usize]).collect();
    RestrictedIndexSet { limit, indices }
}

/// Wilson's criterion `(p-1)! == -1 (mod p)` with the default cap.
pub fn wilson_is_prime(p: u64) -> Result<bool> {
    wilson_is_prime_capped(p, WILSON_DEFAULT_CAP)
}

/// Wilson's criterion, refusing arguments above `cap` since the factorial
/// accumulation is linear in `p`.
pub fn wilson_is_prime_capped(p: u64, cap: u64) -> Result<bool> {
    if p < 2 {
        return Err(Error::Domain(format!(
            "wilson_is_prime requires p >= 2, got {p}"
        )));
    }
    if p > cap {
        return Err(Error::OutOfRange {
            what: "wilson argument",
            value: p,
            cap,
        });
    }
    let modulus = p as u128;
    let mut acc: u128 = 1;
    for k in 2..p as u128 {
        acc = acc * k % modulus;
        if acc == 0 {
            return Ok(false);
        }
    }
    Ok(acc == modulus - 1)
}

/// Whether odd `m >= 3` is a term of some row, i.e. is an odd composite.
pub fn is_ap_representable(m: u64) -> Result<bool> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "is_ap_representable requires an odd value >= 3, got {m}"
        )));
    }
    let mut n = 1u64;
    loop {
        let base = odd_base(n)?;
        match base.checked_mul(base) {
            Some(first) if first <= m => {
                if (m - first).is_multiple_of(2 * base) {
                    return Ok(true);
                }
            }
            _ => return Ok(false),
        }
        n += 1;
    }
}
