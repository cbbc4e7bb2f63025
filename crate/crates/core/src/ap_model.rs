//! Odd-composite arithmetic progressions.
//!
//! Row `n` of the odd multiplication table starts at `(2n+1)^2` and advances
//! by `2(2n+1)`. Its `r`-th term is
//!
//! ```text
//! t(n, r) = (2n+1)^2 + 2(r-1)(2n+1) = (2n+r)^2 - (r-1)^2
//! ```
//!
//! so every row lists the odd multiples of `2n+1` from its square upward.

use serde::Serialize;

use crate::error::{Error, Result};

/// One row of the odd multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ApSpec {
    pub n: u64,
    pub first_term: u64,
    pub step: u64,
}

impl ApSpec {
    /// Row `n >= 1`. Fails if `(2n+1)^2` does not fit in a `u64`.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("progression index must be >= 1".into()));
        }
        let base = odd_base(n)?;
        let first_term = base
            .checked_mul(base)
            .ok_or(Error::Overflow("ApSpec::new"))?;
        let step = base.checked_mul(2).ok_or(Error::Overflow("ApSpec::new"))?;
        Ok(ApSpec {
            n,
            first_term,
            step,
        })
    }

    /// The odd factor `2n+1` shared by every term.
    pub fn base(&self) -> u64 {
        self.step / 2
    }

    pub fn term(&self, r: u64) -> Result<u64> {
        ap_term(self.n, r)
    }

    /// Number of terms not exceeding `limit`.
    pub fn count_upto(&self, limit: u64) -> u64 {
        if self.first_term > limit {
            0
        } else {
            (limit - self.first_term) / self.step + 1
        }
    }
}

/// `2n+1`, checked.
pub(crate) fn odd_base(n: u64) -> Result<u64> {
    n.checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("2n+1"))
}

/// Exact `floor(sqrt(value))`.
///
/// Newton iteration on integers, started from above so that the sequence
/// decreases monotonically to the root.
pub fn isqrt(value: u64) -> u64 {
    if value < 2 {
        return value;
    }
    let shift = (64 - value.leading_zeros()).div_ceil(2);
    let mut x = 1u64 << shift;
    loop {
        let y = (x + value / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `r`-th term (1-based) of progression `n`.
pub fn ap_term(n: u64, r: u64) -> Result<u64> {
    if n == 0 || r == 0 {
        return Err(Error::Domain(format!(
            "ap_term requires n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    let base = odd_base(n)?;
    let overflow = Error::Overflow("ap_term");
    let square = base.checked_mul(base).ok_or_else(|| overflow.clone())?;
    let offset = (r - 1)
        .checked_mul(2)
        .and_then(|v| v.checked_mul(base))
        .ok_or_else(|| overflow.clone())?;
    square.checked_add(offset).ok_or(overflow)
}

/// Largest row index whose first term `(2n+1)^2` is `<= limit`.
pub fn n_max(limit: u64) -> u64 {
    isqrt(limit).saturating_sub(1) / 2
}

/// Number of terms of progression `n` that are `<= limit`; 0 once the row
/// starts above the limit.
pub fn ap_count(n: u64, limit: u64) -> u64 {
    // Rows large enough to overflow their first term start above any u64.
    ApSpec::new(n).map_or(0, |ap| ap.count_upto(limit))
}
