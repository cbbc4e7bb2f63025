//! Intersections of restricted progressions and the overlap correction.
//!
//! For prime bases `p_1 < ... < p_k` the common terms of the rows are the
//! odd multiples of `P = p_1 ... p_k` that are at least `p_k^2`. The first
//! one is `P` times the smallest admissible odd multiplier, gated by a unit
//! step of an exact rational:
//!
//! ```text
//! k = 2:  t1 = P * (3 + 2 ceil(Z) H[Z]),  Z = (p_2/p_1 - 3) / 2
//! k > 2:  t1 = P * (1 + 2 ceil(Q) H[Q]),  Q = (p_k^2/P - 1) / 2
//! ```
//!
//! and successive common terms are `2P` apart. The correction subtracted
//! from the raw row sum is the alternating inclusion-exclusion sum over all
//! subsets of two or more rows of the number of common terms `<= N`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{ExactRatio, Heaviside};
use crate::restricted_index::RestrictedIndexSet;

pub use crate::ratio::heaviside;

/// A subset of restricted rows together with its intersection progression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapTerm {
    pub indices: Vec<u64>,
    pub first_term: u128,
    pub common_diff: u128,
    /// `+1` for subsets of even size, `-1` for odd.
    pub sign: i8,
}

impl OverlapTerm {
    pub fn new(indices: &[u64]) -> Result<Self> {
        Ok(OverlapTerm {
            indices: indices.to_vec(),
            first_term: first_common(indices)?,
            common_diff: common_difference(indices)?,
            sign: if indices.len().is_multiple_of(2) { 1 } else { -1 },
        })
    }

    /// Common terms not exceeding `limit`.
    pub fn count_upto(&self, limit: u64) -> u64 {
        count_from(self.first_term, self.common_diff, limit)
    }
}

/// Validated bases `2n+1` of a strictly ascending index list.
fn bases_of(indices: &[u64], min_len: usize) -> Result<Vec<u128>> {
    if indices.len() < min_len {
        return Err(Error::Domain(format!(
            "need at least {min_len} indices, got {}",
            indices.len()
        )));
    }
    if indices[0] == 0 {
        return Err(Error::Domain("progression index must be >= 1".into()));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!(
            "indices must be strictly ascending: {indices:?}"
        )));
    }
    Ok(indices.iter().map(|&n| 2 * n as u128 + 1).collect())
}

fn product(bases: &[u128]) -> Result<u128> {
    bases.iter().try_fold(1u128, |acc, &b| {
        acc.checked_mul(b)
            .ok_or(Error::Overflow("product of bases"))
    })
}

fn to_signed(value: u128, what: &'static str) -> Result<i128> {
    i128::try_from(value).map_err(|_| Error::Overflow(what))
}

/// `P * (base + 2 ceil(g) H[g])` for a gate `g` whose zero is excluded by
/// distinct prime bases.
fn gated_multiple(
    product: u128,
    base: u128,
    gate: ExactRatio,
    formula: &'static str,
) -> Result<u128> {
    let lift = match gate.heaviside() {
        Heaviside::Zero => 0,
        Heaviside::One => {
            let c = gate.ceil();
            u128::try_from(c).map_err(|_| Error::Overflow(formula))? * 2
        }
        Heaviside::Half => return Err(Error::InvariantViolation(formula)),
    };
    let multiplier = base.checked_add(lift).ok_or(Error::Overflow(formula))?;
    product
        .checked_mul(multiplier)
        .ok_or(Error::Overflow(formula))
}

/// Pair form: `Z = (p_2 - 3 p_1) / (2 p_1)`.
fn pair_from_bases(low: u128, high: u128) -> Result<u128> {
    let (p, q) = (to_signed(low, "pair base")?, to_signed(high, "pair base")?);
    let numerator = q
        .checked_sub(p.checked_mul(3).ok_or(Error::Overflow("pair Z"))?)
        .ok_or(Error::Overflow("pair Z"))?;
    let z = ExactRatio::new(numerator, 2 * p)?;
    let pq = low
        .checked_mul(high)
        .ok_or(Error::Overflow("pair product"))?;
    gated_multiple(pq, 3, z, "pair first common term: Z = 0")
}

/// Product form: `Q = (p_k^2 - P) / (2 P)`; valid for any `k >= 2`.
fn product_form_from_parts(product: u128, largest: u128) -> Result<u128> {
    let square = largest
        .checked_mul(largest)
        .ok_or(Error::Overflow("largest base squared"))?;
    let numerator = to_signed(square, "Q numerator")? - to_signed(product, "Q numerator")?;
    let denominator = to_signed(product, "Q denominator")?
        .checked_mul(2)
        .ok_or(Error::Overflow("Q denominator"))?;
    let q = ExactRatio::new(numerator, denominator)?;
    gated_multiple(product, 1, q, "multi first common term: Q = 0")
}

/// Smallest integer common to rows `n1 < n2`.
pub fn pair_first_common(n1: u64, n2: u64) -> Result<u128> {
    let bases = bases_of(&[n1, n2], 2)?;
    pair_from_bases(bases[0], bases[1])
}

/// Smallest integer common to three or more ascending rows.
pub fn multi_first_common(indices: &[u64]) -> Result<u128> {
    let bases = bases_of(indices, 3)?;
    product_form_from_parts(product(&bases)?, bases[bases.len() - 1])
}

/// The product-form first common term, also accepted for pairs.
pub fn product_form_first_common(indices: &[u64]) -> Result<u128> {
    let bases = bases_of(indices, 2)?;
    product_form_from_parts(product(&bases)?, bases[bases.len() - 1])
}

/// Pair form for two rows, product form for more.
pub fn first_common(indices: &[u64]) -> Result<u128> {
    match indices {
        [n1, n2] => pair_first_common(*n1, *n2),
        _ => multi_first_common(indices),
    }
}

/// `2 * prod(2 n_i + 1)`.
pub fn common_difference(indices: &[u64]) -> Result<u128> {
    let bases = bases_of(indices, 2)?;
    product(&bases)?
        .checked_mul(2)
        .ok_or(Error::Overflow("common difference"))
}

/// `floor(B) + 1` when `first <= limit`, else 0, with `B = (limit - first) / diff`.
///
/// The step `H[B + eps]` for vanishing `eps > 0` is exactly the test `B >= 0`.
fn count_from(first: u128, diff: u128, limit: u64) -> u64 {
    let limit = limit as u128;
    if first > limit {
        return 0;
    }
    ((limit - first) / diff + 1) as u64
}

/// Number of integers `<= limit` common to every listed row.
pub fn overlap_count(indices: &[u64], limit: u64) -> Result<u64> {
    let first = first_common(indices)?;
    let diff = common_difference(indices)?;
    Ok(count_from(first, diff, limit))
}

/// Outcome of one evaluation of the correction, with enumeration counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LambdaStats {
    pub value: i128,
    /// Subsets of size >= 2 whose first common term was evaluated.
    pub subset_terms: u64,
    /// Of those, subsets with at least one common term `<= N`.
    pub nonzero_terms: u64,
}

struct Walk<'a> {
    bases: &'a [u128],
    limit: u128,
    max_size: usize,
    stats: LambdaStats,
}

impl Walk<'_> {
    /// Extends a subset whose last base sits at `bases[last]` with every
    /// larger base. A subset whose first common term exceeds the limit is
    /// not extended: supersets only shrink the intersection.
    fn extend(&mut self, last: usize, size: usize, product: u128, lowest: u128) {
        if size >= self.max_size {
            return;
        }
        let sign: i128 = if (size + 1).is_multiple_of(2) { 1 } else { -1 };
        for next in last + 1..self.bases.len() {
            let base = self.bases[next];
            let grown = product * base;
            if grown > self.limit {
                // bases ascend, so every later product is larger still
                break;
            }
            let first = if size == 1 {
                pair_from_bases(lowest, base)
            } else {
                product_form_from_parts(grown, base)
            }
            .expect("restricted bases are distinct primes within range");
            self.stats.subset_terms += 1;
            if first > self.limit {
                continue;
            }
            let count = count_from(first, 2 * grown, self.limit as u64);
            self.stats.nonzero_terms += 1;
            self.stats.value += sign * count as i128;
            self.extend(next, size + 1, grown, lowest);
        }
    }
}

fn walk(limit: u64, restricted: &RestrictedIndexSet, max_size: usize) -> LambdaStats {
    let bases: Vec<u128> = restricted.bases().map(u128::from).collect();
    let mut walk = Walk {
        bases: &bases,
        limit: limit as u128,
        max_size,
        stats: LambdaStats::default(),
    };
    for (start, &base) in bases.iter().enumerate() {
        walk.extend(start, 1, base, base);
    }
    walk.stats
}

/// Inclusion-exclusion correction for `limit`: the signed sum over subsets
/// of two or more restricted rows of their common-term counts.
pub fn lambda_c(limit: u64, restricted: &RestrictedIndexSet) -> u64 {
    let value = lambda_c_stats(limit, restricted).value;
    u64::try_from(value).expect("correction is non-negative")
}

pub fn lambda_c_stats(limit: u64, restricted: &RestrictedIndexSet) -> LambdaStats {
    walk(limit, restricted, usize::MAX)
}

/// The correction with subsets larger than `max_size` dropped. Stopping at an
/// even size over-estimates the full value, at an odd size under-estimates it.
pub fn lambda_c_truncated(limit: u64, restricted: &RestrictedIndexSet, max_size: usize) -> i128 {
    walk(limit, restricted, max_size).value
}

/// Every contributing subset in enumeration order; meant for small limits.
pub fn overlap_terms(limit: u64, restricted: &RestrictedIndexSet) -> Vec<OverlapTerm> {
    fn grow(
        indices: &[u64],
        from: usize,
        chosen: &mut Vec<u64>,
        limit: u64,
        out: &mut Vec<OverlapTerm>,
    ) {
        for next in from..indices.len() {
            chosen.push(indices[next]);
            let keep = if chosen.len() < 2 {
                true
            } else {
                let term = OverlapTerm::new(chosen).expect("restricted indices");
                let hit = term.first_term <= limit as u128;
                if hit {
                    out.push(term);
                }
                hit
            };
            if keep {
                grow(indices, next + 1, chosen, limit, out);
            }
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    grow(restricted.indices(), 0, &mut Vec::new(), limit, &mut out);
    out
}
