//! Reference counts by plain Eratosthenes marking and direct membership
//! tests. Shares no code with the progression-based path it checks.

use crate::error::{Error, Result};

/// Default upper bound on the sieve length.
pub const ORACLE_DEFAULT_CAP: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct OracleTables {
    limit: u64,
    prime_flags: Vec<bool>,
    cumulative_pi: Vec<u32>,
}

impl OracleTables {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn prime_flags(&self) -> &[bool] {
        &self.prime_flags
    }

    pub fn cumulative_pi(&self) -> &[u32] {
        &self.cumulative_pi
    }

    pub fn is_prime(&self, value: u64) -> bool {
        self.prime_flags[self.index(value)]
    }

    /// Primes `<= value`.
    pub fn pi(&self, value: u64) -> u64 {
        self.cumulative_pi[self.index(value)] as u64
    }

    /// Odd non-primes in `[9, value]`.
    pub fn odd_composites(&self, value: u64) -> u64 {
        let last = self.index(value);
        (9..=last)
            .step_by(2)
            .filter(|&m| !self.prime_flags[m])
            .count() as u64
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_flags
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| i as u64)
    }

    fn index(&self, value: u64) -> usize {
        assert!(
            value <= self.limit,
            "oracle queried at {value} beyond its limit {}",
            self.limit
        );
        value as usize
    }
}

fn check_cap(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        Err(Error::OutOfRange { what, value, cap })
    } else {
        Ok(())
    }
}

pub fn sieve_primes(limit: u64) -> Result<OracleTables> {
    sieve_primes_capped(limit, ORACLE_DEFAULT_CAP)
}

pub fn sieve_primes_capped(limit: u64, cap: u64) -> Result<OracleTables> {
    check_cap("sieve limit", limit, cap)?;
    let len = limit as usize + 1;
    let mut flags = vec![true; len];
    flags[0] = false;
    if len > 1 {
        flags[1] = false;
    }
    let mut i = 2usize;
    while i * i < len {
        if flags[i] {
            for multiple in (i * i..len).step_by(i) {
                flags[multiple] = false;
            }
        }
        i += 1;
    }
    let mut running = 0u32;
    let cumulative = flags
        .iter()
        .map(|&p| {
            running += p as u32;
            running
        })
        .collect();
    Ok(OracleTables {
        limit,
        prime_flags: flags,
        cumulative_pi: cumulative,
    })
}

pub fn sieve_pi(limit: u64) -> Result<u64> {
    Ok(sieve_primes(limit)?.pi(limit))
}

pub fn oracle_odd_composites(limit: u64) -> Result<u64> {
    Ok(sieve_primes(limit)?.odd_composites(limit))
}

/// Every integer `<= limit` lying in all of the listed rows, found by
/// testing each candidate against each row.
pub fn ap_intersection_bruteforce(indices: &[u64], limit: u64) -> Result<Vec<u64>> {
    ap_intersection_bruteforce_capped(indices, limit, ORACLE_DEFAULT_CAP)
}

pub fn ap_intersection_bruteforce_capped(
    indices: &[u64],
    limit: u64,
    cap: u64,
) -> Result<Vec<u64>> {
    check_cap("intersection limit", limit, cap)?;
    if indices.is_empty() || indices.contains(&0) {
        return Err(Error::Domain(
            "intersection needs one or more indices, all >= 1".into(),
        ));
    }
    let in_row = |x: u64, n: u64| {
        let p = 2 * n + 1;
        x % 2 == 1 && x.is_multiple_of(p) && x / p >= p
    };
    Ok((1..=limit)
        .filter(|&x| indices.iter().all(|&n| in_row(x, n)))
        .collect())
}
