//! Independent ground truth: a plain sieve of Eratosthenes plus direct
//! enumeration of every quantity the engine computes.
//!
//! Nothing here touches the engine's arithmetic. The point of this module
//! is to referee the inclusion-exclusion path, so it recomputes everything
//! the slow, obvious way: a flat primality table, then literal scans.

use crate::error::{Error, Result};
use crate::form_core::ResidueSide;
use crate::sieve_engine::CountSummary;

/// Default ceiling on sieve size; desk-scale verification needs no more.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Bit-packed primality flags for 0..=limit.
#[derive(Clone, Debug)]
pub struct PrimalityTable {
    limit: u64,
    words: Vec<u64>,
}

impl PrimalityTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Whether n is prime; n must not exceed the table limit.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "n = {n} beyond table limit {}", self.limit);
        self.words[(n / 64) as usize] & (1 << (n % 64)) != 0
    }

    /// Number of primes <= n.
    pub fn prime_count_upto(&self, n: u64) -> u64 {
        assert!(n <= self.limit);
        let full_words = (n + 1) / 64;
        let mut count: u64 = self.words[..full_words as usize]
            .iter()
            .map(|w| u64::from(w.count_ones()))
            .sum();
        let rem = (n + 1) % 64;
        if rem > 0 {
            let mask = (1u64 << rem) - 1;
            count += u64::from((self.words[full_words as usize] & mask).count_ones());
        }
        count
    }

    fn clear(&mut self, n: u64) {
        self.words[(n / 64) as usize] &= !(1 << (n % 64));
    }
}

/// Sieve of Eratosthenes up to limit, under the default memory cap.
pub fn sieve_upto(limit: u64) -> Result<PrimalityTable> {
    sieve_upto_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Sieve of Eratosthenes up to limit, under an explicit cap.
pub fn sieve_upto_with_cap(limit: u64, cap: u64) -> Result<PrimalityTable> {
    if limit > cap {
        return Err(Error::SieveCapExceeded {
            requested: limit,
            cap,
        });
    }
    let words = (limit / 64 + 1) as usize;
    let mut table = PrimalityTable {
        limit,
        words: vec![u64::MAX; words],
    };
    table.clear(0);
    if limit >= 1 {
        table.clear(1);
    }
    let mut p = 2u64;
    while p <= limit / p {
        if table.is_prime(p) {
            let mut multiple = p * p;
            while multiple <= limit {
                table.clear(multiple);
                multiple += p;
            }
        }
        p += 1;
    }
    Ok(table)
}

/// All five counts for m by direct scan of a fresh table.
pub fn oracle_counts(m: u64) -> Result<CountSummary> {
    if m == 0 {
        return Err(Error::ZeroIndex);
    }
    let six_m = m.checked_mul(6).ok_or(Error::Overflow("6m"))?;
    let limit = six_m.checked_add(1).ok_or(Error::Overflow("6m + 1"))?;
    let table = sieve_upto(limit)?;
    oracle_counts_with_table(m, &table)
}

/// As oracle_counts, reusing a caller-provided table (limit >= 6m+1).
pub fn oracle_counts_with_table(m: u64, table: &PrimalityTable) -> Result<CountSummary> {
    if m == 0 {
        return Err(Error::ZeroIndex);
    }
    let needed = m
        .checked_mul(6)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("6m + 1"))?;
    if table.limit() < needed {
        return Err(Error::Contract("table too small for the requested m"));
    }
    let mut p_plus = 0u64;
    let mut pi_plus = 0u64;
    let mut p_minus = 0u64;
    let mut pi_minus = 0u64;
    for t in 1..=m {
        if table.is_prime(6 * t + 1) {
            pi_plus += 1;
        } else {
            p_plus += 1;
        }
        if table.is_prime(6 * t - 1) {
            pi_minus += 1;
        } else {
            p_minus += 1;
        }
    }
    let pi_total = table.prime_count_upto(6 * m + 1) - 2; // drop 2 and 3
    Ok(CountSummary {
        m,
        p_plus,
        pi_plus,
        p_minus,
        pi_minus,
        pi_total,
        levels_plus: Vec::new(),
        levels_minus: Vec::new(),
    })
}

/// Per-divisor referee: a literal walk over the multiples of d.
pub fn oracle_class_count(d: u64, q: u32, side: ResidueSide, m: u64) -> Result<u64> {
    let limit = side.limit(m)?;
    if d.is_multiple_of(2) || d.is_multiple_of(3) {
        return Err(Error::Contract("d must be coprime to 6"));
    }
    if d > limit {
        return Err(Error::Contract("d exceeds the counting limit"));
    }
    if q == 0 {
        return Err(Error::Contract("level q must be at least 1"));
    }
    let target = side.residue();
    let mut count = 0u64;
    let mut n = d;
    while n <= limit {
        if n % 6 == target {
            count += 1;
        }
        match n.checked_add(d) {
            Some(next) => n = next,
            None => break,
        }
    }
    if q == 1 && d % 6 == target {
        count -= 1;
    }
    Ok(count)
}
