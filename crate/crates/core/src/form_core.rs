//! Residue-form classification of naturals and constructive composite
//! witnesses.
//!
//! Every natural n >= 5 is 6m + alpha for a unique m >= 1 and
//! alpha in {-1, 0, 1, 2, 3, 4}; only alpha = -1 and alpha = +1 can carry
//! primes. A number 6m+1 is composite exactly when it splits as
//! (6i+1)(6j+1) or (6i-1)(6j-1), i.e. m = 6ij +- (i+j); a number 6m-1 is
//! composite exactly when it splits as (6i-1)(6j+1), i.e. m = 6ij + (i-j).
//! The witness searches below recover such a splitting when one exists, so
//! "composite" and "prime" become constructive predicates on m.

use crate::error::{Error, Result};

/// Selects which arithmetic progression is under study: 6t+1 or 6t-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueSide {
    /// The progression 6t+1 (residue 1 mod 6).
    PlusOne,
    /// The progression 6t-1 (residue 5 mod 6).
    MinusOne,
}

impl ResidueSide {
    /// Least positive residue mod 6 of the progression members.
    pub fn residue(self) -> u64 {
        match self {
            ResidueSide::PlusOne => 1,
            ResidueSide::MinusOne => 5,
        }
    }

    /// Largest progression member with index <= m: 6m+1 or 6m-1.
    pub fn limit(self, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::ZeroIndex);
        }
        let six_m = m.checked_mul(6).ok_or(Error::Overflow("6m"))?;
        match self {
            ResidueSide::PlusOne => six_m.checked_add(1).ok_or(Error::Overflow("6m + 1")),
            ResidueSide::MinusOne => Ok(six_m - 1),
        }
    }

    /// The progression member at index t.
    pub fn member(self, t: u64) -> Result<u64> {
        self.limit(t)
    }
}

impl std::fmt::Display for ResidueSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResidueSide::PlusOne => write!(f, "plus"),
            ResidueSide::MinusOne => write!(f, "minus"),
        }
    }
}

/// Sign of the unit offset in a factor 6x +- 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn offset(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

/// The unique writing n = 6m + alpha with m >= 1, alpha in {-1,..,4}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub m: u64,
    pub alpha: i8,
}

impl Decomposition {
    /// Reconstructs the decomposed natural.
    pub fn value(&self) -> u64 {
        (self.m * 6).wrapping_add(self.alpha as u64)
    }
}

/// A splitting 6m+-1 = (6i + i_sign)(6j + j_sign) certifying compositeness.
///
/// Same-sign witnesses compose to residue 1 mod 6, opposite-sign witnesses
/// to residue 5 mod 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorWitness {
    pub i: u64,
    pub j: u64,
    pub i_sign: Sign,
    pub j_sign: Sign,
}

impl FactorWitness {
    /// The residue class the composed product lies in.
    pub fn side(&self) -> ResidueSide {
        if self.i_sign == self.j_sign {
            ResidueSide::PlusOne
        } else {
            ResidueSide::MinusOne
        }
    }
}

/// Decompose n >= 5 as 6m + alpha, m >= 1, alpha in {-1,..,4}.
pub fn decompose(n: u64) -> Result<Decomposition> {
    if n < 5 {
        return Err(Error::BelowDomain(n));
    }
    // residue 5 re-expresses as -1 against the next block up
    let (m, alpha) = if n % 6 == 5 {
        (n / 6 + 1, -1)
    } else {
        (n / 6, (n % 6) as i8)
    };
    debug_assert!(m >= 1);
    Ok(Decomposition { m, alpha })
}

/// The progression n may belong to, if any.
///
/// Returns None when n is divisible by 2 or 3 and therefore certainly
/// composite.
pub fn candidate_form(n: u64) -> Result<Option<ResidueSide>> {
    if n < 5 {
        return Err(Error::BelowDomain(n));
    }
    Ok(match n % 6 {
        1 => Some(ResidueSide::PlusOne),
        5 => Some(ResidueSide::MinusOne),
        _ => None,
    })
}

/// Splitting witness for 6m+1, or None when 6m+1 is prime.
///
/// Solves m = 6ij - (i+j) or m = 6ij + (i+j) with 1 <= j <= i. The scan is
/// by ascending j; for each j the row is linear in i, so divisibility
/// recovers the unique candidate per sign. Ties break to the smallest j,
/// then the smallest i, then the minus sign. Rows are exhausted once the
/// row minimum 6j^2 - 2j passes m.
pub fn m1_witness(m: u64) -> Option<FactorWitness> {
    let m = m as u128;
    let mut j: u128 = 1;
    while 6 * j * j - 2 * j <= m {
        // (i, sign) candidates at this j, smallest i first.
        let mut best: Option<(u128, Sign)> = None;
        // minus/minus: m = i(6j-1) - j
        if (m + j).is_multiple_of(6 * j - 1) {
            let i = (m + j) / (6 * j - 1);
            if i >= j {
                best = Some((i, Sign::Minus));
            }
        }
        // plus/plus: m = i(6j+1) + j
        if m > j && (m - j).is_multiple_of(6 * j + 1) {
            let i = (m - j) / (6 * j + 1);
            if i >= j && best.is_none_or(|(bi, _)| i < bi) {
                best = Some((i, Sign::Plus));
            }
        }
        if let Some((i, sign)) = best {
            return Some(FactorWitness {
                i: i as u64,
                j: j as u64,
                i_sign: sign,
                j_sign: sign,
            });
        }
        j += 1;
    }
    None
}

/// Splitting witness 6m-1 = (6i-1)(6j+1), or None when 6m-1 is prime.
///
/// Solves m = 6ij + (i-j); i always indexes the 6i-1 factor. Any solution
/// has min(i, j) <= isqrt(m/6), so two scans cover every witness: the
/// small-j rows by ascending j (first hit has the least j there), and the
/// small-i rows by descending i (the exact j per row falls as i grows, so
/// the first hit has the least j there too). The smaller (j, i) of the
/// two wins, matching the m1 tie-break.
pub fn m2_witness(m: u64) -> Option<FactorWitness> {
    if m == 0 {
        return None;
    }
    let bound = (m / 6).isqrt() + 1;
    let m_wide = m as u128;
    let mut best: Option<(u64, u64)> = None; // (j, i)

    // small-j rows: m = i(6j+1) - j
    for j in 1..=bound {
        if 5 * j + 1 > m {
            break;
        }
        // widen: m + j can pass the word size near u64::MAX
        let numerator = m_wide + j as u128;
        let denominator = 6 * j as u128 + 1;
        if numerator.is_multiple_of(denominator) {
            best = Some((j, (numerator / denominator) as u64));
            break;
        }
    }

    // small-i rows: m = j(6i-1) + i, valid while 7i - 1 <= m
    let top = bound.min(((m_wide + 1) / 7) as u64);
    for i in (1..=top).rev() {
        let row_j = (m - i) / (6 * i - 1);
        if (m - i).is_multiple_of(6 * i - 1) {
            if row_j >= 1 && best.is_none_or(|b| (row_j, i) < b) {
                best = Some((row_j, i));
            }
            break;
        }
        // rows below only yield still-larger j; stop once the phase-one
        // hit cannot be beaten (equal j would be the same witness)
        if best.is_some_and(|(bj, _)| row_j >= bj) {
            break;
        }
    }

    best.map(|(j, i)| FactorWitness {
        i,
        j,
        i_sign: Sign::Minus,
        j_sign: Sign::Plus,
    })
}

/// Multiply the witness factors back out: (6i + i_sign)(6j + j_sign).
pub fn compose_factors(w: &FactorWitness, side: ResidueSide) -> Result<u64> {
    if w.i == 0 || w.j == 0 {
        return Err(Error::Contract("witness indices must be at least 1"));
    }
    if w.side() != side {
        return Err(Error::Contract(
            "witness signs do not match the residue side",
        ));
    }
    let factor = |x: u64, sign: Sign| -> Result<u64> {
        let six_x = x.checked_mul(6).ok_or(Error::Overflow("6i"))?;
        Ok(match sign {
            Sign::Minus => six_x - 1,
            Sign::Plus => six_x.checked_add(1).ok_or(Error::Overflow("6i + 1"))?,
        })
    };
    let a = factor(w.i, w.i_sign)?;
    let b = factor(w.j, w.j_sign)?;
    a.checked_mul(b).ok_or(Error::Overflow("witness product"))
}
