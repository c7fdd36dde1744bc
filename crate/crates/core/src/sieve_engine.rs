//! Signed inclusion-exclusion totals over the enumerated sieve terms.
//!
//! For a squarefree d coprime to 6, the progression members divisible by d
//! are d*u with u running over one residue class mod 6 (d^2 = 1 mod 6, so
//! u = target*d mod 6). Counting that u-progression up to the limit gives
//! the per-divisor count; alternating the level sums turns the union of
//! divisibility classes into the exact composite count:
//!
//!   P = sum over levels q of (-1)^(q-1) * sum over d in K_q of count(d)
//!
//! One wrinkle: at level 1 the divisor d is itself prime, and when d sits
//! in the progression being counted (d = target mod 6) its multiple u = 1
//! is the prime itself, not a composite, so that single slot is excluded.
//! At levels q >= 2 the product d is composite and u = 1 stays in.

use crate::coefficient_basis::{build_basis, for_each_term};
use crate::error::{Error, Result};
use crate::form_core::ResidueSide;

/// Multiples of d in the progression, with the level-1 self-exclusion.
///
/// Preconditions (d coprime to 6, d <= limit) are the caller's job.
fn count_in_class(d: u64, q: u32, target: u64, limit: u64) -> u64 {
    let u0 = (target * (d % 6)) % 6; // first multiplier residue, 1 or 5
    let max_u = limit / d;
    let mut count = if max_u >= u0 { (max_u - u0) / 6 + 1 } else { 0 };
    if q == 1 && d % 6 == target {
        // the prime d itself occupies the u = 1 slot
        count -= 1;
    }
    count
}

/// How many progression members with index at most m the divisor d hits,
/// counting the prime d itself out at level 1.
pub fn class_count(d: u64, q: u32, side: ResidueSide, m: u64) -> Result<u64> {
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
    Ok(count_in_class(d, q, side.residue(), limit))
}

/// Unsigned per-level slice of the inclusion-exclusion sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelSubtotal {
    /// Level: number of prime factors per term.
    pub q: u32,
    /// Terms that survived pruning at this level.
    pub terms: u64,
    /// Sum of the per-divisor counts at this level.
    pub count_sum: u64,
    /// (-1)^(q-1), the weight this level enters the total with.
    pub sign: i8,
}

/// The composite count for one side together with its level breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideBreakdown {
    pub m: u64,
    pub side: ResidueSide,
    /// P: composites in the progression with index <= m.
    pub composites: u64,
    pub levels: Vec<LevelSubtotal>,
}

/// Count composites 6t+-1 with t <= m by inclusion-exclusion.
pub fn composite_breakdown(m: u64, side: ResidueSide) -> Result<SideBreakdown> {
    let basis = build_basis(m, side)?;
    let target = side.residue();
    let limit = basis.limit();
    let mut levels: Vec<LevelSubtotal> = Vec::new();
    // Partial alternating sums overshoot the final value, so accumulate
    // signed and wide even though the result is a count.
    let mut signed: i128 = 0;
    for_each_term(&basis, |factors, d, _s| {
        let q = factors.len() as u32;
        let c = count_in_class(d, q, target, limit);
        let idx = (q - 1) as usize;
        if levels.len() <= idx {
            levels.resize(
                idx + 1,
                LevelSubtotal {
                    q: 0,
                    terms: 0,
                    count_sum: 0,
                    sign: 0,
                },
            );
        }
        let slot = &mut levels[idx];
        slot.q = q;
        slot.sign = if q % 2 == 1 { 1 } else { -1 };
        slot.terms += 1;
        slot.count_sum += c;
        signed += i128::from(slot.sign) * i128::from(c);
    });
    for (idx, slot) in levels.iter_mut().enumerate() {
        // levels with every term pruned still get well-formed rows
        if slot.q == 0 {
            slot.q = idx as u32 + 1;
            slot.sign = if slot.q % 2 == 1 { 1 } else { -1 };
        }
    }
    let composites =
        u64::try_from(signed).expect("inclusion-exclusion total must be a nonnegative count");
    debug_assert!(composites <= m);
    Ok(SideBreakdown {
        m,
        side,
        composites,
        levels,
    })
}

/// P+(6m+1): composites of the form 6t+1 with t <= m.
pub fn composite_count_plus(m: u64) -> Result<u64> {
    Ok(composite_breakdown(m, ResidueSide::PlusOne)?.composites)
}

/// P-(6m-1): composites of the form 6t-1 with t <= m.
pub fn composite_count_minus(m: u64) -> Result<u64> {
    Ok(composite_breakdown(m, ResidueSide::MinusOne)?.composites)
}

/// pi+(6m+1) = m - P+.
pub fn prime_count_plus(m: u64) -> Result<u64> {
    Ok(m - composite_count_plus(m)?)
}

/// pi-(6m-1) = m - P-.
pub fn prime_count_minus(m: u64) -> Result<u64> {
    Ok(m - composite_count_minus(m)?)
}

/// Primes up to 6m+1 excluding 2 and 3: 2m - (P+ + P-).
///
/// The minus side stops at 6m-1, two short of 6m+1, but the gap
/// {6m, 6m+1} holds no member of the 6t-1 progression, so nothing is
/// missed by adding the two sides.
pub fn prime_count_total(m: u64) -> Result<u64> {
    let p_plus = composite_count_plus(m)?;
    let p_minus = composite_count_minus(m)?;
    Ok(2 * m - (p_plus + p_minus))
}

/// All five counts for one m, with per-level tallies for both sides.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CountSummary {
    pub m: u64,
    pub p_plus: u64,
    pub pi_plus: u64,
    pub p_minus: u64,
    pub pi_minus: u64,
    pub pi_total: u64,
    pub levels_plus: Vec<LevelSubtotal>,
    pub levels_minus: Vec<LevelSubtotal>,
}

/// Compute every headline count for m through the engine.
pub fn count_summary(m: u64) -> Result<CountSummary> {
    let plus = composite_breakdown(m, ResidueSide::PlusOne)?;
    let minus = composite_breakdown(m, ResidueSide::MinusOne)?;
    let summary = CountSummary {
        m,
        p_plus: plus.composites,
        pi_plus: m - plus.composites,
        p_minus: minus.composites,
        pi_minus: m - minus.composites,
        pi_total: 2 * m - (plus.composites + minus.composites),
        levels_plus: plus.levels,
        levels_minus: minus.levels,
    };
    debug_assert_eq!(summary.p_plus + summary.pi_plus, m);
    debug_assert_eq!(summary.p_minus + summary.pi_minus, m);
    debug_assert_eq!(summary.pi_total, summary.pi_plus + summary.pi_minus);
    Ok(summary)
}
