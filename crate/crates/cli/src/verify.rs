//! Engine-versus-oracle sweep over a contiguous range of m.
//!
//! The oracle side reuses one primality table for the whole sweep and
//! grows its counts incrementally: stepping m by one admits exactly the
//! two candidates 6m-1 and 6m+1, so each running tally is O(1) per step
//! and the values match the direct per-m oracle scan.

use sixfold_core::{count_summary, sieve_upto_with_cap, CountSummary, Error, Result};

/// Outcome of comparing the engine against the oracle at one m.
#[derive(Clone, Debug)]
pub struct VerifyRecord {
    pub m: u64,
    pub engine: CountSummary,
    pub oracle: CountSummary,
    pub matched: bool,
    pub first_divergent_field: Option<&'static str>,
}

pub fn compare(engine: &CountSummary, oracle: &CountSummary) -> Option<&'static str> {
    let pairs = [
        ("p_plus", engine.p_plus, oracle.p_plus),
        ("pi_plus", engine.pi_plus, oracle.pi_plus),
        ("p_minus", engine.p_minus, oracle.p_minus),
        ("pi_minus", engine.pi_minus, oracle.pi_minus),
        ("pi_total", engine.pi_total, oracle.pi_total),
    ];
    pairs
        .iter()
        .find(|(_, e, o)| e != o)
        .map(|(name, _, _)| *name)
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub m_max: u64,
    pub checked: u64,
    pub matched: u64,
    /// Mismatching records only.
    pub mismatches: Vec<VerifyRecord>,
}

impl VerifyOutcome {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty() && self.checked == self.m_max
    }
}

pub fn run_verify(m_max: u64, fail_fast: bool, oracle_cap: u64) -> Result<VerifyOutcome> {
    if m_max == 0 {
        return Err(Error::ZeroIndex);
    }
    let limit = m_max
        .checked_mul(6)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("6m + 1"))?;
    let table = sieve_upto_with_cap(limit, oracle_cap)?;

    let mut outcome = VerifyOutcome {
        m_max,
        checked: 0,
        matched: 0,
        mismatches: Vec::new(),
    };
    let (mut p_plus, mut pi_plus, mut p_minus, mut pi_minus, mut pi_total) = (0u64, 0, 0, 0, 0);
    for m in 1..=m_max {
        if table.is_prime(6 * m + 1) {
            pi_plus += 1;
            pi_total += 1;
        } else {
            p_plus += 1;
        }
        if table.is_prime(6 * m - 1) {
            pi_minus += 1;
            pi_total += 1;
        } else {
            p_minus += 1;
        }
        let oracle = CountSummary {
            m,
            p_plus,
            pi_plus,
            p_minus,
            pi_minus,
            pi_total,
            levels_plus: Vec::new(),
            levels_minus: Vec::new(),
        };
        let engine = count_summary(m)?;
        let divergent = compare(&engine, &oracle);
        outcome.checked += 1;
        if let Some(field) = divergent {
            outcome.mismatches.push(VerifyRecord {
                m,
                engine,
                oracle,
                matched: false,
                first_divergent_field: Some(field),
            });
            if fail_fast {
                break;
            }
        } else {
            outcome.matched += 1;
        }
    }
    Ok(outcome)
}

pub fn render_verify(outcome: &VerifyOutcome) -> String {
    let mut out = String::new();
    for rec in &outcome.mismatches {
        let e = &rec.engine;
        let o = &rec.oracle;
        out.push_str(&format!(
            "mismatch at m = {}: first divergent field = {}\n  engine: P+ = {}, pi+ = {}, P- = {}, pi- = {}, pi = {}\n  oracle: P+ = {}, pi+ = {}, P- = {}, pi- = {}, pi = {}\n",
            rec.m,
            rec.first_divergent_field.unwrap_or("none"),
            e.p_plus, e.pi_plus, e.p_minus, e.pi_minus, e.pi_total,
            o.p_plus, o.pi_plus, o.p_minus, o.pi_minus, o.pi_total,
        ));
    }
    out.push_str(&format!("{}/{} match\n", outcome.matched, outcome.m_max));
    out
}
