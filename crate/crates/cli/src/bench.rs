//! Wall-clock comparison of the inclusion-exclusion engine against the
//! brute-force oracle at a single m.

use std::time::{Duration, Instant};

use sixfold_core::{
    build_basis, count_summary, for_each_term, oracle_counts_with_table, sieve_upto_with_cap,
    Error, ResidueSide, Result,
};

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub m: u64,
    pub repetitions: u64,
    pub engine_pi: u64,
    pub oracle_pi: u64,
    /// Squarefree terms enumerated per engine run (both sides).
    pub term_count: u64,
    pub engine_times: Vec<Duration>,
    pub oracle_times: Vec<Duration>,
}

pub fn run_bench(m: u64, repetitions: u64, oracle_cap: u64) -> Result<BenchReport> {
    if repetitions == 0 {
        return Err(Error::Contract("repetitions must be at least 1"));
    }
    let mut engine_times = Vec::with_capacity(repetitions as usize);
    let mut oracle_times = Vec::with_capacity(repetitions as usize);
    let mut engine_pi = 0u64;
    let mut oracle_pi = 0u64;
    let mut term_count: Option<u64> = None;

    for _ in 0..repetitions {
        let start = Instant::now();
        let summary = count_summary(m)?;
        let mut terms = 0u64;
        for side in [ResidueSide::PlusOne, ResidueSide::MinusOne] {
            let basis = build_basis(m, side)?;
            for_each_term(&basis, |_, _, _| terms += 1);
        }
        engine_times.push(start.elapsed());
        engine_pi = summary.pi_total;
        match term_count {
            None => term_count = Some(terms),
            // enumeration is deterministic; a drift across runs is a bug
            Some(prev) => assert_eq!(prev, terms, "term count drifted between repetitions"),
        }

        let start = Instant::now();
        let limit = m
            .checked_mul(6)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow("6m + 1"))?;
        let table = sieve_upto_with_cap(limit, oracle_cap)?;
        let oracle = oracle_counts_with_table(m, &table)?;
        oracle_times.push(start.elapsed());
        oracle_pi = oracle.pi_total;
    }

    Ok(BenchReport {
        m,
        repetitions,
        engine_pi,
        oracle_pi,
        term_count: term_count.unwrap_or(0),
        engine_times,
        oracle_times,
    })
}

fn stats(times: &[Duration]) -> (Duration, Duration) {
    let best = times.iter().min().copied().unwrap_or_default();
    let mean = times.iter().sum::<Duration>() / times.len().max(1) as u32;
    (best, mean)
}

pub fn render_bench(report: &BenchReport) -> String {
    let (engine_best, engine_mean) = stats(&report.engine_times);
    let (oracle_best, oracle_mean) = stats(&report.oracle_times);
    format!(
        "bench: m = {}, repetitions = {}\n\
         engine: pi = {}, terms enumerated = {}, best = {:?}, mean = {:?}\n\
         oracle: pi = {}, best = {:?}, mean = {:?}\n",
        report.m,
        report.repetitions,
        report.engine_pi,
        report.term_count,
        engine_best,
        engine_mean,
        report.oracle_pi,
        oracle_best,
        oracle_mean,
    )
}
