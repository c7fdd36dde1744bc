//! Differential tests: the inclusion-exclusion engine against the sieve
//! oracle, the witness predicates against table compositeness, and the
//! per-divisor counts against their closed floor forms.

use sixfold_core::{
    build_basis, class_count, composite_breakdown, count_summary, enumerate_terms, m1_witness,
    m2_witness, oracle_class_count, oracle_counts_with_table, sieve_upto, ResidueSide,
};

#[test]
fn engine_matches_oracle_on_a_sweep() {
    // The acceptance suite runs this to m = 5000; keep a fast slice here.
    let m_max = 600u64;
    let table = sieve_upto(6 * m_max + 1).unwrap();
    for m in 1..=m_max {
        let engine = count_summary(m).unwrap();
        let oracle = oracle_counts_with_table(m, &table).unwrap();
        assert_eq!(engine.p_plus, oracle.p_plus, "p_plus at m = {m}");
        assert_eq!(engine.pi_plus, oracle.pi_plus, "pi_plus at m = {m}");
        assert_eq!(engine.p_minus, oracle.p_minus, "p_minus at m = {m}");
        assert_eq!(engine.pi_minus, oracle.pi_minus, "pi_minus at m = {m}");
        assert_eq!(engine.pi_total, oracle.pi_total, "pi_total at m = {m}");
    }
}

#[test]
fn witness_presence_tracks_compositeness() {
    // Full 10^4 range runs in the acceptance suite.
    let m_max = 2000u64;
    let table = sieve_upto(6 * m_max + 1).unwrap();
    for m in 1..=m_max {
        assert_eq!(
            m1_witness(m).is_some(),
            !table.is_prime(6 * m + 1),
            "6m+1 at m = {m}"
        );
        assert_eq!(
            m2_witness(m).is_some(),
            !table.is_prime(6 * m - 1),
            "6m-1 at m = {m}"
        );
    }
}

#[test]
fn witness_tie_break_matches_a_naive_exhaustive_scan() {
    use sixfold_core::Sign;

    // smallest j, then smallest i, minus sign before plus sign
    fn naive_m1(m: u64) -> Option<(u64, u64, Sign)> {
        let mut j = 1u64;
        while 6 * j * j - 2 * j <= m {
            let mut i = j;
            while 6 * i * j - (i + j) <= m {
                if 6 * i * j - (i + j) == m {
                    return Some((i, j, Sign::Minus));
                }
                if 6 * i * j + (i + j) == m {
                    return Some((i, j, Sign::Plus));
                }
                i += 1;
            }
            j += 1;
        }
        None
    }

    fn naive_m2(m: u64) -> Option<(u64, u64)> {
        let mut j = 1u64;
        while 5 * j + 1 <= m {
            let mut i = 1u64;
            while 6 * i * j + i - j <= m {
                if 6 * i * j + i - j == m {
                    return Some((i, j));
                }
                i += 1;
            }
            j += 1;
        }
        None
    }

    for m in 1..=1500u64 {
        let got = m1_witness(m).map(|w| (w.i, w.j, w.i_sign));
        assert_eq!(got, naive_m1(m), "m1 at m = {m}");

        let got = m2_witness(m).map(|w| (w.i, w.j));
        assert_eq!(got, naive_m2(m), "m2 at m = {m}");
    }
}

#[test]
fn engine_and_oracle_agree_per_divisor() {
    for m in [1u64, 5, 10, 50, 137, 300] {
        for side in [ResidueSide::PlusOne, ResidueSide::MinusOne] {
            let basis = build_basis(m, side).unwrap();
            for t in enumerate_terms(&basis) {
                let engine = class_count(t.d, t.q, side, m).unwrap();
                let oracle = oracle_class_count(t.d, t.q, side, m).unwrap();
                assert_eq!(engine, oracle, "m = {m} side = {side} d = {}", t.d);
            }
        }
    }
}

#[test]
fn engine_level_sums_match_oracle_per_level() {
    for m in [10u64, 50, 200] {
        for side in [ResidueSide::PlusOne, ResidueSide::MinusOne] {
            let basis = build_basis(m, side).unwrap();
            let breakdown = composite_breakdown(m, side).unwrap();
            let mut oracle_sums = vec![0u64; breakdown.levels.len()];
            for t in enumerate_terms(&basis) {
                oracle_sums[(t.q - 1) as usize] += oracle_class_count(t.d, t.q, side, m).unwrap();
            }
            let engine_sums: Vec<u64> = breakdown.levels.iter().map(|l| l.count_sum).collect();
            assert_eq!(engine_sums, oracle_sums, "m = {m} side = {side}");
        }
    }
}

/// The closed floor form a per-divisor count must equal.
///
/// Plus side: level 1 in the minus class is [(6m+d+1)/(6d)], level 1 in
/// the plus class [(6m-d+1)/(6d)] (self-exclusion folded in), levels >= 2
/// are [(6m+ad+1)/(6d)] with a = 1 for odd s, 5 for even s. Minus side:
/// the same shapes with final offset -1: [(6m-d-1)/(6d)],
/// [(6m+d-1)/(6d)], and [(6m+bd-1)/(6d)] with b = 5 for odd s, 1 for
/// even s.
fn closed_floor(d: u64, q: u32, s: u32, side: ResidueSide, m: u64) -> u64 {
    let six_m = (6 * m) as i128;
    let d = d as i128;
    let numerator = match side {
        ResidueSide::PlusOne => {
            if q == 1 {
                if s == 1 {
                    six_m + d + 1
                } else {
                    six_m - d + 1
                }
            } else {
                let a = if s % 2 == 1 { 1 } else { 5 };
                six_m + a * d + 1
            }
        }
        ResidueSide::MinusOne => {
            if q == 1 {
                if s == 1 {
                    six_m - d - 1
                } else {
                    six_m + d - 1
                }
            } else {
                let b = if s % 2 == 1 { 5 } else { 1 };
                six_m + b * d - 1
            }
        }
    };
    (numerator / (6 * d)) as u64
}

#[test]
fn class_counts_equal_their_closed_floors() {
    // Acceptance runs this to m = 2000; a fast slice here.
    for m in 1..=300u64 {
        for side in [ResidueSide::PlusOne, ResidueSide::MinusOne] {
            let basis = build_basis(m, side).unwrap();
            for t in enumerate_terms(&basis) {
                let counted = class_count(t.d, t.q, side, m).unwrap();
                let floored = closed_floor(t.d, t.q, t.s, side, m);
                assert_eq!(counted, floored, "m = {m} side = {side} d = {}", t.d);
            }
        }
    }
}

#[test]
fn every_composite_has_a_basis_prime_factor() {
    // Soundness of the index bounds: each composite progression member
    // owns at least one basis factor once it enters the counting range.
    // The bounds are monotone in m and primes are only ever added, so
    // checking each composite at its entry index m_n covers all larger m.
    let m_max = 10_000u64;
    let limit = 6 * m_max + 1;
    let table = sieve_upto(limit).unwrap();

    // monotonicity of the bounds themselves
    let mut prev = sixfold_core::index_bounds(1).unwrap();
    for m in 2..=m_max {
        let b = sixfold_core::index_bounds(m).unwrap();
        assert!(b.nu >= prev.nu && b.k >= prev.k && b.r >= prev.r, "m = {m}");
        prev = b;
    }

    let in_basis_at = |p: u64, m_entry: u64, side: ResidueSide| -> bool {
        let bounds = sixfold_core::index_bounds(m_entry).unwrap();
        match (p % 6, side) {
            (5, ResidueSide::PlusOne) => (p + 1) / 6 <= bounds.nu,
            (1, ResidueSide::PlusOne) => (p - 1) / 6 <= bounds.k,
            (5, ResidueSide::MinusOne) => (p + 1) / 6 <= bounds.r,
            (1, ResidueSide::MinusOne) => (p - 1) / 6 <= bounds.r,
            _ => false,
        }
    };
    let has_basis_factor = |n: u64, m_entry: u64, side: ResidueSide| -> bool {
        let mut rest = n;
        let mut f = 5u64;
        while f <= rest / f {
            if rest.is_multiple_of(f) {
                if in_basis_at(f, m_entry, side) {
                    return true;
                }
                while rest.is_multiple_of(f) {
                    rest /= f;
                }
            }
            f += if f % 6 == 5 { 2 } else { 4 };
        }
        rest > 1 && rest < n && in_basis_at(rest, m_entry, side)
    };

    for m in 1..=m_max {
        let n_plus = 6 * m + 1;
        if !table.is_prime(n_plus) {
            assert!(
                has_basis_factor(n_plus, m, ResidueSide::PlusOne),
                "composite {n_plus} escapes the plus basis"
            );
        }
        let n_minus = 6 * m - 1;
        if !table.is_prime(n_minus) {
            assert!(
                has_basis_factor(n_minus, m, ResidueSide::MinusOne),
                "composite {n_minus} escapes the minus basis"
            );
        }
    }
}
