//! Property tests for the arithmetic the engine leans on.

use proptest::prelude::*;
use sixfold_core::{
    build_basis, candidate_form, compose_factors, decompose, gamma, m1_witness, m2_witness,
    ResidueSide,
};

proptest! {
    #[test]
    fn isqrt_is_the_exact_floor_root(x in any::<u64>()) {
        let r = x.isqrt();
        prop_assert!((r as u128) * (r as u128) <= x as u128);
        prop_assert!((r as u128 + 1) * (r as u128 + 1) > x as u128);
    }

    #[test]
    fn decompose_is_a_section_of_reconstruction(n in 5u64..=u64::MAX) {
        let d = decompose(n).unwrap();
        prop_assert_eq!(d.value(), n);
        prop_assert!((-1..=4).contains(&d.alpha));
        prop_assert!(d.m >= 1);
    }

    #[test]
    fn rejected_forms_are_divisible_by_two_or_three(n in 5u64..10_000_000) {
        if candidate_form(n).unwrap().is_none() {
            prop_assert!(n % 2 == 0 || n % 3 == 0);
        } else {
            prop_assert!(n % 2 != 0 && n % 3 != 0);
        }
    }

    #[test]
    fn m1_witnesses_factor_their_target(m in 1u64..200_000) {
        if let Some(w) = m1_witness(m) {
            prop_assert!(w.j <= w.i);
            prop_assert_eq!(w.i_sign, w.j_sign);
            prop_assert_eq!(compose_factors(&w, ResidueSide::PlusOne).unwrap(), 6 * m + 1);
        }
    }

    #[test]
    fn m2_witnesses_factor_their_target(m in 1u64..200_000) {
        if let Some(w) = m2_witness(m) {
            prop_assert_ne!(w.i_sign, w.j_sign);
            prop_assert_eq!(compose_factors(&w, ResidueSide::MinusOne).unwrap(), 6 * m - 1);
        }
    }

    #[test]
    fn gamma_components_sum_to_the_full_binomial(
        q in 1u32..20,
        nu0 in 0u64..10,
        k0 in 0u64..10,
    ) {
        let (gm, gp) = gamma(q, nu0, k0).unwrap();
        // independent route: count subsets of an (nu0 + k0)-set by size
        let n = nu0 + k0;
        let mut total: u64 = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() == q {
                total += 1;
            }
        }
        prop_assert_eq!(gm + gp, total);
    }

    #[test]
    fn basis_primes_sit_in_their_index_ranges(m in 1u64..5_000) {
        for side in [ResidueSide::PlusOne, ResidueSide::MinusOne] {
            let b = build_basis(m, side).unwrap();
            let bounds = b.bounds();
            let (mi, pj) = match side {
                ResidueSide::PlusOne => (bounds.nu, bounds.k),
                ResidueSide::MinusOne => (bounds.r, bounds.r),
            };
            for &p in b.minus_primes() {
                prop_assert_eq!(p % 6, 5);
                prop_assert!((p + 1) / 6 >= 1 && (p + 1) / 6 <= mi);
            }
            for &p in b.plus_primes() {
                prop_assert_eq!(p % 6, 1);
                prop_assert!((p - 1) / 6 >= 1 && (p - 1) / 6 <= pj);
            }
            prop_assert!(b.minus_primes().windows(2).all(|w| w[0] < w[1]));
            prop_assert!(b.plus_primes().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
