//! Exact prime counting in the 6k+-1 residue classes.
//!
//! Every prime above 3 lives in one of the progressions 6t+1 or 6t-1. This
//! crate counts the composites (and hence the primes) in each progression
//! up to 6m+1 / 6m-1 by inclusion-exclusion over squarefree products of
//! the small sieving primes, and pairs that engine with an independent
//! sieve-of-Eratosthenes oracle that recomputes every value the slow way.
//!
//! Modules:
//!
//! - [`form_core`]: residue decomposition of naturals and constructive
//!   composite witnesses (6m+-1 = product of two 6x+-1 factors).
//! - [`coefficient_basis`]: the sieving primes per side, squarefree term
//!   enumeration with pruning, and the binomial term-count formulas.
//! - [`sieve_engine`]: per-divisor counts in a residue class and the
//!   signed totals P+, P-, pi+, pi-, pi.
//! - [`oracle`]: the referee - plain sieve plus literal scans, sharing no
//!   arithmetic with the engine.

pub mod coefficient_basis;
pub mod error;
pub mod form_core;
pub mod oracle;
pub mod sieve_engine;

pub use coefficient_basis::{
    build_basis, enumerate_terms, for_each_term, gamma, index_bounds, is_prime, CoefficientBasis,
    IndexBounds, SieveTerm,
};
pub use error::{Error, Result};
pub use form_core::{
    candidate_form, compose_factors, decompose, m1_witness, m2_witness, Decomposition,
    FactorWitness, ResidueSide, Sign,
};
pub use oracle::{
    oracle_class_count, oracle_counts, oracle_counts_with_table, sieve_upto, sieve_upto_with_cap,
    PrimalityTable, DEFAULT_SIEVE_CAP,
};
pub use sieve_engine::{
    class_count, composite_breakdown, composite_count_minus, composite_count_plus, count_summary,
    prime_count_minus, prime_count_plus, prime_count_total, CountSummary, LevelSubtotal,
    SideBreakdown,
};
