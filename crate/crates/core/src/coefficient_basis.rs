//! Prime coefficient bases and squarefree sieve terms.
//!
//! For a counting limit L (6m+1 on the plus side, 6m-1 on the minus side)
//! the basis holds the sieving primes split by residue class: primes 6i-1
//! with i up to nu (plus side) or r (minus side), and primes 6j+1 with j up
//! to k or r, where
//!
//!   nu = floor((1 + isqrt(6m+1)) / 6)
//!   k  = floor((isqrt(6m+1) - 1) / 6)
//!   r  = floor(isqrt(6m) / 6)
//!
//! Every composite progression member up to L is divisible by a basis
//! prime, so inclusion-exclusion over squarefree basis products counts the
//! composites exactly. Products above L are pruned during enumeration; they
//! contribute no multiples and would otherwise blow the term list up to
//! 2^(nu0+k0).

use crate::error::{Error, Result};
use crate::form_core::ResidueSide;

/// Deterministic primality by trial division over 6k+-1 candidates.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut f = 5u64;
    while f <= n / f {
        if n.is_multiple_of(f) || n.is_multiple_of(f + 2) {
            return false;
        }
        f += 6;
    }
    true
}

/// The index bounds nu, k (plus side) and r (minus side) for a given m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexBounds {
    pub nu: u64,
    pub k: u64,
    pub r: u64,
}

/// Compute nu, k, r with exact integer square roots.
///
/// floor((1 + isqrt(x)) / 6) equals floor((1 + sqrt(x)) / 6): no multiple
/// of 6 fits strictly between 1 + floor(sqrt(x)) and 1 + sqrt(x), so the
/// integer root loses nothing and avoids float rounding at perfect-square
/// boundaries. Same argument for the other two floors.
pub fn index_bounds(m: u64) -> Result<IndexBounds> {
    if m == 0 {
        return Err(Error::ZeroIndex);
    }
    let six_m = m.checked_mul(6).ok_or(Error::Overflow("6m"))?;
    let l_plus = six_m.checked_add(1).ok_or(Error::Overflow("6m + 1"))?;
    let root_plus = l_plus.isqrt();
    Ok(IndexBounds {
        nu: (root_plus + 1) / 6,
        k: (root_plus - 1) / 6,
        r: six_m.isqrt() / 6,
    })
}

/// The sieving primes for one side at one m, split by residue class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBasis {
    m: u64,
    side: ResidueSide,
    limit: u64,
    bounds: IndexBounds,
    minus_primes: Vec<u64>,
    plus_primes: Vec<u64>,
}

impl CoefficientBasis {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn side(&self) -> ResidueSide {
        self.side
    }

    /// Largest progression member counted: 6m+1 or 6m-1.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn bounds(&self) -> IndexBounds {
        self.bounds
    }

    /// Basis primes of the form 6i-1, ascending.
    pub fn minus_primes(&self) -> &[u64] {
        &self.minus_primes
    }

    /// Basis primes of the form 6j+1, ascending.
    pub fn plus_primes(&self) -> &[u64] {
        &self.plus_primes
    }

    /// Number of primes among the 6i-1 candidates (nu0).
    pub fn nu0(&self) -> u64 {
        self.minus_primes.len() as u64
    }

    /// Number of primes among the 6j+1 candidates (k0).
    pub fn k0(&self) -> u64 {
        self.plus_primes.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.minus_primes.is_empty() && self.plus_primes.is_empty()
    }

    /// All basis primes merged into one ascending sequence.
    pub fn sieving_primes(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self
            .minus_primes
            .iter()
            .chain(self.plus_primes.iter())
            .copied()
            .collect();
        all.sort_unstable();
        all
    }
}

/// Build the coefficient basis for (m, side).
///
/// Composite candidates such as 25 = 6*4+1 or 35 = 6*6-1 are filtered out;
/// the index ranges alone only bound where primes can sit.
pub fn build_basis(m: u64, side: ResidueSide) -> Result<CoefficientBasis> {
    let bounds = index_bounds(m)?;
    let limit = side.limit(m)?;
    let (minus_bound, plus_bound) = match side {
        ResidueSide::PlusOne => (bounds.nu, bounds.k),
        ResidueSide::MinusOne => (bounds.r, bounds.r),
    };
    let minus_primes: Vec<u64> = (1..=minus_bound)
        .map(|i| 6 * i - 1)
        .filter(|&p| is_prime(p))
        .collect();
    let plus_primes: Vec<u64> = (1..=plus_bound)
        .map(|j| 6 * j + 1)
        .filter(|&p| is_prime(p))
        .collect();
    Ok(CoefficientBasis {
        m,
        side,
        limit,
        bounds,
        minus_primes,
        plus_primes,
    })
}

/// One squarefree product of basis primes, with its level and class data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveTerm {
    /// The product of the factors.
    pub d: u64,
    /// The prime factors, strictly increasing.
    pub factors: Vec<u64>,
    /// Level: number of prime factors.
    pub q: u32,
    /// How many factors are of the form 6i-1.
    pub s: u32,
}

impl SieveTerm {
    /// d mod 6 mapped to +-1; equals (-1)^s.
    pub fn residue(&self) -> i8 {
        if self.s % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// Inclusion-exclusion sign (-1)^(q-1).
    pub fn sign(&self) -> i8 {
        if self.q % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

fn walk<F>(
    primes: &[u64],
    start: usize,
    limit: u64,
    d: u64,
    s: u32,
    factors: &mut Vec<u64>,
    f: &mut F,
) where
    F: FnMut(&[u64], u64, u32),
{
    for idx in start..primes.len() {
        let p = primes[idx];
        let next = match d.checked_mul(p) {
            Some(next) if next <= limit => next,
            // primes ascend, so every later extension overshoots too
            _ => break,
        };
        factors.push(p);
        let s_next = s + u32::from(p % 6 == 5);
        f(factors, next, s_next);
        walk(primes, idx + 1, limit, next, s_next, factors, f);
        factors.pop();
    }
}

/// Visit every squarefree product d <= limit of one or more basis primes,
/// in lexicographic order of the factor sequence. The callback receives
/// (factors, d, s); the level q is factors.len().
pub fn for_each_term<F>(basis: &CoefficientBasis, mut f: F)
where
    F: FnMut(&[u64], u64, u32),
{
    let primes = basis.sieving_primes();
    let mut factors = Vec::with_capacity(primes.len());
    walk(&primes, 0, basis.limit(), 1, 0, &mut factors, &mut f);
}

/// Materialize the full term list in lexicographic order.
pub fn enumerate_terms(basis: &CoefficientBasis) -> Vec<SieveTerm> {
    let mut terms = Vec::new();
    for_each_term(basis, |factors, d, s| {
        terms.push(SieveTerm {
            d,
            factors: factors.to_vec(),
            q: factors.len() as u32,
            s,
        });
    });
    terms
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.checked_mul((n - t) as u128)?;
        acc /= (t + 1) as u128; // exact: t+1 consecutive factors so far
    }
    Some(acc)
}

/// Term-count formulas per level: (gamma_minus, gamma_plus).
///
/// A product of s minus-class and q-s plus-class primes has residue
/// (-1)^s mod 6, so the class sizes split the binomial sum by the parity
/// of s: odd s lands in gamma_minus, even s (including s = 0) in
/// gamma_plus. Out-of-range binomials are zero.
pub fn gamma(q: u32, nu0: u64, k0: u64) -> Result<(u64, u64)> {
    if q == 0 {
        return Err(Error::Contract("gamma level q must be at least 1"));
    }
    let q = q as u64;
    let mut minus: u128 = 0;
    let mut plus: u128 = 0;
    for s in 0..=q {
        let ways = binomial(nu0, s)
            .and_then(|a| binomial(k0, q - s).and_then(|b| a.checked_mul(b)))
            .ok_or(Error::Overflow("gamma binomial"))?;
        if s % 2 == 1 {
            minus = minus
                .checked_add(ways)
                .ok_or(Error::Overflow("gamma sum"))?;
        } else {
            plus = plus.checked_add(ways).ok_or(Error::Overflow("gamma sum"))?;
        }
    }
    let minus = u64::try_from(minus).map_err(|_| Error::Overflow("gamma sum"))?;
    let plus = u64::try_from(plus).map_err(|_| Error::Overflow("gamma sum"))?;
    Ok((minus, plus))
}
