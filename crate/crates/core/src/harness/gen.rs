//! Seeded random instances for the suites.
//!
//! Words are drawn uniformly from a letter pool one position at a time,
//! rejecting a letter that would cancel its predecessor. Polynomials have
//! 1 to 4 powers of the variable, exponents 1 to 3, and coefficients of
//! length 0 to 6.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::presentation::{relator, Params};
use crate::word::{Letter, Word};
use crate::word_maps::{SemigroupPolynomial, Term};
use crate::zero_monoid::{Gen, SPolynomial, STerm, SWord};

pub type TrialRng = ChaCha8Rng;

/// Per-trial generator seeded with `seed ^ trial`, so trial outcomes do not
/// depend on execution order.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed ^ trial)
}

/// Both signs of every listed letter.
pub fn signed_pool(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    letters.into_iter().flat_map(|l| [l, l.inverse()]).collect()
}

/// `a_1..a_n` with both signs.
pub fn a_letters(n: u32) -> Vec<Letter> {
    signed_pool((1..=n).map(Letter::a))
}

pub fn x_letters(indices: impl IntoIterator<Item = u32>) -> Vec<Letter> {
    signed_pool(indices.into_iter().map(Letter::x))
}

/// A reduced word of exactly `len` letters from `pool`.
pub fn random_word<R: Rng>(rng: &mut R, len: usize, pool: &[Letter]) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = *pool.choose(rng).expect("letter pool is empty");
        if letters.last().is_some_and(|p| p.is_inverse_of(l)) {
            continue;
        }
        letters.push(l);
    }
    letters.into_iter().collect()
}

/// A random member `(w_{i,j})^{±1}` of the family with index `i`.
pub fn random_member<R: Rng>(rng: &mut R, params: &Params, i: u32) -> Word {
    let r = relator(params, i).expect("index is positive");
    let rot = r
        .rotate(rng.random_range(0..r.len()))
        .expect("relators are cyclically reduced");
    if rng.random_bool(0.5) {
        rot.inverse()
    } else {
        rot
    }
}

/// Coefficient pool for polynomial sampling: `a_1..a_{k+1}` and `x_1..x_4`.
pub fn coefficient_pool(params: &Params) -> Vec<Letter> {
    let mut pool = a_letters(params.k() + 1);
    pool.extend(x_letters(1..=4));
    pool
}

pub fn random_semigroup_polynomial<R: Rng>(rng: &mut R, pool: &[Letter]) -> SemigroupPolynomial {
    let blocks = rng.random_range(1..=4);
    let coef = |rng: &mut R| {
        let len = rng.random_range(0..=6);
        Term::Coef(random_word(rng, len, pool))
    };
    let mut terms = vec![coef(rng)];
    for _ in 0..blocks {
        terms.push(Term::Var(rng.random_range(1..=3)));
        terms.push(coef(rng));
    }
    SemigroupPolynomial::normalize(terms).expect("exponents are positive")
}

pub fn random_gen<R: Rng>(rng: &mut R, max_index: u32) -> Gen {
    let i = rng.random_range(1..=max_index);
    if rng.random_bool(0.5) {
        Gen::X(i)
    } else {
        Gen::Y(i)
    }
}

/// A raw word of length 1 to 4, normalized (it may collapse to zero).
pub fn random_sword<R: Rng>(rng: &mut R, max_index: u32) -> SWord {
    let len = rng.random_range(1..=4);
    let raw = (0..len).map(|_| random_gen(rng, max_index)).collect();
    crate::zero_monoid::s_normalize(raw).expect("nonempty")
}

/// Up to 3 powers of the variable, possibly at either end.
pub fn random_spolynomial<R: Rng>(rng: &mut R, max_index: u32) -> SPolynomial {
    let blocks = rng.random_range(1..=3);
    let mut terms = Vec::new();
    if rng.random_bool(0.7) {
        terms.push(STerm::Coef(random_sword(rng, max_index)));
    }
    for b in 0..blocks {
        terms.push(STerm::Var(rng.random_range(1..=3)));
        if b + 1 < blocks || rng.random_bool(0.7) {
            terms.push(STerm::Coef(random_sword(rng, max_index)));
        }
    }
    SPolynomial::normalize(terms).expect("nonempty")
}
