//! Shared generators for the integration suites.
#![allow(dead_code)]

use fga::algebra::Letter;
use fga::{AlgebraElement, AlgebraVector, Field, Word};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5))))
}

/// Reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Word {
    let mut w = Word::identity();
    while w.len() < len {
        w.push(Letter::new(rng.gen_range(0..rank), rng.gen_bool(0.5)));
    }
    w
}

pub fn random_element<R: Rng>(
    rng: &mut R,
    field: Field,
    rank: usize,
    terms: usize,
    max_len: usize,
) -> AlgebraElement {
    let mut e = AlgebraElement::zero(field, rank);
    for _ in 0..terms {
        let c = field.from_i64(rng.gen_range(-3..=3));
        e.add_term(random_word(rng, rank, max_len), &c);
    }
    e
}

pub fn random_nonzero<R: Rng>(
    rng: &mut R,
    field: Field,
    rank: usize,
    terms: usize,
    max_len: usize,
) -> AlgebraElement {
    loop {
        let e = random_element(rng, field, rank, terms, max_len);
        if !e.is_zero() {
            return e;
        }
    }
}

/// `w - 1` for a random nontrivial word.
pub fn random_binomial<R: Rng>(
    rng: &mut R,
    field: Field,
    rank: usize,
    max_len: usize,
) -> AlgebraElement {
    loop {
        let w = random_word(rng, rank, max_len);
        if !w.is_identity() {
            return AlgebraElement::word_minus(field, rank, &w, &field.one());
        }
    }
}

pub fn random_vector<R: Rng>(
    rng: &mut R,
    field: Field,
    rank: usize,
    k: usize,
    terms: usize,
    max_len: usize,
) -> AlgebraVector {
    AlgebraVector::new(
        (0..k)
            .map(|_| random_element(rng, field, rank, terms, max_len))
            .collect(),
    )
    .unwrap()
}

pub fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
}

pub fn element_strategy(
    field: Field,
    rank: usize,
    terms: usize,
    max_len: usize,
) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((word_strategy(rank, max_len), -3i64..=3), 0..=terms).prop_map(
        move |ts| {
            let mut e = AlgebraElement::zero(field, rank);
            for (w, c) in ts {
                e.add_term(w, &field.from_i64(c));
            }
            e
        },
    )
}

pub fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(5)),
        Just(Field::Rational)
    ]
}
