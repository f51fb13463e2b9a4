use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::field::{Field, Scalar};
use super::word::Word;

/// An element of the free group algebra K[F]: a finite sparse sum of words
/// with nonzero coefficients. Terms are keyed by [`Word`] so the leading
/// power product is the last key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: Field,
    rank: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: Field, rank: usize) -> Self {
        AlgebraElement {
            field,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, rank: usize) -> Self {
        Self::from_word(field, rank, Word::identity())
    }

    pub fn from_word(field: Field, rank: usize, w: Word) -> Self {
        Self::monomial(field, rank, field.one(), w)
    }

    pub fn scalar(field: Field, rank: usize, c: Scalar) -> Self {
        Self::monomial(field, rank, c, Word::identity())
    }

    pub fn monomial(field: Field, rank: usize, c: Scalar, w: Word) -> Self {
        debug_assert_eq!(c.field(), field);
        debug_assert!(w.min_rank() <= rank);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        AlgebraElement { field, rank, terms }
    }

    /// Collects terms, summing repeated words and validating letters and
    /// scalars against `field` and `rank`.
    pub fn from_terms<I>(field: Field, rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut out = Self::zero(field, rank);
        for (w, c) in terms {
            w.check_rank(rank)?;
            if c.field() != field {
                return Err(Error::FieldMismatch(
                    c.field().to_string(),
                    field.to_string(),
                ));
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    /// `w - λ`.
    pub fn word_minus(field: Field, rank: usize, w: &Word, lambda: &Scalar) -> Self {
        let mut out = Self::from_word(field, rank, w.clone());
        out.add_term(Word::identity(), &lambda.neg());
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn support(&self) -> Vec<&Word> {
        self.terms.keys().collect()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Leading power product: the maximal word of the support.
    pub fn lpp(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(Scalar::is_one)
    }

    pub fn make_monic(&self) -> Result<Self> {
        let c = self.leading_coefficient().ok_or(Error::ZeroElement)?;
        Ok(self.scale(&c.inv()?))
    }

    /// `(c, w)` when the element is a single term `c·w`, i.e. a unit.
    pub fn as_unit(&self) -> Option<(&Scalar, &Word)> {
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().unwrap();
            Some((c, w))
        } else {
            None
        }
    }

    /// Inverse of a unit `c·w`.
    pub fn unit_inverse(&self) -> Result<Self> {
        let (c, w) = self
            .as_unit()
            .ok_or_else(|| Error::NotUnit(self.to_string()))?;
        Ok(Self::monomial(self.field, self.rank, c.inv()?, w.inverse()))
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// Adds `c·w`, pruning a zero result.
    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · g · w`.
    pub fn add_scaled_mul_word(&mut self, c: &Scalar, g: &Self, w: &Word) {
        for (u, a) in &g.terms {
            self.add_term(u.mul(w), &a.mul(c));
        }
    }

    /// `self += c · w · g`.
    pub fn add_scaled_word_mul(&mut self, c: &Scalar, w: &Word, g: &Self) {
        for (u, a) in &g.terms {
            self.add_term(w.mul(u), &a.mul(c));
        }
    }

    /// `self += a · b`.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        for (u, ca) in &a.terms {
            for (v, cb) in &b.terms {
                self.add_term(u.mul(v), &ca.mul(cb));
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.rank);
        }
        AlgebraElement {
            field: self.field,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Right multiplication by a word.
    pub fn mul_word(&self, w: &Word) -> Self {
        let mut out = Self::zero(self.field, self.rank);
        out.add_scaled_mul_word(&self.field.one(), self, w);
        out
    }

    /// Left multiplication by a word.
    pub fn word_mul(&self, w: &Word) -> Self {
        let mut out = Self::zero(self.field, self.rank);
        out.add_scaled_word_mul(&self.field.one(), w, self);
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.field, self.rank);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The K-linear extension of `u ↦ u^{-1}`.
    pub fn iota(&self) -> Self {
        AlgebraElement {
            field: self.field,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.inverse(), a.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> Scalar {
        self.terms
            .values()
            .fold(self.field.zero(), |acc, c| acc.add(c))
    }

    /// Widest word length in the support.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            self.field == rhs.field && self.rank == rhs.rank,
            "incompatible elements"
        );
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            self.field == rhs.field && self.rank == rhs.rank,
            "incompatible elements"
        );
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&self.field.from_i64(-1))
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert!(
            self.field == rhs.field && self.rank == rhs.rank,
            "incompatible elements"
        );
        let mut out = AlgebraElement::zero(self.field, self.rank);
        out.add_product(self, rhs);
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_printed_negative();
            let mag = if negative { c.neg() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", w.display(self.rank))?;
            } else {
                write!(f, "{mag}*{}", w.display(self.rank))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Word {
        Word::generator(0)
    }

    fn y() -> Word {
        Word::generator(1)
    }

    fn el(field: Field, terms: &[(i64, Word)]) -> AlgebraElement {
        AlgebraElement::from_terms(
            field,
            2,
            terms.iter().map(|(c, w)| (w.clone(), field.from_i64(*c))),
        )
        .unwrap()
    }

    #[test]
    fn cube_factorization() {
        let q = Field::Rational;
        let a = el(q, &[(1, x()), (-1, Word::identity())]);
        let b = el(q, &[(1, x().pow(2)), (1, x()), (1, Word::identity())]);
        let prod = &a * &b;
        assert_eq!(prod, el(q, &[(1, x().pow(3)), (-1, Word::identity())]));
        assert_eq!(prod.to_string(), "x^3 - 1");
        assert_eq!(prod.lpp(), Some(&x().pow(3)));
    }

    #[test]
    fn commutator_expansion() {
        let q = Field::Rational;
        let e = Word::identity();
        let xi = x().inverse();
        let yi = y().inverse();
        let lhs1 = el(q, &[(1, x()), (-1, e.clone())]);
        let rhs1 = el(q, &[(1, y().mul(&xi).mul(&yi)), (-1, xi.mul(&yi))]);
        let lhs2 = el(q, &[(1, y()), (-1, e.clone())]);
        let rhs2 = el(q, &[(1, xi.mul(&yi)), (-1, yi.clone())]);
        let total = &(&lhs1 * &rhs1) + &(&lhs2 * &rhs2);
        let w = x().mul(&y()).mul(&xi).mul(&yi);
        assert_eq!(total, el(q, &[(1, w), (-1, e)]));
    }

    #[test]
    fn monic_and_zero() {
        let f3 = Field::Prime(3);
        let f = el(f3, &[(2, x()), (-2, Word::identity())]);
        let m = f.make_monic().unwrap();
        assert_eq!(m, el(f3, &[(1, x()), (-1, Word::identity())]));
        assert!(m.is_monic());
        let z = AlgebraElement::zero(f3, 2);
        assert_eq!(z.make_monic(), Err(Error::ZeroElement));
        assert!(z.lpp().is_none());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn iota_and_augmentation() {
        let q = Field::Rational;
        let w = x().mul(&y());
        let f = AlgebraElement::word_minus(q, 2, &w, &q.from_i64(3));
        assert_eq!(
            f.iota(),
            AlgebraElement::word_minus(q, 2, &w.inverse(), &q.from_i64(3))
        );
        assert_eq!(AlgebraElement::one(q, 2).iota(), AlgebraElement::one(q, 2));
        assert!(el(q, &[(1, x()), (-1, Word::identity())])
            .augmentation()
            .is_zero());
        assert!(AlgebraElement::one(q, 2).augmentation().is_one());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = AlgebraElement::one(Field::Rational, 2);
        let b = AlgebraElement::one(Field::Prime(2), 2);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        let c = AlgebraElement::one(Field::Rational, 3);
        assert!(matches!(a.checked_mul(&c), Err(Error::RankMismatch(2, 3))));
    }

    #[test]
    fn printing_signs() {
        let q = Field::Rational;
        let f = el(q, &[(-2, x()), (1, y()), (-1, Word::identity())]);
        assert_eq!(f.to_string(), "y - 2*x - 1");
        let g = el(Field::Prime(2), &[(1, x()), (1, Word::identity())]);
        assert_eq!(g.to_string(), "x + 1");
    }
}
