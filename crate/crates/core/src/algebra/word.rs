//! Freely reduced words in a free group.
//!
//! A letter is stored as a single byte `2 * g + s` where `g` is the zero-based
//! generator index and `s` is 1 for the inverse letter. Comparing codes
//! therefore realises the letter order `x1 < x1^-1 < x2 < x2^-1 < ...`, and
//! words are ordered shortlex over that alphabet.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Maximal number of generators a letter code can address.
pub const MAX_RANK: usize = 128;

/// A signed letter `x_g^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u8);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        debug_assert!(generator < MAX_RANK);
        Letter((2 * generator + inverse as usize) as u8)
    }

    /// Zero-based generator index.
    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }
}

/// Conventional name of a zero-based generator: `x, y, z` when the rank is
/// at most three, `x1, x2, ...` otherwise.
pub fn generator_name(generator: usize, rank: usize) -> String {
    if rank <= 3 {
        ["x", "y", "z"][generator].to_string()
    } else {
        format!("x{}", generator + 1)
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 14]>);

impl Word {
    pub fn identity() -> Word {
        Word(SmallVec::new())
    }

    pub fn letter(l: Letter) -> Word {
        let mut v = SmallVec::new();
        v.push(l.0);
        Word(v)
    }

    pub fn generator(g: usize) -> Word {
        Word::letter(Letter::new(g, false))
    }

    /// Builds a word from 1-based signed generator indices, freely reducing.
    pub fn from_signed(rank: usize, letters: &[(usize, i8)]) -> Result<Word> {
        let mut w = Word::identity();
        for &(i, s) in letters {
            if i == 0 || i > rank {
                return Err(Error::InvalidWord(format!(
                    "generator index {i} outside 1..={rank}"
                )));
            }
            let l = match s {
                1 => Letter::new(i - 1, false),
                -1 => Letter::new(i - 1, true),
                _ => return Err(Error::InvalidWord(format!("exponent sign {s}"))),
            };
            w.push(l);
        }
        Ok(w)
    }

    /// Builds a word from letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter with free reduction.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse().0) {
            self.0.pop();
        } else {
            self.0.push(l.0);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn codes(&self) -> &[u8] {
        &self.0
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.0.iter().map(|&c| Letter(c))
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().map(|&c| Letter(c))
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().map(|&c| Letter(c))
    }

    /// Largest generator index occurring, plus one.
    pub fn min_rank(&self) -> usize {
        self.letters().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    /// Group product with free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k] ^ 1 {
            k += 1;
        }
        let mut v: SmallVec<[u8; 14]> = SmallVec::with_capacity(a.len() + b.len() - 2 * k);
        v.extend_from_slice(&a[..a.len() - k]);
        v.extend_from_slice(&b[k..]);
        Word(v)
    }

    /// Length of cancellation in the product `self * other`.
    pub fn cancellation(&self, other: &Word) -> usize {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k] ^ 1 {
            k += 1;
        }
        k
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|c| c ^ 1).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn has_prefix(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// The word `w'` with `self = prefix * w'` (no cancellation).
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if self.has_prefix(prefix) {
            Some(Word(SmallVec::from_slice(&self.0[prefix.len()..])))
        } else {
            None
        }
    }

    /// The prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[..n]))
    }

    /// The suffix starting at position `n`.
    pub fn suffix(&self, n: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[n..]))
    }

    /// Cyclic reduction: strips conjugating letters.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.0;
        let mut i = 0;
        let mut j = s.len();
        while j > i + 1 && s[i] == s[j - 1] ^ 1 {
            i += 1;
            j -= 1;
        }
        Word(SmallVec::from_slice(&s[i..j]))
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.min_rank() > rank {
            return Err(Error::RankMismatch(self.min_rank(), rank));
        }
        Ok(())
    }

    /// Canonical text form, e.g. `x*y^-1*x^2`; the identity prints as `1`.
    pub fn display(&self, rank: usize) -> WordDisplay<'_> {
        WordDisplay { word: self, rank }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    rank: usize,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        let codes = self.word.codes();
        let mut i = 0;
        while i < codes.len() {
            let c = codes[i];
            let mut j = i;
            while j < codes.len() && codes[j] == c {
                j += 1;
            }
            let l = Letter(c);
            let exp = (j - i) as i64 * if l.is_inverse() { -1 } else { 1 };
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", generator_name(l.generator(), self.rank))?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Compares two finite supports given as ascending word slices: the larger
/// set is the one holding the maximal element of the symmetric difference.
pub fn support_compare(a: &[&Word], b: &[&Word]) -> Ordering {
    let mut ia = a.iter().rev().peekable();
    let mut ib = b.iter().rev().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Equal => {
                    ia.next();
                    ib.next();
                }
                o => return o,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[(usize, i8)]) -> Word {
        Word::from_signed(2, s).unwrap()
    }

    #[test]
    fn free_reduction() {
        let x = w(&[(1, 1)]);
        let y = w(&[(2, 1)]);
        assert_eq!(x.mul(&y.mul(&y.inverse())), x);
        assert!(x.mul(&x.inverse()).is_identity());
        let xy = w(&[(1, 1), (2, 1)]);
        let yix = w(&[(2, -1), (1, 1)]);
        assert_eq!(xy.mul(&yix), x.pow(2));
        assert_eq!(xy.cancellation(&yix), 1);
    }

    #[test]
    fn inverses() {
        assert!(Word::identity().inverse().is_identity());
        assert_eq!(w(&[(1, 1), (2, -1)]).inverse(), w(&[(2, 1), (1, -1)]));
        assert_eq!(w(&[(1, 1), (1, 1)]).inverse(), w(&[(1, -1), (1, -1)]));
    }

    #[test]
    fn shortlex() {
        let x = w(&[(1, 1)]);
        let xi = w(&[(1, -1)]);
        let y = w(&[(2, 1)]);
        assert!(Word::identity() < x);
        assert!(x < xi);
        assert!(xi < y);
        assert!(w(&[(1, 1), (1, 1)]) < w(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn printing() {
        let word = w(&[(1, 1), (2, -1), (1, 1), (1, 1)]);
        assert_eq!(word.display(2).to_string(), "x*y^-1*x^2");
        assert_eq!(Word::identity().display(2).to_string(), "1");
        assert_eq!(Word::generator(3).display(5).to_string(), "x4");
    }

    #[test]
    fn supports() {
        let e = Word::identity();
        let x = Word::generator(0);
        let y = Word::generator(1);
        assert_eq!(support_compare(&[], &[&x]), Ordering::Less);
        assert_eq!(support_compare(&[&x], &[&x]), Ordering::Equal);
        assert_eq!(support_compare(&[&e, &x], &[&y]), Ordering::Less);
        assert_eq!(support_compare(&[&e, &y], &[&y]), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(Word::from_signed(2, &[(3, 1)]).is_err());
        assert!(Word::from_signed(2, &[(0, 1)]).is_err());
        assert!(Word::from_signed(2, &[(1, 2)]).is_err());
    }

    #[test]
    fn cyclic_reduction() {
        let word = w(&[(2, 1), (1, 1), (1, 1), (2, -1)]);
        assert_eq!(word.cyclically_reduced(), w(&[(1, 1), (1, 1)]));
    }
}
