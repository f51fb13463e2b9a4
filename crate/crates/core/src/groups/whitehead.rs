//! Brute-force primitivity test by Whitehead length reduction.
//!
//! Used as an independent oracle in tests. Inputs are limited to free rank
//! at most 3 and words of length at most 10.

use crate::algebra::{Letter, Word};
use crate::error::{Error, Result};

pub const ORACLE_MAX_RANK: usize = 3;
pub const ORACLE_MAX_LENGTH: usize = 10;

/// Image of `w` under the Whitehead automorphism `(A, a)`; `in_a` marks the
/// letter codes in `A`, which contains `a` and not `a^-1`.
fn apply(w: &Word, in_a: &[bool], a: Letter) -> Word {
    let mut out = Word::identity();
    let ai = a.inverse();
    for l in w.letters() {
        if l.generator() == a.generator() {
            out.push(l);
            continue;
        }
        // For a positive letter x: x ↦ [a^-1 if x^-1 ∈ A] x [a if x ∈ A].
        let x = Letter::new(l.generator(), false);
        let right = in_a[x.0 as usize];
        let left = in_a[x.inverse().0 as usize];
        let img = if l.is_inverse() {
            // Inverse of the image of x.
            let mut v = Vec::new();
            if right {
                v.push(ai);
            }
            v.push(l);
            if left {
                v.push(a);
            }
            v
        } else {
            let mut v = Vec::new();
            if left {
                v.push(ai);
            }
            v.push(l);
            if right {
                v.push(a);
            }
            v
        };
        for m in img {
            out.push(m);
        }
    }
    out
}

/// Whether `w` is primitive in the free group of rank `rank`.
pub fn whitehead_primitivity_oracle(w: &Word, rank: usize) -> Result<bool> {
    if rank > ORACLE_MAX_RANK || w.len() > ORACLE_MAX_LENGTH {
        return Err(Error::BudgetExceeded {
            needed: w.len().max(rank) as u128,
            budget: ORACLE_MAX_LENGTH as u128,
        });
    }
    w.check_rank(rank)?;
    if w.is_identity() {
        return Err(Error::InvalidArgument(
            "the identity is never primitive".into(),
        ));
    }
    let mut cur = w.cyclically_reduced();
    let letters = 2 * rank;
    'outer: while cur.len() > 1 {
        for a in 0..letters as u8 {
            let a = Letter(a);
            let others: Vec<u8> = (0..letters as u8).filter(|&c| c >> 1 != a.0 >> 1).collect();
            for mask in 0u32..(1 << others.len()) {
                let mut in_a = vec![false; letters];
                in_a[a.0 as usize] = true;
                for (i, &c) in others.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        in_a[c as usize] = true;
                    }
                }
                let img = apply(&cur, &in_a, a).cyclically_reduced();
                if img.len() < cur.len() {
                    cur = img;
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[(usize, i8)]) -> Word {
        Word::from_signed(2, s).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(whitehead_primitivity_oracle(&w(&[(1, 1)]), 2).unwrap());
        assert!(whitehead_primitivity_oracle(&w(&[(1, 1), (2, 1)]), 2).unwrap());
        assert!(!whitehead_primitivity_oracle(&w(&[(1, 1), (1, 1)]), 2).unwrap());
        assert!(!whitehead_primitivity_oracle(&w(&[(1, 1), (2, 1), (1, -1), (2, -1)]), 2).unwrap());
        assert!(whitehead_primitivity_oracle(&w(&[(1, 1), (1, 1), (2, 1)]), 2).unwrap());
        assert!(!whitehead_primitivity_oracle(&w(&[(1, 1), (1, 1), (2, 1), (2, 1)]), 2).unwrap());
        assert!(whitehead_primitivity_oracle(&Word::identity(), 2).is_err());
        assert!(whitehead_primitivity_oracle(&Word::generator(0), 4).is_err());
    }

    #[test]
    fn automorphism_images_of_a_generator_are_primitive() {
        let x = w(&[(1, 1)]);
        let y = w(&[(2, 1)]);
        let img = x.mul(&y).mul(&x).mul(&y).mul(&x);
        assert!(whitehead_primitivity_oracle(&img, 2).unwrap());
        let conj = y.mul(&x.mul(&y)).mul(&y.inverse());
        assert!(whitehead_primitivity_oracle(&conj, 2).unwrap());
    }
}
