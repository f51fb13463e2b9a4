//! Subgroups of the free group and their augmentation ideals.
//!
//! Freeness and algebraicity of subgroup extensions are decided in the
//! group algebra: `H ≤_* H'` exactly when `J_H ≤_* J_H'`, where `J_H` is the
//! right ideal generated by `h - 1`. The algebraic closure of `J_H` in
//! `J_H'` is again an augmentation ideal, whose canonical basis consists of
//! binomials `u - v` with `u·v^-1` a basis of the closure subgroup.

mod core_graph;
mod whitehead;

use std::fmt;

pub use core_graph::CoreGraph;
pub use whitehead::{whitehead_primitivity_oracle, ORACLE_MAX_LENGTH, ORACLE_MAX_RANK};

use crate::algebra::{AlgebraElement, Field, Word};
use crate::duality::algebraic_closure;
use crate::error::{Error, Result};
use crate::module::{module_basis, Submodule};

/// Default coefficient field for the group algorithms.
pub const GROUP_FIELD: Field = Field::Prime(2);

/// A finitely generated subgroup of the free group of rank `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    rank: usize,
    gens: Vec<Word>,
}

impl Subgroup {
    pub fn new(rank: usize, gens: Vec<Word>) -> Result<Self> {
        for g in &gens {
            g.check_rank(rank)?;
        }
        Ok(Subgroup { rank, gens })
    }

    /// The whole free group with its standard basis.
    pub fn whole(rank: usize) -> Self {
        Subgroup {
            rank,
            gens: (0..rank).map(Word::generator).collect(),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Subgroup {
            rank,
            gens: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Word] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Word::is_identity)
    }

    fn check_peer(&self, other: &Subgroup) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(self.rank))?;
        }
        write!(f, ">")
    }
}

pub fn core_graph(h: &Subgroup) -> CoreGraph {
    CoreGraph::from_words(&h.gens)
}

pub fn subgroup_membership(h: &Subgroup, w: &Word) -> Result<bool> {
    w.check_rank(h.rank)?;
    Ok(core_graph(h).accepts(w))
}

/// Whether `h ≤ h2`.
pub fn subgroup_contains(h2: &Subgroup, h: &Subgroup) -> Result<bool> {
    h.check_peer(h2)?;
    let g = core_graph(h2);
    Ok(h.gens.iter().all(|w| g.accepts(w)))
}

pub fn subgroup_equal(a: &Subgroup, b: &Subgroup) -> Result<bool> {
    Ok(subgroup_contains(a, b)? && subgroup_contains(b, a)?)
}

pub fn subgroup_rank(h: &Subgroup) -> usize {
    core_graph(h).rank()
}

/// The right ideal `J_H` generated by `h - 1` over `field`.
pub fn augmentation_generators(h: &Subgroup, field: Field) -> Result<Submodule> {
    let gens = h
        .gens
        .iter()
        .map(|w| AlgebraElement::word_minus(field, h.rank, w, &field.one()))
        .collect();
    Submodule::ideal(field, h.rank, gens)
}

/// Reads `u·v^-1` off a monic binomial `u - v`.
fn binomial_word(e: &AlgebraElement) -> Result<Word> {
    let terms: Vec<_> = e.terms().collect();
    let minus_one = e.field().one().neg();
    match terms.as_slice() {
        [(v, cv), (u, cu)] if cu.is_one() && **cv == minus_one => Ok(u.mul(&v.inverse())),
        _ => Err(Error::NonBinomial(e.to_string())),
    }
}

/// The algebraic closure of `h` in `h2` over the default field.
pub fn group_algebraic_closure(h: &Subgroup, h2: &Subgroup) -> Result<Subgroup> {
    group_algebraic_closure_over(h, h2, GROUP_FIELD)
}

/// The unique `L` with `H ≤_alg L ≤_* H'`, computed in
/// the group algebra over `field`.
pub fn group_algebraic_closure_over(h: &Subgroup, h2: &Subgroup, field: Field) -> Result<Subgroup> {
    if !subgroup_contains(h2, h)? {
        return Err(Error::NotContained(format!(
            "{h} is not a subgroup of {h2}"
        )));
    }
    if h.is_trivial() {
        return Ok(Subgroup::trivial(h.rank));
    }
    let jh = augmentation_generators(h, field)?;
    let jh2 = augmentation_generators(h2, field)?;
    let closure = algebraic_closure(&jh, &jh2)?;
    let gens = module_basis(&closure)?
        .iter()
        .map(|v| binomial_word(v.get(0)))
        .collect::<Result<Vec<_>>>()?;
    Subgroup::new(h.rank, gens)
}

pub fn group_is_algebraic(h: &Subgroup, h2: &Subgroup) -> Result<bool> {
    subgroup_equal(&group_algebraic_closure(h, h2)?, h2)
}

pub fn group_is_free_factor(h: &Subgroup, h2: &Subgroup) -> Result<bool> {
    subgroup_equal(&group_algebraic_closure(h, h2)?, h)
}

/// Whether `w` belongs to some basis of `h2`.
pub fn word_is_primitive(w: &Word, h2: &Subgroup) -> Result<bool> {
    if w.is_identity() {
        return Err(Error::InvalidArgument(
            "the identity is never primitive".into(),
        ));
    }
    if !subgroup_membership(h2, w)? {
        return Err(Error::NotContained(format!(
            "{} is not in {h2}",
            w.display(h2.rank)
        )));
    }
    group_is_free_factor(&Subgroup::new(h2.rank, vec![w.clone()])?, h2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::module_rank;

    fn w(s: &[(usize, i8)]) -> Word {
        Word::from_signed(2, s).unwrap()
    }

    fn sub(gens: &[&[(usize, i8)]]) -> Subgroup {
        Subgroup::new(2, gens.iter().map(|g| w(g)).collect()).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let h = sub(&[&[(1, 1), (1, 1)], &[(2, 1)]]);
        assert!(subgroup_membership(&h, &w(&[(1, 1), (1, 1)])).unwrap());
        assert!(!subgroup_membership(&h, &w(&[(1, 1)])).unwrap());
        let a = sub(&[&[(1, 1)], &[(2, 1)]]);
        let b = sub(&[&[(1, 1), (2, 1)], &[(2, 1)]]);
        assert!(subgroup_equal(&a, &b).unwrap());
        assert_eq!(subgroup_rank(&h), 2);
    }

    #[test]
    fn cohen_rank() {
        let h = sub(&[&[(1, 1), (1, 1)], &[(2, 1)], &[(1, 1), (2, 1), (1, 1)]]);
        let j = augmentation_generators(&h, GROUP_FIELD).unwrap();
        assert_eq!(module_rank(&j).unwrap(), subgroup_rank(&h));
        assert_eq!(subgroup_rank(&h), 3);
        let whole = augmentation_generators(&Subgroup::whole(2), GROUP_FIELD).unwrap();
        assert_eq!(module_rank(&whole).unwrap(), 2);
        let triv = augmentation_generators(&Subgroup::trivial(2), GROUP_FIELD).unwrap();
        assert_eq!(module_rank(&triv).unwrap(), 0);
    }

    #[test]
    fn closures() {
        let f2 = Subgroup::whole(2);
        let c = group_algebraic_closure(&sub(&[&[(1, 1), (1, 1)]]), &f2).unwrap();
        assert!(subgroup_equal(&c, &sub(&[&[(1, 1)]])).unwrap());
        let c = group_algebraic_closure(&sub(&[&[(1, 1)]]), &f2).unwrap();
        assert!(subgroup_equal(&c, &sub(&[&[(1, 1)]])).unwrap());
        let comm = sub(&[&[(1, 1), (2, 1), (1, -1), (2, -1)]]);
        let c = group_algebraic_closure(&comm, &f2).unwrap();
        assert!(subgroup_equal(&c, &f2).unwrap());
        let c3 = group_algebraic_closure_over(&comm, &f2, Field::Prime(3)).unwrap();
        assert!(subgroup_equal(&c3, &f2).unwrap());
        assert!(group_algebraic_closure(&f2, &sub(&[&[(1, 1)]])).is_err());
        assert!(group_algebraic_closure(&Subgroup::trivial(2), &f2)
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn predicates() {
        let f2 = Subgroup::whole(2);
        assert!(group_is_free_factor(&sub(&[&[(1, 1)]]), &f2).unwrap());
        assert!(!word_is_primitive(&w(&[(1, 1), (2, 1), (1, -1), (2, -1)]), &f2).unwrap());
        assert!(word_is_primitive(&w(&[(1, 1), (2, 1)]), &f2).unwrap());
        assert!(group_is_algebraic(&sub(&[&[(1, 1), (1, 1)], &[(2, 1)]]), &f2).unwrap());
        assert!(word_is_primitive(&Word::identity(), &f2).is_err());
    }
}
