//! Intersections of submodules of K[F]^k.
//!
//! With `v` the row of embedded generators of M followed by those of N,
//! `u` the canonical basis of the sum, `vA = u` tracked through completion
//! and `uB = v` obtained by coefficient extraction, the entries of
//! `vP(I - AB)` generate the intersection, where `P` keeps the M-part.

use crate::algebra::{AlgebraElement, AlgebraMatrix};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerData, GroebnerOptions};
use crate::module::{embed_vector, unembed_vector, Submodule};

/// A generating set for `m ∩ n`, zero generators dropped.
pub fn module_intersection(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    if m.ambient_k() != n.ambient_k() {
        return Err(Error::DimensionMismatch(format!(
            "K[F]^{} vs K[F]^{}",
            m.ambient_k(),
            n.ambient_k()
        )));
    }
    if m.field() != n.field() {
        return Err(Error::FieldMismatch(
            m.field().to_string(),
            n.field().to_string(),
        ));
    }
    if m.free_rank() != n.free_rank() {
        return Err(Error::RankMismatch(m.free_rank(), n.free_rank()));
    }
    let (field, rank, k) = (m.field(), m.free_rank(), m.ambient_k());
    let v = m
        .gens()
        .iter()
        .chain(n.gens())
        .map(embed_vector)
        .collect::<Result<Vec<_>>>()?;
    if v.is_empty() {
        return Submodule::zero(field, rank, k);
    }
    let sum = GroebnerData::compute(field, rank, &v, &GroebnerOptions::tracked())?;
    let a = sum.transform().expect("tracked completion");
    let u = sum.firsts();
    debug_assert_eq!(a.row_times(&v)?, u.to_vec(), "vA = u violated");

    let mut b = AlgebraMatrix::zero(field, rank, u.len(), v.len());
    for (j, vj) in v.iter().enumerate() {
        let (coeffs, rem) = sum.extract_coefficients(vj)?;
        debug_assert!(rem.is_zero());
        for (i, c) in coeffs.into_iter().enumerate() {
            b.set(i, j, c);
        }
    }
    debug_assert_eq!(b.row_times(u)?, v, "uB = v violated");

    let zero = AlgebraElement::zero(field, rank);
    let vp: Vec<AlgebraElement> = v
        .iter()
        .enumerate()
        .map(|(i, e)| {
            if i < m.gens().len() {
                e.clone()
            } else {
                zero.clone()
            }
        })
        .collect();
    let vpab = b.row_times(&a.row_times(&vp)?)?;
    let gens = vp
        .iter()
        .zip(&vpab)
        .map(|(x, y)| x - y)
        .filter(|h| !h.is_zero())
        .map(|h| unembed_vector(&h, k))
        .collect::<Result<Vec<_>>>()?;
    Submodule::new(field, rank, k, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraVector, Field, Word};
    use crate::module::{module_contains, module_equal, module_membership};

    fn wm(field: Field, s: &[(usize, i8)]) -> AlgebraElement {
        AlgebraElement::word_minus(field, 2, &Word::from_signed(2, s).unwrap(), &field.one())
    }

    #[test]
    fn self_and_subset() {
        let f = Field::Prime(2);
        let m = Submodule::ideal(f, 2, vec![wm(f, &[(1, 1)])]).unwrap();
        let whole = Submodule::whole(f, 2, 1).unwrap();
        assert!(module_equal(&module_intersection(&m, &m).unwrap(), &m).unwrap());
        assert!(module_equal(&module_intersection(&m, &whole).unwrap(), &m).unwrap());
    }

    #[test]
    fn principal_ideals() {
        let f = Field::Rational;
        let a = wm(f, &[(1, 1)]);
        let b = wm(f, &[(2, 1)]);
        let m = Submodule::ideal(f, 2, vec![a.clone()]).unwrap();
        let n = Submodule::ideal(f, 2, vec![b.clone()]).unwrap();
        let i = module_intersection(&m, &n).unwrap();
        assert!(module_contains(&m, &i).unwrap());
        assert!(module_contains(&n, &i).unwrap());
        assert!(!module_membership(&i, &AlgebraVector::single(a)).unwrap());
    }

    #[test]
    fn vectors() {
        let f = Field::Prime(3);
        let one = AlgebraElement::one(f, 2);
        let zero = AlgebraElement::zero(f, 2);
        let x1 = wm(f, &[(1, 1)]);
        let m = Submodule::new(
            f,
            2,
            2,
            vec![AlgebraVector::new(vec![one.clone(), zero.clone()]).unwrap()],
        )
        .unwrap();
        let n = Submodule::new(
            f,
            2,
            2,
            vec![
                AlgebraVector::new(vec![x1.clone(), x1.clone()]).unwrap(),
                AlgebraVector::new(vec![zero.clone(), one.clone()]).unwrap(),
            ],
        )
        .unwrap();
        let i = module_intersection(&m, &n).unwrap();
        let expect =
            Submodule::new(f, 2, 2, vec![AlgebraVector::new(vec![x1, zero]).unwrap()]).unwrap();
        assert!(module_equal(&i, &expect).unwrap());
    }
}
