//! Matrix-induced duality between column and row extensions.
//!
//! Left modules are never stored. The dual of `M ≤ K[F]^k` with respect to
//! a `k × m` matrix `Q` is a left submodule of K[F]^m, represented here by
//! its image under ι as a right submodule.

use crate::algebra::{AlgebraElement, AlgebraMatrix, AlgebraVector, Scalar, Word};
use crate::error::{Error, Result};
use crate::module::{
    express_in_basis, module_contains, module_equal, module_membership, Submodule,
};

/// ι-image of the `Q`-dual of `m`, a right submodule of K[F]^cols(Q).
///
/// Every column of `q` must lie in `m`. The columns of `q` are expressed in
/// the canonical basis of `m`, giving `G` with `Q = B·G`, and the result is
/// spanned by the columns of ι(G).
pub fn q_dual(q: &AlgebraMatrix, m: &Submodule) -> Result<Submodule> {
    if q.rows() != m.ambient_k() {
        return Err(Error::DimensionMismatch(format!(
            "matrix with {} rows against K[F]^{}",
            q.rows(),
            m.ambient_k()
        )));
    }
    if q.field() != m.field() {
        return Err(Error::FieldMismatch(
            q.field().to_string(),
            m.field().to_string(),
        ));
    }
    if q.rank() != m.free_rank() {
        return Err(Error::RankMismatch(q.rank(), m.free_rank()));
    }
    let (field, rank) = (q.field(), q.rank());
    let mut columns = Vec::with_capacity(q.cols());
    for col in q.columns() {
        match express_in_basis(m, &col) {
            Ok(c) => columns.push(c),
            Err(Error::NotMember(s)) => {
                return Err(Error::NotContained(format!("column {s} of Q is not in M")))
            }
            Err(e) => return Err(e),
        }
    }
    let t = columns.first().map_or(0, Vec::len);
    // G is t × cols(Q); ι(G) is cols(Q) × t and its columns are the rows of G, inverted.
    let gens = (0..t)
        .map(|i| AlgebraVector::new(columns.iter().map(|c| c[i].iota()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Submodule::new(field, rank, q.cols(), gens)
}

fn require_contained(m: &Submodule, n: &Submodule) -> Result<()> {
    if !module_contains(n, m)? {
        return Err(Error::NotContained("M is not a submodule of N".into()));
    }
    Ok(())
}

/// The algebraic closure of `m` in `n`: the unique `L` with
/// `M ≤_alg L ≤_* N`, computed as the double dual.
pub fn algebraic_closure(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    require_contained(m, n)?;
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let q = m.generator_matrix();
    let dual = q_dual(&q, n)?;
    q_dual(&q.iota(), &dual)
}

/// Whether `n` is an algebraic extension of `m`.
pub fn is_algebraic(m: &Submodule, n: &Submodule) -> Result<bool> {
    module_equal(&algebraic_closure(m, n)?, n)
}

/// Whether `m` is a free factor of `n`.
pub fn is_free_factor(m: &Submodule, n: &Submodule) -> Result<bool> {
    module_equal(&algebraic_closure(m, n)?, m)
}

/// Whether `f` belongs to some basis of `n`.
pub fn is_primitive(f: &AlgebraVector, n: &Submodule) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !module_membership(n, f)? {
        return Err(Error::NotContained(format!("{f} is not in N")));
    }
    let m = Submodule::new(n.field(), n.free_rank(), n.ambient_k(), vec![f.clone()])?;
    is_free_factor(&m, n)
}

/// ι-image of the dual of the right ideal `j` with respect to the 1×1
/// matrix `(w − λ)`.
pub fn dual_wrt_word(w: &Word, lambda: &Scalar, j: &Submodule) -> Result<Submodule> {
    if j.ambient_k() != 1 {
        return Err(Error::DimensionMismatch("expected a right ideal".into()));
    }
    if lambda.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if lambda.field() != j.field() {
        return Err(Error::FieldMismatch(
            lambda.field().to_string(),
            j.field().to_string(),
        ));
    }
    w.check_rank(j.free_rank())?;
    let f = AlgebraElement::word_minus(j.field(), j.free_rank(), w, lambda);
    let q = AlgebraMatrix::from_rows(j.field(), j.free_rank(), vec![vec![f]])?;
    q_dual(&q, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::module::module_rank;

    fn w(s: &[(usize, i8)]) -> Word {
        Word::from_signed(2, s).unwrap()
    }

    fn wm(field: Field, word: Word) -> AlgebraElement {
        AlgebraElement::word_minus(field, 2, &word, &field.one())
    }

    fn commutator() -> Word {
        w(&[(1, 1), (2, 1), (1, -1), (2, -1)])
    }

    #[test]
    fn augmentation_example() {
        for field in [Field::Prime(2), Field::Rational] {
            let x1 = wm(field, w(&[(1, 1)]));
            let y1 = wm(field, w(&[(2, 1)]));
            let q =
                AlgebraMatrix::from_rows(field, 2, vec![vec![x1.clone(), x1.clone(), y1.clone()]])
                    .unwrap();
            let aug = Submodule::ideal(field, 2, vec![x1, y1]).unwrap();
            let d = q_dual(&q, &aug).unwrap();
            let one = AlgebraElement::one(field, 2);
            let zero = AlgebraElement::zero(field, 2);
            let expect = Submodule::new(
                field,
                2,
                3,
                vec![
                    AlgebraVector::new(vec![one.clone(), one.clone(), zero.clone()]).unwrap(),
                    AlgebraVector::new(vec![zero.clone(), zero, one]).unwrap(),
                ],
            )
            .unwrap();
            assert!(module_equal(&d, &expect).unwrap());
            let rq = Submodule::column_space(&q).unwrap();
            let whole = Submodule::whole(field, 2, 1).unwrap();
            assert!(module_equal(&algebraic_closure(&rq, &whole).unwrap(), &whole).unwrap());
            assert!(is_algebraic(&rq, &whole).unwrap());
        }
    }

    #[test]
    fn cube_dual() {
        let q = Field::Rational;
        let x = w(&[(1, 1)]);
        let cube = wm(q, x.pow(3));
        let m = Submodule::ideal(q, 2, vec![wm(q, x.clone())]).unwrap();
        let qm = AlgebraMatrix::from_rows(q, 2, vec![vec![cube]]).unwrap();
        let d = q_dual(&qm, &m).unwrap();
        let f = &(&AlgebraElement::from_word(q, 2, x.pow(2))
            + &AlgebraElement::from_word(q, 2, x.clone()))
            + &AlgebraElement::one(q, 2);
        let expect = Submodule::ideal(q, 2, vec![f.iota()]).unwrap();
        assert!(module_equal(&d, &expect).unwrap());
    }

    #[test]
    fn commutator_coupling() {
        for field in [Field::Prime(2), Field::Prime(3)] {
            let j = Submodule::ideal(field, 2, vec![wm(field, commutator())]).unwrap();
            let whole = Submodule::whole(field, 2, 1).unwrap();
            let d = dual_wrt_word(&commutator(), &field.one(), &j).unwrap();
            assert!(module_equal(&d, &whole).unwrap());
            let back = dual_wrt_word(&commutator(), &field.one(), &d).unwrap();
            assert!(module_equal(&back, &j).unwrap());
            assert!(!is_free_factor(&j, &whole).unwrap());
        }
    }

    #[test]
    fn self_dual_ideal_over_gf3() {
        let f = Field::Prime(3);
        let two = f.from_i64(2);
        let j = Submodule::ideal(
            f,
            2,
            vec![
                AlgebraElement::word_minus(f, 2, &w(&[(1, 1)]), &two),
                AlgebraElement::word_minus(f, 2, &w(&[(2, 1)]), &two),
            ],
        )
        .unwrap();
        let d = dual_wrt_word(&commutator(), &f.one(), &j).unwrap();
        assert!(module_equal(&d, &j).unwrap());
        assert_eq!(module_rank(&d).unwrap(), 2);
    }

    #[test]
    fn primitive_elements() {
        let f = Field::Prime(2);
        let aug = Submodule::ideal(f, 2, vec![wm(f, w(&[(1, 1)])), wm(f, w(&[(2, 1)]))]).unwrap();
        let p =
            |e: AlgebraElement, n: &Submodule| is_primitive(&AlgebraVector::single(e), n).unwrap();
        assert!(p(wm(f, w(&[(1, 1)])), &aug));
        assert!(p(wm(f, w(&[(1, 1), (2, 1)])), &aug));
        let whole = Submodule::whole(f, 2, 1).unwrap();
        assert!(!p(wm(f, commutator()), &whole));
        assert!(is_primitive(&AlgebraVector::single(AlgebraElement::zero(f, 2)), &aug).is_err());
        assert!(is_primitive(&AlgebraVector::single(AlgebraElement::one(f, 2)), &aug).is_err());
    }

    #[test]
    fn rank_one_ambient_has_no_proper_free_factor() {
        let f = Field::Rational;
        let x1 = wm(f, w(&[(1, 1)]));
        let m = Submodule::ideal(f, 2, vec![x1.clone()]).unwrap();
        let whole = Submodule::whole(f, 2, 1).unwrap();
        assert!(!is_free_factor(&m, &whole).unwrap());
        assert!(is_algebraic(&m, &whole).unwrap());
        let aug = Submodule::ideal(f, 2, vec![x1, wm(f, w(&[(2, 1)]))]).unwrap();
        assert!(is_free_factor(&m, &aug).unwrap());
        assert!(!is_algebraic(&m, &aug).unwrap());
        assert!(module_equal(&algebraic_closure(&m, &aug).unwrap(), &m).unwrap());
        assert!(is_algebraic(&m, &m).unwrap());
        assert!(is_free_factor(&m, &m).unwrap());
        assert!(algebraic_closure(&whole, &m).is_err());
    }
}
