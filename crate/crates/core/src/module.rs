//! Submodules of K[F]^k, reduced to right ideals of K[F].
//!
//! For k ≥ 2 the free module K[F]^k is identified with the right ideal
//! `I_k` generated by `y^-i·x·y^i - 1` (i = 1..k), which is free of rank k.
//! A vector `f` maps to `Σ e_i·f_i` where `e_i` are the basis elements of
//! `I_k`, and every module question becomes an ideal question.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{AlgebraElement, AlgebraMatrix, AlgebraVector, Field, Word};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerData, GroebnerOptions};

type EmbeddingKey = (Field, usize, usize);

fn embedding_table() -> &'static Mutex<HashMap<EmbeddingKey, Arc<GroebnerData>>> {
    static TABLE: OnceLock<Mutex<HashMap<EmbeddingKey, Arc<GroebnerData>>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Canonical data of `I_k` inside K[F] of the given rank; memoized.
pub fn embedding_ideal(field: Field, rank: usize, k: usize) -> Result<Arc<GroebnerData>> {
    if rank < 2 {
        return Err(Error::RankOneFreeGroup);
    }
    let key = (field, rank, k);
    if let Some(d) = embedding_table().lock().expect("poisoned").get(&key) {
        return Ok(d.clone());
    }
    let x = Word::generator(0);
    let y = Word::generator(1);
    let gens: Vec<AlgebraElement> = (1..=k as i64)
        .map(|i| {
            let w = y.pow(-i).mul(&x).mul(&y.pow(i));
            AlgebraElement::word_minus(field, rank, &w, &field.one())
        })
        .collect();
    let data = GroebnerData::compute(field, rank, &gens, &GroebnerOptions::default())?;
    debug_assert_eq!(data.rank(), k);
    let data = Arc::new(data);
    embedding_table()
        .lock()
        .expect("poisoned")
        .insert(key, data.clone());
    Ok(data)
}

/// Image of `f ∈ K[F]^k` in K[F]; the identity for k = 1.
pub fn embed_vector(f: &AlgebraVector) -> Result<AlgebraElement> {
    if f.len() == 1 {
        return Ok(f.get(0).clone());
    }
    let ik = embedding_ideal(f.field(), f.rank(), f.len())?;
    let mut out = AlgebraElement::zero(f.field(), f.rank());
    for (e, fi) in ik.firsts().iter().zip(f.entries()) {
        if !fi.is_zero() {
            out.add_product(e, fi);
        }
    }
    Ok(out)
}

/// Inverse of [`embed_vector`]; fails when `g` lies outside `I_k`.
pub fn unembed_vector(g: &AlgebraElement, k: usize) -> Result<AlgebraVector> {
    if k == 0 {
        return Err(Error::DimensionMismatch("ambient dimension 0".into()));
    }
    if k == 1 {
        return Ok(AlgebraVector::single(g.clone()));
    }
    let ik = embedding_ideal(g.field(), g.rank(), k)?;
    let (coeffs, rem) = ik.extract_coefficients(g)?;
    if !rem.is_zero() {
        return Err(Error::NotMember(format!(
            "{g} is not in the embedding ideal"
        )));
    }
    AlgebraVector::new(coeffs)
}

#[derive(Debug)]
struct ModuleData {
    ideal: GroebnerData,
    basis: Vec<AlgebraVector>,
}

/// A finitely generated right submodule of K[F]^k.
#[derive(Debug, Clone)]
pub struct Submodule {
    field: Field,
    rank: usize,
    k: usize,
    gens: Vec<AlgebraVector>,
    data: OnceLock<Arc<ModuleData>>,
}

impl Submodule {
    pub fn new(field: Field, rank: usize, k: usize, gens: Vec<AlgebraVector>) -> Result<Self> {
        if k == 0 {
            return Err(Error::DimensionMismatch("ambient dimension 0".into()));
        }
        for g in &gens {
            if g.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "generator of length {} in K[F]^{k}",
                    g.len()
                )));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(
                    g.field().to_string(),
                    field.to_string(),
                ));
            }
            if g.rank() != rank {
                return Err(Error::RankMismatch(g.rank(), rank));
            }
        }
        if k > 1 && rank < 2 {
            return Err(Error::RankOneFreeGroup);
        }
        Ok(Submodule {
            field,
            rank,
            k,
            gens,
            data: OnceLock::new(),
        })
    }

    /// The right ideal generated by `gens`.
    pub fn ideal(field: Field, rank: usize, gens: Vec<AlgebraElement>) -> Result<Self> {
        Self::new(
            field,
            rank,
            1,
            gens.into_iter().map(AlgebraVector::single).collect(),
        )
    }

    /// K[F]^k with its standard basis.
    pub fn whole(field: Field, rank: usize, k: usize) -> Result<Self> {
        Self::new(
            field,
            rank,
            k,
            (0..k)
                .map(|i| AlgebraVector::unit(field, rank, k, i))
                .collect(),
        )
    }

    pub fn zero(field: Field, rank: usize, k: usize) -> Result<Self> {
        Self::new(field, rank, k, Vec::new())
    }

    /// The column space of `q`.
    pub fn column_space(q: &AlgebraMatrix) -> Result<Self> {
        Self::new(q.field(), q.rank(), q.rows(), q.columns())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Rank of the ambient free group.
    pub fn free_rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_k(&self) -> usize {
        self.k
    }

    pub fn gens(&self) -> &[AlgebraVector] {
        &self.gens
    }

    /// Generators as ring elements; only meaningful for k = 1.
    pub fn ideal_gens(&self) -> Vec<AlgebraElement> {
        self.gens.iter().map(|v| v.get(0).clone()).collect()
    }

    /// The matrix whose columns are the generators.
    pub fn generator_matrix(&self) -> AlgebraMatrix {
        AlgebraMatrix::from_columns(self.field, self.rank, self.k, &self.gens)
            .expect("validated generators")
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(AlgebraVector::is_zero)
    }

    fn data(&self) -> Result<&Arc<ModuleData>> {
        if let Some(d) = self.data.get() {
            return Ok(d);
        }
        let embedded = self
            .gens
            .iter()
            .map(embed_vector)
            .collect::<Result<Vec<_>>>()?;
        let ideal = GroebnerData::compute(
            self.field,
            self.rank,
            &embedded,
            &GroebnerOptions::default(),
        )?;
        let basis = ideal
            .firsts()
            .iter()
            .map(|a| unembed_vector(a, self.k))
            .collect::<Result<Vec<_>>>()?;
        let _ = self.data.set(Arc::new(ModuleData { ideal, basis }));
        Ok(self.data.get().expect("just set"))
    }

    /// Canonical data of the embedded ideal.
    pub fn groebner(&self) -> Result<&GroebnerData> {
        Ok(&self.data()?.ideal)
    }

    fn check_vector(&self, f: &AlgebraVector) -> Result<()> {
        if f.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against K[F]^{}",
                f.len(),
                self.k
            )));
        }
        if f.field() != self.field {
            return Err(Error::FieldMismatch(
                f.field().to_string(),
                self.field.to_string(),
            ));
        }
        if f.rank() != self.rank {
            return Err(Error::RankMismatch(f.rank(), self.rank));
        }
        Ok(())
    }

    fn check_peer(&self, other: &Submodule) -> Result<()> {
        if self.k != other.k {
            return Err(Error::DimensionMismatch(format!(
                "K[F]^{} vs K[F]^{}",
                self.k, other.k
            )));
        }
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
}

impl PartialEq for Submodule {
    /// Equality of generator lists, not of modules; see [`module_equal`].
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rank == other.rank
            && self.k == other.k
            && self.gens == other.gens
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// The canonical free basis of `m`.
pub fn module_basis(m: &Submodule) -> Result<Vec<AlgebraVector>> {
    Ok(m.data()?.basis.clone())
}

/// Coefficients of `f` in [`module_basis`]; errors when `f ∉ m`.
pub fn express_in_basis(m: &Submodule, f: &AlgebraVector) -> Result<Vec<AlgebraElement>> {
    m.check_vector(f)?;
    let (coeffs, rem) = m.data()?.ideal.extract_coefficients(&embed_vector(f)?)?;
    if !rem.is_zero() {
        return Err(Error::NotMember(f.to_string()));
    }
    Ok(coeffs)
}

pub fn module_membership(m: &Submodule, f: &AlgebraVector) -> Result<bool> {
    m.check_vector(f)?;
    m.data()?.ideal.contains(&embed_vector(f)?)
}

/// Whether every generator of `m` lies in `n`.
pub fn module_contains(n: &Submodule, m: &Submodule) -> Result<bool> {
    n.check_peer(m)?;
    for g in &m.gens {
        if !module_membership(n, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality as submodules, by mutual membership of generators.
pub fn module_equal(m: &Submodule, n: &Submodule) -> Result<bool> {
    let eq = module_contains(n, m)? && module_contains(m, n)?;
    if eq {
        debug_assert_eq!(
            m.data()?.ideal.firsts(),
            n.data()?.ideal.firsts(),
            "equal modules with different canonical bases"
        );
    }
    Ok(eq)
}

pub fn module_rank(m: &Submodule) -> Result<usize> {
    Ok(m.data()?.ideal.rank())
}
