//! Exact word-measure quantities `φ_{I,J}(N)` over prime fields.
//!
//! `φ_{I,J}(N) = q^N · P(I ≤ ker φ_J)` where a right K[F]-module structure
//! on the row space K^N (one invertible matrix per generator) and a
//! homomorphism `φ_J : J → K^N` are drawn uniformly. With `C` expressing
//! the generators of `I` in the basis of `J`, the probability for a fixed
//! structure `g` is `q^{-rk ĝ(C)}`; the structures are enumerated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, AlgebraMatrix, Field, Word};
use crate::duality::q_dual;
use crate::error::{Error, Result};
use crate::module::{express_in_basis, Submodule};

/// Default bound on the number of enumerated cases.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A dense matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from row-major residues, reducing them mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = v % p;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut out = Self::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(l, j)) % p;
                }
            }
        }
        out
    }

    fn add_scaled(&mut self, c: u64, other: &FpMatrix) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + c * b) % self.p;
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        row_reduce(self.clone()).0
    }

    /// The inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zero(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1 % self.p);
        }
        let (rank, red) = row_reduce(aug);
        if rank < n || (0..n).any(|i| red.get(i, i) != 1) {
            return None;
        }
        let mut inv = Self::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j));
            }
        }
        Some(inv)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2).
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Reduced row echelon form; returns the rank and the reduced matrix.
fn row_reduce(mut m: FpMatrix) -> (usize, FpMatrix) {
    let p = m.p;
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
            continue;
        };
        for j in 0..m.cols {
            m.data.swap(rank * m.cols + j, pivot * m.cols + j);
        }
        let inv = inv_mod(m.get(rank, col), p);
        for j in 0..m.cols {
            let v = m.get(rank, j) * inv % p;
            m.set(rank, j, v);
        }
        for r in 0..m.rows {
            let f = m.get(r, col);
            if r == rank || f == 0 {
                continue;
            }
            for j in 0..m.cols {
                let v = (m.get(r, j) + (p - f) * m.get(rank, j)) % p;
                m.set(r, j, v);
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    (rank, m)
}

/// Order of GL_N(p).
pub fn gl_order(p: u64, n: usize) -> u128 {
    let qn = (p as u128).pow(n as u32);
    (0..n).map(|i| qn - (p as u128).pow(i as u32)).product()
}

/// All invertible `n × n` matrices over GF(p).
pub fn general_linear_group(p: u64, n: usize) -> Vec<FpMatrix> {
    let cells = (n * n) as u32;
    let total = p.pow(cells);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut m = FpMatrix::zero(p, n, n);
        for v in m.data.iter_mut() {
            *v = c % p;
            c /= p;
        }
        if m.rank() == n {
            out.push(m);
        }
    }
    out
}

/// A right K[F]-module structure on K^N: the matrices of the generators.
#[derive(Debug, Clone)]
pub struct ModuleAssignment {
    p: u64,
    n: usize,
    mats: Vec<FpMatrix>,
    inverses: Vec<FpMatrix>,
}

impl ModuleAssignment {
    pub fn new(p: u64, n: usize, mats: Vec<FpMatrix>) -> Result<Self> {
        let mut inverses = Vec::with_capacity(mats.len());
        for m in &mats {
            if m.rows() != n || m.cols() != n || m.p != p {
                return Err(Error::DimensionMismatch("generator matrix shape".into()));
            }
            inverses
                .push(m.inverse().ok_or_else(|| {
                    Error::InvalidArgument("generator matrix is singular".into())
                })?);
        }
        Ok(ModuleAssignment {
            p,
            n,
            mats,
            inverses,
        })
    }

    pub fn word_matrix(&self, w: &Word) -> FpMatrix {
        let mut out = FpMatrix::identity(self.p, self.n);
        for l in w.letters() {
            let m = if l.is_inverse() {
                &self.inverses[l.generator()]
            } else {
                &self.mats[l.generator()]
            };
            out = out.mul(m);
        }
        out
    }
}

/// The image of `f` under the algebra morphism ĝ : K[F] → Mat_N(K).
pub fn evaluate_hat_g(g: &ModuleAssignment, f: &AlgebraElement) -> Result<FpMatrix> {
    if f.field() != Field::Prime(g.p) {
        return Err(Error::FieldMismatch(
            f.field().to_string(),
            Field::Prime(g.p).to_string(),
        ));
    }
    if f.rank() != g.mats.len() {
        return Err(Error::RankMismatch(f.rank(), g.mats.len()));
    }
    let mut out = FpMatrix::zero(g.p, g.n, g.n);
    for (w, c) in f.terms() {
        let crate::algebra::Scalar::Mod { value, .. } = c else {
            unreachable!("prime field scalar");
        };
        out.add_scaled(*value, &g.word_matrix(w));
    }
    Ok(out)
}

/// Block matrix with block `(i, j)` equal to ĝ of entry `(i, j)`.
fn hat_matrix(g: &ModuleAssignment, c: &AlgebraMatrix) -> Result<FpMatrix> {
    let n = g.n;
    let mut out = FpMatrix::zero(g.p, c.rows() * n, c.cols() * n);
    for i in 0..c.rows() {
        for j in 0..c.cols() {
            let e = c.get(i, j);
            if e.is_zero() {
                continue;
            }
            let b = evaluate_hat_g(g, e)?;
            for a in 0..n {
                for d in 0..n {
                    out.set(i * n + a, j * n + d, b.get(a, d));
                }
            }
        }
    }
    Ok(out)
}

/// The `t × s` matrix expressing the generators of `i` in the basis of `j`.
fn containment_matrix(i: &Submodule, j: &Submodule) -> Result<AlgebraMatrix> {
    let cols = i
        .gens()
        .iter()
        .map(|f| match express_in_basis(j, f) {
            Err(Error::NotMember(s)) => Err(Error::NotContained(format!("{s} is not in J"))),
            r => r,
        })
        .collect::<Result<Vec<_>>>()?;
    let t = crate::module::module_rank(j)?;
    let mut c = AlgebraMatrix::zero(j.field(), j.free_rank(), t, cols.len());
    for (col, coeffs) in cols.into_iter().enumerate() {
        for (row, e) in coeffs.into_iter().enumerate() {
            c.set(row, col, e);
        }
    }
    Ok(c)
}

fn prime_of(m: &Submodule) -> Result<u64> {
    m.field().characteristic().ok_or(Error::NotFiniteField)
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn structures(p: u64, n: usize, r: usize) -> impl Iterator<Item = ModuleAssignment> {
    let gl = general_linear_group(p, n);
    let total = (gl.len() as u128).pow(r as u32);
    (0..total).map(move |mut code| {
        let mut mats = Vec::with_capacity(r);
        for _ in 0..r {
            mats.push(gl[(code % gl.len() as u128) as usize].clone());
            code /= gl.len() as u128;
        }
        ModuleAssignment::new(p, n, mats).expect("invertible by construction")
    })
}

fn common(i: &Submodule, j: &Submodule, n: usize) -> Result<(u64, BigInt, u128)> {
    if i.ambient_k() != j.ambient_k() {
        return Err(Error::DimensionMismatch(
            "I and J live in different K[F]^k".into(),
        ));
    }
    if i.field() != j.field() {
        return Err(Error::FieldMismatch(
            i.field().to_string(),
            j.field().to_string(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let p = prime_of(j)?;
    let qn = BigInt::from(p).pow(n as u32);
    let structures = gl_order(p, n)
        .checked_pow(j.free_rank() as u32)
        .unwrap_or(u128::MAX);
    Ok((p, qn, structures))
}

/// Accumulates `q^N · avg_g q^{-rank(g)}` from a histogram of ranks.
fn from_rank_histogram(p: u64, qn: &BigInt, hist: &[u128], structures: u128) -> BigRational {
    let mut sum = BigRational::zero();
    for (rank, &count) in hist.iter().enumerate() {
        if count == 0 {
            continue;
        }
        sum += BigRational::new(BigInt::from(count), BigInt::from(p).pow(rank as u32));
    }
    sum * BigRational::from_integer(qn.clone())
        / BigRational::from_integer(BigInt::from(structures))
}

fn phi_by_rank(
    i: &Submodule,
    j: &Submodule,
    n: usize,
    budget: u128,
    left: bool,
) -> Result<BigRational> {
    let (p, qn, total) = common(i, j, n)?;
    check_budget(total, budget)?;
    let mut c = containment_matrix(i, j)?;
    if left {
        c = c.iota();
    }
    let mut hist = vec![0u128; c.rows().min(c.cols()) * n + 1];
    for g in structures(p, n, j.free_rank()) {
        hist[hat_matrix(&g, &c)?.rank()] += 1;
    }
    Ok(from_rank_histogram(p, &qn, &hist, total))
}

/// `φ_{I,J}(N)` by enumerating module structures and ranking ĝ(C).
pub fn phi_exact(i: &Submodule, j: &Submodule, n: usize, budget: u128) -> Result<BigRational> {
    phi_by_rank(i, j, n, budget, false)
}

/// The same quantity computed through the left action on column vectors
/// of ι(I) ≤ ι(J), using ĝ(ι(C)).
pub fn phi_exact_left(i: &Submodule, j: &Submodule, n: usize, budget: u128) -> Result<BigRational> {
    phi_by_rank(i, j, n, budget, true)
}

/// `φ_{I,J}(N)` by enumerating module structures and all homomorphisms
/// `J → K^N`, counting those that kill every generator of `I`.
pub fn phi_direct(i: &Submodule, j: &Submodule, n: usize, budget: u128) -> Result<BigRational> {
    let (p, qn, total) = common(i, j, n)?;
    let t = crate::module::module_rank(j)?;
    let homs = (p as u128)
        .checked_pow((t * n) as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    check_budget(total.saturating_mul(homs), budget)?;
    let c = containment_matrix(i, j)?;
    let mut hits = 0u128;
    for g in structures(p, n, j.free_rank()) {
        let blocks: Vec<Vec<FpMatrix>> = (0..c.rows())
            .map(|r| {
                (0..c.cols())
                    .map(|s| evaluate_hat_g(&g, c.get(r, s)))
                    .collect()
            })
            .collect::<Result<_>>()?;
        for code in 0..homs {
            // Images v_1..v_t of the basis of J, each a row vector of length N.
            let mut v = vec![0u64; t * n];
            let mut x = code;
            for e in v.iter_mut() {
                *e = (x % p as u128) as u64;
                x /= p as u128;
            }
            let killed = (0..c.cols()).all(|s| {
                (0..n).all(|d| {
                    let mut acc = 0u64;
                    for (r, row) in blocks.iter().enumerate() {
                        let b = &row[s];
                        for a in 0..n {
                            acc = (acc + v[r * n + a] * b.get(a, d)) % p;
                        }
                    }
                    acc == 0
                })
            });
            if killed {
                hits += 1;
            }
        }
    }
    Ok(BigRational::from_integer(qn)
        * BigRational::new(BigInt::from(hits), BigInt::from(total) * BigInt::from(homs)))
}

/// Both sides of the duality invariance `φ_{L,M} = φ_{M*,L*}` for
/// `R_Q ≤ L ≤ M`, the duals taken with respect to `q`.
pub fn duality_invariance(
    q: &AlgebraMatrix,
    l: &Submodule,
    m: &Submodule,
    n: usize,
    budget: u128,
) -> Result<(BigRational, BigRational)> {
    let lhs = phi_exact(l, m, n, budget)?;
    let m_dual = q_dual(q, m)?;
    let l_dual = q_dual(q, l)?;
    let rhs = phi_exact(&m_dual, &l_dual, n, budget)?;
    Ok((lhs, rhs))
}

/// `1 + 1/(q^N - 1)`, the closed form for the commutator example.
pub fn commutator_closed_form(p: u64, n: usize) -> BigRational {
    let qn = BigInt::from(p).pow(n as u32);
    BigRational::one() + BigRational::new(BigInt::one(), qn - 1)
}
