use std::fmt;

use crate::error::{Error, Result};

use super::element::AlgebraElement;
use super::field::Field;

/// An element of K[F]^k, a column of `k` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraVector {
    entries: Vec<AlgebraElement>,
}

impl AlgebraVector {
    pub fn new(entries: Vec<AlgebraElement>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::DimensionMismatch("vector of length 0".into()))?;
        for e in &entries[1..] {
            first.check_compatible(e)?;
        }
        Ok(AlgebraVector { entries })
    }

    pub fn zero(field: Field, rank: usize, k: usize) -> Self {
        AlgebraVector {
            entries: vec![AlgebraElement::zero(field, rank); k],
        }
    }

    /// The standard basis vector `e_i` (zero-based).
    pub fn unit(field: Field, rank: usize, k: usize, i: usize) -> Self {
        let mut v = Self::zero(field, rank, k);
        v.entries[i] = AlgebraElement::one(field, rank);
        v
    }

    pub fn single(e: AlgebraElement) -> Self {
        AlgebraVector { entries: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn rank(&self) -> usize {
        self.entries[0].rank()
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<AlgebraElement> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &AlgebraElement {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        AlgebraVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Right scalar action by a ring element.
    pub fn mul_right(&self, g: &AlgebraElement) -> Self {
        AlgebraVector {
            entries: self.entries.iter().map(|a| a * g).collect(),
        }
    }

    pub fn iota(&self) -> Self {
        AlgebraVector {
            entries: self.entries.iter().map(AlgebraElement::iota).collect(),
        }
    }
}

impl fmt::Display for AlgebraVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.len() == 1 {
            return write!(f, "{}", self.entries[0]);
        }
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A `rows × cols` matrix over K[F], stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    rank: usize,
    data: Vec<AlgebraElement>,
}

impl AlgebraMatrix {
    pub fn zero(field: Field, rank: usize, rows: usize, cols: usize) -> Self {
        AlgebraMatrix {
            rows,
            cols,
            field,
            rank,
            data: vec![AlgebraElement::zero(field, rank); rows * cols],
        }
    }

    pub fn identity(field: Field, rank: usize, n: usize) -> Self {
        let mut m = Self::zero(field, rank, n, n);
        for i in 0..n {
            m.set(i, i, AlgebraElement::one(field, rank));
        }
        m
    }

    pub fn from_rows(field: Field, rank: usize, rows: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch(
                        e.field().to_string(),
                        field.to_string(),
                    ));
                }
                if e.rank() != rank {
                    return Err(Error::RankMismatch(e.rank(), rank));
                }
                data.push(e);
            }
        }
        Ok(AlgebraMatrix {
            rows: r,
            cols: c,
            field,
            rank,
            data,
        })
    }

    /// The matrix whose columns are the given vectors (all of length `k`).
    pub fn from_columns(
        field: Field,
        rank: usize,
        k: usize,
        cols: &[AlgebraVector],
    ) -> Result<Self> {
        let mut m = Self::zero(field, rank, k, cols.len());
        for (j, v) in cols.iter().enumerate() {
            if v.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {k} rows",
                    v.len()
                )));
            }
            for i in 0..k {
                let e = v.get(i);
                if e.field() != field {
                    return Err(Error::FieldMismatch(
                        e.field().to_string(),
                        field.to_string(),
                    ));
                }
                if e.rank() != rank {
                    return Err(Error::RankMismatch(e.rank(), rank));
                }
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut AlgebraElement {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: AlgebraElement) {
        self.data[i * self.cols + j] = e;
    }

    pub fn column(&self, j: usize) -> AlgebraVector {
        AlgebraVector {
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn columns(&self) -> Vec<AlgebraVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<AlgebraElement> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
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
        let mut out = Self::zero(self.field, self.rank, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.get_mut(i, j).add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.field, self.rank, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entry-wise inversion of the transpose.
    pub fn iota(&self) -> Self {
        let mut out = Self::zero(self.field, self.rank, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).iota());
            }
        }
        out
    }

    /// The row vector `v` times this matrix.
    pub fn row_times(&self, v: &[AlgebraElement]) -> Result<Vec<AlgebraElement>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "row vector of length {} times {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![AlgebraElement::zero(self.field, self.rank); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    o.add_product(a, b);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    #[test]
    fn iota_matrix_reverses_products() {
        let q = Field::Rational;
        let x = AlgebraElement::from_word(q, 2, Word::generator(0));
        let y = AlgebraElement::from_word(q, 2, Word::generator(1));
        let one = AlgebraElement::one(q, 2);
        let a = AlgebraMatrix::from_rows(
            q,
            2,
            vec![
                vec![&x - &one, y.clone(), one.clone()],
                vec![x.clone(), &x * &y, &y - &x],
            ],
        )
        .unwrap();
        let b =
            AlgebraMatrix::from_rows(q, 2, vec![vec![y.clone()], vec![&x + &one], vec![&y * &y]])
                .unwrap();
        let ab = a.mat_mul(&b).unwrap();
        assert_eq!(ab.iota(), b.iota().mat_mul(&a.iota()).unwrap());
        assert_eq!(a.iota().iota(), a);
        assert_eq!(a.iota().rows(), 3);
        let id = AlgebraMatrix::identity(q, 2, 3);
        assert_eq!(id.iota(), id);
        assert!(a.mat_mul(&a).is_err());
    }
}
