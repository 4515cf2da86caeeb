use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec::default()
    }

    pub fn unit(i: usize, field: FieldSpec) -> Self {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SparseVec::zero()
        } else {
            SparseVec {
                entries: vec![(i, c)],
            }
        }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in pairs {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(coords: &[Scalar]) -> Self {
        SparseVec {
            entries: coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`, by merging.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let v = x + &(y * c);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&c.one_like(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&-c.one_like(), other),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        for (i, x) in &self.entries {
            if let Some(y) = other.get(*i) {
                let t = x * y;
                acc = Some(match acc {
                    None => t,
                    Some(a) => &a + &t,
                });
            }
        }
        acc
    }

    /// Reindexes every entry through `f`, summing collisions.
    pub fn map_indices(&self, mut f: impl FnMut(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

/// Sums many scaled contributions into one sparse vector.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator::default()
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(v) => *v = &*v + c,
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_vec(&mut self, c: &Scalar, v: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, &(x * c));
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Applies the linear extension of a basis-to-vector map to `v`.
pub fn apply_linear(v: &SparseVec, mut f: impl FnMut(usize) -> SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, c) in v.iter() {
        acc.add_vec(c, &f(i));
    }
    acc.finish()
}

/// Row-major sparse matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVec::zero(); rows],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| SparseVec::unit(i, field)).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets; rejects duplicates, zeros
    /// and out-of-range indices.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut buckets: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r},{c}) outside {rows}x{cols}"
                )));
            }
            if v.is_zero() {
                return Err(Error::Input(format!("stored zero at ({r},{c})")));
            }
            if buckets[r].insert(c, v).is_some() {
                return Err(Error::Input(format!("duplicate entry at ({r},{c})")));
            }
        }
        Ok(SparseMatrix {
            rows,
            cols,
            data: buckets
                .into_iter()
                .map(|b| SparseVec {
                    entries: b.into_iter().collect(),
                })
                .collect(),
        })
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.max_index().map_or(true, |m| m < cols)));
        SparseMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                assert!(i < rows, "column entry {i} outside {rows} rows");
                buckets[i].push((j, c.clone()));
            }
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            data: buckets.into_iter().map(|entries| SparseVec { entries }).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        self.data[r].get(c)
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v.clone())))
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.cols, &self.data)
    }

    pub fn column_vectors(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| row.dot(v).map(|x| (r, x))),
        )
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Accumulator::new();
                for (k, c) in row.iter() {
                    acc.add_vec(c, &other.data[k]);
                }
                acc.finish()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scaled(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scaled(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(i, r)| {
                r.nnz() == 1 && r.leading().map_or(false, |(j, c)| j == i && c.is_one())
            })
    }
}
