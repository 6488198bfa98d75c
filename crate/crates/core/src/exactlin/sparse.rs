use std::collections::HashMap;

use super::scalar::{FieldSpec, Scalar};

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    pub dim: usize,
    pub entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize, one: Scalar) -> Self {
        assert!(i < dim, "basis index {i} out of range {dim}");
        SparseVec { dim, entries: vec![(i, one)] }
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accum::new(dim);
        for (i, c) in entries {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.entries.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.entries[a].clone());
                a += 1;
            } else if ib < ia {
                out.push((ib, c * &other.entries[b].1));
                b += 1;
            } else {
                let v = &self.entries[a].1 + &(c * &other.entries[b].1);
                if !v.is_zero() {
                    out.push((ia, v));
                }
                a += 1;
                b += 1;
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, x)) => self.axpy(&x.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, x)) => self.axpy(&-x.field().one(), other),
        }
    }

    pub fn dot_dense(&self, dense: &[Scalar]) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        for (i, x) in &self.entries {
            let t = x * &dense[*i];
            acc = Some(match acc {
                None => t,
                Some(a) => &a + &t,
            });
        }
        acc
    }
}

/// Hash-map accumulator for building sparse vectors term by term.
#[derive(Clone, Debug)]
pub struct Accum {
    dim: usize,
    map: HashMap<usize, Scalar>,
}

impl Accum {
    pub fn new(dim: usize) -> Self {
        Accum { dim, map: HashMap::new() }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        assert!(i < self.dim, "index {i} out of range {}", self.dim);
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
        for (i, x) in &v.entries {
            self.add(*i, &(c * x));
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        entries.sort_by_key(|e| e.0);
        SparseVec { dim: self.dim, entries }
    }
}

/// Convenience: a dense row of scalars as a sparse vector.
pub fn from_dense(field: FieldSpec, row: &[i64]) -> SparseVec {
    SparseVec::from_entries(
        row.len(),
        row.iter().enumerate().map(|(i, &x)| (i, field.from_i64(x))),
    )
}
