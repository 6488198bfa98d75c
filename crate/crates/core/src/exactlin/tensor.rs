use rayon::prelude::*;

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::sparse::{Accum, SparseVec};

/// Plain tensor product `V_1 ⊗ ... ⊗ V_n` with left-major flat indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorShape {
    pub dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorShape { dims }
    }

    pub fn power(d: usize, n: usize) -> Self {
        TensorShape { dims: vec![d; n] }
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter().zip(&self.dims).fold(0, |acc, (i, d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (k, d) in self.dims.iter().enumerate().rev() {
            out[k] = flat % d;
            flat /= d;
        }
        out
    }
}

/// Adds `coeff * (f_1 ⊗ ... ⊗ f_n)` to `acc` (indexed by `shape`).
pub fn add_outer(acc: &mut Accum, shape: &TensorShape, coeff: &Scalar, factors: &[&SparseVec]) {
    debug_assert_eq!(shape.dims.len(), factors.len());
    if coeff.is_zero() || factors.iter().any(|f| f.is_zero()) {
        return;
    }
    fn rec(
        acc: &mut Accum,
        shape: &TensorShape,
        factors: &[&SparseVec],
        k: usize,
        flat: usize,
        c: Scalar,
    ) {
        if k == factors.len() {
            acc.add(flat, &c);
            return;
        }
        for (i, x) in &factors[k].entries {
            rec(acc, shape, factors, k + 1, flat * shape.dims[k] + i, &c * x);
        }
    }
    rec(acc, shape, factors, 0, 0, coeff.clone());
}

/// `f_1 ⊗ ... ⊗ f_n` as a flat sparse vector.
pub fn outer(factors: &[&SparseVec]) -> SparseVec {
    let shape = TensorShape::new(factors.iter().map(|f| f.dim).collect());
    let mut acc = Accum::new(shape.total());
    let one = match factors.iter().find_map(|f| f.entries.first()) {
        Some((_, x)) => x.field().one(),
        None => return SparseVec::zero(shape.total()),
    };
    add_outer(&mut acc, &shape, &one, factors);
    acc.finish()
}

/// Expands a flat vector over `shape` into (coefficient, multi-index) terms.
pub fn terms(shape: &TensorShape, v: &SparseVec) -> Vec<(Scalar, Vec<usize>)> {
    v.entries.iter().map(|(i, x)| (x.clone(), shape.unflatten(*i))).collect()
}

/// Linear extension of a per-basis-tensor formula: `Σ c · f(ix)` over the terms of `v`.
pub fn lin_extend(v: &SparseVec, shape: &TensorShape, out_dim: usize, f: impl Fn(&[usize]) -> SparseVec) -> SparseVec {
    let mut acc = Accum::new(out_dim);
    for (flat, c) in &v.entries {
        acc.add_vec(c, &f(&shape.unflatten(*flat)));
    }
    acc.finish()
}

/// Matrix of a map on a plain tensor product, one formula evaluation per basis tensor.
pub fn free_matrix(
    field: FieldSpec,
    src: &TensorShape,
    out_dim: usize,
    f: impl Fn(&[usize]) -> SparseVec + Sync,
) -> Matrix {
    let cols: Vec<SparseVec> = (0..src.total())
        .into_par_iter()
        .map(|flat| {
            let v = f(&src.unflatten(flat));
            debug_assert_eq!(v.dim, out_dim);
            v
        })
        .collect();
    Matrix::from_columns(field, out_dim, cols)
}
