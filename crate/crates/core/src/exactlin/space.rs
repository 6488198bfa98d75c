use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::matrix::{Matrix, Solver};
use super::scalar::FieldSpec;
use super::sparse::SparseVec;
use super::LinAlgError;

static NEXT_SPACE_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional vector space with a fixed ordered basis.
#[derive(Clone, Debug)]
pub struct Space {
    pub id: u64,
    pub dim: usize,
    pub label: Arc<str>,
}

impl Space {
    pub fn new(dim: usize, label: impl Into<Arc<str>>) -> Space {
        Space { id: NEXT_SPACE_ID.fetch_add(1, Ordering::Relaxed), dim, label: label.into() }
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Space) -> bool {
        self.id == other.id
    }
}

/// Linear map between based spaces; columns are images of domain basis vectors.
#[derive(Clone, Debug)]
pub struct LinMap {
    pub dom: Space,
    pub cod: Space,
    pub mat: Matrix,
}

impl LinMap {
    pub fn new(dom: Space, cod: Space, mat: Matrix) -> Result<LinMap, LinAlgError> {
        if mat.rows != cod.dim || mat.cols != dom.dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: (cod.dim, dom.dim),
                found: (mat.rows, mat.cols),
            });
        }
        Ok(LinMap { dom, cod, mat })
    }

    pub fn identity(field: FieldSpec, space: &Space) -> LinMap {
        LinMap { dom: space.clone(), cod: space.clone(), mat: Matrix::identity(field, space.dim) }
    }

    pub fn zero(field: FieldSpec, dom: &Space, cod: &Space) -> LinMap {
        LinMap { dom: dom.clone(), cod: cod.clone(), mat: Matrix::zeros(field, cod.dim, dom.dim) }
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap, LinAlgError> {
        if inner.cod.dim != self.dom.dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: (self.dom.dim, 0),
                found: (inner.cod.dim, 0),
            });
        }
        if inner.field() != self.field() {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(LinMap { dom: inner.dom.clone(), cod: self.cod.clone(), mat: self.mat.mul(&inner.mat) })
    }

    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec, LinAlgError> {
        if v.dim != self.dom.dim {
            return Err(LinAlgError::DimensionMismatch { expected: (self.dom.dim, 1), found: (v.dim, 1) });
        }
        Ok(self.mat.mul_vec(v))
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinAlgError> {
        self.same_shape(other)?;
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.add(&other.mat) })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinAlgError> {
        self.same_shape(other)?;
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.sub(&other.mat) })
    }

    fn same_shape(&self, other: &LinMap) -> Result<(), LinAlgError> {
        if (self.mat.rows, self.mat.cols) != (other.mat.rows, other.mat.cols) {
            return Err(LinAlgError::DimensionMismatch {
                expected: (self.mat.rows, self.mat.cols),
                found: (other.mat.rows, other.mat.cols),
            });
        }
        if self.field() != other.field() {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    /// Kernel as an inclusion map into the domain.
    pub fn kernel(&self) -> LinMap {
        let k = self.mat.kernel();
        let ks = Space::new(k.cols, format!("ker({})", self.dom.label));
        LinMap { dom: ks, cod: self.dom.clone(), mat: k }
    }

    pub fn solve(&self, target: &SparseVec) -> Result<SparseVec, LinAlgError> {
        if target.dim != self.cod.dim {
            return Err(LinAlgError::DimensionMismatch { expected: (self.cod.dim, 1), found: (target.dim, 1) });
        }
        Solver::new(&self.mat).solve(target).ok_or(LinAlgError::NoSolution)
    }

    pub fn inverse(&self) -> Result<LinMap, LinAlgError> {
        let inv = self.mat.inverse().ok_or(LinAlgError::NoSolution)?;
        Ok(LinMap { dom: self.cod.clone(), cod: self.dom.clone(), mat: inv })
    }
}

/// `a ⊗ b` with left-major lexicographic basis.
pub fn tensor_space(a: &Space, b: &Space) -> Space {
    Space::new(a.dim * b.dim, format!("({})⊗({})", a.label, b.label))
}

/// Left-nested multi-fold tensor product.
pub fn tensor_spaces(factors: &[Space]) -> Space {
    match factors {
        [] => Space::new(1, "k"),
        [a] => a.clone(),
        [a, rest @ ..] => rest.iter().fold(a.clone(), |acc, b| tensor_space(&acc, b)),
    }
}

pub fn tensor_map(f: &LinMap, g: &LinMap) -> Result<LinMap, LinAlgError> {
    if f.field() != g.field() {
        return Err(LinAlgError::FieldMismatch);
    }
    Ok(LinMap {
        dom: tensor_space(&f.dom, &g.dom),
        cod: tensor_space(&f.cod, &g.cod),
        mat: f.mat.kron(&g.mat),
    })
}

pub fn tensor_maps(fs: &[LinMap]) -> Result<LinMap, LinAlgError> {
    let (first, rest) = fs.split_first().ok_or(LinAlgError::DimensionMismatch {
        expected: (1, 1),
        found: (0, 0),
    })?;
    rest.iter().try_fold(first.clone(), |acc, g| tensor_map(&acc, g))
}
