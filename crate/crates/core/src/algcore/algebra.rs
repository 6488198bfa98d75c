use crate::exactlin::{
    tensor::outer, Accum, FieldSpec, LinAlgError, LinMap, Matrix, Scalar, Space, SparseVec,
};

use super::report::{find_witness, CheckReport};

/// Finite-dimensional associative unital algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub space: Space,
    /// `V ⊗ V → V`; column `i * d + j` is `e_i e_j`.
    pub mul: LinMap,
    pub unit: SparseVec,
}

impl AlgebraData {
    pub fn new(field: FieldSpec, space: Space, mul: Matrix, unit: SparseVec) -> Result<Self, LinAlgError> {
        let d = space.dim;
        if mul.rows != d || mul.cols != d * d || unit.dim != d {
            return Err(LinAlgError::DimensionMismatch { expected: (d, d * d), found: (mul.rows, mul.cols) });
        }
        if mul.field != field {
            return Err(LinAlgError::FieldMismatch);
        }
        let sq = Space::new(d * d, format!("{}⊗{}", space.label, space.label));
        Ok(AlgebraData { field, mul: LinMap { dom: sq, cod: space.clone(), mat: mul }, space, unit })
    }

    /// From sparse `(i, j, k, c)` with `e_i e_j = Σ c e_k`.
    pub fn from_constants(
        field: FieldSpec,
        dim: usize,
        label: &str,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: SparseVec,
    ) -> Result<Self, LinAlgError> {
        let t = constants.into_iter().map(|(i, j, k, c)| (k, i * dim + j, c));
        let mul = Matrix::from_triplets(field, dim, dim * dim, t);
        AlgebraData::new(field, Space::new(dim, label.to_string()), mul, unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        let one = field.one();
        AlgebraData::from_constants(field, 1, "k", [(0, 0, 0, one.clone())], SparseVec::unit(1, 0, one))
            .expect("ground field")
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.dim(), i, self.field.one())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.mul.mat.col(i * self.dim() + j)
    }

    pub fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accum::new(self.dim());
        for (i, x) in &a.entries {
            for (j, y) in &b.entries {
                acc.add_vec(&(x * y), self.mul_basis(*i, *j));
            }
        }
        acc.finish()
    }

    /// Product of a left-to-right list of elements (unit if empty).
    pub fn product(&self, factors: &[&SparseVec]) -> SparseVec {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul_vec(&acc, f);
        }
        acc
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mul(&self, a: &SparseVec) -> Matrix {
        let cols = (0..self.dim()).map(|j| self.mul_vec(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim(), cols)
    }

    pub fn right_mul(&self, a: &SparseVec) -> Matrix {
        let cols = (0..self.dim()).map(|j| self.mul_vec(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim(), cols)
    }

    /// Opposite algebra on the same basis, materialized.
    pub fn opposite(&self) -> AlgebraData {
        let d = self.dim();
        let cols = (0..d * d).map(|c| self.mul.mat.col((c % d) * d + c / d).clone()).collect();
        let mul = Matrix::from_columns(self.field, d, cols);
        AlgebraData::new(self.field, Space::new(d, format!("{}^op", self.space.label)), mul, self.unit.clone())
            .expect("opposite keeps shape")
    }

    /// `A ⊗ B` with componentwise product.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let mut cols = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let x = self.mul_basis(i / db, j / db);
                let y = other.mul_basis(i % db, j % db);
                cols.push(outer(&[x, y]));
            }
        }
        let mul = Matrix::from_columns(self.field, d, cols);
        let unit = outer(&[&self.unit, &other.unit]);
        let label = format!("{}⊗{}", self.space.label, other.space.label);
        AlgebraData::new(self.field, Space::new(d, label), mul, unit).expect("tensor algebra shape")
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn check(&self) -> CheckReport {
        let d = self.dim();
        let mut r = CheckReport::new(format!("algebra {}", self.space.label));
        r.record(
            "associativity",
            find_witness(&[d, d, d], |ix| {
                let (a, b, c) = (self.basis(ix[0]), self.basis(ix[1]), self.basis(ix[2]));
                self.mul_vec(&self.mul_vec(&a, &b), &c) != self.mul_vec(&a, &self.mul_vec(&b, &c))
            }),
        );
        r.record(
            "unit",
            find_witness(&[d], |ix| {
                let a = self.basis(ix[0]);
                self.mul_vec(&self.unit, &a) != a || self.mul_vec(&a, &self.unit) != a
            }),
        );
        r
    }
}

/// Checks that `f: A → B` (matrix) is a unital algebra morphism.
pub fn check_algebra_map(name: &str, a: &AlgebraData, b: &AlgebraData, f: &Matrix, anti: bool) -> CheckReport {
    let mut r = CheckReport::new(name.to_string());
    let d = a.dim();
    r.record(
        if anti { "anti-multiplicative" } else { "multiplicative" },
        find_witness(&[d, d], |ix| {
            let lhs = f.mul_vec(a.mul_basis(ix[0], ix[1]));
            let (x, y) = (f.mul_vec(&a.basis(ix[0])), f.mul_vec(&a.basis(ix[1])));
            let rhs = if anti { b.mul_vec(&y, &x) } else { b.mul_vec(&x, &y) };
            lhs != rhs
        }),
    );
    r.record("unital", if f.mul_vec(&a.unit) == b.unit { None } else { Some(vec![]) });
    r
}
