use crate::exactlin::{
    tensor::{add_outer, TensorShape},
    Accum, FieldSpec, LinAlgError, LinMap, Matrix, Scalar, Space, SparseVec,
};

use super::report::{find_witness, CheckReport};

/// Finite-dimensional coassociative counital coalgebra.
#[derive(Clone, Debug)]
pub struct CoalgebraData {
    pub field: FieldSpec,
    pub space: Space,
    /// `C → C ⊗ C`
    pub comul: LinMap,
    /// `C → k` as a `1 x d` matrix.
    pub counit: LinMap,
}

impl CoalgebraData {
    pub fn new(field: FieldSpec, space: Space, comul: Matrix, counit: Matrix) -> Result<Self, LinAlgError> {
        let d = space.dim;
        if comul.rows != d * d || comul.cols != d || counit.rows != 1 || counit.cols != d {
            return Err(LinAlgError::DimensionMismatch { expected: (d * d, d), found: (comul.rows, comul.cols) });
        }
        let sq = Space::new(d * d, format!("{}⊗{}", space.label, space.label));
        let k = Space::new(1, "k");
        Ok(CoalgebraData {
            field,
            comul: LinMap { dom: space.clone(), cod: sq, mat: comul },
            counit: LinMap { dom: space.clone(), cod: k, mat: counit },
            space,
        })
    }

    /// From `(i, j, k, c)` with `Δ e_i = Σ c e_j ⊗ e_k` and counit values.
    pub fn from_constants(
        field: FieldSpec,
        dim: usize,
        label: &str,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: &[Scalar],
    ) -> Result<Self, LinAlgError> {
        let comul = Matrix::from_triplets(field, dim * dim, dim, constants.into_iter().map(|(i, j, k, c)| (j * dim + k, i, c)));
        let counit = Matrix::from_triplets(field, 1, dim, counit.iter().enumerate().map(|(i, c)| (0, i, c.clone())));
        CoalgebraData::new(field, Space::new(dim, label.to_string()), comul, counit)
    }

    /// Span of grouplikes `g_0, ..., g_{n-1}`.
    pub fn grouplikes(field: FieldSpec, n: usize, label: &str) -> Self {
        let one = field.one();
        CoalgebraData::from_constants(field, n, label, (0..n).map(|i| (i, i, i, one.clone())), &vec![one.clone(); n])
            .expect("grouplike coalgebra")
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.dim(), i, self.field.one())
    }

    pub fn comul_basis(&self, i: usize) -> &SparseVec {
        self.comul.mat.col(i)
    }

    pub fn counit_of(&self, x: &SparseVec) -> Scalar {
        self.counit.mat.mul_vec(x).get(0).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Iterated comultiplication `C → C^{⊗n}` (`n ≥ 1`), applied to the first slot.
    pub fn iterated(&self, n: usize) -> Matrix {
        assert!(n >= 1);
        let d = self.dim();
        let mut m = Matrix::identity(self.field, d);
        for k in 2..=n {
            let prev = TensorShape::power(d, k - 1);
            let next = TensorShape::power(d, k);
            let cols = m
                .columns()
                .iter()
                .map(|col| {
                    let mut acc = Accum::new(next.total());
                    for (flat, c) in &col.entries {
                        let ix = prev.unflatten(*flat);
                        let head = self.comul_basis(ix[0]);
                        let units: Vec<SparseVec> = ix[1..].iter().map(|&i| self.basis(i)).collect();
                        for (h, x) in &head.entries {
                            let (a, b) = (h / d, h % d);
                            let mut f = vec![self.basis(a), self.basis(b)];
                            f.extend(units.iter().cloned());
                            let refs: Vec<&SparseVec> = f.iter().collect();
                            add_outer(&mut acc, &next, &(c * x), &refs);
                        }
                    }
                    acc.finish()
                })
                .collect();
            m = Matrix::from_columns(self.field, next.total(), cols);
        }
        m
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            let v = self.comul_basis(i);
            let flipped = SparseVec::from_entries(d * d, v.entries.iter().map(|(f, x)| ((f % d) * d + f / d, x.clone())));
            flipped == *v
        })
    }

    /// Tensor product coalgebra `C ⊗ C'`.
    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let mut cols = Vec::with_capacity(d);
        for i in 0..d {
            let (x, y) = (self.comul_basis(i / db), other.comul_basis(i % db));
            let mut acc = Accum::new(d * d);
            for (fx, cx) in &x.entries {
                for (fy, cy) in &y.entries {
                    let (x1, x2) = (fx / da, fx % da);
                    let (y1, y2) = (fy / db, fy % db);
                    acc.add((x1 * db + y1) * d + (x2 * db + y2), &(cx * cy));
                }
            }
            cols.push(acc.finish());
        }
        let comul = Matrix::from_columns(self.field, d * d, cols);
        let counit = self.counit.mat.kron(&other.counit.mat);
        let label = format!("{}⊗{}", self.space.label, other.space.label);
        CoalgebraData::new(self.field, Space::new(d, label), comul, counit).expect("tensor coalgebra shape")
    }

    pub fn check(&self) -> CheckReport {
        let d = self.dim();
        let mut r = CheckReport::new(format!("coalgebra {}", self.space.label));
        let id = Matrix::identity(self.field, d);
        let left = self.comul.mat.kron(&id).mul(&self.comul.mat);
        let right = id.kron(&self.comul.mat).mul(&self.comul.mat);
        r.record("coassociativity", first_diff_col(&left, &right));
        let el = self.counit.mat.kron(&id).mul(&self.comul.mat);
        let er = id.kron(&self.counit.mat).mul(&self.comul.mat);
        r.record("counit", first_diff_col(&el, &id).or_else(|| first_diff_col(&er, &id)));
        r
    }
}

/// First column index where two same-shape matrices differ.
pub fn first_diff_col(a: &Matrix, b: &Matrix) -> Option<Vec<usize>> {
    (0..a.cols).find(|&j| a.col(j) != b.col(j)).map(|j| vec![j])
}

/// Sweedler measuring `ψ: C → Hom(A, B)`, one matrix per basis element of `C`.
pub fn check_sweedler_measuring(
    c: &CoalgebraData,
    a: &super::AlgebraData,
    b: &super::AlgebraData,
    psi: &[Matrix],
) -> CheckReport {
    let mut r = CheckReport::new("sweedler measuring");
    let (dc, da) = (c.dim(), a.dim());
    r.record(
        "multiplicative",
        find_witness(&[dc, da, da], |ix| {
            let lhs = psi[ix[0]].mul_vec(a.mul_basis(ix[1], ix[2]));
            let mut acc = Accum::new(b.dim());
            for (f, x) in &c.comul_basis(ix[0]).entries {
                let (x1, x2) = (f / dc, f % dc);
                let p = b.mul_vec(&psi[x1].mul_vec(&a.basis(ix[1])), &psi[x2].mul_vec(&a.basis(ix[2])));
                acc.add_vec(x, &p);
            }
            lhs != acc.finish()
        }),
    );
    r.record(
        "unital",
        find_witness(&[dc], |ix| {
            let e = c.counit_of(&c.basis(ix[0]));
            psi[ix[0]].mul_vec(&a.unit) != b.unit.scale(&e)
        }),
    );
    r
}

/// `ψ(x)` for a general element `x = Σ x_i c_i`.
pub fn measuring_at(psi: &[Matrix], x: &SparseVec) -> Matrix {
    let (rows, cols, field) = (psi[0].rows, psi[0].cols, psi[0].field);
    x.entries
        .iter()
        .fold(Matrix::zeros(field, rows, cols), |acc, (i, c)| acc.add(&psi[*i].scale(c)))
}

