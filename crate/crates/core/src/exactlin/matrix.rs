use super::scalar::{FieldSpec, Scalar};
use super::sparse::{Accum, SparseVec};

/// Column-compressed exact matrix. Columns are images of domain basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<SparseVec>,
}

/// Output of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Reduced matrix, same shape as the input; pivot rows first.
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Fill ratio above which elimination switches to dense rows.
pub const DENSE_FILL_THRESHOLD: f64 = 0.5;

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![SparseVec::zero(rows); cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let one = field.one();
        Matrix {
            field,
            rows: n,
            cols: n,
            data: (0..n).map(|i| SparseVec::unit(n, i, one.clone())).collect(),
        }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            assert_eq!(c.dim, rows, "column length mismatch");
        }
        Matrix { field, rows, cols: columns.len(), data: columns }
    }

    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut accs: Vec<Accum> = (0..cols).map(|_| Accum::new(rows)).collect();
        for (i, j, c) in triplets {
            assert!(j < cols, "column {j} out of range {cols}");
            accs[j].add(i, &c);
        }
        Matrix { field, rows, cols, data: accs.into_iter().map(Accum::finish).collect() }
    }

    /// Row-major integer literal, mostly for tests and gallery data.
    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut t = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    t.push((i, j, field.from_i64(x)));
                }
            }
        }
        Matrix::from_triplets(field, r, c, t)
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.data[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[j].get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn fill(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            0.0
        } else {
            self.nnz() as f64 / (self.rows * self.cols) as f64
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    /// First nonzero entry (row, col), column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .enumerate()
            .find_map(|(j, c)| c.entries.first().map(|(i, _)| (*i, j)))
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim, self.cols, "matrix-vector dimension mismatch");
        let mut acc = Accum::new(self.rows);
        for (j, x) in &v.entries {
            acc.add_vec(x, &self.data[*j]);
        }
        acc.finish()
    }

    /// `self * other`
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        assert_eq!(self.field, other.field, "mixed-field product");
        let data = other.data.iter().map(|c| self.mul_vec(c)).collect();
        Matrix { field: self.field, rows: self.rows, cols: other.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, false)
    }

    fn combine(&self, other: &Matrix, plus: bool) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| if plus { a.add(b) } else { a.sub(b) })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Vec::with_capacity(self.nnz());
        for (j, c) in self.data.iter().enumerate() {
            for (i, x) in &c.entries {
                t.push((j, *i, x.clone()));
            }
        }
        Matrix::from_triplets(self.field, self.cols, self.rows, t)
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.cols * other.cols);
        for a in &self.data {
            for b in &other.data {
                let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in &a.entries {
                    for (k, y) in &b.entries {
                        entries.push((i * other.rows + k, x * y));
                    }
                }
                data.push(SparseVec { dim: self.rows * other.rows, entries });
            }
        }
        Matrix { field: self.field, rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: idx.len(),
            data: idx.iter().map(|&j| self.data[j].clone()).collect(),
        }
    }

    /// Rows of the matrix as sparse vectors.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn rref(&self) -> Rref {
        let rows = self.row_vectors();
        let (reduced, pivots) = if self.fill() > DENSE_FILL_THRESHOLD {
            dense_echelon(self.field, self.cols, &rows)
        } else {
            sparse_echelon(self.field, self.cols, &rows)
        };
        let rank = pivots.len();
        let mut t = Vec::new();
        for (i, r) in reduced.iter().enumerate() {
            for (j, x) in &r.entries {
                t.push((i, *j, x.clone()));
            }
        }
        Rref { matrix: Matrix::from_triplets(self.field, self.rows, self.cols, t), pivots, rank }
    }

    pub fn rank(&self) -> usize {
        let rows = self.row_vectors();
        if self.fill() > DENSE_FILL_THRESHOLD {
            dense_echelon(self.field, self.cols, &rows).1.len()
        } else {
            sparse_echelon(self.field, self.cols, &rows).1.len()
        }
    }

    /// Columns form a basis of the null space.
    pub fn kernel(&self) -> Matrix {
        let r = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        let reduced_rows = r.matrix.row_vectors();
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut entries = vec![(f, self.field.one())];
            for (k, &p) in r.pivots.iter().enumerate() {
                if let Some(x) = reduced_rows[k].get(f) {
                    entries.push((p, -x));
                }
            }
            basis.push(SparseVec::from_entries(self.cols, entries));
        }
        Matrix::from_columns(self.field, self.cols, basis)
    }

    /// Columns form a basis of the column space (pivot columns of the input).
    pub fn image_basis(&self) -> Matrix {
        let r = self.rref();
        self.select_columns(&r.pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let s = Solver::new(self);
        if s.rank != self.rows {
            return None;
        }
        let cols = (0..self.rows)
            .map(|i| s.solve(&SparseVec::unit(self.rows, i, self.field.one())))
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(self.field, self.cols, cols))
    }
}

/// Incremental sparse Gauss-Jordan. Returns fully reduced pivot rows sorted by pivot.
fn sparse_echelon(_field: FieldSpec, ncols: usize, rows: &[SparseVec]) -> (Vec<SparseVec>, Vec<usize>) {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut prow: Vec<(usize, SparseVec)> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        let hits: Vec<(usize, Scalar)> = v
            .entries
            .iter()
            .filter_map(|(c, x)| pivot_of_col[*c].map(|k| (k, x.clone())))
            .collect();
        for (k, x) in hits {
            v = v.axpy(&-x, &prow[k].1);
        }
        let Some((lead, lx)) = v.entries.first().cloned() else {
            continue;
        };
        v = v.scale(&lx.inv().expect("nonzero leading entry"));
        for (_, p) in prow.iter_mut() {
            if let Some(x) = p.get(lead).cloned() {
                *p = p.axpy(&-x, &v);
            }
        }
        pivot_of_col[lead] = Some(prow.len());
        prow.push((lead, v));
    }
    prow.sort_by_key(|(p, _)| *p);
    let pivots = prow.iter().map(|(p, _)| *p).collect();
    (prow.into_iter().map(|(_, v)| v).collect(), pivots)
}

/// Dense Gauss-Jordan on row-major storage.
fn dense_echelon(field: FieldSpec, ncols: usize, rows: &[SparseVec]) -> (Vec<SparseVec>, Vec<usize>) {
    let zero = field.zero();
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![zero.clone(); ncols];
            for (j, x) in &r.entries {
                d[*j] = x.clone();
            }
            d
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(sel) = (top..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(top, sel);
        let inv = m[top][c].inv().expect("nonzero pivot");
        for x in m[top].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        top += 1;
    }
    let reduced = m[..top]
        .iter()
        .map(|d| {
            SparseVec::from_entries(ncols, d.iter().enumerate().map(|(j, x)| (j, x.clone())))
        })
        .collect();
    (reduced, pivots)
}

/// Reusable solver for `m x = t`, built from the reduction of `[m | I]`.
#[derive(Clone, Debug)]
pub struct Solver {
    field: FieldSpec,
    cols: usize,
    rows: usize,
    pub rank: usize,
    /// (pivot column, transformation row) for every pivot in the left block.
    solution_rows: Vec<(usize, SparseVec)>,
    /// Transformation rows whose left block vanished: consistency conditions.
    constraints: Vec<SparseVec>,
}

impl Solver {
    pub fn new(m: &Matrix) -> Solver {
        let aug = m.hstack(&Matrix::identity(m.field, m.rows));
        let rows = aug.row_vectors();
        let (reduced, pivots) = sparse_echelon(m.field, m.cols + m.rows, &rows);
        let mut solution_rows = Vec::new();
        let mut constraints = Vec::new();
        for (r, p) in reduced.into_iter().zip(pivots) {
            let right = SparseVec {
                dim: m.rows,
                entries: r
                    .entries
                    .iter()
                    .filter(|(j, _)| *j >= m.cols)
                    .map(|(j, x)| (j - m.cols, x.clone()))
                    .collect(),
            };
            if p < m.cols {
                solution_rows.push((p, right));
            } else {
                constraints.push(right);
            }
        }
        Solver {
            field: m.field,
            cols: m.cols,
            rows: m.rows,
            rank: solution_rows.len(),
            solution_rows,
            constraints,
        }
    }

    /// A particular solution (free variables zero), or `None` if inconsistent.
    pub fn solve(&self, t: &SparseVec) -> Option<SparseVec> {
        assert_eq!(t.dim, self.rows, "right-hand side dimension mismatch");
        let dense = {
            let mut d = vec![self.field.zero(); self.rows];
            for (i, x) in &t.entries {
                d[*i] = x.clone();
            }
            d
        };
        for c in &self.constraints {
            if let Some(v) = c.dot_dense(&dense) {
                if !v.is_zero() {
                    return None;
                }
            }
        }
        let entries = self
            .solution_rows
            .iter()
            .filter_map(|(p, r)| r.dot_dense(&dense).map(|v| (*p, v)));
        Some(SparseVec::from_entries(self.cols, entries))
    }
}
