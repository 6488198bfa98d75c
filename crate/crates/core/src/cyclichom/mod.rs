//! Cyclic and cocyclic modules: a generic axiom checker, the four Hopf-cyclic
//! constructions, Hopf-Galois maps, induced maps of measurings, Hochschild and
//! cyclic (co)homology, and shuffle products.

mod build;
mod homology;
mod induced;
mod shuffle;

use serde::{Deserialize, Serialize};

use crate::algcore::{first_diff_col, CheckReport};
use crate::exactlin::{FieldSpec, LinMap, Matrix, Space};

pub use build::{
    build_cocyclic_cu, build_cocyclic_with_coeffs, build_cyclic_cu, build_cyclic_with_coeffs, cyclic_dual, opposite,
    hopf_galois_chain_map, transport, HopfGaloisMaps,
};
pub use homology::{
    chain_homology, check_mixed_complex, cyclic_homology_char0, homology_classes, hochschild_homology, mixed_complex,
    normalized_hochschild_homology, HomologyClasses, HomologyReport, MixedComplexData, Theory, Variant,
};
pub use induced::{
    check_morphism, hopf_galois_square, hopf_galois_square_coeffs, induced_coeff_maps, induced_map_on_homology,
    induced_maps, InducedSide,
};
pub use shuffle::{check_shuffle_measuring, shuffle_product};

/// Default truncation degree.
pub const N_MAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Faces `d_i: C_n → C_{n-1}`, degeneracies `s_i: C_n → C_{n+1}`.
    Cyclic,
    /// Cofaces `δ_i: C^n → C^{n+1}`, codegeneracies `σ_i: C^n → C^{n-1}`.
    Cocyclic,
}

/// A (co)cyclic module truncated at degree `top`.
///
/// Cyclic: `faces[n]` holds `d_0..=d_n` out of degree `n` (empty for `n = 0`),
/// `degeneracies[n]` holds `s_0..=s_n` out of degree `n` (empty for `n = top`).
/// Cocyclic: `faces[n]` holds `δ_0..=δ_{n+1}` out of degree `n` (empty for
/// `n = top`), `degeneracies[n]` holds `σ_0..σ_{n-1}` out of degree `n`.
#[derive(Clone, Debug)]
pub struct CyclicModuleData {
    pub label: String,
    pub field: FieldSpec,
    pub direction: Direction,
    pub spaces: Vec<Space>,
    pub faces: Vec<Vec<LinMap>>,
    pub degeneracies: Vec<Vec<LinMap>>,
    pub cyclic: Vec<LinMap>,
}

impl CyclicModuleData {
    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i].mat
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.degeneracies[n][i].mat
    }

    pub fn t(&self, n: usize) -> &Matrix {
        &self.cyclic[n].mat
    }

    /// `λ_n = (-1)^n t_n`
    pub fn lambda(&self, n: usize) -> Matrix {
        signed(self.t(n), n)
    }

    /// Constant module with every space `k` and every operator the identity.
    pub fn point(field: FieldSpec, direction: Direction, top: usize) -> Self {
        let spaces: Vec<Space> = (0..=top).map(|n| Space::new(1, format!("k[{n}]"))).collect();
        let id = |a: usize, b: usize| LinMap {
            dom: spaces[a].clone(),
            cod: spaces[b].clone(),
            mat: Matrix::identity(field, 1),
        };
        let (faces, degeneracies) = match direction {
            Direction::Cyclic => (
                (0..=top).map(|n| if n == 0 { vec![] } else { (0..=n).map(|_| id(n, n - 1)).collect() }).collect(),
                (0..=top).map(|n| if n == top { vec![] } else { (0..=n).map(|_| id(n, n + 1)).collect() }).collect(),
            ),
            Direction::Cocyclic => (
                (0..=top).map(|n| if n == top { vec![] } else { (0..=n + 1).map(|_| id(n, n + 1)).collect() }).collect(),
                (0..=top).map(|n| (0..n).map(|_| id(n, n - 1)).collect()).collect(),
            ),
        };
        CyclicModuleData {
            label: "point".into(),
            field,
            direction,
            faces,
            degeneracies,
            cyclic: (0..=top).map(|n| id(n, n)).collect(),
            spaces,
        }
    }

    /// Truncation to degrees `0..=top`.
    pub fn truncate(&self, top: usize) -> Self {
        assert!(top <= self.top());
        let mut m = self.clone();
        m.spaces.truncate(top + 1);
        m.cyclic.truncate(top + 1);
        m.faces.truncate(top + 1);
        m.degeneracies.truncate(top + 1);
        match self.direction {
            Direction::Cyclic => m.degeneracies[top].clear(),
            Direction::Cocyclic => m.faces[top].clear(),
        }
        m
    }

    /// Hochschild differential out of degree `n` (`b_n: C_n → C_{n-1}` or `b^n: C^n → C^{n+1}`).
    pub fn hochschild_differential(&self, n: usize) -> Matrix {
        let ops = &self.faces[n];
        let (rows, cols) = match self.direction {
            Direction::Cyclic => (if n == 0 { 0 } else { self.dim(n - 1) }, self.dim(n)),
            Direction::Cocyclic => (if n == self.top() { 0 } else { self.dim(n + 1) }, self.dim(n)),
        };
        alternating_sum(self.field, rows, cols, ops.iter().map(|f| &f.mat))
    }
}

pub(crate) fn signed(m: &Matrix, n: usize) -> Matrix {
    if n % 2 == 0 {
        m.clone()
    } else {
        m.scale(&m.field.from_i64(-1))
    }
}

pub(crate) fn alternating_sum<'a>(field: FieldSpec, rows: usize, cols: usize, ops: impl Iterator<Item = &'a Matrix>) -> Matrix {
    let mut acc = Matrix::zeros(field, rows, cols);
    for (i, m) in ops.enumerate() {
        acc = if i % 2 == 0 { acc.add(m) } else { acc.sub(m) };
    }
    acc
}

fn power(m: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::identity(m.field, m.cols), |acc, _| m.mul(&acc))
}

/// Records the first failing `(n, i, j, column)` of an identity family.
struct Family<'a> {
    report: &'a mut CheckReport,
    name: &'static str,
    witness: Option<Vec<usize>>,
    detail: Option<String>,
}

impl<'a> Family<'a> {
    fn new(report: &'a mut CheckReport, name: &'static str) -> Self {
        Family { report, name, witness: None, detail: None }
    }

    fn eq(&mut self, ix: &[usize], lhs: &Matrix, rhs: &Matrix) {
        if self.witness.is_some() {
            return;
        }
        if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols) {
            self.witness = Some(ix.to_vec());
            self.detail = Some(format!("shape {}x{} vs {}x{}", lhs.rows, lhs.cols, rhs.rows, rhs.cols));
        } else if let Some(c) = first_diff_col(lhs, rhs) {
            let mut w = ix.to_vec();
            w.extend(c);
            self.witness = Some(w);
        }
    }

    fn finish(self) {
        match self.detail {
            Some(d) => self.report.record_detail(self.name, self.witness, d),
            None => self.report.record(self.name, self.witness),
        }
    }
}

fn check_shapes(m: &CyclicModuleData, r: &mut CheckReport) -> bool {
    let top = m.top();
    let mut bad: Option<Vec<usize>> = None;
    fn expect(bad: &mut Option<Vec<usize>>, ok: bool, ix: Vec<usize>) {
        if !ok && bad.is_none() {
            *bad = Some(ix);
        }
    }
    expect(&mut bad, m.faces.len() == top + 1 && m.degeneracies.len() == top + 1 && m.cyclic.len() == top + 1, vec![]);
    if bad.is_none() {
        for n in 0..=top {
            let (nf, nd) = match m.direction {
                Direction::Cyclic => (if n == 0 { 0 } else { n + 1 }, if n == top { 0 } else { n + 1 }),
                Direction::Cocyclic => (if n == top { 0 } else { n + 2 }, n),
            };
            expect(&mut bad, m.faces[n].len() == nf && m.degeneracies[n].len() == nd, vec![n]);
            let (fdeg, ddeg) = match m.direction {
                Direction::Cyclic => (n.wrapping_sub(1), n + 1),
                Direction::Cocyclic => (n + 1, n.wrapping_sub(1)),
            };
            for (i, f) in m.faces[n].iter().enumerate() {
                expect(&mut bad, f.mat.cols == m.dim(n) && f.mat.rows == m.dim(fdeg), vec![n, i]);
            }
            for (i, f) in m.degeneracies[n].iter().enumerate() {
                expect(&mut bad, f.mat.cols == m.dim(n) && f.mat.rows == m.dim(ddeg), vec![n, i]);
            }
            expect(&mut bad, m.t(n).rows == m.dim(n) && m.t(n).cols == m.dim(n), vec![n]);
        }
    }
    let ok = bad.is_none();
    r.record("operator shapes", bad);
    ok
}

/// Checks every simplicial, cyclic-compatibility and `t^{n+1} = id` identity that
/// fits inside the truncation. Witnesses are `(n, i, j, column)` with `n` the
/// source degree.
pub fn check_cyclic_module(m: &CyclicModuleData) -> CheckReport {
    let mut r = CheckReport::new(format!("{:?} module {}", m.direction, m.label).to_lowercase());
    if !check_shapes(m, &mut r) {
        return r;
    }
    match m.direction {
        Direction::Cyclic => check_cyclic(m, &mut r),
        Direction::Cocyclic => check_cocyclic(m, &mut r),
    }
    let mut f = Family::new(&mut r, "t^(n+1) = id");
    for n in 0..=m.top() {
        f.eq(&[n], &power(m.t(n), n + 1), &Matrix::identity(m.field, m.dim(n)));
    }
    f.finish();
    r
}

fn check_cyclic(m: &CyclicModuleData, r: &mut CheckReport) {
    let top = m.top();
    let d = |n: usize, i: usize| m.face(n, i);
    let s = |n: usize, i: usize| m.degeneracy(n, i);
    let id = |n: usize| Matrix::identity(m.field, m.dim(n));

    let mut f = Family::new(r, "d_i d_j = d_(j-1) d_i");
    for n in 2..=top {
        for j in 0..=n {
            for i in 0..j {
                f.eq(&[n, i, j], &d(n - 1, i).mul(d(n, j)), &d(n - 1, j - 1).mul(d(n, i)));
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "s_i s_j = s_(j+1) s_i");
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                f.eq(&[n, i, j], &s(n + 1, i).mul(s(n, j)), &s(n + 1, j + 1).mul(s(n, i)));
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "d_i s_j");
    for n in 0..top {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = d(n + 1, i).mul(s(n, j));
                let rhs = if i < j {
                    s(n - 1, j - 1).mul(d(n, i))
                } else if i == j || i == j + 1 {
                    id(n)
                } else {
                    s(n - 1, j).mul(d(n, i - 1))
                };
                f.eq(&[n, i, j], &lhs, &rhs);
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "d_i t = t d_(i-1)");
    for n in 1..=top {
        f.eq(&[n, 0], &d(n, 0).mul(m.t(n)), d(n, n));
        for i in 1..=n {
            f.eq(&[n, i], &d(n, i).mul(m.t(n)), &m.t(n - 1).mul(d(n, i - 1)));
        }
    }
    f.finish();

    let mut f = Family::new(r, "s_i t = t s_(i-1)");
    for n in 0..top {
        let t2 = m.t(n + 1).mul(m.t(n + 1));
        f.eq(&[n, 0], &s(n, 0).mul(m.t(n)), &t2.mul(s(n, n)));
        for i in 1..=n {
            f.eq(&[n, i], &s(n, i).mul(m.t(n)), &m.t(n + 1).mul(s(n, i - 1)));
        }
    }
    f.finish();
}

fn check_cocyclic(m: &CyclicModuleData, r: &mut CheckReport) {
    let top = m.top();
    let d = |n: usize, i: usize| m.face(n, i);
    let s = |n: usize, i: usize| m.degeneracy(n, i);
    let id = |n: usize| Matrix::identity(m.field, m.dim(n));

    let mut f = Family::new(r, "δ_j δ_i = δ_i δ_(j-1)");
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n + 2 {
            for i in 0..j {
                f.eq(&[n, i, j], &d(n + 1, j).mul(d(n, i)), &d(n + 1, i).mul(d(n, j - 1)));
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "σ_j σ_i = σ_i σ_(j+1)");
    for n in 2..=top {
        for j in 0..n - 1 {
            for i in 0..=j {
                f.eq(&[n, i, j], &s(n - 1, j).mul(s(n, i)), &s(n - 1, i).mul(s(n, j + 1)));
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "σ_j δ_i");
    for n in 0..top {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = s(n + 1, j).mul(d(n, i));
                let rhs = if i < j {
                    d(n - 1, i).mul(s(n, j - 1))
                } else if i == j || i == j + 1 {
                    id(n)
                } else {
                    d(n - 1, i - 1).mul(s(n, j))
                };
                f.eq(&[n, i, j], &lhs, &rhs);
            }
        }
    }
    f.finish();

    let mut f = Family::new(r, "τ δ_i = δ_(i-1) τ");
    for n in 1..=top {
        f.eq(&[n, 0], &m.t(n).mul(d(n - 1, 0)), d(n - 1, n));
        for i in 1..=n {
            f.eq(&[n, i], &m.t(n).mul(d(n - 1, i)), &d(n - 1, i - 1).mul(m.t(n - 1)));
        }
    }
    f.finish();

    let mut f = Family::new(r, "τ σ_i = σ_(i-1) τ");
    for n in 0..top {
        let t2 = m.t(n + 1).mul(m.t(n + 1));
        f.eq(&[n, 0], &m.t(n).mul(s(n + 1, 0)), &s(n + 1, n).mul(&t2));
        for i in 1..=n {
            f.eq(&[n, i], &m.t(n).mul(s(n + 1, i)), &s(n + 1, i - 1).mul(m.t(n + 1)));
        }
    }
    f.finish();
}
