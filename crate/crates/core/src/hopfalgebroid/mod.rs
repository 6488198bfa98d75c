//! Left bialgebroids and left Hopf algebroids given by structure constants,
//! their axiom checks, Hopf-Galois maps, SAYD and Yetter-Drinfel'd data,
//! and a gallery of small examples.

mod checks;
pub mod gallery;
mod sayd;
mod yd;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algcore::{iterated_balanced_tensor, AlgebraData, TowerSlot};
use crate::error::{Error, Result};
use crate::exactlin::{
    descend, tensor::free_matrix, tensor::outer, Accum, FieldSpec, LinMap, Matrix, QuotientPresentation, Space,
    SparseVec, TensorShape,
};

pub use checks::{check_bialgebroid, check_hopf_algebroid};
pub use sayd::{check_sayd, CoeffTower, SaydModuleData};
pub use yd::{check_yd_algebra, YdAlgebraData};

/// Which balanced tensor power of `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerKind {
    /// `U ◁⊗_A ▷ U`: `t(a)u ⊗ v ≡ u ⊗ s(a)v`.
    Left,
    /// `▸U ⊗_{A^op} U◁`: `u t(a) ⊗ v ≡ u ⊗ t(a)v`.
    Right,
}

#[derive(Debug, Default)]
struct Cache {
    towers: Mutex<HashMap<(TowerKind, usize), Arc<QuotientPresentation>>>,
    iterated: Mutex<HashMap<usize, Arc<Matrix>>>,
    delta_lift: OnceLock<Matrix>,
    translation: OnceLock<Result<Matrix>>,
}

/// Left bialgebroid `(U, A, s, t, Δ, ε)`.
#[derive(Clone, Debug)]
pub struct LeftBialgebroidData {
    pub label: String,
    pub field: FieldSpec,
    pub u: AlgebraData,
    pub a: AlgebraData,
    /// `A → U`
    pub s: LinMap,
    /// `A^op → U`
    pub t: LinMap,
    /// `U → U ⊗_A U` in quotient coordinates.
    pub delta: LinMap,
    /// `U → A`
    pub eps: LinMap,
    perturbed: bool,
    cache: Arc<Cache>,
}

/// Left Hopf algebroid with an invertible antipode.
#[derive(Clone, Debug)]
pub struct HopfAlgebroidData {
    pub bialgebroid: LeftBialgebroidData,
    /// `U → U`
    pub antipode: LinMap,
}

impl std::ops::Deref for HopfAlgebroidData {
    type Target = LeftBialgebroidData;
    fn deref(&self) -> &LeftBialgebroidData {
        &self.bialgebroid
    }
}

impl LeftBialgebroidData {
    /// Builds a bialgebroid; `delta_lift` is any lift of `Δ` into the plain `U ⊗ U`.
    pub fn new(
        label: &str,
        u: AlgebraData,
        a: AlgebraData,
        s: Matrix,
        t: Matrix,
        delta_lift: Matrix,
        eps: Matrix,
    ) -> Result<Self> {
        let (du, da) = (u.dim(), a.dim());
        let field = u.field;
        if a.field != field || [&s, &t, &delta_lift, &eps].iter().any(|m| m.field != field) {
            return Err(Error::LinAlg(crate::exactlin::LinAlgError::FieldMismatch));
        }
        let shape_ok = s.rows == du
            && s.cols == da
            && t.rows == du
            && t.cols == da
            && delta_lift.rows == du * du
            && delta_lift.cols == du
            && eps.rows == da
            && eps.cols == du;
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!("structure maps of {label} have inconsistent shapes")));
        }
        let placeholder = Space::new(0, "pending");
        let mut b = LeftBialgebroidData {
            label: label.to_string(),
            field,
            s: LinMap { dom: a.space.clone(), cod: u.space.clone(), mat: s },
            t: LinMap { dom: a.space.clone(), cod: u.space.clone(), mat: t },
            eps: LinMap { dom: u.space.clone(), cod: a.space.clone(), mat: eps },
            delta: LinMap::zero(field, &u.space, &placeholder),
            u,
            a,
            perturbed: false,
            cache: Arc::new(Cache::default()),
        };
        let l2 = b.tower(TowerKind::Left, 2)?;
        b.delta = LinMap {
            dom: b.u.space.clone(),
            cod: l2.quotient.clone(),
            mat: l2.projection.mat.mul(&delta_lift),
        };
        Ok(b)
    }

    pub fn du(&self) -> usize {
        self.u.dim()
    }

    pub fn da(&self) -> usize {
        self.a.dim()
    }

    /// Same structure, but every lift is shifted by a nonzero relation.
    /// Operators built from both copies must agree.
    pub fn with_perturbed_lifts(&self) -> Self {
        let mut b = self.clone();
        b.perturbed = true;
        b.cache = Arc::new(Cache {
            towers: Mutex::new(self.cache.towers.lock().unwrap().clone()),
            ..Cache::default()
        });
        b
    }

    pub fn is_perturbed(&self) -> bool {
        self.perturbed
    }

    pub fn one_u(&self) -> &SparseVec {
        &self.u.unit
    }

    pub fn ubasis(&self, i: usize) -> SparseVec {
        self.u.basis(i)
    }

    pub fn s_of(&self, a: usize) -> &SparseVec {
        self.s.mat.col(a)
    }

    pub fn t_of(&self, a: usize) -> &SparseVec {
        self.t.mat.col(a)
    }

    pub fn s_vec(&self, a: &SparseVec) -> SparseVec {
        self.s.mat.mul_vec(a)
    }

    pub fn t_vec(&self, a: &SparseVec) -> SparseVec {
        self.t.mat.mul_vec(a)
    }

    pub fn eps_of(&self, u: usize) -> &SparseVec {
        self.eps.mat.col(u)
    }

    pub fn eps_vec(&self, u: &SparseVec) -> SparseVec {
        self.eps.mat.mul_vec(u)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.u.mul_vec(x, y)
    }

    /// Left-to-right product in `U`.
    pub fn prod(&self, factors: &[&SparseVec]) -> SparseVec {
        self.u.product(factors)
    }

    /// Tower slot actions for `U` in the given balanced tensor power.
    pub fn u_slot(&self, kind: TowerKind) -> TowerSlot {
        let (du, da) = (self.du(), self.da());
        let mut left = Vec::with_capacity(da * du);
        for a in 0..da {
            let x = match kind {
                TowerKind::Left => self.s_of(a),
                TowerKind::Right => self.t_of(a),
            };
            let lm = self.u.left_mul(x);
            for y in 0..du {
                left.push(lm.col(y).clone());
            }
        }
        let mut right = Vec::with_capacity(du * da);
        for x in 0..du {
            for a in 0..da {
                let e = self.ubasis(x);
                right.push(match kind {
                    TowerKind::Left => self.mul(self.t_of(a), &e),
                    TowerKind::Right => self.mul(&e, self.t_of(a)),
                });
            }
        }
        TowerSlot {
            dim: du,
            left: Some(Matrix::from_columns(self.field, du, left)),
            right: Some(Matrix::from_columns(self.field, du, right)),
        }
    }

    /// `U^{⊗n}` balanced over `A` (degree 0 is `A` itself).
    pub fn tower(&self, kind: TowerKind, n: usize) -> Result<Arc<QuotientPresentation>> {
        if let Some(p) = self.cache.towers.lock().unwrap().get(&(kind, n)) {
            return Ok(p.clone());
        }
        let p = if n == 0 {
            QuotientPresentation::trivial(self.field, &self.a.space)
        } else {
            let slot = self.u_slot(kind);
            let label = match kind {
                TowerKind::Left => format!("{}^(⊗_A {n})", self.label),
                TowerKind::Right => format!("{}^(⊗_Aop {n})", self.label),
            };
            iterated_balanced_tensor(self.field, self.da(), &vec![slot; n], &label)?
        };
        let p = Arc::new(p);
        self.cache.towers.lock().unwrap().insert((kind, n), p.clone());
        Ok(p)
    }

    /// A relation vector used to shift lifts in perturbed mode.
    fn perturbation(&self, kind: TowerKind, n: usize, seed: usize) -> Option<SparseVec> {
        if !self.perturbed {
            return None;
        }
        let p = self.tower(kind, n).ok()?;
        let r = &p.relations.mat;
        if r.cols == 0 {
            return None;
        }
        Some(r.col((seed * 7 + 3) % r.cols).scale(&self.field.from_i64(seed as i64 + 2)))
    }

    /// `Δ` lifted to `U ⊗ U` (section of the quotient, shifted in perturbed mode).
    pub fn delta_lift(&self) -> &Matrix {
        self.cache.delta_lift.get_or_init(|| {
            let l2 = self.tower(TowerKind::Left, 2).expect("tower of degree 2");
            let base = l2.section.mat.mul(&self.delta.mat);
            let cols = (0..self.du())
                .map(|u| match self.perturbation(TowerKind::Left, 2, u) {
                    Some(r) => base.col(u).add(&r),
                    None => base.col(u).clone(),
                })
                .collect();
            Matrix::from_columns(self.field, self.du() * self.du(), cols)
        })
    }

    pub fn delta_of(&self, u: usize) -> &SparseVec {
        self.delta_lift().col(u)
    }

    /// Terms `(c, u₁, u₂)` of the lifted coproduct of a basis element.
    pub fn delta_terms(&self, u: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
        let du = self.du();
        self.delta_of(u).entries.iter().map(|(f, c)| (c.clone(), f / du, f % du)).collect()
    }

    /// Lifted iterated coproduct `U → U^{⊗n}` (`n ≥ 1`), expanding the first factor.
    pub fn iterated_delta(&self, n: usize) -> Arc<Matrix> {
        assert!(n >= 1);
        if let Some(m) = self.cache.iterated.lock().unwrap().get(&n) {
            return m.clone();
        }
        let du = self.du();
        let m = if n == 1 {
            Matrix::identity(self.field, du)
        } else {
            let prev = self.iterated_delta(n - 1);
            let ps = TensorShape::power(du, n - 1);
            let ns = TensorShape::power(du, n);
            let cols = prev
                .columns()
                .iter()
                .map(|col| {
                    let mut acc = Accum::new(ns.total());
                    for (flat, c) in &col.entries {
                        let ix = ps.unflatten(*flat);
                        for (x, a, b) in self.delta_terms(ix[0]) {
                            let mut j = vec![a, b];
                            j.extend_from_slice(&ix[1..]);
                            acc.add(ns.flatten(&j), &(c * &x));
                        }
                    }
                    acc.finish()
                })
                .collect();
            Matrix::from_columns(self.field, ns.total(), cols)
        };
        let m = Arc::new(m);
        self.cache.iterated.lock().unwrap().insert(n, m.clone());
        m
    }

    /// Terms of the lifted `n`-fold coproduct of a vector.
    pub fn sweedler(&self, v: &SparseVec, n: usize) -> Vec<(crate::exactlin::Scalar, Vec<usize>)> {
        let shape = TensorShape::power(self.du(), n);
        let w = self.iterated_delta(n).mul_vec(v);
        crate::exactlin::tensor::terms(&shape, &w)
    }

    /// Galois map `β: ▸U ⊗_{A^op} U◁ → U◁ ⊗_A ▷U`, `u ⊗ v ↦ u₍₁₎ ⊗ u₍₂₎v`.
    pub fn beta(&self) -> Result<LinMap> {
        let du = self.du();
        let src = self.tower(TowerKind::Right, 2)?;
        let dst = self.tower(TowerKind::Left, 2)?;
        let shape = TensorShape::power(du, 2);
        let free = free_matrix(self.field, &shape, du * du, |ix| {
            let mut acc = Accum::new(du * du);
            for (c, x, y) in self.delta_terms(ix[0]) {
                let yv = self.mul(&self.ubasis(y), &self.ubasis(ix[1]));
                acc.add_vec(&c, &outer(&[&self.ubasis(x), &yv]));
            }
            acc.finish()
        });
        descend(&free, &src, &dst).map_err(|f| Error::descent("beta", f))
    }

    /// Translation map `u ↦ u₊ ⊗_{A^op} u₋ = β⁻¹(u ⊗ 1)` in quotient coordinates.
    pub fn translation(&self) -> Result<LinMap> {
        let beta = self.beta()?;
        let inv = beta
            .inverse()
            .map_err(|_| Error::NoSolution(format!("Galois map of {} is not invertible", self.label)))?;
        let l2 = self.tower(TowerKind::Left, 2)?;
        let du = self.du();
        let cols = (0..du)
            .map(|u| l2.project(&outer(&[&self.ubasis(u), self.one_u()])))
            .collect();
        let u_tensor_one = Matrix::from_columns(self.field, l2.dim(), cols);
        Ok(LinMap { dom: self.u.space.clone(), cod: inv.cod.clone(), mat: inv.mat.mul(&u_tensor_one) })
    }

    /// Lifted translation map into the plain `U ⊗ U`.
    pub fn translation_lift(&self) -> Result<&Matrix> {
        let r = self.cache.translation.get_or_init(|| {
            let tr = self.translation()?;
            let r2 = self.tower(TowerKind::Right, 2)?;
            let base = r2.section.mat.mul(&tr.mat);
            let cols = (0..self.du())
                .map(|u| match self.perturbation(TowerKind::Right, 2, u + 1) {
                    Some(r) => base.col(u).add(&r),
                    None => base.col(u).clone(),
                })
                .collect();
            Ok(Matrix::from_columns(self.field, self.du() * self.du(), cols))
        });
        r.as_ref().map_err(Clone::clone)
    }

    /// Terms `(c, u₊, u₋)` of the lifted translation map.
    pub fn translation_terms(&self, u: usize) -> Result<Vec<(crate::exactlin::Scalar, usize, usize)>> {
        let du = self.du();
        Ok(self.translation_lift()?.col(u).entries.iter().map(|(f, c)| (c.clone(), f / du, f % du)).collect())
    }

    /// Terms of the translation map applied to a vector.
    pub fn translation_vec(&self, v: &SparseVec) -> Result<Vec<(crate::exactlin::Scalar, usize, usize)>> {
        let du = self.du();
        let w = self.translation_lift()?.mul_vec(v);
        Ok(w.entries.iter().map(|(f, c)| (c.clone(), f / du, f % du)).collect())
    }

    pub fn is_commutative(&self) -> bool {
        self.u.is_commutative() && self.a.is_commutative()
    }
}

impl HopfAlgebroidData {
    pub fn new(bialgebroid: LeftBialgebroidData, antipode: Matrix) -> Result<Self> {
        let du = bialgebroid.du();
        if antipode.rows != du || antipode.cols != du {
            return Err(Error::DimensionMismatch("antipode must be an endomorphism of U".into()));
        }
        let sp = bialgebroid.u.space.clone();
        Ok(HopfAlgebroidData { antipode: LinMap { dom: sp.clone(), cod: sp, mat: antipode }, bialgebroid })
    }

    pub fn antipode_of(&self, u: usize) -> &SparseVec {
        self.antipode.mat.col(u)
    }

    pub fn antipode_vec(&self, u: &SparseVec) -> SparseVec {
        self.antipode.mat.mul_vec(u)
    }

    pub fn with_perturbed_lifts(&self) -> Self {
        HopfAlgebroidData { bialgebroid: self.bialgebroid.with_perturbed_lifts(), antipode: self.antipode.clone() }
    }

    /// Right bialgebroid structure maps `s_R = t_L`, `t_R = s_L`, `ε_R = ε_L ∘ S`.
    pub fn eps_right(&self) -> Matrix {
        self.eps.mat.mul(&self.antipode.mat)
    }
}
