//! Non-Σ operads with multiplication, cyclic unital comp modules over them, their
//! measurings and comodule measurings, the associated cyclic module, and the
//! Yetter-Drinfel'd operad and comp module of a Hopf algebra.

pub mod examples;
mod yd;

use crate::algcore::{first_diff_col, measuring_at, CheckReport, CoalgebraData, ComoduleData, Side};
use crate::cyclichom::{check_morphism, induced_map_on_homology, CyclicModuleData, Direction, Variant};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::outer, Accum, FieldSpec, LinMap, Matrix, Space, SparseVec};

pub use yd::{build_yd_comp_module, build_yd_operad, check_ayd_morphism, induce_from_yd, tensor_is_stable};

/// A non-Σ operad with multiplication, truncated at arity `top`.
#[derive(Clone, Debug)]
pub struct OperadData {
    pub label: String,
    pub field: FieldSpec,
    pub spaces: Vec<Space>,
    /// `comp[p][q][i-1]: O(p) ⊗ O(q) → O(p+q-1)` with column `u * dim O(q) + v`.
    /// Empty unless `p ≥ 1` and `p+q-1 ≤ top`; `∘_i` vanishes for `i > p`.
    pub comp: Vec<Vec<Vec<Matrix>>>,
    pub one: SparseVec,
    pub m: SparseVec,
    pub e: SparseVec,
}

impl OperadData {
    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim
    }

    pub fn basis(&self, n: usize, i: usize) -> SparseVec {
        SparseVec::unit(self.dim(n), i, self.field.one())
    }

    /// `u ∘_i v`, or `None` when the arity leaves the truncation.
    pub fn compose(&self, p: usize, i: usize, u: &SparseVec, q: usize, v: &SparseVec) -> Option<SparseVec> {
        if p + q == 0 || p + q - 1 > self.top() {
            return None;
        }
        if p == 0 || i == 0 || i > p {
            return Some(SparseVec::zero(self.dim(p + q - 1)));
        }
        Some(self.comp[p][q][i - 1].mul_vec(&outer(&[u, v])))
    }

    fn validate(&self) -> Result<()> {
        let top = self.top();
        let ok = self.comp.len() == top + 1
            && (0..=top).all(|p| {
                self.comp[p].len() == top + 1
                    && (0..=top).all(|q| {
                        let c = &self.comp[p][q];
                        if p == 0 || p + q - 1 > top {
                            c.is_empty()
                        } else {
                            c.len() == p
                                && c.iter().all(|m| m.rows == self.dim(p + q - 1) && m.cols == self.dim(p) * self.dim(q))
                        }
                    })
            })
            && self.one.dim == self.dim(1)
            && self.e.dim == self.dim(0)
            && (top < 2 || self.m.dim == self.dim(2));
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("operad {} has inconsistent shapes", self.label)))
        }
    }
}

/// A cyclic unital comp module over an operad, truncated at degree `top`.
#[derive(Clone, Debug)]
pub struct CompModuleData {
    pub label: String,
    pub field: FieldSpec,
    pub spaces: Vec<Space>,
    /// `bullet[p][n][i]: O(p) ⊗ L(n) → L(n-p+1)` for `0 ≤ i ≤ n+1-p`, column
    /// `u * dim L(n) + l`. `None` where undefined (`•_0` with `p = 0`) or beyond `top`.
    pub bullet: Vec<Vec<Vec<Option<Matrix>>>>,
    pub t: Vec<Matrix>,
}

impl CompModuleData {
    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim
    }

    pub fn basis(&self, n: usize, i: usize) -> SparseVec {
        SparseVec::unit(self.dim(n), i, self.field.one())
    }

    /// `u •_i l` for `u ∈ O(p)`, `l ∈ L(n)`; zero for `p > n+1`.
    pub fn act(&self, p: usize, i: usize, u: &SparseVec, n: usize, l: &SparseVec) -> Option<SparseVec> {
        if p > n + 1 {
            return None;
        }
        let m = self.bullet.get(p)?.get(n)?.get(i)?.as_ref()?;
        Some(m.mul_vec(&outer(&[u, l])))
    }

    /// The matrix of `l ↦ u •_i l` on `L(n)`.
    pub fn act_matrix(&self, p: usize, i: usize, u: &SparseVec, n: usize) -> Option<Matrix> {
        if p > n + 1 {
            return None;
        }
        let m = self.bullet.get(p)?.get(n)?.get(i)?.as_ref()?;
        let col = Matrix::from_columns(self.field, u.dim, vec![u.clone()]);
        Some(m.mul(&col.kron(&Matrix::identity(self.field, self.dim(n)))))
    }
}

/// Witness bookkeeping for families of identities quantified over indices.
struct Table {
    names: Vec<&'static str>,
    witnesses: Vec<Option<Vec<usize>>>,
    unchecked: usize,
}

impl Table {
    fn new(names: &[&'static str]) -> Self {
        Table { names: names.to_vec(), witnesses: vec![None; names.len()], unchecked: 0 }
    }

    fn compare(&mut self, case: usize, lhs: Option<SparseVec>, rhs: Option<SparseVec>, witness: impl FnOnce() -> Vec<usize>) {
        match (lhs, rhs) {
            (Some(a), Some(b)) => {
                if a != b && self.witnesses[case].is_none() {
                    self.witnesses[case] = Some(witness());
                }
            }
            _ => self.unchecked += 1,
        }
    }

    fn finish(self, r: &mut CheckReport, what: &str) {
        for (n, w) in self.names.iter().zip(self.witnesses) {
            r.record(n, w);
        }
        if self.unchecked > 0 {
            r.unchecked(&format!("{what} beyond truncation"), format!("{} instances leave the truncation or are undefined", self.unchecked));
        }
    }
}

/// The associativity table in its three cases, units, `m∘₁m = m∘₂m` and
/// `m∘_i e = 𝟙`. Witnesses are `(p, q, r, i, j, u, v, w)` in basis indices.
pub fn check_operad(o: &OperadData) -> CheckReport {
    let mut r = CheckReport::new(format!("operad {}", o.label));
    if let Err(e) = o.validate() {
        r.record("shapes", Some(vec![]));
        r.unchecked("shapes", e.to_string());
        return r;
    }
    let top = o.top();
    let mut t = Table::new(&["associativity j < i", "associativity i ≤ j < q+i", "associativity j ≥ q+i"]);
    for p in 1..=top {
        for q in 0..=top {
            for rr in 0..=top {
                if p + q == 1 || p + q + rr < 2 || p + q + rr - 2 > top {
                    continue;
                }
                for i in 1..=p {
                    for j in 1..p + q {
                        for (u, v, w) in triples(o.dim(p), o.dim(q), o.dim(rr)) {
                            let (ub, vb, wb) = (o.basis(p, u), o.basis(q, v), o.basis(rr, w));
                            let lhs = o.compose(p, i, &ub, q, &vb).and_then(|x| o.compose(p + q - 1, j, &x, rr, &wb));
                            let (case, rhs) = if j < i {
                                (0, o.compose(p, j, &ub, rr, &wb).and_then(|x| o.compose(p + rr - 1, i + rr - 1, &x, q, &vb)))
                            } else if j < q + i {
                                (1, o.compose(q, j - i + 1, &vb, rr, &wb).and_then(|x| o.compose(p, i, &ub, q + rr - 1, &x)))
                            } else {
                                (2, o.compose(p, j - q + 1, &ub, rr, &wb).and_then(|x| o.compose(p + rr - 1, i, &x, q, &vb)))
                            };
                            t.compare(case, lhs, rhs, || vec![p, q, rr, i, j, u, v, w]);
                        }
                    }
                }
            }
        }
    }
    t.finish(&mut r, "associativity");

    let mut units = Table::new(&["u ∘_i 𝟙 = u", "𝟙 ∘_1 u = u"]);
    for p in 0..=top {
        for u in 0..o.dim(p) {
            let ub = o.basis(p, u);
            for i in 1..=p {
                units.compare(0, o.compose(p, i, &ub, 1, &o.one), Some(ub.clone()), || vec![p, i, u]);
            }
            units.compare(1, o.compose(1, 1, &o.one, p, &ub), Some(ub.clone()), || vec![p, 1, u]);
        }
    }
    units.finish(&mut r, "unit");
    if top >= 3 {
        let l = o.compose(2, 1, &o.m, 2, &o.m);
        r.record("m∘₁m = m∘₂m", if l == o.compose(2, 2, &o.m, 2, &o.m) { None } else { Some(vec![]) });
    } else {
        r.unchecked("m∘₁m = m∘₂m", format!("needs arity 3, truncated at {top}"));
    }
    if top >= 2 {
        let w = (1..=2).find(|&i| o.compose(2, i, &o.m, 0, &o.e).as_ref() != Some(&o.one));
        r.record("m∘_i e = 𝟙", w.map(|i| vec![i]));
    }
    r
}

fn triples(a: usize, b: usize, c: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..a).flat_map(move |x| (0..b).flat_map(move |y| (0..c).map(move |z| (x, y, z))))
}

/// Both case tables, `𝟙 •_i l = l`, `t(u •_i l) = u •_{i+1} t(l)` and
/// `t^{n+1} = id`. Index pairs where an action is undefined or leaves the
/// truncation are reported as unchecked. Witnesses are `(p, q, n, i, j, u, v, l)`.
pub fn check_comp_module(o: &OperadData, l: &CompModuleData) -> CheckReport {
    let mut r = CheckReport::new(format!("comp module {} over {}", l.label, o.label));
    let top = l.top();
    let ok = l.t.len() == top + 1 && (0..=top).all(|n| l.t[n].rows == l.dim(n) && l.t[n].cols == l.dim(n));
    r.record("shapes", if ok { None } else { Some(vec![]) });
    if !ok {
        return r;
    }
    let mut t = Table::new(&[
        "p > 0, j < i",
        "p > 0, j-p < i ≤ j",
        "p > 0, i ≤ j-p",
        "p = 0, j < i",
        "p = 0, i ≤ j",
    ]);
    for p in 0..=o.top() {
        for q in 0..=o.top() {
            for n in 0..=top {
                if q > n + 1 || n + 1 - q > top {
                    continue;
                }
                let n1 = n + 1 - q;
                if p > n1 + 1 {
                    continue;
                }
                for j in 0..=n1 {
                    for i in 0..=n1 + 1 - p {
                        for (u, v, x) in triples(o.dim(p), o.dim(q), l.dim(n)) {
                            let (ub, vb, lb) = (o.basis(p, u), o.basis(q, v), l.basis(n, x));
                            let lhs = l.act(q, j, &vb, n, &lb).and_then(|y| l.act(p, i, &ub, n1, &y));
                            let (case, rhs) = if j < i {
                                let c = if p > 0 { 0 } else { 3 };
                                (c, l.act(p, i + q - 1, &ub, n, &lb).and_then(|y| l.act(q, j, &vb, n + 1 - p, &y)))
                            } else if p == 0 {
                                (4, l.act(0, i, &ub, n, &lb).and_then(|y| l.act(q, j + 1, &vb, n + 1, &y)))
                            } else if j < i + p {
                                (1, o.compose(p, j - i + 1, &ub, q, &vb).and_then(|w| l.act(p + q - 1, i, &w, n, &lb)))
                            } else {
                                (2, l.act(p, i, &ub, n, &lb).and_then(|y| l.act(q, j - p + 1, &vb, n + 1 - p, &y)))
                            };
                            t.compare(case, lhs, rhs, || vec![p, q, n, i, j, u, v, x]);
                        }
                    }
                }
            }
        }
    }
    t.finish(&mut r, "comp table");

    let mut more = Table::new(&["𝟙 •_i l = l", "t(u •_i l) = u •_{i+1} t(l)"]);
    for n in 0..=top {
        for x in 0..l.dim(n) {
            let lb = l.basis(n, x);
            if o.top() >= 1 {
                for i in 0..=n {
                    more.compare(0, l.act(1, i, &o.one, n, &lb), Some(lb.clone()), || vec![n, i, x]);
                }
            }
            for p in 0..=o.top().min(n) {
                for i in 0..=n - p {
                    for u in 0..o.dim(p) {
                        let ub = o.basis(p, u);
                        let n2 = n + 1 - p;
                        let lhs = l.act(p, i, &ub, n, &lb).filter(|_| n2 <= top).map(|y| l.t[n2].mul_vec(&y));
                        let rhs = l.act(p, i + 1, &ub, n, &l.t[n].mul_vec(&lb));
                        more.compare(1, lhs, rhs, || vec![p, n, i, u, x]);
                    }
                }
            }
        }
    }
    more.finish(&mut r, "unit and cyclic");
    r.record(
        "t^{n+1} = id",
        (0..=top).find_map(|n| {
            let mut acc = Matrix::identity(l.field, l.dim(n));
            for _ in 0..=n {
                acc = l.t[n].mul(&acc);
            }
            first_diff_col(&acc, &Matrix::identity(l.field, l.dim(n))).map(|c| vec![n, c[0]])
        }),
    );
    r
}

/// `d_i = m •_i` (`i < n`), `d_n = (m •_0) ∘ t`, `s_j = e •_{j+1}` on `L(0..=top)`.
pub fn comp_cyclic_module(o: &OperadData, l: &CompModuleData, top: usize) -> Result<CyclicModuleData> {
    if top > l.top() || o.top() < 2 {
        return Err(Error::InvalidData(format!(
            "cyclic module of {} up to degree {top} needs L to degree {top} and O to arity 2",
            l.label
        )));
    }
    let missing = |what: String| Error::InvalidData(format!("{what} is not defined on {}", l.label));
    let map = |a: usize, b: usize, mat: Matrix| LinMap { dom: l.spaces[a].clone(), cod: l.spaces[b].clone(), mat };
    let mut faces = vec![Vec::new()];
    let mut degeneracies = Vec::new();
    for n in 1..=top {
        let mut f = Vec::with_capacity(n + 1);
        for i in 0..n {
            let d = l.act_matrix(2, i, &o.m, n).ok_or_else(|| missing(format!("m •_{i} on L({n})")))?;
            f.push(map(n, n - 1, d));
        }
        let d0 = l.act_matrix(2, 0, &o.m, n).ok_or_else(|| missing(format!("m •_0 on L({n})")))?;
        f.push(map(n, n - 1, d0.mul(&l.t[n])));
        faces.push(f);
    }
    for n in 0..=top {
        if n == top {
            degeneracies.push(Vec::new());
            continue;
        }
        let s = (0..=n)
            .map(|j| {
                l.act_matrix(0, j + 1, &o.e, n)
                    .map(|m| map(n, n + 1, m))
                    .ok_or_else(|| missing(format!("e •_{} on L({n})", j + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        degeneracies.push(s);
    }
    Ok(CyclicModuleData {
        label: format!("C({}, {})", o.label, l.label),
        field: l.field,
        direction: Direction::Cyclic,
        spaces: l.spaces[..=top].to_vec(),
        faces,
        degeneracies,
        cyclic: (0..=top).map(|n| map(n, n, l.t[n].clone())).collect(),
    })
}

/// `C`-measuring of operads with multiplication: `psi[n][x] = Ψ_n(x)`.
#[derive(Clone, Debug)]
pub struct OperadMeasuringData {
    pub label: String,
    pub c: CoalgebraData,
    pub source: OperadData,
    pub target: OperadData,
    pub psi: Vec<Vec<Matrix>>,
}

impl OperadMeasuringData {
    pub fn new(label: &str, c: CoalgebraData, source: OperadData, target: OperadData, psi: Vec<Vec<Matrix>>) -> Result<Self> {
        let top = source.top().min(target.top());
        let ok = psi.len() > top
            && (0..=top).all(|n| {
                psi[n].len() == c.dim() && psi[n].iter().all(|m| m.rows == target.dim(n) && m.cols == source.dim(n))
            });
        if !ok {
            return Err(Error::DimensionMismatch(format!("operad measuring {label} has inconsistent shapes")));
        }
        Ok(OperadMeasuringData { label: label.to_string(), c, source, target, psi })
    }

    pub fn top(&self) -> usize {
        self.source.top().min(self.target.top())
    }

    pub fn at(&self, n: usize, x: &SparseVec) -> Matrix {
        measuring_at(&self.psi[n], x)
    }

    fn coproduct(&self, x: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
        let d = self.c.dim();
        self.c.comul_basis(x).entries.iter().map(|(f, s)| (s.clone(), f / d, f % d)).collect()
    }
}

/// `x(u ∘_i v) = x₍₁₎(u) ∘_i x₍₂₎(v)`, `x(m) = ε(x)m'`, `x(e) = ε(x)e'`.
/// Witnesses are `(x, p, q, i, u, v)`.
pub fn check_operad_measuring(om: &OperadMeasuringData) -> Result<CheckReport> {
    if !om.c.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let (s, t) = (&om.source, &om.target);
    let top = om.top();
    let mut r = CheckReport::new(format!("operad measuring {}", om.label));
    let mut tab = Table::new(&["composition"]);
    for x in 0..om.c.dim() {
        for p in 1..=top {
            for q in 0..=top + 1 - p {
                for i in 1..=p {
                    for (u, v, _) in triples(s.dim(p), s.dim(q), 1) {
                        let lhs = s.compose(p, i, &s.basis(p, u), q, &s.basis(q, v)).map(|w| om.psi[p + q - 1][x].mul_vec(&w));
                        let mut acc = Accum::new(t.dim(p + q - 1));
                        for (c, x1, x2) in om.coproduct(x) {
                            let a = om.psi[p][x1].mul_vec(&s.basis(p, u));
                            let b = om.psi[q][x2].mul_vec(&s.basis(q, v));
                            acc.add_vec(&c, &t.compose(p, i, &a, q, &b).expect("same truncation"));
                        }
                        tab.compare(0, lhs, Some(acc.finish()), || vec![x, p, q, i, u, v]);
                    }
                }
            }
        }
    }
    tab.finish(&mut r, "composition");
    let eps = |x: usize| om.c.counit_of(&om.c.basis(x));
    if top >= 2 {
        r.record("x(m) = ε(x)m'", (0..om.c.dim()).find(|&x| om.psi[2][x].mul_vec(&s.m) != t.m.scale(&eps(x))).map(|x| vec![x]));
    }
    r.record("x(e) = ε(x)e'", (0..om.c.dim()).find(|&x| om.psi[0][x].mul_vec(&s.e) != t.e.scale(&eps(x))).map(|x| vec![x]));
    Ok(r)
}

/// Comodule measuring of comp modules over `om`: a left `C`-comodule `D` and
/// `omega[n][y] = Ω_n(y)`.
#[derive(Clone, Debug)]
pub struct CompComoduleMeasuringData {
    pub label: String,
    pub om: OperadMeasuringData,
    pub d: ComoduleData,
    pub source: CompModuleData,
    pub target: CompModuleData,
    pub omega: Vec<Vec<Matrix>>,
}

impl CompComoduleMeasuringData {
    pub fn new(
        label: &str,
        om: OperadMeasuringData,
        d: ComoduleData,
        source: CompModuleData,
        target: CompModuleData,
        omega: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let top = source.top().min(target.top());
        let ok = d.side == Side::Left
            && d.coalgebra.dim() == om.c.dim()
            && omega.len() > top
            && (0..=top).all(|n| {
                omega[n].len() == d.space.dim
                    && omega[n].iter().all(|m| m.rows == target.dim(n) && m.cols == source.dim(n))
            });
        if !ok {
            return Err(Error::DimensionMismatch(format!("comp comodule measuring {label} has inconsistent data")));
        }
        Ok(CompComoduleMeasuringData { label: label.to_string(), om, d, source, target, omega })
    }

    pub fn top(&self) -> usize {
        self.source.top().min(self.target.top())
    }

    pub fn at(&self, n: usize, y: &SparseVec) -> Matrix {
        measuring_at(&self.omega[n], y)
    }
}

/// `Ω(y)(u •_i l) = Ψ(y₍₀₎)(u) •_i Ω(y₍₁₎)(l)` and `Ω(y) t = t' Ω(y)`.
/// Witnesses are `(y, p, n, i, u, l)` and `(y, n, column)`.
pub fn check_comp_comodule_measuring(ccm: &CompComoduleMeasuringData) -> CheckReport {
    let mut r = CheckReport::new(format!("comp comodule measuring {}", ccm.label));
    r.merge(ccm.d.check());
    let (s, t, om) = (&ccm.source, &ccm.target, &ccm.om);
    let top = ccm.top();
    let mut tab = Table::new(&["Ω(u •_i l) = Ψ(y₍₀₎)(u) •_i Ω(y₍₁₎)(l)"]);
    for y in 0..ccm.d.space.dim {
        let coact = ccm.d.coact(y);
        for n in 0..=top {
            for p in 0..=om.top().min(n + 1) {
                if n + 1 - p > top {
                    continue;
                }
                for i in 0..=n + 1 - p {
                    for (u, x, _) in triples(om.source.dim(p), s.dim(n), 1) {
                        let (ub, lb) = (om.source.basis(p, u), s.basis(n, x));
                        let lhs = s.act(p, i, &ub, n, &lb).map(|w| ccm.omega[n + 1 - p][y].mul_vec(&w));
                        let mut acc = Some(Accum::new(t.dim(n + 1 - p)));
                        for (c, y0, y1) in &coact {
                            let a = om.psi[p][*y0].mul_vec(&ub);
                            let b = ccm.omega[n][*y1].mul_vec(&lb);
                            match (t.act(p, i, &a, n, &b), acc.as_mut()) {
                                (Some(v), Some(ac)) => ac.add_vec(c, &v),
                                _ => acc = None,
                            }
                        }
                        tab.compare(0, lhs, acc.map(Accum::finish), || vec![y, p, n, i, u, x]);
                    }
                }
            }
        }
    }
    tab.finish(&mut r, "bullet compatibility");
    r.record(
        "Ω t = t' Ω",
        (0..ccm.d.space.dim).find_map(|y| {
            (0..=top).find_map(|n| {
                let o = &ccm.omega[n][y];
                first_diff_col(&o.mul(&s.t[n]), &t.t[n].mul(o)).map(|c| vec![y, n, c[0]])
            })
        }),
    );
    r
}

/// Chain maps `Ω_n(y)` between the associated cyclic modules, their certificate
/// and the induced maps on cyclic homology bases.
#[derive(Clone, Debug)]
pub struct InducedCompMap {
    pub maps: Vec<LinMap>,
    pub certificate: CheckReport,
    pub hc: Vec<Matrix>,
}

/// Induced maps in degrees `0..=top`; refused unless they commute with every
/// face, degeneracy and cyclic operator.
pub fn induced_comp_map(ccm: &CompComoduleMeasuringData, y: &SparseVec, top: usize) -> Result<InducedCompMap> {
    let src = comp_cyclic_module(&ccm.om.source, &ccm.source, top)?;
    let dst = comp_cyclic_module(&ccm.om.target, &ccm.target, top)?;
    let maps: Vec<LinMap> = (0..=top)
        .map(|n| LinMap { dom: src.spaces[n].clone(), cod: dst.spaces[n].clone(), mat: ccm.at(n, y) })
        .collect();
    let certificate = check_morphism(&src, &dst, &maps);
    if !certificate.passed() {
        return Err(Error::CertificateFailure(certificate.to_string().trim_end().to_string()));
    }
    let hc = induced_map_on_homology(&src, &dst, &maps, Variant::Cyclic)?;
    Ok(InducedCompMap { maps, certificate, hc })
}

#[cfg(test)]
mod tests;
