//! Lie-Rinehart algebras `(R, 𝔏, ∇)` with a flat right connection, their homology,
//! measurings, the word-truncated universal enveloping algebra and `Alt_n`.

mod envelope;
pub mod examples;
mod wedge;

pub use envelope::{
    alt_map, alt_target, check_alt_intertwines, envelope_measuring, truncated_envelope, EnvelopeMeasuring,
    TruncatedEnvelopeData,
};
pub use wedge::{
    check_lr_complex, induced_lr_chain_map, induced_lr_homology_maps, lr_chain_map_certificate, lr_complex,
    lr_homology, wedge_action, LrComplex,
};

use crate::algcore::{check_sweedler_measuring, find_witness, AlgebraData, CheckReport, CoalgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::outer, Accum, FieldSpec, Matrix, Space, SparseVec};

/// `(R, 𝔏, ∇)` by structure constants. `𝔏` is given by a `k`-basis together with
/// its `R`-module structure.
#[derive(Clone, Debug)]
pub struct LieRinehartData {
    pub label: String,
    pub field: FieldSpec,
    pub r: AlgebraData,
    pub l: Space,
    /// `R ⊗ 𝔏 → 𝔏`, column `r * dl + z`.
    pub r_action: Matrix,
    /// `𝔏 ⊗ 𝔏 → 𝔏`, column `z * dl + z'`.
    pub bracket: Matrix,
    /// `Z(r)`, column `z * dr + r`.
    pub anchor: Matrix,
    /// `∇_Z(r)`, column `z * dr + r`.
    pub nabla: Matrix,
}

impl LieRinehartData {
    pub fn new(
        label: &str,
        r: AlgebraData,
        dl: usize,
        r_action: Matrix,
        bracket: Matrix,
        anchor: Matrix,
        nabla: Matrix,
    ) -> Result<Self> {
        let field = r.field;
        if field.characteristic() != 0 {
            return Err(Error::CharNotZero);
        }
        if !r.is_commutative() {
            return Err(Error::NotCommutative(format!("base algebra of {label}")));
        }
        let dr = r.dim();
        let shapes = [
            (&r_action, dl, dr * dl),
            (&bracket, dl, dl * dl),
            (&anchor, dr, dl * dr),
            (&nabla, dr, dl * dr),
        ];
        if shapes.iter().any(|(m, rows, cols)| m.rows != *rows || m.cols != *cols) {
            return Err(Error::DimensionMismatch(format!("Lie-Rinehart data {label} has inconsistent shapes")));
        }
        Ok(LieRinehartData {
            label: label.to_string(),
            field,
            r,
            l: Space::new(dl, format!("L({label})")),
            r_action,
            bracket,
            anchor,
            nabla,
        })
    }

    pub fn dl(&self) -> usize {
        self.l.dim
    }

    pub fn dr(&self) -> usize {
        self.r.dim()
    }

    pub fn lbasis(&self, z: usize) -> SparseVec {
        SparseVec::unit(self.dl(), z, self.field.one())
    }

    pub fn rbasis(&self, r: usize) -> SparseVec {
        self.r.basis(r)
    }

    pub fn act(&self, r: &SparseVec, z: &SparseVec) -> SparseVec {
        self.r_action.mul_vec(&outer(&[r, z]))
    }

    pub fn br(&self, z: &SparseVec, w: &SparseVec) -> SparseVec {
        self.bracket.mul_vec(&outer(&[z, w]))
    }

    pub fn anchor_of(&self, z: &SparseVec, r: &SparseVec) -> SparseVec {
        self.anchor.mul_vec(&outer(&[z, r]))
    }

    pub fn nabla_of(&self, z: &SparseVec, r: &SparseVec) -> SparseVec {
        self.nabla.mul_vec(&outer(&[z, r]))
    }

    /// `Z ↦ ∇_Z(1_R)`.
    pub fn divergence(&self) -> Matrix {
        let cols = (0..self.dl()).map(|z| self.nabla_of(&self.lbasis(z), &self.r.unit)).collect();
        Matrix::from_columns(self.field, self.dr(), cols)
    }
}

/// Checks every Lie-Rinehart and flat-connection law on basis elements. Witnesses are
/// basis indices in the order the law names its arguments.
pub fn check_lie_rinehart(d: &LieRinehartData) -> CheckReport {
    let mut r = CheckReport::new(format!("Lie-Rinehart {}", d.label));
    let (dl, dr) = (d.dl(), d.dr());
    let (z, rb) = (|i: usize| d.lbasis(i), |i: usize| d.rbasis(i));
    let rmul = |a: &SparseVec, b: &SparseVec| d.r.mul_vec(a, b);
    r.record(
        "R-module",
        find_witness(&[dr, dr, dl], |ix| {
            d.act(&rmul(&rb(ix[0]), &rb(ix[1])), &z(ix[2])) != d.act(&rb(ix[0]), &d.act(&rb(ix[1]), &z(ix[2])))
        })
        .or_else(|| find_witness(&[dl], |ix| d.act(&d.r.unit, &z(ix[0])) != z(ix[0]))),
    );
    r.record(
        "antisymmetry",
        find_witness(&[dl, dl], |ix| !d.br(&z(ix[0]), &z(ix[1])).add(&d.br(&z(ix[1]), &z(ix[0]))).is_zero()),
    );
    r.record(
        "Jacobi",
        find_witness(&[dl, dl, dl], |ix| {
            let (a, b, c) = (z(ix[0]), z(ix[1]), z(ix[2]));
            let s = d.br(&a, &d.br(&b, &c)).add(&d.br(&b, &d.br(&c, &a))).add(&d.br(&c, &d.br(&a, &b)));
            !s.is_zero()
        }),
    );
    r.record(
        "anchor by derivations",
        find_witness(&[dl, dr, dr], |ix| {
            let (a, p, q) = (z(ix[0]), rb(ix[1]), rb(ix[2]));
            let lhs = d.anchor_of(&a, &rmul(&p, &q));
            lhs != rmul(&d.anchor_of(&a, &p), &q).add(&rmul(&p, &d.anchor_of(&a, &q)))
        }),
    );
    r.record(
        "anchor R-linear",
        find_witness(&[dr, dl, dr], |ix| {
            let (p, a, q) = (rb(ix[0]), z(ix[1]), rb(ix[2]));
            d.anchor_of(&d.act(&p, &a), &q) != rmul(&p, &d.anchor_of(&a, &q))
        }),
    );
    r.record(
        "anchor is a Lie map",
        find_witness(&[dl, dl, dr], |ix| {
            let (a, b, p) = (z(ix[0]), z(ix[1]), rb(ix[2]));
            let lhs = d.anchor_of(&d.br(&a, &b), &p);
            lhs != d.anchor_of(&a, &d.anchor_of(&b, &p)).sub(&d.anchor_of(&b, &d.anchor_of(&a, &p)))
        }),
    );
    r.record(
        "Leibniz",
        find_witness(&[dl, dr, dl], |ix| {
            let (a, p, b) = (z(ix[0]), rb(ix[1]), z(ix[2]));
            let lhs = d.br(&a, &d.act(&p, &b));
            lhs != d.act(&p, &d.br(&a, &b)).add(&d.act(&d.anchor_of(&a, &p), &b))
        }),
    );
    r.record(
        "connection",
        find_witness(&[dl, dr, dr], |ix| {
            let (a, p, q) = (z(ix[0]), rb(ix[1]), rb(ix[2]));
            let lhs = d.nabla_of(&a, &rmul(&p, &q));
            lhs != rmul(&p, &d.nabla_of(&a, &q)).sub(&rmul(&d.anchor_of(&a, &p), &q))
                || lhs != d.nabla_of(&d.act(&p, &a), &q)
        }),
    );
    r.record(
        "flat",
        find_witness(&[dl, dl, dr], |ix| {
            let (a, b, p) = (z(ix[0]), z(ix[1]), rb(ix[2]));
            let lhs = d.nabla_of(&a, &d.nabla_of(&b, &p)).sub(&d.nabla_of(&b, &d.nabla_of(&a, &p)));
            lhs != d.nabla_of(&d.br(&b, &a), &p)
        }),
    );
    r
}

/// `C`-measuring `(Ψ, ψ)` between Lie-Rinehart algebras, one matrix per basis element of `C`.
#[derive(Clone, Debug)]
pub struct LrMeasuringData {
    pub label: String,
    pub c: CoalgebraData,
    pub source: LieRinehartData,
    pub target: LieRinehartData,
    /// `Ψ(c_i): 𝔏 → 𝔏'`
    pub big: Vec<Matrix>,
    /// `ψ(c_i): R → R'`
    pub small: Vec<Matrix>,
}

impl LrMeasuringData {
    pub fn new(
        label: &str,
        c: CoalgebraData,
        source: LieRinehartData,
        target: LieRinehartData,
        big: Vec<Matrix>,
        small: Vec<Matrix>,
    ) -> Result<Self> {
        let n = c.dim();
        let ok = big.len() == n
            && small.len() == n
            && big.iter().all(|m| m.rows == target.dl() && m.cols == source.dl())
            && small.iter().all(|m| m.rows == target.dr() && m.cols == source.dr());
        if !ok {
            return Err(Error::DimensionMismatch(format!("LR measuring {label} has inconsistent shapes")));
        }
        Ok(LrMeasuringData { label: label.to_string(), c, source, target, big, small })
    }

    /// One grouplike acting by the identity.
    pub fn identity(d: &LieRinehartData) -> Self {
        let f = d.field;
        LrMeasuringData {
            label: format!("id_{}", d.label),
            c: CoalgebraData::grouplikes(f, 1, "k"),
            source: d.clone(),
            target: d.clone(),
            big: vec![Matrix::identity(f, d.dl())],
            small: vec![Matrix::identity(f, d.dr())],
        }
    }

    fn coproduct(&self, x: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
        let n = self.c.dim();
        self.c.comul_basis(x).entries.iter().map(|(f, s)| (s.clone(), f / n, f % n)).collect()
    }

    /// `Σ f(x₍₁₎(a), x₍₂₎(b))` for basis `x`.
    fn convolve<A, B>(&self, x: usize, dim: usize, a: impl Fn(usize) -> A, b: impl Fn(usize) -> B, f: impl Fn(&A, &B) -> SparseVec) -> SparseVec {
        let mut acc = Accum::new(dim);
        for (s, x1, x2) in self.coproduct(x) {
            acc.add_vec(&s, &f(&a(x1), &b(x2)));
        }
        acc.finish()
    }
}

/// Checks the measuring conditions: `ψ` measures `R → R'`, `Ψ` respects brackets,
/// anchors, connections and the `R`-module structure through the coproduct.
/// Witnesses are `(x, arguments...)` in basis indices.
pub fn check_lr_measuring(m: &LrMeasuringData) -> Result<CheckReport> {
    if !m.c.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let (s, t) = (&m.source, &m.target);
    let mut r = CheckReport::new(format!("LR measuring {}", m.label));
    r.merge(check_sweedler_measuring(&m.c, &s.r, &t.r, &m.small));
    let (dc, dl, dr) = (m.c.dim(), s.dl(), s.dr());
    let big = |x: usize, z: usize| m.big[x].mul_vec(&s.lbasis(z));
    let small = |x: usize, p: usize| m.small[x].mul_vec(&s.rbasis(p));
    r.record(
        "bracket",
        find_witness(&[dc, dl, dl], |ix| {
            let lhs = m.big[ix[0]].mul_vec(&s.br(&s.lbasis(ix[1]), &s.lbasis(ix[2])));
            lhs != m.convolve(ix[0], t.dl(), |x| big(x, ix[1]), |x| big(x, ix[2]), |a, b| t.br(a, b))
        }),
    );
    r.record(
        "anchor",
        find_witness(&[dc, dl, dr], |ix| {
            let lhs = m.small[ix[0]].mul_vec(&s.anchor_of(&s.lbasis(ix[1]), &s.rbasis(ix[2])));
            lhs != m.convolve(ix[0], t.dr(), |x| big(x, ix[1]), |x| small(x, ix[2]), |a, b| t.anchor_of(a, b))
        }),
    );
    r.record(
        "connection",
        find_witness(&[dc, dl, dr], |ix| {
            let lhs = m.small[ix[0]].mul_vec(&s.nabla_of(&s.lbasis(ix[1]), &s.rbasis(ix[2])));
            lhs != m.convolve(ix[0], t.dr(), |x| big(x, ix[1]), |x| small(x, ix[2]), |a, b| t.nabla_of(a, b))
        }),
    );
    r.record(
        "R-linear",
        find_witness(&[dc, dr, dl], |ix| {
            let lhs = m.big[ix[0]].mul_vec(&s.act(&s.rbasis(ix[1]), &s.lbasis(ix[2])));
            lhs != m.convolve(ix[0], t.dl(), |x| small(x, ix[1]), |x| big(x, ix[2]), |a, b| t.act(a, b))
        }),
    );
    Ok(r)
}
