use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{
    quotient_by, tensor::outer, FieldSpec, LinMap, Matrix, QuotientPresentation, Space, SparseVec, TensorShape,
};

use super::report::{find_witness, CheckReport};
use super::{AlgebraData, CoalgebraData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Module over an algebra. Left: column `a * dM + m` is `a·m`; right: column `m * dA + a` is `m·a`.
#[derive(Clone, Debug)]
pub struct ModuleActionData {
    pub algebra: AlgebraData,
    pub space: Space,
    pub action: LinMap,
    pub side: Side,
}

impl ModuleActionData {
    pub fn new(algebra: AlgebraData, space: Space, action: Matrix, side: Side) -> Result<Self> {
        let (da, dm) = (algebra.dim(), space.dim);
        if action.rows != dm || action.cols != da * dm {
            return Err(Error::DimensionMismatch(format!(
                "action on {} must be {dm}x{}, got {}x{}",
                space.label,
                da * dm,
                action.rows,
                action.cols
            )));
        }
        let dom = Space::new(da * dm, format!("{}⊗{}", algebra.space.label, space.label));
        Ok(ModuleActionData { action: LinMap { dom, cod: space.clone(), mat: action }, algebra, space, side })
    }

    /// The regular left or right module.
    pub fn regular(algebra: &AlgebraData, side: Side) -> Self {
        let m = algebra.mul.mat.clone();
        ModuleActionData::new(algebra.clone(), algebra.space.clone(), m, side).expect("regular module")
    }

    pub fn act(&self, a: usize, m: usize) -> &SparseVec {
        match self.side {
            Side::Left => self.action.mat.col(a * self.space.dim + m),
            Side::Right => self.action.mat.col(m * self.algebra.dim() + a),
        }
    }

    pub fn check(&self) -> CheckReport {
        let (da, dm) = (self.algebra.dim(), self.space.dim);
        let mut r = CheckReport::new(format!("module {}", self.space.label));
        let act_vec = |a: usize, v: &SparseVec| {
            let mut acc = crate::exactlin::Accum::new(dm);
            for (m, x) in &v.entries {
                acc.add_vec(x, self.act(a, *m));
            }
            acc.finish()
        };
        let act_elem = |av: &SparseVec, m: usize| {
            let mut acc = crate::exactlin::Accum::new(dm);
            for (a, x) in &av.entries {
                acc.add_vec(x, self.act(*a, m));
            }
            acc.finish()
        };
        r.record(
            "associativity",
            find_witness(&[da, da, dm], |ix| {
                let (a, b, m) = (ix[0], ix[1], ix[2]);
                match self.side {
                    Side::Left => act_vec(a, self.act(b, m)) != act_elem(self.algebra.mul_basis(a, b), m),
                    Side::Right => act_vec(b, self.act(a, m)) != act_elem(self.algebra.mul_basis(a, b), m),
                }
            }),
        );
        r.record(
            "unit",
            find_witness(&[dm], |ix| act_elem(&self.algebra.unit, ix[0]) != SparseVec::unit(dm, ix[0], self.algebra.field.one())),
        );
        r
    }
}

/// Comodule over a coalgebra. Left: `M → C ⊗ M`; right: `M → M ⊗ C`.
#[derive(Clone, Debug)]
pub struct ComoduleData {
    pub coalgebra: CoalgebraData,
    pub space: Space,
    pub coaction: LinMap,
    pub side: Side,
}

impl ComoduleData {
    pub fn new(coalgebra: CoalgebraData, space: Space, coaction: Matrix, side: Side) -> Result<Self> {
        let (dc, dm) = (coalgebra.dim(), space.dim);
        if coaction.rows != dc * dm || coaction.cols != dm {
            return Err(Error::DimensionMismatch(format!("coaction on {} has wrong shape", space.label)));
        }
        let cod = Space::new(dc * dm, format!("{}⊗{}", coalgebra.space.label, space.label));
        Ok(ComoduleData { coaction: LinMap { dom: space.clone(), cod, mat: coaction }, coalgebra, space, side })
    }

    /// `C` as a comodule over itself.
    pub fn regular(c: &CoalgebraData, side: Side) -> Self {
        ComoduleData::new(c.clone(), c.space.clone(), c.comul.mat.clone(), side).expect("regular comodule")
    }

    /// Terms `(coefficient, c, m)` of the coaction of basis vector `m`.
    pub fn coact(&self, m: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
        let (dc, dm) = (self.coalgebra.dim(), self.space.dim);
        self.coaction
            .mat
            .col(m)
            .entries
            .iter()
            .map(|(f, x)| match self.side {
                Side::Left => (x.clone(), f / dm, f % dm),
                Side::Right => (x.clone(), f % dc, f / dc),
            })
            .collect()
    }

    pub fn check(&self) -> CheckReport {
        let (c, dm) = (&self.coalgebra, self.space.dim);
        let dc = c.dim();
        let field = c.field;
        let id_m = Matrix::identity(field, dm);
        let id_c = Matrix::identity(field, dc);
        let rho = &self.coaction.mat;
        let mut r = CheckReport::new(format!("comodule {}", self.space.label));
        let (lhs, rhs, counit) = match self.side {
            Side::Left => (
                c.comul.mat.kron(&id_m).mul(rho),
                id_c.kron(rho).mul(rho),
                c.counit.mat.kron(&id_m).mul(rho),
            ),
            Side::Right => (
                rho.kron(&id_c).mul(rho),
                id_m.kron(&c.comul.mat).mul(rho),
                id_m.kron(&c.counit.mat).mul(rho),
            ),
        };
        r.record("coassociativity", super::coalgebra::first_diff_col(&lhs, &rhs));
        r.record("counit", super::coalgebra::first_diff_col(&counit, &id_m));
        r
    }
}

/// One factor of an iterated balanced tensor product over a common algebra `A`.
/// `right` is `X ⊗ A → X` (column `x * dA + a`), `left` is `A ⊗ X → X` (column `a * dX + x`).
#[derive(Clone, Debug)]
pub struct TowerSlot {
    pub dim: usize,
    pub left: Option<Matrix>,
    pub right: Option<Matrix>,
}

/// `X_1 ⊗_A X_2 ⊗_A ... ⊗_A X_n` as a quotient of the plain tensor product.
pub fn iterated_balanced_tensor(
    field: FieldSpec,
    a_dim: usize,
    slots: &[TowerSlot],
    label: &str,
) -> Result<QuotientPresentation> {
    let shape = TensorShape::new(slots.iter().map(|s| s.dim).collect());
    let ambient = Space::new(shape.total(), format!("{label} (free)"));
    if slots.len() <= 1 || a_dim == 0 {
        let mut p = QuotientPresentation::trivial(field, &ambient);
        p.quotient = Space::new(ambient.dim, label.to_string());
        p.projection.cod = p.quotient.clone();
        p.section.dom = p.quotient.clone();
        return Ok(p);
    }
    for j in 0..slots.len() - 1 {
        if slots[j].right.is_none() || slots[j + 1].left.is_none() {
            return Err(Error::InvalidData(format!("slot {j} of {label} lacks the balancing actions")));
        }
    }
    let one = field.one();
    let unit = |d: usize, i: usize| SparseVec::unit(d, i, one.clone());
    let mut rels = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for flat in 0..shape.total() {
        let ix = shape.unflatten(flat);
        for j in 0..slots.len() - 1 {
            let dy = slots[j + 1].dim;
            let right = slots[j].right.as_ref().unwrap();
            let left = slots[j + 1].left.as_ref().unwrap();
            for a in 0..a_dim {
                let xa = right.col(ix[j] * a_dim + a);
                let ay = left.col(a * dy + ix[j + 1]);
                let mut f1: Vec<SparseVec> = ix.iter().zip(&shape.dims).map(|(&i, &d)| unit(d, i)).collect();
                let mut f2 = f1.clone();
                f1[j] = xa.clone();
                f2[j + 1] = ay.clone();
                let v = outer(&f1.iter().collect::<Vec<_>>()).sub(&outer(&f2.iter().collect::<Vec<_>>()));
                if !v.is_zero() && seen.insert(v.clone()) {
                    rels.push(v);
                }
            }
        }
    }
    let rel = Matrix::from_columns(field, ambient.dim, rels);
    Ok(quotient_by(&ambient, &rel, label)?)
}

/// `M ⊗_A N` for a right module `M` and a left module `N`.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub left: ModuleActionData,
    pub right: ModuleActionData,
    pub presentation: QuotientPresentation,
}

pub fn balanced_tensor(m: &ModuleActionData, n: &ModuleActionData) -> Result<BalancedTensor> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(Error::InvalidData("balanced tensor needs a right module and a left module".into()));
    }
    if m.algebra.dim() != n.algebra.dim() {
        return Err(Error::DimensionMismatch("modules over different algebras".into()));
    }
    let slots = [
        TowerSlot { dim: m.space.dim, left: None, right: Some(m.action.mat.clone()) },
        TowerSlot { dim: n.space.dim, left: Some(n.action.mat.clone()), right: None },
    ];
    let label = format!("{}⊗_A{}", m.space.label, n.space.label);
    let presentation = iterated_balanced_tensor(m.algebra.field, m.algebra.dim(), &slots, &label)?;
    Ok(BalancedTensor { left: m.clone(), right: n.clone(), presentation })
}
