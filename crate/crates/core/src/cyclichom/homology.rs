use serde::{Deserialize, Serialize};

use crate::algcore::{first_diff_col, CheckReport};
use crate::error::{Error, Result};
use crate::exactlin::{descend, quotient_by, FieldSpec, Matrix, Solver, Space, SparseVec};

use super::{CyclicModuleData, Direction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    #[serde(rename = "HH")]
    Hh,
    #[serde(rename = "HC")]
    Hc,
    #[serde(rename = "HH^")]
    HhCo,
    #[serde(rename = "HC^")]
    HcCo,
    /// Lie-Rinehart homology of `(∧_R 𝔏, ∂)`.
    #[serde(rename = "H_LR")]
    Lr,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub theory: Theory,
    pub label: String,
    /// Dimensions in degrees `0..top`; degree `top` would need operators beyond the truncation.
    pub dims: Vec<usize>,
    /// Truncation degree of the underlying module.
    pub top: usize,
    /// Chain-level representatives, one matrix of columns per degree.
    #[serde(skip)]
    pub representatives: Option<Vec<Matrix>>,
}

/// How complex coordinates relate to chain coordinates.
#[derive(Clone, Debug)]
enum Coords {
    Same,
    /// Quotient: chain → complex by projection, back by section.
    Quotient { projection: Matrix, section: Matrix },
    /// Subcomplex spanned by the columns of `basis`.
    Sub { basis: Matrix },
}

impl Coords {
    fn to_chain(&self, v: &SparseVec) -> SparseVec {
        match self {
            Coords::Same => v.clone(),
            Coords::Quotient { section, .. } => section.mul_vec(v),
            Coords::Sub { basis } => basis.mul_vec(v),
        }
    }

    fn from_chain(&self, v: &SparseVec) -> Option<SparseVec> {
        match self {
            Coords::Same => Some(v.clone()),
            Coords::Quotient { projection, .. } => Some(projection.mul_vec(v)),
            Coords::Sub { basis } => Solver::new(basis).solve(v),
        }
    }
}

/// A basis of (co)homology in one degree, with class extraction.
#[derive(Clone, Debug)]
pub struct HomologyClasses {
    pub degree: usize,
    /// Representative cycles in complex coordinates.
    pub reps: Matrix,
    boundaries: Matrix,
    coords: Coords,
}

impl HomologyClasses {
    pub fn dim(&self) -> usize {
        self.reps.cols
    }

    /// Representatives as chains of the underlying module.
    pub fn chain_reps(&self) -> Matrix {
        let cols = self.reps.columns().iter().map(|c| self.coords.to_chain(c)).collect();
        let rows = match &self.coords {
            Coords::Same => self.reps.rows,
            Coords::Quotient { section, .. } => section.rows,
            Coords::Sub { basis } => basis.rows,
        };
        Matrix::from_columns(self.reps.field, rows, cols)
    }

    /// Class of a chain-level cycle in the basis of `reps`; `None` if it is not a cycle
    /// of the complex.
    pub fn class_of(&self, chain: &SparseVec) -> Option<SparseVec> {
        let v = self.coords.from_chain(chain)?;
        let k = self.dim();
        let sol = Solver::new(&self.reps.hstack(&self.boundaries)).solve(&v)?;
        Some(SparseVec::from_entries(k, sol.entries.into_iter().filter(|(i, _)| *i < k)))
    }
}

/// Which complex to take homology of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Hochschild,
    Normalized,
    Cyclic,
}

struct Complex {
    dims: Vec<usize>,
    /// Differential leaving each degree.
    out: Vec<Matrix>,
    coords: Vec<Coords>,
    homological: bool,
}

impl Complex {
    fn incoming(&self, field: FieldSpec, n: usize) -> Matrix {
        if self.homological {
            self.out[n + 1].clone()
        } else if n == 0 {
            Matrix::zeros(field, self.dims[0], 0)
        } else {
            self.out[n - 1].clone()
        }
    }
}

fn vstack(field: FieldSpec, cols: usize, blocks: &[&Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(field, 0, cols).transpose();
    for b in blocks {
        acc = acc.hstack(&b.transpose());
    }
    acc.transpose()
}

fn quotient_complex(m: &CyclicModuleData, relations: Vec<Matrix>) -> Result<Complex> {
    let top = m.top();
    let qs = (0..=top)
        .map(|n| quotient_by(&m.spaces[n], &relations[n], &format!("{}[{n}]", m.label)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let b = m.hochschild_differential(n);
        let mat = match m.direction {
            Direction::Cyclic if n == 0 => Matrix::zeros(m.field, 0, qs[0].dim()),
            Direction::Cocyclic if n == top => Matrix::zeros(m.field, 0, qs[top].dim()),
            Direction::Cyclic => descend(&b, &qs[n], &qs[n - 1]).map_err(|f| Error::descent("b on quotient", f))?.mat,
            Direction::Cocyclic => descend(&b, &qs[n], &qs[n + 1]).map_err(|f| Error::descent("b on quotient", f))?.mat,
        };
        out.push(mat);
    }
    Ok(Complex {
        dims: qs.iter().map(|q| q.dim()).collect(),
        out,
        coords: qs
            .iter()
            .map(|q| Coords::Quotient { projection: q.projection.mat.clone(), section: q.section.mat.clone() })
            .collect(),
        homological: m.direction == Direction::Cyclic,
    })
}

fn sub_complex(m: &CyclicModuleData, bases: Vec<Matrix>) -> Result<Complex> {
    let top = m.top();
    let mut out = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let b = m.hochschild_differential(n);
        let target = match m.direction {
            Direction::Cyclic if n == 0 => None,
            Direction::Cocyclic if n == top => None,
            Direction::Cyclic => Some(n - 1),
            Direction::Cocyclic => Some(n + 1),
        };
        let Some(t) = target else {
            out.push(Matrix::zeros(m.field, 0, bases[n].cols));
            continue;
        };
        let solver = Solver::new(&bases[t]);
        let image = b.mul(&bases[n]);
        let cols = image
            .columns()
            .iter()
            .map(|c| solver.solve(c).ok_or_else(|| Error::InvalidData("differential leaves the subcomplex".into())))
            .collect::<Result<Vec<_>>>()?;
        out.push(Matrix::from_columns(m.field, bases[t].cols, cols));
    }
    Ok(Complex {
        dims: bases.iter().map(|b| b.cols).collect(),
        out,
        coords: bases.into_iter().map(|basis| Coords::Sub { basis }).collect(),
        homological: m.direction == Direction::Cyclic,
    })
}

fn complex_of(m: &CyclicModuleData, variant: Variant) -> Result<Complex> {
    let top = m.top();
    let field = m.field;
    match (variant, m.direction) {
        (Variant::Hochschild, _) => Ok(Complex {
            dims: (0..=top).map(|n| m.dim(n)).collect(),
            out: (0..=top).map(|n| m.hochschild_differential(n)).collect(),
            coords: vec![Coords::Same; top + 1],
            homological: m.direction == Direction::Cyclic,
        }),
        (Variant::Cyclic, _) if field != FieldSpec::Rationals => Err(Error::CharNotZero),
        (Variant::Cyclic, Direction::Cyclic) => {
            let rel = (0..=top).map(|n| Matrix::identity(field, m.dim(n)).sub(&m.lambda(n))).collect();
            quotient_complex(m, rel)
        }
        (Variant::Cyclic, Direction::Cocyclic) => {
            let bases = (0..=top).map(|n| Matrix::identity(field, m.dim(n)).sub(&m.lambda(n)).kernel()).collect();
            sub_complex(m, bases)
        }
        (Variant::Normalized, Direction::Cyclic) => {
            let rel = (0..=top)
                .map(|n| {
                    let mut acc = Matrix::zeros(field, m.dim(n), 0);
                    if n > 0 {
                        for s in &m.degeneracies[n - 1] {
                            acc = acc.hstack(&s.mat);
                        }
                    }
                    acc
                })
                .collect();
            quotient_complex(m, rel)
        }
        (Variant::Normalized, Direction::Cocyclic) => {
            let bases = (0..=top)
                .map(|n| {
                    let blocks: Vec<&Matrix> = m.degeneracies[n].iter().map(|s| &s.mat).collect();
                    vstack(field, m.dim(n), &blocks).kernel()
                })
                .collect();
            sub_complex(m, bases)
        }
    }
}

/// Homology bases in degrees `0..top` of the chosen complex of `m`.
pub fn homology_classes(m: &CyclicModuleData, variant: Variant) -> Result<Vec<HomologyClasses>> {
    let c = complex_of(m, variant)?;
    Ok(classes_of(&c, m.field, m.top()))
}

/// Homology bases in degrees `0..count` of a plain complex given by the differential
/// leaving each degree (`out[n]: C_n → C_{n∓1}`).
pub fn chain_homology(field: FieldSpec, out: Vec<Matrix>, homological: bool, count: usize) -> Vec<HomologyClasses> {
    let dims: Vec<usize> = out.iter().map(|d| d.cols).collect();
    let coords = vec![Coords::Same; dims.len()];
    classes_of(&Complex { dims, out, coords, homological }, field, count)
}

fn classes_of(c: &Complex, field: FieldSpec, count: usize) -> Vec<HomologyClasses> {
    (0..count)
        .map(|n| {
            let cycles = c.out[n].kernel();
            let boundaries = c.incoming(field, n).image_basis();
            let combined = boundaries.hstack(&cycles);
            let piv = combined.rref().pivots;
            let chosen: Vec<usize> = piv.iter().filter(|&&p| p >= boundaries.cols).map(|p| p - boundaries.cols).collect();
            HomologyClasses { degree: n, reps: cycles.select_columns(&chosen), boundaries, coords: c.coords[n].clone() }
        })
        .collect()
}

fn report(m: &CyclicModuleData, variant: Variant) -> Result<HomologyReport> {
    let classes = homology_classes(m, variant)?;
    let theory = match (variant, m.direction) {
        (Variant::Cyclic, Direction::Cyclic) => Theory::Hc,
        (Variant::Cyclic, Direction::Cocyclic) => Theory::HcCo,
        (_, Direction::Cyclic) => Theory::Hh,
        (_, Direction::Cocyclic) => Theory::HhCo,
    };
    Ok(HomologyReport {
        theory,
        label: m.label.clone(),
        dims: classes.iter().map(|c| c.dim()).collect(),
        top: m.top(),
        representatives: Some(classes.iter().map(|c| c.chain_reps()).collect()),
    })
}

/// `HH` from `b = Σ(-1)^i d_i` (or its cochain analogue).
pub fn hochschild_homology(m: &CyclicModuleData) -> Result<HomologyReport> {
    report(m, Variant::Hochschild)
}

/// `HH` of the complex normalized by degeneracies.
pub fn normalized_hochschild_homology(m: &CyclicModuleData) -> Result<HomologyReport> {
    report(m, Variant::Normalized)
}

/// `HC` from Connes' λ-complex; needs characteristic zero.
pub fn cyclic_homology_char0(m: &CyclicModuleData) -> Result<HomologyReport> {
    report(m, Variant::Cyclic)
}

/// Mixed complex `(C, b, B)` of a cyclic module, `B = (1-λ) s N` with the extra
/// degeneracy `s = t_{n+1} s_n` and `N = Σ λ^i`.
#[derive(Clone, Debug)]
pub struct MixedComplexData {
    pub label: String,
    pub field: FieldSpec,
    pub spaces: Vec<Space>,
    /// `b_n: C_n → C_{n-1}`
    pub b: Vec<Matrix>,
    /// `B_n: C_n → C_{n+1}`, present for `n < top`.
    pub big_b: Vec<Matrix>,
}

pub fn mixed_complex(m: &CyclicModuleData) -> Result<MixedComplexData> {
    if m.direction != Direction::Cyclic {
        return Err(Error::InvalidData("mixed complex expects a cyclic module".into()));
    }
    let top = m.top();
    let field = m.field;
    let mut big_b = Vec::with_capacity(top);
    for n in 0..top {
        let lam = m.lambda(n);
        let mut norm = Matrix::zeros(field, m.dim(n), m.dim(n));
        let mut pow = Matrix::identity(field, m.dim(n));
        for _ in 0..=n {
            norm = norm.add(&pow);
            pow = lam.mul(&pow);
        }
        let extra = m.t(n + 1).mul(m.degeneracy(n, n));
        let one_minus = Matrix::identity(field, m.dim(n + 1)).sub(&m.lambda(n + 1));
        big_b.push(one_minus.mul(&extra).mul(&norm));
    }
    Ok(MixedComplexData {
        label: m.label.clone(),
        field,
        spaces: m.spaces.clone(),
        b: (0..=top).map(|n| m.hochschild_differential(n)).collect(),
        big_b,
    })
}

pub fn check_mixed_complex(mc: &MixedComplexData) -> CheckReport {
    let mut r = CheckReport::new(format!("mixed complex {}", mc.label));
    let top = mc.spaces.len() - 1;
    let zero = |rows: usize, cols: usize| Matrix::zeros(mc.field, rows, cols);
    let dim = |n: usize| mc.spaces[n].dim;
    let mut w = None;
    for n in 2..=top {
        if let Some(c) = first_diff_col(&mc.b[n - 1].mul(&mc.b[n]), &zero(dim(n - 2), dim(n))) {
            w = w.or(Some(vec![n, c[0]]));
        }
    }
    r.record("b b = 0", w);
    let mut w = None;
    for n in 0..top.saturating_sub(1) {
        if let Some(c) = first_diff_col(&mc.big_b[n + 1].mul(&mc.big_b[n]), &zero(dim(n + 2), dim(n))) {
            w = w.or(Some(vec![n, c[0]]));
        }
    }
    r.record("B B = 0", w);
    let mut w = None;
    for n in 0..top {
        let mut s = mc.b[n + 1].mul(&mc.big_b[n]);
        if n > 0 {
            s = s.add(&mc.big_b[n - 1].mul(&mc.b[n]));
        }
        if let Some(c) = first_diff_col(&s, &zero(dim(n), dim(n))) {
            w = w.or(Some(vec![n, c[0]]));
        }
    }
    r.record("b B + B b = 0", w);
    r
}
