use super::matrix::Matrix;
use super::scalar::FieldSpec;
use super::space::{LinMap, Space};
use super::sparse::SparseVec;
use super::LinAlgError;

/// `ambient / span(relations)` with a chosen basis, projection and section.
///
/// The section sends a quotient basis vector to the ambient basis vector of the
/// matching non-pivot coordinate of the reduced relation matrix.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub ambient: Space,
    pub relations: LinMap,
    pub quotient: Space,
    pub projection: LinMap,
    pub section: LinMap,
    /// Ambient coordinate chosen for each quotient basis vector.
    pub representatives: Vec<usize>,
}

/// Builds the quotient of `ambient` by the column span of `relations`.
pub fn quotient_by(
    ambient: &Space,
    relations: &Matrix,
    label: &str,
) -> Result<QuotientPresentation, LinAlgError> {
    if relations.rows != ambient.dim {
        return Err(LinAlgError::DimensionMismatch {
            expected: (ambient.dim, relations.cols),
            found: (relations.rows, relations.cols),
        });
    }
    let field = relations.field;
    let r = relations.transpose().rref();
    let mut pivot_row = vec![None; ambient.dim];
    for (k, &p) in r.pivots.iter().enumerate() {
        pivot_row[p] = Some(k);
    }
    let free: Vec<usize> = (0..ambient.dim).filter(|&j| pivot_row[j].is_none()).collect();
    let mut free_pos = vec![usize::MAX; ambient.dim];
    for (k, &j) in free.iter().enumerate() {
        free_pos[j] = k;
    }
    let q = free.len();
    let reduced_rows = r.matrix.row_vectors();
    let mut proj_cols = Vec::with_capacity(ambient.dim);
    for j in 0..ambient.dim {
        match pivot_row[j] {
            None => proj_cols.push(SparseVec::unit(q, free_pos[j], field.one())),
            Some(k) => {
                let entries = reduced_rows[k]
                    .entries
                    .iter()
                    .filter(|(c, _)| *c != j)
                    .map(|(c, x)| (free_pos[*c], -x));
                proj_cols.push(SparseVec::from_entries(q, entries));
            }
        }
    }
    let quotient = Space::new(q, label.to_string());
    let rel_space = Space::new(relations.cols, format!("rel({label})"));
    let section = Matrix::from_columns(
        field,
        ambient.dim,
        free.iter().map(|&j| SparseVec::unit(ambient.dim, j, field.one())).collect(),
    );
    Ok(QuotientPresentation {
        ambient: ambient.clone(),
        relations: LinMap { dom: rel_space, cod: ambient.clone(), mat: relations.clone() },
        quotient: quotient.clone(),
        projection: LinMap {
            dom: ambient.clone(),
            cod: quotient.clone(),
            mat: Matrix::from_columns(field, q, proj_cols),
        },
        section: LinMap { dom: quotient, cod: ambient.clone(), mat: section },
        representatives: free,
    })
}

impl QuotientPresentation {
    /// Trivial presentation of a space as a quotient of itself.
    pub fn trivial(field: FieldSpec, space: &Space) -> QuotientPresentation {
        let rel_space = Space::new(0, format!("rel({})", space.label));
        QuotientPresentation {
            ambient: space.clone(),
            relations: LinMap::zero(field, &rel_space, space),
            quotient: space.clone(),
            projection: LinMap::identity(field, space),
            section: LinMap::identity(field, space),
            representatives: (0..space.dim).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.projection.field()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.projection.mat.mul_vec(v)
    }

    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        self.section.mat.mul_vec(v)
    }

    /// `proj ∘ sec = I`, `proj ∘ rel = 0`, `dim = ambient - rank(rel)`.
    pub fn check_invariants(&self) -> bool {
        self.projection.mat.mul(&self.section.mat).is_identity()
            && self.projection.mat.mul(&self.relations.mat).is_zero()
            && self.quotient.dim + self.relations.mat.rank() == self.ambient.dim
    }
}

/// Witness that a free map does not preserve relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentFailure {
    /// Column of the source relation matrix whose image survives.
    pub relation: usize,
    /// Target quotient coordinate where the image is nonzero.
    pub coordinate: usize,
}

/// Induced map on quotients: `dst.proj ∘ f ∘ src.sec`, after checking that
/// `dst.proj ∘ f ∘ src.rel = 0`.
pub fn descend(
    f_free: &Matrix,
    src: &QuotientPresentation,
    dst: &QuotientPresentation,
) -> Result<LinMap, DescentFailure> {
    assert_eq!(f_free.cols, src.ambient.dim, "free map domain mismatch");
    assert_eq!(f_free.rows, dst.ambient.dim, "free map codomain mismatch");
    let pf = dst.projection.mat.mul(f_free);
    let on_rel = pf.mul(&src.relations.mat);
    if let Some((coordinate, relation)) = on_rel.first_nonzero() {
        return Err(DescentFailure { relation, coordinate });
    }
    Ok(LinMap {
        dom: src.quotient.clone(),
        cod: dst.quotient.clone(),
        mat: pf.mul(&src.section.mat),
    })
}
