use std::sync::Arc;

use crate::algcore::{find_witness, measuring_at, CheckReport};
use crate::error::{Error, Result};
use crate::exactlin::{
    descend, quotient_by, tensor::free_matrix, tensor::outer, Accum, FieldSpec, LinMap, Matrix, QuotientPresentation,
    Scalar, Space, SparseVec, TensorShape,
};
use crate::measuring::slotwise_free;

use super::wedge::wedge_space;
use super::{LieRinehartData, LrMeasuringData};

/// `V(R, 𝔏, ∇)` up to word length `cutoff`: the words of length `≤ W` in the letters
/// `R ⊕ 𝔏` (first `dr` letters from `R`) modulo the part of the defining ideal
/// generated inside that range.
#[derive(Clone, Debug)]
pub struct TruncatedEnvelopeData {
    pub lr: LieRinehartData,
    pub cutoff: usize,
    pub presentation: Arc<QuotientPresentation>,
    /// Representative word of each basis element.
    pub basis_words: Vec<Vec<usize>>,
}

/// Ambient coordinates: blocks of words of length `W, W-1, …, 0`, each block in
/// tensor order, so that reduction rewrites long words in terms of shorter ones.
struct WordIndex {
    letters: usize,
    cutoff: usize,
}

impl WordIndex {
    fn block(&self, k: usize) -> usize {
        self.letters.pow(k as u32)
    }

    fn offset(&self, k: usize) -> usize {
        (k + 1..=self.cutoff).map(|j| self.block(j)).sum()
    }

    fn total(&self) -> usize {
        self.offset(0) + 1
    }

    fn index(&self, w: &[usize]) -> usize {
        self.offset(w.len()) + TensorShape::power(self.letters, w.len()).flatten(w)
    }

    fn word(&self, mut i: usize) -> Vec<usize> {
        let mut k = self.cutoff;
        loop {
            let b = self.block(k);
            if i < b {
                return TensorShape::power(self.letters, k).unflatten(i);
            }
            i -= b;
            k -= 1;
        }
    }

    /// `Σ c·w` for `(c, w)` pairs, all words of length `≤ cutoff`.
    fn combo(&self, terms: &[(Scalar, Vec<usize>)]) -> SparseVec {
        let mut acc = Accum::new(self.total());
        for (c, w) in terms {
            acc.add(self.index(w), c);
        }
        acc.finish()
    }
}

impl TruncatedEnvelopeData {
    fn words(&self) -> WordIndex {
        WordIndex { letters: self.lr.dr() + self.lr.dl(), cutoff: self.cutoff }
    }

    pub fn field(&self) -> FieldSpec {
        self.lr.field
    }

    pub fn dim(&self) -> usize {
        self.presentation.dim()
    }

    pub fn word_length(&self, i: usize) -> usize {
        self.basis_words[i].len()
    }

    /// Class of a word; `CutoffExceeded` if it is too long.
    pub fn word(&self, w: &[usize]) -> Result<SparseVec> {
        if w.len() > self.cutoff {
            return Err(Error::CutoffExceeded { needed: w.len(), cutoff: self.cutoff });
        }
        let f = self.field();
        Ok(self.presentation.project(&SparseVec::unit(self.words().total(), self.words().index(w), f.one())))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Result<SparseVec> {
        let mut w = self.basis_words[i].clone();
        w.extend_from_slice(&self.basis_words[j]);
        self.word(&w)
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec> {
        let mut acc = Accum::new(self.dim());
        for (i, a) in &u.entries {
            for (j, b) in &v.entries {
                acc.add_vec(&(a * b), &self.mul_basis(*i, *j)?);
            }
        }
        Ok(acc.finish())
    }

    /// `s_L = t_L: R → V`.
    pub fn source_map(&self) -> Matrix {
        let cols = (0..self.lr.dr()).map(|r| self.word(&[r]).expect("letters fit")).collect();
        Matrix::from_columns(self.field(), self.dim(), cols)
    }

    /// `Z ↦ Z` as a letter.
    pub fn generator(&self, z: usize) -> SparseVec {
        self.word(&[self.lr.dr() + z]).expect("letters fit")
    }

    /// `Δ_L` on letters, in `V ⊗ V` Kronecker coordinates: `1⊗Z + Z⊗1` and `r⊗1`.
    pub fn coproduct_of_letter(&self, letter: usize) -> SparseVec {
        let one = self.word(&[]).expect("empty word");
        let g = self.word(&[letter]).expect("letters fit");
        if letter < self.lr.dr() {
            outer(&[&g, &one])
        } else {
            outer(&[&one, &g]).add(&outer(&[&g, &one]))
        }
    }

    /// `R → R` for one letter acting on the left (`r` multiplies, `Z` differentiates).
    fn left_letter(&self, letter: usize) -> Matrix {
        let d = &self.lr;
        let cols = (0..d.dr())
            .map(|r| {
                if letter < d.dr() {
                    d.r.mul_vec(&d.rbasis(letter), &d.rbasis(r))
                } else {
                    d.anchor_of(&d.lbasis(letter - d.dr()), &d.rbasis(r))
                }
            })
            .collect();
        Matrix::from_columns(d.field, d.dr(), cols)
    }

    /// `R → R` for one letter acting on the right (`r·Z = ∇_Z(r)`).
    fn right_letter(&self, letter: usize) -> Matrix {
        let d = &self.lr;
        let cols = (0..d.dr())
            .map(|r| {
                if letter < d.dr() {
                    d.r.mul_vec(&d.rbasis(r), &d.rbasis(letter))
                } else {
                    d.nabla_of(&d.lbasis(letter - d.dr()), &d.rbasis(r))
                }
            })
            .collect();
        Matrix::from_columns(d.field, d.dr(), cols)
    }

    fn word_operator(&self, w: &[usize], right: bool) -> Matrix {
        let id = Matrix::identity(self.field(), self.lr.dr());
        if right {
            w.iter().fold(id, |acc, &l| self.right_letter(l).mul(&acc))
        } else {
            w.iter().rev().fold(id, |acc, &l| self.left_letter(l).mul(&acc))
        }
    }

    /// `ε_L(u) = u ▷ 1_R`, defined on all words and descended.
    pub fn counit(&self) -> Result<LinMap> {
        let idx = self.words();
        let cols = (0..idx.total()).map(|i| self.word_operator(&idx.word(i), false).mul_vec(&self.lr.r.unit)).collect();
        let free = Matrix::from_columns(self.field(), self.lr.dr(), cols);
        let dst = QuotientPresentation::trivial(self.field(), &self.lr.r.space);
        descend(&free, &self.presentation, &dst).map_err(|e| Error::descent("ε_L", e))
    }

    /// The right action of a basis element on `R`, `r·Z = ∇_Z(r)`.
    pub fn right_action(&self, i: usize) -> Matrix {
        self.word_operator(&self.basis_words[i], true)
    }
}

/// Bracket of `R ⊕ 𝔏` on letters, as a letter combination.
fn letter_bracket(d: &LieRinehartData, a: usize, b: usize) -> SparseVec {
    let dr = d.dr();
    let g = dr + d.dl();
    let embed = |r: SparseVec, z: SparseVec| {
        SparseVec::from_entries(g, r.entries.into_iter().chain(z.entries.into_iter().map(|(i, c)| (dr + i, c))))
    };
    let zero_r = SparseVec::zero(dr);
    let zero_l = SparseVec::zero(d.dl());
    match (a < dr, b < dr) {
        (true, true) => SparseVec::zero(g),
        (false, true) => embed(d.anchor_of(&d.lbasis(a - dr), &d.rbasis(b)), zero_l),
        (true, false) => embed(d.anchor_of(&d.lbasis(b - dr), &d.rbasis(a)).neg(), zero_l),
        (false, false) => embed(zero_r, d.br(&d.lbasis(a - dr), &d.lbasis(b - dr))),
    }
}

/// `r·(r', Z) = (rr', rZ)` on letters.
fn letter_scale(d: &LieRinehartData, r: usize, b: usize) -> SparseVec {
    let dr = d.dr();
    let g = dr + d.dl();
    if b < dr {
        let v = d.r.mul_vec(&d.rbasis(r), &d.rbasis(b));
        SparseVec::from_entries(g, v.entries)
    } else {
        let v = d.act(&d.rbasis(r), &d.lbasis(b - dr));
        SparseVec::from_entries(g, v.entries.into_iter().map(|(i, c)| (dr + i, c)))
    }
}

fn letters_to_words(v: &SparseVec) -> Vec<(Scalar, Vec<usize>)> {
    v.entries.iter().map(|(i, c)| (c.clone(), vec![*i])).collect()
}

/// All words of length `≤ max`.
fn all_words(letters: usize, max: usize) -> Vec<Vec<usize>> {
    (0..=max).flat_map(|k| (0..letters.pow(k as u32)).map(move |f| TensorShape::power(letters, k).unflatten(f))).collect()
}

pub fn truncated_envelope(d: &LieRinehartData, cutoff: usize) -> Result<TruncatedEnvelopeData> {
    if cutoff < 2 {
        return Err(Error::InvalidData("the envelope needs a cutoff of at least 2".into()));
    }
    let f = d.field;
    let (one, m1) = (f.one(), f.from_i64(-1));
    let g = d.dr() + d.dl();
    let idx = WordIndex { letters: g, cutoff };
    // (relator terms, longest word)
    let mut relators: Vec<(Vec<(Scalar, Vec<usize>)>, usize)> = Vec::new();
    for a in 0..g {
        for b in 0..g {
            let mut t = vec![(one.clone(), vec![a, b]), (m1.clone(), vec![b, a])];
            t.extend(letters_to_words(&letter_bracket(d, a, b).neg()));
            relators.push((t, 2));
        }
    }
    for r in 0..d.dr() {
        for b in 0..g {
            let mut t = vec![(one.clone(), vec![r, b])];
            t.extend(letters_to_words(&letter_scale(d, r, b).neg()));
            relators.push((t, 2));
        }
    }
    // r·Z ⊗ b = (r·b) ⊗ Z + r·[Z, b]: a consequence of the above that would otherwise
    // only appear through words longer than the cutoff, e.g. (εE)² = 0 via εEεE.
    for r in 0..d.dr() {
        for z in d.dr()..g {
            for b in 0..g {
                let mut t = Vec::new();
                for (i, c) in &letter_scale(d, r, z).entries {
                    t.push((c.clone(), vec![*i, b]));
                }
                for (i, c) in &letter_scale(d, r, b).entries {
                    t.push((-c.clone(), vec![*i, z]));
                }
                for (k, c) in &letter_bracket(d, z, b).entries {
                    for (i, e) in &letter_scale(d, r, *k).entries {
                        t.push((-(c * e), vec![*i]));
                    }
                }
                relators.push((t, 2));
            }
        }
    }
    let mut unit = letters_to_words(&SparseVec::from_entries(g, d.r.unit.entries.clone()));
    unit.push((m1.clone(), vec![]));
    relators.push((unit, 1));

    let mut rels = Vec::new();
    for (terms, len) in &relators {
        let room = cutoff - len;
        for u in all_words(g, room) {
            for v in all_words(g, room - u.len()) {
                let t: Vec<(Scalar, Vec<usize>)> = terms
                    .iter()
                    .map(|(c, w)| {
                        let mut x = u.clone();
                        x.extend_from_slice(w);
                        x.extend_from_slice(&v);
                        (c.clone(), x)
                    })
                    .collect();
                let vec = idx.combo(&t);
                if !vec.is_zero() {
                    rels.push(vec);
                }
            }
        }
    }
    let ambient = Space::new(idx.total(), format!("T≤{cutoff}(R⊕L)"));
    let rel = Matrix::from_columns(f, idx.total(), rels);
    let presentation = Arc::new(quotient_by(&ambient, &rel, &format!("V≤{cutoff}({})", d.label))?);
    let basis_words = presentation.representatives.iter().map(|&i| idx.word(i)).collect();
    Ok(TruncatedEnvelopeData { lr: d.clone(), cutoff, presentation, basis_words })
}

/// Letter maps `R ⊕ 𝔏 → R' ⊕ 𝔏'` per basis element of `C`.
fn letter_maps(m: &LrMeasuringData) -> Vec<Matrix> {
    let f = m.field();
    let (dr, dr2) = (m.source.dr(), m.target.dr());
    let (g, g2) = (dr + m.source.dl(), dr2 + m.target.dl());
    m.small
        .iter()
        .zip(&m.big)
        .map(|(s, b)| {
            let mut t = Vec::new();
            for j in 0..s.cols {
                for (i, c) in &s.col(j).entries {
                    t.push((*i, j, c.clone()));
                }
            }
            for j in 0..b.cols {
                for (i, c) in &b.col(j).entries {
                    t.push((dr2 + i, dr + j, c.clone()));
                }
            }
            Matrix::from_triplets(f, g2, g, t)
        })
        .collect()
}

/// `x` acting slotwise on words, then descended to the truncated envelopes.
#[derive(Clone, Debug)]
pub struct EnvelopeMeasuring {
    pub source: TruncatedEnvelopeData,
    pub target: TruncatedEnvelopeData,
    /// One map per basis element of `C`.
    pub maps: Vec<LinMap>,
}

fn word_action(m: &LrMeasuringData, letters: &[Matrix], x: &SparseVec, cutoff: usize) -> Matrix {
    let f = m.field();
    let (g, g2) = (letters[0].cols, letters[0].rows);
    let (si, ti) = (WordIndex { letters: g, cutoff }, WordIndex { letters: g2, cutoff });
    let mut t = Vec::new();
    for k in 0..=cutoff {
        let block = if k == 0 {
            Matrix::from_triplets(f, 1, 1, [(0, 0, m.c.counit_of(x))])
        } else {
            slotwise_free(&m.c, letters, x, k)
        };
        for j in 0..block.cols {
            for (i, c) in &block.col(j).entries {
                t.push((ti.offset(k) + i, si.offset(k) + j, c.clone()));
            }
        }
    }
    Matrix::from_triplets(f, ti.total(), si.total(), t)
}

/// The measuring of truncated envelopes induced by `m`, with its report: ideal
/// compatibility (descent), multiplicativity on basis pairs under the cutoff,
/// unit, counit and source compatibility, and the comodule-measuring condition for
/// `R` as a right module. Pairs beyond the cutoff are reported as unchecked.
pub fn envelope_measuring(m: &LrMeasuringData, cutoff: usize) -> Result<(EnvelopeMeasuring, CheckReport)> {
    if !m.c.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let src = truncated_envelope(&m.source, cutoff)?;
    let dst = truncated_envelope(&m.target, cutoff)?;
    let f = m.field();
    let dc = m.c.dim();
    let letters = letter_maps(m);
    let mut r = CheckReport::new(format!("envelope measuring {} at W = {cutoff}", m.label));
    let mut maps = Vec::with_capacity(dc);
    let mut ideal = None;
    for x in 0..dc {
        let free = word_action(m, &letters, &m.c.basis(x), cutoff);
        match descend(&free, &src.presentation, &dst.presentation) {
            Ok(map) => maps.push(map),
            Err(e) => {
                ideal = ideal.or(Some(vec![x, e.relation, e.coordinate]));
                maps.push(LinMap::zero(f, &src.presentation.quotient, &dst.presentation.quotient));
            }
        }
    }
    r.record("ideal compatibility", ideal.clone());
    let out = EnvelopeMeasuring { source: src, target: dst, maps };
    if ideal.is_some() {
        return Ok((out, r));
    }
    let (s, t) = (&out.source, &out.target);
    let coproduct = |x: usize| -> Vec<(Scalar, usize, usize)> {
        m.c.comul_basis(x).entries.iter().map(|(k, c)| (c.clone(), k / dc, k % dc)).collect()
    };
    let dv = s.dim();
    let mut beyond = 0usize;
    let mult = find_witness(&[dc, dv, dv], |ix| {
        let (x, i, j) = (ix[0], ix[1], ix[2]);
        if s.word_length(i) + s.word_length(j) > cutoff {
            beyond += 1;
            return false;
        }
        let lhs = out.maps[x].mat.mul_vec(&s.mul_basis(i, j).expect("under cutoff"));
        let mut acc = Accum::new(t.dim());
        for (c, x1, x2) in coproduct(x) {
            let p = t.mul(&out.maps[x1].mat.col(i).clone(), &out.maps[x2].mat.col(j).clone()).expect("filtration preserved");
            acc.add_vec(&c, &p);
        }
        lhs != acc.finish()
    });
    r.record("multiplicative", mult);
    if beyond > 0 {
        r.unchecked("multiplicative beyond cutoff", format!("{beyond} basis pairs exceed W = {cutoff}"));
    }
    let one_s = s.word(&[])?;
    let one_t = t.word(&[])?;
    r.record(
        "unital",
        find_witness(&[dc], |ix| out.maps[ix[0]].mat.mul_vec(&one_s) != one_t.scale(&m.c.counit_of(&m.c.basis(ix[0])))),
    );
    let (eps_s, eps_t) = (s.counit()?, t.counit()?);
    r.record(
        "counit compatible",
        find_witness(&[dc], |ix| {
            let lhs = eps_t.mat.mul(&out.maps[ix[0]].mat);
            lhs != m.small[ix[0]].mul(&eps_s.mat)
        }),
    );
    r.record(
        "source compatible",
        find_witness(&[dc], |ix| out.maps[ix[0]].mat.mul(&s.source_map()) != t.source_map().mul(&m.small[ix[0]])),
    );
    r.merge(check_r_module(s));
    r.merge(check_r_module(t));
    // x(r·u) = x₍₁₎(r)·x₍₂₎(u)
    let dr = m.source.dr();
    r.record(
        "R comodule measuring",
        find_witness(&[dc, dr, dv], |ix| {
            let (x, p, u) = (ix[0], ix[1], ix[2]);
            let lhs = m.small[x].mul_vec(&s.right_action(u).mul_vec(&m.source.rbasis(p)));
            let mut acc = Accum::new(m.target.dr());
            for (c, x1, x2) in coproduct(x) {
                let img = m.small[x1].mul_vec(&m.source.rbasis(p));
                for (w, cw) in &out.maps[x2].mat.col(u).entries {
                    acc.add_vec(&(&c * cw), &t.right_action(*w).mul_vec(&img));
                }
            }
            lhs != acc.finish()
        }),
    );
    Ok((out, r))
}

/// `R` is a right module over the truncated envelope: every relation acts by zero.
fn check_r_module(e: &TruncatedEnvelopeData) -> CheckReport {
    let mut r = CheckReport::new(format!("R right module over {}", e.presentation.quotient.label));
    let idx = e.words();
    let rel = &e.presentation.relations.mat;
    let bad = (0..rel.cols).find(|&j| {
        let mut acc = Matrix::zeros(e.field(), e.lr.dr(), e.lr.dr());
        for (i, c) in &rel.col(j).entries {
            acc = acc.add(&e.word_operator(&idx.word(*i), true).scale(c));
        }
        !acc.is_zero()
    });
    r.record("relations act by zero", bad.map(|j| vec![j]));
    r
}

/// `V^{⊗_R n}` restricted to words of length one: `(R ⊕ 𝔏)^{⊗n}` modulo
/// `r·a ⊗ b = a ⊗ r·b` in adjacent slots. Degree 0 is `R`.
pub fn alt_target(d: &LieRinehartData, n: usize) -> Result<Arc<QuotientPresentation>> {
    let f = d.field;
    if n == 0 {
        return Ok(Arc::new(QuotientPresentation::trivial(f, &d.r.space)));
    }
    let g = d.dr() + d.dl();
    let shape = TensorShape::power(g, n);
    let mut rels = Vec::new();
    for flat in 0..shape.total() {
        let ix = shape.unflatten(flat);
        let slots: Vec<SparseVec> = ix.iter().map(|&a| SparseVec::unit(g, a, f.one())).collect();
        for k in 0..n - 1 {
            for r in 0..d.dr() {
                let mut left = slots.clone();
                left[k] = letter_scale(d, r, ix[k]);
                let mut right = slots.clone();
                right[k + 1] = letter_scale(d, r, ix[k + 1]);
                let v = outer(&left.iter().collect::<Vec<_>>()).sub(&outer(&right.iter().collect::<Vec<_>>()));
                if !v.is_zero() {
                    rels.push(v);
                }
            }
        }
    }
    let ambient = Space::new(shape.total(), format!("(R⊕L)^{n}"));
    let rel = Matrix::from_columns(f, shape.total(), rels);
    Ok(Arc::new(quotient_by(&ambient, &rel, &format!("V^{n}_R({})", d.label))?))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at `pos` creates `len - pos` inversions
            out.push((q, odd ^ ((p.len() - pos) % 2 == 1)));
        }
    }
    out
}

/// `Alt_n(Z₁∧…∧Zₙ) = (1/n!) Σ_σ sgn(σ) Z_{σ(1)} ⊗ … ⊗ Z_{σ(n)}`.
pub fn alt_map(d: &LieRinehartData, n: usize) -> Result<LinMap> {
    let f = d.field;
    let src = wedge_space(d, n)?;
    let dst = alt_target(d, n)?;
    if n == 0 {
        return Ok(LinMap::identity(f, &src.quotient));
    }
    let g = d.dr() + d.dl();
    let perms = permutations(n);
    let fact: i64 = (1..=n as i64).product();
    let scale = f.from_frac(1, fact)?;
    let out_shape = TensorShape::power(g, n);
    let free = free_matrix(f, &TensorShape::power(d.dl(), n), out_shape.total(), |ix| {
        let mut acc = Accum::new(out_shape.total());
        for (p, odd) in &perms {
            let w: Vec<usize> = p.iter().map(|&k| d.dr() + ix[k]).collect();
            let c = if *odd { -scale.clone() } else { scale.clone() };
            acc.add(out_shape.flatten(&w), &c);
        }
        acc.finish()
    });
    descend(&free, &src, &dst).map_err(|e| Error::descent(format!("Alt_{n}"), e))
}

/// Records `Alt_n ∘ x = x ∘ Alt_n` with `x` acting on wedges and slotwise on
/// `V^{⊗_R n}`; witness is a column.
pub fn check_alt_intertwines(m: &LrMeasuringData, x: &SparseVec, n: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("Alt_{n} intertwines {}", m.label));
    let on_wedge = super::wedge_action(m, x, n)?;
    let on_tensors = if n == 0 {
        measuring_at(&m.small, x)
    } else {
        let free = slotwise_free(&m.c, &letter_maps(m), x, n);
        let (s, t) = (alt_target(&m.source, n)?, alt_target(&m.target, n)?);
        descend(&free, &s, &t).map_err(|e| Error::descent(format!("{} on V^{n}", m.label), e))?.mat
    };
    let lhs = alt_map(&m.target, n)?.mat.mul(&on_wedge.mat);
    let rhs = on_tensors.mul(&alt_map(&m.source, n)?.mat);
    r.record("Alt ∘ x = x ∘ Alt", crate::algcore::first_diff_col(&lhs, &rhs));
    Ok(r)
}
