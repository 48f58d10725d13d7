use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::order::ModuleOrder;
use super::poly::Polynomial;
use super::ring::{Degree, Ring};
use super::vector::{ModVec, Term};
use crate::error::{Error, Result};

/// A graded free module `⊕ S(-a_k)`, recorded by the generator degrees `a_k`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    twists: Vec<Degree>,
    order: Arc<ModuleOrder>,
}

impl PartialEq for FreeModule {
    fn eq(&self, o: &Self) -> bool {
        self.twists == o.twists
    }
}

impl FreeModule {
    pub fn new(ring: &Ring, twists: Vec<Degree>) -> Self {
        let shifts: Vec<i64> = twists.iter().map(|t| ring.weight_of_degree(t)).collect();
        let order = Arc::new(ModuleOrder::base(ring.mono_order().clone(), &shifts));
        FreeModule { twists, order }
    }

    /// `S^n` with all twists zero.
    pub fn free(ring: &Ring, n: usize) -> Self {
        Self::new(ring, vec![vec![0; ring.grading_rank()]; n])
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[Degree] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> &Degree {
        &self.twists[i]
    }

    pub fn order(&self) -> &Arc<ModuleOrder> {
        &self.order
    }

    pub fn dual(&self, ring: &Ring) -> Self {
        Self::new(ring, self.twists.iter().map(|t| t.iter().map(|x| -x).collect()).collect())
    }

    pub fn direct_sum(&self, ring: &Ring, o: &FreeModule) -> Self {
        Self::new(ring, self.twists.iter().chain(o.twists.iter()).cloned().collect())
    }

    pub fn shifted(&self, ring: &Ring, by: &[i64]) -> Self {
        Self::new(ring, self.twists.iter().map(|t| t.iter().zip(by).map(|(a, b)| a + b).collect()).collect())
    }

    pub fn sub_module(&self, ring: &Ring, keep: &[usize]) -> Self {
        Self::new(ring, keep.iter().map(|&i| self.twists[i].clone()).collect())
    }

    /// Degree of the homogeneous vector `v`, or `None` when `v` is zero or not homogeneous.
    pub fn vector_degree(&self, ring: &Ring, v: &ModVec) -> Option<Degree> {
        let mut it = v.terms().iter();
        let t = it.next()?;
        let d = self.term_degree(ring, t);
        it.all(|t| self.term_degree(ring, t) == d).then_some(d)
    }

    pub fn term_degree(&self, ring: &Ring, t: &Term) -> Degree {
        let mut d = ring.degree(&t.mon);
        for (a, b) in d.iter_mut().zip(&self.twists[t.comp as usize]) {
            *a += b;
        }
        d
    }
}

/// A homogeneous map `source → target` stored by columns; column `v` is the image
/// of the `v`-th generator of the source, as a vector of the target.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    target: FreeModule,
    source: FreeModule,
    cols: Vec<ModVec>,
}

impl PartialEq for GradedMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.target == o.target && self.source == o.source && self.cols == o.cols
    }
}

impl GradedMatrix {
    /// Builds a matrix after checking column homogeneity.
    pub fn new(ring: &Ring, target: FreeModule, source: FreeModule, cols: Vec<ModVec>) -> Result<Self> {
        let m = Self::new_unchecked(target, source, cols);
        m.check_homogeneous(ring)?;
        Ok(m)
    }

    pub fn new_unchecked(target: FreeModule, source: FreeModule, cols: Vec<ModVec>) -> Self {
        debug_assert_eq!(source.rank(), cols.len());
        GradedMatrix { target, source, cols }
    }

    pub fn zero(target: FreeModule, source: FreeModule) -> Self {
        let n = source.rank();
        GradedMatrix { target, source, cols: vec![ModVec::zero(); n] }
    }

    pub fn identity(m: &FreeModule) -> Self {
        let cols = (0..m.rank()).map(ModVec::unit).collect();
        GradedMatrix { target: m.clone(), source: m.clone(), cols }
    }

    /// Builds from row-major polynomial entries.
    pub fn from_entries(ring: &Ring, target: FreeModule, source: FreeModule, rows: &[Vec<Polynomial>]) -> Result<Self> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Parse(format!(
                "matrix shape does not match {} row twists and {} column twists",
                target.rank(),
                source.rank()
            )));
        }
        let f = ring.field();
        let cols = (0..source.rank())
            .map(|v| {
                let terms = (0..target.rank())
                    .flat_map(|u| rows[u][v].terms().map(move |(m, c)| Term::new(m, u, c)).collect::<Vec<_>>())
                    .collect();
                ModVec::from_terms(terms, target.order(), f)
            })
            .collect();
        Self::new(ring, target, source, cols)
    }

    pub fn check_homogeneous(&self, ring: &Ring) -> Result<()> {
        for (v, col) in self.cols.iter().enumerate() {
            for t in col.terms() {
                let u = t.comp as usize;
                if u >= self.target.rank() {
                    return Err(Error::Domain(format!("entry in row {u} beyond {} rows", self.target.rank())));
                }
                if self.target.term_degree(ring, t) != *self.source.twist(v) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({u},{v}) has degree {:?}, expected {:?} - {:?}",
                        ring.degree(&t.mon),
                        self.source.twist(v),
                        self.target.twist(u)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn columns(&self) -> &[ModVec] {
        &self.cols
    }

    pub fn column(&self, v: usize) -> &ModVec {
        &self.cols[v]
    }

    pub fn into_columns(self) -> Vec<ModVec> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn entry(&self, ring: &Ring, u: usize, v: usize) -> Polynomial {
        Polynomial::from_terms(ring, self.cols[v].component(u))
    }

    pub fn entries(&self, ring: &Ring) -> Vec<Vec<Polynomial>> {
        let mut rows = vec![vec![Vec::new(); self.ncols()]; self.nrows()];
        for (v, col) in self.cols.iter().enumerate() {
            for t in col.terms() {
                rows[t.comp as usize][v].push((t.mon, t.coef));
            }
        }
        rows.into_iter().map(|r| r.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect()).collect()
    }

    /// Applies the matrix to a vector of the source module.
    pub fn apply(&self, ring: &Ring, x: &ModVec) -> ModVec {
        let f = ring.field();
        let order = self.target.order();
        let mut acc = ModVec::zero();
        for t in x.terms() {
            acc = acc.axpy(t.coef, &t.mon, &self.cols[t.comp as usize], order, f);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &Ring, other: &GradedMatrix) -> Result<GradedMatrix> {
        if other.target != self.source {
            return Err(Error::Domain("twist lists do not match for composition".into()));
        }
        let cols = other.cols.iter().map(|c| self.apply(ring, c)).collect();
        Ok(GradedMatrix { target: self.target.clone(), source: other.source.clone(), cols })
    }

    pub fn transpose(&self, ring: &Ring) -> GradedMatrix {
        let target = self.source.dual(ring);
        let source = self.target.dual(ring);
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); self.nrows()];
        for (v, col) in self.cols.iter().enumerate() {
            for t in col.terms() {
                cols[t.comp as usize].push(Term::new(t.mon, v, t.coef));
            }
        }
        let cols = cols.into_iter().map(|t| ModVec::from_terms(t, target.order(), ring.field())).collect();
        GradedMatrix { target, source, cols }
    }

    pub fn scale(&self, ring: &Ring, c: u32) -> GradedMatrix {
        let cols = self.cols.iter().map(|col| col.scale(c, ring.field())).collect();
        GradedMatrix { cols, ..self.clone() }
    }

    pub fn add(&self, ring: &Ring, o: &GradedMatrix) -> Result<GradedMatrix> {
        if self.target != o.target || self.source != o.source {
            return Err(Error::Domain("matrix shapes differ".into()));
        }
        let cols = self.cols.iter().zip(&o.cols).map(|(a, b)| a.add(b, self.target.order(), ring.field())).collect();
        Ok(GradedMatrix { cols, ..self.clone() })
    }

    /// Columns of `self` followed by columns of `o` (same target).
    pub fn hstack(&self, ring: &Ring, o: &GradedMatrix) -> Result<GradedMatrix> {
        if self.target != o.target {
            return Err(Error::Domain("hstack needs a common target".into()));
        }
        let source = self.source.direct_sum(ring, &o.source);
        let mut cols = self.cols.clone();
        cols.extend(o.cols.iter().cloned());
        Ok(GradedMatrix { target: self.target.clone(), source, cols })
    }

    /// Block matrix `[[a, b], [c, d]]`; any block may be `None` (zero).
    pub fn from_blocks(
        ring: &Ring,
        top: &FreeModule,
        bottom: &FreeModule,
        left: &FreeModule,
        right: &FreeModule,
        blocks: [[Option<&GradedMatrix>; 2]; 2],
    ) -> GradedMatrix {
        let target = top.direct_sum(ring, bottom);
        let source = left.direct_sum(ring, right);
        let shift = top.rank();
        let mut cols = Vec::with_capacity(source.rank());
        for (side, width) in [(0usize, left.rank()), (1, right.rank())] {
            for v in 0..width {
                let mut terms = Vec::new();
                if let Some(m) = blocks[0][side] {
                    terms.extend(m.cols[v].terms().iter().copied());
                }
                if let Some(m) = blocks[1][side] {
                    terms.extend(m.cols[v].terms().iter().map(|t| Term { comp: t.comp + shift as u32, ..*t }));
                }
                cols.push(ModVec::from_terms(terms, target.order(), ring.field()));
            }
        }
        GradedMatrix { target, source, cols }
    }

    /// `self ⊗ id_G`, with basis `(a, g)` at index `a·rank(G) + g`.
    pub fn tensor_identity(&self, ring: &Ring, g: &FreeModule) -> GradedMatrix {
        let target = tensor_module(ring, &self.target, g);
        let source = tensor_module(ring, &self.source, g);
        let k = g.rank();
        let mut cols = Vec::with_capacity(source.rank());
        for col in &self.cols {
            for gi in 0..k {
                let terms = col.terms().iter().map(|t| Term::new(t.mon, t.comp as usize * k + gi, t.coef)).collect();
                cols.push(ModVec::from_terms(terms, target.order(), ring.field()));
            }
        }
        GradedMatrix { target, source, cols }
    }

    /// `id_F ⊗ self`, with basis `(a, g)` at index `a·rank + g`.
    pub fn identity_tensor(&self, ring: &Ring, fm: &FreeModule) -> GradedMatrix {
        let target = tensor_module(ring, fm, &self.target);
        let source = tensor_module(ring, fm, &self.source);
        let (kt, ks) = (self.nrows(), self.ncols());
        let mut cols = Vec::with_capacity(source.rank());
        for a in 0..fm.rank() {
            for v in 0..ks {
                let terms =
                    self.cols[v].terms().iter().map(|t| Term::new(t.mon, a * kt + t.comp as usize, t.coef)).collect();
                cols.push(ModVec::from_terms(terms, target.order(), ring.field()));
            }
        }
        GradedMatrix { target, source, cols }
    }

    /// Keeps the listed rows and columns, renumbering in the given order.
    pub fn submatrix(&self, ring: &Ring, rows: &[usize], cols: &[usize]) -> GradedMatrix {
        let target = self.target.sub_module(ring, rows);
        let source = self.source.sub_module(ring, cols);
        let mut row_map = vec![None; self.nrows()];
        for (new, &old) in rows.iter().enumerate() {
            row_map[old] = Some(new);
        }
        let cols = cols.iter().map(|&v| self.cols[v].map_comps(|u| row_map[u], target.order(), ring.field())).collect();
        GradedMatrix { target, source, cols }
    }

    /// The same map between both modules twisted by `by`.
    pub fn shifted(&self, ring: &Ring, by: &[i64]) -> GradedMatrix {
        GradedMatrix {
            target: self.target.shifted(ring, by),
            source: self.source.shifted(ring, by),
            cols: self.cols.clone(),
        }
    }

    /// Replaces the source and columns, keeping the target.
    pub fn with_columns(&self, source: FreeModule, cols: Vec<ModVec>) -> GradedMatrix {
        GradedMatrix { target: self.target.clone(), source, cols }
    }

    pub fn to_json(&self, ring: &Ring) -> MatrixJson {
        MatrixJson {
            row_twists: self.target.twists().to_vec(),
            col_twists: self.source.twists().to_vec(),
            entries: self.entries(ring).iter().map(|r| r.iter().map(|p| p.format(ring)).collect()).collect(),
        }
    }

    pub fn from_json(ring: &Ring, j: &MatrixJson) -> Result<Self> {
        let target = FreeModule::new(ring, j.row_twists.clone());
        let source = FreeModule::new(ring, j.col_twists.clone());
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(s, ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        for t in target.twists().iter().chain(source.twists()) {
            if t.len() != ring.grading_rank() {
                return Err(Error::Parse(format!("twist {t:?} has the wrong length")));
            }
        }
        Self::from_entries(ring, target, source, &rows)
    }

    /// Whether some entry has a nonzero constant term.
    pub fn has_unit_entry(&self) -> bool {
        self.cols.iter().any(|c| c.terms().iter().any(|t| t.mon == Monomial::ONE))
    }
}

pub fn tensor_module(ring: &Ring, a: &FreeModule, b: &FreeModule) -> FreeModule {
    let mut tw = Vec::with_capacity(a.rank() * b.rank());
    for x in a.twists() {
        for y in b.twists() {
            tw.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    FreeModule::new(ring, tw)
}

/// Serialized matrix: twist lists and row-major entry strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub row_twists: Vec<Degree>,
    pub col_twists: Vec<Degree>,
    pub entries: Vec<Vec<String>>,
}
