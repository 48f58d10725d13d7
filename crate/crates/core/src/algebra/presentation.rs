use serde::{Deserialize, Serialize};

use super::groebner::GroebnerBasis;
use super::matrix::{FreeModule, GradedMatrix, MatrixJson};
use super::monomial::Monomial;
use super::monomial_ideal::monomial_dim;
use super::poly::Polynomial;
use super::ring::{Degree, Ring};
use super::submodule::{self, generator_matrix};
use super::syzygy::syzygy_module;
use super::vector::ModVec;
use crate::error::{Error, Result};

/// A finitely generated graded module, presented as the cokernel of `relations`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation {
    relations: GradedMatrix,
}

impl ModulePresentation {
    pub fn new(relations: GradedMatrix) -> Self {
        ModulePresentation { relations }
    }

    /// The free module itself, with no relations.
    pub fn free(ring: &Ring, module: FreeModule) -> Self {
        Self::new(submodule::zero_submodule(ring, &module))
    }

    /// `S/I` for an ideal with the given (homogeneous) generators.
    pub fn cyclic(ring: &Ring, ideal: &[Polynomial]) -> Result<Self> {
        let one = FreeModule::free(ring, 1);
        let mut cols = Vec::new();
        for g in ideal.iter().filter(|g| !g.is_zero()) {
            if !g.is_homogeneous(ring) {
                return Err(Error::NotHomogeneous(g.format(ring)));
            }
            cols.push(g.0.clone());
        }
        Ok(Self::new(generator_matrix(ring, &one, cols)))
    }

    pub fn ambient(&self) -> &FreeModule {
        self.relations.target()
    }

    pub fn relations(&self) -> &GradedMatrix {
        &self.relations
    }

    pub fn groebner(&self, ring: &Ring) -> GroebnerBasis {
        submodule::groebner(ring, &self.relations)
    }

    /// Whether the module is cyclic with monomial relations.
    pub fn is_monomial_cyclic(&self) -> bool {
        self.ambient().rank() == 1 && submodule::is_monomial(&self.relations)
    }

    /// Krull dimension, read off the initial module; `None` for the zero module.
    pub fn krull_dim(&self, ring: &Ring) -> Option<usize> {
        let gb = self.groebner(ring);
        (0..self.ambient().rank()).filter_map(|c| monomial_dim(ring.nvars(), &gb.leads_in(c))).max()
    }

    /// `nvars - dim`; `None` for the zero module.
    pub fn codim(&self, ring: &Ring) -> Option<usize> {
        self.krull_dim(ring).map(|d| ring.nvars() - d)
    }

    pub fn is_zero(&self, ring: &Ring) -> bool {
        submodule::is_everything(ring, &self.relations)
    }

    pub fn is_irrelevant(&self, ring: &Ring) -> bool {
        submodule::quotient_is_irrelevant(ring, &self.relations)
    }

    /// Generators of the saturation of the relation module.
    pub fn saturated_relations(&self, ring: &Ring) -> GradedMatrix {
        submodule::saturate(ring, &self.relations)
    }

    /// `M/fM`.
    pub fn quotient_by_element(&self, ring: &Ring, f: &Polynomial) -> Result<Self> {
        let amb = self.ambient();
        let fd = f.homogeneous_degree(ring).ok_or_else(|| Error::NotHomogeneous(f.format(ring)))?;
        let cols =
            (0..amb.rank()).map(|c| ModVec::unit(c).mul_terms(&f.term_list(), amb.order(), ring.field())).collect();
        let fmat = GradedMatrix::new_unchecked(amb.clone(), amb.shifted(ring, &fd), cols);
        Ok(Self::new(submodule::minimal_generators(ring, &self.relations.hstack(ring, &fmat)?)))
    }

    /// Generators (in the ambient module) of the preimage of `Ann_M f`, i.e. `R : f`.
    pub fn annihilator_of_element(&self, ring: &Ring, f: &Polynomial) -> GradedMatrix {
        submodule::quotient_by_element(ring, &self.relations, f)
    }

    /// `Ann_M f = (R : f)/R` as a module.
    pub fn annihilator_module(&self, ring: &Ring, f: &Polynomial) -> ModulePresentation {
        subquotient(ring, &self.annihilator_of_element(ring, f), &self.relations)
    }

    /// Generators of `Ann_S M = ∩_k (R : e_k)`.
    pub fn annihilator(&self, ring: &Ring) -> Vec<Polynomial> {
        let one = FreeModule::free(ring, 1);
        let amb = self.ambient();
        let mut acc: Option<GradedMatrix> = None;
        for k in 0..amb.rank() {
            let ek = GradedMatrix::new_unchecked(
                amb.clone(),
                FreeModule::new(ring, vec![amb.twist(k).clone()]),
                vec![ModVec::unit(k)],
            );
            let pre = submodule::preimage(ring, &ek, &self.relations);
            let ideal = generator_matrix(ring, &one, pre.into_columns());
            acc = Some(match acc {
                None => ideal,
                Some(a) => submodule::intersect(ring, &a, &ideal),
            });
        }
        match acc {
            None => vec![Polynomial::constant(ring, 1)],
            Some(a) => submodule::groebner(ring, &a).into_elements().into_iter().map(Polynomial).collect(),
        }
    }

    /// `dim_k M_d`.
    pub fn hilbert_function(&self, ring: &Ring, d: &[i64]) -> usize {
        hilbert_function_of(ring, &self.groebner(ring), self.ambient(), d)
    }

    /// The same module with a minimal presentation.
    pub fn pruned(&self, ring: &Ring) -> ModulePresentation {
        crate::resolution::minimize::prune_presentation(ring, self)
    }

    pub fn to_json(&self, ring: &Ring) -> PresentationJson {
        PresentationJson { relations: self.relations.to_json(ring) }
    }

    pub fn from_json(ring: &Ring, j: &PresentationJson) -> Result<Self> {
        Ok(Self::new(GradedMatrix::from_json(ring, &j.relations)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub relations: MatrixJson,
}

/// Presentation of `(span(gens) + span(rels)) / span(rels)`, both inside one free module.
pub fn subquotient(ring: &Ring, gens: &GradedMatrix, rels: &GradedMatrix) -> ModulePresentation {
    let src = gens.source();
    if gens.ncols() == 0 {
        return ModulePresentation::free(ring, src.clone());
    }
    let stacked = gens.hstack(ring, rels).expect("common ambient");
    let syz = syzygy_module(ring, &stacked);
    let n = gens.ncols();
    let cols = syz.columns().iter().map(|z| z.map_comps(|c| (c < n).then_some(c), src.order(), ring.field())).collect();
    ModulePresentation::new(submodule::minimal_generators(ring, &generator_matrix(ring, src, cols)))
}

/// Monomials of multidegree `d`.
pub fn monomials_of_degree(ring: &Ring, d: &[i64]) -> Vec<Monomial> {
    let mut out = Vec::new();
    if let Some(blocks) = ring.blocks() {
        if d.iter().any(|&x| x < 0) {
            return out;
        }
        let mut acc = vec![Monomial::ONE];
        for (b, &k) in blocks.iter().zip(d) {
            let mut next = Vec::new();
            for m in &acc {
                compositions(b, k as u16, *m, &mut next);
            }
            acc = next;
        }
        return acc;
    }
    let target = ring.weight_of_degree(d);
    if target < 0 {
        return out;
    }
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let w = ring.mono_order().weights().to_vec();
    fn rec(ring: &Ring, vars: &[usize], w: &[u32], left: i64, cur: Monomial, d: &[i64], out: &mut Vec<Monomial>) {
        let Some((&v, rest)) = vars.split_first() else {
            if left == 0 && ring.degree(&cur) == d {
                out.push(cur);
            }
            return;
        };
        let mut m = cur;
        let mut l = left;
        loop {
            rec(ring, rest, w, l, m, d, out);
            l -= w[v] as i64;
            if l < 0 {
                break;
            }
            m.0[v] += 1;
        }
    }
    rec(ring, &vars, &w, target, Monomial::ONE, d, &mut out);
    out
}

fn compositions(vars: &[usize], k: u16, base: Monomial, out: &mut Vec<Monomial>) {
    match vars.split_first() {
        None => {
            if k == 0 {
                out.push(base);
            }
        }
        Some((&v, rest)) => {
            if rest.is_empty() {
                let mut m = base;
                m.0[v] += k;
                out.push(m);
                return;
            }
            for e in 0..=k {
                let mut m = base;
                m.0[v] += e;
                compositions(rest, k - e, m, out);
            }
        }
    }
}

/// `dim_k (F/N)_d` given a Gröbner basis of `N`.
pub fn hilbert_function_of(ring: &Ring, gb: &GroebnerBasis, ambient: &FreeModule, d: &[i64]) -> usize {
    let mut total = 0;
    for c in 0..ambient.rank() {
        let shifted: Degree = d.iter().zip(ambient.twist(c)).map(|(a, b)| a - b).collect();
        let leads = gb.leads_in(c);
        total += monomials_of_degree(ring, &shifted).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count();
    }
    total
}

/// Solves `m·x = v` for vectors `v` in the column span of a fixed matrix.
pub struct Lifter {
    gb: GroebnerBasis,
    source: FreeModule,
}

impl Lifter {
    pub fn new(ring: &Ring, m: &GradedMatrix) -> Self {
        let gb =
            GroebnerBasis::compute_tracked(ring, m.target().order().clone(), m.columns(), m.source().order().clone());
        Lifter { gb, source: m.source().clone() }
    }

    /// A preimage of `v`, or `None` when `v` is not in the span.
    pub fn lift(&self, ring: &Ring, v: &ModVec) -> Option<ModVec> {
        let f = ring.field();
        let (rem, quots) = self.gb.reduce_quotients(v, f);
        if !rem.is_zero() {
            return None;
        }
        let reps = self.gb.representations().unwrap();
        let mut acc = ModVec::zero();
        for t in quots {
            acc = acc.axpy(t.coef, &t.mon, &reps[t.comp as usize], self.source.order(), f);
        }
        Some(acc)
    }
}
