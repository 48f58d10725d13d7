//! Submodules of graded free modules, given by generator matrices: membership,
//! intersections, colon modules and saturation with respect to the irrelevant ideal.

use std::sync::Arc;

use super::groebner::GroebnerBasis;
use super::matrix::{FreeModule, GradedMatrix};
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Ring;
use super::syzygy::{syzygy_module, vector_twists};
use super::vector::{ModVec, Term};

/// Generator matrix for `gens` inside `ambient`, dropping zero vectors.
pub fn generator_matrix(ring: &Ring, ambient: &FreeModule, gens: Vec<ModVec>) -> GradedMatrix {
    let gens: Vec<ModVec> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.resort(ambient.order())).collect();
    let twists = vector_twists(ring, ambient, &gens).expect("generators must be homogeneous");
    GradedMatrix::new_unchecked(ambient.clone(), FreeModule::new(ring, twists), gens)
}

/// The zero submodule of `ambient`.
pub fn zero_submodule(ring: &Ring, ambient: &FreeModule) -> GradedMatrix {
    GradedMatrix::new_unchecked(ambient.clone(), FreeModule::new(ring, vec![]), vec![])
}

/// Gröbner basis of the column span under the ambient order.
pub fn groebner(ring: &Ring, m: &GradedMatrix) -> GroebnerBasis {
    GroebnerBasis::compute(ring, m.target().order().clone(), m.columns())
}

/// Columns forming a minimal generating set of the column span.
pub fn minimal_generators(ring: &Ring, m: &GradedMatrix) -> GradedMatrix {
    let (_, keep) = GroebnerBasis::compute_with_minimal(ring, m.target().order().clone(), m.columns());
    if keep.len() == m.ncols() {
        return m.clone();
    }
    let source = m.source().sub_module(ring, &keep);
    m.with_columns(source, keep.iter().map(|&k| m.column(k).clone()).collect())
}

/// Reduced Gröbner basis elements as a generator matrix.
pub fn groebner_matrix(ring: &Ring, m: &GradedMatrix) -> GradedMatrix {
    generator_matrix(ring, m.target(), groebner(ring, m).into_elements())
}

pub fn is_monomial(m: &GradedMatrix) -> bool {
    m.columns().iter().all(|c| c.len() <= 1)
}

/// Whether every column of `a` lies in the span of `b` (same ambient).
pub fn is_contained(ring: &Ring, a: &GradedMatrix, b: &GradedMatrix) -> bool {
    if a.is_zero() {
        return true;
    }
    let gb = groebner(ring, b);
    a.columns().iter().all(|c| gb.contains(c, ring.field()))
}

pub fn equal_submodules(ring: &Ring, a: &GradedMatrix, b: &GradedMatrix) -> bool {
    groebner(ring, a).elements() == groebner(ring, b).elements()
}

/// Whether the span contains the whole ambient module.
pub fn is_everything(ring: &Ring, m: &GradedMatrix) -> bool {
    let gb = groebner(ring, m);
    (0..m.nrows()).all(|c| gb.leads_in(c).iter().any(|l| l.is_one()))
}

/// Keeps monomial generators minimal under divisibility (per component).
fn minimal_monomials(mut gens: Vec<(Monomial, usize)>) -> Vec<(Monomial, usize)> {
    gens.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.total_degree().cmp(&b.0.total_degree())).then(a.0.cmp_lex(&b.0)));
    gens.dedup();
    let mut out: Vec<(Monomial, usize)> = Vec::new();
    for (m, c) in gens {
        if !out.iter().any(|(o, oc)| *oc == c && o.divides(&m)) {
            out.push((m, c));
        }
    }
    out
}

fn monomial_matrix(ring: &Ring, ambient: &FreeModule, gens: Vec<(Monomial, usize)>) -> GradedMatrix {
    let vecs = minimal_monomials(gens).into_iter().map(|(m, c)| ModVec(vec![Term::new(m, c, 1)])).collect();
    generator_matrix(ring, ambient, vecs)
}

fn monomial_gens(m: &GradedMatrix) -> Vec<(Monomial, usize)> {
    m.columns().iter().filter_map(|c| c.lead().map(|t| (t.mon, t.comp as usize))).collect()
}

/// `a ∩ b` for submodules of a common free module.
pub fn intersect(ring: &Ring, a: &GradedMatrix, b: &GradedMatrix) -> GradedMatrix {
    let ambient = a.target();
    if a.ncols() == 0 || b.ncols() == 0 {
        return zero_submodule(ring, ambient);
    }
    if is_monomial(a) && is_monomial(b) {
        let mut out = Vec::new();
        for (ma, ca) in monomial_gens(a) {
            for (mb, cb) in monomial_gens(b) {
                if ca == cb {
                    out.push((ma.lcm(&mb), ca));
                }
            }
        }
        return monomial_matrix(ring, ambient, out);
    }
    let stacked = a.hstack(ring, b).expect("common ambient");
    let syz = syzygy_module(ring, &stacked);
    let na = a.ncols();
    let gens: Vec<ModVec> = syz
        .columns()
        .iter()
        .map(|z| {
            let part = z.map_comps(|c| (c < na).then_some(c), a.source().order(), ring.field());
            a.apply(ring, &part)
        })
        .collect();
    minimal_generators(ring, &generator_matrix(ring, ambient, gens))
}

/// `n : f = {v : f·v ∈ n}`.
pub fn quotient_by_element(ring: &Ring, n: &GradedMatrix, f: &Polynomial) -> GradedMatrix {
    let ambient = n.target();
    if f.is_zero() {
        return identity_submodule(ring, ambient);
    }
    if n.ncols() == 0 {
        return zero_submodule(ring, ambient);
    }
    if let (true, 1) = (is_monomial(n), f.num_terms()) {
        let fm = f.lead().unwrap().0;
        let out = monomial_gens(n).into_iter().map(|(m, c)| (fm.quotient_of(&m.lcm(&fm)).unwrap(), c)).collect();
        return monomial_matrix(ring, ambient, out);
    }
    let fd = f.homogeneous_degree(ring).expect("homogeneous element");
    let rank = ambient.rank();
    let fcols: Vec<ModVec> =
        (0..rank).map(|c| ModVec::unit(c).mul_terms(&f.term_list(), ambient.order(), ring.field())).collect();
    let fsrc = ambient.shifted(ring, &fd);
    let fmat = GradedMatrix::new_unchecked(ambient.clone(), fsrc.clone(), fcols);
    let stacked = fmat.hstack(ring, n).unwrap();
    let syz = syzygy_module(ring, &stacked);
    let gens: Vec<ModVec> = syz
        .columns()
        .iter()
        .map(|z| {
            let part = z.map_comps(|c| (c < rank).then_some(c), ambient.order(), ring.field());
            part
        })
        .collect();
    let mut m = generator_matrix(ring, ambient, gens);
    // `n` itself is contained in the colon; keeping it helps later reductions.
    m = m.hstack(ring, n).unwrap();
    minimal_generators(ring, &m)
}

/// `n : J` for an ideal with the given generators.
pub fn quotient_by_ideal(ring: &Ring, n: &GradedMatrix, ideal: &[Polynomial]) -> GradedMatrix {
    let mut acc: Option<GradedMatrix> = None;
    for g in ideal.iter().filter(|g| !g.is_zero()) {
        let q = quotient_by_element(ring, n, g);
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q),
        });
    }
    acc.unwrap_or_else(|| identity_submodule(ring, n.target()))
}

pub fn identity_submodule(ring: &Ring, ambient: &FreeModule) -> GradedMatrix {
    generator_matrix(ring, ambient, (0..ambient.rank()).map(ModVec::unit).collect())
}

/// `n : x_v^∞` via a Gröbner basis in which `x_v` is the cheapest variable.
pub fn saturate_by_variable(ring: &Ring, n: &GradedMatrix, v: usize) -> GradedMatrix {
    let ambient = n.target();
    if is_monomial(n) {
        let out = monomial_gens(n).into_iter().map(|(m, c)| (m.without_var(v), c)).collect();
        return monomial_matrix(ring, ambient, out);
    }
    let mono = Arc::new(ring.mono_order().with_cheapest(v));
    let order = Arc::new(ambient.order().with_mono(mono));
    let gb = GroebnerBasis::compute(ring, order, n.columns());
    let gens: Vec<ModVec> = gb
        .into_elements()
        .into_iter()
        .map(|g| {
            let k = g.terms().iter().map(|t| t.mon.exp(v)).min().unwrap_or(0);
            if k == 0 {
                g
            } else {
                let mut x = Monomial::ONE;
                x.0[v] = k;
                ModVec(g.terms().iter().map(|t| Term { mon: x.quotient_of(&t.mon).unwrap(), ..*t }).collect())
            }
        })
        .collect();
    minimal_generators(ring, &generator_matrix(ring, ambient, gens))
}

/// `n : m^∞` for a monomial `m`.
pub fn saturate_by_monomial(ring: &Ring, n: &GradedMatrix, m: &Monomial) -> GradedMatrix {
    let mut acc = n.clone();
    let mask = m.support();
    for v in (0..ring.nvars()).filter(|v| mask >> v & 1 == 1) {
        acc = saturate_by_variable(ring, &acc, v);
    }
    acc
}

/// Saturation `n : B^∞` with respect to the ring's irrelevant ideal.
///
/// For products this is computed block by block as `∩_{x ∈ block} (n : x^∞)`;
/// otherwise as `∩_b (n : b^∞)` over the monomial generators of `B`.
pub fn saturate(ring: &Ring, n: &GradedMatrix) -> GradedMatrix {
    if n.ncols() == 0 {
        return n.clone();
    }
    match ring.blocks() {
        Some(blocks) => {
            let mut acc = n.clone();
            for block in blocks {
                let parts: Vec<GradedMatrix> = block.iter().map(|&v| saturate_by_variable(ring, &acc, v)).collect();
                acc = intersect_all(ring, parts);
            }
            acc
        }
        None => {
            let parts: Vec<GradedMatrix> =
                ring.irrelevant_generators().iter().map(|b| saturate_by_monomial(ring, n, b)).collect();
            intersect_all(ring, parts)
        }
    }
}

fn intersect_all(ring: &Ring, parts: Vec<GradedMatrix>) -> GradedMatrix {
    let mut it = parts.into_iter();
    let first = it.next().expect("nonempty");
    let mut acc = first;
    for p in it {
        if is_contained(ring, &acc, &p) {
            continue;
        }
        acc = if is_contained(ring, &p, &acc) { p } else { intersect(ring, &acc, &p) };
    }
    acc
}

/// Saturation by repeated colon with `B` until two iterates agree; slower, used as a cross-check.
pub fn saturate_iterated(ring: &Ring, n: &GradedMatrix) -> GradedMatrix {
    let b: Vec<Polynomial> = ring.irrelevant_generators().iter().map(|m| Polynomial::monomial(*m, 1)).collect();
    let mut cur = n.clone();
    loop {
        let next = quotient_by_ideal(ring, &cur, &b);
        if equal_submodules(ring, &next, &cur) {
            return cur;
        }
        cur = next;
    }
}

/// Whether `ambient / n` is irrelevant, i.e. killed by a power of `B`. This holds
/// exactly when `n : b^∞` is everything for each generator `b` of `B`.
pub fn quotient_is_irrelevant(ring: &Ring, n: &GradedMatrix) -> bool {
    if n.nrows() == 0 {
        return true;
    }
    if is_everything(ring, n) {
        return true;
    }
    ring.irrelevant_generators().iter().all(|b| is_everything(ring, &saturate_by_monomial(ring, n, b)))
}

/// Preimage `{x : a·x ∈ span(b)}` of the span of `b` under `a` (common target).
pub fn preimage(ring: &Ring, a: &GradedMatrix, b: &GradedMatrix) -> GradedMatrix {
    let src = a.source();
    let na = a.ncols();
    if b.ncols() == 0 {
        return generator_matrix(ring, src, syzygy_module(ring, a).into_columns());
    }
    let stacked = a.hstack(ring, b).expect("common target");
    let syz = syzygy_module(ring, &stacked);
    let gens =
        syz.columns().iter().map(|z| z.map_comps(|c| (c < na).then_some(c), src.order(), ring.field())).collect();
    minimal_generators(ring, &generator_matrix(ring, src, gens))
}
