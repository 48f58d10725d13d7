use std::sync::Arc;

use super::groebner::GroebnerBasis;
use super::matrix::{FreeModule, GradedMatrix};
use super::monomial::Monomial;
use super::order::ModuleOrder;
use super::ring::Ring;
use super::vector::{ModVec, Term};
use crate::error::{Error, Result};

/// Schreyer syzygies of a Gröbner basis.
///
/// Returns the induced order on `S^s` (one basis vector per basis element) and the
/// syzygies, which form a Gröbner basis for that order. The syzygy of pair `(i, j)`,
/// `i < j`, has lead term `(lcm/lm_j)·e_j`; only pairs giving minimal generators of
/// `(lm_1, …, lm_{j-1}) : lm_j` are used.
pub fn schreyer_syzygies(ring: &Ring, gb: &GroebnerBasis) -> (Arc<ModuleOrder>, Vec<ModVec>) {
    let f = ring.field();
    let leads = gb.leads();
    let order = Arc::new(gb.order().schreyer(&leads));
    let elems = gb.elements();
    let mut out = Vec::new();
    for j in 0..elems.len() {
        let (lj, cj) = leads[j];
        let cands: Vec<(Monomial, usize)> =
            (0..j).filter(|&i| leads[i].1 == cj).map(|i| (lj.quotient_of(&leads[i].0.lcm(&lj)).unwrap(), i)).collect();
        for (k, &(q, i)) in cands.iter().enumerate() {
            let redundant =
                cands.iter().enumerate().any(|(k2, &(q2, _))| k2 != k && q2.divides(&q) && (q2 != q || k2 < k));
            if redundant {
                continue;
            }
            let lcm = leads[i].0.lcm(&lj);
            let qi = leads[i].0.quotient_of(&lcm).unwrap();
            let s = elems[j].mul_monomial(&q).axpy(f.neg(1), &qi, &elems[i], gb.order(), f);
            let (rem, quots) = gb.reduce_quotients(&s, f);
            debug_assert!(rem.is_zero(), "S-vector of a Gröbner basis must reduce to zero");
            let mut terms = vec![Term::new(q, j, 1), Term::new(qi, i, f.neg(1))];
            terms.extend(quots.into_iter().map(|t| Term { coef: f.neg(t.coef), ..t }));
            let z = ModVec::from_terms(terms, &order, f);
            debug_assert_eq!(z.lead().map(|t| (t.mon, t.comp as usize)), Some((q, j)));
            out.push(z);
        }
    }
    (order, out)
}

/// Sorts basis elements by lead component, then lead monomial lex-ascending.
/// This ordering keeps Schreyer frames within the Hilbert syzygy bound.
pub fn sort_for_frame(elems: &mut [ModVec]) {
    elems.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        x.comp.cmp(&y.comp).then(x.mon.cmp_lex(&y.mon))
    });
}

/// Degrees of vectors of a free module; every vector must be nonzero and homogeneous.
pub fn vector_twists(ring: &Ring, module: &FreeModule, vecs: &[ModVec]) -> Result<Vec<Vec<i64>>> {
    vecs.iter()
        .map(|v| {
            module.vector_degree(ring, v).ok_or_else(|| Error::NotHomogeneous("zero or inhomogeneous generator".into()))
        })
        .collect()
}

/// Generators of the kernel of `m` (as vectors of its source module).
pub fn syzygy_module(ring: &Ring, m: &GradedMatrix) -> GradedMatrix {
    let f = ring.field();
    let src = m.source();
    let gb = GroebnerBasis::compute_tracked(ring, m.target().order().clone(), m.columns(), src.order().clone());
    let reps = gb.representations().unwrap();
    let mut kernel: Vec<ModVec> = Vec::new();
    let to_source = |z: &ModVec| -> ModVec {
        let mut acc = ModVec::zero();
        for t in z.terms() {
            acc = acc.axpy(t.coef, &t.mon, &reps[t.comp as usize], src.order(), f);
        }
        acc
    };
    let (syz_order, syz) = schreyer_syzygies(ring, &gb);
    for z in &syz {
        let v = to_source(z);
        if !v.is_zero() {
            kernel.push(v);
        }
    }
    // Each original column minus its expression through the basis.
    for (l, col) in m.columns().iter().enumerate() {
        let (rem, quots) = gb.reduce_quotients(col, f);
        debug_assert!(rem.is_zero());
        let expr = to_source(&ModVec::from_terms(quots, &syz_order, f));
        let v = ModVec::unit(l).sub(&expr, src.order(), f);
        if !v.is_zero() {
            kernel.push(v);
        }
    }
    kernel.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        src.order().cmp(&x.mon, x.comp as usize, &y.mon, y.comp as usize)
    });
    kernel.dedup();
    let twists = vector_twists(ring, src, &kernel).expect("kernel of a homogeneous map is homogeneous");
    GradedMatrix::new_unchecked(src.clone(), FreeModule::new(ring, twists), kernel)
}
