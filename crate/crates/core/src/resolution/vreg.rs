//! Virtually regular elements and the quotient complexes they produce.

use serde::Serialize;

use crate::algebra::presentation::ModulePresentation;
use crate::algebra::{FreeModule, GradedMatrix, ModVec, Polynomial, Ring};
use crate::error::{Error, Result};

use super::complex::{AugmentedComplex, ChainComplex};
use super::derived::tor_module;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub element: String,
    pub annihilator_zero: bool,
    pub annihilator_irrelevant: bool,
    /// Krull dimensions before and after; `None` for the zero module.
    pub dim_before: Option<usize>,
    pub dim_after: Option<usize>,
    pub dimension_drops_by_one: bool,
    /// Cross-check: `Tor_1(M, S/f)` is irrelevant.
    pub tor1_irrelevant: bool,
    pub virtually_regular: bool,
}

fn dim_as_int(d: Option<usize>) -> i64 {
    d.map_or(-1, |d| d as i64)
}

/// Koszul complex `S ← S(-deg f)` resolving `S/f`.
fn koszul(ring: &Ring, f: &Polynomial) -> Result<ChainComplex> {
    let d = f.homogeneous_degree(ring).ok_or_else(|| Error::NotHomogeneous(f.format(ring)))?;
    let c0 = FreeModule::free(ring, 1);
    let c1 = FreeModule::new(ring, vec![d]);
    let m = GradedMatrix::new_unchecked(c0.clone(), c1, vec![f.0.clone()]);
    ChainComplex::from_diffs(c0, vec![m])
}

pub fn is_virtually_regular(ring: &Ring, m: &ModulePresentation, f: &Polynomial) -> Result<RegularityReport> {
    if f.is_zero() {
        return Err(Error::Domain("the zero element is never virtually regular".into()));
    }
    let ann = m.annihilator_module(ring, f);
    let annihilator_zero = ann.is_zero(ring);
    let annihilator_irrelevant = annihilator_zero || ann.is_irrelevant(ring);
    let quotient = m.quotient_by_element(ring, f)?;
    let dim_before = m.krull_dim(ring);
    let dim_after = quotient.krull_dim(ring);
    let dimension_drops_by_one = dim_as_int(dim_before) - dim_as_int(dim_after) == 1;
    let tor1 = tor_module(ring, &koszul(ring, f)?, m, 1);
    let tor1_irrelevant = tor1.is_irrelevant(ring);
    if tor1_irrelevant != annihilator_irrelevant {
        return Err(Error::Contradiction(format!(
            "Tor_1(M, S/f) and Ann_M f disagree on irrelevance for f = {}",
            f.format(ring)
        )));
    }
    Ok(RegularityReport {
        element: f.format(ring),
        annihilator_zero,
        annihilator_irrelevant,
        dim_before,
        dim_after,
        dimension_drops_by_one,
        tor1_irrelevant,
        virtually_regular: annihilator_irrelevant && dimension_drops_by_one,
    })
}

/// Tests each element on the successive quotients, stopping at the first failure.
pub fn check_sequence(
    ring: &Ring,
    m: &ModulePresentation,
    seq: &[Polynomial],
) -> Result<(bool, Vec<RegularityReport>, ModulePresentation)> {
    let mut cur = m.clone();
    let mut reports = Vec::new();
    for f in seq {
        let rep = is_virtually_regular(ring, &cur, f)?;
        let ok = rep.virtually_regular;
        reports.push(rep);
        if !ok {
            return Ok((false, reports, cur));
        }
        cur = cur.quotient_by_element(ring, f)?;
    }
    Ok((true, reports, cur))
}

/// Total complex of `F ⊗ [S ←f S(-deg f)]`: `E_i = F_i ⊕ F_{i-1}(-deg f)` with
/// `∂_i = [[φ_i, ±f], [0, φ_{i-1}]]`. Virtually resolves `M/fM` when `F` virtually
/// resolves `M` and `f` is virtually regular on `M`.
pub fn quotient_total_complex(ring: &Ring, a: &AugmentedComplex, f: &Polynomial) -> Result<AugmentedComplex> {
    let fdeg = f.homogeneous_degree(ring).ok_or_else(|| Error::NotHomogeneous(f.format(ring)))?;
    let c = a.complex.clone().trimmed();
    let n = c.top();
    let empty = FreeModule::new(ring, vec![]);
    let shifted = |i: usize| c.module(i).shifted(ring, &fdeg);
    let mut modules = vec![c.module(0).clone()];
    for i in 1..=n + 1 {
        let fi = if i <= n { c.module(i).clone() } else { empty.clone() };
        modules.push(fi.direct_sum(ring, &shifted(i - 1)));
    }
    let field = ring.field();
    let times_f = |m: &FreeModule, sign_neg: bool| {
        let mut p = f.clone();
        if sign_neg {
            p = p.neg(ring);
        }
        let cols = (0..m.rank()).map(|k| ModVec::unit(k).mul_terms(&p.term_list(), m.order(), field)).collect();
        GradedMatrix::new_unchecked(m.clone(), m.shifted(ring, &fdeg), cols)
    };
    let mut diffs = Vec::new();
    for i in 1..=n + 1 {
        let f_src = if i <= n { c.module(i).clone() } else { empty.clone() };
        let f_tgt = c.module(i - 1).clone();
        let phi = if i <= n { c.differential(i).clone() } else { GradedMatrix::zero(f_tgt.clone(), f_src.clone()) };
        let mult = times_f(&f_tgt, (i - 1) % 2 == 1);
        let (p_tgt, lower) = if i >= 2 {
            (shifted(i - 2), Some(c.differential(i - 1).shifted(ring, &fdeg)))
        } else {
            (empty.clone(), None)
        };
        let p_src = shifted(i - 1);
        let lower = lower.unwrap_or_else(|| GradedMatrix::zero(p_tgt.clone(), p_src.clone()));
        let phi = if f_src.rank() == 0 { None } else { Some(&phi) };
        diffs.push(GradedMatrix::from_blocks(
            ring,
            &f_tgt,
            &p_tgt,
            &f_src,
            &p_src,
            [[phi, Some(&mult)], [None, Some(&lower)]],
        ));
    }
    let complex = ChainComplex::new(modules, diffs)?.trimmed();
    Ok(AugmentedComplex { complex, augmentation: a.augmentation.clone() })
}
