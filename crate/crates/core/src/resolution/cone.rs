//! Shortening a virtual resolution by a mapping cone against the resolution of its top Ext.

use crate::algebra::presentation::{Lifter, ModulePresentation};
use crate::algebra::{FreeModule, GradedMatrix, Ring};
use crate::error::{Error, Result};

use super::complex::{AugmentedComplex, ChainComplex};
use super::minimize::{minimize, MinimizeOptions};
use super::resolve::resolve_from;

/// Intermediate data of one cone step, kept for inspection and tests.
#[derive(Clone, Debug)]
pub struct ConeStep {
    /// Free resolution `G` of `coker(φ_t^T)`, with `∂_1 = φ_t^T`.
    pub ext_resolution: ChainComplex,
    /// `comparison[j] : F_j^* → G_{t-j}`, for `j = 0..=t`.
    pub comparison: Vec<GradedMatrix>,
    /// The cone before minimization, with the induced augmentation.
    pub unminimized: AugmentedComplex,
    /// The minimized cone.
    pub result: AugmentedComplex,
}

fn zero_module(ring: &Ring) -> FreeModule {
    FreeModule::new(ring, vec![])
}

fn module_or_zero(ring: &Ring, c: &ChainComplex, i: usize) -> FreeModule {
    if i <= c.top() {
        c.module(i).clone()
    } else {
        zero_module(ring)
    }
}

fn diff_or_zero(ring: &Ring, c: &ChainComplex, i: usize) -> GradedMatrix {
    if i >= 1 && i <= c.top() {
        c.differential(i).clone()
    } else {
        let tgt = if i == 0 { zero_module(ring) } else { module_or_zero(ring, c, i - 1) };
        GradedMatrix::zero(tgt, module_or_zero(ring, c, i))
    }
}

/// Chain map from the dual of `F` (length `t`) to `G`, identity in the two top spots.
///
/// `α^j : F_j^* → G_{t-j}` satisfies `ψ_{t-j} α^j = α^{j+1} φ_{j+1}^T`; each is found by
/// lifting through `ψ_{t-j}`.
pub fn lift_comparison_map(ring: &Ring, f: &ChainComplex, g: &ChainComplex) -> Result<Vec<GradedMatrix>> {
    let t = f.top();
    let mut alpha: Vec<Option<GradedMatrix>> = vec![None; t + 1];
    alpha[t] = Some(GradedMatrix::identity(&f.module(t).dual(ring)));
    if t >= 1 {
        alpha[t - 1] = Some(GradedMatrix::identity(&f.module(t - 1).dual(ring)));
    }
    for j in (0..t.saturating_sub(1)).rev() {
        let k = t - j;
        let src = f.module(j).dual(ring);
        let tgt = module_or_zero(ring, g, k);
        let above = alpha[j + 1].as_ref().unwrap();
        let rhs = above.compose(ring, &f.differential(j + 1).transpose(ring))?;
        if tgt.rank() == 0 {
            if !rhs.is_zero() {
                return Err(Error::Contradiction("comparison map does not lift past the end of G".into()));
            }
            alpha[j] = Some(GradedMatrix::zero(tgt, src));
            continue;
        }
        let psi = g.differential(k);
        let lifter = Lifter::new(ring, psi);
        let mut cols = Vec::with_capacity(src.rank());
        for c in rhs.columns() {
            let x = lifter
                .lift(ring, c)
                .ok_or_else(|| Error::Contradiction(format!("comparison map does not lift at G_{k}")))?;
            cols.push(x);
        }
        alpha[j] = Some(GradedMatrix::new_unchecked(tgt, src, cols));
    }
    Ok(alpha.into_iter().map(Option::unwrap).collect())
}

/// One mapping-cone step: from a virtual resolution of length `t` with irrelevant
/// `coker(φ_t^T)`, a virtual resolution of length at most `t - 1`.
pub fn mapping_cone_step(ring: &Ring, input: &AugmentedComplex) -> Result<ConeStep> {
    let f = input.complex.clone().trimmed();
    let t = f.length();
    if t == 0 {
        return Err(Error::Precondition("a complex of length 0 cannot be shortened".into()));
    }
    let top_dual = f.differential(t).transpose(ring);
    if !ModulePresentation::new(top_dual.clone()).is_irrelevant(ring) {
        return Err(Error::Obstruction(format!("Ext^{t} is not irrelevant; the cone cannot shorten")));
    }
    let g = resolve_from(ring, &top_dual);
    if g.length() > t + 1 {
        return Err(Error::Precondition(format!("the resolution of Ext^{t} has length {} > {}", g.length(), t + 1)));
    }
    let alpha = lift_comparison_map(ring, &f, &g)?;

    // P_j = G_{t-j}^* for j = -1..=t, stored at index j + 1.
    let p_mod = |j: i64| module_or_zero(ring, &g, (t as i64 - j) as usize).dual(ring);
    // P_j → P_{j-1} is ψ_{t-j+1}^T.
    let p_diff = |j: i64| diff_or_zero(ring, &g, (t as i64 - j + 1) as usize).transpose(ring);
    // α_j : P_j → F_j.
    let alpha_down = |j: usize| alpha[j].transpose(ring);

    let mut modules = Vec::new();
    for i in 0..=t + 1 {
        let fi = module_or_zero(ring, &f, i);
        modules.push(fi.direct_sum(ring, &p_mod(i as i64 - 1)));
    }
    let mut diffs = Vec::new();
    for i in 1..=t + 1 {
        let (f_src, f_tgt) = (module_or_zero(ring, &f, i), module_or_zero(ring, &f, i - 1));
        let (p_src, p_tgt) = (p_mod(i as i64 - 1), p_mod(i as i64 - 2));
        let phi = diff_or_zero(ring, &f, i);
        let mut a = alpha_down(i - 1);
        if (i - 1) % 2 == 1 {
            a = a.scale(ring, ring.field().neg(1));
        }
        let psi = p_diff(i as i64 - 1);
        let phi = if f_src.rank() == 0 { None } else { Some(&phi) };
        let d = GradedMatrix::from_blocks(ring, &f_tgt, &p_tgt, &f_src, &p_src, [[phi, Some(&a)], [None, Some(&psi)]]);
        diffs.push(d);
    }
    let complex = ChainComplex::new(modules, diffs)?;
    // F_0 → F_0 ⊕ P_{-1}.
    let incl = GradedMatrix::from_blocks(
        ring,
        f.module(0),
        &p_mod(-1),
        f.module(0),
        &zero_module(ring),
        [[Some(&GradedMatrix::identity(f.module(0))), None], [None, None]],
    );
    let augmentation = incl.compose(ring, &input.augmentation)?;
    let unminimized = AugmentedComplex { complex, augmentation };
    if !unminimized.complex.is_complex(ring) {
        return Err(Error::Contradiction("mapping cone differentials do not compose to zero".into()));
    }
    let result = minimize(ring, &unminimized, &MinimizeOptions::default());
    Ok(ConeStep { ext_resolution: g, comparison: alpha, unminimized, result })
}

/// The minimized cone of [`mapping_cone_step`].
pub fn mapping_cone_shorten(ring: &Ring, input: &AugmentedComplex) -> Result<AugmentedComplex> {
    Ok(mapping_cone_step(ring, input)?.result)
}
