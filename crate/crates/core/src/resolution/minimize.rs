//! Pruning unit entries from complexes of free modules.

use crate::algebra::presentation::ModulePresentation;
use crate::algebra::submodule;
use crate::algebra::{FreeModule, GradedMatrix, ModVec, Ring};

use super::complex::{AugmentedComplex, ChainComplex};

#[derive(Clone, Debug, Default)]
pub struct MinimizeOptions {
    /// The first `first_diff` differentials are left untouched.
    pub first_diff: usize,
    /// Optional order in which to try pivot columns, per differential `∂_{k+1}`.
    pub column_priority: Option<Vec<Vec<usize>>>,
}

/// Splits off trivial summands `S(-a) → S(-a)` until no differential has a unit entry.
///
/// A pivot at a constant entry `c` in row `u`, column `v` of `∂_{k+1}` clears the rest
/// of row `u` by column operations, then removes `e_v ∈ C_{k+1}` and `e_u ∈ C_k`.
/// The augmentation into `C_0` is composed with the induced projection.
pub fn minimize(ring: &Ring, a: &AugmentedComplex, opts: &MinimizeOptions) -> AugmentedComplex {
    let f = ring.field();
    let c = &a.complex;
    let n = c.top();
    let mut cols: Vec<Vec<ModVec>> = c.diffs().iter().map(|d| d.columns().to_vec()).collect();
    let mut aug = a.augmentation.columns().to_vec();
    let mut dead: Vec<Vec<bool>> = c.modules().iter().map(|m| vec![false; m.rank()]).collect();
    for k in opts.first_diff..n {
        let order = c.module(k).order().clone();
        let priority: Vec<usize> = opts
            .column_priority
            .as_ref()
            .and_then(|p| p.get(k).cloned())
            .filter(|p| p.len() == cols[k].len())
            .unwrap_or_else(|| (0..cols[k].len()).collect());
        loop {
            let pivot = priority.iter().find_map(|&v| {
                if dead[k + 1][v] {
                    return None;
                }
                cols[k][v]
                    .terms()
                    .iter()
                    .find(|t| t.mon.is_one() && !dead[k][t.comp as usize])
                    .map(|t| (t.comp as usize, v, t.coef))
            });
            let Some((u, v, cu)) = pivot else { break };
            let inv = f.inv(cu);
            let pivot_col = cols[k][v].clone();
            let clear = |col: &ModVec| -> Option<ModVec> {
                let entry = col.component(u);
                if entry.is_empty() {
                    return None;
                }
                let mult: Vec<_> = entry.iter().map(|&(m, x)| (m, f.neg(f.mul(x, inv)))).collect();
                Some(col.add(&pivot_col.mul_terms(&mult, &order, f), &order, f))
            };
            for w in 0..cols[k].len() {
                if w == v || dead[k + 1][w] {
                    continue;
                }
                if let Some(nc) = clear(&cols[k][w]) {
                    cols[k][w] = nc;
                }
            }
            if k == 0 {
                for col in aug.iter_mut() {
                    if let Some(nc) = clear(col) {
                        *col = nc;
                    }
                }
            }
            dead[k][u] = true;
            dead[k + 1][v] = true;
        }
    }
    // Renumber the surviving basis vectors.
    let keep: Vec<Vec<usize>> = dead.iter().map(|d| (0..d.len()).filter(|&i| !d[i]).collect()).collect();
    let maps: Vec<Vec<Option<usize>>> = dead
        .iter()
        .map(|d| {
            let mut next = 0;
            d.iter()
                .map(|&x| {
                    (!x).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let modules: Vec<FreeModule> = (0..=n).map(|i| c.module(i).sub_module(ring, &keep[i])).collect();
    let diffs: Vec<GradedMatrix> = (0..n)
        .map(|k| {
            let cs = keep[k + 1].iter().map(|&w| cols[k][w].map_comps(|x| maps[k][x], modules[k].order(), f)).collect();
            GradedMatrix::new_unchecked(modules[k].clone(), modules[k + 1].clone(), cs)
        })
        .collect();
    let aug_cols = aug.iter().map(|col| col.map_comps(|x| maps[0][x], modules[0].order(), f)).collect();
    let augmentation = GradedMatrix::new_unchecked(modules[0].clone(), a.augmentation.source().clone(), aug_cols);
    let complex = ChainComplex::new(modules, diffs).expect("consistent after pruning").trimmed();
    AugmentedComplex { complex, augmentation }
}

/// A minimal presentation of the same module.
pub fn prune_presentation(ring: &Ring, m: &ModulePresentation) -> ModulePresentation {
    let rel = submodule::minimal_generators(ring, m.relations());
    let amb = m.ambient().clone();
    let complex = ChainComplex::from_diffs(amb.clone(), vec![rel]).expect("relations map into the ambient module");
    let a = AugmentedComplex { complex, augmentation: GradedMatrix::identity(&amb) };
    let out = minimize(ring, &a, &MinimizeOptions::default());
    let c0 = out.complex.module(0).clone();
    match out.complex.diffs().first() {
        Some(d) => ModulePresentation::new(d.clone()),
        None => ModulePresentation::free(ring, c0),
    }
}
