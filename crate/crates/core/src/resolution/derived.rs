//! `Ext^i(M, S)` and `Tor_i(M, N)` as graded module presentations.

use crate::algebra::presentation::{subquotient, ModulePresentation};
use crate::algebra::submodule::{self, generator_matrix};
use crate::algebra::syzygy::syzygy_module;
use crate::algebra::{FreeModule, GradedMatrix, Ring};

use super::complex::ChainComplex;
use super::resolve::minimal_resolution;

/// Cohomology `ker(∂_{i+1}^T) / im(∂_i^T)` of the dual of a complex, at `C_i^*`.
pub fn dual_cohomology(ring: &Ring, c: &ChainComplex, i: usize) -> ModulePresentation {
    if i > c.top() {
        return ModulePresentation::free(ring, FreeModule::new(ring, vec![]));
    }
    let ci = c.module(i).dual(ring);
    let kernel = if i < c.top() {
        let d = c.differential(i + 1).transpose(ring);
        generator_matrix(ring, &ci, syzygy_module(ring, &d).into_columns())
    } else {
        GradedMatrix::identity(&ci)
    };
    let image = if i >= 1 { c.differential(i).transpose(ring) } else { submodule::zero_submodule(ring, &ci) };
    subquotient(ring, &kernel, &image).pruned(ring)
}

/// `Ext^i(M, S)` from a minimal free resolution.
pub fn ext_module(ring: &Ring, m: &ModulePresentation, i: usize) -> ModulePresentation {
    dual_cohomology(ring, &minimal_resolution(ring, m).complex, i)
}

/// For each `i` up to the projective dimension, whether `Ext^i(M, S)` is irrelevant.
pub fn ext_irrelevance_profile(ring: &Ring, c: &ChainComplex) -> Vec<bool> {
    (0..=c.length()).map(|i| dual_cohomology(ring, c, i).is_irrelevant(ring)).collect()
}

/// `Hom(M, S)` is free.
pub fn dual_is_free(ring: &Ring, c: &ChainComplex) -> bool {
    dual_cohomology(ring, c, 0).relations().ncols() == 0
}

/// `Tor_i(M, N)` computed as homology of `F ⊗ N`, `F` a free resolution of `M`.
pub fn tor_module(ring: &Ring, f: &ChainComplex, n: &ModulePresentation, i: usize) -> ModulePresentation {
    let g0 = n.ambient();
    let q = n.relations();
    if i > f.top() {
        return ModulePresentation::free(ring, FreeModule::new(ring, vec![]));
    }
    // C_i ⊗ N = coker(C_i ⊗ Q), with maps ∂_i ⊗ id.
    let rels_at = |k: usize| q.identity_tensor(ring, f.module(k));
    let rel_i = rels_at(i);
    let amb = rel_i.target().clone();
    let cycles = if i == 0 {
        GradedMatrix::identity(&amb)
    } else {
        let d = f.differential(i).tensor_identity(ring, g0);
        submodule::preimage(ring, &d, &rels_at(i - 1))
    };
    let boundaries = if i < f.top() {
        f.differential(i + 1).tensor_identity(ring, g0).hstack(ring, &rel_i).expect("common target")
    } else {
        rel_i
    };
    let cycles = generator_matrix(ring, &amb, cycles.into_columns());
    subquotient(ring, &cycles, &boundaries).pruned(ring)
}
