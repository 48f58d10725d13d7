//! Free resolutions via Schreyer frames.

use crate::algebra::presentation::ModulePresentation;
use crate::algebra::submodule;
use crate::algebra::syzygy::{schreyer_syzygies, sort_for_frame, syzygy_module, vector_twists};
use crate::algebra::{FreeModule, GradedMatrix, GroebnerBasis, Ring};

use super::complex::{AugmentedComplex, ChainComplex};
use super::minimize::{minimize, MinimizeOptions};

/// Schreyer frame resolving `c0 / span(rel)`. The first differential is a Gröbner basis
/// of the relations; later ones are Schreyer syzygies, which are again Gröbner bases
/// for the induced orders. The result is exact but usually not minimal.
pub fn frame(ring: &Ring, c0: &FreeModule, rel: &GradedMatrix) -> ChainComplex {
    let f = ring.field();
    let mut elems = submodule::groebner(ring, rel).into_elements();
    if elems.is_empty() {
        return ChainComplex::concentrated(c0.clone());
    }
    sort_for_frame(&mut elems);
    let mut gb = GroebnerBasis::from_basis(c0.order().clone(), elems, f);
    let mut prev = c0.clone();
    let mut diffs = Vec::new();
    loop {
        let cols = gb.elements().to_vec();
        let twists = vector_twists(ring, &prev, &cols).expect("frame vectors are homogeneous");
        let next = FreeModule::new(ring, twists);
        let cols = cols.iter().map(|c| c.resort(prev.order())).collect();
        diffs.push(GradedMatrix::new_unchecked(prev.clone(), next.clone(), cols));
        let (order, mut syz) = schreyer_syzygies(ring, &gb);
        if syz.is_empty() {
            break;
        }
        sort_for_frame(&mut syz);
        gb = GroebnerBasis::from_basis(order, syz, f);
        prev = next;
    }
    ChainComplex::from_diffs(c0.clone(), diffs).expect("frame differentials chain")
}

/// Non-minimal free resolution of `M`, augmented by the identity of its ambient module.
pub fn frame_resolution(ring: &Ring, m: &ModulePresentation) -> AugmentedComplex {
    let complex = frame(ring, m.ambient(), m.relations());
    AugmentedComplex { complex, augmentation: GradedMatrix::identity(m.ambient()) }
}

/// Minimal free resolution of `M`.
pub fn minimal_resolution(ring: &Ring, m: &ModulePresentation) -> AugmentedComplex {
    minimize(ring, &frame_resolution(ring, m), &MinimizeOptions::default())
}

/// Resolution of `coker d1` whose first differential is `d1` itself; the tail is
/// minimized but `∂_1` and `∂_2` are left as computed so that `C_1` keeps its basis.
pub fn resolve_from(ring: &Ring, d1: &GradedMatrix) -> ChainComplex {
    let kernel = syzygy_module(ring, d1);
    let tail = frame(ring, d1.source(), &kernel);
    let mut diffs = vec![d1.clone()];
    diffs.extend(tail.diffs().iter().cloned());
    let c = ChainComplex::from_diffs(d1.target().clone(), diffs).expect("tail starts at the source of d1");
    let a = AugmentedComplex { augmentation: GradedMatrix::identity(c.module(0)), complex: c };
    minimize(ring, &a, &MinimizeOptions { first_diff: 2, column_priority: None }).complex
}
