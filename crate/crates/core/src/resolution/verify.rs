//! Checking that a complex is a virtual resolution of a module.

use serde::Serialize;

use crate::algebra::presentation::{hilbert_function_of, subquotient, ModulePresentation};
use crate::algebra::submodule::{self, generator_matrix};
use crate::algebra::syzygy::syzygy_module;
use crate::algebra::{Degree, GradedMatrix, Ring};

use super::complex::ChainComplex;

/// How `H_0` was compared with the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum H0Method {
    /// Through an explicit map from the module's ambient free module into `C_0`.
    Augmentation,
    /// `C_0` equals the ambient module and the map is the identity.
    Identity,
    /// Hilbert functions of both saturations agree on a finite box of degrees.
    HilbertBox,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VirtualReport {
    pub is_complex: bool,
    /// `homology_irrelevant[i - 1]` is whether `H_i` is irrelevant, for `i >= 1`.
    pub homology_irrelevant: Vec<bool>,
    pub h0_matches: bool,
    pub h0_method: H0Method,
    /// "exact", or "probabilistic" when the Hilbert-function box was used.
    pub grade: &'static str,
}

impl VirtualReport {
    pub fn passed(&self) -> bool {
        self.is_complex && self.h0_matches && self.homology_irrelevant.iter().all(|&x| x)
    }
}

/// Whether `H_i = ker ∂_i / im ∂_{i+1}` is irrelevant (`i >= 1`).
pub fn homology_is_irrelevant(ring: &Ring, c: &ChainComplex, i: usize) -> bool {
    let d = c.differential(i);
    let ci = c.module(i);
    let kernel = generator_matrix(ring, ci, syzygy_module(ring, d).into_columns());
    if kernel.ncols() == 0 {
        return true;
    }
    if i == c.top() {
        // A nonzero submodule of a free module is never irrelevant.
        return false;
    }
    let image = c.differential(i + 1);
    if submodule::is_contained(ring, &kernel, image) {
        return true;
    }
    subquotient(ring, &kernel, image).is_irrelevant(ring)
}

/// Checks that `c` is a virtual resolution of `m`. When `augmentation` (a map from
/// the ambient module of `m` into `C_0`) is absent and the twists agree, the identity
/// is used; otherwise saturated Hilbert functions are compared on a box.
pub fn is_virtual_resolution(
    ring: &Ring,
    c: &ChainComplex,
    m: &ModulePresentation,
    augmentation: Option<&GradedMatrix>,
) -> VirtualReport {
    let is_complex = c.is_complex(ring);
    let homology_irrelevant = (1..=c.top()).map(|i| homology_is_irrelevant(ring, c, i)).collect();
    let image = if c.top() >= 1 { c.differential(1).clone() } else { submodule::zero_submodule(ring, c.module(0)) };
    let identity;
    let (map, method) = match augmentation {
        Some(a) => (Some(a), H0Method::Augmentation),
        None if c.module(0) == m.ambient() => {
            identity = GradedMatrix::identity(m.ambient());
            (Some(&identity), H0Method::Identity)
        }
        None => (None, H0Method::HilbertBox),
    };
    let h0_matches = match map {
        Some(psi) => h0_matches_via_map(ring, psi, &image, m),
        None => h0_matches_on_box(ring, &image, m),
    };
    let grade = if method == H0Method::HilbertBox { "probabilistic" } else { "exact" };
    VirtualReport { is_complex, homology_irrelevant, h0_matches, h0_method: method, grade }
}

/// `ψ : F → C_0` induces an isomorphism `F/R → C_0/im ∂_1` up to irrelevant modules.
fn h0_matches_via_map(ring: &Ring, psi: &GradedMatrix, image: &GradedMatrix, m: &ModulePresentation) -> bool {
    let rel = m.relations();
    // Well defined: ψ(R) ⊆ im ∂_1 modulo irrelevant.
    if rel.ncols() > 0 {
        let pr = psi.compose(ring, rel).expect("augmentation source is the ambient module");
        let pr = generator_matrix(ring, image.target(), pr.into_columns());
        if pr.ncols() > 0
            && !submodule::is_contained(ring, &pr, image)
            && !subquotient(ring, &pr, image).is_irrelevant(ring)
        {
            return false;
        }
    }
    // Injective: ψ^{-1}(im ∂_1) / R irrelevant.
    let pre = submodule::preimage(ring, psi, image);
    if pre.ncols() > 0 && !submodule::is_contained(ring, &pre, rel) && !subquotient(ring, &pre, rel).is_irrelevant(ring)
    {
        return false;
    }
    // Surjective: C_0 / (im ψ + im ∂_1) irrelevant.
    let both = psi.hstack(ring, image).expect("common target");
    ModulePresentation::new(both).is_irrelevant(ring)
}

/// Degree box used to compare saturated Hilbert functions.
pub fn comparison_box(ring: &Ring, image: &GradedMatrix, m: &ModulePresentation) -> Vec<Degree> {
    let twists = image
        .target()
        .twists()
        .iter()
        .chain(image.source().twists())
        .chain(m.ambient().twists())
        .chain(m.relations().source().twists());
    let max_twist = twists.clone().flat_map(|t| t.iter().map(|x| x.abs())).max().unwrap_or(0);
    let max_gen = m.ambient().twists().iter().flat_map(|t| t.iter().copied()).max().unwrap_or(0).max(0);
    let d = 2 * max_twist + max_gen;
    let r = ring.grading_rank();
    let mut out: Vec<Degree> = vec![vec![]];
    for _ in 0..r {
        out = out.into_iter().flat_map(|p| (0..=d).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

fn h0_matches_on_box(ring: &Ring, image: &GradedMatrix, m: &ModulePresentation) -> bool {
    let sat_h0 = submodule::saturate(ring, image);
    let sat_m = submodule::saturate(ring, m.relations());
    let gb_h0 = submodule::groebner(ring, &sat_h0);
    let gb_m = submodule::groebner(ring, &sat_m);
    comparison_box(ring, image, m).iter().all(|d| {
        hilbert_function_of(ring, &gb_h0, image.target(), d) == hilbert_function_of(ring, &gb_m, m.ambient(), d)
    })
}
