//! Certifying that Stanley-Reisner rings of equidimensional colored complexes are
//! virtually Cohen-Macaulay, by adding low-dimensional irrelevant faces.

use serde::Serialize;

use crate::algebra::presentation::ModulePresentation;
use crate::algebra::{FreeModule, GradedMatrix, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::homology::reisner_is_cm;
use crate::resolution::verify::{is_virtual_resolution, VirtualReport};
use crate::resolution::{direct_sum_resolutions, minimal_resolution, AugmentedComplex, ChainComplex, ComplexJson};
use crate::simplicial::{
    join_decomposition, relevant_connected_components, ColoredComplex, ComplexJson as SimplicialJson, Face,
};

/// Cox ring whose variables are the vertices of `d`, in the same order.
pub fn ring_for(d: &ColoredComplex, field: PrimeField) -> Result<Ring> {
    Ring::product(d.coloring().sizes(), field)
}

/// Squarefree generators of `I_Δ`, one per minimal non-face. The void complex gives `⟨1⟩`.
pub fn stanley_reisner_ideal(d: &ColoredComplex) -> Vec<Polynomial> {
    d.minimal_nonfaces().into_iter().map(|f| Polynomial::monomial(Monomial::from_mask(f), 1)).collect()
}

/// `Δ ∪ B_r` with `r` the number of active colors.
pub fn augment_with_irrelevant(d: &ColoredComplex, active: u32) -> ColoredComplex {
    let r = active.count_ones() as usize;
    d.union(&ColoredComplex::irrelevant_skeleton(d.coloring(), r, active))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Several relevant-connected components, certified separately and summed.
    ComponentSplit,
    /// `Δ = join(τ, Ω)` with disjoint colors; certified through `Ω`.
    Join,
    /// `Δ ∪ B_r` satisfies Reisner's criterion.
    #[serde(rename = "delta-union-br")]
    UnionWithIrrelevant,
    /// A single facet, whose ideal is generated by variables.
    Simplex,
    /// No relevant facet: the module is irrelevant.
    Irrelevant,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub facets: Vec<String>,
    /// Branches taken, outermost first.
    pub path: Vec<Branch>,
    /// The faces `τ` split off by joins.
    pub join_faces: Vec<String>,
    /// The complex `Δ'` whose ring is Cohen-Macaulay.
    pub augmented: SimplicialJson,
    pub ideal: Vec<String>,
    /// Reisner's criterion on the final `Ω ∪ B_r`, when that branch was reached.
    pub reisner_cm: Option<bool>,
    pub codim: usize,
    pub pdim: usize,
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub characteristic: u32,
    pub input: SimplicialJson,
    pub branch: Branch,
    pub irrelevant_facets: Vec<String>,
    pub components: Vec<ComponentReport>,
    /// `None` when `S/I_Δ` is irrelevant.
    pub codim: Option<usize>,
    pub length: usize,
    pub certified: bool,
    pub verification: VirtualReport,
    pub complex: ComplexJson,
    #[serde(skip)]
    pub resolution: AugmentedComplex,
}

struct Reduced {
    path: Vec<Branch>,
    join_faces: Vec<Face>,
    augmented: ColoredComplex,
    reisner_cm: Option<bool>,
}

/// Reduces a relevant-connected pure component to a complex with Cohen-Macaulay ring.
fn reduce_component(d: &ColoredComplex, active: u32, field: &PrimeField, depth: usize) -> Result<Reduced> {
    if d.facets().len() == 1 {
        return Ok(Reduced { path: vec![Branch::Simplex], join_faces: vec![], augmented: d.clone(), reisner_cm: None });
    }
    let r = active.count_ones() as usize;
    if let Some(j) = join_decomposition(d) {
        if depth >= d.coloring().num_colors() {
            return Err(Error::Contradiction("join recursion deeper than the number of colors".into()));
        }
        let mut inner = reduce_component(&j.omega, j.omega_colors, field, depth + 1)?;
        inner.path.insert(0, Branch::Join);
        inner.join_faces.insert(0, j.tau);
        inner.augmented = inner.augmented.join(&ColoredComplex::simplex(d.coloring().clone(), j.tau));
        return Ok(inner);
    }
    if d.dim() != r as i32 {
        return Err(Error::Contradiction(format!(
            "component of dimension {} on {r} colors after removing joins",
            d.dim()
        )));
    }
    let augmented = augment_with_irrelevant(d, active);
    let verdict = reisner_is_cm(&augmented, field);
    if !verdict.cohen_macaulay {
        return Err(Error::Contradiction(format!(
            "Reisner's criterion fails on Δ ∪ B_{r} at {:?}",
            verdict.witness.map(|(s, i)| (d.describe_face(s), i))
        )));
    }
    Ok(Reduced { path: vec![Branch::UnionWithIrrelevant], join_faces: vec![], augmented, reisner_cm: Some(true) })
}

fn face_names(d: &ColoredComplex, fs: &[Face]) -> Vec<String> {
    fs.iter().map(|&f| d.describe_face(f)).collect()
}

/// Certifies that `S/I_Δ` is virtually Cohen-Macaulay for an `r`-dimensional complex on
/// `r` colors whose relevant facets all have dimension `r`.
pub fn vcm_certify_sr(d: &ColoredComplex, field: PrimeField) -> Result<PipelineReport> {
    let ring = ring_for(d, field)?;
    let coloring = d.coloring();
    let r = coloring.num_colors();
    let active = coloring.all_colors();
    if d.dim() != r as i32 {
        return Err(Error::Precondition(format!(
            "the complex has dimension {} but the product has {r} factors; the criterion needs dimension {r}",
            d.dim()
        )));
    }
    let split = relevant_connected_components(d, active);
    for comp in &split.components {
        if let Some(&f) = comp.facets().iter().find(|&&f| f.count_ones() as usize != r + 1) {
            return Err(Error::Equidimensionality(format!(
                "relevant facet {} has dimension {}, expected {r}",
                d.describe_face(f),
                f.count_ones() as i32 - 1
            )));
        }
    }
    let sr = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(d))?;
    let ambient = sr.ambient().clone();

    let mut components = Vec::new();
    let mut parts = Vec::new();
    for comp in &split.components {
        let reduced = reduce_component(comp, active, ring.field(), 0)?;
        let ideal = stanley_reisner_ideal(&reduced.augmented);
        let m = ModulePresentation::cyclic(&ring, &ideal)?;
        let res = minimal_resolution(&ring, &m);
        let codim = m.codim(&ring).expect("a relevant component has a nonzero ring");
        let pdim = res.complex.length();
        if pdim != codim {
            return Err(Error::Contradiction(format!(
                "the ring of Δ' has projective dimension {pdim} but codimension {codim}"
            )));
        }
        components.push(ComponentReport {
            facets: face_names(d, comp.facets()),
            path: reduced.path,
            join_faces: face_names(d, &reduced.join_faces),
            augmented: reduced.augmented.to_json_value(),
            ideal: ideal.iter().map(|p| p.format(&ring)).collect(),
            reisner_cm: reduced.reisner_cm,
            codim,
            pdim,
            ranks: res.complex.ranks(),
        });
        parts.push(res);
    }

    let (branch, resolution) = if parts.is_empty() {
        let zero = FreeModule::new(&ring, vec![]);
        let complex = ChainComplex::concentrated(zero.clone());
        (Branch::Irrelevant, AugmentedComplex { complex, augmentation: GradedMatrix::zero(zero, ambient) })
    } else {
        let branch = if parts.len() > 1 { Branch::ComponentSplit } else { components[0].path[0] };
        (branch, direct_sum_resolutions(&ring, &parts)?)
    };
    let verification = is_virtual_resolution(&ring, &resolution.complex, &sr, Some(&resolution.augmentation));
    let codim = if parts.is_empty() { None } else { sr.codim(&ring) };
    let length = resolution.complex.length();
    if !verification.passed() {
        return Err(Error::Contradiction("the assembled complex is not a virtual resolution of S/I_Δ".into()));
    }
    if let Some(c) = codim {
        if c != length {
            return Err(Error::Contradiction(format!("certificate has length {length} but codim is {c}")));
        }
    }
    Ok(PipelineReport {
        characteristic: ring.field().characteristic(),
        input: d.to_json_value(),
        branch,
        irrelevant_facets: face_names(d, &split.irrelevant_facets),
        components,
        codim,
        length,
        certified: true,
        verification,
        complex: resolution.complex.to_json(&ring),
        resolution,
    })
}
