//! Placing a module on the aCM / vCM ladder.

use serde::Serialize;

use crate::algebra::monomial_ideal::{irreducible_decomposition, is_unmixed};
use crate::algebra::presentation::ModulePresentation;
use crate::algebra::submodule;
use crate::algebra::Ring;
use crate::error::{Error, Result};

use super::complex::{AugmentedComplex, ComplexJson};
use super::cone::mapping_cone_shorten;
use super::derived::{dual_is_free, ext_irrelevance_profile};
use super::resolve::minimal_resolution;
use super::verify::{is_virtual_resolution, VirtualReport};

pub const DEFAULT_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    #[serde(rename = "aCM")]
    Acm,
    #[serde(rename = "vCM")]
    Vcm,
    #[serde(rename = "not-vCM")]
    NotVcm,
    #[serde(rename = "unknown")]
    Unknown,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Acm => "aCM",
            Classification::Vcm => "vCM",
            Classification::NotVcm => "not-vCM",
            Classification::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VirtualCertificate {
    pub characteristic: u32,
    pub codim: usize,
    pub pdim: usize,
    pub acm: bool,
    /// Indices `i` with `Ext^i(M, S)` not irrelevant.
    pub ext_profile: Vec<usize>,
    /// The profile is contained in `{codim}`.
    pub gcm_consistent: bool,
    /// `Hom(M, S)` is not free, which rules out a length-0 virtual resolution.
    pub dual_not_free: bool,
    /// `Some(false)` when the saturated annihilator of a monomial cyclic module is mixed.
    pub virtually_unmixed: Option<bool>,
    pub vdim_lower: usize,
    /// Length of the shortest virtual resolution found.
    pub vdim_upper: usize,
    pub cone_steps: usize,
    /// Why the cone iteration stopped early, if it did.
    pub stopped: Option<String>,
    pub classification: Classification,
    pub report: VirtualReport,
    pub complex: ComplexJson,
    #[serde(skip)]
    pub resolution: AugmentedComplex,
}

/// Classifies a nonzero module: codimension, projective dimension, the Ext obstruction
/// profile, and iterated mapping cones towards a resolution of length `codim`.
pub fn classify(ring: &Ring, m: &ModulePresentation, budget: usize) -> Result<VirtualCertificate> {
    if m.is_irrelevant(ring) {
        return Err(Error::Precondition("the module is irrelevant, so its sheaf is zero".into()));
    }
    let codim = m.codim(ring).expect("a relevant module is nonzero");
    let minimal = minimal_resolution(ring, m);
    let pdim = minimal.complex.length();
    let profile = ext_irrelevance_profile(ring, &minimal.complex);
    let ext_profile: Vec<usize> = (0..profile.len()).filter(|&i| !profile[i]).collect();
    let gcm_consistent = ext_profile.iter().all(|&i| i == codim);
    let dual_not_free = !dual_is_free(ring, &minimal.complex);
    let mut vdim_lower = ext_profile.iter().copied().max().unwrap_or(0).max(codim);
    if dual_not_free {
        vdim_lower = vdim_lower.max(1);
    }
    let virtually_unmixed = if m.is_monomial_cyclic() {
        let sat = submodule::saturate(ring, m.relations());
        let gens: Vec<_> = sat.columns().iter().filter_map(|c| c.lead().map(|t| t.mon)).collect();
        Some(gens.is_empty() || irreducible_decomposition(&gens).is_empty() || is_unmixed(&gens))
    } else {
        None
    };

    let mut best = minimal.clone();
    let mut cone_steps = 0;
    let mut stopped = None;
    while best.complex.length() > vdim_lower && cone_steps < budget {
        match mapping_cone_shorten(ring, &best) {
            Ok(next) => {
                cone_steps += 1;
                if next.complex.length() >= best.complex.length() {
                    stopped = Some("the cone did not shorten the complex".into());
                    break;
                }
                best = next;
            }
            Err(e @ (Error::Obstruction(_) | Error::Precondition(_))) => {
                stopped = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if best.complex.length() > vdim_lower && cone_steps == budget && stopped.is_none() {
        stopped = Some(format!("budget of {budget} cone steps exhausted"));
    }
    let report = is_virtual_resolution(ring, &best.complex, m, Some(&best.augmentation));
    if !report.passed() {
        return Err(Error::Contradiction("a constructed complex failed virtual-resolution verification".into()));
    }
    let vdim_upper = best.complex.length();
    if vdim_upper < vdim_lower {
        return Err(Error::Contradiction(format!(
            "virtual resolution of length {vdim_upper} below the lower bound {vdim_lower}"
        )));
    }
    let acm = pdim == codim;
    let classification = if acm {
        Classification::Acm
    } else if vdim_upper == codim {
        Classification::Vcm
    } else if vdim_lower > codim || virtually_unmixed == Some(false) {
        Classification::NotVcm
    } else {
        Classification::Unknown
    };
    if virtually_unmixed == Some(false) && matches!(classification, Classification::Acm | Classification::Vcm) {
        return Err(Error::Contradiction("a mixed module was certified virtually Cohen-Macaulay".into()));
    }
    Ok(VirtualCertificate {
        characteristic: ring.field().characteristic(),
        codim,
        pdim,
        acm,
        ext_profile,
        gcm_consistent,
        dual_not_free,
        virtually_unmixed,
        vdim_lower,
        vdim_upper,
        cone_steps,
        stopped,
        classification,
        report,
        complex: best.complex.to_json(ring),
        resolution: best,
    })
}
