//! Reading complexes, modules and chain complexes from JSON documents.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use vcm_core::algebra::presentation::ModulePresentation;
use vcm_core::algebra::{GradedMatrix, MatrixJson, Polynomial, Ring};
use vcm_core::resolution::{ChainComplex, ComplexJson};
use vcm_core::simplicial::{face_from_vertices, parse_vertex_name, ColoredComplex, Face};
use vcm_core::PrimeField;

/// Reads a file, or standard input when the path is absent or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

pub fn parse_complex(text: &str) -> Result<ColoredComplex> {
    Ok(ColoredComplex::from_json_str(text)?)
}

/// Parses a comma-separated vertex list such as `x_1_0,x_2_1`.
pub fn parse_face(d: &ColoredComplex, s: &str) -> Result<Face> {
    let c = d.coloring();
    let mut vs = Vec::new();
    for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let (color, j) = parse_vertex_name(name, c.num_colors())?;
        if color == 0 || color > c.num_colors() || j >= c.sizes()[color - 1] {
            bail!("vertex {name} is out of range");
        }
        vs.push(c.vertex(color - 1, j));
    }
    Ok(face_from_vertices(&vs))
}

/// An algebraic input: the ring's block sizes plus a module (by ideal generators or a
/// relation matrix) and/or a chain complex.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub blocks: Vec<usize>,
    #[serde(default)]
    pub ideal: Option<Vec<String>>,
    #[serde(default)]
    pub relations: Option<MatrixJson>,
    #[serde(default)]
    pub complex: Option<ComplexJson>,
}

impl AlgebraDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("parsing the algebra document")
    }

    pub fn ring(&self, field: PrimeField) -> Result<Ring> {
        Ok(Ring::product(&self.blocks, field)?)
    }

    pub fn module(&self, ring: &Ring) -> Result<ModulePresentation> {
        match (&self.ideal, &self.relations) {
            (Some(_), Some(_)) => bail!("give either \"ideal\" or \"relations\", not both"),
            (Some(gens), None) => Ok(ModulePresentation::cyclic(ring, &parse_polys(ring, gens)?)?),
            (None, Some(m)) => Ok(ModulePresentation::new(GradedMatrix::from_json(ring, m)?)),
            (None, None) => bail!("the document has no module (\"ideal\" or \"relations\")"),
        }
    }

    pub fn has_module(&self) -> bool {
        self.ideal.is_some() || self.relations.is_some()
    }

    pub fn complex(&self, ring: &Ring) -> Result<Option<ChainComplex>> {
        self.complex.as_ref().map(|c| ChainComplex::from_json(ring, c)).transpose().map_err(Into::into)
    }
}

pub fn parse_polys<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| Polynomial::parse(g.as_ref(), ring).map_err(Into::into)).collect()
}

/// Splits a comma-separated list of polynomials.
pub fn parse_poly_list(ring: &Ring, s: &str) -> Result<Vec<Polynomial>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    parse_polys(ring, &parts)
}
