use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::complex::{face_vertices, ColoredComplex, Coloring, Face};
use crate::error::{Error, Result};

/// On-disk form of a colored complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub blocks: Vec<usize>,
    pub facets: Vec<Vec<Value>>,
}

fn parse_vertex(c: &Coloring, v: &Value) -> Result<usize> {
    let (color, j) = match v {
        Value::Array(pair) if pair.len() == 2 => {
            let i = pair[0].as_u64().ok_or_else(|| Error::Parse(format!("bad color in {v}")))? as usize;
            let j = pair[1].as_u64().ok_or_else(|| Error::Parse(format!("bad index in {v}")))? as usize;
            (i, j)
        }
        Value::String(s) => parse_vertex_name(s, c.num_colors())?,
        _ => return Err(Error::Parse(format!("vertex must be [color, index] or a name, got {v}"))),
    };
    if color == 0 || color > c.num_colors() || j >= c.sizes()[color - 1] {
        return Err(Error::Parse(format!("vertex {v} out of range")));
    }
    Ok(c.vertex(color - 1, j))
}

/// Parses `x_{i}_{j}`, `x_i_j`, or `xj` (single block). Returns (1-based color, index).
pub fn parse_vertex_name(s: &str, num_colors: usize) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad vertex name '{s}'"));
    let rest = s.trim().strip_prefix('x').ok_or_else(bad)?;
    let cleaned: String = rest.chars().filter(|ch| *ch != '{' && *ch != '}').collect();
    if let Some(body) = cleaned.strip_prefix('_') {
        let mut parts = body.split('_');
        let i = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let j = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok((i, j))
    } else if num_colors == 1 {
        Ok((1, cleaned.parse().map_err(|_| bad())?))
    } else {
        Err(bad())
    }
}

impl ColoredComplex {
    pub fn from_json_value(v: &ComplexJson) -> Result<Self> {
        let coloring = Coloring::new(v.blocks.clone())?;
        let mut facets = Vec::new();
        for f in &v.facets {
            let mut face: Face = 0;
            for vert in f {
                face |= 1 << parse_vertex(&coloring, vert)?;
            }
            facets.push(face);
        }
        ColoredComplex::new(coloring, facets)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: ComplexJson = serde_json::from_str(s)?;
        Self::from_json_value(&v)
    }

    pub fn to_json_value(&self) -> ComplexJson {
        let c = self.coloring();
        ComplexJson {
            blocks: c.sizes().to_vec(),
            facets: self
                .facets()
                .iter()
                .map(|&f| {
                    face_vertices(f)
                        .into_iter()
                        .map(|v| {
                            let (i, j) = c.locate(v);
                            Value::from(vec![i + 1, j])
                        })
                        .collect()
                })
                .collect(),
        }
    }
}
