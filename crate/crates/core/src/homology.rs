//! Reduced and relative simplicial homology over GF(p), Reisner's criterion, Hochster's formula.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{rank, SparseMatrix};
use crate::simplicial::{face_size, face_vertices, ColoredComplex, Face};

/// Homology dimensions indexed from degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub characteristic: u32,
    /// `dims[k]` is the dimension in degree `k - 1`.
    pub dims: Vec<usize>,
    /// Set for the void complex, whose profile is identically zero.
    pub void: bool,
}

impl HomologyProfile {
    /// Dimension in degree `i` (zero outside the recorded range).
    pub fn get(&self, i: i32) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Homology of the chain complex spanned by `faces` (closed under the boundary
/// modulo faces not in the list). Returns dims indexed from `-1`.
fn chain_homology(f: &PrimeField, faces: &[Face], max_dim: i32) -> Vec<usize> {
    let levels = (max_dim + 2).max(0) as usize; // sizes 0..=max_dim+1
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); levels];
    for &s in faces {
        let k = face_size(s);
        if k < levels {
            by_size[k].push(s);
        }
    }
    let index: Vec<HashMap<Face, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, &s)| (s, i)).collect()).collect();
    // ranks[k] = rank of boundary from size k to size k-1
    let mut ranks = vec![0usize; levels + 1];
    for k in 1..levels {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let mut m = SparseMatrix::new(by_size[k - 1].len(), by_size[k].len());
        for (col, &s) in by_size[k].iter().enumerate() {
            for (pos, v) in face_vertices(s).into_iter().enumerate() {
                if let Some(&row) = index[k - 1].get(&(s & !(1 << v))) {
                    let val = if pos % 2 == 0 { 1 } else { f.neg(1) };
                    m.push(f, row, col, val);
                }
            }
        }
        ranks[k] = rank(f, &m);
    }
    (0..levels).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

pub fn reduced_homology(d: &ColoredComplex, f: &PrimeField) -> HomologyProfile {
    if d.is_void() {
        return HomologyProfile { characteristic: f.characteristic(), dims: vec![0], void: true };
    }
    let faces = d.faces();
    HomologyProfile { characteristic: f.characteristic(), dims: chain_homology(f, &faces, d.dim()), void: false }
}

/// `H_*(Δ, Γ)` via chains on faces of `Δ` not in `Γ`, indexed from `-1`.
///
/// With `Γ` void this is reduced homology of `Δ`; with `Γ = {∅}` it is unreduced homology.
pub fn relative_homology(d: &ColoredComplex, sub: &ColoredComplex, f: &PrimeField) -> Result<HomologyProfile> {
    if sub.facets().iter().any(|&s| !d.contains(s)) {
        return Err(Error::Domain("relative homology needs a subcomplex".into()));
    }
    let faces: Vec<Face> = d.faces().into_iter().filter(|&s| !sub.contains(s)).collect();
    Ok(HomologyProfile { characteristic: f.characteristic(), dims: chain_homology(f, &faces, d.dim()), void: false })
}

/// Outcome of Reisner's criterion; the witness is the first failing (face, degree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerVerdict {
    pub cohen_macaulay: bool,
    pub witness: Option<(Face, i32)>,
}

pub fn reisner_is_cm(d: &ColoredComplex, f: &PrimeField) -> ReisnerVerdict {
    for sigma in d.faces() {
        let link = d.link(sigma);
        let dim = link.dim();
        let h = reduced_homology(&link, f);
        for i in -1..dim {
            if h.get(i) != 0 {
                return ReisnerVerdict { cohen_macaulay: false, witness: Some((sigma, i)) };
            }
        }
    }
    ReisnerVerdict { cohen_macaulay: !d.is_void(), witness: None }
}

/// Fine-graded Betti numbers of `S/I_Δ`: `β_{i,W} = dim H̃_{|W|-i-1}(Δ|_W)`.
///
/// Keys are `(i, W)` with `W` a squarefree degree given as a vertex mask.
pub fn hochster_fine(d: &ColoredComplex, f: &PrimeField) -> BTreeMap<(usize, Face), usize> {
    let mut out = BTreeMap::new();
    let all = d.coloring().all_vertices();
    let mut w: Face = 0;
    loop {
        let restricted = d.restrict(w);
        let h = reduced_homology(&restricted, f);
        let size = face_size(w) as i32;
        for (k, &dim) in h.dims.iter().enumerate() {
            let deg = k as i32 - 1;
            let i = size - deg - 1;
            if dim > 0 && i >= 0 {
                out.insert((i as usize, w), dim);
            }
        }
        if w == all {
            break;
        }
        w = (w.wrapping_sub(all)) & all; // next subset of `all`
    }
    out
}

/// Hochster's formula coarsened to the block grading.
pub fn hochster_betti(d: &ColoredComplex, f: &PrimeField) -> BettiTable {
    let c = d.coloring();
    let mut t = BettiTable::default();
    for ((i, w), dim) in hochster_fine(d, f) {
        let deg: Vec<i64> = (0..c.num_colors()).map(|col| (w & c.color_class(col)).count_ones() as i64).collect();
        t.add(i, deg, dim);
    }
    t
}
