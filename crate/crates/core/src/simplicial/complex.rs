use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// A face is a bitmask of vertex indices. Vertices are numbered block-major.
pub type Face = u32;

/// Maximum number of vertices a complex may carry.
pub const MAX_VERTICES: usize = 32;

#[inline]
pub fn face_size(f: Face) -> usize {
    f.count_ones() as usize
}

/// Vertex indices of a face in increasing order.
pub fn face_vertices(f: Face) -> Vec<usize> {
    (0..MAX_VERTICES).filter(|v| f >> v & 1 == 1).collect()
}

pub fn face_from_vertices(vs: &[usize]) -> Face {
    vs.iter().fold(0, |acc, v| acc | 1 << v)
}

/// Iterates over all subsets of `f` (including `0` and `f`).
pub fn subfaces(f: Face) -> impl Iterator<Item = Face> {
    let mut sub = f;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & f;
        }
        Some(cur)
    })
}

/// Vertex coloring by blocks: block `i` owns `sizes[i]` consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl Coloring {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::Domain("every block needs at least one vertex".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::Domain(format!("{total} vertices exceed the limit of {MAX_VERTICES}")));
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        Ok(Coloring { sizes, offsets })
    }

    pub fn num_colors(&self) -> usize {
        self.sizes.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Global index of vertex `j` in block `color` (both 0-based).
    pub fn vertex(&self, color: usize, j: usize) -> usize {
        self.offsets[color] + j
    }

    /// (color, index within block) of a global vertex index.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let c = self.offsets.iter().rposition(|&o| o <= v).expect("vertex in range");
        (c, v - self.offsets[c])
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.locate(v).0
    }

    /// Mask of all vertices of one color.
    pub fn color_class(&self, color: usize) -> Face {
        let lo = self.offsets[color];
        (lo..lo + self.sizes[color]).fold(0, |acc, v| acc | 1 << v)
    }

    pub fn all_vertices(&self) -> Face {
        let n = self.num_vertices();
        if n == 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    pub fn all_colors(&self) -> u32 {
        (1u32 << self.num_colors()) - 1
    }

    /// Bitmask of the colors met by a face.
    pub fn colors_of(&self, f: Face) -> u32 {
        let mut out = 0;
        for c in 0..self.num_colors() {
            if f & self.color_class(c) != 0 {
                out |= 1 << c;
            }
        }
        out
    }

    /// Number of distinct colors of a face.
    pub fn colo(&self, f: Face) -> usize {
        self.colors_of(f).count_ones() as usize
    }

    /// Vertices of all colors in the mask.
    pub fn vertices_of_colors(&self, colors: u32) -> Face {
        (0..self.num_colors()).filter(|c| colors >> c & 1 == 1).fold(0, |acc, c| acc | self.color_class(c))
    }

    /// Whether the face meets every color of `active`.
    pub fn is_relevant(&self, f: Face, active: u32) -> bool {
        self.colors_of(f) & active == active
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let (c, j) = self.locate(v);
        if self.num_colors() == 1 {
            format!("x{j}")
        } else {
            format!("x_{}_{}", c + 1, j)
        }
    }
}

/// A simplicial complex on colored vertices, stored by its facets.
///
/// The void complex has no faces at all; the complex `{∅}` has the single facet `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredComplex {
    coloring: Coloring,
    facets: Vec<Face>,
}

/// Keeps only inclusion-maximal faces, sorted by (size, mask).
pub fn antichain(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut fs: Vec<Face> = faces.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    fs.sort_by_key(|&f| (std::cmp::Reverse(face_size(f)), f));
    let mut kept: Vec<Face> = Vec::new();
    for f in fs {
        if !kept.iter().any(|&g| f & g == f) {
            kept.push(f);
        }
    }
    kept.sort_by_key(|&f| (face_size(f), f));
    kept
}

impl ColoredComplex {
    pub fn new(coloring: Coloring, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        let all = coloring.all_vertices();
        let facets: Vec<Face> = facets.into_iter().collect();
        if let Some(f) = facets.iter().find(|&&f| f & !all != 0) {
            return Err(Error::Domain(format!("face {f:#b} uses vertices outside the coloring")));
        }
        Ok(ColoredComplex { coloring, facets: antichain(facets) })
    }

    pub fn void(coloring: Coloring) -> Self {
        ColoredComplex { coloring, facets: Vec::new() }
    }

    /// The full simplex on a vertex set.
    pub fn simplex(coloring: Coloring, vertices: Face) -> Self {
        ColoredComplex { coloring, facets: vec![vertices] }
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|&f| face_size(f) as i32 - 1).max().unwrap_or(-1)
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f & g == f)
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// All faces sorted by (size, mask), including `∅` unless void.
    pub fn faces(&self) -> Vec<Face> {
        let mut set = HashSet::new();
        for &f in &self.facets {
            for s in subfaces(f) {
                set.insert(s);
            }
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort_by_key(|&f| (face_size(f), f));
        out
    }

    pub fn with_facets(&self, facets: impl IntoIterator<Item = Face>) -> Self {
        ColoredComplex { coloring: self.coloring.clone(), facets: antichain(facets) }
    }

    pub fn link(&self, sigma: Face) -> Self {
        self.with_facets(self.facets.iter().filter(|&&f| f & sigma == sigma).map(|&f| f & !sigma))
    }

    /// Induced subcomplex on a vertex set.
    pub fn restrict(&self, w: Face) -> Self {
        if self.is_void() {
            return self.clone();
        }
        self.with_facets(self.facets.iter().map(|&f| f & w))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.with_facets(self.facets.iter().chain(other.facets.iter()).copied())
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for &f in &self.facets {
            for &g in &other.facets {
                out.push(f | g);
            }
        }
        self.with_facets(out)
    }

    /// Minimal non-faces, i.e. the squarefree generators of the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let all = self.coloring.all_vertices();
        let faces = self.faces();
        let face_set: HashSet<Face> = faces.iter().copied().collect();
        let mut out = BTreeSet::new();
        if self.is_void() {
            out.insert(0);
        }
        for &f in &faces {
            for v in face_vertices(all & !f) {
                let w = f | 1 << v;
                if face_set.contains(&w) {
                    continue;
                }
                if face_vertices(w).iter().all(|&u| face_set.contains(&(w & !(1 << u)))) {
                    out.insert(w);
                }
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by_key(|&f| (face_size(f), f));
        v
    }

    /// `B_k`: every face of dimension at most `k` missing at least one active color.
    pub fn irrelevant_skeleton(coloring: &Coloring, k: usize, active: u32) -> Self {
        let verts = coloring.vertices_of_colors(active);
        let mut facets = Vec::new();
        for c in 0..coloring.num_colors() {
            if active >> c & 1 == 0 {
                continue;
            }
            let pool = verts & !coloring.color_class(c);
            let pv = face_vertices(pool);
            if pv.len() <= k + 1 {
                facets.push(pool);
            } else {
                for_each_subset_of_size(&pv, k + 1, &mut |s| facets.push(s));
            }
        }
        ColoredComplex { coloring: coloring.clone(), facets: antichain(facets) }
    }

    pub fn facets_of_dim(&self, d: i32) -> impl Iterator<Item = Face> + '_ {
        self.facets.iter().copied().filter(move |&f| face_size(f) as i32 - 1 == d)
    }

    pub fn describe_face(&self, f: Face) -> String {
        let names: Vec<String> = face_vertices(f).into_iter().map(|v| self.coloring.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Calls `f` on every `k`-element subset of `items`.
pub fn for_each_subset_of_size(items: &[usize], k: usize, f: &mut impl FnMut(Face)) {
    fn go(items: &[usize], k: usize, start: usize, acc: Face, f: &mut impl FnMut(Face)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k {
                break;
            }
            go(items, k - 1, i + 1, acc | 1 << items[i], f);
        }
    }
    go(items, k, 0, 0, f)
}
