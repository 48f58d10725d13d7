use serde::Serialize;

use super::complex::{face_size, face_vertices, ColoredComplex, Face};
use crate::error::{Error, Result};

/// Colors of a face (0-based bitmask) and whether it meets every color of the coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceColors {
    pub colors: u32,
    pub relevant: bool,
}

pub fn face_colors(d: &ColoredComplex, sigma: Face) -> Result<FaceColors> {
    let c = d.coloring();
    if sigma & !c.all_vertices() != 0 {
        return Err(Error::Domain("face uses vertices outside the coloring".into()));
    }
    let colors = c.colors_of(sigma);
    Ok(FaceColors { colors, relevant: colors == c.all_colors() })
}

/// Exterior and interior faces of a link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSplit {
    pub exterior: Vec<Face>,
    pub interior: Vec<Face>,
}

/// Splits `link_σ(Δ)` into faces lying in `link_σ(B_r)` (exterior) and the rest.
pub fn exterior_interior_split(d: &ColoredComplex, sigma: Face, r: usize) -> Result<FaceSplit> {
    if sigma == 0 {
        return Err(Error::Domain("the split is defined for nonempty faces only".into()));
    }
    if !d.contains(sigma) {
        return Err(Error::Domain(format!("{} is not a face", d.describe_face(sigma))));
    }
    let c = d.coloring();
    let active = c.all_colors();
    let mut split = FaceSplit { exterior: Vec::new(), interior: Vec::new() };
    for f in d.link(sigma).faces() {
        let u = f | sigma;
        if !c.is_relevant(u, active) && face_size(u) <= r + 1 {
            split.exterior.push(f);
        } else {
            split.interior.push(f);
        }
    }
    Ok(split)
}

/// Number of interior codimension-one faces of one facet of a link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwofaceEntry {
    pub facet: Face,
    pub interior_ridges: usize,
}

pub fn twoface_profile(d: &ColoredComplex, sigma: Face) -> Result<Vec<TwofaceEntry>> {
    let c = d.coloring();
    let r = c.num_colors();
    if d.facets().iter().any(|&f| face_size(f) != r + 1) {
        return Err(Error::Domain("complex must be pure of dimension r".into()));
    }
    if d.facets().iter().any(|&f| !c.is_relevant(f, c.all_colors())) {
        return Err(Error::Domain("complex must have relevant facets only".into()));
    }
    let split = exterior_interior_split(d, sigma, r)?;
    let interior: std::collections::HashSet<Face> = split.interior.into_iter().collect();
    Ok(d.link(sigma)
        .facets()
        .iter()
        .map(|&tau| {
            let count = face_vertices(tau).into_iter().filter(|&v| interior.contains(&(tau & !(1 << v)))).count();
            TwofaceEntry { facet: tau, interior_ridges: count }
        })
        .collect())
}

/// Relevant-connected components of a complex relative to a set of active colors.
#[derive(Clone, Debug)]
pub struct ComponentSplit {
    pub components: Vec<ColoredComplex>,
    pub irrelevant_facets: Vec<Face>,
}

/// Groups relevant facets into classes linked by shared relevant faces.
pub fn relevant_connected_components(d: &ColoredComplex, active: u32) -> ComponentSplit {
    let c = d.coloring();
    let (relevant, irrelevant): (Vec<Face>, Vec<Face>) = d.facets().iter().partition(|&&f| c.is_relevant(f, active));
    let n = relevant.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if c.is_relevant(relevant[i] & relevant[j], active) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<(usize, Vec<Face>)> = Vec::new();
    for (i, &f) in relevant.iter().enumerate() {
        let root = find(&mut parent, i);
        match classes.iter_mut().find(|(r, _)| *r == root) {
            Some((_, v)) => v.push(f),
            None => classes.push((root, vec![f])),
        }
    }
    ComponentSplit {
        components: classes.into_iter().map(|(_, fs)| d.with_facets(fs)).collect(),
        irrelevant_facets: irrelevant,
    }
}

/// A decomposition `Δ = join(τ, Ω)` with disjoint color sets.
#[derive(Clone, Debug)]
pub struct JoinDecomposition {
    pub tau: Face,
    pub omega: ColoredComplex,
    /// Colors used by `Ω`.
    pub omega_colors: u32,
}

/// Finds the largest face common to all facets whose colors appear nowhere else in `Δ`.
pub fn join_decomposition(d: &ColoredComplex) -> Option<JoinDecomposition> {
    if d.is_void() {
        return None;
    }
    let c = d.coloring();
    let common = d.facets().iter().fold(c.all_vertices(), |a, &f| a & f);
    let verts = d.vertex_set();
    let mut tau: Face = 0;
    for col in 0..c.num_colors() {
        let class = c.color_class(col) & verts;
        if class != 0 && class & !common == 0 {
            tau |= class;
        }
    }
    if tau == 0 {
        return None;
    }
    let omega = d.link(tau);
    let omega_colors = c.colors_of(omega.vertex_set());
    Some(JoinDecomposition { tau, omega, omega_colors })
}

#[cfg(test)]
mod tests {
    use super::super::complex::Coloring;
    use super::*;

    fn cylinder() -> ColoredComplex {
        // x0..x2 = 0..2, y0..y2 = 3..5
        let f = |vs: &[usize]| vs.iter().fold(0u32, |a, v| a | 1 << v);
        ColoredComplex::new(
            Coloring::new(vec![3, 3]).unwrap(),
            [f(&[0, 4, 1]), f(&[4, 3, 0]), f(&[0, 3, 2]), f(&[5, 3, 2]), f(&[1, 2, 5]), f(&[1, 4, 5])],
        )
        .unwrap()
    }

    #[test]
    fn colors_of_faces() {
        let d = cylinder();
        assert_eq!(face_colors(&d, 0).unwrap(), FaceColors { colors: 0, relevant: false });
        assert!(face_colors(&d, 0b10001).unwrap().relevant);
        assert!(!face_colors(&d, 0b111).unwrap().relevant);
    }

    #[test]
    fn cylinder_is_one_component_without_join() {
        let d = cylinder();
        let split = relevant_connected_components(&d, 0b11);
        assert_eq!(split.components.len(), 1);
        assert!(join_decomposition(&d).is_none());
    }

    #[test]
    fn two_lines_split() {
        let d = ColoredComplex::new(Coloring::new(vec![4]).unwrap(), [0b0011, 0b1100]).unwrap();
        let split = relevant_connected_components(&d, 1);
        assert_eq!(split.components.len(), 2);
        assert_eq!(split.components[0].facets(), &[0b0011]);
    }

    #[test]
    fn cone_is_a_join() {
        // cone over a path on block 1 by the unique vertex of block 2
        let d = ColoredComplex::new(Coloring::new(vec![3, 1]).unwrap(), [0b1011, 0b1110]).unwrap();
        let j = join_decomposition(&d).unwrap();
        assert_eq!(j.tau, 0b1000);
        assert_eq!(j.omega.facets(), &[0b0011, 0b0110]);
        assert_eq!(j.omega_colors, 0b01);
    }

    #[test]
    fn twoface_counts_bounded() {
        let d = cylinder();
        for v in 0..6 {
            for e in twoface_profile(&d, 1 << v).unwrap() {
                assert!(e.interior_ridges <= 2);
            }
        }
        let s = exterior_interior_split(&d, 1, 2).unwrap();
        assert_eq!(s.exterior.len() + s.interior.len(), d.link(1).faces().len());
    }
}
