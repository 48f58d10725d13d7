#![allow(dead_code)]

use rand::Rng;
use vcm_core::algebra::presentation::monomials_of_degree;
use vcm_core::algebra::{Monomial, Polynomial, Ring};
use vcm_core::linalg::dense_rank;
use vcm_core::simplicial::{face_size, ColoredComplex, Coloring, Face};
use vcm_core::PrimeField;

pub fn field() -> PrimeField {
    PrimeField::default()
}

/// Random complex on the given blocks: a few random faces, closed downward.
pub fn random_complex<R: Rng>(rng: &mut R, sizes: &[usize], max_facets: usize) -> ColoredComplex {
    let c = Coloring::new(sizes.to_vec()).unwrap();
    let n = c.num_vertices();
    let k = rng.gen_range(1..=max_facets);
    let facets: Vec<Face> = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(4));
            let mut f: Face = 0;
            while face_size(f) < size {
                f |= 1 << rng.gen_range(0..n);
            }
            f
        })
        .collect();
    ColoredComplex::new(c, facets).unwrap()
}

/// Random pure complex of dimension `r` whose facets all meet every color.
pub fn random_pure_relevant<R: Rng>(rng: &mut R, sizes: &[usize], max_facets: usize) -> ColoredComplex {
    let c = Coloring::new(sizes.to_vec()).unwrap();
    let r = sizes.len();
    let n = c.num_vertices();
    let k = rng.gen_range(1..=max_facets);
    let mut facets = Vec::new();
    while facets.len() < k {
        let mut f: Face = 0;
        while face_size(f) < r + 1 {
            f |= 1 << rng.gen_range(0..n);
        }
        if c.is_relevant(f, c.all_colors()) {
            facets.push(f);
        }
    }
    ColoredComplex::new(c, facets).unwrap()
}

/// All monomials of `B^k`.
pub fn irrelevant_power(ring: &Ring, k: usize) -> Vec<Monomial> {
    let mut acc = vec![Monomial::ONE];
    for _ in 0..k {
        let mut next: Vec<Monomial> =
            acc.iter().flat_map(|a| ring.irrelevant_generators().iter().map(move |b| a.mul(b))).collect();
        next.sort_by(|a, b| a.cmp_lex(b));
        next.dedup();
        acc = next;
    }
    acc
}

/// `dim_k (I : B^k)_d` for a monomial ideal `I`, by the rank of the multiplication map
/// `S_d → ⊕_b (S/I)_{d + deg b}`.
pub fn colon_dimension(ring: &Ring, ideal: &[Monomial], d: &[i64], k: usize) -> usize {
    let in_ideal = |m: &Monomial| ideal.iter().any(|g| g.divides(m));
    let basis = monomials_of_degree(ring, d);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for b in irrelevant_power(ring, k) {
        for j in (0..basis.len()).filter(|&j| !in_ideal(&basis[j].mul(&b))) {
            let mut row = vec![0u32; basis.len()];
            row[j] = 1;
            rows.push(row);
        }
    }
    basis.len() - if rows.is_empty() { 0 } else { dense_rank(ring.field(), rows) }
}

/// `dim_k (I : B^∞)_d`, iterating `k` until the colon stabilizes.
pub fn saturation_dimension(ring: &Ring, ideal: &[Monomial], d: &[i64]) -> usize {
    let mut prev = colon_dimension(ring, ideal, d, 1);
    for k in 2..=6 {
        let cur = colon_dimension(ring, ideal, d, k);
        if cur == prev {
            return cur;
        }
        prev = cur;
    }
    prev
}

pub fn monomial_gens(ps: &[Polynomial]) -> Vec<Monomial> {
    ps.iter().map(|p| p.lead().unwrap().0).collect()
}

/// All degrees in the box `{0..=hi}^r`.
pub fn degree_box(r: usize, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out.into_iter().flat_map(|p| (0..=hi).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}
