mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vcm_core::algebra::submodule::{generator_matrix, is_contained};
use vcm_core::algebra::FreeModule;
use vcm_core::certify::{ring_for, stanley_reisner_ideal};
use vcm_core::homology::reduced_homology;
use vcm_core::simplicial::{exterior_interior_split, face_size, subfaces, twoface_profile, ColoredComplex, Coloring};

use common::*;

const SHAPES: &[&[usize]] = &[&[2, 2], &[3, 2], &[3, 3], &[2, 2, 2], &[4, 3], &[3, 2, 2]];

fn shape(i: usize) -> &'static [usize] {
    SHAPES[i % SHAPES.len()]
}

/// The sizes of the irrelevant faces of dimension at most `r` that contain `sigma` are
/// capped both by `r + 1` and by the vertices outside one missing color.
fn expected_link_dim(c: &Coloring, r: usize, sigma: u32) -> i32 {
    let n = c.num_vertices();
    let widest =
        (0..c.num_colors()).filter(|&col| sigma & c.color_class(col) == 0).map(|col| n - c.sizes()[col]).max().unwrap();
    (widest.min(r + 1) - face_size(sigma)) as i32 - 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn link_faces_extend_to_faces(seed in any::<u64>(), s in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, shape(s), 5);
        for sigma in d.faces() {
            let link = d.link(sigma);
            for tau in link.faces() {
                prop_assert_eq!(tau & sigma, 0);
                prop_assert!(d.contains(tau | sigma));
            }
        }
    }

    #[test]
    fn stanley_reisner_ideal_reverses_inclusion(seed in any::<u64>(), s in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let small = random_complex(&mut rng, shape(s), 4);
        let extra = random_complex(&mut rng, shape(s), 3);
        let big = small.union(&extra);
        let ring = ring_for(&small, field()).unwrap();
        let one = FreeModule::free(&ring, 1);
        let as_matrix = |d: &ColoredComplex| {
            generator_matrix(&ring, &one, stanley_reisner_ideal(d).into_iter().map(|p| p.0).collect())
        };
        prop_assert!(is_contained(&ring, &as_matrix(&big), &as_matrix(&small)));
    }

    #[test]
    fn exterior_meets_interior_in_exterior(seed in any::<u64>(), s in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_pure_relevant(&mut rng, shape(s), 6);
        let r = d.coloring().num_colors();
        for sigma in d.faces().into_iter().filter(|&f| f != 0) {
            let split = exterior_interior_split(&d, sigma, r).unwrap();
            let mut all: Vec<u32> = split.exterior.iter().chain(&split.interior).copied().collect();
            all.sort_unstable();
            let mut link = d.link(sigma).faces();
            link.sort_unstable();
            prop_assert_eq!(all, link);
            for &e in &split.exterior {
                prop_assert!(!split.interior.contains(&e));
                for &i in &split.interior {
                    prop_assert!(split.exterior.contains(&(e & i)));
                }
            }
        }
    }

    #[test]
    fn at_most_two_interior_ridges(seed in any::<u64>(), s in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_pure_relevant(&mut rng, shape(s), 8);
        prop_assume!(d.coloring().num_vertices() <= 9);
        for sigma in d.faces().into_iter().filter(|&f| f != 0) {
            for entry in twoface_profile(&d, sigma).unwrap() {
                prop_assert!(entry.interior_ridges <= 2);
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts(seed in any::<u64>(), s in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, shape(s), 6);
        let h = reduced_homology(&d, &field());
        let from_homology: i64 = (-1..=d.dim()).map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * h.get(i) as i64).sum();
        let from_faces: i64 = d
            .faces()
            .into_iter()
            .filter(|&f| f != 0)
            .map(|f| if face_size(f) % 2 == 1 { 1 } else { -1 })
            .sum::<i64>()
            - 1;
        prop_assert_eq!(from_homology, from_faces);
    }
}

#[test]
fn irrelevant_skeleton_link_dimensions() {
    for sizes in [&[2, 2][..], &[2, 3], &[3, 3], &[2, 2, 2], &[2, 3, 3], &[3, 3, 3], &[2, 2, 3], &[4, 5]] {
        let c = Coloring::new(sizes.to_vec()).unwrap();
        let r = sizes.len();
        let b = ColoredComplex::irrelevant_skeleton(&c, r, c.all_colors());
        for sigma in b.faces().into_iter().filter(|&f| f != 0) {
            let dim = b.link(sigma).dim();
            assert_eq!(dim, expected_link_dim(&c, r, sigma), "{sizes:?} {}", b.describe_face(sigma));
            assert!(dim <= r as i32 - face_size(sigma) as i32);
        }
    }
}

#[test]
fn full_link_dimension_needs_room_outside_a_color() {
    // with three colors of size at least 3 every link has the full dimension r - 1 - dim σ
    let c = Coloring::new(vec![3, 3, 3]).unwrap();
    let b = ColoredComplex::irrelevant_skeleton(&c, 3, c.all_colors());
    assert!(b.faces().into_iter().filter(|&f| f != 0).all(|s| b.link(s).dim() == 3 - face_size(s) as i32));

    // a whole P^1 block leaves only the empty face in its link on P^1 x P^1
    let c = Coloring::new(vec![2, 2]).unwrap();
    let b = ColoredComplex::irrelevant_skeleton(&c, 2, c.all_colors());
    let block = c.color_class(0);
    assert_eq!(b.link(block).dim(), -1);
    assert_eq!(reduced_homology(&b.link(block), &field()).get(-1), 1);
}

#[test]
fn subfaces_enumerate_the_boolean_lattice() {
    assert_eq!(subfaces(0b1011).count(), 8);
}
