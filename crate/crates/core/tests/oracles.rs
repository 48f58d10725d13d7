mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vcm_core::algebra::presentation::ModulePresentation;
use vcm_core::algebra::submodule::{equal_submodules, is_contained, saturate, saturate_iterated};
use vcm_core::algebra::{Monomial, Polynomial, Ring};
use vcm_core::certify::{ring_for, stanley_reisner_ideal};
use vcm_core::homology::{hochster_betti, reisner_is_cm};
use vcm_core::resolution::minimal_resolution;
use vcm_core::simplicial::ColoredComplex;

use common::*;

const SHAPES: &[&[usize]] = &[&[2, 2], &[3, 2], &[2, 2, 2], &[4, 3], &[3, 3], &[7]];

fn sr_module(d: &ColoredComplex) -> (Ring, ModulePresentation) {
    let ring = ring_for(d, field()).unwrap();
    let m = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(d)).unwrap();
    (ring, m)
}

fn random_nonvoid(seed: u64, s: usize) -> ColoredComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_complex(&mut rng, SHAPES[s % SHAPES.len()], 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hochster_matches_minimal_resolution(seed in any::<u64>(), s in 0usize..6) {
        let d = random_nonvoid(seed, s);
        let (ring, m) = sr_module(&d);
        let res = minimal_resolution(&ring, &m);
        prop_assert_eq!(hochster_betti(&d, &field()), res.complex.betti());
    }

    #[test]
    fn reisner_agrees_with_auslander_buchsbaum(seed in any::<u64>(), s in 0usize..6) {
        let d = random_nonvoid(seed, s);
        let (ring, m) = sr_module(&d);
        let pdim = minimal_resolution(&ring, &m).complex.length();
        let codim = m.codim(&ring).unwrap();
        prop_assert_eq!(reisner_is_cm(&d, &field()).cohen_macaulay, pdim == codim);
    }

    #[test]
    fn krull_dimension_is_one_more_than_complex_dimension(seed in any::<u64>(), s in 0usize..6) {
        let d = random_nonvoid(seed, s);
        let (ring, m) = sr_module(&d);
        prop_assert_eq!(m.krull_dim(&ring), Some((d.dim() + 1) as usize));
    }

    #[test]
    fn saturation_is_idempotent_and_monotone(seed in any::<u64>(), s in 0usize..5) {
        let d = random_nonvoid(seed, s);
        let (ring, m) = sr_module(&d);
        let sat = saturate(&ring, m.relations());
        prop_assert!(is_contained(&ring, m.relations(), &sat));
        prop_assert!(equal_submodules(&ring, &saturate(&ring, &sat), &sat));
        prop_assert!(equal_submodules(&ring, &saturate_iterated(&ring, m.relations()), &sat));
    }

    #[test]
    fn saturation_matches_linear_algebra(seed in any::<u64>(), s in 0usize..4) {
        let d = random_nonvoid(seed, s);
        let (ring, m) = sr_module(&d);
        let gens = monomial_gens(&stanley_reisner_ideal(&d));
        let sat = ModulePresentation::new(saturate(&ring, m.relations()));
        for deg in degree_box(ring.grading_rank(), 2) {
            let total = vcm_core::algebra::presentation::monomials_of_degree(&ring, &deg).len();
            prop_assert_eq!(total - sat.hilbert_function(&ring, &deg), saturation_dimension(&ring, &gens, &deg));
        }
    }

    #[test]
    fn irrelevance_means_killed_by_a_power_of_b(seed in any::<u64>()) {
        // random monomial ideals in P^1 x P^2; S/I is irrelevant iff B^k ⊆ I for some k
        let ring = Ring::product(&[2, 3], field()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let k = rng.gen_range(1..5);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| Monomial::from_exponents(&(0..5).map(|_| rng.gen_range(0..3)).collect::<Vec<u16>>()))
            .filter(|m| !m.is_one())
            .collect();
        prop_assume!(!gens.is_empty());
        let polys: Vec<Polynomial> = gens.iter().map(|&g| Polynomial::monomial(g, 1)).collect();
        let m = ModulePresentation::cyclic(&ring, &polys).unwrap();
        let killed = (1..=8).any(|k| irrelevant_power(&ring, k).iter().all(|b| gens.iter().any(|g| g.divides(b))));
        prop_assert_eq!(m.is_irrelevant(&ring), killed);
    }
}

#[test]
fn hochster_on_the_irrelevant_complex_of_the_empty_face() {
    let c = vcm_core::simplicial::Coloring::new(vec![2, 2]).unwrap();
    let empty = ColoredComplex::new(c, [0]).unwrap();
    let (ring, m) = sr_module(&empty);
    assert_eq!(hochster_betti(&empty, &field()), minimal_resolution(&ring, &m).complex.betti());
    assert_eq!(minimal_resolution(&ring, &m).complex.ranks(), vec![1, 4, 6, 4, 1]);
}

#[test]
fn linear_algebra_oracle_sees_the_saturation_jump() {
    // ⟨x_1_0 x_2_2, x_1_1 x_2_0, x_1_2 x_2_1⟩ is not saturated: x_1_0 x_1_1 x_1_2 enters
    let ring = Ring::product(&[3, 3], field()).unwrap();
    let gens: Vec<Polynomial> =
        ["x_1_0*x_2_2", "x_1_1*x_2_0", "x_1_2*x_2_1"].iter().map(|s| Polynomial::parse(s, &ring).unwrap()).collect();
    let m = ModulePresentation::cyclic(&ring, &gens).unwrap();
    let mons = monomial_gens(&gens);
    assert_eq!(colon_dimension(&ring, &mons, &[3, 0], 0), 0);
    assert_eq!(saturation_dimension(&ring, &mons, &[3, 0]), 1);
    let sat = ModulePresentation::new(saturate(&ring, m.relations()));
    assert_eq!(10 - sat.hilbert_function(&ring, &[3, 0]), 1);
}
