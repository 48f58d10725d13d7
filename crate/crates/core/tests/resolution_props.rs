mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcm_core::algebra::presentation::ModulePresentation;
use vcm_core::algebra::{Polynomial, Ring};
use vcm_core::certify::{ring_for, stanley_reisner_ideal};
use vcm_core::resolution::classify::{classify, Classification, DEFAULT_BUDGET};
use vcm_core::resolution::cone::mapping_cone_shorten;
use vcm_core::resolution::derived::ext_module;
use vcm_core::resolution::verify::is_virtual_resolution;
use vcm_core::resolution::vreg::{is_virtually_regular, quotient_total_complex};
use vcm_core::resolution::{
    direct_sum_resolutions, frame_resolution, minimal_resolution, minimize, AugmentedComplex, ChainComplex,
    MinimizeOptions,
};
use vcm_core::simplicial::ColoredComplex;
use vcm_core::Error;

use common::*;

const SHAPES: &[&[usize]] = &[&[2, 2], &[3, 2], &[2, 2, 2], &[3, 3], &[5]];

fn sr_module(d: &ColoredComplex) -> (Ring, ModulePresentation) {
    let ring = ring_for(d, field()).unwrap();
    let m = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(d)).unwrap();
    (ring, m)
}

fn well_formed(ring: &Ring, c: &ChainComplex) -> bool {
    c.is_complex(ring) && c.diffs().iter().all(|d| d.check_homogeneous(ring).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn minimal_ranks_do_not_depend_on_pivot_order(seed in any::<u64>(), s in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, SHAPES[s], 5);
        let (ring, m) = sr_module(&d);
        let frame = frame_resolution(&ring, &m);
        let mut order = || {
            frame
                .complex
                .diffs()
                .iter()
                .map(|d| {
                    let mut p: Vec<usize> = (0..d.ncols()).collect();
                    p.shuffle(&mut rng);
                    p
                })
                .collect::<Vec<_>>()
        };
        let (p1, p2) = (order(), order());
        let a = minimize(&ring, &frame, &MinimizeOptions { first_diff: 0, column_priority: Some(p1) });
        let b = minimize(&ring, &frame, &MinimizeOptions { first_diff: 0, column_priority: Some(p2) });
        prop_assert_eq!(a.complex.betti(), b.complex.betti());
        prop_assert_eq!(a.complex.betti(), minimal_resolution(&ring, &m).complex.betti());
        prop_assert!(well_formed(&ring, &a.complex) && well_formed(&ring, &b.complex));
    }

    #[test]
    fn cone_step_contract(seed in any::<u64>(), s in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, SHAPES[s], 4);
        let (ring, m) = sr_module(&d);
        prop_assume!(!m.is_irrelevant(&ring));
        let minimal = minimal_resolution(&ring, &m);
        let t = minimal.complex.length();
        match mapping_cone_shorten(&ring, &minimal) {
            Ok(short) => {
                prop_assert!(short.complex.length() < t);
                prop_assert!(well_formed(&ring, &short.complex));
                prop_assert!(is_virtual_resolution(&ring, &short.complex, &m, Some(&short.augmentation)).passed());
            }
            Err(Error::Obstruction(_)) => prop_assert!(!ext_module(&ring, &m, t).is_irrelevant(&ring)),
            Err(Error::Precondition(_)) => prop_assert_eq!(t, 0),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn certificates_respect_codim_and_ext(seed in any::<u64>(), s in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, SHAPES[s], 4);
        let (ring, m) = sr_module(&d);
        prop_assume!(!m.is_irrelevant(&ring));
        let cert = classify(&ring, &m, DEFAULT_BUDGET).unwrap();
        prop_assert!(cert.vdim_upper >= cert.codim);
        prop_assert!(cert.vdim_lower <= cert.vdim_upper);
        prop_assert!(cert.report.passed());
        for i in cert.vdim_upper + 1..=cert.pdim {
            prop_assert!(ext_module(&ring, &m, i).is_irrelevant(&ring));
        }
        if matches!(cert.classification, Classification::Acm | Classification::Vcm) {
            prop_assert_eq!(cert.resolution.complex.length(), cert.codim);
        }
    }

    #[test]
    fn quotient_by_a_virtually_regular_form_stays_certified(seed in any::<u64>(), s in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_complex(&mut rng, SHAPES[s], 4);
        let (ring, m) = sr_module(&d);
        prop_assume!(!m.is_irrelevant(&ring));
        let cert = classify(&ring, &m, DEFAULT_BUDGET).unwrap();
        prop_assume!(matches!(cert.classification, Classification::Acm | Classification::Vcm));
        // a random linear form in the first block
        let block = &ring.blocks().unwrap()[0];
        let mut f = Polynomial::zero();
        for &v in block {
            f = f.add(&Polynomial::var(v).scale(rng.gen_range(1..1000), &ring), &ring);
        }
        prop_assume!(is_virtually_regular(&ring, &m, &f).unwrap().virtually_regular);
        let q = m.quotient_by_element(&ring, &f).unwrap();
        let res = quotient_total_complex(&ring, &cert.resolution, &f).unwrap();
        prop_assert!(well_formed(&ring, &res.complex));
        prop_assert!(is_virtual_resolution(&ring, &res.complex, &q, Some(&res.augmentation)).passed());
        if !q.is_irrelevant(&ring) {
            prop_assert_eq!(res.complex.length(), q.codim(&ring).unwrap());
        }
    }
}

#[test]
fn direct_sums_of_resolutions_are_complexes() {
    let ring = Ring::product(&[4], field()).unwrap();
    let parts: Vec<AugmentedComplex> = [["x0", "x1"], ["x2", "x3"]]
        .iter()
        .map(|g| {
            let gens: Vec<Polynomial> = g.iter().map(|s| Polynomial::parse(s, &ring).unwrap()).collect();
            minimal_resolution(&ring, &ModulePresentation::cyclic(&ring, &gens).unwrap())
        })
        .collect();
    let sum = direct_sum_resolutions(&ring, &parts).unwrap();
    assert!(well_formed(&ring, &sum.complex));
    assert_eq!(sum.complex.ranks(), vec![2, 4, 2]);
}
