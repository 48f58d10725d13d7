//! Acceptance suite: one line per criterion, each against a wall-clock limit.
//!
//! Runs without the libtest harness so the lines always show up in `cargo test` output.
//! Criteria listed in `KNOWN_FAILURES` are still run and reported; the process only
//! fails if one of them unexpectedly passes or any other criterion fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcm_cli::scenarios;
use vcm_core::algebra::presentation::{monomials_of_degree, ModulePresentation};
use vcm_core::algebra::submodule::{equal_submodules, saturate};
use vcm_core::algebra::{Monomial, Polynomial, Ring};
use vcm_core::certify::{augment_with_irrelevant, ring_for, stanley_reisner_ideal, vcm_certify_sr};
use vcm_core::homology::{hochster_betti, reduced_homology, reisner_is_cm};
use vcm_core::linalg::dense_rank;
use vcm_core::resolution::classify::{classify, Classification, DEFAULT_BUDGET};
use vcm_core::resolution::cone::mapping_cone_shorten;
use vcm_core::resolution::derived::ext_module;
use vcm_core::resolution::verify::is_virtual_resolution;
use vcm_core::resolution::vreg::{check_sequence, is_virtually_regular};
use vcm_core::resolution::{minimal_resolution, ChainComplex};
use vcm_core::simplicial::{face_size, ColoredComplex, Coloring, Face};
use vcm_core::{Error, PrimeField};

/// Criteria whose literal statement does not hold; each prints FAIL with the reason.
const KNOWN_FAILURES: &[u32] = &[2, 3];

/// Random complexes in the randomized certification criterion.
const RANDOM_COMPLEXES: usize = 200;
const RANDOM_SEED: u64 = 2024;
/// Largest block degree in the saturation comparison box.
const SATURATION_BOX: i64 = 3;

fn field() -> PrimeField {
    PrimeField::default()
}

fn cyclic(ring: &Ring, gens: &[&str]) -> Result<ModulePresentation> {
    let g = gens.iter().map(|s| Polynomial::parse(s, ring)).collect::<vcm_core::Result<Vec<_>>>()?;
    Ok(ModulePresentation::cyclic(ring, &g)?)
}

fn sorted_twists(c: &ChainComplex) -> Vec<Vec<Vec<i64>>> {
    (0..=c.top())
        .map(|i| {
            let mut t = c.twists(i).to_vec();
            t.sort();
            t
        })
        .collect()
}

fn rep(n: usize, d: i64) -> Vec<Vec<i64>> {
    vec![vec![d]; n]
}

fn two_lines_end_to_end() -> Result<String> {
    let ring = Ring::product(&[4], field())?;
    let m = cyclic(&ring, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])?;
    let minimal = minimal_resolution(&ring, &m);
    ensure!(minimal.complex.ranks() == [1, 4, 4, 1], "minimal ranks {:?}", minimal.complex.ranks());
    ensure!(sorted_twists(&minimal.complex) == vec![rep(1, 0), rep(4, 2), rep(4, 3), rep(1, 4)], "minimal twists");
    let ext3 = ext_module(&ring, &m, 3);
    ensure!(ext3.is_irrelevant(&ring), "Ext^3 is not irrelevant");
    let length: usize = (-12..=6).map(|d| ext3.hilbert_function(&ring, &[d])).sum();
    ensure!(length == 1, "Ext^3 has length {length}, expected k");
    let short = mapping_cone_shorten(&ring, &minimal)?;
    ensure!(short.complex.ranks() == [2, 4, 2], "cone ranks {:?}", short.complex.ranks());
    ensure!(sorted_twists(&short.complex) == vec![rep(2, 0), rep(4, 1), rep(2, 2)], "cone twists");
    ensure!(is_virtual_resolution(&ring, &short.complex, &m, Some(&short.augmentation)).passed(), "cone not virtual");
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    ensure!(cert.classification == Classification::Vcm && cert.codim == 2, "classified {}", cert.classification);
    Ok("ranks (1,4,4,1) -> (2,4,2), Ext^3 = k, vCM at codim 2".into())
}

fn cylinder() -> Result<String> {
    let d = scenarios::cylinder_complex();
    let ring = ring_for(&d, field())?;
    let verdict = reisner_is_cm(&d, &field());
    ensure!(!verdict.cohen_macaulay, "Reisner accepts the cylinder");
    ensure!(verdict.witness.map(|w| w.1) == Some(1), "witness {:?}", verdict.witness);
    let i_delta = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(&d))?;
    let j = cyclic(&ring, &["x_1_0*x_2_2", "x_1_1*x_2_0", "x_1_2*x_2_1"])?;
    let sat_i = saturate(&ring, i_delta.relations());
    let aug = augment_with_irrelevant(&d, d.coloring().all_colors());
    ensure!(reisner_is_cm(&aug, &field()).cohen_macaulay, "Reisner rejects the augmented complex");
    let rep = vcm_certify_sr(&d, field())?;
    ensure!(rep.length == 3 && rep.verification.passed(), "certificate length {}", rep.length);
    let same_sheaf = equal_submodules(&ring, &sat_i, &saturate(&ring, j.relations()));
    ensure!(same_sheaf, "I_Δ and J have different saturations");
    // The literal claim: the saturation of I_Δ is J itself.
    ensure!(
        equal_submodules(&ring, &sat_i, j.relations()),
        "sat(I_Δ) has {} generators and strictly contains J (J is not saturated: x_1_0*x_1_1*x_1_2 ∈ J : B); \
         sat(I_Δ) = sat(J) holds, Reisner and the length-3 certificate check out",
        sat_i.ncols()
    );
    Ok("Reisner witness in degree 1, sat(I_Δ) = J, length-3 certificate".into())
}

fn irrelevant_skeletons() -> Result<String> {
    let f = field();
    let mut shapes = 0;
    let mut literal_failures = Vec::new();
    for r in [2, 3] {
        for sizes in scenarios::product_shapes(r, 12) {
            shapes += 1;
            let c = Coloring::new(sizes.clone())?;
            let b = ColoredComplex::irrelevant_skeleton(&c, r, c.all_colors());
            let h = reduced_homology(&b, &f);
            let rr = r as i32;
            for i in -1..rr {
                ensure!(h.get(i) == usize::from(i == rr - 2), "{sizes:?}: H̃_{i}(B_r) = {}", h.get(i));
            }
            for sigma in b.faces().into_iter().filter(|&s| s != 0) {
                let hl = reduced_homology(&b.link(sigma), &f);
                let bound = rr - face_size(sigma) as i32;
                if let Some(i) = (-1..bound).find(|&i| hl.get(i) != 0) {
                    literal_failures.push(format!("{sizes:?} σ={} H̃_{i}", b.describe_face(sigma)));
                }
            }
        }
    }
    ensure!(
        literal_failures.is_empty(),
        "global profile holds on all {shapes} shapes, but {} links have homology below r-1-dim σ, \
         always where σ contains a whole P^1 block (e.g. {})",
        literal_failures.len(),
        literal_failures[0]
    );
    Ok(format!("{shapes} shapes, global profile and link bounds exact"))
}

/// Random `r`-dimensional complex whose relevant facets all have dimension `r`.
fn random_equidimensional(rng: &mut ChaCha8Rng) -> ColoredComplex {
    loop {
        let r = rng.gen_range(2..=3);
        let mut sizes = vec![2; r];
        for _ in 2 * r..rng.gen_range(2 * r..=10) {
            sizes[rng.gen_range(0..r)] += 1;
        }
        let c = Coloring::new(sizes).expect("valid shape");
        let n = c.num_vertices();
        let mut facets = Vec::new();
        let k = rng.gen_range(1..=8);
        while facets.len() < k {
            let mut f: Face = 0;
            while face_size(f) < r + 1 {
                f |= 1 << rng.gen_range(0..n);
            }
            if c.is_relevant(f, c.all_colors()) {
                facets.push(f);
            }
        }
        for _ in 0..rng.gen_range(0..3) {
            let missing = rng.gen_range(0..r);
            let pool: Vec<usize> = (0..n).filter(|&v| c.color_of(v) != missing).collect();
            let size = rng.gen_range(1..=(r + 1).min(pool.len()));
            let mut f: Face = 0;
            while face_size(f) < size {
                f |= 1 << pool[rng.gen_range(0..pool.len())];
            }
            facets.push(f);
        }
        let d = ColoredComplex::new(c, facets).expect("valid facets");
        if d.dim() == r as i32 {
            return d;
        }
    }
}

fn random_certificates() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let bin = env!("CARGO_BIN_EXE_vcm");
    for i in 0..RANDOM_COMPLEXES {
        let d = random_equidimensional(&mut rng);
        let json = serde_json::to_string(&d.to_json_value())?;
        let rep = match vcm_certify_sr(&d, field()) {
            Ok(rep) => rep,
            Err(e) => bail!("complex #{i} {json}: {e}"),
        };
        ensure!(rep.verification.passed(), "complex #{i}: certificate is not a virtual resolution");
        ensure!(rep.codim == Some(rep.length), "complex #{i}: length {} vs codim {:?}", rep.length, rep.codim);
        let mut child = Command::new(bin)
            .args(["vcm", "--json"])
            .stdin(Stdio::piped())
            .stdout(Stdio::null())
            .stderr(Stdio::piped())
            .spawn()?;
        child.stdin.take().expect("piped").write_all(json.as_bytes())?;
        let out = child.wait_with_output()?;
        ensure!(out.status.code() == Some(0), "complex #{i}: vcm exited with {:?}", out.status.code());
    }
    Ok(format!("{RANDOM_COMPLEXES} complexes certified, exit code 0 each"))
}

fn two_planes() -> Result<String> {
    let ring = Ring::product(&[6], field())?;
    let gens: Vec<String> = (0..3).flat_map(|i| (3..6).map(move |j| format!("x{i}*x{j}"))).collect();
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    let m = cyclic(&ring, &gens)?;
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    ensure!(cert.classification == Classification::Vcm, "classified {}", cert.classification);
    ensure!(
        cert.codim == 3 && cert.vdim_upper == 3 && cert.cone_steps >= 1,
        "codim {} via {} cones",
        cert.codim,
        cert.cone_steps
    );
    let seq: Vec<Polynomial> =
        ["x2-x5", "x1-x4", "x0-x3"].iter().map(|s| Polynomial::parse(s, &ring)).collect::<vcm_core::Result<_>>()?;
    let (ok, reports, last) = check_sequence(&ring, &m, &seq)?;
    ensure!(ok && reports.len() == 3, "sequence is not virtually regular");
    ensure!(
        reports[1].annihilator_irrelevant && !reports[1].annihilator_zero,
        "Ann of x1-x4 is not irrelevant-but-nonzero"
    );
    ensure!(last.quotient_by_element(&ring, &seq[2])?.is_irrelevant(&ring), "final quotient is relevant");
    Ok(format!("vCM at codim 3 after {} cone steps, regular sequence, final quotient irrelevant", cert.cone_steps))
}

fn fat_line() -> Result<String> {
    let ring = Ring::product(&[3], field())?;
    let m = cyclic(&ring, &["x0^2", "x0*x1"])?;
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    ensure!(cert.classification == Classification::NotVcm, "classified {}", cert.classification);
    ensure!(cert.vdim_lower == 2 && cert.codim == 1, "vdim >= {} codim {}", cert.vdim_lower, cert.codim);
    let x2 = Polynomial::parse("x2", &ring)?;
    ensure!(is_virtually_regular(&ring, &m, &x2)?.virtually_regular, "x2 is not virtually regular");
    let q = m.quotient_by_element(&ring, &x2)?;
    let point = cyclic(&ring, &["x0", "x2"])?;
    ensure!(equal_submodules(&ring, &q.saturated_relations(&ring), point.relations()), "saturation is not ⟨x0,x2⟩");
    let seq: Vec<Polynomial> =
        ["x0", "x1", "x2"].iter().map(|s| Polynomial::parse(s, &ring)).collect::<vcm_core::Result<_>>()?;
    let (ok, _, _) = check_sequence(&ring, &m, &seq)?;
    ensure!(!ok, "x0,x1,x2 was accepted as virtually regular");
    Ok("not vCM (vdim >= 2 > 1), x2 regular, quotient saturates to ⟨x0,x2⟩, x0,x1,x2 rejected".into())
}

fn lines_in_p4() -> Result<String> {
    let ring = Ring::product(&[5], field())?;
    let m = cyclic(&ring, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])?;
    let ext3 = ext_module(&ring, &m, 3);
    let point = cyclic(&ring, &["x0", "x1", "x2", "x3"])?;
    ensure!(ext3.ambient().rank() == 1, "Ext^3 has {} generators", ext3.ambient().rank());
    ensure!(
        equal_submodules(&ring, &ext3.saturated_relations(&ring), &point.saturated_relations(&ring)),
        "Ext^3 does not saturate to the point"
    );
    ensure!(!ext3.is_irrelevant(&ring), "Ext^3 is irrelevant");
    let minimal = minimal_resolution(&ring, &m);
    match mapping_cone_shorten(&ring, &minimal) {
        Err(Error::Obstruction(_)) => {}
        Err(e) => bail!("cone failed with {e}"),
        Ok(_) => bail!("the cone shortened the resolution"),
    }
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    ensure!(cert.vdim_lower >= 3 && cert.codim == 2, "vdim >= {} codim {}", cert.vdim_lower, cert.codim);
    Ok(format!("Ext^3 ~ point, cone obstructed, vdim >= {} > codim 2", cert.vdim_lower))
}

fn tangent_bundles() -> Result<String> {
    for d in [2usize, 3] {
        let ring = Ring::product(&[d + 1], field())?;
        let m = scenarios::tangent_bundle_module(&ring, d)?;
        let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
        ensure!(cert.codim == 0 && cert.pdim == 1, "P^{d}: codim {} pdim {}", cert.codim, cert.pdim);
        ensure!(
            cert.gcm_consistent && cert.ext_profile.iter().all(|&i| i == 0),
            "P^{d}: Ext profile {:?}",
            cert.ext_profile
        );
        ensure!(cert.classification == Classification::NotVcm, "P^{d}: classified {}", cert.classification);
        ensure!(
            cert.vdim_lower == 1 && cert.vdim_upper == 1,
            "P^{d}: vdim in [{}, {}]",
            cert.vdim_lower,
            cert.vdim_upper
        );
    }
    Ok("P^2 and P^3: codim 0, pdim 1, Ext^i irrelevant for i >= 1, vdim 1".into())
}

fn curve_matrices() -> Result<String> {
    let v = scenarios::run("curve_matrices", field())?;
    ensure!(v["shapes"] == serde_json::json!([[4, 9], [9, 5]]), "shapes {}", v["shapes"]);
    ensure!(v["homogeneous"] == true, "entries are not homogeneous against the twists");
    ensure!(v["composes_to_zero"] == true, "the two matrices do not compose to zero");
    Ok(format!(
        "4x9 and 9x5 homogeneous, product zero; listed F_0 twist {} unused (open question)",
        v["listed_f0_unused"]
    ))
}

/// `dim (I : B^k)_d` by linear algebra on the multiplication map into `S/I`.
fn colon_dimension(ring: &Ring, ideal: &[Monomial], d: &[i64], b_power: &[Monomial]) -> usize {
    let basis = monomials_of_degree(ring, d);
    let mut rows = Vec::new();
    for b in b_power {
        for (j, m) in basis.iter().enumerate() {
            if !ideal.iter().any(|g| g.divides(&m.mul(b))) {
                let mut row = vec![0u32; basis.len()];
                row[j] = 1;
                rows.push(row);
            }
        }
    }
    basis.len() - dense_rank(ring.field(), rows)
}

fn saturation_dimension(ring: &Ring, ideal: &[Monomial], d: &[i64]) -> usize {
    let mut power = vec![Monomial::ONE];
    let mut prev = usize::MAX;
    loop {
        let next: Vec<Monomial> =
            power.iter().flat_map(|a| ring.irrelevant_generators().iter().map(move |b| a.mul(b))).collect();
        power = next;
        power.sort_by(|a, b| a.cmp_lex(b));
        power.dedup();
        let cur = colon_dimension(ring, ideal, d, &power);
        if cur == prev {
            return cur;
        }
        prev = cur;
    }
}

fn all_complexes(c: &Coloring) -> Vec<ColoredComplex> {
    fn go(n: u32, start: Face, chosen: &mut Vec<Face>, out: &mut Vec<Vec<Face>>) {
        out.push(chosen.clone());
        for s in start..1 << n {
            if chosen.iter().all(|&t| t & s != s && t & s != t) {
                chosen.push(s);
                go(n, s + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut antichains = Vec::new();
    go(c.num_vertices() as u32, 0, &mut Vec::new(), &mut antichains);
    antichains.into_iter().map(|a| ColoredComplex::new(c.clone(), a).expect("antichain")).collect()
}

fn oracle_equivalence() -> Result<String> {
    let f = field();
    let mut checked = 0;
    for sizes in [vec![2, 2], vec![3]] {
        let c = Coloring::new(sizes.clone())?;
        for d in all_complexes(&c).into_iter().filter(|d| !d.is_void()) {
            let name = serde_json::to_string(&d.to_json_value())?;
            let ring = ring_for(&d, f)?;
            let ideal = stanley_reisner_ideal(&d);
            let m = ModulePresentation::cyclic(&ring, &ideal)?;
            let res = minimal_resolution(&ring, &m);
            ensure!(hochster_betti(&d, &f) == res.complex.betti(), "{name}: Hochster differs from the resolution");
            let pdim_is_codim = res.complex.length() == m.codim(&ring).expect("nonzero ring");
            ensure!(
                reisner_is_cm(&d, &f).cohen_macaulay == pdim_is_codim,
                "{name}: Reisner disagrees with pdim = codim"
            );
            let sat = ModulePresentation::new(saturate(&ring, m.relations()));
            let gens: Vec<Monomial> = ideal.iter().map(|p| p.lead().expect("monomial").0).collect();
            let r = sizes.len();
            let mut degrees = vec![vec![]];
            for _ in 0..r {
                degrees = degrees
                    .into_iter()
                    .flat_map(|p: Vec<i64>| (0..=SATURATION_BOX).map(move |x| [p.clone(), vec![x]].concat()))
                    .collect();
            }
            for deg in degrees {
                let total = monomials_of_degree(&ring, &deg).len();
                let ours = total - sat.hilbert_function(&ring, &deg);
                let oracle = saturation_dimension(&ring, &gens, &deg);
                ensure!(ours == oracle, "{name}: saturation has dimension {ours} in degree {deg:?}, oracle {oracle}");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} complexes on P^1xP^1 and P^2: Hochster, Reisner and saturation agree"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String>,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "two skew lines end to end",
            limit: Duration::from_secs(10),
            run: two_lines_end_to_end,
        },
        Criterion { id: 2, name: "cylinder via Δ ∪ B_2", limit: Duration::from_secs(10), run: cylinder },
        Criterion { id: 3, name: "B_r homology and links", limit: Duration::from_secs(60), run: irrelevant_skeletons },
        Criterion {
            id: 4,
            name: "random equidimensional complexes",
            limit: Duration::from_secs(300),
            run: random_certificates,
        },
        Criterion { id: 5, name: "two planes in P^5", limit: Duration::from_secs(30), run: two_planes },
        Criterion { id: 6, name: "fat line in P^2", limit: Duration::from_secs(10), run: fat_line },
        Criterion { id: 7, name: "two lines in P^4 obstruction", limit: Duration::from_secs(30), run: lines_in_p4 },
        Criterion { id: 8, name: "tangent bundles on P^2, P^3", limit: Duration::from_secs(10), run: tangent_bundles },
        Criterion { id: 9, name: "curve matrices on P^1 x P^2", limit: Duration::from_secs(5), run: curve_matrices },
        Criterion {
            id: 10,
            name: "exhaustive oracle equivalence",
            limit: Duration::from_secs(300),
            run: oracle_equivalence,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(_) if elapsed > c.limit => (false, "over the time limit".to_string()),
            Ok(d) => (true, d),
            Err(e) => (false, format!("{e:#}")),
        };
        let known = KNOWN_FAILURES.contains(&c.id);
        println!(
            "criterion {:>2} {} ({:.2}s / {}s) {}: {}{}",
            c.id,
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            c.name,
            detail,
            if known && !passed { " [known failure]" } else { "" }
        );
        if passed == known {
            unexpected.push(c.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
