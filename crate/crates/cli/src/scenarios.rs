//! Scripted end-to-end scenarios with canonical JSON reports, compared against goldens.

use anyhow::{anyhow, bail, Result};
use serde_json::{json, Value};
use vcm_core::algebra::presentation::ModulePresentation;
use vcm_core::algebra::{submodule, FreeModule, GradedMatrix, Polynomial, Ring};
use vcm_core::certify::{augment_with_irrelevant, ring_for, stanley_reisner_ideal, vcm_certify_sr};
use vcm_core::homology::{reduced_homology, reisner_is_cm, relative_homology};
use vcm_core::resolution::classify::{classify, VirtualCertificate, DEFAULT_BUDGET};
use vcm_core::resolution::cone::{mapping_cone_shorten, mapping_cone_step};
use vcm_core::resolution::derived::ext_module;
use vcm_core::resolution::verify::is_virtual_resolution;
use vcm_core::resolution::vreg::{check_sequence, is_virtually_regular, quotient_total_complex};
use vcm_core::resolution::{minimal_resolution, ChainComplex};
use vcm_core::simplicial::{face_from_vertices, ColoredComplex, Coloring};
use vcm_core::{Error, PrimeField};

pub const NAMES: &[&str] = &[
    "two_lines",
    "cylinder",
    "two_lines_cone",
    "curve_matrices",
    "two_planes",
    "fat_line",
    "lines_in_p4",
    "tangent_bundles",
    "irrelevant_skeletons",
];

pub fn run(name: &str, field: PrimeField) -> Result<Value> {
    match name {
        "two_lines" => two_lines(field),
        "cylinder" => cylinder_scenario(field),
        "two_lines_cone" => two_lines_cone(field),
        "curve_matrices" => curve_matrices(field),
        "two_planes" => two_planes(field),
        "fat_line" => fat_line(field),
        "lines_in_p4" => lines_in_p4(field),
        "tangent_bundles" => tangent_bundles(field),
        "irrelevant_skeletons" => irrelevant_skeleton_profiles(field),
        _ => bail!("unknown example '{name}'; expected one of {}", NAMES.join(", ")),
    }
}

fn cyclic(ring: &Ring, gens: &[&str]) -> Result<ModulePresentation> {
    let g = gens.iter().map(|s| Polynomial::parse(s, ring)).collect::<vcm_core::Result<Vec<_>>>()?;
    Ok(ModulePresentation::cyclic(ring, &g)?)
}

fn poly(ring: &Ring, s: &str) -> Result<Polynomial> {
    Ok(Polynomial::parse(s, ring)?)
}

fn ideal_strings(ring: &Ring, m: &GradedMatrix) -> Vec<String> {
    let mut v: Vec<String> = m.columns().iter().map(|c| Polynomial(c.clone()).format(ring)).collect();
    v.sort();
    v
}

fn complex_summary(c: &ChainComplex) -> Value {
    json!({ "ranks": c.ranks(), "betti": c.betti() })
}

fn certificate_summary(cert: &VirtualCertificate) -> Result<Value> {
    let mut v = serde_json::to_value(cert)?;
    let obj = v.as_object_mut().ok_or_else(|| anyhow!("certificate is not an object"))?;
    obj.remove("complex");
    obj.insert("resolution".into(), complex_summary(&cert.resolution.complex));
    Ok(v)
}

/// The two skew lines `V(x0,x1) ∪ V(x2,x3)` in P^3 as a complex: two disjoint edges.
pub fn two_lines_complex() -> ColoredComplex {
    ColoredComplex::new(Coloring::new(vec![4]).expect("valid"), [0b0011, 0b1100]).expect("valid")
}

/// A triangulated cylinder on P^2 × P^2 whose ring is not Cohen-Macaulay.
pub fn cylinder_complex() -> ColoredComplex {
    let f = face_from_vertices;
    ColoredComplex::new(
        Coloring::new(vec![3, 3]).expect("valid"),
        [f(&[0, 1, 4]), f(&[0, 3, 4]), f(&[0, 2, 3]), f(&[2, 3, 5]), f(&[1, 2, 5]), f(&[1, 4, 5])],
    )
    .expect("valid")
}

const TWO_LINES: [&str; 4] = ["x0*x2", "x0*x3", "x1*x2", "x1*x3"];

fn two_lines(field: PrimeField) -> Result<Value> {
    let d = two_lines_complex();
    let ring = ring_for(&d, field)?;
    let ideal: Vec<String> = stanley_reisner_ideal(&d).iter().map(|p| p.format(&ring)).collect();
    let report = vcm_certify_sr(&d, field)?;
    let m = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(&d))?;
    let minimal = minimal_resolution(&ring, &m);
    Ok(json!({
        "ideal": ideal,
        "minimal_resolution": complex_summary(&minimal.complex),
        "pipeline": report,
        "short_resolution": complex_summary(&report.resolution.complex),
    }))
}

fn cylinder_scenario(field: PrimeField) -> Result<Value> {
    let d = cylinder_complex();
    let ring = ring_for(&d, field)?;
    let verdict = reisner_is_cm(&d, &field);
    let m = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(&d))?;
    let saturated = ideal_strings(&ring, &submodule::minimal_generators(&ring, &m.saturated_relations(&ring)));
    let aug = augment_with_irrelevant(&d, d.coloring().all_colors());
    let skeleton = ColoredComplex::irrelevant_skeleton(d.coloring(), 2, d.coloring().all_colors());
    let report = vcm_certify_sr(&d, field)?;
    Ok(json!({
        "ideal": stanley_reisner_ideal(&d).iter().map(|p| p.format(&ring)).collect::<Vec<_>>(),
        "reduced_homology": reduced_homology(&d, &field).dims,
        "reisner": {
            "cohen_macaulay": verdict.cohen_macaulay,
            "witness": verdict.witness.map(|(s, i)| json!({ "face": d.describe_face(s), "degree": i })),
        },
        "saturation": saturated,
        "augmented_ideal": stanley_reisner_ideal(&aug).iter().map(|p| p.format(&ring)).collect::<Vec<_>>(),
        "augmented_reisner": reisner_is_cm(&aug, &field).cohen_macaulay,
        "relative_homology_mod_skeleton": relative_homology(&aug, &skeleton, &field)?.dims,
        "pipeline": {
            "branch": report.branch,
            "codim": report.codim,
            "length": report.length,
            "certified": report.certified,
            "resolution": complex_summary(&report.resolution.complex),
        },
    }))
}

/// Degrees `d` in `lo..=hi` (single block) where `dim_k M_d` is nonzero.
fn nonzero_degrees(ring: &Ring, m: &ModulePresentation, lo: i64, hi: i64) -> Value {
    let mut out = serde_json::Map::new();
    for d in lo..=hi {
        let h = m.hilbert_function(ring, &[d]);
        if h > 0 {
            out.insert(d.to_string(), json!(h));
        }
    }
    Value::Object(out)
}

fn two_lines_cone(field: PrimeField) -> Result<Value> {
    let ring = Ring::product(&[4], field)?;
    let m = cyclic(&ring, &TWO_LINES)?;
    let minimal = minimal_resolution(&ring, &m);
    let ext3 = ext_module(&ring, &m, 3);
    let step = mapping_cone_step(&ring, &minimal)?;
    let check = is_virtual_resolution(&ring, &step.result.complex, &m, Some(&step.result.augmentation));
    let unmin_check = is_virtual_resolution(&ring, &step.unminimized.complex, &m, Some(&step.unminimized.augmentation));
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    Ok(json!({
        "minimal_resolution": complex_summary(&minimal.complex),
        "ext3": { "irrelevant": ext3.is_irrelevant(&ring), "hilbert_function": nonzero_degrees(&ring, &ext3, -8, 4) },
        "ext_resolution_ranks": step.ext_resolution.ranks(),
        "unminimized": { "ranks": step.unminimized.complex.ranks(), "virtual": unmin_check.passed() },
        "cone": complex_summary(&step.result.complex),
        "verification": check,
        "classification": cert.classification,
        "codim": cert.codim,
    }))
}

fn curve_matrices(field: PrimeField) -> Result<Value> {
    let ring = Ring::product(&[2, 3], field)?;
    let rename = |s: &str| {
        s.replace("x0", "x_1_0")
            .replace("x1", "x_1_1")
            .replace("y0", "x_2_0")
            .replace("y1", "x_2_1")
            .replace("y2", "x_2_2")
    };
    let rows = |m: &[&[&str]]| -> Result<Vec<Vec<Polynomial>>> {
        m.iter().map(|r| r.iter().map(|e| poly(&ring, &rename(e))).collect()).collect()
    };
    let d1 = rows(&[
        &[
            "0",
            "-x1*y0-x1*y1",
            "x0*y0^2",
            "y1^2*y2",
            "-x1*y1^2-x0*y2^2",
            "y0*y2^2+y1*y2^2",
            "x0*y2",
            "y0^3+y0^2*y1",
            "0",
        ],
        &["-x1", "-x0", "0", "y0^2", "0", "-y1^2", "0", "-y2^2", "0"],
        &["0", "0", "-x1", "0", "-x0", "y0+y1", "0", "0", "-y2"],
        &["x0", "0", "0", "y2^2", "0", "0", "-x1", "-y1^2", "y0^2"],
    ])?;
    let d2 = rows(&[
        &["-y1^2", "0", "y0^2", "-y2^2", "0"],
        &["y2^2", "0", "0", "y0^2", "-y1^2"],
        &["y0+y1", "-y2", "0", "0", "0"],
        &["0", "0", "x1", "x0", "0"],
        &["0", "0", "y2", "0", "y0+y1"],
        &["x1", "0", "0", "0", "x0"],
        &["0", "y0^2", "y2^2", "-y1^2", "0"],
        &["-x0", "0", "0", "x1", "0"],
        &["0", "x1", "-x0", "0", "0"],
    ])?;
    let listed_f0: Vec<Vec<i64>> = vec![vec![0, 0], vec![0, 1], vec![0, 1], vec![0, 2], vec![0, 2]];
    let f1: Vec<Vec<i64>> =
        [[1, 1], [1, 1], [1, 2], [0, 3], [1, 2], [0, 3], [1, 1], [0, 3], [0, 3]].iter().map(|t| t.to_vec()).collect();
    let f2 = vec![vec![1, 3]; 5];
    // Row twists implied by the entries of the first matrix.
    let f0: Vec<Vec<i64>> = vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![0, 1]];
    let mut remaining = listed_f0.clone();
    for t in &f0 {
        if let Some(i) = remaining.iter().position(|x| x == t) {
            remaining.remove(i);
        }
    }
    let m1 =
        GradedMatrix::from_entries(&ring, FreeModule::new(&ring, f0.clone()), FreeModule::new(&ring, f1.clone()), &d1);
    let m2 = GradedMatrix::from_entries(&ring, FreeModule::new(&ring, f1), FreeModule::new(&ring, f2), &d2);
    let homogeneous = m1.is_ok() && m2.is_ok();
    let composes_to_zero = match (&m1, &m2) {
        (Ok(a), Ok(b)) => a.compose(&ring, b)?.is_zero(),
        _ => false,
    };
    Ok(json!({
        "shapes": [[d1.len(), d1[0].len()], [d2.len(), d2[0].len()]],
        "homogeneous": homogeneous,
        "composes_to_zero": composes_to_zero,
        "row_twists": f0,
        "listed_f0_twists": listed_f0,
        "listed_f0_unused": remaining,
    }))
}

fn two_planes(field: PrimeField) -> Result<Value> {
    let ring = Ring::product(&[6], field)?;
    let gens: Vec<String> = (0..3).flat_map(|i| (3..6).map(move |j| format!("x{i}*x{j}"))).collect();
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    let m = cyclic(&ring, &gens)?;
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    let seq = [poly(&ring, "x2-x5")?, poly(&ring, "x1-x4")?, poly(&ring, "x0-x3")?];
    let (all_regular, reports, last) = check_sequence(&ring, &m, &seq)?;
    let final_quotient = last.quotient_by_element(&ring, &seq[2])?;

    // Carry the certificate through the quotients.
    let mut module = m.clone();
    let mut res = cert.resolution.clone();
    let mut steps = Vec::new();
    for f in &seq[..2] {
        res = quotient_total_complex(&ring, &res, f)?;
        module = module.quotient_by_element(&ring, f)?;
        let check = is_virtual_resolution(&ring, &res.complex, &module, Some(&res.augmentation));
        steps.push(json!({
            "element": f.format(&ring),
            "codim": module.codim(&ring),
            "length": res.complex.length(),
            "virtual": check.passed(),
        }));
    }
    Ok(json!({
        "certificate": certificate_summary(&cert)?,
        "sequence_regular": all_regular,
        "reports": reports,
        "final_quotient_irrelevant": final_quotient.is_irrelevant(&ring),
        "quotient_complexes": steps,
    }))
}

fn fat_line(field: PrimeField) -> Result<Value> {
    let ring = Ring::product(&[3], field)?;
    let m = cyclic(&ring, &["x0^2", "x0*x1"])?;
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    let x2 = poly(&ring, "x2")?;
    let rep = is_virtually_regular(&ring, &m, &x2)?;
    let q = m.quotient_by_element(&ring, &x2)?;
    let sat = ideal_strings(&ring, &submodule::minimal_generators(&ring, &q.saturated_relations(&ring)));
    let q_cert = classify(&ring, &q, DEFAULT_BUDGET)?;
    let seq = [poly(&ring, "x0")?, poly(&ring, "x1")?, poly(&ring, "x2")?];
    let (ok, reports, _) = check_sequence(&ring, &m, &seq)?;
    Ok(json!({
        "certificate": certificate_summary(&cert)?,
        "x2": rep,
        "quotient_saturation": sat,
        "quotient_classification": q_cert.classification,
        "sequence_x0_x1_x2": { "virtually_regular": ok, "reports": reports },
    }))
}

fn lines_in_p4(field: PrimeField) -> Result<Value> {
    let ring = Ring::product(&[5], field)?;
    let m = cyclic(&ring, &TWO_LINES)?;
    let minimal = minimal_resolution(&ring, &m);
    let ext3 = ext_module(&ring, &m, 3);
    let point = cyclic(&ring, &["x0", "x1", "x2", "x3"])?;
    let ext_sat = ext3.saturated_relations(&ring);
    let same_saturation =
        ext3.ambient().rank() == 1 && submodule::equal_submodules(&ring, &ext_sat, &point.saturated_relations(&ring));
    let cone = match mapping_cone_shorten(&ring, &minimal) {
        Ok(c) => json!({ "shortened": true, "ranks": c.complex.ranks() }),
        Err(e @ Error::Obstruction(_)) => json!({ "shortened": false, "obstruction": e.to_string() }),
        Err(e) => return Err(e.into()),
    };
    let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
    Ok(json!({
        "minimal_resolution": complex_summary(&minimal.complex),
        "ext3": {
            "generators": ext3.ambient().rank(),
            "saturation": ideal_strings(&ring, &submodule::minimal_generators(&ring, &ext_sat)),
            "matches_point": same_saturation,
            "irrelevant": ext3.is_irrelevant(&ring),
        },
        "mapping_cone": cone,
        "certificate": certificate_summary(&cert)?,
    }))
}

/// `coker(S(-1) → S^{d+1})` given by the column of variables.
pub fn tangent_bundle_module(ring: &Ring, d: usize) -> Result<ModulePresentation> {
    let tgt = FreeModule::free(ring, d + 1);
    let src = FreeModule::new(ring, vec![vec![1]]);
    let rows: Vec<Vec<Polynomial>> = (0..=d).map(|i| vec![Polynomial::var(i)]).collect();
    Ok(ModulePresentation::new(GradedMatrix::from_entries(ring, tgt, src, &rows)?))
}

fn tangent_bundles(field: PrimeField) -> Result<Value> {
    let mut out = serde_json::Map::new();
    for d in [2usize, 3] {
        let ring = Ring::product(&[d + 1], field)?;
        let m = tangent_bundle_module(&ring, d)?;
        let cert = classify(&ring, &m, DEFAULT_BUDGET)?;
        out.insert(format!("P{d}"), certificate_summary(&cert)?);
    }
    Ok(Value::Object(out))
}

/// Block-size tuples (sorted, each at least 2) with `r` blocks and at most `max_total` vertices.
pub fn product_shapes(r: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, min: usize, budget: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == r {
            out.push(acc.clone());
            return;
        }
        let left = r - acc.len() - 1;
        for s in min..=budget.saturating_sub(2 * left) {
            acc.push(s);
            go(r, s, budget - s, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(r, 2, max_total, &mut Vec::new(), &mut out);
    out
}

/// Checks the homology of `B_r` and of the links of its nonempty faces.
pub fn skeleton_profile(sizes: &[usize], field: &PrimeField) -> Result<Value> {
    let c = Coloring::new(sizes.to_vec())?;
    let r = sizes.len();
    let b = ColoredComplex::irrelevant_skeleton(&c, r, c.all_colors());
    let h = reduced_homology(&b, field);
    let rr = r as i32;
    let global_ok = (-1..rr).all(|i| h.get(i) == usize::from(i == rr - 2));
    // `link_failures` uses the bound r - 1 - dim σ; `links_cm` uses the actual link dimension.
    // They differ when σ swallows a whole color class and the link shrinks to {∅}.
    let mut bad_links = Vec::new();
    let mut links_cm = true;
    for sigma in b.faces().into_iter().filter(|&s| s != 0) {
        let link = b.link(sigma);
        let hl = reduced_homology(&link, field);
        let bound = rr - 1 - (sigma.count_ones() as i32 - 1);
        if let Some(i) = (-1..bound).find(|&i| hl.get(i) != 0) {
            bad_links.push(json!({ "face": b.describe_face(sigma), "degree": i, "link_dim": link.dim() }));
        }
        links_cm &= (-1..link.dim()).all(|i| hl.get(i) == 0);
    }
    Ok(json!({
        "blocks": sizes,
        "homology": h.dims,
        "profile_ok": global_ok,
        "links_cm": links_cm,
        "link_failures": bad_links,
    }))
}

fn irrelevant_skeleton_profiles(field: PrimeField) -> Result<Value> {
    let mut out = Vec::new();
    for r in [2, 3] {
        for sizes in product_shapes(r, 12) {
            out.push(skeleton_profile(&sizes, &field)?);
        }
    }
    Ok(Value::Array(out))
}
