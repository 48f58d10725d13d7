use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use vcm_cli::golden;
use vcm_cli::input::{parse_complex, parse_face, parse_poly_list, read_source, AlgebraDoc};
use vcm_cli::scenarios;
use vcm_core::algebra::presentation::ModulePresentation;
use vcm_core::algebra::{GradedMatrix, Ring};
use vcm_core::certify::{stanley_reisner_ideal, vcm_certify_sr};
use vcm_core::field::DEFAULT_CHARACTERISTIC;
use vcm_core::homology::{hochster_betti, reduced_homology, reisner_is_cm};
use vcm_core::resolution::classify::{classify, Classification, DEFAULT_BUDGET};
use vcm_core::resolution::cone::mapping_cone_step;
use vcm_core::resolution::derived::{ext_irrelevance_profile, ext_module, tor_module};
use vcm_core::resolution::verify::is_virtual_resolution;
use vcm_core::resolution::vreg::{check_sequence, quotient_total_complex};
use vcm_core::resolution::{
    frame_resolution, minimal_resolution, minimize, AugmentedComplex, ChainComplex, MinimizeOptions,
};
use vcm_core::simplicial::{ColoredComplex, Coloring};
use vcm_core::PrimeField;

#[derive(Parser)]
#[command(name = "vcm", version, about = "Virtual resolutions over products of projective spaces")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, default_value_t = DEFAULT_CHARACTERISTIC)]
    characteristic: u32,
    /// Input document; standard input when absent or "-".
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Print the full JSON report instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of mapping-cone steps.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Add wall-clock time to JSON reports (makes them nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stanley-Reisner ideal of a colored complex.
    Srideal,
    /// Reisner's criterion for the Cohen-Macaulay property.
    Reisner,
    /// Multigraded Betti numbers of S/I_Δ by Hochster's formula.
    Betti {
        /// Also compute a minimal free resolution and compare.
        #[arg(long)]
        check: bool,
    },
    /// Link of a face, e.g. --face x_1_0,x_2_1.
    Link {
        #[arg(long)]
        face: String,
    },
    /// The complex B_r of low-dimensional irrelevant faces.
    Br {
        /// Block sizes n_i + 1, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        /// Dimension bound; defaults to the number of blocks.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Certify that S/I_Δ is virtually Cohen-Macaulay.
    Vcm,
    /// Free resolution of a module.
    Res {
        /// Keep the non-minimal Schreyer resolution.
        #[arg(long)]
        frame: bool,
    },
    /// Remove unit entries from a chain complex.
    Minimize,
    /// One mapping-cone shortening step.
    Mapcone,
    /// Ext^i(M, S); without -i, the irrelevance profile.
    Ext {
        #[arg(short)]
        i: Option<usize>,
    },
    /// Tor_i(M, S/⟨g_1, …⟩).
    Tor {
        #[arg(short)]
        i: usize,
        /// Generators of the second ideal, comma separated.
        #[arg(long = "with")]
        with: String,
    },
    /// Virtual regularity of a sequence of elements, comma separated.
    Vreg {
        #[arg(long)]
        sequence: String,
    },
    /// M/fM with the total complex of a resolution tensored with S/f.
    Quotient {
        #[arg(long)]
        element: String,
    },
    /// Place a module on the aCM / vCM ladder.
    Classify,
    /// Whether a module is irrelevant.
    Irrelevant,
    /// Run a scripted scenario and compare it with its golden report.
    RunExample {
        /// Scenario name, or "all".
        name: String,
        /// Overwrite the golden file instead of comparing.
        #[arg(long)]
        bless: bool,
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}

/// A command's result: the report, a short human summary and the exit code.
struct Outcome {
    report: Value,
    summary: String,
    code: u8,
}

impl Outcome {
    fn ok(report: Value, summary: impl Into<String>) -> Self {
        Outcome { report, summary: summary.into(), code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut out) => {
            if cli.json {
                if cli.timing {
                    if let Value::Object(m) = &mut out.report {
                        m.insert("timing_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
                    }
                }
                println!("{}", serde_json::to_string_pretty(&out.report).expect("reports serialize"));
            } else {
                println!("{}", out.summary);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let code = e.downcast_ref::<vcm_core::Error>().map_or(1, |e| e.exit_code());
            if cli.json {
                let kind = match code {
                    2 => "obstruction",
                    3 => "precondition",
                    4 => "contradiction",
                    _ => "error",
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "error": kind, "message": format!("{e:#}") })).unwrap()
                );
            }
            eprintln!("error: {e:#}");
            ExitCode::from(code as u8)
        }
    }
}

fn field(cli: &Cli) -> Result<PrimeField> {
    Ok(PrimeField::new(cli.characteristic)?)
}

fn complex_input(cli: &Cli) -> Result<ColoredComplex> {
    parse_complex(&read_source(cli.input.as_deref())?)
}

fn algebra_input(cli: &Cli) -> Result<(Ring, AlgebraDoc)> {
    let doc = AlgebraDoc::parse(&read_source(cli.input.as_deref())?)?;
    Ok((doc.ring(field(cli)?)?, doc))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let f = field(cli)?;
    Ok(match &cli.command {
        Command::Srideal => {
            let d = complex_input(cli)?;
            let ring = vcm_core::certify::ring_for(&d, f)?;
            let ideal: Vec<String> = stanley_reisner_ideal(&d).iter().map(|p| p.format(&ring)).collect();
            Outcome::ok(json!({ "ideal": ideal }), ideal.join("\n"))
        }
        Command::Reisner => {
            let d = complex_input(cli)?;
            let v = reisner_is_cm(&d, &f);
            let witness = v.witness.map(|(s, i)| json!({ "face": d.describe_face(s), "degree": i }));
            let summary = match v.witness {
                None => format!("Cohen-Macaulay: {}", v.cohen_macaulay),
                Some((s, i)) => {
                    format!("not Cohen-Macaulay: link of {} has homology in degree {i}", d.describe_face(s))
                }
            };
            Outcome::ok(
                json!({ "cohen_macaulay": v.cohen_macaulay, "witness": witness, "characteristic": f.characteristic() }),
                summary,
            )
        }
        Command::Betti { check } => {
            let d = complex_input(cli)?;
            let table = hochster_betti(&d, &f);
            let mut report = json!({ "betti": table, "totals": table.total() });
            let mut summary = format!("totals {:?}", table.total());
            if *check {
                let ring = vcm_core::certify::ring_for(&d, f)?;
                let m = ModulePresentation::cyclic(&ring, &stanley_reisner_ideal(&d))?;
                let agrees = minimal_resolution(&ring, &m).complex.betti() == table;
                report["resolution_agrees"] = json!(agrees);
                summary += &format!("\nresolution agrees: {agrees}");
            }
            Outcome::ok(report, summary)
        }
        Command::Link { face } => {
            let d = complex_input(cli)?;
            let sigma = parse_face(&d, face)?;
            if !d.contains(sigma) {
                return Err(vcm_core::Error::Domain(format!("{} is not a face", d.describe_face(sigma))).into());
            }
            let link = d.link(sigma);
            let h = reduced_homology(&link, &f);
            let facets: Vec<String> = link.facets().iter().map(|&s| link.describe_face(s)).collect();
            Outcome::ok(
                json!({ "link": link.to_json_value(), "homology": h.dims }),
                format!("facets {}\nhomology {:?}", facets.join(" "), h.dims),
            )
        }
        Command::Br { blocks, dim } => {
            let c = Coloring::new(blocks.clone())?;
            let r = dim.unwrap_or(blocks.len());
            let b = ColoredComplex::irrelevant_skeleton(&c, r, c.all_colors());
            let h = reduced_homology(&b, &f);
            Outcome::ok(
                json!({ "complex": b.to_json_value(), "homology": h.dims }),
                format!("{} facets, dimension {}\nhomology {:?}", b.facets().len(), b.dim(), h.dims),
            )
        }
        Command::Vcm => {
            let d = complex_input(cli)?;
            let rep = vcm_certify_sr(&d, f)?;
            let summary = format!(
                "certified: branch {}, length {}, codim {}",
                serde_json::to_value(rep.branch)?.as_str().unwrap_or("?"),
                rep.length,
                rep.codim.map_or("-".into(), |c| c.to_string())
            );
            Outcome::ok(serde_json::to_value(&rep)?, summary)
        }
        Command::Res { frame } => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let res = if *frame { frame_resolution(&ring, &m) } else { minimal_resolution(&ring, &m) };
            complex_outcome(&ring, &res.complex)
        }
        Command::Minimize => {
            let (ring, doc) = algebra_input(cli)?;
            let Some(c) = doc.complex(&ring)? else { bail!("the document has no \"complex\"") };
            let a = AugmentedComplex { augmentation: GradedMatrix::identity(c.module(0)), complex: c };
            complex_outcome(&ring, &minimize(&ring, &a, &MinimizeOptions::default()).complex)
        }
        Command::Mapcone => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let start = match doc.complex(&ring)? {
                Some(c) => given_resolution(&m, c)?,
                None => minimal_resolution(&ring, &m),
            };
            let step = mapping_cone_step(&ring, &start)?;
            let check = is_virtual_resolution(&ring, &step.result.complex, &m, Some(&step.result.augmentation));
            Outcome::ok(
                json!({
                    "input_ranks": start.complex.ranks(),
                    "ext_resolution_ranks": step.ext_resolution.ranks(),
                    "unminimized_ranks": step.unminimized.complex.ranks(),
                    "complex": step.result.complex.to_json(&ring),
                    "ranks": step.result.complex.ranks(),
                    "betti": step.result.complex.betti(),
                    "verification": check,
                }),
                format!(
                    "ranks {:?} -> {:?} (before minimizing {:?}); virtual resolution: {}",
                    start.complex.ranks(),
                    step.result.complex.ranks(),
                    step.unminimized.complex.ranks(),
                    check.passed()
                ),
            )
        }
        Command::Ext { i } => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            match i {
                Some(i) => {
                    let e = ext_module(&ring, &m, *i);
                    let irrelevant = e.is_irrelevant(&ring);
                    Outcome::ok(
                        json!({ "index": i, "presentation": e.to_json(&ring), "irrelevant": irrelevant, "zero": e.is_zero(&ring) }),
                        format!("Ext^{i}: {} generators, irrelevant: {irrelevant}", e.ambient().rank()),
                    )
                }
                None => {
                    let res = minimal_resolution(&ring, &m);
                    let profile = ext_irrelevance_profile(&ring, &res.complex);
                    let relevant: Vec<usize> = (0..profile.len()).filter(|&i| !profile[i]).collect();
                    Outcome::ok(
                        json!({ "irrelevant": profile, "relevant_indices": relevant }),
                        format!("relevant Ext indices {relevant:?}"),
                    )
                }
            }
        }
        Command::Tor { i, with } => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let n = ModulePresentation::cyclic(&ring, &parse_poly_list(&ring, with)?)?;
            let res = minimal_resolution(&ring, &m);
            let t = tor_module(&ring, &res.complex, &n, *i);
            let irrelevant = t.is_irrelevant(&ring);
            Outcome::ok(
                json!({ "index": i, "presentation": t.to_json(&ring), "irrelevant": irrelevant }),
                format!("Tor_{i}: {} generators, irrelevant: {irrelevant}", t.ambient().rank()),
            )
        }
        Command::Vreg { sequence } => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let seq = parse_poly_list(&ring, sequence)?;
            let (ok, reports, last) = check_sequence(&ring, &m, &seq)?;
            let lines: Vec<String> =
                reports.iter().map(|r| format!("{}: virtually regular {}", r.element, r.virtually_regular)).collect();
            Outcome::ok(
                json!({ "virtually_regular": ok, "reports": reports, "last_quotient_irrelevant": last.is_irrelevant(&ring) }),
                lines.join("\n"),
            )
        }
        Command::Quotient { element } => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let fs = parse_poly_list(&ring, element)?;
            let [g] = fs.as_slice() else { bail!("--element takes a single polynomial") };
            let start = match doc.complex(&ring)? {
                Some(c) => given_resolution(&m, c)?,
                None => minimal_resolution(&ring, &m),
            };
            let reg = vcm_core::resolution::vreg::is_virtually_regular(&ring, &m, g)?;
            let q = m.quotient_by_element(&ring, g)?;
            let total = quotient_total_complex(&ring, &start, g)?;
            let check = is_virtual_resolution(&ring, &total.complex, &q, Some(&total.augmentation));
            Outcome::ok(
                json!({
                    "regularity": reg,
                    "quotient": q.to_json(&ring),
                    "complex": total.complex.to_json(&ring),
                    "ranks": total.complex.ranks(),
                    "verification": check,
                    // Only meaningful when the element is virtually regular.
                    "certified": reg.virtually_regular && check.passed(),
                }),
                format!(
                    "virtually regular: {}; total complex ranks {:?}; virtual resolution of M/fM: {}",
                    reg.virtually_regular,
                    total.complex.ranks(),
                    check.passed()
                ),
            )
        }
        Command::Classify => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let cert = classify(&ring, &m, cli.budget)?;
            let code = if cert.classification == Classification::NotVcm { 2 } else { 0 };
            let summary = format!(
                "{}: codim {}, pdim {}, vdim in [{}, {}], relevant Ext at {:?}",
                cert.classification, cert.codim, cert.pdim, cert.vdim_lower, cert.vdim_upper, cert.ext_profile
            );
            Outcome { report: serde_json::to_value(&cert)?, summary, code }
        }
        Command::Irrelevant => {
            let (ring, doc) = algebra_input(cli)?;
            let m = doc.module(&ring)?;
            let irrelevant = m.is_irrelevant(&ring);
            Outcome::ok(
                json!({ "irrelevant": irrelevant, "saturated_relations": GradedMatrix::to_json(&m.saturated_relations(&ring), &ring) }),
                format!("irrelevant: {irrelevant}"),
            )
        }
        Command::RunExample { name, bless, golden_dir } => run_examples(f, name, *bless, golden_dir.clone())?,
    })
}

/// Uses a supplied complex as the resolution of `m`; `C_0` must be the ambient module.
fn given_resolution(m: &ModulePresentation, c: ChainComplex) -> Result<AugmentedComplex> {
    if c.module(0) != m.ambient() {
        bail!("the complex's C_0 must equal the module's ambient free module");
    }
    Ok(AugmentedComplex { augmentation: GradedMatrix::identity(m.ambient()), complex: c })
}

fn complex_outcome(ring: &Ring, c: &ChainComplex) -> Outcome {
    Outcome::ok(
        json!({ "complex": c.to_json(ring), "ranks": c.ranks(), "betti": c.betti(), "minimal": c.is_minimal() }),
        format!("ranks {:?}", c.ranks()),
    )
}

fn run_examples(f: PrimeField, name: &str, bless: bool, dir: Option<PathBuf>) -> Result<Outcome> {
    let dir = dir.unwrap_or_else(golden::default_dir);
    let names: Vec<&str> = if name == "all" { scenarios::NAMES.to_vec() } else { vec![name] };
    let mut lines = Vec::new();
    let mut results = serde_json::Map::new();
    let mut failed = false;
    for n in names {
        let report = scenarios::run(n, f)?;
        let text = golden::canonical(&report)?;
        let path = golden::path_for(&dir, n);
        if bless {
            golden::bless(&path, &text)?;
            lines.push(format!("{n}: wrote {}", path.display()));
        } else if let Some(diff) = golden::compare(&path, &text)? {
            failed = true;
            eprintln!("{diff}");
            lines.push(format!("{n}: differs from golden"));
        } else {
            lines.push(format!("{n}: matches golden"));
        }
        results.insert(n.to_string(), report);
    }
    let report = if results.len() == 1 { results.into_iter().next().unwrap().1 } else { Value::Object(results) };
    Ok(Outcome { report, summary: lines.join("\n"), code: if failed { 1 } else { 0 } })
}
