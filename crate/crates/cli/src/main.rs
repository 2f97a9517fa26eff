//! `wtg`: exact weighted chromatic, Tutte and Tutte-Grothendieck
//! polynomials of labelled graphs and matroids, label-sum invariants,
//! cochain complexes, and the built-in verification suites.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use wtg_core::categorify::{build_complex, fqdim_complex, ComplexKind};
use wtg_core::fixtures;
use wtg_core::graph::{EdgeLabel, Multigraph};
use wtg_core::invariants::{
    distinguishing_pair_search, invariant_closed_form, invariant_label_sum, log_concavity_check,
    CatalogEntry, Instance, InvariantKind, LogConcavity, Method,
};
use wtg_core::mvpoly::MVPoly;
use wtg_core::poly::{chromatic_direct, tg_p, tg_phi, tutte_direct, TGParams};
use wtg_core::rational::{format_rational, parse_rational};
use wtg_core::verify::{
    check_example_6_2, check_log_concavity, check_theorem_4_3, check_theorem_5_2, verify_all,
    CheckResult, DEFAULT_SEED,
};
use wtg_core::weights::{harmonic_basis, hom_basis, WeightFn};
use wtg_core::RankOracle;

#[derive(Parser)]
#[command(name = "wtg", version, about = "Weighted graph and matroid polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for label sums (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for the randomized parts of the verification suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GraphInput {
    /// Graph JSON file: {"vertices": 4, "edges": [[1,2], ...]}.
    #[arg(long)]
    graph: PathBuf,
    /// Label as "[4,1,2,3]" (edge i gets the i-th entry); identity if absent.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args)]
struct InstanceInput {
    /// Graph JSON file.
    #[arg(long, conflicts_with = "matroid")]
    graph: Option<PathBuf>,
    /// Matroid JSON file: graphic, linear (mod p), or uniform.
    #[arg(long)]
    matroid: Option<PathBuf>,
    /// Label as "[4,1,2,3]"; identity if absent.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted chromatic polynomial of a labelled graph.
    Chromatic {
        #[command(flatten)]
        graph: GraphInput,
        /// Weight: ones:d | basis:hom:d:k | basis:harm:d:k | file:path.
        #[arg(long)]
        weight: String,
    },
    /// Weighted Tutte polynomial of a labelled graph or matroid.
    Tutte {
        #[command(flatten)]
        instance: InstanceInput,
        #[arg(long)]
        weight: String,
    },
    /// Weighted Tutte-Grothendieck polynomials Φ and P of a labelled graph.
    Tg {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        weight: String,
        /// Nonzero rational, e.g. "2" or "-7/3".
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Label-sum invariant (sum of the polynomial over all n! labels).
    Invariant {
        #[command(flatten)]
        instance: InstanceInput,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = KindArg::Chromatic)]
        kind: KindArg,
        #[arg(long, required_if_eq("kind", "tg"), allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, required_if_eq("kind", "tg"), allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// Cochain complex of a labelled graph: shapes, fqdims, Euler sums.
    Categorify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = ComplexArg::Chromatic)]
        complex: ComplexArg,
    },
    /// Rational basis of the harmonic space Harm_d(n).
    HarmonicBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Search the built-in catalog for matroids with equal classical Tutte
    /// polynomial and differing weighted invariants.
    Search,
    /// Reproduce a built-in worked computation.
    Check {
        /// example6.1 | example6.2 | logconcavity
        target: String,
    },
    /// Run an identity suite; exits 0 iff every check passes.
    Verify {
        /// thm4.3 | thm5.2 | all
        target: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Chromatic,
    Tutte,
    Tg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    LabelSum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComplexArg {
    Chromatic,
    Tutte,
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_graph(input: &GraphInput) -> Result<(Multigraph, EdgeLabel)> {
    let g = Multigraph::from_json(&read_json(&input.graph)?)?;
    let s = parse_label(input.label.as_deref(), g.original_edge_count())?;
    Ok((g, s))
}

fn load_instance(input: &InstanceInput) -> Result<(Instance, EdgeLabel)> {
    let instance = match (&input.graph, &input.matroid) {
        (Some(path), None) => Instance::Graph(Multigraph::from_json(&read_json(path)?)?),
        (None, Some(path)) => Instance::Matroid(RankOracle::from_json(&read_json(path)?)?),
        _ => bail!("exactly one of --graph or --matroid is required"),
    };
    let s = parse_label(input.label.as_deref(), instance.ground_size())?;
    Ok((instance, s))
}

fn parse_label(spec: Option<&str>, n: usize) -> Result<EdgeLabel> {
    match spec {
        None => Ok(EdgeLabel::identity(n)),
        Some(raw) => {
            let entries: Vec<usize> = serde_json::from_str(raw)
                .with_context(|| format!("label `{raw}` must look like [4,1,2,3]"))?;
            if entries.len() != n {
                bail!("label has {} entries but the instance has {n}", entries.len());
            }
            Ok(EdgeLabel::new(entries)?)
        }
    }
}

/// ones:d | basis:hom:d:k | basis:harm:d:k | file:path.
fn parse_weight(spec: &str, n: usize) -> Result<WeightFn> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["ones", d] => Ok(WeightFn::ones(n, d.parse()?)),
        ["basis", family, d, k] => {
            let d: usize = d.parse()?;
            let k: usize = k.parse()?;
            let basis = match *family {
                "hom" => hom_basis(n, d),
                "harm" => harmonic_basis(n, d),
                other => bail!("unknown basis family `{other}` (hom or harm)"),
            };
            if k == 0 || k > basis.len() {
                bail!("basis index {k} outside 1..={}", basis.len());
            }
            Ok(basis[k - 1].clone())
        }
        ["file", ..] => {
            let path = &spec["file:".len()..];
            let f = WeightFn::from_json(&read_json(Path::new(path))?)?;
            if f.n() != n {
                bail!("weight is on Ω of size {} but the instance has {n}", f.n());
            }
            Ok(f)
        }
        _ => bail!("weight spec `{spec}`: expected ones:d, basis:hom:d:k, basis:harm:d:k or file:path"),
    }
}

fn print_poly(format: Format, name: &str, p: &MVPoly) {
    match format {
        Format::Text => println!("{name} = {p}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({ "name": name, "polynomial": p.to_json() })
        ),
    }
}

fn print_checks(format: Format, results: &[CheckResult]) -> bool {
    let passed = results.iter().all(|r| r.passed);
    match format {
        Format::Text => {
            for r in results {
                println!(
                    "{} {}: {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "passed": passed, "checks": items })
            );
        }
    }
    passed
}

fn parse_params(alpha: &str, beta: &str) -> Result<TGParams> {
    Ok(TGParams::new(parse_rational(alpha)?, parse_rational(beta)?)?)
}

fn builtin_catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "triangle".into(),
            matroid: RankOracle::graphic(fixtures::triangle()),
        },
        CatalogEntry {
            name: "U(2,3)".into(),
            matroid: RankOracle::uniform(2, 3),
        },
        CatalogEntry {
            name: "U(2,4)".into(),
            matroid: RankOracle::uniform(2, 4),
        },
        CatalogEntry {
            name: "figure1".into(),
            matroid: RankOracle::graphic(fixtures::figure1()),
        },
        CatalogEntry {
            name: "M1".into(),
            matroid: fixtures::example61_m1(),
        },
        CatalogEntry {
            name: "M2".into(),
            matroid: fixtures::example61_m2(),
        },
    ]
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Chromatic { graph, weight } => {
            let (g, s) = load_graph(&graph)?;
            let f = parse_weight(&weight, g.original_edge_count())?;
            let p = chromatic_direct(&g, &s, &f)?;
            print_poly(format, "chi_f", &p);
            Ok(true)
        }
        Command::Tutte { instance, weight } => {
            let (inst, s) = load_instance(&instance)?;
            let m = inst.as_matroid();
            let f = parse_weight(&weight, m.original_size())?;
            let p = tutte_direct(&m, &s, &f)?;
            print_poly(format, "T_f", &p);
            Ok(true)
        }
        Command::Tg {
            graph,
            weight,
            alpha,
            beta,
        } => {
            let (g, s) = load_graph(&graph)?;
            let f = parse_weight(&weight, g.original_edge_count())?;
            let params = parse_params(&alpha, &beta)?;
            print_poly(format, "Phi_f", &tg_phi(&g, &s, &f, &params)?);
            print_poly(format, "P_f", &tg_p(&g, &s, &f, &params)?);
            Ok(true)
        }
        Command::Invariant {
            instance,
            weight,
            kind,
            alpha,
            beta,
            method,
        } => {
            let (inst, _) = load_instance(&instance)?;
            let f = parse_weight(&weight, inst.ground_size())?;
            let kind = match kind {
                KindArg::Chromatic => InvariantKind::Chromatic,
                KindArg::Tutte => InvariantKind::Tutte,
                KindArg::Tg => {
                    let (a, b) = (alpha.as_deref(), beta.as_deref());
                    let (a, b) = (
                        a.ok_or_else(|| anyhow!("--alpha required for tg"))?,
                        b.ok_or_else(|| anyhow!("--beta required for tg"))?,
                    );
                    InvariantKind::TG(parse_params(a, b)?)
                }
            };
            let report = match method {
                MethodArg::Closed => invariant_closed_form(&inst, &f, &kind)?,
                MethodArg::LabelSum => invariant_label_sum(&inst, &f, &kind)?,
            };
            print_poly(format, "invariant", &report.polynomial);
            if format == Format::Text {
                println!(
                    "method = {}; scale = n! = {}",
                    match report.method {
                        Method::ClosedForm => "closed form",
                        Method::LabelSum => "label sum",
                    },
                    format_rational(&report.n_factorial)
                );
            }
            Ok(true)
        }
        Command::Categorify {
            graph,
            weight,
            complex,
        } => {
            let (g, s) = load_graph(&graph)?;
            let f = parse_weight(&weight, g.original_edge_count())?;
            let kind = match complex {
                ComplexArg::Chromatic => ComplexKind::Chromatic,
                ComplexArg::Tutte => ComplexKind::Tutte,
            };
            let cx = build_complex(&g, &s, kind)?;
            let fq = fqdim_complex(&cx, &f)?;
            let dd_zero = cx.composition_is_zero()?;
            match format {
                Format::Text => {
                    for (q, p) in fq.iter().enumerate() {
                        println!("fqdim(C^{q}) = {p}");
                    }
                    println!("d∘d = 0: {dd_zero}");
                    println!("euler = {}", cx.euler_via_cochain());
                }
                Format::Json => {
                    let levels: Vec<serde_json::Value> =
                        fq.iter().map(|p| p.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "fqdim": levels,
                            "d_squared_zero": dd_zero,
                            "euler": cx.euler_via_cochain().to_json(),
                        })
                    );
                }
            }
            Ok(dd_zero)
        }
        Command::HarmonicBasis { n, d } => {
            let basis = harmonic_basis(n, d);
            match format {
                Format::Text => {
                    println!("dim Harm_{d}({n}) = {}", basis.len());
                    for (i, f) in basis.iter().enumerate() {
                        println!("basis {}: {}", i + 1, f.to_json());
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> =
                        basis.iter().map(|f| f.to_json()).collect();
                    println!("{}", serde_json::json!({ "dimension": basis.len(), "basis": items }));
                }
            }
            Ok(true)
        }
        Command::Search => {
            let report = distinguishing_pair_search(&builtin_catalog());
            match format {
                Format::Text => {
                    for (a, b, d) in &report.distinguished {
                        println!("distinguished: {a} vs {b} at degree {d}");
                    }
                    for (a, b) in &report.agreeing {
                        println!("agreeing: {a} vs {b} (equal classical Tutte, all degrees agree)");
                    }
                    if report.distinguished.is_empty() && report.agreeing.is_empty() {
                        println!("no catalog pair shares a classical Tutte polynomial");
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "distinguished": report.distinguished,
                            "agreeing": report.agreeing,
                        })
                    );
                }
            }
            Ok(true)
        }
        Command::Check { target } => run_check(&target, format),
        Command::Verify { target } => {
            let results = match target.as_str() {
                "thm4.3" => vec![check_theorem_4_3()],
                "thm5.2" => vec![check_theorem_5_2(cli.seed)],
                "all" => verify_all(cli.seed),
                other => bail!("unknown verify target `{other}` (thm4.3, thm5.2, all)"),
            };
            Ok(print_checks(format, &results))
        }
    }
}

fn run_check(target: &str, format: Format) -> Result<bool> {
    match target {
        "example6.1" => {
            let cmp = wtg_core::invariants::example_6_1_check();
            match format {
                Format::Text => {
                    println!(
                        "classical Tutte polynomials equal: {}",
                        cmp.classical_equal
                    );
                    for (d, equal) in &cmp.weighted_equal {
                        println!("degree {d}: invariants equal: {equal}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "classical_equal": cmp.classical_equal,
                        "weighted_equal": cmp.weighted_equal,
                    })
                ),
            }
            Ok(cmp.classical_equal && cmp.all_weighted_equal())
        }
        "example6.2" => {
            let f = WeightFn::ones(10, 4);
            for (name, g) in [("G1", fixtures::figure2_g1()), ("G2", fixtures::figure2_g2())] {
                let report =
                    invariant_closed_form(&Instance::Graph(g), &f, &InvariantKind::Chromatic)?;
                print_poly(format, name, &report.per_label());
            }
            Ok(print_checks(format, &[check_example_6_2()]))
        }
        "logconcavity" => {
            let f = WeightFn::ones(10, 4);
            for (name, g) in [("G1", fixtures::figure2_g1()), ("G2", fixtures::figure2_g2())] {
                let report =
                    invariant_closed_form(&Instance::Graph(g), &f, &InvariantKind::Chromatic)?;
                let verdict = log_concavity_check(&report.polynomial)?;
                if format == Format::Text {
                    match verdict {
                        LogConcavity::Holds => println!("{name}: log-concave"),
                        LogConcavity::Violated(i) => {
                            println!("{name}: violated at index {i}")
                        }
                    }
                }
            }
            Ok(print_checks(format, &[check_log_concavity()]))
        }
        other => bail!("unknown check target `{other}` (example6.1, example6.2, logconcavity)"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_specs_parse() {
        assert_eq!(parse_weight("ones:2", 4).unwrap().d(), 2);
        let f = parse_weight("basis:hom:1:1", 4).unwrap();
        assert_eq!(f.d(), 1);
        assert!(parse_weight("basis:harm:1:1", 4).unwrap().is_harmonic());
        assert!(parse_weight("basis:harm:1:99", 4).is_err());
        assert!(parse_weight("nope", 4).is_err());
    }

    #[test]
    fn labels_parse() {
        assert!(parse_label(Some("[4,1,2,3]"), 4).is_ok());
        assert!(parse_label(Some("[1,1,2,3]"), 4).is_err());
        assert!(parse_label(Some("[1,2]"), 4).is_err());
        assert_eq!(parse_label(None, 3).unwrap(), EdgeLabel::identity(3));
    }
}
