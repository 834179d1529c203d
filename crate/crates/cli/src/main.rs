use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grder_core::derivation::{self, outer_vanishing_check};
use grder_core::groups::construct_group;
use grder_core::oracle;
use grder_core::report::{self, ApplyDocument, CriteriaDocument, SCHEMA_VERSION};
use grder_core::{Error, GroupRing, GroupSpec, Limits, RingSpec};
use serde::Serialize;

const EXIT_SPEC: u8 = 2;
const EXIT_SIZE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// Derivations of finite group rings.
#[derive(Parser, Debug)]
#[command(name = "grder", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inner basis, outer generators and module structure of Der(A[G]).
    Report {
        #[command(flatten)]
        specs: Specs,
        #[command(flatten)]
        format: Format,
        /// Include the matrices of the inner basis.
        #[arg(long)]
        matrices: bool,
    },
    /// Outer-vanishing criteria; the ring may be `Integers`.
    Check {
        #[command(flatten)]
        specs: Specs,
        #[command(flatten)]
        format: Format,
    },
    /// Cross-check the report against the brute-force solver.
    Verify {
        #[command(flatten)]
        specs: Specs,
        #[command(flatten)]
        format: Format,
    },
    /// Graphviz rendering of the adjoint-action groupoid.
    ExportGroupoid {
        /// Group, e.g. S3, C4, dihedral:3, S3xC2 or a JSON spec.
        #[arg(long)]
        group: String,
        /// Keep loops in the output.
        #[arg(long)]
        loops: bool,
        /// Override the group-order caps.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply a derivation to an element of A[G].
    Apply {
        #[command(flatten)]
        specs: Specs,
        #[command(flatten)]
        format: Format,
        /// `ad:NAME` for an inner derivation, `outer:K` for the K-th outer
        /// generator of the report (1-based).
        #[arg(long)]
        derivation: String,
        /// JSON object from element names to integer coefficients.
        #[arg(long)]
        element: String,
    },
}

#[derive(Args, Debug)]
struct Specs {
    /// Group, e.g. S3, C4, dihedral:3, S3xC2 or a JSON spec.
    #[arg(long)]
    group: String,
    /// Ring, e.g. Z4, Zm:4, GF:2:2, Z2xZ3, Integers or a JSON spec.
    #[arg(long)]
    ring: String,
    /// Override the group-order caps (defaults 64, and 24 for verify).
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Format {
    /// JSON output (default).
    #[arg(long)]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    text: bool,
}

#[derive(Debug)]
enum Failure {
    Spec(String),
    Size(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_size_limit() {
            Failure::Size(e.to_string())
        } else {
            Failure::Spec(e.to_string())
        }
    }
}

fn limits(limit: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = limit {
        l.max_group_order = n;
        l.max_oracle_group_order = n;
    }
    l
}

fn parse_specs(specs: &Specs) -> Result<(GroupSpec, RingSpec), Failure> {
    Ok((specs.group.parse()?, specs.ring.parse()?))
}

fn build(specs: &Specs) -> Result<(GroupSpec, RingSpec, GroupRing), Failure> {
    let (g, r) = parse_specs(specs)?;
    let gr = GroupRing::from_specs(&g, &r, &limits(specs.limit))?;
    Ok((g, r, gr))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable document");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Report {
            specs,
            format,
            matrices,
        } => {
            let (g, r, gr) = build(&specs)?;
            let rep = derivation::derivation_module_report(&gr)?;
            let doc = report::report_document(&gr, &g, &r, &rep, matrices);
            Ok(if format.text {
                report::render_text(&doc)
            } else {
                to_json(&doc)
            })
        }
        Command::Check { specs, format } => {
            let (g, r) = parse_specs(&specs)?;
            let l = limits(specs.limit);
            let group = construct_group(&g, l.max_group_order)?;
            let criteria = outer_vanishing_check(&group, &r, l.max_ring_size)?;
            let doc = CriteriaDocument {
                schema_version: SCHEMA_VERSION,
                group: g,
                ring: r,
                criteria,
            };
            Ok(if format.text {
                report::render_criteria_text(&doc)
            } else {
                to_json(&doc)
            })
        }
        Command::Verify { specs, format } => {
            let (g, r, gr) = build(&specs)?;
            let l = limits(specs.limit);
            let sol = oracle::solve_all_derivations(&gr, &l)?;
            let rep = derivation::derivation_module_report(&gr)?;
            let verdict = oracle::compare(&gr, &rep, &sol);
            let doc = report::verify_document(&g, &r, verdict, rep.criteria);
            let out = if format.text {
                report::render_verify_text(&doc)
            } else {
                to_json(&doc)
            };
            if doc.passed {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verify("verification failed".into()))
            }
        }
        Command::ExportGroupoid {
            group,
            loops,
            limit,
        } => {
            let g: GroupSpec = group.parse()?;
            let fg = construct_group(&g, limits(limit).max_group_order)?;
            // the groupoid only needs the group; any ring will do
            let gr = GroupRing::new(fg, grder_core::FiniteRing::zm(2));
            Ok(grder_core::groupoid::to_dot(&gr, loops))
        }
        Command::Apply {
            specs,
            format,
            derivation: which,
            element,
        } => {
            let (_, _, gr) = build(&specs)?;
            let d = select_derivation(&gr, &which)?;
            let x = parse_element(&gr, &element)?;
            let y = derivation::apply(&gr, &d, &x);
            if format.text {
                return Ok(format!("{}\n", gr.display(&y)));
            }
            let doc = ApplyDocument {
                schema_version: SCHEMA_VERSION,
                derivation: which,
                element: report::element_map(&gr, &x.coeffs),
                result: report::element_map(&gr, &y.coeffs),
            };
            Ok(to_json(&doc))
        }
    }
}

fn select_derivation(gr: &GroupRing, which: &str) -> Result<derivation::Derivation, Failure> {
    let bad = || {
        Failure::Spec(format!(
            "derivation must be ad:NAME or outer:K, got {which:?}"
        ))
    };
    let (kind, arg) = which.split_once(':').ok_or_else(bad)?;
    match kind {
        "ad" => {
            let a = gr
                .group()
                .index_of(arg)
                .ok_or_else(|| Failure::from(Error::UnknownElement(arg.into())))?;
            Ok(derivation::ad(gr, a))
        }
        "outer" => {
            let k: usize = arg.parse().map_err(|_| bad())?;
            let rep = derivation::derivation_module_report(gr)?;
            let count = rep.out_generators.len();
            rep.out_generators
                .into_iter()
                .nth(k.wrapping_sub(1))
                .map(|o| o.derivation)
                .ok_or_else(|| {
                    Failure::Spec(format!("outer generator {k} out of range 1..={count}"))
                })
        }
        _ => Err(bad()),
    }
}

fn parse_element(gr: &GroupRing, text: &str) -> Result<grder_core::GroupRingElement, Failure> {
    let map: BTreeMap<String, i64> = serde_json::from_str(text)
        .map_err(|e| Failure::Spec(format!("element must be a JSON object: {e}")))?;
    let mut x = gr.zero();
    for (name, c) in map {
        let g = gr
            .group()
            .index_of(&name)
            .ok_or_else(|| Failure::from(Error::UnknownElement(name.clone())))?;
        x.coeffs[g] = gr.ring().add(x.coeffs[g], gr.ring().from_int(c));
    }
    Ok(x)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Spec(m) => (EXIT_SPEC, m),
                Failure::Size(m) => (EXIT_SIZE, m),
                Failure::Verify(m) => (EXIT_VERIFY, m),
            };
            eprintln!("grder: {msg}");
            ExitCode::from(code)
        }
    }
}
