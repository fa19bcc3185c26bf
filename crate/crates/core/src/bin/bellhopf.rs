use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bellhopf::bell::{bell, bell_enum, bell_tilde, BellQuery};
use bellhopf::hopf::{AlgebraElement, AlgebraId};
use bellhopf::operator::{apply_poly, as_multiplication, c_nk};
use bellhopf::partition::{f_table, g_table, generate_s};
use bellhopf::render::{self, Style};
use bellhopf::series::Truncation;
use bellhopf::verify::{self, Cor2Form, VerificationReport};

#[derive(Parser)]
#[command(name = "bellhopf", version, about = "r-Bell polynomials in Sym2, NCSF2 and WSym2")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Worker threads for verification sweeps.
    #[arg(long, env = "BELLHOPF_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Alg {
    Sym2,
    Ncsf2,
    Wsym2,
}

impl From<Alg> for AlgebraId {
    fn from(a: Alg) -> Self {
        match a {
            Alg::Sym2 => AlgebraId::Sym2,
            Alg::Ncsf2 => AlgebraId::NCSF2,
            Alg::Wsym2 => AlgebraId::WSym2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Operator,
    Enum,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Theorem1,
    Theorem1Circ,
    Cor2,
    Binomial,
    AbRemark,
    Stirling,
    Zassenhaus,
    CnkClosed,
    Primitivity,
    Routes,
    Counts,
    Hopf,
}

#[derive(Args)]
struct Rnk {
    #[arg(short, default_value_t = 0)]
    r: u32,
    #[arg(short, default_value_t = 0)]
    n: u32,
    #[arg(short, default_value_t = 0)]
    k: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Compute B^r (or B~^r with --tilde).
    Bell {
        #[arg(long, value_enum, default_value_t = Alg::Ncsf2)]
        alg: Alg,
        #[command(flatten)]
        rnk: Rnk,
        #[arg(long)]
        tilde: bool,
        #[arg(long, value_enum, default_value_t = Route::Operator)]
        route: Route,
        /// Print Sym2/NCSF2 keys as products of a_i, b_i.
        #[arg(long)]
        generators: bool,
    },
    /// List the bicolored set partitions indexing B^r.
    Enumerate {
        #[command(flatten)]
        rnk: Rnk,
        #[arg(long)]
        count_only: bool,
        /// Print the composition and partition shape counts instead.
        #[arg(long)]
        shapes: bool,
    },
    /// Check an identity; exits 0 exactly when it holds.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long, value_enum)]
        alg: Option<Alg>,
        #[arg(long)]
        nx: Option<u32>,
        #[arg(long)]
        ny: Option<u32>,
        #[arg(long)]
        nt: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        rmax: Option<u32>,
        #[arg(long)]
        kmax: Option<u32>,
        /// Weight bound for checks by action on basis keys.
        #[arg(long)]
        weight: Option<u32>,
        /// Largest r+n for the brute-force part of `counts`.
        #[arg(long)]
        brute: Option<u32>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the printed closed form of cor2 without the x^i factor.
        #[arg(long)]
        literal: bool,
    },
    /// The operator c_{n,k}, and the element it multiplies by when it is one.
    Cnk {
        n: u32,
        k: u32,
        #[arg(long, value_enum, default_value_t = Alg::Ncsf2)]
        alg: Alg,
        #[arg(long, default_value_t = 4)]
        bound: u32,
        #[arg(long)]
        generators: bool,
    },
}

fn render_element(e: &AlgebraElement, format: Format, generators: bool) -> String {
    match (format, generators) {
        (Format::Json, _) => serde_json::to_string(e).expect("serializable"),
        (Format::Text, false) => render::element_text(e),
        (Format::Latex, false) => render::element_latex(e),
        (Format::Text, true) => render::element_generators(e, Style::Text),
        (Format::Latex, true) => render::element_generators(e, Style::Latex),
    }
}

fn render_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("serializable"),
        _ => render::report_text(r, 10).trim_end().to_string(),
    }
}

/// Runs a command, returning its output and whether it succeeded.
fn run(cli: &Cli) -> bellhopf::Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Command::Bell { alg, rnk, tilde, route, generators } => {
            let q = BellQuery::new((*alg).into(), rnk.r, rnk.n, rnk.k);
            if *tilde {
                return Ok((render_element(&bell_tilde(q), format, *generators), true));
            }
            Ok(match route {
                Route::Operator => (render_element(&bell(q), format, *generators), true),
                Route::Enum => (render_element(&bell_enum(q), format, *generators), true),
                Route::Both => {
                    let (op, en) = (bell(q), bell_enum(q));
                    let agree = op == en;
                    let out = if format == Format::Json {
                        json!({ "operator": op, "enum": en, "agree": agree }).to_string()
                    } else {
                        let verdict = if agree { "routes agree" } else { "routes differ" };
                        format!(
                            "{}\n{}\n{verdict}",
                            render_element(&op, format, *generators),
                            render_element(&en, format, *generators)
                        )
                    };
                    (out, agree)
                }
            })
        }
        Command::Enumerate { rnk, count_only, shapes } => {
            let (r, n, k) = (rnk.r, rnk.n, rnk.k);
            if *shapes {
                let f = f_table(r, n, k);
                let g = g_table(r, n, k);
                let out = if format == Format::Json {
                    let f: Vec<_> = f.iter().map(|(c, m)| json!({ "shape": c, "count": m })).collect();
                    let g: Vec<_> = g.iter().map(|(p, m)| json!({ "shape": p, "count": m })).collect();
                    json!({ "f": f, "g": g }).to_string()
                } else {
                    let mut lines: Vec<String> = f.iter().map(|(c, m)| format!("f {c} {m}")).collect();
                    lines.extend(g.iter().map(|(p, m)| format!("g {p} {m}")));
                    lines.join("\n")
                };
                return Ok((out, true));
            }
            let parts = generate_s(r, n, k);
            let out = match (count_only, format) {
                (true, Format::Json) => json!({ "count": parts.len() }).to_string(),
                (true, _) => parts.len().to_string(),
                (false, Format::Json) => serde_json::to_string(&parts)?,
                (false, _) => parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n"),
            };
            Ok((out, true))
        }
        Command::Verify {
            identity,
            alg,
            nx,
            ny,
            nt,
            nmax,
            rmax,
            kmax,
            weight,
            brute,
            samples,
            seed,
            literal,
        } => {
            let alg_or = |d: AlgebraId| alg.map_or(d, AlgebraId::from);
            let report = match identity {
                Identity::Theorem1 => verify::verify_theorem1(
                    alg_or(AlgebraId::Sym2),
                    Truncation::new(nx.unwrap_or(6), ny.unwrap_or(2), nt.unwrap_or(4)),
                )?,
                Identity::Theorem1Circ => {
                    verify::verify_theorem1_circ(alg_or(AlgebraId::Sym2), nx.unwrap_or(6), nt.unwrap_or(4))?
                }
                Identity::Cor2 => {
                    let x = nx.unwrap_or(8);
                    let form = if *literal { Cor2Form::Literal } else { Cor2Form::Corrected };
                    verify::verify_cor2(Truncation::new(x, 0, nt.unwrap_or(x)), form)?
                }
                Identity::Binomial => {
                    verify::verify_binomial_identity(rmax.unwrap_or(3), nmax.unwrap_or(5), kmax.unwrap_or(4))
                }
                Identity::AbRemark => verify::verify_ab_remark(
                    alg_or(AlgebraId::NCSF2),
                    Truncation::new(nx.unwrap_or(4), ny.unwrap_or(2), nt.unwrap_or(2)),
                ),
                Identity::Stirling => verify::stirling_specializations(nmax.unwrap_or(8)),
                Identity::Zassenhaus => verify::verify_zassenhaus(nmax.unwrap_or(6), weight.unwrap_or(6))?,
                Identity::CnkClosed => verify::verify_cnk_closed(nmax.unwrap_or(6)),
                Identity::Primitivity => {
                    verify::verify_primitivity(alg_or(AlgebraId::NCSF2), nmax.unwrap_or(6), weight.unwrap_or(6))
                }
                Identity::Routes => verify::verify_routes(nmax.unwrap_or(7)),
                Identity::Counts => verify::verify_counts(nmax.unwrap_or(9), brute.unwrap_or(7)),
                Identity::Hopf => verify::verify_hopf(alg_or(AlgebraId::WSym2), weight.unwrap_or(5), *samples, *seed),
            };
            Ok((render_report(&report, format), report.pass))
        }
        Command::Cnk { n, k, alg, bound, generators } => {
            let alg: AlgebraId = (*alg).into();
            let p = c_nk(*n, *k)?;
            let value = apply_poly(&p, &AlgebraElement::one(alg));
            let is_mult = as_multiplication(alg, &p, *bound).is_some();
            let out = match format {
                Format::Json => json!({ "n": n, "k": k, "operator": p, "value": value, "multiplication": is_mult })
                    .to_string(),
                Format::Latex => render_element(&value, format, *generators),
                Format::Text => {
                    let shown = render_element(&value, format, *generators);
                    if is_mult {
                        shown
                    } else {
                        format!("{shown}\n(operator {}; not a multiplication up to weight {bound})", render::poly_text(&p))
                    }
                }
            };
            Ok((out, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("bellhopf: cannot configure {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let (out, ok) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bellhopf: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, format!("{out}\n")),
        None => writeln!(io::stdout().lock(), "{out}"),
    };
    if let Err(e) = written {
        eprintln!("bellhopf: {e}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
