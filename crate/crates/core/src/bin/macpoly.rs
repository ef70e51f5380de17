use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use macpoly::fillings::{enumerate_naf, filling_stats, term_weight};
use macpoly::macdonald::{hhl_polynomial, partial_p};
use macpoly::verify::{run_suite, BasementMode, Checker, SweepBounds};
use macpoly::{Composition, Perm, Result, XPoly};

#[derive(Parser)]
#[command(name = "macpoly", version, about = "Nonsymmetric Macdonald polynomials with permuted basements")]
struct Cli {
    /// Perturb one coefficient of every left-hand side (harness self-test).
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute E_μ^π or P_{λ|γ}.
    #[command(subcommand)]
    Compute(Compute),
    /// List the non-attacking fillings of a shape over a basement.
    Fillings {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        basement: Option<Perm>,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        tikz: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check one instance of an identity.
    #[command(subcommand)]
    Verify(Verify),
    /// Check every identity over bounded shapes and basements.
    Suite {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        deg_max: u32,
        /// Sample basements with this seed instead of taking all of them.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 4, requires = "seed")]
        samples: usize,
        #[arg(long, conflicts_with = "seed")]
        concatenated_only: bool,
    },
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "latex")]
    json: bool,
    #[arg(long)]
    latex: bool,
}

#[derive(Subcommand)]
enum Compute {
    /// E_μ^π from fillings (identity basement by default).
    E {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        basement: Option<Perm>,
        #[command(flatten)]
        format: Format,
    },
    /// P_{λ|γ}.
    P {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Composition,
        #[arg(long, default_value = "")]
        gamma: Composition,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Verify {
    Cl {
        #[arg(long)]
        lambda: Composition,
        #[arg(long, default_value = "")]
        gamma: Composition,
    },
    Complement {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        pi1: Perm,
        #[arg(long)]
        pi2: Option<Perm>,
        #[arg(long)]
        allow_empty_pi2: bool,
    },
    Kl {
        #[arg(long, default_value = "")]
        lambda: Composition,
        #[arg(long, default_value = "")]
        gamma: Composition,
    },
    Hhl {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        basement: Perm,
    },
    Eigen {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        m: usize,
    },
    Comb {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        m: usize,
    },
}

fn print_poly(p: &XPoly, format: &Format) {
    if format.json {
        println!("{}", serde_json::to_string(p).expect("serializable"));
    } else if format.latex {
        println!("{}", p.to_latex());
    } else {
        println!("{p}");
    }
}

fn basement_or_identity(b: Option<Perm>, n: usize) -> Perm {
    b.unwrap_or_else(|| Perm::identity(1, n))
}

fn run(cli: Cli) -> Result<u8> {
    let checker = if cli.inject_fault { Checker::with_fault() } else { Checker::new() };
    match cli.command {
        Command::Compute(Compute::E { mu, basement, format }) => {
            let pi = basement_or_identity(basement, mu.len());
            print_poly(&hhl_polynomial(&mu, &pi)?, &format);
        }
        Command::Compute(Compute::P { lambda, gamma, format }) => {
            print_poly(&partial_p(&lambda, &gamma)?, &format);
        }
        Command::Fillings { mu, basement, stats, tikz, json } => {
            let pi = basement_or_identity(basement, mu.len());
            for f in enumerate_naf(&mu, &pi)? {
                if json {
                    let mut v = json!({ "filling": f });
                    if stats {
                        let (exp, coeff) = term_weight(&f);
                        v["stats"] = json!(filling_stats(&f));
                        v["weight"] = json!({ "exp": exp, "coeff": coeff });
                    }
                    println!("{v}");
                    continue;
                }
                println!("{f}");
                if stats {
                    let s = filling_stats(&f);
                    println!(
                        "maj={} inv={} coinv={} |Inv|={} maj'={} coinv'={}",
                        s.maj, s.inv, s.coinv, s.inv_set_size, s.maj_prime, s.coinv_prime
                    );
                    println!("weight={}", term_weight(&f).1);
                }
                if tikz {
                    print!("{}", f.to_tikz());
                }
                println!();
            }
        }
        Command::Verify(v) => {
            let report = match v {
                Verify::Cl { lambda, gamma } => checker.cl(&lambda, &gamma)?,
                Verify::Kl { lambda, gamma } => checker.kl(&lambda, &gamma)?,
                Verify::Complement { mu, pi1, pi2, allow_empty_pi2 } => {
                    let pi2 = pi2.unwrap_or_else(|| Perm::identity(pi1.len() + 1, 0));
                    if allow_empty_pi2 {
                        checker.complement_allow_empty(&mu, &pi1, &pi2)?
                    } else {
                        checker.complement(&mu, &pi1, &pi2)?
                    }
                }
                Verify::Hhl { mu, basement } => checker.hhl_vs_hecke(&mu, &basement)?,
                Verify::Eigen { mu, m } => checker.eigen(&mu, m)?,
                Verify::Comb { mu, m } => checker.combinatorial(&mu, m)?,
            };
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            return Ok(if report.holds() { 0 } else { 1 });
        }
        Command::Suite { n_max, deg_max, seed, samples, concatenated_only } => {
            let mode = match (seed, concatenated_only) {
                (Some(seed), _) => BasementMode::Sampled { seed, count: samples },
                (None, true) => BasementMode::ConcatenatedOnly,
                (None, false) => BasementMode::All,
            };
            let summary = run_suite(&SweepBounds::new(n_max, deg_max, mode)?, &checker);
            for c in &summary.counts {
                println!("{}", serde_json::to_string(c).expect("serializable"));
            }
            println!("{}", json!({ "summary": summary }));
            return Ok(summary.exit_code as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
