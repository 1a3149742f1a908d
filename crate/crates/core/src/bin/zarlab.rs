use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use zarlab::dehn::solve;
use zarlab::harness::{self, SuiteReport};
use zarlab::presentation::{relator, GenericPresentation, Lambda, Params, SIXTH};
use zarlab::word::Word;
use zarlab::word_maps::GroupPolynomial;

#[derive(Parser)]
#[command(
    name = "zarlab",
    version,
    about = "Small-cancellation word problems and Zariski word-map checks"
)]
struct Cli {
    /// One JSON object per result on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; rely on the exit code.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relator w_i.
    Relator {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        index: u32,
    },
    /// Piece analysis and the C'(λ) condition.
    ScCheck(ScCheck),
    /// Decide whether a word is trivial.
    Solve(Solve),
    /// Evaluate a word map at a point.
    Eval {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Verification suites over Γ(k).
    Verify {
        #[command(subcommand)]
        suite: Verify,
    },
    /// The monomial semigroup with zero.
    Sgp {
        #[command(subcommand)]
        suite: Sgp,
    },
}

#[derive(Args)]
struct ScCheck {
    #[arg(long, conflicts_with = "presentation")]
    k: Option<u32>,
    #[arg(long, conflicts_with = "presentation")]
    max_index: Option<u32>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    presentation: Option<String>,
}

#[derive(Args)]
struct Solve {
    #[arg(long, conflicts_with = "presentation")]
    k: Option<u32>,
    #[arg(long)]
    word: String,
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    presentation: Option<String>,
}

#[derive(Subcommand)]
enum Verify {
    /// P(x_i) = 1 for every i up to the bound, P(a_{k+1}) != 1.
    Theorem {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_index: u32,
    },
    /// Random positive/negative splits around a fresh letter.
    LemmaDecomposition {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_len: usize,
    },
    /// Positive equations evaluated at a fresh generator.
    Density {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Sgp {
    /// Membership, renaming and projection checks for S.
    VerifyExample {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_index: u32,
    },
}

enum Failure {
    Usage(String),
    Assertion,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> serde_json::Value) {
        if self.json {
            println!("{}", value());
        } else if !self.quiet {
            println!("{}", text());
        }
    }

    fn report(&self, r: &SuiteReport) -> Result<(), Failure> {
        if self.json {
            println!("{}", r.to_json());
        } else if !self.quiet {
            print!("{r}");
        }
        if r.ok() {
            Ok(())
        } else {
            Err(Failure::Assertion)
        }
    }
}

fn load_presentation(path: &str) -> Result<GenericPresentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(text.parse()?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Out {
        json: cli.json,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Relator { k, index } => {
            let w = relator(&Params::new(k)?, index)?;
            out.emit(
                || w.to_string(),
                || json!({ "k": k, "index": index, "relator": w.to_string(), "length": w.len() }),
            );
        }
        Command::ScCheck(args) => {
            let lambda = args
                .lambda
                .as_deref()
                .map(str::parse::<Lambda>)
                .transpose()?;
            match args.presentation {
                Some(path) => {
                    let pres = load_presentation(&path)?;
                    out.report(&harness::run_presentation_check(
                        &pres,
                        lambda.unwrap_or(SIXTH),
                    )?)?;
                }
                None => {
                    let params = Params::new(args.k.unwrap_or(8))?;
                    let mut report = harness::run_sc_check(&params, args.max_index.unwrap_or(20))?;
                    if let Some(l) = lambda {
                        let indices = (1..=args.max_index.unwrap_or(20)).collect();
                        let fam = zarlab::presentation::symmetrized_family(&params, &indices)?;
                        let holds = zarlab::presentation::check_metric_condition(&fam, l)?;
                        report.stats.insert(format!("c_prime_{l}"), holds.into());
                    }
                    out.report(&report)?;
                }
            }
        }
        Command::Solve(args) => {
            let (word, sol, rendered) = match &args.presentation {
                Some(path) => {
                    let pres = load_presentation(path)?;
                    let w = pres.parse_word(&args.word)?;
                    let sol = solve(&w, &pres);
                    let residue = pres.render(&sol.residue);
                    (pres.render(&w), sol, residue)
                }
                None => {
                    let params = Params::new(args.k.unwrap_or(8))?;
                    let w: Word = args.word.parse()?;
                    let sol = solve(&w, &params);
                    let residue = sol.residue.to_string();
                    (w.to_string(), sol, residue)
                }
            };
            let lines = sol.trace.lines();
            out.emit(
                || {
                    let mut s = format!("{}", sol.verdict);
                    if args.trace {
                        for l in &lines {
                            s.push_str(&format!("\n  {l}"));
                        }
                        s.push_str(&format!("\n  residue: {rendered}"));
                    }
                    s
                },
                || json!({ "word": word, "verdict": sol.verdict.to_string(), "residue": rendered, "trace": lines }),
            );
        }
        Command::Eval { k, poly, at } => {
            let params = Params::new(k)?;
            let p: GroupPolynomial = poly.parse()?;
            let x: Word = at.parse()?;
            let value = p.eval(&x);
            let sol = solve(&value, &params);
            let identity = sol.verdict == zarlab::dehn::Verdict::Identity;
            out.emit(
                || format!("{value}\nW(x) = 1: {identity}"),
                || json!({ "poly": p.to_string(), "at": x.to_string(), "value": value.to_string(), "identity": identity }),
            );
        }
        Command::Verify { suite } => {
            let report = match suite {
                Verify::Theorem { k, max_index } => {
                    harness::run_theorem_check(&Params::new(k)?, max_index)?
                }
                Verify::LemmaDecomposition {
                    k,
                    m,
                    trials,
                    seed,
                    max_len,
                } => harness::run_lemma_decomposition_suite(
                    &Params::new(k)?,
                    m,
                    trials,
                    seed,
                    max_len,
                )?,
                Verify::Density { k, trials, seed } => {
                    harness::run_density_suite(&Params::new(k)?, trials, seed)?
                }
            };
            out.report(&report)?;
        }
        Command::Sgp {
            suite:
                Sgp::VerifyExample {
                    trials,
                    seed,
                    max_index,
                },
        } => {
            out.report(&harness::run_example_suite(trials, seed, max_index)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            if !quiet {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
    }
}
