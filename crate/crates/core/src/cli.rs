//! The `lattice-vote` command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::format;
use crate::lattice::Lattice;
use crate::preorder::{enumerate_lsu, enumerate_separable, enumerate_topped_preorders, enumerate_unimodal};
use crate::rules::Rule;
use crate::verify::{
    find_coalitional_manipulation, is_b_monotonic, is_strategy_proof, suites, Domain, Semantics,
    VerificationReport, VerifyOptions, DEFAULT_EVAL_CAP,
};

#[derive(Parser, Debug)]
#[command(name = "lattice-vote", version, about = "Voting rules on finite distributive lattices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Write the JSON result to this path instead of printing text.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Maximum number of rule evaluations a single check may perform.
    #[arg(long, global = true, default_value_t = DEFAULT_EVAL_CAP)]
    cap: u128,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = SemanticsArg::Truthful)]
    semantics: SemanticsArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    Truthful,
    Literal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build or describe lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Enumerate or classify preferences.
    #[command(subcommand)]
    Prefs(PrefsCmd),
    /// Evaluate, convert or check voting rules.
    #[command(subcommand)]
    Rule(RuleCmd),
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
        suite: String,
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        voters: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// Print a lattice file for a standard construction.
    Build {
        #[arg(long, group = "kind")]
        chain: Option<usize>,
        #[arg(long, group = "kind")]
        boolean: Option<usize>,
        /// Product of two lattice files.
        #[arg(long, group = "kind", num_args = 2, value_names = ["A", "B"])]
        product: Option<Vec<PathBuf>>,
        /// Re-export a lattice file in canonical order.
        #[arg(long, group = "kind")]
        from: Option<PathBuf>,
    },
    /// Describe a lattice file.
    Inspect {
        #[arg(long)]
        lattice: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PrefDomain {
    Topped,
    Unimodal,
    Strict,
    Separable,
}

#[derive(Subcommand, Debug)]
enum PrefsCmd {
    /// List every preorder of a domain.
    Enum {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, value_enum, default_value_t = PrefDomain::Unimodal)]
        domain: PrefDomain,
        /// Only preorders with this top.
        #[arg(long)]
        top: Option<String>,
    },
    /// Classify the preorders in a file.
    Check {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        prefs: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleKind {
    Committee,
    Tree,
    Explicit,
}

#[derive(Subcommand, Debug)]
enum RuleCmd {
    Eval {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        rule: PathBuf,
        /// Comma-separated element names, one per voter.
        #[arg(long)]
        ballots: String,
    },
    Convert {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        rule: PathBuf,
        #[arg(long, value_enum)]
        to: RuleKind,
    },
    /// Monotonicity, strategy-proofness and coalitional manipulation.
    Check {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        rule: PathBuf,
        /// Preorders every voter may hold, instead of the full domains.
        #[arg(long)]
        prefs: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_lattice(path: &Path) -> Result<Lattice, Failure> {
    format::parse_lattice(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_rule(path: &Path, l: &Lattice) -> Result<Rule, Failure> {
    format::parse_rule(&read(path)?, l).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// Runs the command line and returns the exit status: 0 when every check
/// passes, 1 when a check fails, 2 on usage, input or validation errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

enum Output {
    Text(String),
    Json(serde_json::Value),
    Report(VerificationReport),
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    let c = &cli.common;
    let opts = VerifyOptions {
        workers: c.workers.max(1),
        cap: c.cap,
        semantics: match c.semantics {
            SemanticsArg::Truthful => Semantics::Truthful,
            SemanticsArg::Literal => Semantics::Literal,
        },
        seed: c.seed,
    };
    let out = match &cli.command {
        Command::Lattice(cmd) => lattice_cmd(cmd)?,
        Command::Prefs(cmd) => prefs_cmd(cmd)?,
        Command::Rule(cmd) => rule_cmd(cmd, &opts)?,
        Command::Verify { suite, lattice, voters, samples } => {
            let l = lattice.as_deref().map(load_lattice).transpose()?;
            Output::Report(suites::run(suite, l.as_ref(), *voters, *samples, &opts)?)
        }
    };
    let (code, text, value) = match out {
        Output::Text(t) => (0, t, json!(null)),
        Output::Json(v) => (0, serde_json::to_string_pretty(&v)? + "\n", v),
        Output::Report(r) => (if r.passed() { 0 } else { 1 }, r.to_text(), r.to_json()),
    };
    match &c.json {
        Some(path) => {
            let v = if value.is_null() { serde_json::from_str(&text).unwrap_or(json!(text)) } else { value };
            fs::write(path, serde_json::to_string_pretty(&v)? + "\n")
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        }
        None => print!("{text}"),
    }
    Ok(code)
}

fn lattice_cmd(cmd: &LatticeCmd) -> Result<Output, Failure> {
    match cmd {
        LatticeCmd::Build { chain, boolean, product, from } => {
            let l = match (chain, boolean, product, from) {
                (Some(m), ..) => Lattice::chain(*m)?,
                (_, Some(k), ..) => Lattice::boolean(*k)?,
                (_, _, Some(p), _) => Lattice::product(&load_lattice(&p[0])?, &load_lattice(&p[1])?)?,
                (.., Some(path)) => load_lattice(path)?,
                _ => return Err(Failure("give one of --chain, --boolean, --product or --from".into())),
            };
            Ok(Output::Text(format::lattice_to_json(&l)))
        }
        LatticeCmd::Inspect { lattice } => {
            let l = load_lattice(lattice)?;
            let names = |xs: &[crate::lattice::ElementId]| xs.iter().map(|&x| l.name(x).to_string()).collect::<Vec<_>>();
            Ok(Output::Json(json!({
                "size": l.size(),
                "bottom": l.name(l.bottom()),
                "top": l.name(l.top()),
                "atoms": names(l.atoms()),
                "join_irreducibles": names(l.join_irreducibles()),
                "chain": l.is_chain(),
                "boolean_dimension": l.hypercube_dimension(),
                "rank": l.rank_valuation().values(),
            })))
        }
    }
}

fn prefs_cmd(cmd: &PrefsCmd) -> Result<Output, Failure> {
    match cmd {
        PrefsCmd::Enum { lattice, domain, top } => {
            let l = load_lattice(lattice)?;
            let all = match domain {
                PrefDomain::Topped => enumerate_topped_preorders(&l)?,
                PrefDomain::Unimodal => enumerate_unimodal(&l)?,
                PrefDomain::Strict => enumerate_lsu(&l)?,
                PrefDomain::Separable => enumerate_separable(&l)?,
            };
            let top = top.as_deref().map(|t| l.element(t)).transpose()?;
            let listed: Vec<_> = all.iter().filter(|p| top.map_or(true, |t| p.top() == t)).collect();
            let mut text = String::new();
            for p in &listed {
                text += &p.display(&l);
                text.push('\n');
            }
            text += &format!("{} preorders\n", listed.len());
            Ok(Output::Text(text))
        }
        PrefsCmd::Check { lattice, prefs } => {
            let l = load_lattice(lattice)?;
            let ps = format::parse_preorders(&read(prefs)?, &l)?;
            let hyper = l.hypercube_dimension().is_some();
            let rows = ps
                .iter()
                .map(|p| {
                    Ok(json!({
                        "preorder": p.display(&l),
                        "top": l.name(p.top()),
                        "unimodal": p.is_unimodal(&l)?,
                        "locally_strictly_unimodal": p.is_locally_strictly_unimodal(&l)?,
                        "separable": if hyper { json!(p.is_separable(&l)?) } else { json!(null) },
                    }))
                })
                .collect::<Result<Vec<_>, crate::error::PreorderError>>()?;
            Ok(Output::Json(json!(rows)))
        }
    }
}

fn rule_cmd(cmd: &RuleCmd, opts: &VerifyOptions) -> Result<Output, Failure> {
    match cmd {
        RuleCmd::Eval { lattice, rule, ballots } => {
            let l = load_lattice(lattice)?;
            let f = load_rule(rule, &l)?;
            let b = format::parse_ballots(ballots, &l)?;
            Ok(Output::Text(format!("{}\n", l.name(f.eval(&l, &b)?))))
        }
        RuleCmd::Convert { lattice, rule, to } => {
            let l = load_lattice(lattice)?;
            let f = load_rule(rule, &l)?;
            let g = match to {
                RuleKind::Committee => Rule::from(f.to_committee(&l)?),
                RuleKind::Tree => Rule::from(f.to_tree(&l)?),
                RuleKind::Explicit => Rule::from(f.tabulate(&l)?),
            };
            Ok(Output::Text(format::rule_to_json(&l, &g)? + "\n"))
        }
        RuleCmd::Check { lattice, rule, prefs } => {
            let l = load_lattice(lattice)?;
            let f = load_rule(rule, &l)?.tabulate(&l)?;
            let n = f.voters();
            let domains = match prefs {
                Some(p) => {
                    let ps = format::parse_preorders(&read(p)?, &l)?;
                    vec![("the given domain", Domain::custom(vec![ps; n]).restrict_to(&f))]
                }
                None => vec![
                    ("the full unimodal domain", Domain::full_unimodal(&l, n)?.restrict_to(&f)),
                    ("the full strict domain", Domain::full_lsu(&l, n)?.restrict_to(&f)),
                ],
            };
            let mut r = VerificationReport::new(format!("rule check {}", rule.display()));
            r.check("monotonic", is_b_monotonic(&f, &l, opts)?.witness().map(|w| w.to_json(&l)));
            for (tag, d) in &domains {
                let sp = is_strategy_proof(&f, d, &l, opts)?;
                r.check(format!("strategy-proof on {tag}"), sp.witness().map(|w| w.to_json(&l)));
                let w = find_coalitional_manipulation(&f, d, &l, opts)?;
                r.check(format!("coalitionally strategy-proof on {tag}"), w.map(|w| w.to_json(&l)));
            }
            Ok(Output::Report(r.finish()))
        }
    }
}
