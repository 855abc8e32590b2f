//! `wdrd`: build, verify, classify, transform and search digraphs.
//!
//! Exit codes: 0 success, 1 property does not hold (report still printed),
//! 2 usage or input error, 3 a classification theorem was contradicted.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use wdrd_core::digraph::{coclique_extension, lexicographic_product, multipartite_structure, two_way_partition, Format};
use wdrd_core::family::{builtin_digraph, family1, family2, family3, family4, family5, identify};
use wdrd_core::scheme::{check_lemma21, quotient, verify_scheme, RelationPartition};
use wdrd_core::search::{enumerate_cayley, Predicate, SearchConfig};
use wdrd_core::team::{classify_type, doubly_regular_params, jg14_type2_check, tournament_params};
use wdrd_core::{verify_wdrd, Digraph, DigraphError, Error, VERSION};

#[derive(Parser)]
#[command(name = "wdrd", version, about = "Weakly distance-regular digraph toolkit")]
struct Cli {
    /// Digraph format for input and output.
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Print progress and extra detail on standard error.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Read the digraph from a file (`-` for standard input).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Use a catalog digraph: c3, c4, cay_z6_12, cay_z4_12, paley<q>, complete<m>.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family member or a catalog digraph.
    Gen {
        /// Family number 1-5.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        family: Option<u8>,
        #[arg(long)]
        builtin: Option<String>,
        /// Extension multiplicity (families 1, 3, 4).
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Extension multiplicity of family 2.
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Catalog name of the base digraph (families 2-5).
        #[arg(long)]
        base: Option<String>,
        /// File holding the base digraph (families 2-5).
        #[arg(long, conflicts_with = "base")]
        base_input: Option<PathBuf>,
    },
    /// Weak distance-regularity report.
    Verify(Input),
    /// Attached scheme, intersection numbers and identity checks.
    Scheme(Input),
    /// Double regularity, Type I/II/III and family recognition.
    Classify(Input),
    /// Lexicographic product with a second digraph.
    Product {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "right_builtin", required_unless_present = "right_builtin")]
        right_input: Option<PathBuf>,
        #[arg(long)]
        right_builtin: Option<String>,
    },
    /// Coclique extension `g ∘ K̄_n`.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
    },
    /// Quotient by the closed subset generated by two-way distance labels.
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Labels such as `3,3`; repeat for several. `0,0` is implied.
        #[arg(long, required = true, num_args = 1..)]
        labels: Vec<String>,
    },
    /// Exhaustive abelian Cayley digraph search, one JSON object per line.
    Search {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// default, doubly-regular-team or any-wdrd.
        #[arg(long, default_value = "default")]
        predicate: Predicate,
        /// Skip connection sets whose negation has a smaller mask.
        #[arg(long)]
        reduced: bool,
        /// Maximum number of connection sets to examine.
        #[arg(long, env = "WDRD_BUDGET", default_value_t = wdrd_core::search::DEFAULT_BUDGET,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
}

/// Outcome of a command: text to emit and the exit status.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

enum Failure {
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_theorem_violation() {
            Failure::Violation(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<wdrd_core::DigraphError> for Failure {
    fn from(e: wdrd_core::DigraphError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<wdrd_core::SchemeError> for Failure {
    fn from(e: wdrd_core::SchemeError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_digraph(path: &PathBuf, format: Format) -> Result<Digraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Ok(format.parse(&text)?)
}

fn load(input: &Input, format: Format) -> Result<Digraph, Failure> {
    match (&input.input, &input.builtin) {
        (Some(p), _) => read_digraph(p, format),
        (_, Some(name)) => Ok(builtin_digraph(name)?),
        _ => Err(Failure::Input("one of --input or --builtin is required".into())),
    }
}

fn report(mut v: Value) -> String {
    v["version"] = json!(VERSION);
    serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
}

fn render(g: &Digraph, format: Format) -> String {
    let mut s = format.render(g);
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn gen(
    format: Format,
    family: Option<u8>,
    builtin: &Option<String>,
    n: usize,
    l: usize,
    base: &Option<String>,
    base_input: &Option<PathBuf>,
) -> Result<Outcome, Failure> {
    if let Some(name) = builtin {
        return Ok(Outcome::ok(render(&builtin_digraph(name)?, format)));
    }
    let base = || -> Result<Digraph, Failure> {
        match (base, base_input) {
            (Some(name), _) => Ok(builtin_digraph(name)?),
            (_, Some(p)) => read_digraph(p, format),
            _ => Err(Failure::Input("--base or --base-input required for this family".into())),
        }
    };
    let g = match family {
        Some(1) => family1(n)?,
        Some(2) => family2(l, &base()?)?,
        Some(3) => family3(n, &base()?)?,
        Some(4) => family4(n, &base()?)?,
        Some(5) => family5(&base()?)?,
        other => return Err(Failure::Input(format!("family must be 1-5, got {other:?}"))),
    };
    Ok(Outcome::ok(render(&g, format)))
}

fn verify(g: &Digraph) -> Outcome {
    let r = verify_wdrd(g);
    let code = u8::from(!r.is_wdrd);
    Outcome { text: report(serde_json::to_value(&r).expect("report serializes")), code }
}

fn scheme(g: &Digraph) -> Result<Outcome, Failure> {
    let Ok(p) = two_way_partition(g) else {
        return Ok(Outcome { text: report(json!({"is_scheme": false, "strongly_connected": false})), code: 1 });
    };
    let (r, s) = verify_scheme(&RelationPartition::from(&p));
    let mut v = json!({ "strongly_connected": true, "report": r });
    let Some(s) = s else {
        return Ok(Outcome { text: report(v), code: 1 });
    };
    let violations = check_lemma21(&s);
    v["scheme"] = s.to_json();
    v["identity_violations"] = json!(violations);
    let code = if violations.is_empty() { 0 } else { 3 };
    Ok(Outcome { text: report(v), code })
}

fn classify(g: &Digraph) -> Result<Outcome, Failure> {
    let structure = match multipartite_structure(g) {
        Ok(s) => s,
        Err(e @ DigraphError::NotMultipartite(..)) => {
            let v = json!({ "structure": null, "not_multipartite": e.to_string() });
            return Ok(Outcome { text: report(v), code: 1 });
        }
        Err(e) => return Err(e.into()),
    };
    let mut v = json!({ "structure": structure });
    let mut code = 0;
    match doubly_regular_params(g) {
        Ok(p) => {
            v["doubly_regular"] = json!(p);
            match classify_type(g) {
                Ok(c) => {
                    v["verdict"] = json!(c.verdict);
                    v["delta"] = json!(c.delta);
                    v["classification"] = json!(c);
                }
                Err(e) if e.is_theorem_violation() => {
                    v["theorem_violation"] = json!(e.to_string());
                    code = 3;
                }
                Err(e) => return Err(e.into()),
            }
        }
        Err(e @ Error::NotDoublyRegular(_)) => {
            v["not_doubly_regular"] = json!(e.to_string());
            code = 1;
        }
        Err(Error::Precondition(msg)) => {
            v["not_doubly_regular"] = json!(msg);
            code = 1;
        }
        Err(e) => return Err(e.into()),
    }
    match tournament_params(g) {
        Ok(t) => {
            v["tournament_params"] = json!([t.0, t.1, t.2]);
            v["jg14_type2"] = json!(jg14_type2_check(g)?);
        }
        Err(_) => v["tournament_params"] = Value::Null,
    }
    match identify(g) {
        Ok(m) => v["family"] = json!(m),
        Err(e) if e.is_theorem_violation() => {
            v["theorem_violation"] = json!(e.to_string());
            code = 3;
        }
        Err(e) => v["family_error"] = json!(e.to_string()),
    }
    Ok(Outcome { text: report(v), code })
}

fn parse_label(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("label {s:?} is not of the form a,b"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn quotient_cmd(g: &Digraph, labels: &[String], format: Format, verbose: bool) -> Result<Outcome, Failure> {
    let p = two_way_partition(g)?;
    let mut idx = vec![0];
    for s in labels {
        let label = parse_label(s)?;
        idx.push(p.index_of(label).ok_or_else(|| Failure::Input(format!("no two-way distance {label:?}")))?);
    }
    let (q, classes) = quotient(g, &p, &idx)?;
    if verbose {
        eprintln!("classes: {classes:?}");
    }
    Ok(Outcome::ok(render(&q, format)))
}

fn search(cfg: SearchConfig, verbose: bool) -> Result<Outcome, Failure> {
    let hits = enumerate_cayley(&cfg)?;
    let mut text = String::new();
    let mut code = 0;
    for h in &hits {
        if h.has_theorem_violation() {
            code = 3;
        }
        let mut v = serde_json::to_value(h).expect("hits serialize");
        v["version"] = json!(VERSION);
        text.push_str(&serde_json::to_string(&v).expect("hits serialize"));
        text.push('\n');
    }
    if verbose {
        eprintln!("{} hits up to order {}", hits.len(), cfg.max_order);
    }
    Ok(Outcome { text, code })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Gen { family, builtin, n, l, base, base_input } => gen(f, *family, builtin, *n, *l, base, base_input),
        Command::Verify(input) => Ok(verify(&load(input, f)?)),
        Command::Scheme(input) => scheme(&load(input, f)?),
        Command::Classify(input) => classify(&load(input, f)?),
        Command::Product { input, right_input, right_builtin } => {
            let g = load(input, f)?;
            let h = load(&Input { input: right_input.clone(), builtin: right_builtin.clone() }, f)?;
            Ok(Outcome::ok(render(&lexicographic_product(&g, &h), f)))
        }
        Command::Extend { input, n } => Ok(Outcome::ok(render(&coclique_extension(&load(input, f)?, *n)?, f))),
        Command::Quotient { input, labels } => quotient_cmd(&load(input, f)?, labels, f, cli.verbose),
        Command::Search { max_order, predicate, reduced, budget } => {
            let cfg = SearchConfig { max_order: *max_order, predicate: *predicate, reduced: *reduced, budget: *budget };
            search(cfg, cli.verbose)
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(o) => (o.text, o.code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("theorem violation: {msg}");
            return ExitCode::from(3);
        }
    };
    if let Err(e) = emit(&text, &cli.output) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
