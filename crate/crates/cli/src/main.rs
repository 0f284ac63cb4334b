//! Command-line front end: verification suites, homology reports and
//! dimension tables.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails and 2 for usage or configuration errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use enbar::barcx::{build_gamma, build_tn, generator_shapes, word_degree};
use enbar::evalhom::{
    augmentation_check, bar_eval_report, bar_module_report, bar_module_size, en_report,
    free_commutative_algebra_check, free_commutative_check, harrison_acyclicity_check, harrison_report,
    stabilization_scan, trivial_algebra_check, trivial_multilinear_check, AlgebraDatum, CheckReport,
    OperadChoice, Report,
};
use enbar::exactlin::Ring;
use enbar::lifting::{cup_cycle, cup_product, encode_simplex_chain, lift_level, restrict_to_en, run_suites};
use enbar::operads::{enumerate_en_simplices, enumerate_simplices, filtration_level};

/// Largest basis a single complex may have before the run is refused.
const BASIS_LIMIT: u128 = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "enbar", version, about = "Iterated bar complexes of E_n-operads, computed exactly")]
struct Cli {
    /// Ground ring: z, q or fp:<prime>.
    #[arg(long, global = true, env = "ENBAR_RING", default_value = "z", value_parser = parse_ring)]
    ring: Ring,
    /// Bar level n.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
    n: u8,
    /// Largest arity.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=8))]
    arity_max: u64,
    /// A single arity; overrides --arity-max where an object takes one arity.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=8))]
    arity: Option<u64>,
    /// Degree bound (truncation of E, stabilization window, bar-eval rows).
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(0..=64))]
    degree_max: Option<i64>,
    /// Weight bound for evaluated bar complexes.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=16))]
    weight_max: Option<u64>,
    /// Object to build or check; see each subcommand.
    #[arg(long, global = true)]
    object: Option<String>,
    /// Algebra for bar-eval: trivial:1 or commutative:1.
    #[arg(long, global = true, default_value = "trivial:1")]
    algebra: String,
    /// Operad for bar modules: c, e (truncated by --degree-max) or en.
    #[arg(long, global = true, value_enum, default_value_t = OperadArg::En)]
    operad: OperadArg,
    /// Index of the cup product.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "ENBAR_THREADS", default_value_t = 0)]
    threads: usize,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites: suites (default), free-commutative,
    /// harrison, trivial-algebra, augmentation or stabilization.
    Verify,
    /// Homology report: bar-module, en-operad, bar-eval, harrison or
    /// stabilization.
    Homology,
    /// Dimension tables and tables of operations: tn, gn, en, filtration,
    /// cup or twisting.
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OperadArg {
    C,
    E,
    En,
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse::<Ring>().map_err(|e| e.to_string())
}

/// Failure of a run, mapped onto the exit status.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<enbar::evalhom::EvalError> for Failure {
    fn from(e: enbar::evalhom::EvalError) -> Self {
        Failure::Math(e.to_string())
    }
}

/// Text written on success, and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

impl Cli {
    fn arities(&self) -> Vec<usize> {
        match self.arity {
            Some(r) => vec![r as usize],
            None => (1..=self.arity_max as usize).collect(),
        }
    }

    fn single_arity(&self) -> usize {
        self.arity.unwrap_or(self.arity_max) as usize
    }

    fn operad_choice(&self) -> Result<OperadChoice, Failure> {
        Ok(match self.operad {
            OperadArg::C => OperadChoice::Commutative,
            OperadArg::En => OperadChoice::En,
            OperadArg::E => OperadChoice::BarrattEccles {
                degree_max: self
                    .degree_max
                    .ok_or_else(|| Failure::Usage("--operad e needs --degree-max".to_string()))?,
            },
        })
    }

    fn algebra(&self) -> Result<AlgebraDatum, Failure> {
        match self.algebra.as_str() {
            "trivial:1" | "trivial" => Ok(AlgebraDatum::Trivial),
            "commutative:1" | "commutative" => Ok(AlgebraDatum::FreeCommutative),
            other => Err(Failure::Usage(format!(
                "unknown algebra `{other}` (expected trivial:1 or commutative:1)"
            ))),
        }
    }

    fn guard_modules(&self, arities: &[usize], choice: OperadChoice) -> Result<(), Failure> {
        for &r in arities {
            guard_en(self.n as u32, r)?;
            let size = bar_module_size(self.n, r, choice);
            if size > BASIS_LIMIT {
                return Err(Failure::Usage(format!(
                    "B^{}_{}({r}) has {size} basis elements, above the limit of {BASIS_LIMIT}",
                    self.n,
                    choice.name()
                )));
            }
        }
        Ok(())
    }
}

/// Refuses E_n(r) when a crude upper bound on its size is too large: at most
/// `(n-1) C(r,2)` steps, each to one of `r! - 1` permutations.
fn guard_en(n: u32, r: usize) -> Result<(), Failure> {
    let fact: u128 = (1..=r as u128).product();
    let steps = (n.saturating_sub(1) as u128) * (r as u128) * (r as u128 - 1) / 2;
    let mut bound = fact;
    let mut layer = fact;
    for _ in 0..steps {
        layer = layer.saturating_mul(fact.saturating_sub(1).max(1));
        bound = bound.saturating_add(layer);
    }
    if r > 4 && bound > BASIS_LIMIT {
        return Err(Failure::Usage(format!(
            "E_{n}({r}) may have up to {bound} simplices, above the limit of {BASIS_LIMIT}"
        )));
    }
    Ok(())
}

fn render_report(cli: &Cli, report: &Report) -> String {
    match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

fn render_check(cli: &Cli, report: &CheckReport) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Csv => {
            let mut out = String::from("check,ring,n,arity,weight,degree,expected,found,torsion\n");
            let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
            for r in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    report.check,
                    report.ring,
                    r.n,
                    opt(r.arity),
                    opt(r.weight),
                    r.degree,
                    r.expected,
                    r.found,
                    r.torsion.join(";")
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{} over {}: {}\n",
                report.check,
                report.ring,
                if report.passed { "pass" } else { "FAIL" }
            );
            for r in &report.rows {
                let mark = if r.expected == r.found as u64 { " " } else { "!" };
                let key = match (r.arity, r.weight) {
                    (Some(a), _) => format!("arity {a}"),
                    (_, Some(w)) => format!("weight {w}"),
                    _ => String::new(),
                };
                out.push_str(&format!(
                    "{mark} n={} {key} degree {}: expected {} found {}{}\n",
                    r.n,
                    r.degree,
                    r.expected,
                    r.found,
                    if r.torsion.is_empty() { String::new() } else { format!(" torsion {}", r.torsion.join(",")) }
                ));
            }
            for v in &report.violations {
                out.push_str(&format!("! {v}\n"));
            }
            out
        }
    }
}

fn render_stabilization(cli: &Cli, rep: &enbar::evalhom::StabilizationReport) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(rep).expect("serializable") + "\n",
        Format::Csv => {
            let mut out = String::from("arity,ring,n,degree,rank,map_rank\n");
            for r in &rep.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    rep.arity,
                    rep.ring,
                    r.n,
                    r.degree,
                    r.rank,
                    r.map_rank.map(|m| m.to_string()).unwrap_or_default()
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "stabilization of Σ^-n B^n_C({}) over {}, degrees {}..={}: {}\n",
                rep.arity,
                rep.ring,
                rep.window.0,
                rep.window.1,
                if rep.passed { "pass" } else { "FAIL" }
            );
            for r in &rep.rows {
                let map = r.map_rank.map(|m| format!(", map from n-1 of rank {m}")).unwrap_or_default();
                out.push_str(&format!("  n={} degree {}: rank {}{}\n", r.n, r.degree, r.rank, map));
            }
            let colim: Vec<String> = rep.colimit.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            out.push_str(&format!("  colimit {}\n", colim.join(" ")));
            out
        }
    }
}

fn stabilization(cli: &Cli) -> Result<enbar::evalhom::StabilizationReport, Failure> {
    let r = cli.single_arity();
    let top = cli.degree_max.unwrap_or(4);
    for n in 1..=cli.n {
        let size = bar_module_size(n, r, OperadChoice::Commutative);
        if size > BASIS_LIMIT {
            return Err(Failure::Usage(format!("B^{n}_C({r}) has {size} basis elements")));
        }
    }
    Ok(stabilization_scan(r, (0, top), cli.n, cli.ring)?)
}

fn cmd_verify(cli: &Cli) -> Result<Output, Failure> {
    let object = cli.object.as_deref().unwrap_or("suites");
    let check = |rep: CheckReport| Output {
        passed: rep.passed,
        text: render_check(cli, &rep),
    };
    let weight_max = cli.weight_max.unwrap_or(4) as usize;
    match object {
        "suites" => {
            let r = cli.arity_max as usize;
            if r > 5 || (cli.n >= 3 && r > 4) {
                return Err(Failure::Usage(format!(
                    "verify suites are limited to arity 5 (4 from n = 3); got {r}"
                )));
            }
            let reports = run_suites(cli.n, r, cli.ring);
            let passed = reports.iter().all(|s| s.passed);
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "n": cli.n,
                        "arity_max": r,
                        "ring": cli.ring.to_string(),
                        "passed": passed,
                        "suites": reports,
                    }))
                    .expect("serializable")
                        + "\n"
                }
                Format::Csv => {
                    let mut out = String::from("suite,checked,passed,element,detail\n");
                    for s in &reports {
                        let (e, d) = s
                            .counterexample
                            .as_ref()
                            .map(|c| (c.element.clone(), c.detail.replace(',', ";")))
                            .unwrap_or_default();
                        out.push_str(&format!("{},{},{},{},{}\n", s.suite, s.checked, s.passed, e, d));
                    }
                    out
                }
                Format::Text => {
                    let mut out = format!("verify n={} arity<={} over {}\n", cli.n, r, cli.ring);
                    for s in &reports {
                        match &s.counterexample {
                            None => out.push_str(&format!("  pass {} ({} checked)\n", s.suite, s.checked)),
                            Some(c) => out.push_str(&format!("  FAIL {}: {} {}\n", s.suite, c.element, c.detail)),
                        }
                    }
                    out
                }
            };
            Ok(Output { text, passed })
        }
        "free-commutative" => Ok(check(free_commutative_check(cli.arity_max as usize, cli.n, cli.ring)?)),
        "harrison" => Ok(check(harrison_acyclicity_check(cli.arity_max as usize, cli.ring)?)),
        "trivial-algebra" => match cli.arity {
            Some(r) => Ok(check(trivial_multilinear_check(cli.n, r as usize, cli.ring)?)),
            None => Ok(check(trivial_algebra_check(cli.n, weight_max, cli.ring)?)),
        },
        "commutative-algebra" => Ok(check(free_commutative_algebra_check(cli.n, weight_max, cli.ring)?)),
        "augmentation" => {
            let choice = cli.operad_choice()?;
            cli.guard_modules(&cli.arities(), choice)?;
            Ok(check(augmentation_check(cli.n, cli.arity_max as usize, choice, cli.ring)?))
        }
        "stabilization" => {
            let rep = stabilization(cli)?;
            Ok(Output {
                passed: rep.passed,
                text: render_stabilization(cli, &rep),
            })
        }
        other => Err(Failure::Usage(format!("verify has no object `{other}`"))),
    }
}

fn cmd_homology(cli: &Cli) -> Result<Output, Failure> {
    let object = cli
        .object
        .as_deref()
        .ok_or_else(|| Failure::Usage("homology needs --object".to_string()))?;
    let report = match object {
        "bar-module" => {
            let choice = cli.operad_choice()?;
            let arities = cli.arities();
            cli.guard_modules(&arities, choice)?;
            bar_module_report(cli.n, &arities, choice, cli.ring)?
        }
        "en-operad" => {
            let arities = cli.arities();
            for &r in &arities {
                guard_en(cli.n as u32, r)?;
            }
            en_report(cli.n as u32, &arities, cli.ring)?
        }
        "bar-eval" => {
            let a = cli.algebra()?;
            let weight_max = match (cli.weight_max, cli.degree_max) {
                (Some(w), _) => w as usize,
                // every word of weight w has degree at least w
                (None, Some(d)) => d.max(1) as usize,
                (None, None) => 4,
            };
            if (cli.n as u128).pow(weight_max as u32) > BASIS_LIMIT {
                return Err(Failure::Usage(format!("weight {weight_max} is too large at level {}", cli.n)));
            }
            let mut rep = bar_eval_report(cli.n, a, weight_max, cli.ring)?;
            if let Some(d) = cli.degree_max {
                rep.table.retain(|r| r.degree <= d);
                rep.bounds.insert("degree_max".to_string(), d);
            }
            rep
        }
        "harrison" => harrison_report(&cli.arities(), cli.ring)?,
        "stabilization" => {
            let rep = stabilization(cli)?;
            return Ok(Output {
                passed: true,
                text: render_stabilization(cli, &rep),
            });
        }
        other => return Err(Failure::Usage(format!("homology has no object `{other}`"))),
    };
    Ok(Output {
        passed: true,
        text: render_report(cli, &report),
    })
}

fn dims_text(cli: &Cli, title: &str, table: &BTreeMap<usize, BTreeMap<i64, u128>>) -> String {
    match cli.format {
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .flat_map(|(r, m)| m.iter().map(move |(d, c)| json!({"arity": r, "degree": d, "dim": c.to_string()})))
                .collect();
            serde_json::to_string_pretty(&json!({"object": title, "table": rows})).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("object,arity,degree,dim\n");
            for (r, m) in table {
                for (d, c) in m {
                    out.push_str(&format!("{title},{r},{d},{c}\n"));
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("{title}\n");
            for (r, m) in table {
                let degrees: Vec<String> = m.keys().map(|d| d.to_string()).collect();
                let dims: Vec<String> = m.values().map(|c| c.to_string()).collect();
                let total: u128 = m.values().sum();
                out.push_str(&format!(
                    "  arity {r}: degrees {} dims {} (total dimension {total})\n",
                    degrees.join(","),
                    dims.join(",")
                ));
            }
            out
        }
    }
}

fn cmd_info(cli: &Cli) -> Result<Output, Failure> {
    let object = cli
        .object
        .as_deref()
        .ok_or_else(|| Failure::Usage("info needs --object".to_string()))?;
    let n = cli.n;
    let text = match object {
        "tn" => {
            let top = cli.arities().into_iter().max().unwrap_or(1);
            let tn = build_tn(n, top, Ring::Integers);
            let mut table = BTreeMap::new();
            for r in cli.arities() {
                let mut m: BTreeMap<i64, u128> = BTreeMap::new();
                for b in tn.basis(r) {
                    *m.entry(b.degree).or_default() += 1;
                }
                table.insert(r, m);
            }
            dims_text(cli, &format!("T^{n}"), &table)
        }
        "gn" => {
            let mut table = BTreeMap::new();
            for r in cli.arities() {
                let mut m: BTreeMap<i64, u128> = BTreeMap::new();
                for seps in generator_shapes(n, r) {
                    *m.entry(word_degree(n, &seps)).or_default() += 1;
                }
                table.insert(r, m);
            }
            dims_text(cli, &format!("G^{n}"), &table)
        }
        "en" => {
            let mut table = BTreeMap::new();
            for r in cli.arities() {
                guard_en(n as u32, r)?;
                let labels: Vec<u32> = (1..=r as u32).collect();
                let mut m: BTreeMap<i64, u128> = BTreeMap::new();
                for s in enumerate_en_simplices(n as u32, &labels) {
                    *m.entry(s.len() as i64 - 1).or_default() += 1;
                }
                table.insert(r, m);
            }
            dims_text(cli, &format!("E_{n}"), &table)
        }
        "filtration" => {
            let r = cli.single_arity();
            let d = cli.degree_max.unwrap_or(3) as usize;
            let labels: Vec<u32> = (1..=r as u32).collect();
            let mut counts: BTreeMap<(i64, u32), u128> = BTreeMap::new();
            for s in enumerate_simplices(&labels, d) {
                *counts.entry((s.len() as i64 - 1, filtration_level(&s))).or_default() += 1;
            }
            let mut out = format!("simplices of E({r}) up to degree {d} by filtration level\n");
            for ((deg, level), c) in counts {
                out.push_str(&format!("  degree {deg} level {level}: {c}\n"));
            }
            out
        }
        "cup" => {
            let u = cup_product(cli.m, cli.ring);
            match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "m": cli.m,
                        "cup": encode_simplex_chain(&u),
                        "cycle": encode_simplex_chain(&cup_cycle(cli.m, cli.ring)),
                    }))
                    .expect("serializable")
                        + "\n"
                }
                _ => encode_simplex_chain(&u) + "\n",
            }
        }
        "twisting" => {
            let r = cli.arity_max as usize;
            if r > 5 {
                return Err(Failure::Usage("twisting tables are limited to arity 5".to_string()));
            }
            let value = match cli.operad {
                OperadArg::C => build_gamma(n, r, cli.ring).to_json(),
                OperadArg::E => lift_level(n, r, cli.ring).to_json(),
                OperadArg::En => restrict_to_en(lift_level(n, r, cli.ring), n as u32)
                    .map_err(|e| Failure::Math(e.to_string()))?
                    .to_json(),
            };
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
        other => return Err(Failure::Usage(format!("info has no object `{other}`"))),
    };
    Ok(Output { text, passed: true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Verify => cmd_verify(&cli),
        Command::Homology => cmd_homology(&cli),
        Command::Info => cmd_info(&cli),
    };
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
