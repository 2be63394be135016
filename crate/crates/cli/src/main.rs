use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hesstorus::classify::{
    brute_f2_gkm, brute_f2_tstable, classify_f2_gkm, classify_f2_tstable, max_subtorus_fk,
    moment_graph, MomentGraph,
};
use hesstorus::combinat::{
    enumerate_hessenberg_functions, HessenbergFunction, SkeletalNilpotent,
};
use hesstorus::exactla::RationalMatrix;
use hesstorus::hess::{member, stabilizer_estimate};
use hesstorus::json as jsonview;
use hesstorus::torus::{canonical_k, subtorus_from_characters, Character, Subtorus};
use hesstorus::{rat, Rat};

const SCHEMA_PREFIX: &str = "hesstorus";

#[derive(Parser)]
#[command(
    name = "hesstorus",
    version,
    about = "Exact torus-action computations on Hessenberg varieties of skeletal nilpotents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify T-stability, GKM-ness, and stabilizer bounds per Hessenberg function.
    Classify(ClassifyArgs),
    /// Cross-validate closed-form results against brute-force computation.
    Verify(VerifyArgs),
    /// Build and export the moment graph of one Hessenberg variety.
    MomentGraph(GraphArgs),
}

#[derive(Args)]
struct OperatorArgs {
    /// Dimension n of the ambient space.
    #[arg(long)]
    n: usize,
    /// Operator family F<k>, e.g. F2.
    #[arg(long, conflicts_with = "skeletal")]
    operator: Option<String>,
    /// Explicit skeletal operator as "i,j,p/q;i,j,p/q;…".
    #[arg(long)]
    skeletal: Option<String>,
}

#[derive(Args)]
struct HChoice {
    /// Hessenberg function as a comma list, e.g. 3,3,4,4.
    #[arg(long, conflicts_with = "sweep")]
    h: Option<String>,
    /// Sweep all Hessenberg functions for this n.
    #[arg(long)]
    sweep: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    #[command(flatten)]
    h: HChoice,
    /// Randomized trials per sampled check.
    #[arg(long, default_value_t = 40)]
    trials: usize,
    /// Seed for all randomized sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run: f2-tstable, f2-gkm, peterson, or action.
    #[arg(long)]
    suite: String,
    /// Dimension or range of dimensions, e.g. 4 or 4..6 (inclusive).
    #[arg(long)]
    n: String,
    /// Operator family for the action suite, e.g. F3.
    #[arg(long)]
    operator: Option<String>,
    #[arg(long, default_value_t = 40)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    /// Hessenberg function as a comma list.
    #[arg(long)]
    h: String,
    /// Acting torus: T, canonical, or explicit characters "1,-1,-1,1;…".
    #[arg(long, default_value = "T")]
    torus: String,
    /// Write the graph here (format per --format).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::MomentGraph(args) => cmd_moment_graph(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_operator(args: &OperatorArgs) -> Result<SkeletalNilpotent, String> {
    let n = args.n;
    if let Some(spec) = &args.skeletal {
        let mut m = RationalMatrix::zeros(n, n);
        for entry in spec.split(';').filter(|s| !s.trim().is_empty()) {
            let parts: Vec<&str> = entry.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(format!("bad skeletal entry '{entry}', expected i,j,p/q"));
            }
            let i: usize = parts[0].parse().map_err(|_| format!("bad row in '{entry}'"))?;
            let j: usize = parts[1].parse().map_err(|_| format!("bad column in '{entry}'"))?;
            if i < 1 || j < 1 || i > n || j > n {
                return Err(format!("entry '{entry}' out of range for n = {n}"));
            }
            m.set(i, j, parse_rat(parts[2])?);
        }
        return SkeletalNilpotent::from_matrix(&m).map_err(|e| e.to_string());
    }
    match &args.operator {
        Some(op) => {
            let rest = op
                .strip_prefix('F')
                .or_else(|| op.strip_prefix('f'))
                .ok_or_else(|| format!("operator '{op}' is not of the form F<k>"))?;
            let k: usize = rest
                .parse()
                .map_err(|_| format!("operator '{op}' is not of the form F<k>"))?;
            SkeletalNilpotent::fk(n, k).map_err(|e| e.to_string())
        }
        None => Err("one of --operator or --skeletal is required".into()),
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: i64 = num.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
    let q: i64 = den.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
    if q == 0 {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(rat(p, q))
}

fn parse_h(spec: &str, n: usize) -> Result<HessenbergFunction, String> {
    let values: Result<Vec<usize>, _> = spec.split(',').map(|s| s.trim().parse()).collect();
    let values = values.map_err(|_| format!("bad Hessenberg function '{spec}'"))?;
    if values.len() != n {
        return Err(format!(
            "Hessenberg function '{spec}' has {} values, expected {n}",
            values.len()
        ));
    }
    HessenbergFunction::new(values).map_err(|e| e.to_string())
}

fn chosen_hs(choice: &HChoice, n: usize) -> Result<Vec<HessenbergFunction>, String> {
    if choice.sweep {
        enumerate_hessenberg_functions(n).map_err(|e| e.to_string())
    } else {
        match &choice.h {
            Some(spec) => Ok(vec![parse_h(spec, n)?]),
            None => Err("one of --h or --sweep is required".into()),
        }
    }
}

fn parse_n_range(spec: &str) -> Result<Vec<usize>, String> {
    if let Some((a, b)) = spec.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| format!("bad range '{spec}'"))?;
        let hi: usize = b.trim().parse().map_err(|_| format!("bad range '{spec}'"))?;
        if lo > hi {
            return Err(format!("empty range '{spec}'"));
        }
        Ok((lo..=hi).collect())
    } else {
        let n: usize = spec.trim().parse().map_err(|_| format!("bad n '{spec}'"))?;
        Ok(vec![n])
    }
}

fn parse_torus(spec: &str, x: &SkeletalNilpotent) -> Result<Subtorus, String> {
    match spec {
        "T" | "t" | "full" => Ok(Subtorus::full(x.n())),
        "canonical" | "K" | "k" => Ok(canonical_k(x)),
        explicit => {
            let mut chars = Vec::new();
            for part in explicit.split(';').filter(|s| !s.trim().is_empty()) {
                let exps: Result<Vec<i64>, _> =
                    part.split(',').map(|s| s.trim().parse()).collect();
                let exps = exps.map_err(|_| format!("bad character '{part}'"))?;
                if exps.len() != x.n() {
                    return Err(format!(
                        "character '{part}' has {} exponents, expected {}",
                        exps.len(),
                        x.n()
                    ));
                }
                chars.push(Character::new(exps));
            }
            subtorus_from_characters(x.n(), &chars).map_err(|e| e.to_string())
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn is_f2(x: &SkeletalNilpotent) -> bool {
    let n = x.n();
    *x == SkeletalNilpotent::fk(n, 2).expect("n >= 3 checked by caller")
}

fn cmd_classify(args: &ClassifyArgs) -> Result<ExitCode, String> {
    let x = parse_operator(&args.operator)?;
    let n = args.operator.n;
    let hs = chosen_hs(&args.h, n)?;
    let f2 = n >= 3 && is_f2(&x);
    let mut rows = Vec::new();
    for h in &hs {
        let stability = if f2 {
            let v = classify_f2_tstable(h).map_err(|e| e.to_string())?;
            Some(v)
        } else {
            None
        };
        let gkm = if f2 {
            Some(classify_f2_gkm(h).map_err(|e| e.to_string())?)
        } else {
            None
        };
        let est = stabilizer_estimate(&x, h, args.trials, args.seed)
            .map_err(|e| e.to_string())?;
        let stability_json = match &stability {
            Some(v) => jsonview::stability_verdict_value(v).map_err(|e| e.to_string())?,
            None => Value::Null,
        };
        rows.push(json!({
            "h": h.values(),
            "t_stable": stability_json,
            "gkm": gkm,
            "stabilizer": jsonview::stabilizer_estimate_value(&est),
        }));
    }
    let doc = json!({
        "schema": format!("{SCHEMA_PREFIX}/classify/1"),
        "config": {
            "n": n,
            "operator": jsonview::skeletal_value(&x).map_err(|e| e.to_string())?,
            "trials": args.trials,
            "seed": args.seed,
        },
        "rows": rows,
    });
    let content = match args.format {
        Format::Json => serde_json::to_string_pretty(&doc).expect("serializable"),
        Format::Text => classify_text(&doc),
        Format::Dot => return Err("classify output has no DOT form".into()),
    };
    emit(&args.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn classify_text(doc: &Value) -> String {
    let mut out = String::new();
    let config = &doc["config"];
    let _ = writeln!(
        out,
        "classify n={} trials={} seed={}",
        config["n"], config["trials"], config["seed"]
    );
    for row in doc["rows"].as_array().expect("rows array") {
        let h: Vec<String> = row["h"]
            .as_array()
            .expect("h array")
            .iter()
            .map(|v| v.to_string())
            .collect();
        let stability = match &row["t_stable"] {
            Value::Null => "-".to_string(),
            v => {
                if v["status"]["kind"] == "T_stable" {
                    format!("T-stable({})", v["status"]["condition"])
                } else {
                    format!("not-T-stable(row {})", v["status"]["table_row"])
                }
            }
        };
        let gkm = match &row["gkm"] {
            Value::Null => "-".to_string(),
            v => v.to_string(),
        };
        let stab = &row["stabilizer"];
        let _ = writeln!(
            out,
            "h=({}) stability={stability} gkm={gkm} bounds codim {}..{} determined={}",
            h.join(","),
            stab["upper"]["codim"],
            stab["lower"]["codim"],
            stab["determined"]
        );
    }
    out.pop();
    out
}

struct SuiteReport {
    lines: Vec<String>,
    failures: usize,
}

impl SuiteReport {
    fn new() -> Self {
        Self {
            lines: Vec::new(),
            failures: 0,
        }
    }

    fn record(&mut self, tag: &str, instances: usize, pass: bool) {
        self.lines.push(format!(
            "{tag}: instances={instances} {}",
            if pass { "PASS" } else { "FAIL" }
        ));
        if !pass {
            self.failures += 1;
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let ns = parse_n_range(&args.n)?;
    let mut report = SuiteReport::new();
    match args.suite.as_str() {
        "f2-tstable" => {
            for &n in &ns {
                let hs = enumerate_hessenberg_functions(n).map_err(|e| e.to_string())?;
                let mut ok = true;
                for h in &hs {
                    let fast = classify_f2_tstable(h).map_err(|e| e.to_string())?;
                    let slow = brute_f2_tstable(h, args.trials, args.seed)
                        .map_err(|e| e.to_string())?;
                    ok = ok && fast.status == slow.status;
                }
                report.record(&format!("stability n={n}"), hs.len(), ok);
            }
        }
        "f2-gkm" => {
            for &n in &ns {
                let hs = enumerate_hessenberg_functions(n).map_err(|e| e.to_string())?;
                let mut ok = true;
                for h in &hs {
                    let fast = classify_f2_gkm(h).map_err(|e| e.to_string())?;
                    let slow = brute_f2_gkm(h).map_err(|e| e.to_string())?.0;
                    ok = ok && fast == slow;
                }
                report.record(&format!("gkm n={n}"), hs.len(), ok);
            }
        }
        "peterson" => {
            for &n in &ns {
                let h = HessenbergFunction::banded(n);
                let v = max_subtorus_fk(n - 1, &h, n).map_err(|e| e.to_string())?;
                let ok = v.determined && v.upper.codim() == n - 2;
                report.record(&format!("peterson n={n}"), 1, ok);
            }
        }
        "action" => {
            for &n in &ns {
                let operator = OperatorArgs {
                    n,
                    operator: args.operator.clone(),
                    skeletal: None,
                };
                let x = parse_operator(&operator)?;
                let k = canonical_k(&x);
                let h = HessenbergFunction::banded(n);
                let mut rng = hesstorus::sample::rng_from_seed(args.seed);
                let mut checked = 0;
                let mut ok = true;
                for w in hesstorus::combinat::Permutation::all(n) {
                    if !hesstorus::hess::member_fixed_point(&w, &x, &h) {
                        continue;
                    }
                    let g = hesstorus::sample::random_cell_point(&w, &mut rng);
                    if !member(g.matrix(), &x, &h).map_err(|e| e.to_string())? {
                        continue;
                    }
                    for _ in 0..(args.trials.max(1).min(10)) {
                        let t = k.rational_point(&mut rng);
                        let scaled = g.matrix().scale_rows(&t).map_err(|e| e.to_string())?;
                        ok = ok && member(&scaled, &x, &h).map_err(|e| e.to_string())?;
                        checked += 1;
                    }
                }
                report.record(&format!("action n={n}"), checked, ok);
            }
        }
        other => return Err(format!("unknown suite '{other}'")),
    }
    println!(
        "suite={} trials={} seed={}",
        args.suite, args.trials, args.seed
    );
    for line in &report.lines {
        println!("{line}");
    }
    if report.failures > 0 {
        println!("FAILED: {} check group(s)", report.failures);
        Ok(ExitCode::from(1))
    } else {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    }
}

fn graph_dot(g: &MomentGraph) -> String {
    let mut out = String::from("graph moment {\n");
    for w in &g.vertices {
        let _ = writeln!(out, "    \"{}\";", w.one_line());
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "    \"{}\" -- \"{}\" [label=\"{:?}\"];",
            e.a.one_line(),
            e.b.one_line(),
            e.weight.exps()
        );
    }
    out.push('}');
    out
}

fn cmd_moment_graph(args: &GraphArgs) -> Result<ExitCode, String> {
    let x = parse_operator(&args.operator)?;
    let h = parse_h(&args.h, args.operator.n)?;
    let k = parse_torus(&args.torus, &x)?;
    let g = moment_graph(&x, &h, &k).map_err(|e| e.to_string())?;
    let content = match args.format {
        Format::Dot => graph_dot(&g),
        Format::Json => {
            let doc = json!({
                "schema": format!("{SCHEMA_PREFIX}/moment-graph/1"),
                "config": {
                    "n": args.operator.n,
                    "operator": jsonview::skeletal_value(&x).map_err(|e| e.to_string())?,
                    "h": h.values(),
                    "torus": args.torus,
                },
                "graph": jsonview::moment_graph_value(&g),
            });
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Text => format!(
            "vertices={} edges={} complete={}",
            g.vertices.len(),
            g.edges.len(),
            g.complete
        ),
    };
    emit(&args.out, &content)?;
    if args.out.is_some() {
        println!(
            "vertices={} edges={} complete={}",
            g.vertices.len(),
            g.edges.len(),
            g.complete
        );
    }
    Ok(ExitCode::SUCCESS)
}
