//! Command-line workbench: every toolkit of the core crate behind JSON
//! input/output with deterministic, seed-pinned reports.
//!
//! Exit codes: 0 when the requested check passes, 1 when it fails (or a
//! verdict is "not established"), 2 on malformed input.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use opcalc_core::combinat::{enumerate_injections, enumerate_partitions, Permutation};
use opcalc_core::conncalc::{bokstedt_verdict, iterate_profile, ExcisionHypothesis, Verdict};
use opcalc_core::polyfun::{
    canonical_action, chain_rule_compare, compose_funseq_canonical, multilinearize_at_s0,
    PolyFunSeq,
};
use opcalc_core::sphere::{
    coend_adjoint, coend_adjoint_inv, gamma, gamma_inv, parse_frac, reproduce_tower_example,
    sample_simplex, smash_gamma, stabilize, MapDescriptor, SimplexPoint, SmashSpherePoint,
    SpherePoint, SphereCheckReport,
};
use opcalc_core::symseq::{check_operad, compose_cardinality, compose_product, OperadData, SymSeq};

mod schemas;

#[derive(Parser)]
#[command(
    name = "opcalc",
    version,
    about = "Exact workbench for operads, symmetric sequences, functor substitution, the rational sphere operad, and connectivity calculus"
)]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate unordered partitions of {1..n}.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Restrict to exactly k blocks.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Enumerate injections [m] -> [n] in lexicographic order.
    Injections {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Compose two symmetric sequences and check the partition-sum oracle.
    ComposeSymseq {
        /// JSON file for the outer sequence ("-" for stdin).
        #[arg(long)]
        a: PathBuf,
        /// JSON file for the inner sequence.
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        max_level: usize,
    },
    /// Run the operad-axiom checker on operad data.
    CheckOperad {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_level: usize,
    },
    /// Substitute one functor sequence into another.
    ComposeFunseq {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        max_level: usize,
    },
    /// Extract the multilinear part at S0 as a symmetric sequence.
    Multilinearize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare composing multilinearizations against multilinearizing the
    /// composition.
    ChainRule {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        max_level: usize,
    },
    /// Sphere-operad commands.
    #[command(subcommand)]
    Sphere(SphereCommand),
    /// Connectivity-calculus commands.
    #[command(subcommand)]
    Conncalc(ConncalcCommand),
    /// Write the JSON schemas for every on-disk format.
    EmitSchemas {
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Write the bundled example corpus.
    EmitCorpus {
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Validate a JSON file against one of the emitted schemas.
    Validate {
        #[arg(long, value_enum)]
        schema: SchemaName,
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemaName {
    Symseq,
    Operad,
    Polyfunseq,
    SpherePoint,
    Report,
}

#[derive(Subcommand)]
enum SphereCommand {
    /// Compose sphere-operad points and verify the exact round trip.
    Gamma {
        /// Outer point, e.g. "1/2,1/2".
        #[arg(long)]
        outer: String,
        /// Inner points, one flag per slot, e.g. --inner 1 --inner "1/3,2/3".
        #[arg(long = "inner", required = true)]
        inners: Vec<String>,
    },
    /// Map a (sphere point, interval coordinate) pair to the cube model and
    /// back.
    Coend {
        #[arg(long)]
        point: String,
        /// Interval coordinate in (0,1), e.g. "1/4".
        #[arg(long)]
        x: String,
    },
    /// Sampled exact checks of stabilization: identity, blockwise action,
    /// and strict associativity.
    Stabilize {
        /// Number of smash factors.
        #[arg(long, default_value_t = 2)]
        coords: usize,
        #[arg(long, default_value_t = 2)]
        j1: usize,
        #[arg(long, default_value_t = 2)]
        j2: usize,
        #[arg(long, default_value_t = 200)]
        sample_count: u32,
        /// Largest random weight used for sampled rationals.
        #[arg(long, default_value_t = 9)]
        grid_resolution: u32,
        /// RNG seed (required: every randomized check is pinned).
        #[arg(long)]
        seed: u64,
    },
    /// Reproduce the two-step versus one-step stabilization example.
    TowerExample,
}

#[derive(Subcommand)]
enum ConncalcCommand {
    /// Stage connectivity profile and colimit-comparison verdict.
    Report {
        #[arg(long)]
        c: i64,
        #[arg(long)]
        kappa: i64,
        #[arg(long)]
        ell: i64,
        #[arg(long)]
        stages: usize,
    },
}

enum Status {
    Pass,
    Fail,
}

fn status_of(v: &Value) -> Status {
    match v.get("status").and_then(Value::as_str) {
        Some("pass") => Status::Pass,
        _ => Status::Fail,
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = read_input(path)?;
    // serde_json errors carry line/column positions.
    serde_json::from_str(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn parse_point(spec: &str) -> anyhow::Result<SimplexPoint> {
    let coords = spec
        .split(',')
        .map(|s| parse_frac(s.trim()))
        .collect::<opcalc_core::Result<Vec<_>>>()?;
    Ok(SimplexPoint::new(coords)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Err(err) => {
            eprintln!("input error: {err}");
            ExitCode::from(2)
        }
        Ok(report) => {
            let status = status_of(&report);
            let rendered = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&report, started),
            };
            let write_result = match &cli.output {
                None => {
                    print!("{rendered}");
                    Ok(())
                }
                Some(path) => fs::write(path, rendered.as_bytes())
                    .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
            };
            if let Err(err) = write_result {
                eprintln!("input error: {err}");
                return ExitCode::from(2);
            }
            // Timing goes to stderr so JSON reports stay byte-reproducible.
            eprintln!("# finished in {:?}", started.elapsed());
            match status {
                Status::Pass => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(1),
            }
        }
    }
}

fn render_text(report: &Value, started: Instant) -> String {
    let mut out = String::new();
    let command = report
        .get("command")
        .and_then(Value::as_str)
        .unwrap_or("report");
    let status = report
        .get("status")
        .and_then(Value::as_str)
        .unwrap_or("unknown");
    out.push_str(&format!("{command}: {status}\n"));
    for key in [
        "count",
        "counts",
        "checked",
        "failures",
        "cardinalities",
        "verdict",
        "witness",
        "counterexample",
        "output",
        "cube",
    ] {
        if let Some(v) = report.get(key) {
            if !v.is_null() {
                out.push_str(&format!("  {key}: {v}\n"));
            }
        }
    }
    out.push_str(&format!("  timing: {:?}\n", started.elapsed()));
    out
}

fn run(command: &Command) -> anyhow::Result<Value> {
    match command {
        Command::Partitions { n, k } => {
            let parts = enumerate_partitions(*n, *k);
            Ok(json!({
                "command": "partitions",
                "status": "pass",
                "n": n,
                "k": k,
                "count": parts.len(),
                "partitions": parts,
            }))
        }
        Command::Injections { m, n } => {
            let inj = enumerate_injections(*m, *n);
            Ok(json!({
                "command": "injections",
                "status": "pass",
                "m": m,
                "n": n,
                "count": inj.len(),
                "injections": inj,
            }))
        }
        Command::ComposeSymseq { a, b, max_level } => {
            let a: SymSeq = load_json(a)?;
            let b: SymSeq = load_json(b)?;
            let composed = compose_product(&a, &b, *max_level)?;
            let mut cards = Vec::new();
            let mut ok = true;
            for n in 1..=*max_level {
                let count = composed.seq().level(n)?.len();
                let oracle = compose_cardinality(&a, &b, n)?;
                ok &= count == oracle;
                cards.push(json!({"n": n, "count": count, "oracle": oracle}));
            }
            Ok(json!({
                "command": "compose-symseq",
                "status": if ok { "pass" } else { "fail" },
                "cardinalities": cards,
                "seq": composed.seq(),
            }))
        }
        Command::CheckOperad { input, max_level } => {
            let operad: OperadData = load_json(input)?;
            let report = check_operad(&operad, *max_level)?;
            Ok(json!({
                "command": "check-operad",
                "status": report.status,
                "checked": report.checked,
                "counterexample": report.counterexample,
            }))
        }
        Command::ComposeFunseq { g, f, max_level } => {
            let g: PolyFunSeq = load_json(g)?;
            let f: PolyFunSeq = load_json(f)?;
            let composed = compose_funseq_canonical(&g, &f, *max_level)?;
            let counts: Vec<Value> = (1..=*max_level)
                .map(|n| json!({"n": n, "terms": composed.seq.level(n).unwrap().terms().len()}))
                .collect();
            Ok(json!({
                "command": "compose-funseq",
                "status": "pass",
                "counts": counts,
                "seq": composed.seq,
            }))
        }
        Command::Multilinearize { input } => {
            let f: PolyFunSeq = load_json(input)?;
            let action = canonical_action(&f)?;
            let (seq, _) = multilinearize_at_s0(&f, &action)?;
            Ok(json!({
                "command": "multilinearize",
                "status": "pass",
                "cardinalities": seq.cardinalities(),
                "seq": seq,
            }))
        }
        Command::ChainRule { g, f, max_level } => {
            let g: PolyFunSeq = load_json(g)?;
            let f: PolyFunSeq = load_json(f)?;
            let report = chain_rule_compare(&g, &f, *max_level)?;
            Ok(json!({
                "command": "chain-rule",
                "status": report.status,
                "max_level": report.max_level,
                "cardinalities": report.cardinalities,
                "counterexample": report.counterexample,
                "flagged_summands": report.flagged_summands,
            }))
        }
        Command::Sphere(cmd) => run_sphere(cmd),
        Command::Conncalc(ConncalcCommand::Report { c, kappa, ell, stages }) => {
            let h = ExcisionHypothesis::new(*c, *kappa);
            let profile = iterate_profile(h, *ell, *stages)?;
            let verdict = bokstedt_verdict(&profile.stages);
            let status = match &verdict {
                Verdict::Satisfied { .. } => "pass",
                Verdict::NotEstablished { .. } => "not-established",
            };
            Ok(json!({
                "command": "conncalc-report",
                "status": status,
                "hypothesis": h,
                "ell": ell,
                "stages": profile.stages,
                "verdict": verdict,
            }))
        }
        Command::EmitSchemas { out_dir } => {
            let written = schemas::emit_all(out_dir)?;
            Ok(json!({
                "command": "emit-schemas",
                "status": "pass",
                "written": written,
            }))
        }
        Command::EmitCorpus { out_dir } => {
            let written = emit_corpus(out_dir)?;
            Ok(json!({
                "command": "emit-corpus",
                "status": "pass",
                "written": written,
            }))
        }
        Command::Validate { schema, input } => run_validate(*schema, input),
    }
}

fn run_validate(schema: SchemaName, input: &Path) -> anyhow::Result<Value> {
    let text = read_input(input)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| anyhow::anyhow!("{}: {e}", input.display()))?;
    let (name, schema_doc) = match schema {
        SchemaName::Symseq => ("symseq", schemas::symseq_schema()),
        SchemaName::Operad => ("operad", schemas::operad_schema()),
        SchemaName::Polyfunseq => ("polyfunseq", schemas::polyfunseq_schema()),
        SchemaName::SpherePoint => ("sphere-point", schemas::sphere_point_schema()),
        SchemaName::Report => ("report", schemas::report_schema()),
    };
    let compiled = jsonschema::validator_for(&schema_doc)
        .map_err(|e| anyhow::anyhow!("schema compilation failed: {e}"))?;
    let violations: Vec<String> = compiled
        .iter_errors(&value)
        .map(|e| format!("{}: {e}", e.instance_path))
        .collect();
    if !violations.is_empty() {
        // Schema violations are input errors; the field path is included.
        return Err(anyhow::anyhow!(
            "{} does not match the {name} schema: {}",
            input.display(),
            violations.join("; ")
        ));
    }
    // Parsing with the core types enforces the semantic invariants the
    // schema cannot express (bijectivity, Coxeter relations, sums).
    let semantic = match schema {
        SchemaName::Symseq => serde_json::from_value::<SymSeq>(value).map(|_| ()).err(),
        SchemaName::Operad => serde_json::from_value::<OperadData>(value).map(|_| ()).err(),
        SchemaName::Polyfunseq => serde_json::from_value::<PolyFunSeq>(value).map(|_| ()).err(),
        SchemaName::SpherePoint => serde_json::from_value::<SpherePoint>(value).map(|_| ()).err(),
        SchemaName::Report => None,
    };
    if let Some(e) = semantic {
        return Err(anyhow::anyhow!("{}: {e}", input.display()));
    }
    Ok(json!({
        "command": "validate",
        "status": "pass",
        "schema": name,
        "input": input.display().to_string(),
    }))
}

fn run_sphere(cmd: &SphereCommand) -> anyhow::Result<Value> {
    match cmd {
        SphereCommand::Gamma { outer, inners } => {
            let s = parse_point(outer)?;
            let ts = inners
                .iter()
                .map(|t| parse_point(t))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let blocks: Vec<usize> = ts.iter().map(SimplexPoint::arity).collect();
            let composed = gamma(
                &SpherePoint::Point(s.clone()),
                &ts.iter()
                    .map(|t| SpherePoint::Point(t.clone()))
                    .collect::<Vec<_>>(),
            )?;
            let mut ok = false;
            let mut output = Value::Null;
            if let SpherePoint::Point(u) = &composed {
                let comp = opcalc_core::combinat::OrderedComposition::new(blocks)?;
                let (s2, ts2) = gamma_inv(u, &comp)?;
                ok = s2 == s && ts2 == ts;
                output = serde_json::to_value(u)?;
            }
            Ok(json!({
                "command": "sphere-gamma",
                "status": if ok { "pass" } else { "fail" },
                "output": output,
                "roundtrip": if ok { "exact" } else { "failed" },
            }))
        }
        SphereCommand::Coend { point, x } => {
            let s = parse_point(point)?;
            let x = parse_frac(x)?;
            let z = coend_adjoint(&SpherePoint::Point(s.clone()), Some(&x))?;
            let (s2, x2) = coend_adjoint_inv(&z)?;
            let ok = s2 == SpherePoint::Point(s) && x2.as_ref() == Some(&x);
            Ok(json!({
                "command": "sphere-coend",
                "status": if ok { "pass" } else { "fail" },
                "cube": z,
                "roundtrip": if ok { "exact" } else { "failed" },
            }))
        }
        SphereCommand::Stabilize {
            coords,
            j1,
            j2,
            sample_count,
            grid_resolution,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut report = SphereCheckReport::new();
            let identity = MapDescriptor::Identity { coords: *coords };
            let swap = (*coords >= 2).then(|| MapDescriptor::CoordPerm {
                perm: {
                    let mut mapping: Vec<usize> = (1..=*coords).collect();
                    mapping.swap(0, 1);
                    Permutation::new(mapping).unwrap()
                },
            });
            for i in 0..*sample_count {
                let stage1 = SmashSpherePoint::new(
                    (0..*coords)
                        .map(|_| sample_simplex(&mut rng, *j1, *grid_resolution))
                        .collect(),
                )?;
                let stage2 = SmashSpherePoint::new(
                    (0..*coords)
                        .map(|_| sample_simplex(&mut rng, *j2, *grid_resolution))
                        .collect(),
                )?;
                let f = match (&swap, i % 2) {
                    (Some(sw), 1) => sw.clone(),
                    _ => identity.clone(),
                };
                let nested = stabilize(&stabilize(&f, *j1, &stage1)?, *j2, &stage2)?;
                let combined = smash_gamma(&stage2, &vec![stage1.clone(); *j2])?;
                let flat = stabilize(&f, j1 * j2, &combined)?;
                let arity = j1 * j2;
                let input: Vec<SpherePoint> = (0..*coords)
                    .map(|_| SpherePoint::Point(sample_simplex(&mut rng, arity, *grid_resolution)))
                    .collect();
                let lhs = nested.eval(&input)?;
                let rhs = flat.eval(&input)?;
                report.record(lhs == rhs, || format!("associativity sample {i}"));
                report.record(nested.stage() == flat.stage(), || {
                    format!("stage bookkeeping sample {i}")
                });
                let st_id = stabilize(&identity, *j1, &stage1)?;
                let id_input: Vec<SpherePoint> = (0..*coords)
                    .map(|_| SpherePoint::Point(sample_simplex(&mut rng, *j1, *grid_resolution)))
                    .collect();
                report.record(st_id.eval(&id_input)? == id_input, || {
                    format!("identity sample {i}")
                });
            }
            Ok(json!({
                "command": "sphere-stabilize",
                "status": if report.passed() { "pass" } else { "fail" },
                "checked": report.checked,
                "failures": report.failures,
                "witness": report.witness,
                "seed": seed,
            }))
        }
        SphereCommand::TowerExample => {
            let report = reproduce_tower_example()?;
            Ok(json!({
                "command": "sphere-tower-example",
                "status": if report.passed() { "pass" } else { "fail" },
                "checked": report.checked,
                "failures": report.failures,
                "witness": report.witness,
            }))
        }
    }
}

/// Writes the bundled examples: operads, symmetric sequences, functor
/// sequences, and a sphere point.
fn emit_corpus(out_dir: &Path) -> anyhow::Result<Vec<String>> {
    use opcalc_core::polyfun::{Monomial, PolyMultiFun};
    use opcalc_core::symseq::{unit_seq, PointedSigmaSet};

    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    let mut emit = |name: &str, value: Value| -> anyhow::Result<()> {
        let path = out_dir.join(name);
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        fs::write(&path, text)?;
        written.push(name.to_string());
        Ok(())
    };

    emit("com3.json", serde_json::to_value(OperadData::com(3))?)?;
    emit("ass3.json", serde_json::to_value(OperadData::ass(3))?)?;
    emit("unit-symseq.json", serde_json::to_value(unit_seq(3))?)?;

    let sign_seq = SymSeq::new(
        (1..=3)
            .map(|n| {
                let labels = vec![format!("a{n}"), format!("b{n}")];
                if n >= 2 {
                    PointedSigmaSet::new(n, labels, vec![vec![1, 0]; n - 1]).unwrap()
                } else {
                    PointedSigmaSet::trivial(n, labels).unwrap()
                }
            })
            .collect(),
    )?;
    emit("symseq-sign.json", serde_json::to_value(&sign_seq)?)?;
    let singleton = SymSeq::new(
        (1..=3)
            .map(|n| PointedSigmaSet::trivial(n, vec![format!("x{n}")]).unwrap())
            .collect(),
    )?;
    emit("symseq-singleton.json", serde_json::to_value(&singleton)?)?;

    let g = PolyFunSeq::new(vec![
        PolyMultiFun::new(1, vec![Monomial::simple(&["A"], &[1])])?,
        PolyMultiFun::new(2, vec![Monomial::simple(&["B"], &[1, 1])])?,
    ])?;
    let f = PolyFunSeq::new(vec![
        PolyMultiFun::new(1, vec![Monomial::simple(&["C"], &[1])])?,
        PolyMultiFun::new(2, vec![Monomial::simple(&["D"], &[1, 1])])?,
    ])?;
    emit("funseq-g.json", serde_json::to_value(&g)?)?;
    emit("funseq-f.json", serde_json::to_value(&f)?)?;
    emit(
        "smash-powers.json",
        serde_json::to_value(opcalc_core::polyfun::smash_powers(4))?,
    )?;
    emit(
        "sphere-point.json",
        serde_json::to_value(SpherePoint::Point(SimplexPoint::parse(&[
            "1/2", "1/6", "1/3",
        ])?))?,
    )?;
    Ok(written)
}
