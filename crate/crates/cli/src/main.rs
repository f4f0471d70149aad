//! Command-line front end: verification, statistics, products, extremal
//! search, and the numeric bound machinery, each emitting a reproducible
//! run report.
//!
//! Exit codes: 0 success, 1 property violated, 2 input error, 3 budget
//! exhausted without a complete sweep.

mod document;
mod report;

use std::fmt::Display;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use document::{load_document, load_staircase, PairDocument};
use report::{sig, Format, RunReport};

use sandglass::bounds::staircase::{certify_staircase, narrow_rectangle, reference_rectangle, BoundKind};
use sandglass::bounds::{
    a_value, first_bound, first_bound_peak, m_a_lower, m_s_lower, second_bound,
    solve_f_exponent, tolerances, UnitReal,
};
use sandglass::constructions::{power, product};
use sandglass::search::{extremal_search_seeded, SearchBudget, SearchObjective};
use sandglass::sets::{
    is_cancellative, uniformity, GroundSet, RecoveringPair, Side, Uniformity, VerifyStatus,
    ViolationWitness,
};
use sandglass::stats::{
    aharoni_sum, compute_statistics, count_full_union_solutions, full_union_matching,
    union_histogram,
};

#[derive(Parser)]
#[command(name = "sandglass", version)]
#[command(about = "Recovering-pair toolkit: verify, measure, search, certify")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for search commands.
    #[arg(long, global = true, env = "SANDGLASS_THREADS", default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the recovering property and classify the pair.
    ///
    /// PAIR is a file path, `-` for standard input, or a built-in name:
    /// `hexad`, `aharoni-counterexample`, `canonical:<n>[:<e1,e2,...>]`.
    Verify { pair: String },
    /// Structural statistics: union histogram, densities, crowded sets.
    Stats { pair: String },
    /// Multiply two pairs, or raise one to a power; writes the document.
    Product {
        pair: String,
        #[arg(conflicts_with = "power")]
        second: Option<String>,
        /// Raise the first pair to this power instead.
        #[arg(long)]
        power: Option<u32>,
        /// Write the document here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Branch-and-bound sweep for extremal pairs on a small ground set.
    Search {
        /// Ground set size, at most 6.
        #[arg(short = 'n', long = "ground")]
        ground: usize,
        #[arg(long, value_enum)]
        objective: Objective,
        /// Stop after this many search nodes.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Stop after this many milliseconds.
        #[arg(long)]
        time_limit_ms: Option<u64>,
        /// Start from the best known construction instead of scratch.
        #[arg(long)]
        seed_incumbents: bool,
    },
    /// Numeric bound machinery.
    #[command(subcommand)]
    Bounds(BoundsCommand),
}

#[derive(Copy, Clone, ValueEnum)]
enum Objective {
    /// Largest family-size product |A||B|.
    Size,
    /// Most full-union solutions.
    #[value(alias = "full-unions")]
    F,
    /// Largest total union weight.
    Aharoni,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Evaluate the growth bounds at a point (u, t).
    Eval {
        #[arg(short)]
        u: f64,
        #[arg(short)]
        t: f64,
        /// Full-union density, for the typical-intersection lower bound.
        #[arg(long)]
        c: Option<f64>,
    },
    /// Solve for the solution-count exponent s and its base 2^s.
    SolveFn,
    /// Certify a staircase against a threshold over its rectangle.
    Certify {
        /// Built-in dataset name or a staircase JSON file.
        #[arg(long, default_value = "paper-staircase-16")]
        dataset: String,
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long)]
        margin: Option<f64>,
    },
    /// Check how far the rectangle's borders clear the threshold.
    Narrow {
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long)]
        top_slack: Option<f64>,
    },
}

/// A failure that aborts before any report is emitted.
struct Failure {
    message: String,
    code: i32,
}

fn input_error(err: impl Display) -> Failure {
    Failure {
        message: err.to_string(),
        code: 2,
    }
}

fn violation(err: impl Display) -> Failure {
    Failure {
        message: err.to_string(),
        code: 1,
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Verify { pair } => cmd_verify(pair, cli.format),
        Command::Stats { pair } => cmd_stats(pair, cli.format),
        Command::Product {
            pair,
            second,
            power,
            output,
        } => cmd_product(pair, second.as_deref(), *power, output.as_deref()),
        Command::Search {
            ground,
            objective,
            max_nodes,
            time_limit_ms,
            seed_incumbents,
        } => cmd_search(
            *ground,
            *objective,
            *max_nodes,
            *time_limit_ms,
            *seed_incumbents,
            cli.threads,
            cli.format,
        ),
        Command::Bounds(sub) => cmd_bounds(sub, cli.format),
    }
}

fn loaded_pair(source: &str) -> Result<RecoveringPair, Failure> {
    let doc = load_document(source).map_err(input_error)?;
    let mut pair = doc.to_pair().map_err(input_error)?;
    pair.verify();
    Ok(pair)
}

fn side_name(side: &Side) -> &'static str {
    match side {
        Side::A => "A",
        Side::B => "B",
    }
}

fn witness_value(witness: &ViolationWitness) -> Value {
    json!({
        "side": side_name(&witness.side),
        "a": witness.a.elements(),
        "b": witness.b.elements(),
        "a_prime": witness.a_prime.elements(),
        "b_prime": witness.b_prime.elements(),
    })
}

fn uniformity_value(pair: &RecoveringPair) -> Value {
    match uniformity(pair.a_family(), pair.b_family()) {
        Err(_) => Value::Null,
        Ok(Uniformity::NonUniform) => json!({"kind": "non-uniform"}),
        Ok(Uniformity::Uniform { k }) => json!({"kind": "uniform", "k": k}),
        Ok(Uniformity::CompletelyUniform { k }) => {
            json!({"kind": "completely-uniform", "k": k})
        }
    }
}

fn cmd_verify(source: &str, format: Format) -> Result<i32, Failure> {
    let started = Instant::now();
    let pair = loaded_pair(source)?;
    let (recovering, witness) = match pair.status() {
        VerifyStatus::Recovering => (true, Value::Null),
        VerifyStatus::Violated(w) => (false, witness_value(w)),
        VerifyStatus::Unverified => unreachable!("pair was just verified"),
    };
    let cancellative = is_cancellative(pair.a_family(), pair.b_family())
        .expect("families share a ground")
        .holds();
    let results = json!({
        "recovering": recovering,
        "cancellative": cancellative,
        "uniformity": uniformity_value(&pair),
        "size": pair.pair_size().to_string(),
        "aharoni_sum": aharoni_sum(&pair).to_string(),
        "witness": witness,
    });
    let report = RunReport::new("verify", json!({"pair": source}), results, started.elapsed());
    report.emit(format);
    Ok(if recovering { 0 } else { 1 })
}

fn rational_text(r: num_rational::Rational64) -> String {
    r.to_string()
}

fn optional_rational(r: Option<num_rational::Rational64>) -> Value {
    match r {
        Some(r) => Value::String(rational_text(r)),
        None => Value::Null,
    }
}

fn cmd_stats(source: &str, format: Format) -> Result<i32, Failure> {
    let started = Instant::now();
    let pair = loaded_pair(source)?;
    if let VerifyStatus::Violated(w) = pair.status() {
        return Err(violation(format!(
            "pair is not recovering; {} side witness {} / {} vs {} / {}",
            side_name(&w.side),
            w.a,
            w.b,
            w.a_prime,
            w.b_prime
        )));
    }
    let stats = compute_statistics(&pair).map_err(input_error)?;
    let histogram: Vec<Value> = union_histogram(&pair)
        .counts()
        .iter()
        .map(|(size, count)| json!([size, count]))
        .collect();
    let matching = full_union_matching(&pair).map_err(violation)?;
    let matching: Vec<Value> = matching
        .iter()
        .map(|(a, b)| json!({"a": a.elements(), "b": b.elements()}))
        .collect();
    let crowded: Vec<Value> = stats
        .crowded
        .iter()
        .map(|mask| json!(mask.elements()))
        .collect();
    let results = json!({
        "size": pair.pair_size().to_string(),
        "union_histogram": histogram,
        "mode_size": stats.mode_size,
        "mode_count": stats.mode_count,
        "u_mode": rational_text(stats.u_mode),
        "t_density": sig(stats.t_density),
        "degenerate": stats.degenerate,
        "c": optional_rational(stats.c),
        "m_s": optional_rational(stats.m_s),
        "m_a": optional_rational(stats.m_a),
        "crowded": crowded,
        "full_union_count": count_full_union_solutions(&pair),
        "matching": matching,
        "aharoni_sum": aharoni_sum(&pair).to_string(),
    });
    let report = RunReport::new("stats", json!({"pair": source}), results, started.elapsed());
    report.emit(format);
    Ok(0)
}

fn recovering_or_fail(source: &str) -> Result<RecoveringPair, Failure> {
    let pair = loaded_pair(source)?;
    if !pair.is_verified_recovering() {
        return Err(violation(format!("{source} is not a recovering pair")));
    }
    Ok(pair)
}

fn cmd_product(
    source: &str,
    second: Option<&str>,
    power_of: Option<u32>,
    output: Option<&std::path::Path>,
) -> Result<i32, Failure> {
    let left = recovering_or_fail(source)?;
    let (result, name) = match (second, power_of) {
        (None, Some(r)) => (
            power(&left, r).map_err(input_error)?,
            format!("power({source},{r})"),
        ),
        (Some(other), None) => {
            let right = recovering_or_fail(other)?;
            (
                product(&left, &right).map_err(input_error)?,
                format!("product({source},{other})"),
            )
        }
        (None, None) => {
            return Err(input_error("provide a second pair or --power"));
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let doc = PairDocument::from_pair(&result, Some(&name));
    let text = serde_json::to_string_pretty(&doc).expect("document serializes");
    match output {
        Some(path) => std::fs::write(path, text + "\n").map_err(input_error)?,
        None => println!("{text}"),
    }
    Ok(0)
}

fn objective_of(objective: Objective) -> SearchObjective {
    match objective {
        Objective::Size => SearchObjective::MaxSize,
        Objective::F => SearchObjective::MaxFullUnions,
        Objective::Aharoni => SearchObjective::MaxAharoni,
    }
}

fn objective_name(objective: Objective) -> &'static str {
    match objective {
        Objective::Size => "size",
        Objective::F => "f",
        Objective::Aharoni => "aharoni",
    }
}

fn cmd_search(
    n: usize,
    objective: Objective,
    max_nodes: Option<u64>,
    time_limit_ms: Option<u64>,
    seed_incumbents: bool,
    threads: usize,
    format: Format,
) -> Result<i32, Failure> {
    let started = Instant::now();
    let ground = GroundSet::new(n).map_err(input_error)?;
    let budget = SearchBudget {
        max_nodes,
        time_limit: time_limit_ms.map(Duration::from_millis),
    };
    let outcome = extremal_search_seeded(ground, objective_of(objective), budget, threads, seed_incumbents)
        .map_err(input_error)?;
    let witness = PairDocument::from_pair(&outcome.witness, Some("search witness"));
    let results = json!({
        "objective": objective_name(objective),
        "best_value": outcome.best_value,
        "exhausted": outcome.exhausted,
        "nodes": outcome.nodes,
        "rejections_logged": outcome.rejections.len(),
        "witness": serde_json::to_value(&witness).expect("document serializes"),
    });
    let inputs = json!({
        "n": n,
        "objective": objective_name(objective),
        "max_nodes": max_nodes,
        "time_limit_ms": time_limit_ms,
        "seed_incumbents": seed_incumbents,
        "threads": threads,
    });
    let exhausted = outcome.exhausted;
    let report = RunReport::new("search", inputs, results, started.elapsed());
    report.emit(format);
    Ok(if exhausted { 0 } else { 3 })
}

/// A bound value, or the reason it is undefined at this point.
fn bound_entry<E: Display>(value: Result<f64, E>) -> (Value, Value) {
    match value {
        Ok(v) => (json!(sig(v)), Value::Null),
        Err(e) => (Value::Null, Value::String(e.to_string())),
    }
}

fn cmd_bounds(sub: &BoundsCommand, format: Format) -> Result<i32, Failure> {
    match sub {
        BoundsCommand::Eval { u, t, c } => cmd_bounds_eval(*u, *t, *c, format),
        BoundsCommand::SolveFn => {
            let started = Instant::now();
            let f = solve_f_exponent::<f64>();
            let results = json!({"s": sig(f.s), "base": sig(f.base)});
            let report = RunReport::new("bounds solve-fn", json!({}), results, started.elapsed());
            report.emit(format);
            Ok(0)
        }
        BoundsCommand::Certify {
            dataset,
            threshold,
            margin,
        } => cmd_bounds_certify(dataset, *threshold, *margin, format),
        BoundsCommand::Narrow {
            threshold,
            top_slack,
        } => cmd_bounds_narrow(*threshold, *top_slack, format),
    }
}

fn cmd_bounds_eval(u: f64, t: f64, c: Option<f64>, format: Format) -> Result<i32, Failure> {
    let started = Instant::now();
    let uu = UnitReal::new(u).map_err(input_error)?;
    let first = first_bound(uu, t);
    let peak = first_bound_peak(t).value();
    let (second, second_note) = bound_entry(second_bound(uu, t));
    let ms = m_s_lower(uu, t);
    let (a, a_note) = match &ms {
        Ok(ms) => bound_entry(a_value(uu, t, *ms)),
        Err(e) => (Value::Null, Value::String(e.to_string())),
    };
    let (ms, ms_note) = bound_entry(ms);
    let mut results = json!({
        "first": sig(first),
        "first_base": sig(first.exp2()),
        "peak_u": sig(peak),
        "second": second,
        "second_note": second_note,
        "m_s_lower": ms,
        "m_s_note": ms_note,
        "a_value": a,
        "a_note": a_note,
    });
    if let Some(c) = c {
        let cc = UnitReal::new(c).map_err(input_error)?;
        let (ma, ma_note) = bound_entry(m_a_lower(uu, t, cc));
        results["m_a_lower"] = ma;
        results["m_a_note"] = ma_note;
    }
    let report = RunReport::new(
        "bounds eval",
        json!({"u": u, "t": t, "c": c}),
        results,
        started.elapsed(),
    );
    report.emit(format);
    Ok(0)
}

fn gap_side(bounds: (num_rational::Rational64, num_rational::Rational64)) -> Value {
    json!([rational_text(bounds.0), rational_text(bounds.1)])
}

fn cmd_bounds_certify(
    dataset: &str,
    threshold: Option<f64>,
    margin: Option<f64>,
    format: Format,
) -> Result<i32, Failure> {
    let started = Instant::now();
    let threshold = threshold.unwrap_or(tolerances::STAIRCASE_THRESHOLD);
    let margin = margin.unwrap_or(tolerances::STAIRCASE_MARGIN);
    let (points, rect) = load_staircase(dataset).map_err(input_error)?;
    let report = certify_staircase::<f64>(&points, &rect, threshold, margin).map_err(input_error)?;
    let point_values: Vec<Value> = report
        .points
        .iter()
        .map(|pe| {
            json!({
                "u": rational_text(pe.point.u),
                "t": rational_text(pe.point.t),
                "kind": match pe.point.kind { BoundKind::First => "first", BoundKind::Second => "second" },
                "value": sig(pe.value),
                "margin": sig(pe.margin),
            })
        })
        .collect();
    let gaps: Vec<Value> = report
        .gaps
        .iter()
        .map(|gap| json!({"u": gap_side(gap.u), "t": gap_side(gap.t)}))
        .collect();
    let min_margin = match report.min_margin() {
        Some(m) => json!(sig(m)),
        None => Value::Null,
    };
    let results = json!({
        "threshold": sig(report.threshold),
        "required_margin": report.required_margin,
        "points": point_values,
        "min_margin": min_margin,
        "coverage_complete": report.coverage_complete,
        "gaps": gaps,
        "achieved": sig(report.achieved),
        "derived_bound": sig(report.derived_bound),
        "threshold_bound": sig(report.threshold_bound),
        "verdict": report.verdict,
    });
    let verdict = report.verdict;
    let inputs = json!({"dataset": dataset, "threshold": threshold, "margin": margin});
    let run = RunReport::new("bounds certify", inputs, results, started.elapsed());
    run.emit(format);
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_bounds_narrow(
    threshold: Option<f64>,
    top_slack: Option<f64>,
    format: Format,
) -> Result<i32, Failure> {
    let started = Instant::now();
    let threshold = threshold.unwrap_or(tolerances::STAIRCASE_THRESHOLD);
    let top_slack = top_slack.unwrap_or(tolerances::NARROW_TOP_SLACK);
    let rect = reference_rectangle();
    let narrowed = narrow_rectangle::<f64>(&rect, threshold, top_slack).map_err(input_error)?;
    let results = json!({
        "bottom_value": sig(narrowed.bottom_value),
        "bottom_clear": narrowed.bottom_clear,
        "left_value": sig(narrowed.left_value),
        "right_value": sig(narrowed.right_value),
        "sides_clear": narrowed.sides_clear,
        "top_gap": sig(narrowed.top_gap),
        "top_clear": narrowed.top_clear,
        "verdict": narrowed.verdict,
    });
    let inputs = json!({"threshold": threshold, "top_slack": top_slack});
    let run = RunReport::new("bounds narrow", inputs, results, started.elapsed());
    run.emit(format);
    Ok(if narrowed.verdict { 0 } else { 1 })
}
