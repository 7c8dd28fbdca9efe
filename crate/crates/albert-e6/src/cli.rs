//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the exit code with the rendered output, so it can be driven from
//! tests without spawning a process.

use std::time::Instant;

use albert_e6_core::albert::{Albert, AlbertVector};
use albert_e6_core::gf::Gf;
use albert_e6_core::orbits::{
    count_white_formula, count_white_points, count_white_stratified, order_e6, order_se6, reduce_to_canonical,
    stabilizer_order_consistency, CanonicalKind,
};
use albert_e6_core::packed::{pack, unpack};
use albert_e6_core::se6::word_to_map;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bfs::{
    full_generating_set, pack_generators, packed_orbit, white_point_orbit_bfs, white_stabiliser_generators,
    DEFAULT_BUDGET,
};
use crate::enumerate::count_white_enumerate;
use crate::report::{big, Format, Report};
use crate::suites::{run_suite, Suite};
use crate::text::{format_vector, format_word, parse_field, parse_vector, parse_word, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "albert-e6", version, about = "Exact Albert-space and SE6(q) computations over small finite fields")]
pub struct Cli {
    /// Field order, as q or p^k (q <= 256).
    #[arg(long, global = true, default_value = "2")]
    pub q: String,

    /// Monic irreducible modulus for extension fields, constant term first, e.g. [1,1,1].
    #[arg(long, global = true)]
    pub modulus: Option<String>,

    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "ALBERT_E6_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Omit the elapsed_ms field.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Formula,
    Enumerate,
    Stratified,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colour and determinant of a vector "(a,b,c|A;B;C)".
    Classify { vector: String },
    /// Number of non-zero white vectors.
    CountWhite {
        #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
        method: CountMethod,
    },
    /// Orders of SE6(q) and E6(q).
    Order,
    /// White-point orbit of a start vector.
    Orbit {
        #[arg(long, default_value = "(0,0,1|0;0;0)")]
        start: String,
        /// "full", "stabiliser", or a ";"-separated list of generators.
        #[arg(long, default_value = "full")]
        gens: String,
        /// Largest orbit a generic search may visit.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Include the orbit points in the report.
        #[arg(long)]
        list: bool,
    },
    /// Word mapping a vector to its canonical representative.
    Reduce { vector: String },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Number of random cases for sampled checks.
        #[arg(long)]
        samples: Option<u64>,
    },
    /// 27x27 matrix of a ";"-separated generator word.
    Matrix { word: String },
}

/// Exit code and rendered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("invalid {what} {input:?}: {err}")]
    Parse { what: &'static str, input: String, err: ParseError },
    #[error(transparent)]
    Core(#[from] albert_e6_core::error::Error),
}

fn parse<T>(what: &'static str, input: &str, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|err| CliError::Parse { what, input: input.into(), err })
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let pool = match cli.threads {
        Some(0) => return usage("--threads must be at least 1".into()),
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return usage(format!("cannot start worker threads: {e}")),
    };
    let started = Instant::now();
    match pool.install(|| execute(&cli)) {
        Ok((mut report, passed)) => {
            if !cli.no_timing {
                report.set("elapsed_ms", started.elapsed().as_millis() as u64);
            }
            let code = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Outcome { code, stdout: report.render(cli.format), stderr: String::new() }
        }
        Err(e) => usage(e.to_string()),
    }
}

fn usage(msg: String) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn execute(cli: &Cli) -> Result<(Report, bool), CliError> {
    let spec = parse("field", &cli.q, parse_field(&cli.q, cli.modulus.as_deref()))?;
    let q = spec.order();
    let j = Albert::new(Gf::new(spec));
    let f = j.field();
    let mut passed = true;
    let name = match &cli.command {
        Command::Classify { .. } => "classify",
        Command::CountWhite { .. } => "count-white",
        Command::Order => "order",
        Command::Orbit { .. } => "orbit",
        Command::Reduce { .. } => "reduce",
        Command::Verify { .. } => "verify",
        Command::Matrix { .. } => "matrix",
    };
    let mut r = Report::new(name);
    r.set("q", q);
    if f.spec().degree() > 1 {
        r.set("field", f.spec().to_string());
    }
    match &cli.command {
        Command::Classify { vector } => {
            let v = parse("vector", vector, parse_vector(&j, vector))?;
            r.set("vector", format_vector(f, &v));
            r.set("color", j.classify(&v)?.name());
            r.set("delta", f.format(j.delta(&v)));
        }
        Command::CountWhite { method } => {
            let m = method.to_possible_value().expect("no skipped variants");
            r.set("method", m.get_name());
            match method {
                CountMethod::Formula => {
                    r.set("white_vectors", big(&count_white_formula(q)?));
                }
                CountMethod::Stratified => {
                    let s = count_white_stratified(q)?;
                    r.set("white_vectors", big(&s.total));
                    r.set("n10", big(&s.n10)).set("n26_minus_10", big(&s.n26_minus_10)).set("outside", big(&s.outside));
                }
                CountMethod::Enumerate => {
                    let c = count_white_enumerate(q)?;
                    r.set("white_vectors", c.total());
                    r.set("n10", c.n10).set("n26_minus_10", c.n26_minus_10).set("outside", c.outside);
                    passed = num_bigint::BigUint::from(c.total()) == count_white_formula(q)?;
                    r.set("matches_formula", passed);
                }
            }
            r.set("white_points", big(&count_white_points(q)?));
        }
        Command::Order => {
            r.set("order_se6", order_se6(q)?.to_string());
            r.set("order_e6", order_e6(q)?.to_string());
            r.set("centre", if (q - 1) % 3 == 0 { 3 } else { 1 });
            r.set("white_points", big(&count_white_points(q)?));
            r.set("stabilizer_consistent", stabilizer_order_consistency(q)?);
        }
        Command::Orbit { start, gens, budget, list } => {
            let v = parse("vector", start, parse_vector(&j, start))?;
            let o = j.octonions();
            let gens = match gens.trim() {
                "full" => full_generating_set(o),
                "stabiliser" | "stabilizer" => white_stabiliser_generators(o),
                other => parse("generator list", gens, parse_word(o, other))?,
            };
            r.set("start", format_vector(f, &v));
            r.set("generators", gens.len());
            let mut points: Vec<AlbertVector> = if q == 2 {
                if !j.whiteness_conditions(&v)? {
                    return Err(albert_e6_core::error::Error::NotWhite.into());
                }
                let orbit = packed_orbit(&pack_generators(&j, &gens)?, pack(&v));
                r.set("orbit_size", orbit.size());
                if *list {
                    orbit.iter().map(unpack).collect()
                } else {
                    Vec::new()
                }
            } else {
                let orbit = white_point_orbit_bfs(&j, &v, &gens, *budget)?;
                r.set("orbit_size", orbit.len());
                if *list {
                    orbit.iter().map(|p| *p.representative()).collect()
                } else {
                    Vec::new()
                }
            };
            if *list {
                points.sort();
                r.set("points", points.iter().map(|p| format_vector(f, p)).collect::<Vec<_>>());
            }
        }
        Command::Reduce { vector } => {
            let v = parse("vector", vector, parse_vector(&j, vector))?;
            let cf = reduce_to_canonical(&j, &v)?;
            r.set("input", format_vector(f, &v));
            r.set("kind", cf.kind.color().name());
            r.set(
                "lambda",
                match cf.kind {
                    CanonicalKind::Black(l) => Value::from(f.format(l)),
                    _ => Value::Null,
                },
            );
            r.set("representative", format_vector(f, &cf.representative()));
            r.set("delta", f.format(j.delta(&v)));
            r.set("word", format_word(f, &cf.word));
            r.set("word_length", cf.word.len());
        }
        Command::Verify { suite, samples } => {
            let checks = run_suite(*suite, &j, cli.seed, *samples)?;
            passed = checks.iter().all(|c| c.passed);
            r.set("suite", suite.name()).set("seed", cli.seed);
            if let Some(n) = samples {
                r.set("samples", *n);
            }
            r.set("passed", passed);
            r.set("failed", checks.iter().filter(|c| !c.passed).count());
            let rows = checks
                .iter()
                .map(|c| object(json!({"name": c.name, "passed": c.passed, "cases": c.cases, "detail": c.detail})))
                .collect();
            r.set_table("checks", rows);
        }
        Command::Matrix { word } => {
            let w = parse("word", word, parse_word(j.octonions(), word))?;
            let m = word_to_map(&j, &w)?;
            r.set("word", format_word(f, &w));
            let rows = (0..27)
                .map(|i| {
                    let mut row = Map::new();
                    for (c, x) in m.matrix().row(i).iter().enumerate() {
                        row.insert(format!("c{c}"), f.format(*x).into());
                    }
                    row
                })
                .collect();
            r.set_table("rows", rows);
        }
    }
    Ok((r, passed))
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}
