use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use multiorder::chamber::{
    face_keys, for_each_chamber, min_clamp, search_with, ChamberOptions, DEFAULT_BUDGET,
};
use multiorder::order::{
    geq, is_generic, sandwich_classify, triangle, CharVector, OrderEngine, OrderKind,
};
use multiorder::verify::{run_suite, Suite, VerifyOptions};
use multiorder::{Error, Multipartition};

mod output;

use output::{dot_graph, order_matrix_json, SCHEMA};

#[derive(Parser)]
#[command(name = "multiorder", version, about = "Orders on multipartitions of n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two multipartitions under a character.
    Compare(CompareArgs),
    /// Export the Hasse diagram (DOT) and full relation (JSON) of an order.
    Poset(PosetArgs),
    /// Run an exhaustive check suite.
    Verify(VerifyArgs),
    /// Search every chamber for pairs with Λ ≥ M but not Λ ▷ M.
    Search(SearchArgs),
    /// List one representative character per distinct ≥ order.
    Chambers(ChamberArgs),
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Comma-separated rationals, e.g. 0,1/2,17/8,9/4.
    #[arg(long, allow_hyphen_values = true)]
    chi: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PosetArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    chi: String,
    #[arg(long, default_value = "geq")]
    kind: OrderKind,
    /// Directory for poset.dot and poset.json; DOT goes to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Chamber representatives used by the order and orbit suites.
    #[arg(long, default_value_t = VerifyOptions::default().chambers)]
    chambers: usize,
    #[arg(long, default_value_t = VerifyOptions::default().budget)]
    budget: u128,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Largest wall offset resolved; defaults to 2(n-1).
    #[arg(long)]
    clamp: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also visit generic characters lying on walls.
    #[arg(long)]
    walls: bool,
}

#[derive(Args)]
struct ChamberArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    clamp: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Emit a seeded random sample of this many chambers instead of all.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compare(a) => compare(a),
        Command::Poset(a) => poset(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Chambers(a) => chambers(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::NonGeneric { .. } => 3,
                Error::BudgetExceeded { .. } => 4,
                _ => 2,
            })
        }
    }
}

fn parse_chi(s: &str) -> Result<CharVector, Error> {
    Ok(s.parse::<CharVector>()?)
}

fn parse_mp(s: &str) -> Result<Multipartition, Error> {
    Ok(s.parse::<Multipartition>()?)
}

fn check_r(r: usize) -> Result<(), Error> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    Ok(())
}

fn clamp_for(n: usize, clamp: Option<i64>) -> i64 {
    clamp.unwrap_or_else(|| min_clamp(n))
}

fn compare(args: CompareArgs) -> CmdResult {
    let chi = parse_chi(&args.chi)?;
    let a = parse_mp(&args.a)?;
    let b = parse_mp(&args.b)?;
    let ge = geq(&a, &b, &chi)?;
    let generic = is_generic(&chi, a.size());
    let tri = triangle(&a, &b, &chi)?;
    let tag = if generic {
        Some(sandwich_classify(&a, &b, &chi)?)
    } else {
        eprintln!(
            "warning: {chi} is not generic for n = {}; no sandwich tag",
            a.size()
        );
        None
    };
    if args.json {
        let v = json!({
            "schema": SCHEMA,
            "a": a,
            "b": b,
            "chi": chi,
            "generic": generic,
            "geq": ge,
            "triangle": tri,
            "sandwich": tag,
        });
        println!("{v}");
    } else {
        println!("geq={ge}");
        println!("triangle={tri}");
        if let Some(t) = tag {
            println!("sandwich={t}");
        }
    }
    Ok(())
}

fn poset(args: PosetArgs) -> CmdResult {
    check_r(args.r)?;
    let chi = parse_chi(&args.chi)?;
    if chi.r() != args.r {
        return Err(Error::DimensionMismatch {
            expected: args.r,
            found: chi.r(),
        }
        .into());
    }
    let engine = OrderEngine::new(args.n, args.r);
    let m = engine.build(&chi, args.kind)?;
    let dot = dot_graph(&m);
    match args.out {
        None => print!("{dot}"),
        Some(dir) => {
            fs::create_dir_all(&dir)?;
            fs::write(dir.join("poset.dot"), dot)?;
            let mut v = order_matrix_json(&m);
            v["n"] = json!(args.n);
            v["r"] = json!(args.r);
            v["chi"] = json!(chi);
            fs::write(dir.join("poset.json"), format!("{v}\n"))?;
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> CmdResult {
    check_r(args.r)?;
    let opts = VerifyOptions {
        chambers: args.chambers,
        budget: args.budget,
    };
    let report = run_suite(args.suite, args.n, args.r, opts)?;
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["schema"] = json!(SCHEMA);
    v["passed"] = json!(report.passed());
    println!("{v}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn search(args: SearchArgs) -> CmdResult {
    check_r(args.r)?;
    let opts = ChamberOptions {
        clamp: clamp_for(args.n, args.clamp),
        include_walls: args.walls,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut write_err = None;
    let summary = search_with(args.n, args.r, opts, args.budget, |rep| {
        let line = json!({"schema": SCHEMA, "report": rep});
        if let Err(e) = writeln!(out, "{line}") {
            write_err.get_or_insert(e);
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    writeln!(out, "{}", json!({"schema": SCHEMA, "summary": summary}))?;
    Ok(())
}

fn chambers(args: ChamberArgs) -> CmdResult {
    check_r(args.r)?;
    let opts = ChamberOptions {
        clamp: clamp_for(args.n, args.clamp),
        include_walls: false,
    };
    let engine = OrderEngine::new(args.n, args.r);
    let keys = face_keys(&engine, opts)?;
    let needed = (keys.len() as u128) * (engine.len() as u128).pow(2);
    if needed > args.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: args.budget,
        }
        .into());
    }
    let mut rows: Vec<Value> = Vec::new();
    for_each_chamber(&engine, &keys, opts.clamp, |c, geq| {
        rows.push(json!({
            "index": c.index,
            "chi": c.chi,
            "face": c.face.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "comparable_pairs": geq.count_ones(),
            "digest": hex::encode(c.digest),
        }));
        Ok(std::ops::ControlFlow::Continue(()))
    })?;
    let total = rows.len();
    if let Some(k) = args.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut picked = sample(&mut rng, total, k.min(total)).into_vec();
        picked.sort_unstable();
        rows = picked.into_iter().map(|i| rows[i].take()).collect();
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for row in rows {
        writeln!(out, "{}", json!({"schema": SCHEMA, "chamber": row}))?;
    }
    writeln!(
        out,
        "{}",
        json!({"schema": SCHEMA, "summary": {"n": args.n, "r": args.r, "clamp": opts.clamp, "faces": keys.len(), "chambers": total}})
    )?;
    Ok(())
}
