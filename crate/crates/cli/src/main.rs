use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tplancherel::littlewood::decompose;
use tplancherel::operators::{certify_polynomiality, plancherel_average_par, Statistic, Verdict};
use tplancherel::stats::StatSyntax;
use tplancherel::verify::{run_suite, Suite, SuiteParams};
use tplancherel::{BoundarySequence, Partition, StatSpec};

#[derive(Parser)]
#[command(
    name = "tplancherel",
    version,
    about = "Exact t-Plancherel averages, Littlewood decompositions and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the t-core, t-quotients and core offsets of a partition as JSON.
    Decompose {
        /// Comma-separated parts, or "-" for the empty partition.
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Tabulate P(n) = Σ F·g over the layers of a t-core, one row per n.
    Average {
        #[arg(long, default_value = "-")]
        core: String,
        #[arg(long)]
        t: usize,
        /// Single value, inclusive range a..b, or comma list.
        #[arg(long, default_value = "0..3")]
        n: String,
        /// One column per statistic, e.g. "hook:j=0,pow=2,G".
        #[arg(long = "stat", required = true)]
        stats: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Sample P(0..=d+s) for a product of statistics and certify that the
    /// differences of order d+1 vanish. Exits 1 when refuted.
    Certify {
        #[arg(long, default_value = "-")]
        core: String,
        #[arg(long)]
        t: usize,
        /// Factors of the product; G-weighted when any factor carries the G flag.
        #[arg(long = "stat", required = true)]
        stats: Vec<String>,
        /// Claimed degree; defaults to the safe bound for the product.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 3)]
        safety: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a named verification suite and print its report as JSON.
    Verify {
        /// bijection, fundamental, per-partition, averages, operators or polynomiality.
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

/// Exit status 2 with a message.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Usage> {
    let bad = || {
        Usage(format!(
            "cannot parse {s:?} as a number, range a..b or list"
        ))
    };
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect()
}

fn parse_core(core: &str, t: usize) -> Result<Partition, Usage> {
    if t == 0 {
        return Err(Usage("t must be positive".into()));
    }
    let mu: Partition = core.parse()?;
    mu.check_t_core(t)?;
    Ok(mu)
}

fn parse_stat(s: &str, t: usize) -> Result<(StatSpec, bool), Usage> {
    let syntax = StatSyntax::parse(s)?;
    let weighted = syntax.weight_g;
    Ok((syntax.into_spec(Some(t))?, weighted))
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, Usage> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()?)
}

fn decompose_cmd(partition: &str, t: usize) -> Result<ExitCode, Usage> {
    let lambda: Partition = partition.parse()?;
    let dec = decompose(&lambda, t)?;
    let mut out = serde_json::to_value(&dec)?;
    let obj = out.as_object_mut().expect("struct serializes to an object");
    obj.insert("partition".into(), json!(lambda.to_string()));
    obj.insert(
        "boundary".into(),
        json!(BoundarySequence::encode(&lambda).to_string()),
    );
    obj.insert("size".into(), json!(lambda.size()));
    obj.insert("size_identity".into(), json!(dec.size() == lambda.size()));
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn average_cmd(
    core: &str,
    t: usize,
    n: &str,
    stats: &[String],
    format: Format,
    workers: usize,
) -> Result<ExitCode, Usage> {
    let mu = parse_core(core, t)?;
    let ns = parse_list(n)?;
    let columns: Vec<(String, Statistic)> = stats
        .iter()
        .map(|s| {
            let (spec, weighted) = parse_stat(s, t)?;
            let mut g = Statistic::weighted(t, vec![spec]);
            let mut name = spec.to_string();
            if weighted {
                name.push_str(",G");
            } else {
                g = g.without_weight();
            }
            Ok((name, g))
        })
        .collect::<Result<_, Usage>>()?;
    let pool = pool(workers)?;
    let mut rows = Vec::with_capacity(ns.len());
    for &k in &ns {
        let values = columns
            .iter()
            .map(|(_, g)| {
                pool.install(|| plancherel_average_par(g, &mu, t, k))
                    .map(|v| v.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((k, values));
    }
    match format {
        Format::Tsv => {
            let header: Vec<&str> = columns.iter().map(|(name, _)| name.as_str()).collect();
            println!("n\t{}", header.join("\t"));
            for (k, values) in rows {
                println!("{k}\t{}", values.join("\t"));
            }
        }
        Format::Json => {
            let out = json!({
                "core": mu.to_string(),
                "t": t,
                "stats": columns.iter().map(|(name, _)| name.clone()).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(k, v)| json!({"n": k, "values": v})).collect::<Vec<Value>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn certify_cmd(
    core: &str,
    t: usize,
    stats: &[String],
    degree: Option<usize>,
    safety: usize,
    workers: usize,
) -> Result<ExitCode, Usage> {
    let mu = parse_core(core, t)?;
    let mut factors = Vec::new();
    let mut weighted = false;
    for s in stats {
        let (spec, w) = parse_stat(s, t)?;
        factors.push(spec);
        weighted |= w;
    }
    let mut g = Statistic::weighted(t, factors);
    if !weighted {
        g = g.without_weight();
    }
    let d = degree.unwrap_or_else(|| g.degree_bound());
    let table = pool(workers)?.install(|| certify_polynomiality(&g, &mu, t, d, safety))?;
    let mut out = serde_json::to_value(&table)?;
    let obj = out.as_object_mut().expect("struct serializes to an object");
    obj.insert("statistic".into(), json!(g.to_string()));
    obj.insert("core".into(), json!(mu.to_string()));
    obj.insert("t".into(), json!(t));
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(
        if table.verdict == Verdict::Certified && table.telescoping {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        },
    )
}

fn verify_cmd(
    suite: &str,
    max_size: Option<usize>,
    t: Option<&str>,
    n: Option<&str>,
    seed: u64,
    workers: usize,
) -> Result<ExitCode, Usage> {
    let suite: Suite = suite.parse().map_err(Usage)?;
    let params = SuiteParams {
        max_size,
        ts: t.map(parse_list).transpose()?,
        ns: n.map(parse_list).transpose()?,
        seed,
    };
    if params.ts.as_ref().is_some_and(|ts| ts.contains(&0)) {
        return Err(Usage("t must be positive".into()));
    }
    let report = pool(workers)?.install(|| run_suite(suite, &params))?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decompose { partition, t } => decompose_cmd(partition, *t),
        Command::Average {
            core,
            t,
            n,
            stats,
            format,
            workers,
        } => average_cmd(core, *t, n, stats, *format, *workers),
        Command::Certify {
            core,
            t,
            stats,
            degree,
            safety,
            workers,
        } => certify_cmd(core, *t, stats, *degree, *safety, *workers),
        Command::Verify {
            suite,
            max_size,
            t,
            n,
            seed,
            workers,
        } => verify_cmd(
            suite,
            *max_size,
            t.as_deref(),
            n.as_deref(),
            *seed,
            *workers,
        ),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
