use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fullsub::percolation::{count_relatively_half_full, half_full_core, random_initial_set, DEFAULT_THETA_CAP};
use fullsub::{
    disc_exact, disc_local_search, full_two_thirds, g_value, gen_glued, greedy_full, greedy_full_from,
    heuristic_largest_full, jumbledness_exact, one_over_r_full, oracle_largest_full, qfull_partition, small_p_full,
    theta_estimate, theta_exact, Error, FullMode, FullSubgraphResult, GMethod, Graph, Rational, Sign, TieBreak,
    VertexSet, DEFAULT_EXACT_CAP,
};
use fullsub_cli::exit_code;
use fullsub_cli::sweep::{self, Algorithm, Family, SweepConfig};

#[derive(Parser)]
#[command(
    name = "fullsub",
    version,
    about = "Full induced subgraphs, discrepancy and majority percolation"
)]
struct Cli {
    /// seed for every randomized step
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// worker threads for sweeps and Monte Carlo runs
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// largest order enumerated exhaustively
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list
    Gen(GenArgs),
    /// Discrepancy or jumbledness of a graph
    Disc(DiscArgs),
    /// Find a full induced subgraph
    Full(FullArgs),
    /// Relatively full partition or relatively 1/r-full set
    Qfull(QfullArgs),
    /// max(f(G), f(complement)) at the density of G
    G(GArgs),
    /// Majority bootstrap percolation
    Percolate(PercolateArgs),
    /// Run an experiment grid and write CSV
    Sweep(SweepArgs),
    /// Aggregate a sweep CSV
    Summary(SummaryArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Gnp,
    CliqueIsolated,
    MultipartitePlanted,
    Adversary,
    Glued,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: Option<usize>,
    /// edge probability (gnp) or target density (clique-isolated)
    #[arg(long, value_parser = rational)]
    p: Option<Rational>,
    /// edge count (clique-isolated)
    #[arg(long)]
    edges: Option<u64>,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, value_parser = rational)]
    c: Option<Rational>,
    /// glued: first graph
    #[arg(long)]
    a: Option<PathBuf>,
    /// glued: second graph
    #[arg(long)]
    b: Option<PathBuf>,
    /// write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Positive,
    Negative,
    Absolute,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Positive => Sign::Positive,
            SignArg::Negative => Sign::Negative,
            SignArg::Absolute => Sign::Absolute,
        }
    }
}

#[derive(Args)]
struct DiscArgs {
    #[arg(long)]
    input: PathBuf,
    /// defaults to the density of the graph
    #[arg(long, value_parser = rational)]
    p: Option<Rational>,
    #[arg(long, value_enum, default_value_t = SignArg::Positive)]
    sign: SignArg,
    /// restrict to sets of exactly k vertices
    #[arg(long)]
    k: Option<usize>,
    /// report max |delta_p(X)| / |X| instead
    #[arg(long)]
    jumbled: bool,
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FullAlgo {
    Greedy,
    TwoThirds,
    SmallP,
    Oracle,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    MinIndex,
    Antipodal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Cofull,
}

#[derive(Args)]
struct FullArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FullAlgo::Greedy)]
    algo: FullAlgo,
    /// defaults to the density of the graph; two-thirds and small-p always use it
    #[arg(long, value_parser = rational)]
    p: Option<Rational>,
    #[arg(long, value_enum, default_value_t = TieArg::MinIndex)]
    tie_break: TieArg,
    /// greedy: peel from an exact maximiser of the positive discrepancy
    #[arg(long)]
    from_disc: bool,
    /// print the deletion order
    #[arg(long)]
    trace: bool,
    /// oracle: search co-full sets instead
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
}

#[derive(Args)]
struct QfullArgs {
    #[arg(long)]
    input: PathBuf,
    /// split into relatively q-full and (1-q)-full parts
    #[arg(long, value_parser = rational, required_unless_present = "r", conflicts_with = "r")]
    q: Option<Rational>,
    /// find a relatively 1/r-full set
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Heuristic,
}

#[derive(Args)]
struct GArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Heuristic)]
    method: MethodArg,
}

#[derive(Args)]
struct PercolateArgs {
    #[arg(long)]
    input: PathBuf,
    /// initial infection probability
    #[arg(long, value_parser = rational)]
    p: Rational,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// exact theta by enumerating initial sets
    #[arg(long)]
    exact: bool,
    /// show trial 0: its initial set and what it leaves uninfected
    #[arg(long)]
    witness: bool,
    /// count the relatively half-full sets exactly
    #[arg(long)]
    count_half_full: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML configuration; grid flags are ignored when given
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = rational)]
    p: Vec<Rational>,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// seeds per cell
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, value_delimiter = ',', value_enum)]
    algorithms: Vec<Algorithm>,
    /// CSV path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// fill the runtime column
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct SummaryArgs {
    #[arg(long)]
    input: PathBuf,
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Graph::read_edge_list(&text).with_context(|| format!("in {}", path.display()))
}

fn members(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn record(fields: &[(&str, String)]) {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
    println!("record\t{}", body.join("\t"));
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn gen(args: GenArgs, seed: u64) -> anyhow::Result<()> {
    let need_n = || args.n.context("--n is required for this family");
    let g = match args.family {
        GenFamily::Gnp => {
            let p = args.p.clone().context("--p is required for gnp")?;
            sweep::generate(Family::Gnp, need_n()?, &p, 1, seed)?
        }
        GenFamily::CliqueIsolated => {
            let n = need_n()?;
            let edges = match (&args.edges, &args.p) {
                (Some(e), None) => *e,
                (None, Some(p)) => fullsub::constructions::edges_for_density(n, p)?,
                _ => bail!(Error::InvalidInput("give exactly one of --edges and --p".into())),
            };
            fullsub::gen_clique_plus_isolated(n, edges)?
        }
        GenFamily::MultipartitePlanted => {
            let c = args.c.clone().context("--c is required for multipartite-planted")?;
            let planted = fullsub::gen_multipartite_planted(need_n()?, args.r, &c)?;
            eprintln!(
                "planted clique k={} target_edges={} p={}",
                planted.k, planted.target, planted.realized_p
            );
            planted.graph
        }
        GenFamily::Adversary => fullsub::gen_greedy_adversary(need_n()?)?,
        GenFamily::Glued => {
            let a = read_graph(args.a.as_deref().context("--a is required for glued")?)?;
            let b = read_graph(args.b.as_deref().context("--b is required for glued")?)?;
            gen_glued(&a, &b, seed)?
        }
    };
    let text = g.write_edge_list();
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    eprintln!("n={} m={} density={}", g.n(), g.m(), g.density());
    Ok(())
}

fn disc(args: DiscArgs, seed: u64, cap: usize) -> anyhow::Result<()> {
    let g = read_graph(&args.input)?;
    let p = args.p.clone().unwrap_or_else(|| g.density());
    if args.jumbled {
        if args.heuristic {
            bail!(Error::InvalidInput("jumbledness is exact only".into()));
        }
        let rep = jumbledness_exact(&g, &p, args.k, cap)?;
        println!("jumbledness p={p} j={} size={}", rep.j, rep.witness.len());
        println!("witness: {}", members(&rep.witness));
        record(&[
            ("cmd", "disc".into()),
            ("quantity", "jumbledness".into()),
            ("p", p.to_string()),
            ("k", opt(&args.k)),
            ("value", rep.j.to_string()),
            ("size", rep.witness.len().to_string()),
        ]);
        return Ok(());
    }
    let sign: Sign = args.sign.into();
    let (w, how) = if args.heuristic {
        if args.k.is_some() {
            bail!(Error::InvalidInput("--k needs exact mode".into()));
        }
        (disc_local_search(&g, &p, sign, seed, args.restarts)?, "heuristic")
    } else {
        (disc_exact(&g, &p, sign, args.k, cap)?, "exact")
    };
    let sign_name = format!("{sign:?}").to_lowercase();
    println!(
        "disc {sign_name} p={p} value={} delta={} size={} ({how})",
        w.value,
        w.delta,
        w.witness.len()
    );
    println!("witness: {}", members(&w.witness));
    record(&[
        ("cmd", "disc".into()),
        ("sign", sign_name),
        ("mode", how.into()),
        ("p", p.to_string()),
        ("k", opt(&args.k)),
        ("value", w.value.to_string()),
        ("delta", w.delta.to_string()),
        ("size", w.witness.len().to_string()),
    ]);
    Ok(())
}

fn print_full(name: &str, res: &FullSubgraphResult, trace: bool) {
    println!(
        "full {name} p={} size={} min_degree={} guarantee={}",
        res.p_used,
        res.size,
        res.min_degree,
        opt(&res.guarantee)
    );
    println!("witness: {}", members(&res.vertices));
    if trace {
        let order: Vec<String> = res.trace.iter().map(ToString::to_string).collect();
        println!("trace: {}", order.join(" "));
    }
    record(&[
        ("cmd", "full".into()),
        ("algo", name.into()),
        ("p", res.p_used.to_string()),
        ("size", res.size.to_string()),
        ("min_degree", res.min_degree.to_string()),
        ("guarantee", opt(&res.guarantee)),
    ]);
}

fn full(args: FullArgs, seed: u64, cap: usize) -> anyhow::Result<()> {
    let g = read_graph(&args.input)?;
    let density = g.density();
    let p = args.p.clone().unwrap_or_else(|| density.clone());
    if matches!(args.algo, FullAlgo::TwoThirds | FullAlgo::SmallP) && p != density {
        bail!(Error::InvalidInput(
            "two-thirds and small-p work at the density of the graph".into()
        ));
    }
    if args.mode == ModeArg::Cofull && args.algo != FullAlgo::Oracle {
        bail!(Error::InvalidInput("--mode cofull needs --algo oracle".into()));
    }
    let tie = match args.tie_break {
        TieArg::MinIndex => TieBreak::MinIndex,
        TieArg::Antipodal => TieBreak::AdversarialAntipodal,
    };
    let (name, res) = match args.algo {
        FullAlgo::Greedy if args.from_disc => {
            let w = disc_exact(&g, &p, Sign::Positive, None, cap)?;
            let alpha = (!w.value.is_zero()).then_some(&w.value);
            ("greedy", greedy_full_from(&g, &p, &w.witness, tie, alpha)?)
        }
        FullAlgo::Greedy => ("greedy", greedy_full(&g, &p, tie)?),
        FullAlgo::TwoThirds => ("two-thirds", full_two_thirds(&g)?),
        FullAlgo::SmallP => ("small-p", small_p_full(&g)?),
        FullAlgo::Oracle => {
            let mode = match args.mode {
                ModeArg::Full => FullMode::Full,
                ModeArg::Cofull => FullMode::Cofull,
            };
            ("oracle", oracle_largest_full(&g, &p, mode, cap)?)
        }
        FullAlgo::Heuristic => ("heuristic", heuristic_largest_full(&g, &p, seed)?),
    };
    print_full(name, &res, args.trace);
    Ok(())
}

fn qfull(args: QfullArgs, seed: Option<u64>) -> anyhow::Result<()> {
    let g = read_graph(&args.input)?;
    if let Some(r) = args.r {
        let res = one_over_r_full(&g, r)?;
        println!("qfull r={r} size={}", res.size);
        println!("witness: {}", members(&res.vertices));
        record(&[
            ("cmd", "qfull".into()),
            ("r", r.to_string()),
            ("size", res.size.to_string()),
        ]);
        return Ok(());
    }
    let q = args.q.expect("clap requires --q or --r");
    let out = qfull_partition(&g, &q, seed)?;
    let size = |s: &Option<VertexSet>| s.as_ref().map(VertexSet::len);
    println!(
        "qfull q={} variant={} size_q={} size_1mq={} swaps={}",
        out.q,
        out.variant,
        opt(&size(&out.set_q)),
        opt(&size(&out.set_1mq)),
        out.swaps
    );
    if let Some(s) = &out.set_q {
        println!("set_q: {}", members(s));
    }
    if let Some(s) = &out.set_1mq {
        println!("set_1mq: {}", members(s));
    }
    record(&[
        ("cmd", "qfull".into()),
        ("q", out.q.to_string()),
        ("variant", out.variant.to_string()),
        ("size_q", opt(&size(&out.set_q))),
        ("size_1mq", opt(&size(&out.set_1mq))),
        ("swaps", out.swaps.to_string()),
    ]);
    Ok(())
}

fn g_cmd(args: GArgs, seed: u64, cap: usize) -> anyhow::Result<()> {
    let g = read_graph(&args.input)?;
    let method = match args.method {
        MethodArg::Oracle => GMethod::Oracle,
        MethodArg::Heuristic => GMethod::Heuristic,
    };
    let v = g_value(&g, method, cap, seed)?;
    let side = match v.side {
        FullMode::Full => "full",
        FullMode::Cofull => "cofull",
    };
    println!("g value={} side={side} p={}", v.value, g.density());
    println!("witness: {}", members(&v.witness));
    record(&[
        ("cmd", "g".into()),
        ("method", format!("{method:?}").to_lowercase()),
        ("p", g.density().to_string()),
        ("value", v.value.to_string()),
        ("side", side.into()),
    ]);
    Ok(())
}

fn percolate(args: PercolateArgs, seed: u64) -> anyhow::Result<()> {
    let g = read_graph(&args.input)?;
    let p = &args.p;
    let mut fields = vec![("cmd", "percolate".to_string()), ("p", p.to_string())];
    if args.exact {
        let theta = theta_exact(&g, p, DEFAULT_THETA_CAP)?;
        println!("theta p={p} exact={theta} (~{:.6})", theta.to_f64());
        fields.push(("theta", theta.to_string()));
    } else {
        let est = theta_estimate(&g, p, args.trials, seed)?;
        println!(
            "theta p={p} estimate={:.6} half_width={:.6} successes={}/{}",
            est.estimate, est.half_width, est.successes, est.trials
        );
        fields.push(("estimate", format!("{:.6}", est.estimate)));
        fields.push(("half_width", format!("{:.6}", est.half_width)));
        fields.push(("successes", est.successes.to_string()));
        fields.push(("trials", est.trials.to_string()));
    }
    if args.witness {
        let initial = random_initial_set(g.n(), p, seed, 0)?;
        let state = fullsub::bootstrap_percolate(&g, &initial)?;
        let survivors = half_full_core(&g, &initial.complement())?;
        println!("initial: {}", members(&initial));
        println!("rounds={} percolated={}", state.round, state.percolated());
        println!("uninfected: {}", members(&survivors));
        fields.push(("witness_percolated", state.percolated().to_string()));
        fields.push(("uninfected", survivors.len().to_string()));
    }
    if args.count_half_full {
        let count = count_relatively_half_full(&g, DEFAULT_THETA_CAP)?;
        println!("relatively half-full sets: {count}");
        fields.push(("half_full_sets", count.to_string()));
    }
    record(&fields);
    Ok(())
}

fn sweep_cmd(args: SweepArgs, seed: Option<u64>, cap: usize) -> anyhow::Result<()> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            SweepConfig::from_toml(&text).with_context(|| format!("in {}", path.display()))?
        }
        None => SweepConfig {
            family: args.family.context("--family is required without --config")?,
            n: args.n,
            p: args.p,
            r: args.r,
            seeds: args.seeds,
            base_seed: seed.unwrap_or(0),
            algorithms: args.algorithms,
            output: None,
            timing: args.timing,
            exact_cap: cap,
        },
    };
    if args.out.is_some() {
        config.output = args.out;
    }
    config.timing |= args.timing;
    let rows = sweep::run_sweep(&config)?;
    match &config.output {
        Some(path) => {
            let file = fs::File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
            sweep::write_csv(&rows, file)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => sweep::write_csv(&rows, std::io::stdout().lock())?,
    }
    Ok(())
}

fn summary(args: SummaryArgs) -> anyhow::Result<()> {
    let file = fs::File::open(&args.input).with_context(|| format!("cannot read {}", args.input.display()))?;
    let rows = sweep::read_csv(file)?;
    for line in sweep::summarize(&rows)? {
        println!("{line}");
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("cannot size the thread pool")?;
    }
    let seed = cli.seed.unwrap_or(0);
    let cap = cli.exact_cap;
    match cli.command {
        Command::Gen(a) => gen(a, seed),
        Command::Disc(a) => disc(a, seed, cap),
        Command::Full(a) => full(a, seed, cap),
        Command::Qfull(a) => qfull(a, cli.seed),
        Command::G(a) => g_cmd(a, seed, cap),
        Command::Percolate(a) => percolate(a, seed),
        Command::Sweep(a) => sweep_cmd(a, cli.seed, cap),
        Command::Summary(a) => summary(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
