use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prespec_core::constructions::{
    divisor_tree, prescribe_connected, prescribe_tree, smallest_gadget, unimodalize,
};
use prespec_core::search::{refute_spectrum, Refutation, DEFAULT_WITNESS_ORDER};
use prespec_core::spectral::{charpoly, check_necessary, forest_charpoly, matching_poly};
use prespec_core::{
    Certificate, DivisibilityMode, Error, GadgetVariant, Graph, IntPoly, JoinBound,
    Limits, PrescribedSpectrum, ProfileMode, SearchBound, WitnessCache, WitnessKind,
    WitnessSource,
};

const CACHE_ENV: &str = "PRESPEC_WITNESS_CACHE";

#[derive(Parser)]
#[command(name = "prespec", version, about = "Graphs and trees with prescribed eigenvalues, exactly certified")]
struct Cli {
    /// Worker threads for parallel searches; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of a graph, as csv coefficients.
    Charpoly(GraphArgs),
    /// Matching polynomial of a graph, as csv coefficients.
    Matchpoly(GraphArgs),
    /// Checks necessary conditions for a polynomial to be the
    /// characteristic polynomial of a graph of the given order.
    CheckNecessary {
        #[arg(long, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(long)]
        order: usize,
    },
    /// Scans every labeled graph of the given order for one with this
    /// characteristic polynomial.
    Refute {
        #[arg(long, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(long)]
        order: usize,
    },
    /// Connected graph having 0 and a root of every polynomial as eigenvalues.
    ConstructGraph {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Gadget::Small)]
        gadget: Gadget,
        /// How divisibility claims are certified.
        #[arg(long, value_enum, default_value_t = Mode::Kernel)]
        mode: Mode,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tree containing a root of every polynomial, with multiplicity.
    ConstructTree {
        #[command(flatten)]
        spec: SpecArgs,
        /// Part vertex joined to the center for each part, comma separated.
        #[arg(long, value_delimiter = ',')]
        attach: Option<Vec<usize>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Tree whose characteristic polynomial is divisible by that of a graph.
    DivisorTree {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_delimiter = ',')]
        attach: Option<Vec<usize>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A cofactor g making the coefficient profile of f * g unimodal.
    Unimodalize {
        #[arg(long, allow_hyphen_values = true)]
        poly: IntPoly,
        /// Also scan all trees up to this order for a smaller witness.
        #[arg(long)]
        min_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Profile::Structural)]
        profile: Profile,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-verifies every claim of a certificate.
    Verify {
        /// Certificate JSON file.
        certificate: PathBuf,
    },
    /// A witness graph having a root of the polynomial as an eigenvalue.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        poly: IntPoly,
        #[arg(long, value_enum, default_value_t = Kind::Tree)]
        kind: Kind,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Smallest connected non-bipartite graph with eigenvalues 0 and 1.
    GadgetSearch {
        #[arg(long, default_value_t = 7)]
        max_order: usize,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Input graph in graph6.
    #[arg(long, conflicts_with = "edge_list", required_unless_present = "edge_list")]
    graph: Option<String>,
    /// Input graph as an edge-list file.
    #[arg(long)]
    edge_list: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Largest tree order enumerated when searching for witnesses.
    #[arg(long, default_value_t = DEFAULT_WITNESS_ORDER)]
    max_order: usize,
    /// Skip the hub-tree search that follows enumeration.
    #[arg(long)]
    no_hub_search: bool,
    /// Witness cache file; defaults to $PRESPEC_WITNESS_CACHE.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// User witness as `<poly-csv>=<graph6>`; may repeat.
    #[arg(long, value_name = "CSV=GRAPH6", allow_hyphen_values = true)]
    witness: Vec<String>,
}

#[derive(Args)]
struct SpecArgs {
    /// Prescribed polynomial; repeat to add entries or multiplicity.
    #[arg(long, required = true, allow_hyphen_values = true)]
    poly: Vec<IntPoly>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Where to write the certificate JSON.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Emit without re-verifying the certificate first.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gadget {
    Small,
    Large,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Kernel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Structural,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Connected,
}

/// How a command ended when it did not fail with an [`Error`].
enum Outcome {
    Positive,
    Negative,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Core(e.into())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(2),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind().exit_code())
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Charpoly(args) => {
            let g = read_graph(&args)?;
            let p = forest_charpoly(&g).unwrap_or_else(|| charpoly(&g));
            println!("{}", p.to_csv());
            Ok(Outcome::Positive)
        }
        Command::Matchpoly(args) => {
            println!("{}", matching_poly(&read_graph(&args)?).to_csv());
            Ok(Outcome::Positive)
        }
        Command::CheckNecessary { poly, order } => {
            let report = check_necessary(&poly, order)?;
            println!("{report}");
            Ok(if report.all_pass() {
                Outcome::Positive
            } else {
                Outcome::Negative
            })
        }
        Command::Refute { poly, order } => match refute_spectrum(&poly, order)? {
            Refutation::Refuted { scanned } => {
                println!("refuted ({scanned} labeled graphs scanned)");
                Ok(Outcome::Negative)
            }
            Refutation::Realized(g) => {
                println!("realized {}", g.to_graph6()?);
                Ok(Outcome::Positive)
            }
        },
        Command::ConstructGraph {
            spec,
            gadget,
            mode,
            out,
        } => {
            let prescribed = PrescribedSpectrum::new(&spec.poly)?;
            let mut source = witness_source(&spec.search)?;
            let variant = match gadget {
                Gadget::Small => GadgetVariant::Small,
                Gadget::Large => GadgetVariant::Large,
            };
            let (g, mut cert) = prescribe_connected(&prescribed, &mut source, variant)?;
            if let Mode::Exact = mode {
                cert.set_divides_mode(DivisibilityMode::Exact);
            }
            save_cache(&source)?;
            emit(&g, &cert, &out)
        }
        Command::ConstructTree { spec, attach, out } => {
            let prescribed = PrescribedSpectrum::new(&spec.poly)?;
            let mut source = witness_source(&spec.search)?;
            let (t, cert) = prescribe_tree(&prescribed, &mut source, attach.as_deref())?;
            save_cache(&source)?;
            emit(&t, &cert, &out)
        }
        Command::DivisorTree {
            graph,
            search,
            attach,
            out,
        } => {
            let g = read_graph(&graph)?;
            let mut source = witness_source(&search)?;
            let (t, cert) = divisor_tree(&g, &mut source, attach.as_deref())?;
            save_cache(&source)?;
            emit(&t, &cert, &out)
        }
        Command::Unimodalize {
            poly,
            min_order,
            profile,
            search,
            out,
        } => {
            let mut source = witness_source(&search)?;
            let profile = match profile {
                Profile::Structural => ProfileMode::Structural,
                Profile::Literal => ProfileMode::Literal,
            };
            let u = unimodalize(&poly, &mut source, profile, min_order)?;
            save_cache(&source)?;
            println!("{}", u.cofactor.to_csv());
            emit(&u.tree, &u.certificate, &out)
        }
        Command::Verify { certificate } => {
            let text = read_file(&certificate)?;
            let cert = Certificate::from_json(&text)?;
            let report = cert.verify(&Limits::default())?;
            print!("{report}");
            if report.passed() {
                println!("certificate verified");
                Ok(Outcome::Positive)
            } else {
                for c in report.failures() {
                    eprintln!("failed: {}", c.name);
                }
                Ok(Outcome::Negative)
            }
        }
        Command::Witness { poly, kind, search } => {
            let mut source = witness_source(&search)?;
            let kind = match kind {
                Kind::Tree => WitnessKind::Tree,
                Kind::Connected => WitnessKind::Connected,
            };
            let (g, origin) = source.witness(&poly, kind)?;
            save_cache(&source)?;
            println!("{}", g.to_graph6()?);
            eprintln!("origin: {origin}, order {}", g.order());
            Ok(Outcome::Positive)
        }
        Command::GadgetSearch { max_order } => match smallest_gadget(max_order)? {
            Some(g) => {
                println!("{}", g.to_graph6()?);
                eprintln!("order {}, {} edges", g.order(), g.edge_count());
                Ok(Outcome::Positive)
            }
            None => {
                println!("none up to order {max_order}");
                Ok(Outcome::Negative)
            }
        },
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(args: &GraphArgs) -> Result<Graph, Failure> {
    match (&args.graph, &args.edge_list) {
        (Some(g6), _) => Ok(Graph::from_graph6(g6.trim())?),
        (None, Some(path)) => Ok(Graph::parse_edge_list(&read_file(path)?)?),
        (None, None) => Err(Failure::Usage("a graph is required".into())),
    }
}

fn witness_source(args: &SearchArgs) -> Result<WitnessSource, Failure> {
    let mut source = WitnessSource::new(SearchBound::trees(args.max_order));
    if args.no_hub_search {
        source = source.with_join(None);
    } else {
        source = source.with_join(Some(JoinBound::default()));
    }
    let cache_path = args
        .cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    if let Some(path) = cache_path {
        source = source.with_cache(WitnessCache::open(path)?);
    }
    for spec in &args.witness {
        let (csv, g6) = spec
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("witness {spec:?} is not CSV=GRAPH6")))?;
        let q = IntPoly::from_csv(csv)?;
        source = source.with_user(&q, Graph::from_graph6(g6)?);
    }
    Ok(source)
}

fn save_cache(source: &WitnessSource) -> Result<(), Failure> {
    source.cache().save()?;
    Ok(())
}

fn emit(g: &Graph, cert: &Certificate, out: &OutputArgs) -> Result<Outcome, Failure> {
    if !out.no_verify {
        let report = cert.verify(&Limits::default())?;
        if !report.passed() {
            eprint!("{report}");
            return Ok(Outcome::Negative);
        }
    }
    println!("{}", g.to_graph6()?);
    if let Some(path) = &out.certificate {
        fs::write(path, cert.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome::Positive)
}
