use clap::{Args, Parser, Subcommand};
use fillsys::format::{
    crossing_graph_dot, diagram_to_json, labelled_to_text, oriented_to_text, parse_labelled,
    parse_oriented,
};
use fillsys::labelled::boundary_labelled;
use fillsys::oriented::boundary_terms;
use fillsys::presentation::verify_presentation;
use fillsys::reduction::{h1_matrix, modular_symbol_oracle, reduce_with, ReduceOptions, TieBreak};
use fillsys::words::SurfacePresentation;
use fillsys::OrbitCatalog;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fillsys",
    version,
    about = "Chord-diagram calculus for filling systems on a once-marked surface"
)]
struct Cli {
    /// Worker threads for enumeration (falls back to FILLSYS_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate orbit representatives of k-filling systems.
    Orbits(OrbitsArgs),
    /// Boundary of an oriented (optionally labelled) filling system.
    Boundary(BoundaryArgs),
    /// Rewrite a labelled 0-filling system over zigzag translates.
    Reduce(ReduceArgs),
    /// Verify the genus-1 or genus-2 presentation identities.
    Verify(VerifyArgs),
    /// Homology of the polygon-diagonal complex.
    Theta(ThetaArgs),
    /// Canonical form and invariants of a diagram.
    Canon(CanonArgs),
    /// Run the acceptance checks.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct OrbitsArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long)]
    k: usize,
    /// Keep only connected representatives.
    #[arg(long)]
    connected: bool,
    /// Write the catalog as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Cache catalogs under this directory, keyed by (genus, k, connected).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct BoundaryArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long)]
    k: usize,
    /// Diagram file; `label` lines switch to the labelled boundary.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    genus: usize,
    /// Labelled 0-filling system file.
    #[arg(long)]
    input: PathBuf,
    /// Print one line per extension round.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    genus: usize,
}

#[derive(Args)]
struct ThetaArgs {
    /// Polygon genus for the built-in diagonal complex.
    #[arg(long, conflicts_with = "complex")]
    genus: Option<usize>,
    /// Facet file (one facet per line, space-separated vertex indices).
    #[arg(long)]
    complex: Option<PathBuf>,
}

#[derive(Args)]
struct CanonArgs {
    #[arg(long)]
    input: PathBuf,
    /// Also print the crossing graph in DOT form.
    #[arg(long)]
    dot: bool,
    /// Also print the JSON mirror.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// Seed for the randomized suites.
    #[arg(long)]
    seed: Option<u64>,
    /// Machine-readable report.
    #[arg(long)]
    json: bool,
}

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn read_input(path: &Path) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_USAGE)
    })
}

fn usage_error(path: &Path, e: fillsys::format::ParseError) -> ExitCode {
    eprintln!("error: {}: {e}", path.display());
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("FILLSYS_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);
    match run(cli.command, threads) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(command: Command, threads: usize) -> Result<ExitCode, ExitCode> {
    match command {
        Command::Orbits(args) => {
            if args.genus == 0 {
                eprintln!("error: genus must be at least 1");
                return Err(ExitCode::from(EXIT_USAGE));
            }
            let catalog = match &args.cache_dir {
                Some(dir) => {
                    OrbitCatalog::load_or_build(args.genus, args.k, args.connected, threads, dir)
                }
                None => OrbitCatalog::build_threaded(args.genus, args.k, args.connected, threads),
            }
            .map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            println!(
                "{} orbit(s) of {}-filling systems for genus {}{} ({} connected)",
                catalog.representatives.len(),
                args.k,
                args.genus,
                if args.connected {
                    " (connected only)"
                } else {
                    ""
                },
                catalog.connected_orbits,
            );
            for rep in &catalog.representatives {
                println!("{rep}");
            }
            if let Some(path) = args.json {
                let text = serde_json::to_string_pretty(&catalog).expect("serializable");
                std::fs::write(&path, text).map_err(|e| {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(EXIT_USAGE)
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary(args) => {
            let text = read_input(&args.input)?;
            let has_labels = text.lines().any(|l| l.trim_start().starts_with("label"));
            if has_labels {
                let x = parse_labelled(&text).map_err(|e| usage_error(&args.input, e))?;
                let pres = SurfacePresentation::new(args.genus);
                let terms = boundary_labelled(&x, args.genus, args.k, &pres).map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_USAGE)
                })?;
                println!("{} surviving face(s)", terms.len());
                for (coeff, t) in terms {
                    println!("{coeff:+}");
                    print!("{}", labelled_to_text(&t));
                }
            } else {
                let x = parse_oriented(&text).map_err(|e| usage_error(&args.input, e))?;
                let terms = boundary_terms(&x, args.genus, args.k).map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_USAGE)
                })?;
                println!("{} surviving face(s)", terms.len());
                for (coeff, t) in terms {
                    println!("{coeff:+} {}", oriented_to_text(&t));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(args) => {
            let text = read_input(&args.input)?;
            let x = parse_labelled(&text).map_err(|e| usage_error(&args.input, e))?;
            let pres = SurfacePresentation::new(args.genus);
            let opts = ReduceOptions {
                tie: TieBreak::LeastAnchor,
                trace: args.trace,
            };
            let result = reduce_with(&x, args.genus, &pres, opts).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_VERIFICATION)
            })?;
            for line in &result.trace {
                println!("# {line}");
            }
            println!(
                "{} term(s) after {} extension round(s)",
                result.terms.len(),
                result.rounds
            );
            for (coeff, t) in result.terms.terms() {
                println!("{coeff:+}");
                print!("{}", labelled_to_text(t));
                match h1_matrix(&t.labelled, args.genus) {
                    Ok(m) => println!("h1 {m:?}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Err(ExitCode::from(EXIT_VERIFICATION));
                    }
                }
            }
            if args.genus == 1 {
                match modular_symbol_oracle(&x, &result) {
                    Ok(true) => println!("slope oracle: agreed"),
                    Ok(false) => {
                        println!("slope oracle: DISAGREED");
                        return Err(ExitCode::from(EXIT_VERIFICATION));
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Err(ExitCode::from(EXIT_USAGE));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let report = verify_presentation(args.genus).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            for c in &report.checks {
                println!(
                    "[{}] {} -- {}",
                    if c.passed { "pass" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(ExitCode::from(EXIT_VERIFICATION))
            }
        }
        Command::Theta(args) => {
            if let Some(path) = &args.complex {
                let text = read_input(path)?;
                let complex =
                    fillsys::homology::SimplicialComplex::parse_facets(&text).map_err(|e| {
                        eprintln!("error: {}: {e}", path.display());
                        ExitCode::from(EXIT_USAGE)
                    })?;
                println!(
                    "{} vertices, {} facets, dimension {}",
                    complex.faces(0).len(),
                    complex.facets().len(),
                    complex.dimension()
                );
                for dim in 0..=complex.dimension().max(0) as usize {
                    let (betti, torsion) = fillsys::homology::homology(&complex, dim);
                    println!("reduced H_{dim}: rank {betti}, torsion {torsion:?}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let genus = args.genus.unwrap_or(0);
            if genus == 0 {
                eprintln!("error: pass --genus G (at least 1) or --complex FILE");
                return Err(ExitCode::from(EXIT_USAGE));
            }
            let report = fillsys::homology::theta_sphere_check(genus).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            println!(
                "polygon {}-gon: {} diagonals, {} facets of {} diagonals each",
                report.polygon, report.vertex_count, report.facet_count, report.facet_size
            );
            for (dim, betti, torsion) in &report.homology {
                println!("reduced H_{dim}: rank {betti}, torsion {torsion:?}");
            }
            match report.sphere_dimension {
                Some(d) => println!("homology of a {d}-sphere"),
                None => println!("not the homology of a sphere"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon(args) => {
            let text = read_input(&args.input)?;
            let x = parse_oriented(&text).map_err(|e| usage_error(&args.input, e))?;
            let d = x.diagram;
            let canon = d.canonical_form();
            let sym = d.symmetry();
            println!("{canon}");
            println!(
                "n={}, cycles={}, genus={}, connected={}, salient={}, parallel={}",
                d.n(),
                d.boundary_components(),
                d.genus(),
                d.is_connected(),
                d.is_salient(),
                d.parallel_pair_exists()
            );
            println!("symmetry order {} sign {}", sym.order, sym.perm_sign);
            if args.json {
                println!("{}", diagram_to_json(&canon));
            }
            if args.dot {
                print!("{}", crossing_graph_dot(&d));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest(args) => {
            let seed = args.seed.unwrap_or(fillsys::rng::DEFAULT_SEED);
            let report = fillsys::acceptance::run_all(seed);
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                for c in &report.criteria {
                    println!(
                        "criterion {:>2} [{}] {} ({:.2}s): {}",
                        c.id,
                        if c.passed { "pass" } else { "FAIL" },
                        c.name,
                        c.seconds,
                        c.detail
                    );
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(ExitCode::from(EXIT_VERIFICATION))
            }
        }
    }
}
