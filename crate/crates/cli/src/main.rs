use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use hyperspec::battery::{analyze, fixed_shape_instances, run_battery};
use hyperspec::bounds::BoundContext;
use hyperspec::connectivity::CutCertifier;
use hyperspec::format::{parse_hg, to_hg_string};
use hyperspec::report::{
    to_json, AnalysisReport, BatteryReport, BoundJson, CutJson, SpectrumJson, SubsetJson,
    SummaryJson, SweepJson,
};
use hyperspec::{generators, spectral, Hypergraph};

/// Spectra, eigenvalue bounds and cut certificates for hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "hyperspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Laplacian eigenvalues and connectivity.
    Spectrum(InputArg),
    /// Every upper bound on the largest eigenvalue, as a JSON array.
    Bounds(InputArg),
    /// Edge boundaries, max-cut and isoperimetric number.
    Cuts(CutsArgs),
    /// Write a generated hypergraph in `.hg` format.
    Gen(GenArgs),
    /// Run every check; exit code 2 if a hard invariant fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct InputArg {
    /// `.hg` file; `-` or omitted reads standard input.
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CutsArgs {
    #[command(flatten)]
    input: InputArg,
    /// Comma-separated vertex labels of a single subset.
    #[arg(long, conflicts_with_all = ["exact", "sweep"])]
    subset: Option<String>,
    /// Exact max-cut and isoperimetric number by enumeration (the default).
    #[arg(long)]
    exact: bool,
    /// Fiedler-vector sweep cut with its certificate.
    #[arg(long, conflicts_with = "exact")]
    sweep: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file; standard output when omitted.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// All k-subsets of n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Complete k-partite k-graph.
    Kpartite {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Star k-graph with r spokes.
    Star {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Seeded uniform sampling of distinct edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(conflicts_with = "random", required_unless_present = "random")]
    file: Option<PathBuf>,
    /// Battery of random hypergraphs instead of a file.
    #[arg(long, num_args = 6, value_names = ["N", "M", "KMIN", "KMAX", "COUNT", "SEED"])]
    random: Option<Vec<u64>>,
}

fn read_input(file: &Option<PathBuf>) -> Result<(String, Hypergraph)> {
    let (name, text) = match file {
        Some(p) if p.as_os_str() != "-" => (
            p.display().to_string(),
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        ),
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            ("<stdin>".to_string(), buf)
        }
    };
    let h = parse_hg(&text).with_context(|| format!("parsing {name}"))?;
    Ok((name, h))
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn spectrum(args: InputArg) -> Result<()> {
    let (name, h) = read_input(&args.file)?;
    let s = spectral::laplacian_spectrum(&h)?;
    let check = spectral::connectivity_check(&h, &s);
    emit(&to_json(&SpectrumJson::new(&name, &h, &s, &check)))
}

fn bounds(args: InputArg) -> Result<()> {
    let (_, h) = read_input(&args.file)?;
    let ctx = BoundContext::new(&h)?;
    let reports: Vec<_> = ctx
        .all_bounds()
        .iter()
        .map(|b| BoundJson::new(&h, b))
        .collect();
    emit(&to_json(&reports))
}

fn cuts(args: CutsArgs) -> Result<()> {
    let (_, h) = read_input(&args.input.file)?;
    let cert = CutCertifier::new(&h)?;
    if let Some(list) = &args.subset {
        let subset = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|l| h.index_of(l))
            .collect::<Result<Vec<_>, _>>()?;
        let report = cert.report(&subset)?;
        let json = SubsetJson {
            cut: CutJson::new(&h, &report),
            density_bounds: cert.edge_density_bounds(&subset).ok().map(Into::into),
        };
        emit(&to_json(&json))
    } else if args.sweep {
        emit(&to_json(&SweepJson::new(&h, &cert.fiedler_sweep()?)))
    } else {
        emit(&to_json(&SummaryJson::new(&h, &cert.summary()?)))
    }
}

fn generate(args: GenArgs) -> Result<()> {
    let (h, descriptor) = match &args.family {
        Family::Complete { n, k } => (
            generators::complete_k_graph(*n, *k)?,
            format!("complete n={n} k={k}"),
        ),
        Family::Kpartite { sizes } => (
            generators::complete_k_partite(sizes)?,
            format!(
                "kpartite sizes={}",
                sizes
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        ),
        Family::Star { k, r } => (
            generators::star_k_graph(*k, *r)?,
            format!("star k={k} r={r}"),
        ),
        Family::Random {
            n,
            m,
            kmin,
            kmax,
            seed,
        } => (
            generators::random_hypergraph(*n, *m, *kmin, *kmax, *seed)?,
            format!("random n={n} m={m} kmin={kmin} kmax={kmax} seed={seed}"),
        ),
    };
    let text = to_hg_string(&h, Some(&descriptor));
    match &args.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => emit(&text),
    }
}

/// Returns whether every hard invariant held.
fn verify(args: VerifyArgs) -> Result<bool> {
    if let Some(p) = &args.random {
        let [n, m, kmin, kmax, count, seed] = p[..] else {
            bail!("--random takes six values");
        };
        let instances = fixed_shape_instances(
            n as usize,
            m as usize,
            kmin as usize,
            kmax as usize,
            count as usize,
            seed,
        )?;
        let (summary, analyses) = run_battery(&instances)?;
        let descriptor =
            format!("random n={n} m={m} kmin={kmin} kmax={kmax} count={count} seed={seed}");
        emit(&to_json(&BatteryReport::new(
            &descriptor,
            &instances,
            &summary,
            &analyses,
        )))?;
        Ok(summary.hard_failure_count() == 0)
    } else {
        let (name, h) = read_input(&args.file)?;
        let analysis = analyze(&h)?;
        emit(&to_json(&AnalysisReport::new(&name, &h, &analysis)))?;
        Ok(analysis.is_sound())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spectrum(a) => spectrum(a).map(|_| true),
        Command::Bounds(a) => bounds(a).map(|_| true),
        Command::Cuts(a) => cuts(a).map(|_| true),
        Command::Gen(a) => generate(a).map(|_| true),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("hyperspec: hard invariant violated");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("hyperspec: {e:#}");
            ExitCode::from(1)
        }
    }
}
