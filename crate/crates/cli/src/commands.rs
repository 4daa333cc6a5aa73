use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, Context};

use ktree_lab::analysis::{
    concentration_experiment, degree_histogram, deviation_report, fit_tail_exponent, trial_seeds,
    verify_min_degree_structure, DegreeHistogram, StructureReport, TrialRunner,
};
use ktree_lab::generator::{
    self, build_tree_decomposition, partial_from_tree, retained_out_degree, ProcessParams,
};
use ktree_lab::io::{
    read_edge_list, theory_table, write_deviation_csv, write_histogram_csv, write_json,
    write_ktree, write_pace_td, write_partial, write_theory_csv, AnalysisSummary,
    ConcentrationOutput, RunMetadata,
};
use ktree_lab::theory::{beta_table, default_d_max};

use crate::args::{AnalyzeArgs, ConcentrationArgs, Format, GenerateArgs, TheoryArgs};

/// An error together with the process exit code it maps to.
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub const USAGE: u8 = 1;
    pub const IO: u8 = 2;
    pub const INVARIANT: u8 = 3;

    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: Self::USAGE,
            error: error.into(),
        }
    }

    fn io(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: Self::IO,
            error: error.into(),
        }
    }

    fn invariant(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: Self::INVARIANT,
            error: error.into(),
        }
    }
}

impl From<ktree_lab::Error> for Failure {
    fn from(e: ktree_lab::Error) -> Self {
        use ktree_lab::Error::*;
        match e {
            Io(_) | Parse { .. } | Json(_) => Failure::io(e),
            _ => Failure::usage(e),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn create(path: &Path) -> Result<Box<dyn Write>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufWriter::new(io::stdout().lock())));
    }
    let file = File::create(path)
        .with_context(|| format!("cannot create {}", path.display()))
        .map_err(Failure::io)?;
    Ok(Box::new(BufWriter::with_capacity(1 << 20, file)))
}

fn with_suffix(prefix: &Path, suffix: &str) -> std::path::PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    name.into()
}

pub fn generate(args: &GenerateArgs) -> CmdResult {
    let params = ProcessParams::new(args.k, args.n, args.seed).map_err(Failure::usage)?;
    if let Some(b) = args.partial_b {
        retained_out_degree(args.k, b).map_err(Failure::usage)?;
    }
    let tree = ktree_lab::generator::generate(params)?;
    let out = create(&args.out)?;
    match args.partial_b {
        Some(b) => write_partial(out, &partial_from_tree(&tree, b)?)?,
        None => write_ktree(out, &tree)?,
    }
    if let Some(path) = &args.td {
        let td = build_tree_decomposition(&tree)?;
        write_pace_td(create(path)?, &td, tree.vertex_count())?;
    }
    Ok(())
}

pub fn theory(args: &TheoryArgs) -> CmdResult {
    if args.k < 2 {
        return Err(Failure::usage(anyhow!("k={}, need k >= 2", args.k)));
    }
    let d_max = args
        .d_max
        .unwrap_or_else(|| default_d_max(args.k, args.n.unwrap_or(1_000_000)));
    let table = theory_table(args.k, d_max, args.n)?;
    let out = create(&args.out)?;
    match args.format {
        Format::Csv => write_theory_csv(out, &table)?,
        Format::Json => write_json(out, &table)?,
    }
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs, threads: Option<usize>) -> CmdResult {
    let (hist, seeds) = match &args.input {
        Some(path) => {
            let file = File::open(path)
                .with_context(|| format!("cannot open {}", path.display()))
                .map_err(Failure::io)?;
            let parsed = read_edge_list(BufReader::new(file))
                .map_err(|e| Failure::io(anyhow!("{}: {e}", path.display())))?;
            let k = args
                .k
                .or(parsed.header.map(|h| h.k))
                .ok_or_else(|| Failure::usage(anyhow!("--k is required for headerless input")))?;
            if k < 2 {
                return Err(Failure::usage(anyhow!("k={k}, need k >= 2")));
            }
            let seeds = parsed.header.map(|h| vec![h.seed]).unwrap_or_default();
            (degree_histogram(&parsed.adjacency, k), seeds)
        }
        None => {
            let (k, n) = match (args.k, args.n) {
                (Some(k), Some(n)) => (k, n),
                _ => {
                    return Err(Failure::usage(anyhow!(
                        "--k and --n are required without --input"
                    )))
                }
            };
            ProcessParams::new(k, n, args.seed).map_err(Failure::usage)?;
            if args.trials == 0 {
                return Err(Failure::usage(anyhow!("--trials must be at least 1")));
            }
            let seeds = if args.trials == 1 {
                vec![args.seed]
            } else {
                trial_seeds(args.seed, args.trials)
            };
            (generated_histogram(k, n, &seeds, threads)?, seeds)
        }
    };
    if args.d_cut < hist.k {
        return Err(Failure::usage(anyhow!(
            "--dcut must be at least k={}",
            hist.k
        )));
    }

    let meta = RunMetadata {
        trials: hist.trials as usize,
        ..RunMetadata::new(hist.k, Some(hist.n), seeds)
    };
    let theory = beta_table::<f64>(hist.k, args.d_cut)?;
    let deviation = deviation_report(&hist, &theory, args.d_cut)?;
    let fit = fit_tail_exponent(&hist, args.d_min);

    write_histogram_csv(create(&with_suffix(&args.out, ".hist.csv"))?, &meta, &hist)?;
    write_deviation_csv(
        create(&with_suffix(&args.out, ".deviation.csv"))?,
        &meta,
        &deviation,
    )?;
    let summary = AnalysisSummary {
        metadata: meta,
        histogram_invariants: hist.check_ktree_invariants(),
        max_abs_error: deviation.max_abs_error,
        total_variation_distance: deviation.total_variation_distance,
        exponent_fit: fit.as_ref().map_err(ToString::to_string),
    };
    write_json(create(&with_suffix(&args.out, ".summary.json"))?, &summary)?;
    Ok(())
}

/// Aggregated histogram of freshly generated trees, each checked for the
/// structural invariants of the process.
fn generated_histogram(
    k: usize,
    n: usize,
    seeds: &[u64],
    threads: Option<usize>,
) -> Result<DegreeHistogram, Failure> {
    let runs = TrialRunner::new(threads).map(seeds, |seed| {
        let tree = generator::generate(ProcessParams { k, n, seed })?;
        let structure = verify_min_degree_structure(tree.adjacency(), tree.cliques());
        Ok((degree_histogram(tree.adjacency(), k), structure, seed))
    })?;
    let mut total: Option<DegreeHistogram> = None;
    for (hist, structure, seed) in runs {
        if !matches!(
            structure,
            StructureReport::Pass | StructureReport::NotApplicable { .. }
        ) {
            return Err(Failure::invariant(anyhow!(
                "seed {seed}: structural check failed: {structure:?}"
            )));
        }
        hist.check_ktree_invariants()
            .map_err(|e| Failure::invariant(anyhow!("seed {seed}: {e}")))?;
        match &mut total {
            Some(t) => t.merge(&hist)?,
            None => total = Some(hist),
        }
    }
    Ok(total.expect("at least one trial"))
}

pub fn concentration(args: &ConcentrationArgs, threads: Option<usize>) -> CmdResult {
    if args.trials < 2 {
        return Err(Failure::usage(anyhow!("--trials must be at least 2")));
    }
    ProcessParams::new(args.k, args.n, args.seed).map_err(Failure::usage)?;
    let d = args.d.unwrap_or(args.k);
    let report = concentration_experiment(
        args.k,
        args.n,
        d,
        args.trials,
        args.seed,
        TrialRunner::new(threads),
    )?;
    let output = ConcentrationOutput {
        metadata: RunMetadata::new(args.k, Some(args.n), report.seeds.clone()),
        report: &report,
    };
    write_json(create(&args.out)?, &output)?;
    Ok(())
}
