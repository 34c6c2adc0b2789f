//! The `inflate`, `build`, `contract`, `analyze`, `render` and `report`
//! subcommands. Each writes its files into the configured output directory
//! and returns their paths.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::{Format, RunConfig};
use super::formats::{fmt_float, to_json_string, write_json, Table};
use super::svg;
use super::IoError;
use crate::dimers::{
    contract, correlation_histogram, fidelity_grid, mean_fidelity, shuffled_baseline, vertex_motifs, Contraction,
    CorrelationHistogram, DimerState, DimerStateJson,
};
use crate::entanglement::{
    c_max_from_profile, fit_central_charge, pentagon_central_charge, rt_bound_check, CMaxReport, CentralChargeFit,
    CutProfile, EntropyProfile, RegionSampling, RtReport,
};
use crate::geometry::{edge_length, vertex_coordinates, TilingParams};
use crate::inflation::{letter_counts, perron_eigenvalue, scale_factor, LetterSequence, MqaStack, SubstitutionRule};
use crate::tiling::TilingGraph;

/// Window sizes of the fidelity grid.
pub const FIDELITY_WINDOWS: [usize; 3] = [50, 100, 200];
/// Random matchings averaged for the fidelity baseline.
pub const BASELINE_SAMPLES: usize = 1000;
/// Regions sampled for the minimal-cut check above three inflation steps.
pub const RT_SAMPLES: usize = 10_000;

fn usage(e: impl std::fmt::Display) -> IoError {
    IoError::Usage(e.to_string())
}

fn prepare(config: &RunConfig) -> Result<&Path, IoError> {
    config.validate()?;
    let dir = config.output_dir.as_path();
    fs::create_dir_all(dir).map_err(|e| IoError::file(format!("creating {}", dir.display()), e))?;
    Ok(dir)
}

fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|e| IoError::file(format!("writing {}", path.display()), e))
}

fn params(config: &RunConfig) -> Result<TilingParams, IoError> {
    TilingParams::new(config.tiling.0, config.tiling.1).map_err(usage)
}

#[derive(Serialize)]
struct InflateReport {
    schema: u32,
    tiling: (u32, u32),
    steps: u32,
    hyperbolic: bool,
    warning: Option<String>,
    scale_factor: f64,
    perron_eigenvalue: f64,
    substitution_matrix: [[u64; 2]; 2],
    lengths: Vec<usize>,
    counts: Vec<(usize, usize)>,
    layers: Vec<String>,
    /// `parents[i][j]`: (parent index, offset in parent image) of letter `j` of layer `i + 1`.
    parents: Vec<Vec<(usize, usize)>>,
}

pub fn cmd_inflate(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?;
    let p = params(config)?;
    let lambda = scale_factor(&p).map_err(usage)?;
    let rule = SubstitutionRule::for_tiling(p.n, p.k).map_err(usage)?;
    let stack = MqaStack::build(&rule, LetterSequence::seed(p.n as usize), config.steps);
    let report = InflateReport {
        schema: 1,
        tiling: config.tiling,
        steps: config.steps,
        hyperbolic: p.is_hyperbolic(),
        warning: (!p.is_hyperbolic()).then(|| format!("{{{},{}}} is non-hyperbolic: no asymptotic growth", p.n, p.k)),
        scale_factor: lambda,
        perron_eigenvalue: perron_eigenvalue(&rule.matrix()),
        substitution_matrix: rule.matrix().m,
        lengths: stack.layers().iter().map(LetterSequence::len).collect(),
        counts: stack.layers().iter().map(letter_counts).collect(),
        layers: stack.layers().iter().map(ToString::to_string).collect(),
        parents: (1..stack.layers().len())
            .map(|i| stack.parents(i).iter().map(|l| (l.parent, l.offset)).collect())
            .collect(),
    };
    if let Some(w) = &report.warning {
        eprintln!("warning: {w}");
    }
    let mut written = Vec::new();
    if config.wants(Format::Json) {
        let path = dir.join("inflate.json");
        write_json(&path, &report)?;
        written.push(path);
    }
    if config.wants(Format::Csv) {
        let mut t = Table::new(["layer", "length", "n_a", "n_b", "b_fraction"]);
        for (i, &(a, b)) in report.counts.iter().enumerate() {
            t.push(vec![
                i.to_string(),
                (a + b).to_string(),
                a.to_string(),
                b.to_string(),
                fmt_float(b as f64 / (a + b) as f64),
            ]);
        }
        let path = dir.join("inflate_counts.csv");
        t.write(&path)?;
        written.push(path);
    }
    println!(
        "lengths {:?}  lambda {}  perron {}",
        report.lengths,
        fmt_float(lambda),
        fmt_float(report.perron_eigenvalue)
    );
    Ok(written)
}

fn build(config: &RunConfig) -> Result<TilingGraph, IoError> {
    TilingGraph::build(config.tiling.0, config.tiling.1, config.steps).map_err(|e| match e {
        crate::tiling::TilingError::Invariant(msg) => IoError::Invariant(msg),
        other => usage(other),
    })
}

pub fn cmd_build(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?;
    let tiling = build(config)?;
    let mut written = Vec::new();
    if config.wants(Format::Json) {
        let path = dir.join("tiling.json");
        write_json(&path, &tiling.to_json())?;
        written.push(path);
    }
    if config.wants(Format::Csv) {
        let mut t = Table::new(["layer", "tiles"]);
        for (layer, count) in tiling.layer_tile_counts().iter().enumerate() {
            t.push(vec![layer.to_string(), count.to_string()]);
        }
        let path = dir.join("layers.csv");
        t.write(&path)?;
        written.push(path);
    }
    if config.wants(Format::Svg) {
        let coords = vertex_coordinates(&params(config)?, &tiling).map_err(|e| IoError::Invariant(e.to_string()))?;
        let path = dir.join("tiling.svg");
        write_text(&path, &svg::render_tiling(&tiling, &coords, None))?;
        written.push(path);
    }
    println!(
        "tiles {} edges {} vertices {} boundary {}",
        tiling.tiles().len(),
        tiling.edges().len(),
        tiling.vertex_count(),
        tiling.boundary_len()
    );
    Ok(written)
}

fn contracted(config: &RunConfig, tiling: &TilingGraph) -> Result<Contraction, IoError> {
    let inputs = config.logical_inputs()?;
    let mut c = contract(tiling, &inputs).map_err(usage)?;
    let l = c.state.num_sites();
    let anchor = config.seed_anchor % l;
    if anchor != 0 {
        c.state = c.state.translated(2 * (l - anchor));
    }
    Ok(c)
}

#[derive(Serialize)]
struct ContractReport<'a> {
    tiling: (u32, u32),
    steps: u32,
    tiles: usize,
    edges: usize,
    closed_loops: usize,
    crossings: u64,
    stats: crate::dimers::ContractionStats,
    state: &'a DimerStateJson,
}

pub fn cmd_contract(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?;
    let tiling = build(config)?;
    let c = contracted(config, &tiling)?;
    let mut written = Vec::new();
    if config.wants(Format::Json) {
        let json = c.state.to_json();
        let report = ContractReport {
            tiling: config.tiling,
            steps: config.steps,
            tiles: tiling.tiles().len(),
            edges: tiling.edges().len(),
            closed_loops: c.closed_loops,
            crossings: c.state.crossing_count(),
            stats: c.stats,
            state: &json,
        };
        let path = dir.join("state.json");
        write_json(&path, &report)?;
        written.push(path);
    }
    if config.wants(Format::Csv) {
        let mut t = Table::new(["position", "letter", "crossings"]);
        for m in vertex_motifs(&tiling, &c.state) {
            t.push(vec![m.position.to_string(), m.letter.as_char().to_string(), m.crossings.to_string()]);
        }
        let path = dir.join("vertex_motifs.csv");
        t.write(&path)?;
        written.push(path);
    }
    if config.wants(Format::Svg) {
        let coords = vertex_coordinates(&params(config)?, &tiling).map_err(|e| IoError::Invariant(e.to_string()))?;
        let path = dir.join("contract.svg");
        write_text(&path, &svg::render_tiling(&tiling, &coords, Some(&c.state)))?;
        written.push(path);
    }
    println!(
        "boundary dimers {} closed loops {} tiles {}",
        c.state.dimers().len(),
        c.closed_loops,
        tiling.tiles().len()
    );
    Ok(written)
}

/// Everything `analyze` computes.
pub struct Analysis {
    pub tiling: TilingGraph,
    pub state: DimerState,
    pub profile: EntropyProfile,
    pub fit: Result<CentralChargeFit, String>,
    pub cmax: Result<CMaxReport, String>,
    pub histogram: CorrelationHistogram,
    pub windows: Vec<usize>,
    pub fidelity: Vec<Vec<f64>>,
    pub mean_fidelity: Vec<f64>,
    pub baseline: f64,
    pub rt: RtReport,
}

pub fn analyze(config: &RunConfig) -> Result<Analysis, IoError> {
    config.validate()?;
    let tiling = build(config)?;
    let c = contracted(config, &tiling)?;
    let state = c.state;
    let l = state.num_sites();
    let profile = EntropyProfile::compute(&state);
    let fit = fit_central_charge(&profile, config.fit_range).map_err(|e| e.to_string());
    let cuts = CutProfile::compute(&tiling);
    let cmax = c_max_from_profile(&tiling, &cuts, 2, config.fit_range).map_err(|e| e.to_string());
    let histogram = correlation_histogram(&state);
    let mut windows: Vec<usize> = FIDELITY_WINDOWS.into_iter().filter(|&w| w <= l).collect();
    if windows.is_empty() {
        windows.push(l.div_ceil(2));
    }
    let fidelity = fidelity_grid(&state, &windows);
    let mean_fid = windows.iter().map(|&w| mean_fidelity(&state, w)).collect();
    let baseline = shuffled_baseline(l, windows[0], BASELINE_SAMPLES, config.rng_seed);
    let sampling = if config.steps <= 3 {
        RegionSampling::Exhaustive
    } else {
        RegionSampling::Sampled {
            count: RT_SAMPLES,
            seed: config.rng_seed,
        }
    };
    let rt = rt_bound_check(&tiling, &state, 2, sampling).map_err(usage)?;
    Ok(Analysis {
        tiling,
        state,
        profile,
        fit,
        cmax,
        histogram,
        windows,
        fidelity,
        mean_fidelity: mean_fid,
        baseline,
        rt,
    })
}

#[derive(Serialize)]
struct FitReport<'a> {
    schema: u32,
    system_size: usize,
    positions_averaged: usize,
    fit: Option<&'a CentralChargeFit>,
    fit_error: Option<&'a str>,
    reference_c: f64,
    relative_deviation: Option<f64>,
    c_max: Option<&'a CMaxReport>,
    c_max_error: Option<&'a str>,
    /// Effective Newton constant scale `1 / ln χ` for `χ = 2`.
    gravitational_scale: f64,
    mean_fidelity: Vec<(usize, f64)>,
    shuffled_baseline: f64,
}

fn analysis_files(config: &RunConfig, a: &Analysis, dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    let mut written = Vec::new();
    if config.wants(Format::Csv) {
        let mut t = Table::new(["ell", "mean_S_nats", "std_S_nats", "mean_S_bits"]);
        for l in 1..a.profile.system_size {
            t.push(vec![
                l.to_string(),
                fmt_float(a.profile.mean[l]),
                fmt_float(a.profile.std[l]),
                fmt_float(a.profile.mean[l] / std::f64::consts::LN_2),
            ]);
        }
        let path = dir.join("entropy_profile.csv");
        t.write(&path)?;
        written.push(path);

        let mut t = Table::new(["d", "count"]);
        for (d, c) in &a.histogram.counts {
            t.push(vec![d.to_string(), c.to_string()]);
        }
        let path = dir.join("correlation_histogram.csv");
        t.write(&path)?;
        written.push(path);

        let l = a.state.num_sites();
        let mut t = Table::new(std::iter::once("ell".to_string()).chain((0..l).map(|d| format!("d{d}"))));
        for (w, row) in a.windows.iter().zip(&a.fidelity) {
            t.push(std::iter::once(w.to_string()).chain(row.iter().map(|&f| fmt_float(f))).collect());
        }
        let path = dir.join("fidelity_grid.csv");
        t.write(&path)?;
        written.push(path);
    }
    if config.wants(Format::Json) {
        let fit = a.fit.as_ref().ok();
        let reference = pentagon_central_charge();
        let report = FitReport {
            schema: 1,
            system_size: a.profile.system_size,
            positions_averaged: a.profile.positions.len(),
            fit,
            fit_error: a.fit.as_ref().err().map(String::as_str),
            reference_c: reference,
            relative_deviation: fit.map(|f| (f.c - reference) / reference),
            c_max: a.cmax.as_ref().ok(),
            c_max_error: a.cmax.as_ref().err().map(String::as_str),
            gravitational_scale: 1.0 / 2f64.ln(),
            mean_fidelity: a.windows.iter().copied().zip(a.mean_fidelity.iter().copied()).collect(),
            shuffled_baseline: a.baseline,
        };
        let path = dir.join("central_charge.json");
        write_json(&path, &report)?;
        written.push(path);
        let path = dir.join("rt_report.json");
        write_json(&path, &a.rt)?;
        written.push(path);
    }
    Ok(written)
}

fn analysis_figures(a: &Analysis, dir: &Path) -> Result<Vec<PathBuf>, IoError> {
    let mut written = Vec::new();
    let files = [
        ("entropy.svg", svg::render_entropy(&a.profile, a.fit.as_ref().ok())),
        ("histogram.svg", svg::render_histogram(&a.histogram)),
        ("fidelity.svg", svg::render_fidelity(&a.fidelity, &a.windows)),
    ];
    for (name, text) in files {
        let path = dir.join(name);
        write_text(&path, &text)?;
        written.push(path);
    }
    Ok(written)
}

fn rt_outcome(a: &Analysis) -> Result<(), IoError> {
    match a.rt.violations.first() {
        None => Ok(()),
        Some(v) => Err(IoError::Invariant(format!(
            "{} regions violate S <= cut ln 2; first {:?}",
            a.rt.violations.len(),
            v
        ))),
    }
}

pub fn cmd_analyze(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?;
    let a = analyze(config)?;
    let mut written = analysis_files(config, &a, dir)?;
    if config.wants(Format::Svg) {
        written.extend(analysis_figures(&a, dir)?);
    }
    match &a.fit {
        Ok(f) => println!("c = {} (fit range {:?}, residual {})", fmt_float(f.c), f.fit_range, fmt_float(f.residual)),
        Err(e) => println!("no central-charge fit: {e}"),
    }
    println!(
        "RT: {} regions, max ratio {}, {} violations",
        a.rt.regions_checked,
        fmt_float(a.rt.max_ratio),
        a.rt.violations.len()
    );
    rt_outcome(&a)?;
    Ok(written)
}

pub fn cmd_render(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?;
    let a = analyze(config)?;
    let coords = vertex_coordinates(&params(config)?, &a.tiling).map_err(|e| IoError::Invariant(e.to_string()))?;
    let path = dir.join("disk.svg");
    write_text(&path, &svg::render_tiling(&a.tiling, &coords, Some(&a.state)))?;
    let mut written = vec![path];
    written.extend(analysis_figures(&a, dir)?);
    Ok(written)
}

#[derive(Serialize)]
struct Summary {
    schema: u32,
    tiling: (u32, u32),
    steps: u32,
    edge_length: Option<f64>,
    files: Vec<String>,
}

/// Runs every stage and writes a `report.json` index of the produced files.
pub fn cmd_report(config: &RunConfig) -> Result<Vec<PathBuf>, IoError> {
    let dir = prepare(config)?.to_path_buf();
    let mut written = cmd_inflate(config)?;
    written.extend(cmd_build(config)?);
    written.extend(cmd_contract(config)?);
    let a = analyze(config)?;
    written.extend(analysis_files(config, &a, &dir)?);
    if config.wants(Format::Svg) {
        let coords = vertex_coordinates(&params(config)?, &a.tiling).map_err(|e| IoError::Invariant(e.to_string()))?;
        let path = dir.join("disk.svg");
        write_text(&path, &svg::render_tiling(&a.tiling, &coords, Some(&a.state)))?;
        written.push(path);
        written.extend(analysis_figures(&a, &dir)?);
    }
    let summary = Summary {
        schema: 1,
        tiling: config.tiling,
        steps: config.steps,
        edge_length: edge_length(&params(config)?).ok(),
        files: written
            .iter()
            .filter_map(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
            .collect(),
    };
    let path = dir.join("report.json");
    write_text(&path, &to_json_string(&summary)?)?;
    written.push(path);
    rt_outcome(&a)?;
    Ok(written)
}
