//! Entanglement of dimer states and the minimal-cut bound.
//!
//! A dimer with one end inside a region contributes `½ ln 2` to the region's
//! entropy, so every entropy here is a crossing count times `½ ln 2`.
//! Entropies are in nats unless a name says bits.

use std::f64::consts::{LN_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dimers::{least_squares, DimerState};
use crate::geometry::{edge_length, TilingParams};
use crate::tiling::{BoundaryInterval, TilingGraph};

pub const HALF_LN2: f64 = LN_2 / 2.0;

/// Up to this many sites profiles average over every position.
pub const ALL_POSITIONS_LIMIT: usize = 2000;
/// Evenly spaced positions used above [`ALL_POSITIONS_LIMIT`].
pub const SAMPLED_POSITIONS: usize = 512;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("fit range [{lo}, {hi}] holds {points} sizes; at least 5 are needed")]
    FitRangeTooNarrow { lo: usize, hi: usize, points: usize },
    #[error("state has {state} sites but the tiling boundary has {tiling}")]
    SizeMismatch { state: usize, tiling: usize },
    #[error("{count} regions violate the minimal-cut bound; first: {first:?}")]
    RtViolation { count: usize, first: RtViolation },
    #[error("{0}")]
    Geometry(#[from] crate::geometry::GeometryError),
}

/// Dimers with exactly one end among the region's modes.
pub fn crossings(state: &DimerState, region: BoundaryInterval) -> usize {
    let n = state.num_modes();
    let w = 2 * region.len.min(state.num_sites());
    let lo = 2 * region.start;
    (0..w)
        .filter(|&i| {
            let rel = (state.partner((lo + i) % n) + n - lo % n) % n;
            rel >= w
        })
        .count()
}

/// Entanglement entropy of a contiguous run of sites, in nats.
pub fn entropy(state: &DimerState, region: BoundaryInterval) -> f64 {
    crossings(state, region) as f64 * HALF_LN2
}

/// Crossing counts of the regions `[x, x + l)` for `l = 0..=L`, by one sweep.
pub fn crossing_sweep(state: &DimerState, x: usize) -> Vec<u32> {
    let n = state.num_modes();
    let l = state.num_sites();
    let lo = 2 * x;
    let mut out = Vec::with_capacity(l + 1);
    let mut c: i64 = 0;
    out.push(0);
    for size in 1..=l {
        for rel in [2 * size - 2, 2 * size - 1] {
            let p = (state.partner((lo + rel) % n) + n - lo % n) % n;
            c += if p < rel { -1 } else { 1 };
        }
        out.push(c as u32);
    }
    out
}

fn profile_positions(l: usize) -> Vec<usize> {
    if l <= ALL_POSITIONS_LIMIT {
        (0..l).collect()
    } else {
        (0..SAMPLED_POSITIONS).map(|i| i * l / SAMPLED_POSITIONS).collect()
    }
}

/// Entropies of contiguous regions, by size and position.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyProfile {
    pub system_size: usize,
    pub positions: Vec<usize>,
    /// `crossings[i][l]`: crossing count of the `l` sites starting at `positions[i]`.
    pub crossings: Vec<Vec<u32>>,
    /// Mean entropy per size `l = 0..=L`, nats.
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

impl EntropyProfile {
    pub fn compute(state: &DimerState) -> Self {
        Self::compute_at(state, profile_positions(state.num_sites()))
    }

    pub fn compute_at(state: &DimerState, positions: Vec<usize>) -> Self {
        let crossings: Vec<Vec<u32>> = positions.par_iter().map(|&x| crossing_sweep(state, x)).collect();
        let l = state.num_sites();
        let m = positions.len().max(1) as u128;
        let mut mean = vec![0.0; l + 1];
        let mut std = vec![0.0; l + 1];
        for size in 0..=l {
            // Integer moments keep constant columns at exactly zero spread.
            let (sum, sq) = crossings.iter().fold((0u128, 0u128), |(s, q), row| {
                let c = row[size] as u128;
                (s + c, q + c * c)
            });
            let var = (m * sq - sum * sum) as f64 / (m * m) as f64;
            mean[size] = sum as f64 / m as f64 * HALF_LN2;
            std[size] = var.sqrt() * HALF_LN2;
        }
        Self {
            system_size: l,
            positions,
            crossings,
            mean,
            std,
        }
    }

    /// A profile made only of mean values, for fitting model curves.
    pub fn from_means(system_size: usize, mean: Vec<f64>) -> Self {
        let std = vec![0.0; mean.len()];
        Self {
            system_size,
            positions: Vec::new(),
            crossings: Vec::new(),
            mean,
            std,
        }
    }

    pub fn default_fit_range(&self) -> (usize, usize) {
        (8, self.system_size / 2)
    }
}

/// Chord length `(L/π) sin(π l / L)`.
pub fn chord(l: usize, system_size: usize) -> f64 {
    let big = system_size as f64;
    big / PI * (PI * l as f64 / big).sin()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CentralChargeFit {
    pub c: f64,
    pub intercept: f64,
    pub fit_range: (usize, usize),
    /// Root-mean-square deviation of the fitted curve, nats.
    pub residual: f64,
}

fn chord_fit(
    values: &[f64],
    system_size: usize,
    range: (usize, usize),
    scale: f64,
) -> Result<(f64, f64, f64), EntanglementError> {
    let (lo, hi) = range;
    let sizes: Vec<usize> = (lo.max(1)..=hi.min(system_size - 1).min(values.len() - 1)).collect();
    if sizes.len() < 5 {
        return Err(EntanglementError::FitRangeTooNarrow {
            lo,
            hi,
            points: sizes.len(),
        });
    }
    let xs: Vec<f64> = sizes.iter().map(|&l| chord(l, system_size).ln() * scale).collect();
    let ys: Vec<f64> = sizes.iter().map(|&l| values[l]).collect();
    let (slope, intercept) = least_squares(&xs, &ys).expect("distinct sizes give distinct abscissae");
    let rss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - slope * x - intercept).powi(2)).sum();
    Ok((slope, intercept, (rss / xs.len() as f64).sqrt()))
}

/// Least-squares fit of the mean entropy to `(c/3) ln chord(l) + const`.
pub fn fit_central_charge(
    profile: &EntropyProfile,
    range: Option<(usize, usize)>,
) -> Result<CentralChargeFit, EntanglementError> {
    let range = range.unwrap_or_else(|| profile.default_fit_range());
    let (c, intercept, residual) = chord_fit(&profile.mean, profile.system_size, range, 1.0 / 3.0)?;
    Ok(CentralChargeFit {
        c,
        intercept,
        fit_range: range,
        residual,
    })
}

/// `9 ln 2 / ln(2 + √3)`.
pub fn pentagon_central_charge() -> f64 {
    9.0 * LN_2 / (2.0 + 3f64.sqrt()).ln()
}

/// Minimal-cut sizes of contiguous regions, by size and position.
#[derive(Debug, Clone, PartialEq)]
pub struct CutProfile {
    pub system_size: usize,
    pub positions: Vec<usize>,
    /// `cuts[i][l]`: minimal cut of the `l` sites starting at `positions[i]`.
    pub cuts: Vec<Vec<u32>>,
    pub mean: Vec<f64>,
}

impl CutProfile {
    pub fn compute(tiling: &TilingGraph) -> Self {
        Self::compute_at(tiling, profile_positions(tiling.boundary_len()))
    }

    pub fn compute_at(tiling: &TilingGraph, positions: Vec<usize>) -> Self {
        let l = tiling.boundary_len();
        let cuts: Vec<Vec<u32>> = positions
            .par_iter()
            .map(|&x| {
                let d = tiling.boundary_distances(x);
                (0..=l).map(|size| if size == l { 0 } else { d[(x + size) % l] }).collect()
            })
            .collect();
        let m = positions.len().max(1) as f64;
        let mean = (0..=l)
            .map(|size| cuts.iter().map(|row| row[size] as f64).sum::<f64>() / m)
            .collect();
        Self {
            system_size: l,
            positions,
            cuts,
            mean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CMaxReport {
    pub chi: u32,
    /// Slope of the mean minimal cut against `ln chord(l)`.
    pub c_hat: f64,
    pub intercept: f64,
    pub residual: f64,
    pub fit_range: (usize, usize),
    pub c_max: f64,
    /// `s / α` of the tiling.
    pub edge_length: f64,
}

/// `c^max = 3 ĉ ln χ`, with `ĉ` fitted to position-averaged minimal cuts.
pub fn c_max(tiling: &TilingGraph, chi: u32, range: Option<(usize, usize)>) -> Result<CMaxReport, EntanglementError> {
    c_max_from_profile(tiling, &CutProfile::compute(tiling), chi, range)
}

pub fn c_max_from_profile(
    tiling: &TilingGraph,
    cuts: &CutProfile,
    chi: u32,
    range: Option<(usize, usize)>,
) -> Result<CMaxReport, EntanglementError> {
    let range = range.unwrap_or((8, cuts.system_size / 2));
    let (c_hat, intercept, residual) = chord_fit(&cuts.mean, cuts.system_size, range, 1.0)?;
    let params = TilingParams::new(tiling.n(), tiling.k())?;
    Ok(CMaxReport {
        chi,
        c_hat,
        intercept,
        residual,
        fit_range: range,
        c_max: 3.0 * c_hat * (chi as f64).ln(),
        edge_length: edge_length(&params)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RtViolation {
    pub region: BoundaryInterval,
    pub crossings: usize,
    pub cut_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RtReport {
    pub chi: u32,
    pub regions_checked: usize,
    /// Largest `S / (cut ln χ)` over regions with a nonzero bound.
    pub max_ratio: f64,
    pub saturating_regions: usize,
    pub violations: Vec<RtViolation>,
}

impl RtReport {
    pub fn into_result(self) -> Result<RtReport, EntanglementError> {
        match self.violations.first() {
            None => Ok(self),
            Some(&first) => Err(EntanglementError::RtViolation {
                count: self.violations.len(),
                first,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionSampling {
    /// Every contiguous region with `0 < l < L`.
    Exhaustive,
    /// Uniform random `(start, l)` pairs.
    Sampled { count: usize, seed: u64 },
}

/// Checks `S_A <= cut(A) ln χ` region by region.
pub fn rt_bound_check(
    tiling: &TilingGraph,
    state: &DimerState,
    chi: u32,
    sampling: RegionSampling,
) -> Result<RtReport, EntanglementError> {
    let l = tiling.boundary_len();
    if state.num_sites() != l {
        return Err(EntanglementError::SizeMismatch {
            state: state.num_sites(),
            tiling: l,
        });
    }
    let ln_chi = (chi as f64).ln();
    let judge = |region: BoundaryInterval, crossings: usize, cut: usize| -> (f64, bool, Option<RtViolation>) {
        let s = crossings as f64 * HALF_LN2;
        let bound = cut as f64 * ln_chi;
        let violation = (s > bound + 1e-12).then_some(RtViolation {
            region,
            crossings,
            cut_edges: cut,
        });
        let ratio = if bound > 0.0 { s / bound } else { 0.0 };
        (ratio, (ratio - 1.0).abs() < 1e-12, violation)
    };
    let results: Vec<(f64, bool, Option<RtViolation>)> = match sampling {
        RegionSampling::Exhaustive => (0..l)
            .into_par_iter()
            .flat_map_iter(|x| {
                let dist = tiling.boundary_distances(x);
                let sweep = crossing_sweep(state, x);
                (1..l)
                    .map(|size| judge(BoundaryInterval::new(x, size), sweep[size] as usize, dist[(x + size) % l] as usize))
                    .collect::<Vec<_>>()
            })
            .collect(),
        RegionSampling::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let regions: Vec<BoundaryInterval> = (0..count)
                .map(|_| BoundaryInterval::new(rng.random_range(0..l), rng.random_range(1..l)))
                .collect();
            regions
                .par_iter()
                .map(|&r| {
                    let cut = tiling.boundary_distances(r.start)[(r.start + r.len) % l] as usize;
                    judge(r, crossings(state, r), cut)
                })
                .collect()
        }
    };
    let mut report = RtReport {
        chi,
        regions_checked: results.len(),
        max_ratio: 0.0,
        saturating_regions: 0,
        violations: Vec::new(),
    };
    for (ratio, saturated, violation) in results {
        report.max_ratio = report.max_ratio.max(ratio);
        report.saturating_regions += saturated as usize;
        report.violations.extend(violation);
    }
    Ok(report)
}
