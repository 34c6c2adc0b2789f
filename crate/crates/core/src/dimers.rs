//! Majorana-dimer states of the pentagon-code network.
//!
//! A dimer state on `2L` Majorana modes is a perfect matching plus a sign per
//! pair: the covariance entry `Γ_jk = i⟨γ_j γ_k⟩ = ±1` for matched `j, k` and
//! zero otherwise. Boundary site `s` carries modes `2s` and `2s + 1`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inflation::Letter;
use crate::tiling::TilingGraph;

/// Modes per pentagon tile: two per edge.
pub const TILE_MODES: usize = 10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DimerError {
    #[error("invalid dimer state: {0}")]
    InvalidState(String),
    #[error("dimer networks need pentagon tiles, got {0}-gons")]
    NotPentagons(usize),
    #[error("interior mode {mode} of tile {tile} is not fused to a neighbour")]
    UnfusedMode { tile: usize, mode: usize },
    #[error("logical input for unknown tile {0}")]
    UnknownTile(usize),
    #[error("logical value must be 0 or 1, got {0}")]
    InvalidLogical(u8),
}

/// Logical state of one code tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Logical {
    #[default]
    Zero,
    One,
}

impl TryFrom<u8> for Logical {
    type Error = DimerError;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(Logical::Zero),
            1 => Ok(Logical::One),
            other => Err(DimerError::InvalidLogical(other)),
        }
    }
}

/// One matched pair with `j < k`; `orientation` is `Γ_jk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimer {
    pub j: usize,
    pub k: usize,
    pub orientation: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimerState {
    partner: Vec<usize>,
    /// `sign[j] = Γ_{j, partner[j]}`; antisymmetric along each pair.
    sign: Vec<i8>,
}

impl DimerState {
    /// Builds a state from `(j, k, Γ_jk)` triples covering every mode once.
    pub fn from_pairs(num_modes: usize, pairs: &[(usize, usize, i8)]) -> Result<Self, DimerError> {
        if num_modes % 2 != 0 {
            return Err(DimerError::InvalidState(format!("odd number of modes {num_modes}")));
        }
        let mut partner = vec![usize::MAX; num_modes];
        let mut sign = vec![0i8; num_modes];
        for &(j, k, o) in pairs {
            if j == k || j >= num_modes || k >= num_modes {
                return Err(DimerError::InvalidState(format!("bad pair ({j}, {k})")));
            }
            if o != 1 && o != -1 {
                return Err(DimerError::InvalidState(format!("orientation {o} is not ±1")));
            }
            if partner[j] != usize::MAX || partner[k] != usize::MAX {
                return Err(DimerError::InvalidState(format!("mode in two pairs: ({j}, {k})")));
            }
            partner[j] = k;
            partner[k] = j;
            sign[j] = o;
            sign[k] = -o;
        }
        if let Some(m) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(DimerError::InvalidState(format!("mode {m} is unpaired")));
        }
        Ok(Self { partner, sign })
    }

    pub fn num_modes(&self) -> usize {
        self.partner.len()
    }

    pub fn num_sites(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, mode: usize) -> usize {
        self.partner[mode]
    }

    /// `Γ_jk`: ±1 for a matched pair, 0 otherwise.
    pub fn covariance(&self, j: usize, k: usize) -> i8 {
        if self.partner[j] == k {
            self.sign[j]
        } else {
            0
        }
    }

    pub fn dimers(&self) -> Vec<Dimer> {
        (0..self.num_modes())
            .filter(|&j| j < self.partner[j])
            .map(|j| Dimer {
                j,
                k: self.partner[j],
                orientation: self.sign[j],
            })
            .collect()
    }

    /// Same matching, orientations ignored.
    pub fn same_pairing(&self, other: &DimerState) -> bool {
        self.partner == other.partner
    }

    /// Relabels mode `j` as `j + shift` (cyclically), keeping every `Γ` entry.
    pub fn translated(&self, shift: usize) -> DimerState {
        self.relabel(shift, false)
    }

    /// Like [`translated`](Self::translated), but the modes that wrap past the
    /// anchor pick up a fermionic sign, so pairs straddling the cut flip.
    pub fn translated_fermionic(&self, shift: usize) -> DimerState {
        self.relabel(shift, true)
    }

    fn relabel(&self, shift: usize, fermionic: bool) -> DimerState {
        let n = self.num_modes();
        let shift = shift % n;
        let mut partner = vec![0; n];
        let mut sign = vec![0; n];
        for j in 0..n {
            let nj = (j + shift) % n;
            let nk = (self.partner[j] + shift) % n;
            let wraps = (j + shift >= n) != (self.partner[j] + shift >= n);
            partner[nj] = nk;
            sign[nj] = if fermionic && wraps { -self.sign[j] } else { self.sign[j] };
        }
        DimerState { partner, sign }
    }

    /// Number of pairs of dimers whose chords cross when the modes sit on a circle.
    pub fn crossing_count(&self) -> u64 {
        let n = self.num_modes();
        let mut fenwick = vec![0u32; n + 1];
        let add = |tree: &mut Vec<u32>, mut i: usize| {
            i += 1;
            while i <= n {
                tree[i] += 1;
                i += i & i.wrapping_neg();
            }
        };
        let prefix = |tree: &Vec<u32>, mut i: usize| -> u64 {
            let mut s = 0u64;
            while i > 0 {
                s += tree[i] as u64;
                i -= i & i.wrapping_neg();
            }
            s
        };
        let mut total = 0;
        // chords by left end: (l', r') crosses (l, r) iff l' < l < r' < r
        for l in 0..n {
            let r = self.partner[l];
            if r < l {
                continue;
            }
            total += prefix(&fenwick, r) - prefix(&fenwick, l + 1);
            add(&mut fenwick, r);
        }
        total
    }

    pub fn to_json(&self) -> DimerStateJson {
        DimerStateJson {
            schema: 1,
            num_modes: self.num_modes(),
            dimers: self.dimers().iter().map(|d| (d.j, d.k, d.orientation)).collect(),
        }
    }

    pub fn from_json(json: &DimerStateJson) -> Result<Self, DimerError> {
        Self::from_pairs(json.num_modes, &json.dimers)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimerStateJson {
    pub schema: u32,
    pub num_modes: usize,
    pub dimers: Vec<(usize, usize, i8)>,
}

/// Whether chords `(a, b)` and `(c, d)` of a circle cross.
pub fn chords_cross(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    inside(c) != inside(d) && c != a && c != b && d != a && d != b
}

/// Dimer pattern of a single code tile: mode `j` pairs with `j + 5`.
/// Covariance signs: `|0⟩` has `Γ_{j,j+5} = -1` for all `j`, `|1⟩` has
/// `+1` for even `j` and `-1` for odd `j`.
pub fn seed_state(logical: Logical) -> DimerState {
    let pairs: Vec<(usize, usize, i8)> = (0..5)
        .map(|j| {
            let o = match logical {
                Logical::Zero => -1,
                Logical::One if j % 2 == 0 => 1,
                Logical::One => -1,
            };
            (j, j + 5, o)
        })
        .collect();
    DimerState::from_pairs(TILE_MODES, &pairs).expect("seed pattern is a perfect matching")
}

/// Logical value per tile: a default plus explicit overrides.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LogicalInputs {
    pub default: Logical,
    pub overrides: BTreeMap<usize, Logical>,
}

impl LogicalInputs {
    pub fn all(value: Logical) -> Self {
        Self {
            default: value,
            overrides: BTreeMap::new(),
        }
    }

    pub fn get(&self, tile: usize) -> Logical {
        self.overrides.get(&tile).copied().unwrap_or(self.default)
    }
}

/// One glued edge. The modes of the edge in tile `tiles.0` fuse to those of
/// `tiles.1` in reversed order; each pair is listed as `(x, y)` with `x` on
/// `tiles.0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fusion {
    pub edge: usize,
    pub tiles: (usize, usize),
    pub modes: [(usize, usize); 2],
}

/// Fusions of every interior edge plus the boundary assignment of the
/// remaining modes. Global mode `10 t + m` is mode `m` of tile `t`.
///
/// The first tile of a fusion is the one of lower layer; between tiles of the
/// same layer it is the tile that runs along the shared edge away from the
/// older vertex. Both choices commute with rotations of the patch.
///
/// The central tile is the one tile a rotation maps to itself, and its seed
/// pattern is only invariant under a relabeling that flips the pairs
/// wrapping past mode 0. Reversing the fusions of its modes 0, 2 and 4 (a
/// sign gauge of interior modes) turns that into a plain relabeling, so the
/// contracted state is invariant under plain boundary translations.
#[derive(Debug, Clone)]
pub struct ContractionPlan {
    pub fusions: Vec<Fusion>,
    fused_to: Vec<usize>,
    fusion_sign: Vec<i8>,
    boundary_mode: Vec<usize>,
    global_of_boundary: Vec<usize>,
}

impl ContractionPlan {
    pub fn new(tiling: &TilingGraph) -> Result<Self, DimerError> {
        let n = tiling.polygon_sides();
        if n != 5 {
            return Err(DimerError::NotPentagons(n));
        }
        let total = tiling.tiles().len() * TILE_MODES;
        let vertex_layer = tiling.vertex_layers();
        let mut fused_to = vec![usize::MAX; total];
        let mut fusion_sign = vec![0i8; total];
        let mut boundary_mode = vec![usize::MAX; total];
        let mut global_of_boundary = vec![usize::MAX; 2 * tiling.boundary_len()];
        let mut fusions = Vec::new();
        let center = tiling.center();
        let central_even = |g: usize| g / TILE_MODES == center && g % 2 == 0 && g % TILE_MODES < 5;
        for edge in tiling.edges() {
            let position = |t: usize| {
                tiling.tiles()[t]
                    .edges
                    .iter()
                    .position(|&e| e == edge.id)
                    .expect("edge lists its tiles")
            };
            let side = |t: usize| {
                let j = position(t);
                (TILE_MODES * t + 2 * j, TILE_MODES * t + 2 * j + 1)
            };
            match (edge.tiles.as_slice(), edge.boundary_position) {
                ([t], Some(s)) => {
                    let (x, y) = side(*t);
                    boundary_mode[x] = 2 * s;
                    boundary_mode[y] = 2 * s + 1;
                    global_of_boundary[2 * s] = x;
                    global_of_boundary[2 * s + 1] = y;
                }
                ([t1, t2], None) => {
                    let (l1, l2) = (tiling.tiles()[*t1].layer, tiling.tiles()[*t2].layer);
                    let first_is_x = if l1 != l2 {
                        l1 < l2
                    } else {
                        let tile = &tiling.tiles()[*t1];
                        let j = position(*t1);
                        let (from, to) = (tile.vertices[j], tile.vertices[(j + 1) % n]);
                        match vertex_layer[from].cmp(&vertex_layer[to]) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Greater => false,
                            std::cmp::Ordering::Equal => t1 < t2,
                        }
                    };
                    let (tx, ty) = if first_is_x { (*t1, *t2) } else { (*t2, *t1) };
                    let (a0, a1) = side(tx);
                    let (b0, b1) = side(ty);
                    let mut pairs = [(a0, b1), (a1, b0)];
                    for pair in &mut pairs {
                        if central_even(pair.0) {
                            *pair = (pair.1, pair.0);
                        }
                    }
                    for (x, y) in pairs {
                        fused_to[x] = y;
                        fused_to[y] = x;
                        fusion_sign[x] = 1;
                        fusion_sign[y] = -1;
                    }
                    fusions.push(Fusion {
                        edge: edge.id,
                        tiles: (tx, ty),
                        modes: pairs,
                    });
                }
                _ => {
                    return Err(DimerError::InvalidState(format!(
                        "edge {} has {} tiles",
                        edge.id,
                        edge.tiles.len()
                    )))
                }
            }
        }
        for (g, (&f, &b)) in fused_to.iter().zip(&boundary_mode).enumerate() {
            if f == usize::MAX && b == usize::MAX {
                return Err(DimerError::UnfusedMode {
                    tile: g / TILE_MODES,
                    mode: g % TILE_MODES,
                });
            }
        }
        Ok(Self {
            fusions,
            fused_to,
            fusion_sign,
            boundary_mode,
            global_of_boundary,
        })
    }

    pub fn total_modes(&self) -> usize {
        self.fused_to.len()
    }

    /// Global tile mode that carries boundary mode `b`.
    pub fn tile_mode_of_boundary(&self, b: usize) -> usize {
        self.global_of_boundary[b]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContractionStats {
    pub tiles: usize,
    pub seed_dimers: usize,
    pub fused_pairs: usize,
    pub boundary_dimers: usize,
    /// Seed dimers lying on boundary-to-boundary chains.
    pub chain_dimers: usize,
    /// Seed dimers lying on closed loops.
    pub loop_dimers: usize,
}

#[derive(Debug, Clone)]
pub struct Contraction {
    pub state: DimerState,
    pub closed_loops: usize,
    pub stats: ContractionStats,
}

/// Contracts the network by following each boundary mode through seed
/// dimers and fusions until it exits at another boundary mode.
///
/// Signs multiply along a chain: every seed dimer contributes its `Γ`, every
/// fusion contributes `+1` when it is crossed from its `x` mode to its `y`
/// mode and `-1` the other way.
pub fn contract(tiling: &TilingGraph, inputs: &LogicalInputs) -> Result<Contraction, DimerError> {
    let plan = ContractionPlan::new(tiling)?;
    contract_with_plan(tiling, &plan, inputs)
}

pub fn contract_with_plan(
    tiling: &TilingGraph,
    plan: &ContractionPlan,
    inputs: &LogicalInputs,
) -> Result<Contraction, DimerError> {
    let tiles = tiling.tiles().len();
    if let Some((&t, _)) = inputs.overrides.range(tiles..).next() {
        return Err(DimerError::UnknownTile(t));
    }
    let seeds = [seed_state(Logical::Zero), seed_state(Logical::One)];
    let seed_of = |t: usize| &seeds[inputs.get(t) as usize];
    let step = |g: usize| -> (usize, i8) {
        let (t, m) = (g / TILE_MODES, g % TILE_MODES);
        let s = seed_of(t);
        (TILE_MODES * t + s.partner(m), s.covariance(m, s.partner(m)))
    };

    let boundary_modes = plan.global_of_boundary.len();
    let mut partner = vec![usize::MAX; boundary_modes];
    let mut sign = vec![0i8; boundary_modes];
    let mut visited = vec![false; plan.total_modes()];
    let mut chain_dimers = 0;
    for b in 0..boundary_modes {
        if partner[b] != usize::MAX {
            continue;
        }
        let mut g = plan.global_of_boundary[b];
        let mut s = 1i8;
        loop {
            visited[g] = true;
            let (p, sp) = step(g);
            visited[p] = true;
            s *= sp;
            chain_dimers += 1;
            if plan.boundary_mode[p] != usize::MAX {
                g = p;
                break;
            }
            let q = plan.fused_to[p];
            s *= plan.fusion_sign[p];
            g = q;
        }
        let e = plan.boundary_mode[g];
        partner[b] = e;
        partner[e] = b;
        sign[b] = s;
        sign[e] = -s;
    }

    let mut closed_loops = 0;
    let mut loop_dimers = 0;
    for start in 0..plan.total_modes() {
        if visited[start] {
            continue;
        }
        closed_loops += 1;
        let mut g = start;
        while !visited[g] {
            visited[g] = true;
            let (p, _) = step(g);
            visited[p] = true;
            loop_dimers += 1;
            g = plan.fused_to[p];
        }
    }

    let stats = ContractionStats {
        tiles,
        seed_dimers: tiles * TILE_MODES / 2,
        fused_pairs: plan.fusions.len() * 2,
        boundary_dimers: boundary_modes / 2,
        chain_dimers,
        loop_dimers,
    };
    if stats.chain_dimers + stats.loop_dimers != stats.seed_dimers {
        return Err(DimerError::InvalidState(format!(
            "{} chain and {} loop dimers for {} seed dimers",
            chain_dimers, loop_dimers, stats.seed_dimers
        )));
    }
    Ok(Contraction {
        state: DimerState { partner, sign },
        closed_loops,
        stats,
    })
}

/// Number of dimers with both ends among the `ell` sites starting at `p`.
fn internal_dimers(state: &DimerState, p: usize, ell: usize) -> usize {
    let n = state.num_modes();
    let lo = 2 * p;
    let w = 2 * ell;
    (0..w)
        .filter(|&i| {
            let m = (lo + i) % n;
            let rel = (state.partner(m) + n - lo % n) % n;
            rel < w && rel > i
        })
        .count()
}

/// Fidelity of the `ell`-site window at site `p` under translation by `d`
/// sites: matched dimers over the mean number of dimers inside the window
/// and inside its translate. A window with no internal dimers scores 1.
pub fn fidelity_at(state: &DimerState, p: usize, ell: usize, d: usize) -> f64 {
    let n = state.num_modes();
    let lo = 2 * p;
    let w = 2 * ell.min(state.num_sites());
    let shift = 2 * d;
    let mut inside = 0;
    let mut matched = 0;
    for i in 0..w {
        let m = (lo + i) % n;
        let k = state.partner(m);
        let rel = (k + n - lo % n) % n;
        if rel < w && rel > i {
            inside += 1;
            if state.partner((m + shift) % n) == (k + shift) % n {
                matched += 1;
            }
        }
    }
    let moved = internal_dimers(state, p + d, ell.min(state.num_sites()));
    if inside + moved == 0 {
        1.0
    } else {
        2.0 * matched as f64 / (inside + moved) as f64
    }
}

/// [`fidelity_at`] with the window anchored at site 0.
pub fn dimer_fidelity(state: &DimerState, ell: usize, d: usize) -> f64 {
    fidelity_at(state, 0, ell, d)
}

/// Rows: window sizes; columns: offsets `0..L`.
pub fn fidelity_grid(state: &DimerState, ells: &[usize]) -> Vec<Vec<f64>> {
    let l = state.num_sites();
    ells.par_iter()
        .map(|&ell| (0..l).map(|d| dimer_fidelity(state, ell, d)).collect())
        .collect()
}

/// Mean of [`dimer_fidelity`] over all offsets `1..L`.
pub fn mean_fidelity(state: &DimerState, ell: usize) -> f64 {
    let l = state.num_sites();
    let total: f64 = (1..l).into_par_iter().map(|d| dimer_fidelity(state, ell, d)).sum();
    total / (l - 1) as f64
}

/// A uniformly random perfect matching of `2 * sites` modes with random signs.
pub fn random_matching(sites: usize, rng: &mut ChaCha8Rng) -> DimerState {
    use rand::Rng;
    let mut modes: Vec<usize> = (0..2 * sites).collect();
    modes.shuffle(rng);
    let pairs: Vec<(usize, usize, i8)> = modes
        .chunks(2)
        .map(|c| (c[0], c[1], if rng.random::<bool>() { 1 } else { -1 }))
        .collect();
    DimerState::from_pairs(2 * sites, &pairs).expect("chunks form a perfect matching")
}

/// [`internal_dimers`] for every window start `p = 0..L`, from one pass
/// over the dimers: a dimer spanning `len` modes forward from mode `a` lies
/// inside the windows starting at modes `a + len - w + 1 ..= a`.
fn internal_dimer_counts(state: &DimerState, ell: usize) -> Vec<usize> {
    let n = state.num_modes();
    let l = state.num_sites();
    let w = 2 * ell.min(l);
    let mut diff = vec![0isize; n + 1];
    let mut add = |from: usize, to: usize| {
        // inclusive cyclic range of mode starts
        if from <= to {
            diff[from] += 1;
            diff[to + 1] -= 1;
        } else {
            diff[from] += 1;
            diff[n] -= 1;
            diff[0] += 1;
            diff[to + 1] -= 1;
        }
    };
    for d in state.dimers() {
        for (a, b) in [(d.j, d.k), (d.k, d.j)] {
            let len = (b + n - a) % n;
            if len < w {
                add((a + n + len + 1 - w) % n, a);
            }
        }
    }
    let mut counts = Vec::with_capacity(l);
    let mut running = 0isize;
    for (m, delta) in diff.iter().take(n).enumerate() {
        running += delta;
        if m % 2 == 0 {
            counts.push(running as usize);
        }
    }
    counts
}

/// Translation fidelity expected without any structure: over `samples`
/// uniformly random matchings, matched dimers over window dimers, pooled
/// across offsets `1..L` (pooling avoids scoring dimer-free windows as 1).
pub fn shuffled_baseline(sites: usize, ell: usize, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<DimerState> = (0..samples).map(|_| random_matching(sites, &mut rng)).collect();
    let w = 2 * ell.min(sites);
    let (matched, total) = states
        .par_iter()
        .map(|s| {
            let n = s.num_modes();
            let counts = internal_dimer_counts(s, ell);
            let base: Vec<(usize, usize)> = s
                .dimers()
                .into_iter()
                .filter(|d| d.j < w && d.k < w)
                .map(|d| (d.j, d.k))
                .collect();
            let mut matched = 0usize;
            let mut total = 0usize;
            for d in 1..sites {
                let shift = 2 * d;
                matched += base
                    .iter()
                    .filter(|&&(j, k)| s.partner((j + shift) % n) == (k + shift) % n)
                    .count();
                total += base.len() + counts[d];
            }
            (matched, total)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    if total == 0 {
        0.0
    } else {
        2.0 * matched as f64 / total as f64
    }
}

/// Cyclic site distance of each dimer, counted per distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrelationHistogram {
    pub num_sites: usize,
    pub counts: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub points: usize,
}

/// Partition of histogram bins by `count · d`, split at the widest gap.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchSplit {
    pub threshold: f64,
    pub low: Vec<usize>,
    pub high: Vec<usize>,
    /// Ratio of the smallest high value to the largest low value.
    pub gap_ratio: f64,
    /// Branch changes when the bins are read in order of distance.
    pub alternations: usize,
}

impl BranchSplit {
    /// Two well separated branches that take turns along the distance axis.
    pub fn is_interleaved(&self) -> bool {
        self.gap_ratio >= 2.0 && self.alternations >= 3
    }
}

pub fn correlation_histogram(state: &DimerState) -> CorrelationHistogram {
    let l = state.num_sites();
    let mut counts = BTreeMap::new();
    for d in state.dimers() {
        let (a, b) = (d.j / 2, d.k / 2);
        let dist = (b - a).min(l - (b - a));
        *counts.entry(dist).or_insert(0) += 1;
    }
    CorrelationHistogram { num_sites: l, counts }
}

impl CorrelationHistogram {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    fn bins(&self, lo: usize, hi: usize) -> Vec<(usize, usize)> {
        self.counts
            .range(lo..=hi)
            .filter(|(_, &c)| c > 0)
            .map(|(&d, &c)| (d, c))
            .collect()
    }

    /// Least-squares line through `(ln d, ln count)` over nonzero bins in `[lo, hi]`.
    pub fn decay_exponent(&self, lo: usize, hi: usize) -> Option<LogLogFit> {
        let bins = self.bins(lo.max(1), hi);
        let xs: Vec<f64> = bins.iter().map(|&(d, _)| (d as f64).ln()).collect();
        let ys: Vec<f64> = bins.iter().map(|&(_, c)| (c as f64).ln()).collect();
        let (slope, intercept) = least_squares(&xs, &ys)?;
        Some(LogLogFit {
            slope,
            intercept,
            points: bins.len(),
        })
    }

    /// Splits nonzero bins in `[lo, hi]` into two branches by `count · d`,
    /// the density a pure `1/d` law would keep constant.
    pub fn branches(&self, lo: usize, hi: usize) -> Option<BranchSplit> {
        let bins = self.bins(lo.max(1), hi);
        if bins.len() < 2 {
            return None;
        }
        let mut weights: Vec<f64> = bins.iter().map(|&(d, c)| (d * c) as f64).collect();
        weights.sort_by(f64::total_cmp);
        let (cut, gap_ratio) = weights
            .windows(2)
            .map(|w| (w[0], w[1] / w[0]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least two bins");
        let mut low = Vec::new();
        let mut high = Vec::new();
        let mut labels = Vec::new();
        for &(d, c) in &bins {
            let is_high = (d * c) as f64 > cut;
            labels.push(is_high);
            if is_high {
                high.push(d);
            } else {
                low.push(d);
            }
        }
        let alternations = labels.windows(2).filter(|w| w[0] != w[1]).count();
        Some(BranchSplit {
            threshold: cut * gap_ratio.sqrt(),
            low,
            high,
            gap_ratio,
            alternations,
        })
    }
}

pub(crate) fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// How the dimers of the two sites next to a boundary vertex meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexMotif {
    pub position: usize,
    pub letter: Letter,
    /// Crossing pairs between a dimer at site `position - 1` and a
    /// different dimer at site `position`.
    pub crossings: usize,
}

/// Crossing motif at every boundary vertex: `a` vertices carry crossing
/// dimer pairs, `b` vertices separate non-crossing ones.
pub fn vertex_motifs(tiling: &TilingGraph, state: &DimerState) -> Vec<VertexMotif> {
    let l = state.num_sites();
    let n = state.num_modes();
    tiling
        .boundary()
        .iter()
        .map(|b| {
            let left = (b.position + l - 1) % l;
            let right = b.position;
            let chords = |site: usize| [2 * site, 2 * site + 1].map(|m| (m, state.partner(m)));
            let mut crossings = 0;
            for (a1, b1) in chords(left) {
                for (a2, b2) in chords(right) {
                    let same = (a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2);
                    if !same && chords_cross(a1 % n, b1 % n, a2 % n, b2 % n) {
                        crossings += 1;
                    }
                }
            }
            VertexMotif {
                position: b.position,
                letter: b.letter,
                crossings,
            }
        })
        .collect()
}
