//! Independent reference computations shared by the integration tests and
//! the acceptance suite. None of these reuse the library's algorithms.

#![allow(dead_code)]

use nalgebra::{Complex, DMatrix, DVector};

use qcft::dimers::{ContractionPlan, DimerState, Logical, LogicalInputs, TILE_MODES};
use qcft::TilingGraph;

type C = Complex<f64>;

fn pauli(c: char) -> DMatrix<C> {
    let o = C::new(0.0, 0.0);
    let l = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    match c {
        'I' => DMatrix::from_row_slice(2, 2, &[l, o, o, l]),
        'X' => DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        'Y' => DMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        'Z' => DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
        _ => unreachable!(),
    }
}

fn pauli_string(s: &str) -> DMatrix<C> {
    s.chars()
        .map(pauli)
        .reduce(|a, b| a.kronecker(&b))
        .expect("non-empty Pauli string")
}

/// Covariance `Γ_jk = (i/2)⟨[γ_j, γ_k]⟩` of the logical state of the
/// five-qubit code (cyclic stabilizers `XZZXI`), with Jordan-Wigner Majoranas
/// `γ_{2q} = Z..Z X`, `γ_{2q+1} = Z..Z Y` on qubit `q`.
pub fn five_qubit_covariance(logical: Logical) -> [[f64; 10]; 10] {
    let dim = 32;
    let id = DMatrix::<C>::identity(dim, dim);
    let half = C::new(0.5, 0.0);
    let mut proj = id.clone();
    for g in ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"] {
        proj = &proj * (&id + pauli_string(g)) * half;
    }
    let z = match logical {
        Logical::Zero => 1.0,
        Logical::One => -1.0,
    };
    proj = &proj * (&id + pauli_string("ZZZZZ") * C::new(z, 0.0)) * half;
    // The code state is the image of any basis vector it overlaps.
    let psi = (0..dim)
        .map(|k| proj.column(k).into_owned())
        .find(|v| v.norm() > 1e-6)
        .expect("logical projector is non-zero");
    let psi: DVector<C> = psi.normalize();

    let gammas: Vec<DMatrix<C>> = (0..5)
        .flat_map(|q| {
            ['X', 'Y'].map(|p| {
                let s: String = "Z".repeat(q) + &p.to_string() + &"I".repeat(4 - q);
                pauli_string(&s)
            })
        })
        .collect();
    let mut g = [[0.0; 10]; 10];
    for a in 0..10 {
        for b in 0..10 {
            if a != b {
                let v = psi.adjoint() * &gammas[a] * &gammas[b] * &psi;
                g[a][b] = (C::new(0.0, 1.0) * v[(0, 0)]).re;
            }
        }
    }
    g
}

/// Boundary covariance of the whole network by Gaussian elimination of the
/// fused modes: every fused pair `(x, y)` is projected onto `Γ_xy = +1`.
///
/// The block-diagonal product state `Γ` is split into kept modes `A`
/// (boundary) and fused modes `F`; with `M` the antisymmetric pair matrix on
/// `F`, the kept covariance is `Γ_AA - Γ_AF (Γ_FF + M)^{-1} Γ_FA`.
pub fn gaussian_contraction(tiling: &TilingGraph, inputs: &LogicalInputs) -> DMatrix<f64> {
    let plan = ContractionPlan::new(tiling).expect("pentagon tiling");
    let total = tiling.tiles().len() * TILE_MODES;
    let mut gamma = DMatrix::<f64>::zeros(total, total);
    let seeds = [Logical::Zero, Logical::One].map(five_qubit_covariance);
    for t in 0..tiling.tiles().len() {
        let seed = &seeds[inputs.get(t) as usize];
        for a in 0..10 {
            for b in 0..10 {
                gamma[(10 * t + a, 10 * t + b)] = seed[a][b].round();
            }
        }
    }
    let boundary_modes = 2 * tiling.boundary_len();
    let kept: Vec<usize> = (0..boundary_modes).map(|b| plan.tile_mode_of_boundary(b)).collect();
    let mut fused: Vec<usize> = Vec::new();
    for f in &plan.fusions {
        for (x, y) in f.modes {
            fused.push(x);
            fused.push(y);
        }
    }
    let slot: std::collections::HashMap<usize, usize> = fused.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let index_of = |m: usize| slot[&m];
    let nf = fused.len();
    let mut m = DMatrix::<f64>::zeros(nf, nf);
    for f in &plan.fusions {
        for (x, y) in f.modes {
            let (i, j) = (index_of(x), index_of(y));
            m[(i, j)] = 1.0;
            m[(j, i)] = -1.0;
        }
    }
    let sub = |rows: &[usize], cols: &[usize]| DMatrix::from_fn(rows.len(), cols.len(), |i, j| gamma[(rows[i], cols[j])]);
    let g_aa = sub(&kept, &kept);
    let g_af = sub(&kept, &fused);
    let g_ff = sub(&fused, &fused);
    let g_fa = sub(&fused, &kept);
    let inv = (g_ff + m).try_inverse().expect("fusion system is invertible");
    g_aa - &g_af * inv * g_fa
}

/// Largest deviation between a dense covariance and a dimer state.
pub fn covariance_deviation(dense: &DMatrix<f64>, state: &DimerState) -> f64 {
    let n = state.num_modes();
    assert_eq!(dense.nrows(), n);
    let mut worst = 0.0f64;
    for j in 0..n {
        for k in 0..n {
            worst = worst.max((dense[(j, k)] - state.covariance(j, k) as f64).abs());
        }
    }
    worst
}

/// Hyperbolic distance between two disk points by integrating the metric
/// `2 |dz| / (1 - |z|^2)` along the geodesic through them, which is found by
/// moving `a` to the origin (composite Simpson on the radial segment).
pub fn distance_by_quadrature(a: (f64, f64), b: (f64, f64)) -> f64 {
    let za = Complex::new(a.0, a.1);
    let zb = Complex::new(b.0, b.1);
    let w = (zb - za) / (Complex::new(1.0, 0.0) - za.conj() * zb);
    let r = w.norm();
    let steps = 20_000;
    let h = r / steps as f64;
    let f = |x: f64| 2.0 / (1.0 - x * x);
    let mut sum = f(0.0) + f(r);
    for i in 1..steps {
        sum += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * h / 3.0
}

/// Edge length of the `{n,k}` tiling from the isosceles triangle (centre,
/// two adjacent corners): `cosh s = cosh^2 R - sinh^2 R cos(2 pi / n)` with
/// circumradius `cosh R = cot(pi/n) cot(pi/k)`.
pub fn edge_length_by_trigonometry(n: u32, k: u32) -> f64 {
    let (n, k) = (n as f64, k as f64);
    let pi = std::f64::consts::PI;
    let cosh_r = 1.0 / ((pi / n).tan() * (pi / k).tan());
    let sinh2 = cosh_r * cosh_r - 1.0;
    (cosh_r * cosh_r - sinh2 * (2.0 * pi / n).cos()).acosh()
}

/// Letter word of the boundary by direct counting: a boundary vertex is `b`
/// when it lies on two tiles, `a` when it lies on one.
pub fn boundary_word_by_counting(tiling: &TilingGraph) -> String {
    tiling
        .boundary()
        .iter()
        .map(|bv| {
            let touching = tiling.tiles().iter().filter(|t| t.vertices.contains(&bv.id)).count();
            if touching == 2 { 'b' } else { 'a' }
        })
        .collect()
}

/// Von Neumann entropy (nats) of the modes `region` of a Gaussian state with
/// dense covariance `gamma`: with `±i ν_k` the eigenvalues of the restricted
/// covariance, `S = Σ_k H((1 + ν_k) / 2)` with `H` the binary entropy.
pub fn gaussian_entropy(gamma: &DMatrix<f64>, region: &[usize]) -> f64 {
    let sub = DMatrix::from_fn(region.len(), region.len(), |i, j| gamma[(region[i], region[j])]);
    let sq = -(&sub * &sub);
    let h = |p: f64| if p <= 1e-12 || p >= 1.0 - 1e-12 { 0.0 } else { -p * p.ln() - (1.0 - p) * (1.0 - p).ln() };
    // every ν² appears twice
    sq.symmetric_eigen()
        .eigenvalues
        .iter()
        .map(|&v2| h((1.0 + v2.clamp(0.0, 1.0).sqrt()) / 2.0))
        .sum::<f64>()
        / 2.0
}
