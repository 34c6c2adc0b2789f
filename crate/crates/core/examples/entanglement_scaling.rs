//! Entanglement of boundary regions: the position-averaged profile, the
//! central-charge fit, its minimal-cut bound, and the cut inequality.
//!
//! ```text
//! cargo run --release --example entanglement_scaling
//! ```

use qcft::dimers::{contract, correlation_histogram, mean_fidelity, shuffled_baseline, Logical, LogicalInputs};
use qcft::entanglement::{c_max, fit_central_charge, pentagon_central_charge, rt_bound_check, EntropyProfile, RegionSampling};
use qcft::build_tiling;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tiling = build_tiling(4)?;
    let state = contract(&tiling, &LogicalInputs::all(Logical::Zero))?.state;
    let profile = EntropyProfile::compute(&state);
    for l in [1, 2, 5, 10, 50, 100, 300, 662] {
        println!("S({l:>3}) = {:.4} +- {:.4} nats", profile.mean[l], profile.std[l]);
    }

    let fit = fit_central_charge(&profile, None)?;
    let bound = c_max(&tiling, 2, None)?;
    println!("c = {:.4} (expected {:.4}), c_max = {:.4}", fit.c, pentagon_central_charge(), bound.c_max);

    let rt = rt_bound_check(&tiling, &state, 2, RegionSampling::Sampled { count: 10_000, seed: 0 })?;
    println!(
        "cut bound: {} regions, {} saturate it, {} violate it",
        rt.regions_checked,
        rt.saturating_regions,
        rt.violations.len()
    );

    let hist = correlation_histogram(&state);
    if let Some(f) = hist.decay_exponent(4, 200) {
        println!("dimer lengths fall off as d^{:.3}", f.slope);
    }
    if let Some(b) = hist.branches(4, 200) {
        println!("two branches: {:?} and {:?}", b.low, b.high);
    }
    for ell in [50, 100, 200] {
        println!(
            "window {ell}: mean fidelity {:.3}, random matchings {:.4}",
            mean_fidelity(&state, ell),
            shuffled_baseline(state.num_sites(), ell, 200, 0)
        );
    }
    Ok(())
}
