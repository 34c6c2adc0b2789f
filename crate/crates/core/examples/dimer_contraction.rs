//! Seed dimer patterns of the pentagon code and the contracted boundary
//! state of a patch.
//!
//! ```text
//! cargo run --example dimer_contraction -- 3
//! ```

use qcft::dimers::{contract, seed_state, vertex_motifs, Logical, LogicalInputs};
use qcft::build_tiling;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let steps: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);

    for logical in [Logical::Zero, Logical::One] {
        let pairs: Vec<String> = seed_state(logical)
            .dimers()
            .iter()
            .map(|d| format!("{}-{}({:+})", d.j, d.k, d.orientation))
            .collect();
        println!("seed {logical:?}: {}", pairs.join(" "));
    }

    let tiling = build_tiling(steps)?;
    let c = contract(&tiling, &LogicalInputs::all(Logical::Zero))?;
    println!("steps {steps}: {:?}", c.stats);
    println!("closed loops {}, crossings {}", c.closed_loops, c.state.crossing_count());

    let fifth = c.state.num_sites() / 5;
    println!("invariant under a shift by L/5 = {fifth} sites: {}", c.state.translated(2 * fifth) == c.state);

    let motifs = vertex_motifs(&tiling, &c.state);
    let line: String = motifs.iter().take(40).map(|m| m.letter.as_char()).collect();
    let crossings: String = motifs.iter().take(40).map(|m| char::from_digit(m.crossings as u32, 10).unwrap_or('+')).collect();
    println!("letters   {line}");
    println!("crossings {crossings}");

    let mut flipped = LogicalInputs::all(Logical::Zero);
    flipped.overrides.insert(0, Logical::One);
    let other = contract(&tiling, &flipped)?.state;
    let changed = c.state.dimers().iter().zip(other.dimers()).filter(|(a, b)| a.orientation != b.orientation).count();
    println!(
        "flipping the central tile keeps the pairing ({}) and turns {changed} dimers",
        other.same_pairing(&c.state)
    );
    Ok(())
}
