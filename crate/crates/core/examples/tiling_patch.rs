//! Growing a `{5,4}` patch layer by layer, minimal cuts, and moving the
//! centre of the patch.
//!
//! ```text
//! cargo run --example tiling_patch
//! ```

use qcft::tiling::RegionKind;
use qcft::{build_tiling, BoundaryInterval, TilingGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for steps in 0..=4 {
        let t = build_tiling(steps)?;
        println!(
            "steps {steps}: tiles {:>3}  edges {:>4}  vertices {:>4}  boundary {:>4}  per layer {:?}",
            t.tiles().len(),
            t.edges().len(),
            t.vertex_count(),
            t.boundary_len(),
            t.layer_tile_counts()
        );
    }

    let t = build_tiling(3)?;
    let l = t.boundary_len();
    for len in [1, 5, 20, 80, l / 2] {
        let cut = t.minimal_cut(BoundaryInterval::new(0, len))?;
        println!("region of {len:>3} sites: minimal cut {} edges", cut.cut_edges);
    }

    let other = TilingGraph::build(4, 5, 3)?;
    println!(
        "{{4,5}} at 3 steps: {} tiles, boundary word starts {}",
        other.tiles().len(),
        &other.boundary_word().to_string()[..30]
    );

    let t = build_tiling(2)?;
    let off_centre = t.tiles().iter().find(|tile| tile.layer == 1).expect("layer 1 exists").id;
    let (_, maps) = t.recenter(off_centre)?;
    for m in maps {
        let what = match m.kind {
            RegionKind::Coarse => "coarse",
            RegionKind::Fine => "fine",
            RegionKind::Unchanged => "same",
        };
        println!(
            "  {what:>6}: sites {:>2}+{:<2} of layer {} -> {:>3}+{:<3} of layer {}",
            m.source.start, m.source.len, m.source_layer, m.target.start, m.target.len, m.target_layer
        );
    }

    let t = build_tiling(4)?;
    let map = t.deflate_region(BoundaryInterval::new(0, t.boundary_len()))?;
    println!("global deflation: {} letters -> {} letters", map.source.len, map.target.len);
    Ok(())
}
