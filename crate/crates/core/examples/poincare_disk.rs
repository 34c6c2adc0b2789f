//! Disk isometries, geodesic reflections and the placement of a `{5,4}` patch.
//!
//! ```text
//! cargo run --example poincare_disk
//! ```

use std::f64::consts::PI;

use qcft::geometry::{
    central_tile, compose_reflections, edge_length, edge_length_large_k, hyperbolic_distance, vertex_coordinates,
    DiskPoint, Geodesic, MobiusTransform, TilingParams,
};
use qcft::build_tiling;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = TilingParams::pentagon();
    let s = edge_length(&p)?;
    println!("{{5,4}} edge length s = {s:.12}");
    for k in [8, 16, 64, 256] {
        let q = TilingParams::new(5, k)?;
        println!(
            "  k = {k:>3}: exact {:.6}  large-k form {:.6}",
            edge_length(&q)?,
            edge_length_large_k(&q)
        );
    }

    let corners = central_tile(&p)?;
    println!("central pentagon, radius {:.6}:", corners[0].norm());
    for c in &corners {
        println!("  ({:+.6}, {:+.6})", c.re(), c.im());
    }

    // Reflecting across two sides of the central tile is a rotation about
    // their shared corner by twice the corner angle.
    let g1 = Geodesic::through(corners[0], corners[1])?;
    let g2 = Geodesic::through(corners[1], corners[2])?;
    let m = compose_reflections(&g1, &g2)?;
    let z = DiskPoint::new(0.1, -0.2)?;
    println!(
        "two reflections as one isometry: w = ({:.6}, {:.6}), theta = {:.6} (twice the right angle: {:.6})",
        m.shift().re(),
        m.shift().im(),
        m.angle(),
        PI
    );
    println!("  fixed corner moves by {:.2e}", hyperbolic_distance(m.apply(corners[1]), corners[1], 1.0));
    println!("  test point: direct {:?}, via reflections {:?}", m.apply(z), g2.reflect(g1.reflect(z)));

    let t = MobiusTransform::new(DiskPoint::new(0.4, 0.3)?, 1.0);
    let a = DiskPoint::new(-0.2, 0.5)?;
    println!(
        "distance before/after a boost: {:.12} / {:.12}",
        hyperbolic_distance(a, z, 1.0),
        hyperbolic_distance(t.apply(a), t.apply(z), 1.0)
    );

    let tiling = build_tiling(3)?;
    let coords = vertex_coordinates(&p, &tiling)?;
    let worst = tiling
        .edges()
        .iter()
        .map(|e| (hyperbolic_distance(coords[e.vertices[0]], coords[e.vertices[1]], 1.0) - s).abs())
        .fold(0.0, f64::max);
    let outer = coords.iter().map(|c| c.norm()).fold(0.0, f64::max);
    println!(
        "{} vertices placed, largest |z| = {outer:.6}, max edge-length error {worst:.1e}",
        coords.len()
    );
    Ok(())
}
