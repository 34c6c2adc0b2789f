mod common;

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use qcft::build_tiling;
use qcft::geometry::{
    central_tile, compose_reflections, edge_length, hyperbolic_distance, orientation, vertex_coordinates, DiskPoint,
    Geodesic, GeometryError, MobiusTransform, TilingParams,
};

fn point(r: f64, a: f64) -> DiskPoint {
    DiskPoint::from_polar(r, a).unwrap()
}

fn disk_point() -> impl Strategy<Value = DiskPoint> {
    (0.0..0.95f64, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| point(r, a))
}

#[test]
fn mobius_examples() {
    let z = DiskPoint::new(0.3, 0.0).unwrap();
    assert_abs_diff_eq!(MobiusTransform::identity().apply(z).re(), 0.3, epsilon = 1e-15);
    let rotated = MobiusTransform::rotation(std::f64::consts::PI).apply(z);
    assert_abs_diff_eq!(rotated.re(), -0.3, epsilon = 1e-15);
    assert_abs_diff_eq!(rotated.im(), 0.0, epsilon = 1e-15);
    let w = DiskPoint::new(0.5, 0.0).unwrap();
    let shifted = MobiusTransform::new(w, 0.0).apply(DiskPoint::ORIGIN);
    assert_abs_diff_eq!(shifted.re(), 0.5, epsilon = 1e-15);
}

#[test]
fn radial_distance_matches_quadrature() {
    let d = hyperbolic_distance(DiskPoint::ORIGIN, DiskPoint::new(0.5, 0.0).unwrap(), 1.0);
    assert_abs_diff_eq!(d, 2.0 * 0.5f64.atanh(), epsilon = 1e-12);
    assert_abs_diff_eq!(d, common::distance_by_quadrature((0.0, 0.0), (0.5, 0.0)), epsilon = 1e-10);
    assert_abs_diff_eq!(d, 1.098612, epsilon = 1e-6);
    let z = point(0.7, 1.0);
    assert_eq!(hyperbolic_distance(z, z, 3.0), 0.0);
    assert_abs_diff_eq!(hyperbolic_distance(DiskPoint::ORIGIN, z, 2.5), 2.5 * hyperbolic_distance(DiskPoint::ORIGIN, z, 1.0), epsilon = 1e-12);
}

#[test]
fn edge_lengths() {
    let s = edge_length(&TilingParams::pentagon()).unwrap();
    assert_abs_diff_eq!(s, 1.061275, epsilon = 1e-6);
    for (n, k) in [(5, 4), (4, 5), (3, 7), (7, 3), (6, 6), (8, 3)] {
        let p = TilingParams::new(n, k).unwrap();
        assert_abs_diff_eq!(edge_length(&p).unwrap(), common::edge_length_by_trigonometry(n, k), epsilon = 1e-12);
    }
    assert!(matches!(
        edge_length(&TilingParams::new(4, 4).unwrap()),
        Err(GeometryError::NotHyperbolic { .. })
    ));
}

#[test]
fn central_pentagon_is_regular() {
    let corners = central_tile(&TilingParams::pentagon()).unwrap();
    assert_eq!(corners.len(), 5);
    let r = corners[0].norm();
    for (j, c) in corners.iter().enumerate() {
        assert_abs_diff_eq!(c.norm(), r, epsilon = 1e-15);
        let expected = (std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * j as f64 / 5.0).rem_euclid(std::f64::consts::TAU);
        assert_abs_diff_eq!(c.arg().rem_euclid(std::f64::consts::TAU), expected, epsilon = 1e-12);
    }
}

#[test]
fn placed_vertices_sit_one_edge_apart() {
    let p = TilingParams::pentagon();
    let s = edge_length(&p).unwrap();
    for steps in 0..=4 {
        let tiling = build_tiling(steps).unwrap();
        let coords = vertex_coordinates(&p, &tiling).unwrap();
        assert_eq!(coords.len(), tiling.vertex_count());
        for e in tiling.edges() {
            let d = hyperbolic_distance(coords[e.vertices[0]], coords[e.vertices[1]], 1.0);
            assert!((d - s).abs() < 1e-9, "steps {steps} edge {} length {d}", e.id);
        }
    }
    let one_step = build_tiling(1).unwrap();
    assert_eq!(one_step.tiles().len(), 11);
}

#[test]
fn tiles_keep_counterclockwise_orientation() {
    let p = TilingParams::pentagon();
    let tiling = build_tiling(3).unwrap();
    let coords = vertex_coordinates(&p, &tiling).unwrap();
    let signs: Vec<bool> = tiling
        .tiles()
        .iter()
        .map(|t| orientation(coords[t.vertices[0]], coords[t.vertices[1]], coords[t.vertices[2]]) > 0.0)
        .collect();
    // Every tile lists its corners the same way round as the central one.
    assert!(signs.iter().all(|&s| s == signs[tiling.center()]));
}

#[test]
fn odd_reflections_reverse_orientation_even_preserve_it() {
    let g: Vec<Geodesic> = [
        (point(0.2, 0.1), point(0.6, 1.5)),
        (point(0.4, 2.0), point(0.1, -1.0)),
        (point(0.5, 3.0), point(0.3, 0.4)),
    ]
    .iter()
    .map(|&(a, b)| Geodesic::through(a, b).unwrap())
    .collect();
    let tri = [point(0.1, 0.3), point(0.3, 2.0), point(0.2, 4.0)];
    let base = orientation(tri[0], tri[1], tri[2]).signum();
    for count in 1..=3 {
        let image: Vec<DiskPoint> = tri
            .iter()
            .map(|&z| g[..count].iter().fold(z, |z, gi| gi.reflect(z)))
            .collect();
        let sign = orientation(image[0], image[1], image[2]).signum();
        assert_eq!(sign == base, count % 2 == 0, "{count} reflections");
    }
}

#[test]
fn two_reflections_fit_a_mobius_transform() {
    let g1 = Geodesic::through(point(0.3, 0.2), point(0.6, 2.2)).unwrap();
    let g2 = Geodesic::through(point(0.1, 1.0), point(0.8, -2.0)).unwrap();
    let src = [point(0.1, 0.0), point(0.4, 1.0), point(0.7, 2.5)];
    let dst = src.map(|z| g2.reflect(g1.reflect(z)));
    let fitted = MobiusTransform::fit(src, dst).unwrap();
    let direct = compose_reflections(&g1, &g2).unwrap();
    let fourth = point(0.55, -0.7);
    let expected = g2.reflect(g1.reflect(fourth));
    for t in [fitted, direct] {
        let got = t.apply(fourth);
        assert!((got.to_complex() - expected.to_complex()).norm() < 1e-10);
    }
}

proptest! {
    #[test]
    fn distance_is_isometry_invariant(a in disk_point(), b in disk_point(), w in disk_point(), theta in 0.0..6.28f64) {
        let t = MobiusTransform::new(w, theta);
        let before = hyperbolic_distance(a, b, 1.0);
        let after = hyperbolic_distance(t.apply(a), t.apply(b), 1.0);
        prop_assert!((before - after).abs() < 1e-7 * (1.0 + before));
    }

    #[test]
    fn reflections_are_involutions(a in disk_point(), b in disk_point(), z in disk_point()) {
        prop_assume!(hyperbolic_distance(a, b, 1.0) > 1e-3);
        let g = Geodesic::through(a, b).unwrap();
        let back = g.reflect(g.reflect(z));
        prop_assert!((back.to_complex() - z.to_complex()).norm() < 1e-9);
        for fixed in [a, b] {
            prop_assert!((g.reflect(fixed).to_complex() - fixed.to_complex()).norm() < 1e-9);
        }
    }

    #[test]
    fn compose_then_inverse_is_identity(w in disk_point(), theta in 0.0..6.28f64, z in disk_point()) {
        let t = MobiusTransform::new(w, theta);
        let back = t.inverse().apply(t.apply(z));
        prop_assert!((back.to_complex() - z.to_complex()).norm() < 1e-9);
    }
}
