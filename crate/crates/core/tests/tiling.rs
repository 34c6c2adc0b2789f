mod common;

use proptest::prelude::*;

use qcft::inflation::{inflate, letter_counts, LetterSequence};
use qcft::tiling::{RegionKind, TilingError};
use qcft::{build_tiling, BoundaryInterval, TilingGraph};

/// All-pairs vertex distances from the tiles' corner lists (Floyd-Warshall).
fn vertex_distances(tiling: &TilingGraph) -> Vec<Vec<u32>> {
    let v = tiling.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; v]; v];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for t in tiling.tiles() {
        let n = t.vertices.len();
        for j in 0..n {
            let (a, b) = (t.vertices[j], t.vertices[(j + 1) % n]);
            d[a][b] = 1;
            d[b][a] = 1;
        }
    }
    for k in 0..v {
        for i in 0..v {
            for j in 0..v {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

#[test]
fn seed_patch() {
    let t = build_tiling(0).unwrap();
    assert_eq!(t.tiles().len(), 1);
    assert_eq!(t.boundary_edges().len(), 5);
    assert_eq!(t.boundary_word().to_string(), "aaaaa");
}

#[test]
fn layer_counts_follow_b_letters() {
    let t = build_tiling(4).unwrap();
    assert_eq!(t.layer_tile_counts(), [1, 10, 40, 150, 560]);
    assert_eq!(t.boundary_len(), 1325);
    let mut word = LetterSequence::seed(5);
    for layer in 1..=4 {
        word = inflate(&word);
        assert_eq!(t.layer_tile_counts()[layer], letter_counts(&word).1);
    }
}

#[test]
fn boundary_letters_match_tile_incidence() {
    for steps in 0..=4 {
        let t = build_tiling(steps).unwrap();
        assert_eq!(common::boundary_word_by_counting(&t), t.boundary_word().to_string());
        t.validate().unwrap();
    }
}

#[test]
fn euler_characteristic_of_a_disk() {
    for steps in 0..=4 {
        let t = build_tiling(steps).unwrap();
        let chi = t.vertex_count() as i64 - t.edges().len() as i64 + t.tiles().len() as i64;
        assert_eq!(chi, 1, "steps {steps}");
        // Interior vertices have degree 4.
        let boundary: std::collections::HashSet<usize> = t.boundary().iter().map(|b| b.id).collect();
        for v in 0..t.vertex_count() {
            if !boundary.contains(&v) {
                assert_eq!(t.neighbours(v).len(), 4);
            }
        }
    }
}

#[test]
fn minimal_cuts_match_all_pairs_distances() {
    for steps in 0..=2 {
        let t = build_tiling(steps).unwrap();
        let d = vertex_distances(&t);
        let l = t.boundary_len();
        for start in 0..l {
            for len in 1..l {
                let cut = t.minimal_cut(BoundaryInterval::new(start, len)).unwrap();
                let p = t.boundary()[start].id;
                let q = t.boundary()[(start + len) % l].id;
                assert_eq!(cut.cut_edges as u32, d[p][q], "steps {steps} region {start}+{len}");
                assert_eq!(cut.path.len(), cut.cut_edges);
            }
        }
    }
}

#[test]
fn cut_examples() {
    let seed = build_tiling(0).unwrap();
    assert_eq!(seed.minimal_cut(BoundaryInterval::new(0, 2)).unwrap().cut_edges, 2);
    assert_eq!(seed.minimal_cut(BoundaryInterval::new(1, 3)).unwrap().cut_edges, 2);
    let one = build_tiling(1).unwrap();
    for s in 0..one.boundary_len() {
        // A single site is cut off by its own boundary edge.
        assert_eq!(one.minimal_cut(BoundaryInterval::new(s, 1)).unwrap().cut_edges, 1);
    }
    assert!(matches!(
        one.minimal_cut(BoundaryInterval::new(0, 0)),
        Err(TilingError::DegenerateRegion { .. })
    ));
}

#[test]
fn recentering_on_the_centre_changes_nothing() {
    let t = build_tiling(2).unwrap();
    let (moved, maps) = t.recenter(t.center()).unwrap();
    assert_eq!(moved.layer_tile_counts(), t.layer_tile_counts());
    assert_eq!(maps.len(), 1);
    assert_eq!(maps[0].kind, RegionKind::Unchanged);
    assert_eq!(maps[0].target, maps[0].source);
}

#[test]
fn off_centre_view_coarsens_near_side_and_refines_far_side() {
    let t = build_tiling(2).unwrap();
    let new_center = t.tiles().iter().find(|tile| tile.layer == 1).unwrap().id;
    let (_, maps) = t.recenter(new_center).unwrap();
    assert!(maps.iter().any(|m| m.kind == RegionKind::Coarse));
    assert!(maps.iter().any(|m| m.kind == RegionKind::Fine));
    let covered: usize = maps.iter().map(|m| m.source.len).sum();
    assert_eq!(covered, t.boundary_len());
    for m in &maps {
        match m.kind {
            RegionKind::Coarse => assert!(m.target.len <= m.source.len && m.target_layer < 2),
            RegionKind::Fine => assert!(m.target.len >= m.source.len && m.target_layer > 2),
            RegionKind::Unchanged => assert_eq!(m.target, m.source),
        }
    }
}

#[test]
fn deflating_regions() {
    let t = build_tiling(4).unwrap();
    let whole = t.deflate_region(BoundaryInterval::new(0, 1325)).unwrap();
    assert_eq!(whole.target.len, 355);
    assert_eq!(whole.target_layer, 3);

    // The first five letters are the image of the first letter of layer 3.
    let top = t.mqa().top().to_string();
    let below = t.mqa().layer(3).to_string();
    assert_eq!(&below[..1], "a");
    assert_eq!(&top[..5], "abaab");
    let one = t.deflate_region(BoundaryInterval::new(0, 5)).unwrap();
    assert_eq!(one.target, BoundaryInterval::new(0, 1));

    let bab = below.find("bab").expect("layer 3 contains bab");
    let start = t.mqa().image_range(3, bab).0;
    assert_eq!(&top[start..start + 9], "ababaabab");
    let map = t.deflate_region(BoundaryInterval::new(start, 9)).unwrap();
    assert_eq!(map.target, BoundaryInterval::new(bab, 3));

    assert!(matches!(
        t.deflate_region(BoundaryInterval::new(1, 5)),
        Err(TilingError::Misaligned { .. })
    ));
    assert!(matches!(
        build_tiling(0).unwrap().deflate_region(BoundaryInterval::new(0, 2)),
        Err(TilingError::NothingToDeflate)
    ));
}

#[test]
fn patches_have_fivefold_symmetry() {
    for steps in 0..=4 {
        assert!(build_tiling(steps).unwrap().is_rotation_symmetric(5));
    }
}

#[test]
fn json_lists_every_tile() {
    let t = build_tiling(1).unwrap();
    let json = serde_json::to_value(t.to_json()).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["tiles"].as_array().unwrap().len(), 11);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cuts_agree_with_complements(start in 0usize..355, len in 1usize..355) {
        let t = build_tiling(3).unwrap();
        let l = t.boundary_len();
        let r = BoundaryInterval::new(start % l, len % l);
        prop_assume!(r.len > 0);
        let a = t.minimal_cut(r).unwrap().cut_edges;
        let b = t.minimal_cut(r.complement(l)).unwrap().cut_edges;
        prop_assert_eq!(a, b);
        prop_assert!(a <= r.len.min(l - r.len));
    }
}
