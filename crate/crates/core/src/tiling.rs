//! Combinatorial `{n,k}` tiling patches grown by vertex inflation.
//!
//! Layer `l` attaches tiles around every boundary vertex of layer `l - 1`
//! until it has `k` tiles. Vertex ids, tile ids and edge ids are assigned in
//! layer order and then boundary order, so two builds are identical.
//!
//! Boundary vertex `j` sits between boundary edges `j - 1` and `j`; boundary
//! edge (site) `j` runs from vertex `j` to vertex `j + 1`, counterclockwise.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::inflation::{letter_counts, InflationError, Letter, LetterSequence, MqaStack, SubstitutionRule};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TilingError {
    #[error("{0}")]
    Inflation(#[from] InflationError),
    #[error("tiling invariant violated: {0}")]
    Invariant(String),
    #[error("region of {len} sites is degenerate on a boundary of {boundary} sites")]
    DegenerateRegion { len: usize, boundary: usize },
    #[error("region {start}+{len} is not aligned with inflation blocks; nearest aligned region is {nearest_start}+{nearest_len}")]
    Misaligned {
        start: usize,
        len: usize,
        nearest_start: usize,
        nearest_len: usize,
    },
    #[error("a patch built with 0 steps has no coarser layer")]
    NothingToDeflate,
    #[error("tile {0} is not part of the patch")]
    UnknownTile(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tile {
    pub id: usize,
    pub layer: u32,
    /// Corners, counterclockwise.
    pub vertices: Vec<usize>,
    /// `edges[j]` joins `vertices[j]` and `vertices[j + 1]`.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Edge {
    pub id: usize,
    pub vertices: [usize; 2],
    pub tiles: Vec<usize>,
    pub boundary_position: Option<usize>,
}

impl Edge {
    pub fn other_tile(&self, tile: usize) -> Option<usize> {
        match self.tiles.as_slice() {
            [a, b] if *a == tile => Some(*b),
            [a, b] if *b == tile => Some(*a),
            _ => None,
        }
    }

    pub fn is_boundary(&self) -> bool {
        self.tiles.len() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryVertex {
    pub id: usize,
    pub letter: Letter,
    pub position: usize,
}

/// `len` consecutive boundary positions starting at `start`, cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryInterval {
    pub start: usize,
    pub len: usize,
}

impl BoundaryInterval {
    pub fn new(start: usize, len: usize) -> Self {
        Self { start, len }
    }

    pub fn contains(&self, pos: usize, boundary: usize) -> bool {
        (pos + boundary - self.start % boundary) % boundary < self.len
    }

    pub fn complement(&self, boundary: usize) -> BoundaryInterval {
        BoundaryInterval {
            start: (self.start + self.len) % boundary,
            len: boundary - self.len,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalCut {
    pub cut_edges: usize,
    /// Tiling edges crossed by the cut, from one end of the region to the other.
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionKind {
    Fine,
    Coarse,
    Unchanged,
}

/// Correspondence between a boundary interval of one layer and an interval of
/// another layer of the same inflation stack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionMap {
    pub source: BoundaryInterval,
    pub source_layer: u32,
    pub target: BoundaryInterval,
    pub target_layer: u32,
    pub kind: RegionKind,
}

#[derive(Debug, Clone)]
pub struct TilingGraph {
    n: u32,
    k: u32,
    steps: u32,
    center: usize,
    tiles: Vec<Tile>,
    edges: Vec<Edge>,
    vertex_count: usize,
    boundary: Vec<BoundaryVertex>,
    boundary_edges: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    mqa: MqaStack,
}

/// Shorthand for the `{5,4}` patch.
pub fn build_tiling(steps: u32) -> Result<TilingGraph, TilingError> {
    TilingGraph::build(5, 4, steps)
}

impl TilingGraph {
    pub fn build(n: u32, k: u32, steps: u32) -> Result<Self, TilingError> {
        let rule = SubstitutionRule::for_tiling(n, k)?;
        let nu = n as usize;
        let mut vertex_count = nu;
        let mut tile_vertices: Vec<Vec<usize>> = vec![(0..nu).collect()];
        let mut tile_layers = vec![0u32];
        let mut bverts: Vec<usize> = (0..nu).collect();
        let mut word = LetterSequence::seed(nu);
        let mqa = MqaStack::build(&rule, word.clone(), steps);

        for layer in 1..=steps {
            let len = bverts.len();
            let mut fresh = |count: usize| {
                let ids: Vec<usize> = (vertex_count..vertex_count + count).collect();
                vertex_count += count;
                ids
            };
            // Per old boundary vertex: middles of the edge tile before it,
            // then outward endpoints separated by corner-tile interiors.
            let mut mids = Vec::with_capacity(len);
            let mut outs: Vec<Vec<usize>> = Vec::with_capacity(len);
            let mut interiors: Vec<Vec<Vec<usize>>> = Vec::with_capacity(len);
            let mut new_boundary = Vec::new();
            let mut new_letters = Vec::new();
            for i in 0..len {
                let t = word.letters()[i].boundary_tiles() as u32;
                let out = (k - t - 1) as usize;
                let m = fresh(nu - 4);
                new_boundary.extend(&m);
                new_letters.extend(std::iter::repeat_n(Letter::A, m.len()));
                let mut o = Vec::with_capacity(out);
                let mut inner = Vec::with_capacity(out.saturating_sub(1));
                for c in 0..out {
                    if c > 0 {
                        let ins = fresh(nu - 3);
                        new_boundary.extend(&ins);
                        new_letters.extend(std::iter::repeat_n(Letter::A, ins.len()));
                        inner.push(ins);
                    }
                    let v = fresh(1)[0];
                    new_boundary.push(v);
                    new_letters.push(Letter::B);
                    o.push(v);
                }
                mids.push(m);
                outs.push(o);
                interiors.push(inner);
            }
            for i in 0..len {
                let prev = (i + len - 1) % len;
                let mut edge_tile = vec![bverts[i], bverts[prev], *outs[prev].last().expect("k >= 4")];
                edge_tile.extend(&mids[i]);
                edge_tile.push(outs[i][0]);
                tile_vertices.push(edge_tile);
                tile_layers.push(layer);
                for (c, inner) in interiors[i].iter().enumerate() {
                    let mut corner = vec![bverts[i], outs[i][c]];
                    corner.extend(inner);
                    corner.push(outs[i][c + 1]);
                    tile_vertices.push(corner);
                    tile_layers.push(layer);
                }
            }
            let expected = rule.inflate(&word);
            if new_letters != expected.letters() {
                return Err(TilingError::Invariant(format!(
                    "layer {layer}: boundary vertex types disagree with the inflation rule"
                )));
            }
            bverts = new_boundary;
            word = expected;
        }

        let graph = Self::assemble(n, k, steps, tile_vertices, tile_layers, vertex_count, bverts, mqa)?;
        graph.validate()?;
        Ok(graph)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        n: u32,
        k: u32,
        steps: u32,
        tile_vertices: Vec<Vec<usize>>,
        tile_layers: Vec<u32>,
        vertex_count: usize,
        bverts: Vec<usize>,
        mqa: MqaStack,
    ) -> Result<Self, TilingError> {
        let nu = n as usize;
        let mut edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut tiles = Vec::with_capacity(tile_vertices.len());
        for (id, (vertices, layer)) in tile_vertices.into_iter().zip(tile_layers).enumerate() {
            let mut tile_edges = Vec::with_capacity(nu);
            for j in 0..nu {
                let (x, y) = (vertices[j], vertices[(j + 1) % nu]);
                if directed.insert((x, y), id).is_some() {
                    return Err(TilingError::Invariant(format!(
                        "edge {x}->{y} used with the same orientation twice"
                    )));
                }
                let key = (x.min(y), x.max(y));
                let e = *edge_ids.entry(key).or_insert_with(|| {
                    edges.push(Edge {
                        id: edges.len(),
                        vertices: [x, y],
                        tiles: Vec::new(),
                        boundary_position: None,
                    });
                    edges.len() - 1
                });
                edges[e].tiles.push(id);
                tile_edges.push(e);
            }
            tiles.push(Tile {
                id,
                layer,
                vertices,
                edges: tile_edges,
            });
        }
        let word = mqa.top().clone();
        let len = bverts.len();
        let mut boundary_edges = Vec::with_capacity(len);
        for j in 0..len {
            let (x, y) = (bverts[j], bverts[(j + 1) % len]);
            let e = *edge_ids
                .get(&(x.min(y), x.max(y)))
                .ok_or_else(|| TilingError::Invariant(format!("boundary vertices {x}, {y} are not joined")))?;
            if !directed.contains_key(&(x, y)) || edges[e].tiles.len() != 1 {
                return Err(TilingError::Invariant(format!("edge {e} is not a boundary edge")));
            }
            edges[e].boundary_position = Some(j);
            boundary_edges.push(e);
        }
        let boundary = bverts
            .iter()
            .enumerate()
            .map(|(position, &id)| BoundaryVertex {
                id,
                letter: word.letters()[position],
                position,
            })
            .collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &edges {
            adjacency[e.vertices[0]].push(e.vertices[1]);
            adjacency[e.vertices[1]].push(e.vertices[0]);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        Ok(Self {
            n,
            k,
            steps,
            center: 0,
            tiles,
            edges,
            vertex_count,
            boundary,
            boundary_edges,
            adjacency,
            mqa,
        })
    }

    /// Checks degrees, edge multiplicities, Euler characteristic, boundary
    /// word and per-layer tile counts.
    pub fn validate(&self) -> Result<(), TilingError> {
        let fail = |msg: String| Err(TilingError::Invariant(msg));
        if self.edges.iter().any(|e| e.tiles.is_empty() || e.tiles.len() > 2) {
            return fail("edge with no tile or more than two tiles".into());
        }
        let boundary_edge_count = self.edges.iter().filter(|e| e.is_boundary()).count();
        if boundary_edge_count != self.boundary.len() {
            return fail(format!(
                "{boundary_edge_count} single-tile edges but a boundary of {}",
                self.boundary.len()
            ));
        }
        let mut on_boundary = vec![None; self.vertex_count];
        for b in &self.boundary {
            on_boundary[b.id] = Some(b.letter);
        }
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            let want = match on_boundary[v] {
                None => self.k as usize,
                Some(l) => l.boundary_tiles() + 1,
            };
            if nbrs.len() != want {
                return fail(format!("vertex {v} has degree {} instead of {want}", nbrs.len()));
            }
        }
        let euler = self.vertex_count as i64 - self.edges.len() as i64 + self.tiles.len() as i64 + 1;
        if euler != 2 {
            return fail(format!("V - E + F = {euler}"));
        }
        if self.boundary_word() != *self.mqa.top() {
            return fail("boundary letters differ from the inflation word".into());
        }
        let counts = self.layer_tile_counts();
        for layer in 1..=self.steps as usize {
            let (_, nb) = letter_counts(self.mqa.layer(layer));
            if counts[layer] != nb {
                return fail(format!("layer {layer} has {} tiles but {nb} b letters", counts[layer]));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn polygon_sides(&self) -> usize {
        self.n as usize
    }

    pub fn steps(&self) -> u32 {
        self.steps
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn boundary(&self) -> &[BoundaryVertex] {
        &self.boundary
    }

    /// Number of boundary edges (sites), equal to the number of boundary vertices.
    pub fn boundary_len(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary_edges(&self) -> &[usize] {
        &self.boundary_edges
    }

    pub fn neighbours(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn mqa(&self) -> &MqaStack {
        &self.mqa
    }

    pub fn boundary_word(&self) -> LetterSequence {
        let letters = self.boundary.iter().map(|b| b.letter).collect();
        LetterSequence::new(letters, true, self.steps).expect("boundary is never empty")
    }

    pub fn layer_tile_counts(&self) -> Vec<usize> {
        let top = self.tiles.iter().map(|t| t.layer).max().unwrap_or(0) as usize;
        let mut counts = vec![0; top.max(self.steps as usize) + 1];
        for t in &self.tiles {
            counts[t.layer as usize] += 1;
        }
        counts
    }

    /// The tile owning boundary edge `site`.
    pub fn boundary_tile(&self, site: usize) -> usize {
        self.edges[self.boundary_edges[site]].tiles[0]
    }

    /// Tiling-edge distances from boundary vertex `from` to every boundary vertex.
    pub fn boundary_distances(&self, from: usize) -> Vec<u32> {
        let dist = self.vertex_bfs(self.boundary[from].id).0;
        self.boundary.iter().map(|b| dist[b.id]).collect()
    }

    fn vertex_bfs(&self, source: usize) -> (Vec<u32>, Vec<usize>) {
        let mut dist = vec![u32::MAX; self.vertex_count];
        let mut parent = vec![usize::MAX; self.vertex_count];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    fn edge_between(&self, x: usize, y: usize) -> usize {
        let t = self
            .tiles
            .iter()
            .find(|t| t.vertices.contains(&x) && t.vertices.contains(&y));
        let t = t.expect("adjacent vertices share a tile");
        *t.edges
            .iter()
            .find(|&&e| {
                let [a, b] = self.edges[e].vertices;
                (a == x && b == y) || (a == y && b == x)
            })
            .expect("adjacent vertices share an edge")
    }

    /// Fewest bonds (interior edges) plus legs (boundary edges) whose removal
    /// separates the sites of `region` from the rest: the shortest edge path
    /// between the two boundary vertices that bracket the region.
    pub fn minimal_cut(&self, region: BoundaryInterval) -> Result<MinimalCut, TilingError> {
        let len = self.boundary_len();
        if region.len == 0 || region.len >= len {
            return Err(TilingError::DegenerateRegion {
                len: region.len,
                boundary: len,
            });
        }
        let p = self.boundary[region.start % len].id;
        let q = self.boundary[(region.start + region.len) % len].id;
        let (dist, parent) = self.vertex_bfs(p);
        let mut path = Vec::with_capacity(dist[q] as usize);
        let mut v = q;
        while v != p {
            path.push(self.edge_between(parent[v], v));
            v = parent[v];
        }
        path.reverse();
        Ok(MinimalCut {
            cut_edges: dist[q] as usize,
            path,
        })
    }

    /// Layer in which each vertex first appears: the lowest layer of its tiles.
    pub fn vertex_layers(&self) -> Vec<u32> {
        let mut layer = vec![u32::MAX; self.vertex_count];
        for t in &self.tiles {
            for &v in &t.vertices {
                layer[v] = layer[v].min(t.layer);
            }
        }
        layer
    }

    /// Tile distances from `tile`, counting tiles that share a vertex as adjacent.
    pub fn tile_distances(&self, tile: usize) -> Result<Vec<u32>, TilingError> {
        if tile >= self.tiles.len() {
            return Err(TilingError::UnknownTile(tile));
        }
        let mut at_vertex = vec![Vec::new(); self.vertex_count];
        for t in &self.tiles {
            for &v in &t.vertices {
                at_vertex[v].push(t.id);
            }
        }
        let mut dist = vec![u32::MAX; self.tiles.len()];
        dist[tile] = 0;
        let mut queue = VecDeque::from([tile]);
        while let Some(t) = queue.pop_front() {
            for &v in &self.tiles[t].vertices {
                for &u in &at_vertex[v] {
                    if dist[u] == u32::MAX {
                        dist[u] = dist[t] + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        Ok(dist)
    }

    /// Moves the centre to `new_center`: tile layers become distances from it.
    /// Boundary runs closer to the new centre than `steps` are coarse views of
    /// a `steps`-layer patch around it (target: their ancestors), runs further
    /// away are finer (target: their descendants).
    pub fn recenter(&self, new_center: usize) -> Result<(TilingGraph, Vec<RegionMap>), TilingError> {
        let dist = self.tile_distances(new_center)?;
        let mut moved = self.clone();
        moved.center = new_center;
        for t in &mut moved.tiles {
            t.layer = dist[t.id];
        }
        let len = self.boundary_len();
        let depth: Vec<u32> = (0..len).map(|s| dist[self.boundary_tile(s)]).collect();
        let start = (0..len).find(|&s| depth[s] != depth[(s + len - 1) % len]).unwrap_or(0);
        let mut maps = Vec::new();
        let mut s = 0;
        while s < len {
            let pos = (start + s) % len;
            let d = depth[pos];
            let mut run = 1;
            while s + run < len && depth[(start + s + run) % len] == d {
                run += 1;
            }
            maps.push(self.region_map(BoundaryInterval::new(pos, run), d));
            s += run;
        }
        Ok((moved, maps))
    }

    fn region_map(&self, source: BoundaryInterval, depth: u32) -> RegionMap {
        let steps = self.steps;
        let top = steps as usize;
        let (kind, target, target_layer) = if depth == steps {
            (RegionKind::Unchanged, source, steps)
        } else if depth < steps {
            let levels = (steps - depth) as usize;
            let len = self.mqa.layer(depth as usize).len();
            let first = self.mqa.ancestor(top, source.start, levels);
            let last = self.mqa.ancestor(top, (source.start + source.len - 1) % self.boundary_len(), levels);
            let span = if source.len == self.boundary_len() {
                len
            } else {
                (last + len - first) % len + 1
            };
            (RegionKind::Coarse, BoundaryInterval::new(first, span), depth)
        } else {
            let levels = (depth - steps) as usize;
            let (s, l) = self.mqa.descendant_interval(top, source.start, source.len, levels);
            (RegionKind::Fine, BoundaryInterval::new(s, l), depth)
        };
        RegionMap {
            source,
            source_layer: steps,
            target,
            target_layer,
            kind,
        }
    }

    /// Deflates a block-aligned boundary region to its preimage one layer down.
    pub fn deflate_region(&self, region: BoundaryInterval) -> Result<RegionMap, TilingError> {
        if self.steps == 0 {
            return Err(TilingError::NothingToDeflate);
        }
        let len = self.boundary_len();
        if region.len == 0 || region.len > len {
            return Err(TilingError::DegenerateRegion {
                len: region.len,
                boundary: len,
            });
        }
        let top = self.steps as usize;
        let prev_len = self.mqa.layer(top - 1).len();
        if region.len == len {
            if self.mqa.parent(top, region.start % len).offset != 0 {
                let first = self.mqa.parent(top, region.start % len);
                let (s, _) = self.mqa.image_range(top - 1, first.parent);
                return Err(TilingError::Misaligned {
                    start: region.start,
                    len: region.len,
                    nearest_start: s,
                    nearest_len: len,
                });
            }
            return Ok(RegionMap {
                source: region,
                source_layer: self.steps,
                target: BoundaryInterval::new(self.mqa.parent(top, region.start % len).parent, prev_len),
                target_layer: self.steps - 1,
                kind: RegionKind::Coarse,
            });
        }
        let first = self.mqa.parent(top, region.start % len);
        let last_pos = (region.start + region.len - 1) % len;
        let last = self.mqa.parent(top, last_pos);
        let (last_start, last_len) = self.mqa.image_range(top - 1, last.parent);
        let aligned_end = last.offset + 1 == last_len;
        if first.offset != 0 || !aligned_end {
            let nearest_start = (region.start + len - first.offset) % len;
            let nearest_end = last_start + last_len;
            let nearest_len = (nearest_end + len - nearest_start - 1) % len + 1;
            return Err(TilingError::Misaligned {
                start: region.start,
                len: region.len,
                nearest_start,
                nearest_len,
            });
        }
        let span = (last.parent + prev_len - first.parent) % prev_len + 1;
        Ok(RegionMap {
            source: region,
            source_layer: self.steps,
            target: BoundaryInterval::new(first.parent, span),
            target_layer: self.steps - 1,
            kind: RegionKind::Coarse,
        })
    }

    /// Whether turning the central tile by `1/fold` of a turn extends to an
    /// automorphism of the patch that shifts the boundary by `L/fold`.
    pub fn is_rotation_symmetric(&self, fold: usize) -> bool {
        let n = self.polygon_sides();
        let len = self.boundary_len();
        if fold == 0 || n % fold != 0 || len % fold != 0 {
            return false;
        }
        let turn = n / fold;
        let mut vmap = vec![usize::MAX; self.vertex_count];
        let mut tmap: Vec<Option<(usize, usize)>> = vec![None; self.tiles.len()];
        let c = self.center;
        tmap[c] = Some((c, turn));
        let mut queue = VecDeque::from([c]);
        while let Some(t) = queue.pop_front() {
            let (image, shift) = tmap[t].expect("queued tiles are mapped");
            let (src, dst) = (&self.tiles[t], &self.tiles[image]);
            for j in 0..n {
                let v = src.vertices[j];
                let w = dst.vertices[(j + shift) % n];
                if vmap[v] == usize::MAX {
                    vmap[v] = w;
                } else if vmap[v] != w {
                    return false;
                }
            }
            for j in 0..n {
                let nb = self.edges[src.edges[j]].other_tile(t);
                let nb_image = self.edges[dst.edges[(j + shift) % n]].other_tile(image);
                match (nb, nb_image) {
                    (None, None) => {}
                    (Some(a), Some(b)) => {
                        let i = self.tiles[a].edges.iter().position(|&e| e == src.edges[j]).expect("shared");
                        let i2 = self.tiles[b]
                            .edges
                            .iter()
                            .position(|&e| e == dst.edges[(j + shift) % n])
                            .expect("shared");
                        let s = (i2 + n - i) % n;
                        match tmap[a] {
                            None => {
                                tmap[a] = Some((b, s));
                                queue.push_back(a);
                            }
                            Some(prev) if prev != (b, s) => return false,
                            Some(_) => {}
                        }
                    }
                    _ => return false,
                }
            }
        }
        let mut hit = vec![false; self.vertex_count];
        for &w in &vmap {
            if w == usize::MAX || hit[w] {
                return false;
            }
            hit[w] = true;
        }
        let step = len / fold;
        self.boundary
            .iter()
            .all(|b| vmap[b.id] == self.boundary[(b.position + step) % len].id)
    }

    pub fn to_json(&self) -> TilingJson<'_> {
        TilingJson {
            schema: 1,
            n: self.n,
            k: self.k,
            steps: self.steps,
            center: self.center,
            vertex_count: self.vertex_count,
            boundary_word: self.boundary_word().to_string(),
            boundary_vertices: self.boundary.iter().map(|b| b.id).collect(),
            tiles: &self.tiles,
            edges: &self.edges,
        }
    }
}

/// Stable JSON layout of a [`TilingGraph`].
#[derive(Debug, Serialize)]
pub struct TilingJson<'a> {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub steps: u32,
    pub center: usize,
    pub vertex_count: usize,
    pub boundary_word: String,
    pub boundary_vertices: Vec<usize>,
    pub tiles: &'a [Tile],
    pub edges: &'a [Edge],
}
