//! Poincaré-disk numerics.
//!
//! Points live strictly inside the unit disk. Orientation-preserving
//! isometries are stored as SU(1,1) matrices `[[u, v], [conj(v), conj(u)]]`
//! with `|u|^2 - |v|^2 = 1`; the shift/rotation pair `(w, theta)` acting as
//! `z -> e^{i theta} (w + z) / (1 + conj(w) z)` is a view onto that matrix.
//! All lengths are measured in units of the curvature radius `alpha` unless a
//! function takes `alpha` explicitly.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tiling::TilingGraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("point ({re}, {im}) is not inside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },
    #[error("invalid tiling parameters: {0}")]
    InvalidParams(String),
    #[error("{{{n},{k}}} is not hyperbolic: nk - 2(n+k) = {f}")]
    NotHyperbolic { n: u32, k: u32, f: i64 },
    #[error("cannot draw a geodesic through coincident points")]
    DegenerateGeodesic,
    #[error("point images are not related by a disk isometry (defect {0:e})")]
    NotDiskIsometry(f64),
    #[error("vertices {a} and {b} are only {distance:e} apart in the disk metric")]
    CoordinateDegeneracy { a: usize, b: usize, distance: f64 },
    #[error("vertex {vertex} reached twice at positions {distance:e} apart")]
    InconsistentVertex { vertex: usize, distance: f64 },
    #[error("tile {0} has no previously placed neighbour")]
    DisconnectedTile(usize),
}

/// A point `z = re + i im` with `|z| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    re: f64,
    im: f64,
}

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Result<Self, GeometryError> {
        if re.is_finite() && im.is_finite() && re * re + im * im < 1.0 {
            Ok(Self { re, im })
        } else {
            Err(GeometryError::OutsideDisk { re, im })
        }
    }

    pub fn from_complex(z: Complex64) -> Result<Self, GeometryError> {
        Self::new(z.re, z.im)
    }

    pub fn from_polar(radius: f64, angle: f64) -> Result<Self, GeometryError> {
        Self::from_complex(Complex64::from_polar(radius, angle))
    }

    /// Images of interior points under isometries stay inside the disk; this
    /// only pulls back points that rounding pushed onto the unit circle.
    pub(crate) fn from_isometry_image(z: Complex64) -> Self {
        let r = z.norm();
        if r < 1.0 {
            Self { re: z.re, im: z.im }
        } else {
            let s = (1.0 - f64::EPSILON) / r;
            Self { re: z.re * s, im: z.im * s }
        }
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn norm(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }
}

/// Orientation-preserving isometry of the Poincaré disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusTransform {
    u: Complex64,
    v: Complex64,
}

impl MobiusTransform {
    pub fn identity() -> Self {
        Self {
            u: Complex64::new(1.0, 0.0),
            v: Complex64::new(0.0, 0.0),
        }
    }

    /// `z -> e^{i theta} (w + z) / (1 + conj(w) z)`.
    pub fn new(w: DiskPoint, theta: f64) -> Self {
        let w = w.to_complex();
        let half = Complex64::from_polar(1.0, theta / 2.0);
        let s = 1.0 / (1.0 - w.norm_sqr()).sqrt();
        Self {
            u: half * s,
            v: half * w * s,
        }
    }

    pub fn rotation(theta: f64) -> Self {
        Self::new(DiskPoint::ORIGIN, theta)
    }

    /// Moves the origin to `w` without rotating.
    pub fn translation(w: DiskPoint) -> Self {
        Self::new(w, 0.0)
    }

    /// The shift target `w` of the `(w, theta)` view.
    pub fn shift(&self) -> DiskPoint {
        DiskPoint::from_isometry_image(self.v / self.u)
    }

    /// The rotation angle `theta` of the `(w, theta)` view, in `[0, 2 pi)`.
    pub fn angle(&self) -> f64 {
        (2.0 * self.u.arg()).rem_euclid(TAU)
    }

    pub fn matrix(&self) -> [Complex64; 4] {
        [self.u, self.v, self.v.conj(), self.u.conj()]
    }

    pub fn apply(&self, z: DiskPoint) -> DiskPoint {
        let z = z.to_complex();
        DiskPoint::from_isometry_image((self.u * z + self.v) / (self.v.conj() * z + self.u.conj()))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MobiusTransform) -> MobiusTransform {
        let u = self.u * other.u + self.v * other.v.conj();
        let v = self.u * other.v + self.v * other.u.conj();
        Self::normalized(u, v)
    }

    pub fn inverse(&self) -> MobiusTransform {
        Self {
            u: self.u.conj(),
            v: -self.v,
        }
    }

    fn normalized(u: Complex64, v: Complex64) -> Self {
        let det = u.norm_sqr() - v.norm_sqr();
        let s = 1.0 / det.sqrt();
        Self { u: u * s, v: v * s }
    }

    /// Projects a general `PGL(2,C)` matrix onto SU(1,1), failing when the
    /// matrix does not preserve the disk.
    pub fn from_matrix(m: [Complex64; 4]) -> Result<Self, GeometryError> {
        let [a, b, c, d] = m;
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.norm().is_finite() {
            return Err(GeometryError::NotDiskIsometry(f64::INFINITY));
        }
        let k = Complex64::new(1.0, 0.0) / det.sqrt();
        let (mut a, mut b, mut c, mut d) = (a * k, b * k, c * k, d * k);
        // det = 1 fixes the matrix up to sign; the square-root branch can
        // still leave a factor of i, which shows up as d = -conj(a).
        if (d + a.conj()).norm() < (d - a.conj()).norm() {
            let i = Complex64::new(0.0, 1.0);
            a *= i;
            b *= i;
            c *= i;
            d *= i;
        }
        let scale = a.norm().max(b.norm()).max(1.0);
        let defect = ((d - a.conj()).norm() + (c - b.conj()).norm()) / scale;
        if defect > 1e-8 || a.norm_sqr() <= b.norm_sqr() {
            return Err(GeometryError::NotDiskIsometry(defect));
        }
        Ok(Self::normalized(a, b))
    }

    /// The unique disk isometry sending each `src[i]` to `dst[i]`.
    pub fn fit(src: [DiskPoint; 3], dst: [DiskPoint; 3]) -> Result<Self, GeometryError> {
        let to_standard = |p: [DiskPoint; 3]| {
            let [z1, z2, z3] = p.map(DiskPoint::to_complex);
            // z1 -> 0, z2 -> 1, z3 -> infinity
            [z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)]
        };
        let a = to_standard(src);
        let [ba, bb, bc, bd] = to_standard(dst);
        let b_inv = [bd, -bb, -bc, ba];
        from_product(b_inv, a)
    }
}

fn from_product(x: [Complex64; 4], y: [Complex64; 4]) -> Result<MobiusTransform, GeometryError> {
    MobiusTransform::from_matrix(mat_mul(x, y))
}

fn mat_mul(x: [Complex64; 4], y: [Complex64; 4]) -> [Complex64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

pub fn mobius_apply(t: &MobiusTransform, z: DiskPoint) -> DiskPoint {
    t.apply(z)
}

/// Distance induced by the disk metric, in the same units as `alpha`.
pub fn hyperbolic_distance(z1: DiskPoint, z2: DiskPoint, alpha: f64) -> f64 {
    let a = z1.to_complex();
    let b = z2.to_complex();
    let num = (a - b).norm();
    let den = (Complex64::new(1.0, 0.0) - a.conj() * b).norm();
    2.0 * alpha * (num / den).min(1.0).atanh()
}

/// Sign of the signed area of the triangle `(a, b, c)`: positive when the
/// vertices run counterclockwise.
pub fn orientation(a: DiskPoint, b: DiskPoint, c: DiskPoint) -> f64 {
    let ab = b.to_complex() - a.to_complex();
    let ac = c.to_complex() - a.to_complex();
    (ab.conj() * ac).im.signum()
}

/// A complete geodesic of the disk: a diameter, or a circle arc meeting the
/// unit circle at right angles (`|center|^2 = 1 + radius^2`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    Diameter { angle: f64 },
    Circle { center: Complex64, radius: f64 },
}

impl Geodesic {
    pub fn through(z1: DiskPoint, z2: DiskPoint) -> Result<Self, GeometryError> {
        let a = z1.to_complex();
        let b = z2.to_complex();
        if (a - b).norm() < 1e-15 {
            return Err(GeometryError::DegenerateGeodesic);
        }
        // The centre c solves Re(c conj(z)) = (1 + |z|^2) / 2 for both points.
        let det = a.re * b.im - a.im * b.re;
        if det.abs() <= 1e-14 * (a.norm() * b.norm()).max(1e-300) || det.abs() < 1e-300 {
            let dir = if a.norm() > b.norm() { a } else { b - a };
            return Ok(Geodesic::Diameter {
                angle: dir.arg().rem_euclid(PI),
            });
        }
        let ra = (1.0 + a.norm_sqr()) / 2.0;
        let rb = (1.0 + b.norm_sqr()) / 2.0;
        let cx = (ra * b.im - rb * a.im) / det;
        let cy = (rb * a.re - ra * b.re) / det;
        let center = Complex64::new(cx, cy);
        Ok(Geodesic::Circle {
            center,
            radius: (center.norm_sqr() - 1.0).sqrt(),
        })
    }

    pub fn reflect(&self, z: DiskPoint) -> DiskPoint {
        let z = z.to_complex();
        let image = match *self {
            Geodesic::Diameter { angle } => Complex64::from_polar(1.0, 2.0 * angle) * z.conj(),
            Geodesic::Circle { center, radius } => center + radius * radius / (z - center).conj(),
        };
        DiskPoint::from_isometry_image(image)
    }

    /// Distance (Euclidean) of `z` from the geodesic's supporting line or circle.
    pub fn offset(&self, z: DiskPoint) -> f64 {
        let z = z.to_complex();
        match *self {
            Geodesic::Diameter { angle } => (Complex64::from_polar(1.0, -angle) * z).im.abs(),
            Geodesic::Circle { center, radius } => ((z - center).norm() - radius).abs(),
        }
    }

    /// `| |center|^2 - radius^2 - 1 |`, zero for a diameter.
    pub fn orthogonality_defect(&self) -> f64 {
        match *self {
            Geodesic::Diameter { .. } => 0.0,
            Geodesic::Circle { center, radius } => (center.norm_sqr() - radius * radius - 1.0).abs(),
        }
    }

    /// `M` such that reflecting is `z -> M(conj z)`.
    fn anti_matrix(&self) -> [Complex64; 4] {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Geodesic::Diameter { angle } => [
                Complex64::from_polar(1.0, angle),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::from_polar(1.0, -angle),
            ],
            Geodesic::Circle { center, .. } => [center, -one, one, -center.conj()],
        }
    }
}

pub fn reflect(g: &Geodesic, z: DiskPoint) -> DiskPoint {
    g.reflect(z)
}

/// Reflection in `first` followed by reflection in `second`, as a single
/// orientation-preserving isometry.
pub fn compose_reflections(first: &Geodesic, second: &Geodesic) -> Result<MobiusTransform, GeometryError> {
    let m1 = first.anti_matrix().map(|c| c.conj());
    from_product(second.anti_matrix(), m1)
}

/// Schläfli parameters of a regular tiling plus the curvature radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TilingParams {
    pub n: u32,
    pub k: u32,
    pub alpha: f64,
}

impl TilingParams {
    pub fn new(n: u32, k: u32) -> Result<Self, GeometryError> {
        Self::with_alpha(n, k, 1.0)
    }

    pub fn with_alpha(n: u32, k: u32, alpha: f64) -> Result<Self, GeometryError> {
        if n < 3 || k < 3 {
            return Err(GeometryError::InvalidParams(format!(
                "{{{n},{k}}}: need n >= 3 and k >= 3"
            )));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(GeometryError::InvalidParams(format!("alpha = {alpha}")));
        }
        Ok(Self { n, k, alpha })
    }

    pub fn pentagon() -> Self {
        Self { n: 5, k: 4, alpha: 1.0 }
    }

    /// `f(n,k) = nk - 2(n+k)`: positive for hyperbolic, zero for flat tilings.
    pub fn f(&self) -> i64 {
        let (n, k) = (self.n as i64, self.k as i64);
        n * k - 2 * (n + k)
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.f() > 0
    }

    fn require_hyperbolic(&self) -> Result<(), GeometryError> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(GeometryError::NotHyperbolic {
                n: self.n,
                k: self.k,
                f: self.f(),
            })
        }
    }
}

/// Edge length `s / alpha = 2 arcosh(cos(pi/n) / sin(pi/k))`.
pub fn edge_length(p: &TilingParams) -> Result<f64, GeometryError> {
    p.require_hyperbolic()?;
    let x = (PI / p.n as f64).cos() / (PI / p.k as f64).sin();
    Ok(2.0 * x.acosh())
}

/// Leading large-k form `2 log((2k/pi) cos(pi/n))` of [`edge_length`].
pub fn edge_length_large_k(p: &TilingParams) -> f64 {
    2.0 * (2.0 * p.k as f64 / PI * (PI / p.n as f64).cos()).ln()
}

/// Hyperbolic distance from a tile centre to its corners, from the right
/// triangle with angles `pi/n`, `pi/k`, `pi/2`.
pub fn circumradius(p: &TilingParams) -> Result<f64, GeometryError> {
    p.require_hyperbolic()?;
    let cot = |x: f64| 1.0 / x.tan();
    Ok((cot(PI / p.n as f64) * cot(PI / p.k as f64)).acosh())
}

/// Corners of the central tile, counterclockwise, the first at angle `pi/2`.
pub fn central_tile(p: &TilingParams) -> Result<Vec<DiskPoint>, GeometryError> {
    let r = (circumradius(p)? / 2.0).tanh();
    (0..p.n)
        .map(|j| DiskPoint::from_polar(r, PI / 2.0 + TAU * j as f64 / p.n as f64))
        .collect()
}

/// A disk isometry `z -> (a w + b) / (c w + d)` with `w = z` or, for
/// orientation-reversing maps, `w = conj(z)`.
#[derive(Debug, Clone, Copy)]
struct Isometry {
    m: [Complex64; 4],
    flip: bool,
}

impl Isometry {
    const IDENTITY: Self = Self {
        m: [Complex64::ONE, Complex64::ZERO, Complex64::ZERO, Complex64::ONE],
        flip: false,
    };

    /// Reflection across the circle (or diameter) through `a` and `b`.
    fn mirror(a: DiskPoint, b: DiskPoint) -> Result<Self, GeometryError> {
        let m = match Geodesic::through(a, b)? {
            Geodesic::Diameter { angle } => {
                let e = Complex64::from_polar(1.0, angle);
                [e, Complex64::ZERO, Complex64::ZERO, e.conj()]
            }
            Geodesic::Circle { center, .. } => [center, -Complex64::ONE, Complex64::ONE, -center.conj()],
        };
        Ok(Self { m, flip: true }.normalized())
    }

    fn normalized(self) -> Self {
        let [a, b, c, d] = self.m;
        let s = (a * d - b * c).norm().sqrt();
        Self {
            m: [a / s, b / s, c / s, d / s],
            flip: self.flip,
        }
    }

    /// `self` after `other`.
    fn then(self, other: &Self) -> Self {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = if self.flip {
            other.m.map(|x| x.conj())
        } else {
            other.m
        };
        Self {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
            flip: self.flip != other.flip,
        }
        .normalized()
    }

    fn apply(&self, z: DiskPoint) -> DiskPoint {
        let w = if self.flip { z.to_complex().conj() } else { z.to_complex() };
        let [a, b, c, d] = self.m;
        DiskPoint::from_isometry_image((a * w + b) / (c * w + d))
    }
}

/// Places every vertex of `tiling` in the disk. The central tile is centred
/// on the origin; every other tile is the image of the central one under a
/// word in the central tile's edge reflections, built up breadth-first over
/// shared edges. Vertices reached from several tiles must agree to 1e-9.
pub fn vertex_coordinates(p: &TilingParams, tiling: &TilingGraph) -> Result<Vec<DiskPoint>, GeometryError> {
    let n = p.n as usize;
    if tiling.polygon_sides() != n {
        return Err(GeometryError::InvalidParams(format!(
            "tiling has {}-gons, parameters say {n}",
            tiling.polygon_sides()
        )));
    }
    let corners = central_tile(p)?;
    let mirrors = (0..n)
        .map(|q| Isometry::mirror(corners[q], corners[(q + 1) % n]))
        .collect::<Result<Vec<_>, _>>()?;

    let mut coords: Vec<Option<DiskPoint>> = vec![None; tiling.vertex_count()];
    // For each placed tile t: g maps the central tile onto t, and
    // t.vertices[m] = g(corners[corner[m]]).
    let mut frame: Vec<Option<(Isometry, Vec<usize>)>> = vec![None; tiling.tiles().len()];
    let centre = &tiling.tiles()[tiling.center()];
    for (v, &z) in centre.vertices.iter().zip(&corners) {
        coords[*v] = Some(z);
    }
    frame[tiling.center()] = Some((Isometry::IDENTITY, (0..n).collect()));

    let mut queue = std::collections::VecDeque::from([tiling.center()]);
    while let Some(t) = queue.pop_front() {
        let tile = &tiling.tiles()[t];
        let (g, corner) = frame[t].clone().expect("queued tiles are placed");
        for (j, &e) in tile.edges.iter().enumerate() {
            let Some(nb) = tiling.edges()[e].other_tile(t) else {
                continue;
            };
            if frame[nb].is_some() {
                continue;
            }
            let (c0, c1) = (corner[j], corner[(j + 1) % n]);
            let q = if (c0 + 1) % n == c1 {
                c0
            } else if (c1 + 1) % n == c0 {
                c1
            } else {
                return Err(GeometryError::InvalidParams(format!("tile {t} edge {j} is not a polygon side")));
            };
            let h = g.then(&mirrors[q]);
            let neighbour = &tiling.tiles()[nb];
            let i = neighbour
                .edges
                .iter()
                .position(|&x| x == e)
                .expect("shared edge appears in both tiles");
            // neighbour.vertices[i + m] is the mirror image of tile.vertices[j + 1 - m]
            let mut nb_corner = vec![0; n];
            for m in 0..n {
                let c = corner[(j + 1 + n - m % n) % n];
                nb_corner[(i + m) % n] = c;
                let dst = neighbour.vertices[(i + m) % n];
                let z = h.apply(corners[c]);
                match coords[dst] {
                    Some(prev) => {
                        let d = hyperbolic_distance(prev, z, 1.0);
                        if d > 1e-9 {
                            return Err(GeometryError::InconsistentVertex {
                                vertex: dst,
                                distance: d,
                            });
                        }
                    }
                    None => coords[dst] = Some(z),
                }
            }
            frame[nb] = Some((h, nb_corner));
            queue.push_back(nb);
        }
    }
    if let Some(t) = frame.iter().position(Option::is_none) {
        return Err(GeometryError::DisconnectedTile(t));
    }
    let coords: Vec<DiskPoint> = coords
        .into_iter()
        .map(|c| c.expect("every vertex belongs to a placed tile"))
        .collect();
    check_separation(&coords, 1e-9)?;
    Ok(coords)
}

/// Fails if two distinct points are closer than `min_distance` in the disk metric.
pub fn check_separation(points: &[DiskPoint], min_distance: f64) -> Result<(), GeometryError> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].re().total_cmp(&points[b].re()));
    // Euclidean gaps are never larger than hyperbolic ones (the metric
    // factor is >= 2), so a sweep in `re` with half the window is enough.
    let window = min_distance / 2.0;
    for (pos, &a) in order.iter().enumerate() {
        for &b in &order[pos + 1..] {
            if points[b].re() - points[a].re() > window {
                break;
            }
            let d = hyperbolic_distance(points[a], points[b], 1.0);
            if d < min_distance {
                return Err(GeometryError::CoordinateDegeneracy {
                    a: a.min(b),
                    b: a.max(b),
                    distance: d,
                });
            }
        }
    }
    Ok(())
}
