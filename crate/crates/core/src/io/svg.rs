//! Hand-written SVG figures: the tiled Poincaré disk with dimers, and simple
//! line/bar/heat-map plots for the analysis outputs.

use std::fmt::Write;

use crate::dimers::{CorrelationHistogram, DimerState};
use crate::entanglement::{chord, CentralChargeFit, EntropyProfile};
use crate::geometry::{DiskPoint, Geodesic, MobiusTransform};
use crate::tiling::TilingGraph;

const SIZE: f64 = 1000.0;
const RADIUS: f64 = 480.0;
const LAYER_FILLS: [&str; 7] = ["#f4d35e", "#9bc1bc", "#e6ebe0", "#ed6a5a", "#5ca4a9", "#f0b67f", "#c9ada7"];

fn screen(z: DiskPoint) -> (f64, f64) {
    (SIZE / 2.0 + RADIUS * z.re(), SIZE / 2.0 - RADIUS * z.im())
}

/// Path command drawing the geodesic from `a` to `b` (the pen is at `a`).
fn arc_to(a: DiskPoint, b: DiskPoint) -> String {
    let (bx, by) = screen(b);
    match Geodesic::through(a, b) {
        Ok(Geodesic::Circle { center, radius }) => {
            let (ax, ay) = screen(a);
            let cx = SIZE / 2.0 + RADIUS * center.re;
            let cy = SIZE / 2.0 - RADIUS * center.im;
            let cross = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
            let sweep = u8::from(cross > 0.0);
            format!("A{:.3} {:.3} 0 0 {sweep} {bx:.3} {by:.3}", RADIUS * radius, RADIUS * radius)
        }
        _ => format!("L{bx:.3} {by:.3}"),
    }
}

/// The point a fraction `t` of the way from `a` to `b` along their geodesic.
pub fn geodesic_point(a: DiskPoint, b: DiskPoint, t: f64) -> DiskPoint {
    let to_a = MobiusTransform::translation(a);
    let b0 = to_a.inverse().apply(b);
    let r = b0.norm();
    if r == 0.0 {
        return a;
    }
    let rt = (t * r.atanh()).tanh();
    let p = DiskPoint::new(b0.re() * rt / r, b0.im() * rt / r).expect("shrunk point is inside");
    to_a.apply(p)
}

fn header(out: &mut String, width: f64, height: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
}

/// The patch in the disk, tiles shaded by layer. With a state, each dimer is
/// a chord between the points one and two thirds along its boundary edges.
pub fn render_tiling(tiling: &TilingGraph, coords: &[DiskPoint], state: Option<&DimerState>) -> String {
    let mut out = String::new();
    header(&mut out, SIZE, SIZE);
    writeln!(
        out,
        r#"<metadata>tiles={} edges={} vertices={} boundary={}</metadata>"#,
        tiling.tiles().len(),
        tiling.edges().len(),
        tiling.vertex_count(),
        tiling.boundary_len()
    )
    .unwrap();
    writeln!(
        out,
        r##"<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#333" stroke-width="1.5"/>"##,
        c = SIZE / 2.0
    )
    .unwrap();
    writeln!(out, r##"<g id="tiles" stroke="#222" stroke-width="0.6">"##).unwrap();
    for tile in tiling.tiles() {
        let pts: Vec<DiskPoint> = tile.vertices.iter().map(|&v| coords[v]).collect();
        let (x0, y0) = screen(pts[0]);
        let mut d = format!("M{x0:.3} {y0:.3}");
        for j in 0..pts.len() {
            d.push(' ');
            d.push_str(&arc_to(pts[j], pts[(j + 1) % pts.len()]));
        }
        d.push('Z');
        let fill = LAYER_FILLS[tile.layer as usize % LAYER_FILLS.len()];
        writeln!(out, r#"<path class="tile" data-id="{}" d="{d}" fill="{fill}"/>"#, tile.id).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if let Some(state) = state {
        let mode_point = |m: usize| {
            let site = m / 2;
            let a = coords[tiling.boundary()[site].id];
            let b = coords[tiling.boundary()[(site + 1) % tiling.boundary_len()].id];
            screen(geodesic_point(a, b, if m % 2 == 0 { 1.0 / 3.0 } else { 2.0 / 3.0 }))
        };
        writeln!(out, r##"<g id="dimers" stroke="#1d3557" stroke-width="0.8">"##).unwrap();
        for d in state.dimers() {
            let (x1, y1) = mode_point(d.j);
            let (x2, y2) = mode_point(d.k);
            writeln!(
                out,
                r#"<line class="dimer" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}

struct Frame {
    left: f64,
    top: f64,
    width: f64,
    height: f64,
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.left + (x - self.x.0) / (self.x.1 - self.x.0) * self.width
    }

    fn py(&self, y: f64) -> f64 {
        self.top + self.height - (y - self.y.0) / (self.y.1 - self.y.0) * self.height
    }

    fn axes(&self, out: &mut String, xlabel: &str, ylabel: &str) {
        writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#333"/>"##,
            self.left, self.top, self.width, self.height
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{xlabel}</text>"#,
            self.left + self.width / 2.0,
            self.top + self.height + 36.0
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 {} {})">{ylabel}</text>"#,
            self.left - 40.0,
            self.top + self.height / 2.0,
            self.left - 40.0,
            self.top + self.height / 2.0
        )
        .unwrap();
        for (v, anchor_x) in [(self.x.0, self.left), (self.x.1, self.left + self.width)] {
            writeln!(
                out,
                r#"<text x="{anchor_x}" y="{}" text-anchor="middle" font-size="11">{}</text>"#,
                self.top + self.height + 16.0,
                short(v)
            )
            .unwrap();
        }
        for (v, anchor_y) in [(self.y.0, self.top + self.height), (self.y.1, self.top)] {
            writeln!(
                out,
                r#"<text x="{}" y="{anchor_y}" text-anchor="end" font-size="11">{}</text>"#,
                self.left - 6.0,
                short(v)
            )
            .unwrap();
        }
    }
}

fn short(v: f64) -> String {
    if v.abs() >= 100.0 || v == v.round() {
        format!("{v:.0}")
    } else {
        format!("{v:.2}")
    }
}

fn polyline(points: impl Iterator<Item = (f64, f64)>) -> String {
    points
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Mean entropy against `ln chord(l)` with the fitted line.
pub fn render_entropy(profile: &EntropyProfile, fit: Option<&CentralChargeFit>) -> String {
    let l = profile.system_size;
    let xs: Vec<(f64, f64)> = (1..l).map(|x| (chord(x, l).ln(), profile.mean[x])).collect();
    let xmax = xs.iter().map(|p| p.0).fold(f64::MIN, f64::max).max(1e-9);
    let ymax = xs.iter().map(|p| p.1).fold(0.0, f64::max).max(1e-9);
    let f = Frame {
        left: 70.0,
        top: 20.0,
        width: 560.0,
        height: 380.0,
        x: (0.0, xmax),
        y: (0.0, ymax * 1.05),
    };
    let mut out = String::new();
    header(&mut out, 660.0, 460.0);
    f.axes(&mut out, "ln[(L/π) sin(πℓ/L)]", "mean S (nats)");
    writeln!(
        out,
        r##"<polyline class="profile" fill="none" stroke="#1d3557" stroke-width="1" points="{}"/>"##,
        polyline(xs.iter().map(|&(x, y)| (f.px(x), f.py(y))))
    )
    .unwrap();
    if let Some(fit) = fit {
        let line = |x: f64| fit.c / 3.0 * x + fit.intercept;
        writeln!(
            out,
            r##"<line class="fit" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#e63946" stroke-dasharray="6 4"/>"##,
            f.px(0.0),
            f.py(line(0.0).max(0.0)),
            f.px(xmax),
            f.py(line(xmax))
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="90" y="45" font-size="14">c = {:.4}</text>"#,
            fit.c
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Dimer counts against distance on log-log axes.
pub fn render_histogram(hist: &CorrelationHistogram) -> String {
    let pts: Vec<(f64, f64)> = hist
        .counts
        .iter()
        .filter(|(&d, &c)| d > 0 && c > 0)
        .map(|(&d, &c)| ((d as f64).log10(), (c as f64).log10()))
        .collect();
    let xmax = pts.iter().map(|p| p.0).fold(0.0, f64::max).max(1.0);
    let ymax = pts.iter().map(|p| p.1).fold(0.0, f64::max).max(1.0);
    let f = Frame {
        left: 70.0,
        top: 20.0,
        width: 560.0,
        height: 380.0,
        x: (0.0, xmax),
        y: (0.0, ymax),
    };
    let mut out = String::new();
    header(&mut out, 660.0, 460.0);
    f.axes(&mut out, "log10 d", "log10 count");
    for (x, y) in pts {
        writeln!(
            out,
            r##"<circle class="bin" cx="{:.2}" cy="{:.2}" r="3" fill="#1d3557"/>"##,
            f.px(x),
            f.py(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Rows are window sizes, columns are offsets; darker means higher fidelity.
pub fn render_fidelity(grid: &[Vec<f64>], ells: &[usize]) -> String {
    let cols = grid.first().map_or(1, Vec::len).max(1);
    let cell_w = 900.0 / cols as f64;
    let cell_h = 60.0;
    let mut out = String::new();
    header(&mut out, 1000.0, 80.0 + cell_h * grid.len() as f64);
    for (r, row) in grid.iter().enumerate() {
        let y = 20.0 + r as f64 * cell_h;
        writeln!(
            out,
            r#"<text x="85" y="{:.1}" text-anchor="end" font-size="12">ℓ={}</text>"#,
            y + cell_h / 2.0,
            ells[r]
        )
        .unwrap();
        for (c, &v) in row.iter().enumerate() {
            let shade = (255.0 * (1.0 - v.clamp(0.0, 1.0))).round() as u8;
            writeln!(
                out,
                r#"<rect x="{:.3}" y="{y:.1}" width="{:.3}" height="{cell_h}" fill="rgb({shade},{shade},{shade})"/>"#,
                90.0 + c as f64 * cell_w,
                cell_w
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        r#"<text x="540" y="{:.1}" text-anchor="middle" font-size="12">offset d (sites)</text>"#,
        40.0 + cell_h * grid.len() as f64
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
