//! Lorenz-curve plots: SVG with a fixed 600x600 canvas, or an ASCII grid.
//!
//! Output depends only on the curves and labels, so identical inputs give
//! identical bytes.

use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotStyle {
    Svg,
    Ascii,
}

/// A labelled curve through `(0, 0)` and its Lorenz points.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub label: String,
    /// Points `(p_i, q_i)` for `i = 1..=n`; the origin is added when drawing.
    pub points: Vec<(f64, f64)>,
}

impl Curve {
    fn with_origin(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        std::iter::once((0.0, 0.0)).chain(self.points.iter().copied())
    }

    fn on_diagonal(&self) -> bool {
        self.points.iter().all(|(p, q)| (p - q).abs() <= 1e-12)
    }

    /// Linear interpolation of the curve at population share `p`.
    fn at(&self, p: f64) -> f64 {
        let mut prev = (0.0, 0.0);
        for (x, y) in self.points.iter().copied() {
            if p <= x {
                let t = if x > prev.0 {
                    (p - prev.0) / (x - prev.0)
                } else {
                    1.0
                };
                return prev.1 + t * (y - prev.1);
            }
            prev = (x, y);
        }
        prev.1
    }
}

pub const CANVAS: f64 = 600.0;
pub const PLOT_LEFT: f64 = 70.0;
pub const PLOT_TOP: f64 = 30.0;
pub const PLOT_SIZE: f64 = 500.0;

pub const X_LABEL: &str = "cumulative share of population";
pub const Y_LABEL: &str = "cumulative share of resources";

/// Stroke colour and dash pattern for the k-th curve.
const PALETTE: [(&str, Option<&str>); 6] = [
    ("#d62728", None),
    ("#1f77b4", None),
    ("#9e9e9e", Some("8 5")),
    ("#2ca02c", None),
    ("#9467bd", None),
    ("#8c564b", None),
];

/// Data coordinates to canvas coordinates.
pub fn to_canvas(p: f64, q: f64) -> (f64, f64) {
    (PLOT_LEFT + PLOT_SIZE * p, PLOT_TOP + PLOT_SIZE * (1.0 - q))
}

/// Canvas coordinates back to data coordinates.
pub fn from_canvas(x: f64, y: f64) -> (f64, f64) {
    (
        (x - PLOT_LEFT) / PLOT_SIZE,
        1.0 - (y - PLOT_TOP) / PLOT_SIZE,
    )
}

fn coords<I: IntoIterator<Item = (f64, f64)>>(points: I) -> String {
    points
        .into_iter()
        .map(|(p, q)| {
            let (x, y) = to_canvas(p, q);
            format!("{x:.4},{y:.4}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Diagonal, every curve, the shaded area between the diagonal and the
/// first curve, axes with ticks, and a legend.
pub fn render_svg(curves: &[Curve]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>"#
    );

    if let Some(first) = curves.first().filter(|c| !c.on_diagonal()) {
        let _ = writeln!(
            s,
            r##"<polygon class="area" points="{}" fill="#bdbdbd" fill-opacity="0.6" stroke="none"/>"##,
            coords(first.with_origin())
        );
    }

    let _ = writeln!(
        s,
        r#"<rect class="frame" x="{PLOT_LEFT:.4}" y="{PLOT_TOP:.4}" width="{PLOT_SIZE:.4}" height="{PLOT_SIZE:.4}" fill="none" stroke="black"/>"#
    );
    for k in 0..=5 {
        let v = k as f64 / 5.0;
        let (x, y0) = to_canvas(v, 0.0);
        let (x0, y) = to_canvas(0.0, v);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.4}" y1="{y0:.4}" x2="{x:.4}" y2="{:.4}" stroke="black"/>"#,
            y0 + 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.4}" y="{:.4}" text-anchor="middle">{v:.1}</text>"#,
            y0 + 19.0
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.4}" y1="{y:.4}" x2="{x0:.4}" y2="{y:.4}" stroke="black"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.4}" y="{:.4}" text-anchor="end">{v:.1}</text>"#,
            x0 - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text class="xlabel" x="{:.4}" y="{:.4}" text-anchor="middle">{X_LABEL}</text>"#,
        PLOT_LEFT + PLOT_SIZE / 2.0,
        PLOT_TOP + PLOT_SIZE + 45.0
    );
    let (lx, ly) = (PLOT_LEFT - 45.0, PLOT_TOP + PLOT_SIZE / 2.0);
    let _ = writeln!(
        s,
        r#"<text class="ylabel" x="{lx:.4}" y="{ly:.4}" text-anchor="middle" transform="rotate(-90 {lx:.4} {ly:.4})">{Y_LABEL}</text>"#
    );

    let _ = writeln!(
        s,
        r#"<polyline class="diagonal" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        coords([(0.0, 0.0), (1.0, 1.0)])
    );
    for (k, curve) in curves.iter().enumerate() {
        let (color, dash) = PALETTE[k % PALETTE.len()];
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            r#"<polyline class="curve" id="curve-{k}" data-label="{}" points="{}" fill="none" stroke="{color}" stroke-width="2"{dash}/>"#,
            escape(&curve.label),
            coords(curve.with_origin())
        );
    }

    for (k, curve) in curves.iter().enumerate() {
        let (color, dash) = PALETTE[k % PALETTE.len()];
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let (x, y) = to_canvas(0.05, 0.95 - 0.06 * k as f64);
        let _ = writeln!(
            s,
            r#"<line class="legend" x1="{x:.4}" y1="{y:.4}" x2="{:.4}" y2="{y:.4}" stroke="{color}" stroke-width="2"{dash}/>"#,
            x + 50.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.4}" y="{:.4}">{}</text>"#,
            x + 58.0,
            y + 4.0,
            escape(&curve.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

const ASCII_WIDTH: usize = 60;
const ASCII_HEIGHT: usize = 30;
const MARKERS: [char; 4] = ['*', 'o', '+', 'x'];

/// Character grid: `.` diagonal, `:` shaded area of the first curve, and
/// one marker per curve.
pub fn render_ascii(curves: &[Curve]) -> String {
    let (w, h) = (ASCII_WIDTH, ASCII_HEIGHT);
    let mut grid = vec![vec![' '; w + 1]; h + 1];
    let row_of = |q: f64| -> Option<usize> {
        let r = (q.clamp(-1.0, 2.0) * h as f64).round();
        (0.0..=h as f64).contains(&r).then_some(r as usize)
    };
    for (col, cells) in (0..=w).map(|c| (c, c as f64 / w as f64)) {
        let diag = row_of(cells);
        if let (Some(first), Some(d)) = (curves.first(), diag) {
            if let Some(c) = row_of(first.at(cells)) {
                let (lo, hi) = if c < d { (c, d) } else { (d, c) };
                for row in grid.iter_mut().take(hi).skip(lo + 1) {
                    row[col] = ':';
                }
            }
        }
        if let Some(d) = diag {
            grid[d][col] = '.';
        }
    }
    for (k, curve) in curves.iter().enumerate() {
        let marker = MARKERS[k % MARKERS.len()];
        let rows = (0..=w).map(|col| row_of(curve.at(col as f64 / w as f64)));
        for (col, r) in rows.enumerate() {
            if let Some(r) = r {
                grid[r][col] = marker;
            }
        }
    }

    let mut out = String::new();
    for (r, row) in grid.iter().enumerate().rev() {
        let tick = if r == h {
            "1.0"
        } else if r == 0 {
            "0.0"
        } else {
            "   "
        };
        let line: String = row.iter().collect();
        let _ = writeln!(out, "{tick} |{}", line.trim_end());
    }
    let _ = writeln!(out, "    +{}", "-".repeat(w + 1));
    let _ = writeln!(out, "    0.0{}1.0", " ".repeat(w - 5));
    let _ = writeln!(out, "    x: {X_LABEL}");
    let _ = writeln!(out, "    y: {Y_LABEL}");
    for (k, curve) in curves.iter().enumerate() {
        let _ = writeln!(out, "    {} {}", MARKERS[k % MARKERS.len()], curve.label);
    }
    out
}

pub fn render(style: PlotStyle, curves: &[Curve]) -> String {
    match style {
        PlotStyle::Svg => render_svg(curves),
        PlotStyle::Ascii => render_ascii(curves),
    }
}

/// Data coordinates of every `<polyline class="curve">`, in document order.
pub fn curve_points_from_svg(svg: &str) -> Vec<(String, Vec<(f64, f64)>)> {
    svg.lines()
        .filter(|l| l.starts_with(r#"<polyline class="curve""#))
        .filter_map(|l| {
            let label = attr(l, "data-label")?.to_string();
            let pts = attr(l, "points")?
                .split(' ')
                .filter_map(|pair| {
                    let (x, y) = pair.split_once(',')?;
                    Some(from_canvas(x.parse().ok()?, y.parse().ok()?))
                })
                .collect();
            Some((label, pts))
        })
        .collect()
}

fn attr<'a>(line: &'a str, name: &str) -> Option<&'a str> {
    let key = format!(" {name}=\"");
    let start = line.find(&key)? + key.len();
    let len = line[start..].find('"')?;
    Some(&line[start..start + len])
}
