//! Puzzle pictures of hive points: per triangle the unit lattice with the
//! diagonal of every strict rhombus drawn, rendered to SVG.

use crate::error::{Error, Result};
use crate::hive::{hive_check, rhombi, HiveCoordinates};
use crate::points::{chart_triangulation, to_fan_chart};
use std::collections::BTreeSet;
use std::fmt::Write;

/// Lattice point of a triangle: exponents on its corners `(A, B, C)`.
pub type GridPoint = [u32; 3];

/// A unit segment of the triangular lattice inside one triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub tri: [usize; 3],
    pub from: GridPoint,
    pub to: GridPoint,
}

impl Segment {
    fn new(tri: [usize; 3], a: GridPoint, b: GridPoint) -> Self {
        let (from, to) = if a <= b { (a, b) } else { (b, a) };
        Segment { tri, from, to }
    }
}

/// Interior segments for the given slack signs: one per strict rhombus,
/// joining its obtuse vertices. `strict` follows the order of the hive
/// report (triangles, then the rhombi of each).
pub fn segments_from_signs(k: usize, triangles: &[[usize; 3]], strict: &[bool]) -> Result<BTreeSet<Segment>> {
    let shapes = rhombi(k);
    if strict.len() != shapes.len() * triangles.len() {
        return Err(Error::InvalidParameters(format!(
            "{} signs for {} triangles of size {k}",
            strict.len(),
            triangles.len()
        )));
    }
    let mut out = BTreeSet::new();
    for (t, &tri) in triangles.iter().enumerate() {
        for (r, shape) in shapes.iter().enumerate() {
            if strict[t * shapes.len() + r] {
                out.insert(Segment::new(tri, shape.obtuse[0], shape.obtuse[1]));
            }
        }
    }
    Ok(out)
}

/// Unit segments along the sides of a triangle of size `k`.
pub fn side_segments(k: usize, tri: [usize; 3]) -> Vec<Segment> {
    let k = k as u32;
    let mut out = Vec::new();
    for s in 0..k {
        out.push(Segment::new(tri, [k - s, s, 0], [k - s - 1, s + 1, 0]));
        out.push(Segment::new(tri, [0, k - s, s], [0, k - s - 1, s + 1]));
        out.push(Segment::new(tri, [s, 0, k - s], [s + 1, 0, k - s - 1]));
    }
    out
}

/// Triangles, size and strict interior segments of a hive point.
pub fn segment_set(h: &HiveCoordinates) -> Result<(usize, Vec<[usize; 3]>, BTreeSet<Segment>)> {
    let k = h
        .chart
        .labels()
        .iter()
        .find_map(|l| l.as_flag().map(|m| m.k()))
        .ok_or_else(|| Error::ChartMismatch(h.chart.chart_id().to_string()))?;
    let h = if h.chart.path().is_empty() { h.clone() } else { to_fan_chart(h, k)? };
    let t = chart_triangulation(&h.chart).ok_or_else(|| Error::ChartMismatch(h.chart.chart_id().to_string()))?;
    let report = hive_check(&h)?;
    let strict: Vec<bool> = report.entries.iter().map(|e| e.slack > num_traits::Zero::zero()).collect();
    let tris = t.triangles().to_vec();
    let segs = segments_from_signs(k, &tris, &strict)?;
    Ok((k, tris, segs))
}

/// Points on the sides of a triangle, away from its corners, where strict
/// segments end; given as `(corner, corner, steps from the first)` with the
/// corners in increasing order.
pub fn side_contacts(k: usize, segs: &BTreeSet<Segment>) -> BTreeSet<(usize, usize, u32)> {
    let k = k as u32;
    let mut out = BTreeSet::new();
    for s in segs {
        for p in [s.from, s.to] {
            let zero: Vec<usize> = (0..3).filter(|&c| p[c] == 0).collect();
            if zero.len() == 1 {
                let (a, b) = match zero[0] {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                // steps from corner a is the exponent lost by a
                out.insert((s.tri[a], s.tri[b], k - p[a]));
            }
        }
    }
    out
}

fn corner_positions(n: usize, tri: Option<[usize; 3]>) -> Vec<(f64, f64)> {
    let r = 200.0;
    match tri {
        Some(_) => vec![(0.0, -r), (-r * 0.866, r * 0.5), (r * 0.866, r * 0.5)],
        None => (0..n)
            .map(|i| {
                let th = std::f64::consts::PI * (0.5 - 2.0 * i as f64 / n as f64);
                (r * th.cos(), -r * th.sin())
            })
            .collect(),
    }
}

/// SVG picture of the puzzle of `h`, either on one triangle of its chart
/// or on the whole polygon.
pub fn render_hive_svg(h: &HiveCoordinates, triangle: Option<[usize; 3]>) -> Result<String> {
    let (k, tris, segs) = segment_set(h)?;
    let n = h.chart.n();
    let shown: Vec<[usize; 3]> = match triangle {
        Some(t) => {
            let mut s = t;
            s.sort_unstable();
            if !tris.contains(&s) {
                return Err(Error::InvalidParameters(format!("{t:?} is not a triangle of the chart")));
            }
            vec![s]
        }
        None => tris,
    };
    let pos = corner_positions(n, triangle);
    let corner = |tri: [usize; 3], c: usize| if triangle.is_some() { pos[c] } else { pos[tri[c] - 1] };
    let at = |tri: [usize; 3], p: GridPoint| {
        let (mut x, mut y) = (0.0, 0.0);
        for c in 0..3 {
            let (cx, cy) = corner(tri, c);
            x += cx * p[c] as f64 / k as f64;
            y += cy * p[c] as f64 / k as f64;
        }
        (x, y)
    };
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-240 -240 480 480">"#);
    for &tri in &shown {
        for s in side_segments(k, tri) {
            let (a, b) = (at(tri, s.from), at(tri, s.to));
            let _ = writeln!(
                svg,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-width="1"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
        for s in segs.iter().filter(|s| s.tri == tri) {
            let (a, b) = (at(tri, s.from), at(tri, s.to));
            let _ = writeln!(
                svg,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="2"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
    }
    if triangle.is_none() {
        for (i, (x, y)) in pos.iter().enumerate() {
            let _ = writeln!(svg, r#"<text x="{:.3}" y="{:.3}" font-size="14">{}</text>"#, x * 1.08, y * 1.08, i + 1);
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
