//! Chord diagrams of noncrossing partitions.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::ncp::{DPartition, SetPartitionA};

/// Layout of a circle diagram. Point 1 sits at the top and labels
/// increase clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleStyle {
    pub radius: f64,
    pub margin: f64,
    pub point_radius: f64,
    pub label_offset: f64,
}

impl Default for CircleStyle {
    fn default() -> Self {
        Self { radius: 100.0, margin: 40.0, point_radius: 3.0, label_offset: 16.0 }
    }
}

impl CircleStyle {
    pub fn centre(&self) -> (f64, f64) {
        let c = self.radius + self.margin;
        (c, c)
    }

    fn size(&self) -> f64 {
        2.0 * (self.radius + self.margin)
    }

    /// Position `k` (0-based) of `count` points.
    pub fn point(&self, k: usize, count: usize, radius: f64) -> (f64, f64) {
        let (cx, cy) = self.centre();
        let theta = PI / 2.0 - 2.0 * PI * k as f64 / count as f64;
        (cx + radius * theta.cos(), cy - radius * theta.sin())
    }
}

pub type Point = (f64, f64);

/// Geometry before serialisation; also used for structural tests.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleGeometry {
    pub points: Vec<(Point, String)>,
    /// Two-element blocks.
    pub chords: Vec<(Point, Point)>,
    /// Blocks of three or more points, in cyclic order.
    pub polygons: Vec<Vec<Point>>,
    /// Centroid and its sign label, for type D.
    pub centre: Option<(Point, Option<char>)>,
}

fn push_block(geo: &mut CircleGeometry, pts: Vec<Point>) {
    match pts.len() {
        0 | 1 => {}
        2 => geo.chords.push((pts[0], pts[1])),
        _ => geo.polygons.push(pts),
    }
}

pub fn circle_geometry_a(p: &SetPartitionA, style: &CircleStyle) -> CircleGeometry {
    let n = p.n();
    let mut geo = CircleGeometry { points: Vec::new(), chords: Vec::new(), polygons: Vec::new(), centre: None };
    for k in 0..n {
        geo.points.push((style.point(k, n, style.radius), (k + 1).to_string()));
    }
    for b in p.blocks() {
        push_block(&mut geo, b.iter().map(|&x| style.point(x - 1, n, style.radius)).collect());
    }
    geo
}

/// Boundary points `1, …, n-1, -1, …, -(n-1)` clockwise on a `(2n-2)`-gon;
/// `±n` sit at the centroid.
pub fn circle_geometry_d(p: &DPartition, style: &CircleStyle) -> CircleGeometry {
    let n = p.n();
    let ni = n as i32;
    let count = 2 * (n - 1);
    let pos = |x: i32| if x > 0 { x as usize - 1 } else { n - 2 + x.unsigned_abs() as usize };
    let mut geo = CircleGeometry { points: Vec::new(), chords: Vec::new(), polygons: Vec::new(), centre: None };
    for k in 0..count {
        let label = if k < n - 1 { (k + 1) as i32 } else { -((k + 2 - n) as i32) };
        geo.points.push((style.point(k, count, style.radius), label.to_string()));
    }
    let mut sign = None;
    for b in p.blocks() {
        let mut boundary: Vec<i32> = b.iter().copied().filter(|x| x.abs() != ni).collect();
        boundary.sort_by_key(|&x| pos(x));
        let mut pts: Vec<Point> = boundary.iter().map(|&x| style.point(pos(x), count, style.radius)).collect();
        let centre_members: Vec<i32> = b.iter().copied().filter(|x| x.abs() == ni).collect();
        if centre_members.len() == 1 && !boundary.is_empty() {
            sign = Some(if centre_members[0] > 0 { '+' } else { '-' });
            pts.push(style.centre());
        }
        push_block(&mut geo, pts);
    }
    geo.centre = Some((style.centre(), sign));
    geo
}

fn fmt_point((x, y): Point) -> String {
    format!("{x:.3},{y:.3}")
}

/// Serialises the geometry as a standalone SVG document.
pub fn geometry_to_svg(geo: &CircleGeometry, style: &CircleStyle, centre_label: Option<&str>) -> String {
    let size = style.size();
    let (cx, cy) = style.centre();
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#);
    let _ = writeln!(s, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1"/>"#, style.radius);
    for poly in &geo.polygons {
        let pts: Vec<String> = poly.iter().map(|&p| fmt_point(p)).collect();
        let _ = writeln!(s, r#"<polygon points="{}" fill="lightgray" stroke="black" stroke-width="2"/>"#, pts.join(" "));
    }
    for &((x1, y1), (x2, y2)) in &geo.chords {
        let _ = writeln!(s, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="2"/>"#);
    }
    for ((x, y), label) in &geo.points {
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="black"/>"#, style.point_radius);
        let (dx, dy) = (x - cx, y - cy);
        let len = (dx * dx + dy * dy).sqrt().max(1e-12);
        let (lx, ly) = (x + dx / len * style.label_offset, y + dy / len * style.label_offset);
        let _ = writeln!(s, r#"<text x="{lx:.3}" y="{ly:.3}" font-size="12" text-anchor="middle" dominant-baseline="middle">{label}</text>"#);
    }
    if let Some(((x, y), sign)) = geo.centre {
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="black"/>"#, style.point_radius);
        if let Some(label) = centre_label {
            let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="10" text-anchor="middle">{label}</text>"#, x, y + 14.0);
        }
        if let Some(sign) = sign {
            let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{sign}</text>"#, x + 10.0, y - 6.0);
        }
    }
    s.push_str("</svg>\n");
    s
}

pub fn render_circle_a(p: &SetPartitionA, style: &CircleStyle) -> String {
    geometry_to_svg(&circle_geometry_a(p, style), style, None)
}

pub fn render_circle_d(p: &DPartition, style: &CircleStyle) -> String {
    let label = format!("±{}", p.n());
    geometry_to_svg(&circle_geometry_d(p, style), style, Some(&label))
}
