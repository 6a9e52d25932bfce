//! Auslander–Reiten strips of `ZΔ` with the vertices of a thick
//! subcategory marked.

use std::fmt::Write;

use crate::derived::{DerivedModel, ThickDescriptor, Vertex};
use crate::error::{Error, Result};

/// Layout of a strip. Vertex `(m, q)` sits at column `2m - a_q` and row `q`,
/// so every mesh arrow moves one column to the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripStyle {
    pub spacing_x: f64,
    pub spacing_y: f64,
    pub margin: f64,
    pub dot_radius: f64,
    pub marked_radius: f64,
    /// Maximal number of `m`-columns in a window.
    pub cap: usize,
}

impl Default for StripStyle {
    fn default() -> Self {
        Self { spacing_x: 20.0, spacing_y: 30.0, margin: 20.0, dot_radius: 2.0, marked_radius: 5.0, cap: 200 }
    }
}

/// Half-open range `m0 ≤ m < m1` of `τ`-columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripWindow {
    pub m0: i64,
    pub m1: i64,
}

impl StripWindow {
    pub fn new(m0: i64, m1: i64) -> Self {
        Self { m0, m1 }
    }

    fn validate(&self, cap: usize) -> Result<()> {
        if self.m1 <= self.m0 {
            return Err(Error::EmptyWindow);
        }
        let requested = (self.m1 - self.m0) as usize;
        if requested > cap {
            return Err(Error::WindowTooLarge { requested, cap });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StripGeometry {
    /// Column, row and whether the vertex is marked.
    pub vertices: Vec<(Vertex, i64, usize, bool)>,
    pub arrows: Vec<((i64, usize), (i64, usize))>,
    /// Columns of the dashed fundamental-domain boundaries.
    pub boundaries: Vec<i64>,
}

fn check_payload(model: &DerivedModel, desc: &ThickDescriptor) -> Result<()> {
    if model.index_of_roots(desc.roots()).is_none() || desc.nc_element().rank() != model.root_system().rank() {
        return Err(Error::PayloadMismatch(format!("descriptor is not a thick subcategory of {}", model.root_system().delta())));
    }
    Ok(())
}

/// `width` is the identification width `r`; boundaries are drawn at
/// `m ≡ 0 mod r`.
pub fn strip_geometry(
    model: &DerivedModel,
    desc: &ThickDescriptor,
    window: StripWindow,
    width: Option<u64>,
    style: &StripStyle,
) -> Result<StripGeometry> {
    window.validate(style.cap)?;
    check_payload(model, desc)?;
    let walk = model.walk();
    let a = walk.seed();
    let col = |(m, q): Vertex| 2 * m - a[q];
    let inside = |m: i64| (window.m0..window.m1).contains(&m);

    let vertices = walk.window(window.m0, window.m1).map(|v| (v, col(v), v.1, desc.is_marked(walk, v))).collect();
    let mut arrows = Vec::new();
    for (x, y) in model.root_system().delta().arrows() {
        for m in window.m0..window.m1 {
            arrows.push(((col((m, x)), x), (col((m, y)), y)));
            if inside(m - 1) {
                arrows.push(((col((m - 1, y)), y), (col((m, x)), x)));
            }
        }
    }
    arrows.sort();
    let boundaries = match width {
        Some(r) if r > 0 => {
            let r = r as i64;
            let first = window.m0.div_euclid(r) * r;
            (0..).map(|k| first + k * r).skip_while(|&m| m < window.m0).take_while(|&m| m < window.m1).map(|m| 2 * m).collect()
        }
        _ => Vec::new(),
    };
    Ok(StripGeometry { vertices, arrows, boundaries })
}

fn column_range(geo: &StripGeometry) -> (i64, i64) {
    let min = geo.vertices.iter().map(|v| v.1).min().unwrap_or(0);
    let max = geo.vertices.iter().map(|v| v.1).max().unwrap_or(0);
    (min, max)
}

pub fn render_ar_strip_svg(
    model: &DerivedModel,
    desc: &ThickDescriptor,
    window: StripWindow,
    width: Option<u64>,
    style: &StripStyle,
) -> Result<String> {
    let geo = strip_geometry(model, desc, window, width, style)?;
    let (c0, c1) = column_range(&geo);
    let rows = model.root_system().rank();
    let x = |c: i64| style.margin + (c - c0) as f64 * style.spacing_x;
    let y = |q: usize| style.margin + q as f64 * style.spacing_y;
    let w = 2.0 * style.margin + (c1 - c0) as f64 * style.spacing_x;
    let h = 2.0 * style.margin + (rows.saturating_sub(1)) as f64 * style.spacing_y;

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#);
    for &b in &geo.boundaries {
        let bx = x(b) - style.spacing_x / 2.0;
        let _ = writeln!(s, r#"<line x1="{bx:.3}" y1="0.000" x2="{bx:.3}" y2="{h:.3}" stroke="gray" stroke-dasharray="4,4"/>"#);
    }
    for &((ca, qa), (cb, qb)) in &geo.arrows {
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-width="0.5"/>"#,
            x(ca),
            y(qa),
            x(cb),
            y(qb)
        );
    }
    for &(_, c, q, marked) in &geo.vertices {
        let (r, fill) = if marked { (style.marked_radius, "black") } else { (style.dot_radius, "gray") };
        let _ = writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="{r:.3}" fill="{fill}"/>"#, x(c), y(q));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// One text row per column `q` of `Δ`: `*` marked, `.` unmarked, `|` a
/// fundamental-domain boundary.
pub fn render_ar_strip_ascii(
    model: &DerivedModel,
    desc: &ThickDescriptor,
    window: StripWindow,
    width: Option<u64>,
    style: &StripStyle,
) -> Result<String> {
    let geo = strip_geometry(model, desc, window, width, style)?;
    let (c0, c1) = column_range(&geo);
    let rows = model.root_system().rank();
    let len = 2 * (c1 - c0) as usize + 1;
    let mut grid = vec![vec![b' '; len]; rows];
    for &b in &geo.boundaries {
        if b > c0 {
            let k = 2 * (b - c0) as usize - 1;
            for row in grid.iter_mut() {
                row[k] = b'|';
            }
        }
    }
    for &(_, c, q, marked) in &geo.vertices {
        grid[q][2 * (c - c0) as usize] = if marked { b'*' } else { b'.' };
    }
    let mut s = String::new();
    for row in grid {
        s.push_str(String::from_utf8(row).expect("ascii").trim_end());
        s.push('\n');
    }
    Ok(s)
}
