//! ASCII and SVG drawings of mosaics.
//!
//! The ASCII form draws each tile as a 3×3 block inside a frame, with the
//! boundary labels in the margins. The SVG form draws the tile grid and, on
//! request, the closure as a chord diagram: the boundary edges sit on a
//! circle in boundary order and each pair is joined by a chord. A small
//! circle marks every crossing of two interlocked arc chords, one per
//! virtual crossing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::mosaic::{Cell, Mosaic};
use crate::surface;
use crate::tiles::{Side, Tile};

fn block(t: Tile) -> [&'static str; 3] {
    match t {
        Tile::T0 => ["   ", "   ", "   "],
        Tile::T1 => ["   ", "-. ", " | "],
        Tile::T2 => ["   ", " .-", " | "],
        Tile::T3 => [" | ", " '-", "   "],
        Tile::T4 => [" | ", "-' ", "   "],
        Tile::T5 => ["   ", "---", "   "],
        Tile::T6 => [" | ", " | ", " | "],
        Tile::T7 => [" | ", "-/-", " | "],
        Tile::T8 => [" | ", "-\\-", " | "],
        Tile::T9 => [" | ", "---", " | "],
        Tile::T10 => [" | ", "-|-", " | "],
    }
}

fn label_at(m: &Mosaic, labels: &[String], cell: Cell, side: Side) -> String {
    m.edge_at(cell, side).map(|k| labels[k].clone()).unwrap_or_default()
}

pub fn render_ascii(m: &Mosaic) -> String {
    let labels = m.labels();
    let pad = labels.iter().map(String::len).max().unwrap_or(1) + 1;
    let (rows, cols) = (m.rows(), m.cols());
    let mut lines: Vec<String> = Vec::new();
    let label_row = |side: Side, row: usize| {
        let mut s = " ".repeat(pad + 1);
        for c in 0..cols {
            let l = label_at(m, &labels, Cell::new(row, c), side);
            let _ = write!(s, " {l:<2}");
        }
        s
    };
    let frame = format!("{}+{}+", " ".repeat(pad), "-".repeat(3 * cols));
    lines.push(label_row(Side::North, 0));
    lines.push(frame.clone());
    for r in 0..rows {
        for k in 0..3 {
            let (left, right) = if k == 1 {
                (
                    label_at(m, &labels, Cell::new(r, 0), Side::West),
                    label_at(m, &labels, Cell::new(r, cols - 1), Side::East),
                )
            } else {
                (String::new(), String::new())
            };
            let mut s = format!("{left:>w$} |", w = pad - 1);
            for c in 0..cols {
                s.push_str(block(m.tile(Cell::new(r, c)))[k]);
            }
            let _ = write!(s, "| {right}");
            lines.push(s);
        }
    }
    lines.push(frame);
    lines.push(label_row(Side::South, rows - 1));
    let report = m.validate();
    if !report.is_valid() {
        for v in &report.violations {
            lines.push(format!("! {v}"));
        }
    }
    let mut out: String = lines.iter().map(|l| format!("{}\n", l.trim_end())).collect();
    if out.is_empty() {
        out.push('\n');
    }
    out
}

/// Reads the tile grid back from ASCII output. Only the framed blocks
/// matter; labels, margins and trailing markers are ignored.
pub fn parse_ascii(text: &str) -> Result<Vec<Vec<Tile>>> {
    let bad = |line: usize, message: &str| Error::Syntax { line, message: message.to_string() };
    let lines: Vec<&str> = text.lines().collect();
    let frames: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            t.len() >= 2 && t.starts_with('+') && t.ends_with('+') && t[1..t.len() - 1].chars().all(|c| c == '-')
        })
        .map(|(i, _)| i)
        .collect();
    let [top, bottom] = frames[..] else {
        return Err(bad(1, "expected exactly two frame lines"));
    };
    let x0 = lines[top].find('+').expect("frame line");
    let width = lines[top].trim().len() - 2;
    if width == 0 || !width.is_multiple_of(3) || (bottom - top - 1) % 3 != 0 || bottom == top + 1 {
        return Err(bad(top + 1, "frame size is not a whole number of tiles"));
    }
    let cols = width / 3;
    let mut grid = Vec::new();
    for r in 0..(bottom - top - 1) / 3 {
        let mut row = Vec::with_capacity(cols);
        for c in 0..cols {
            let mut got = [String::new(), String::new(), String::new()];
            for (k, g) in got.iter_mut().enumerate() {
                let line = lines[top + 1 + 3 * r + k];
                let start = x0 + 1 + 3 * c;
                let chunk: String = line.chars().skip(start).take(3).collect();
                *g = format!("{chunk:<3}");
            }
            let tile = Tile::ALL
                .into_iter()
                .find(|&t| block(t).iter().zip(&got).all(|(a, b)| *a == b))
                .ok_or_else(|| bad(top + 2 + 3 * r, &format!("unrecognized block at column {c}")))?;
            row.push(tile);
        }
        grid.push(row);
    }
    Ok(grid)
}

const CELL: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn side_point(x: f64, y: f64, side: Side) -> (f64, f64) {
    let h = CELL / 2.0;
    match side {
        Side::North => (x + h, y),
        Side::South => (x + h, y + CELL),
        Side::East => (x + CELL, y + h),
        Side::West => (x, y + h),
    }
}

fn tile_paths(t: Tile, x: f64, y: f64, out: &mut String) {
    let (cx, cy) = (x + CELL / 2.0, y + CELL / 2.0);
    let stroke = r#"fill="none" stroke="black" stroke-width="2""#;
    if t.is_crossing() {
        let over_horizontal = t.is_over(crate::tiles::Axis::Horizontal).unwrap_or(false);
        let gap = 6.0;
        let (hx, vy) = if over_horizontal { (0.0, gap) } else { (gap, 0.0) };
        let _ = writeln!(out, r#"<path d="M {x} {cy} L {} {cy} M {} {cy} L {} {cy}" {stroke}/>"#, cx - hx, cx + hx, x + CELL);
        let _ = writeln!(out, r#"<path d="M {cx} {y} L {cx} {} M {cx} {} L {cx} {}" {stroke}/>"#, cy - vy, cy + vy, y + CELL);
        return;
    }
    for &(a, b) in t.connections() {
        let (ax, ay) = side_point(x, y, a);
        let (bx, by) = side_point(x, y, b);
        let _ = writeln!(out, r#"<path d="M {ax} {ay} Q {cx} {cy} {bx} {by}" {stroke}/>"#);
    }
}

/// Intersection point of segments `p1 p2` and `q1 q2`, if they cross.
fn segment_crossing(p1: (f64, f64), p2: (f64, f64), q1: (f64, f64), q2: (f64, f64)) -> Option<(f64, f64)> {
    let d = (p2.0 - p1.0) * (q2.1 - q1.1) - (p2.1 - p1.1) * (q2.0 - q1.0);
    if d.abs() < 1e-12 {
        return None;
    }
    let t = ((q1.0 - p1.0) * (q2.1 - q1.1) - (q1.1 - p1.1) * (q2.0 - q1.0)) / d;
    let u = ((q1.0 - p1.0) * (p2.1 - p1.1) - (q1.1 - p1.1) * (p2.0 - p1.0)) / d;
    ((0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)).then_some((p1.0 + t * (p2.0 - p1.0), p1.1 + t * (p2.1 - p1.1)))
}

fn fmt2(x: f64) -> String {
    let s = format!("{x:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn render_svg(m: &Mosaic, show_closure: bool) -> Result<String> {
    if show_closure {
        m.ensure_valid()?;
    }
    let (rows, cols) = (m.rows() as f64, m.cols() as f64);
    let grid_w = cols * CELL;
    let grid_h = rows * CELL;
    let radius = 20.0 + 8.0 * m.boundary_len() as f64;
    let panel = if show_closure { 2.0 * radius + 2.0 * MARGIN } else { 0.0 };
    let width = grid_w + 2.0 * MARGIN + panel;
    let height = (grid_h + 2.0 * MARGIN).max(if show_closure { 2.0 * radius + 2.0 * MARGIN } else { 0.0 });
    let labels = m.labels();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt2(width),
        fmt2(height),
        fmt2(width),
        fmt2(height)
    );
    let _ = writeln!(out, r#"<g id="grid" font-family="monospace" font-size="12">"#);
    for cell in m.cells() {
        let (x, y) = (MARGIN + cell.col as f64 * CELL, MARGIN + cell.row as f64 * CELL);
        let _ = writeln!(out, r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="none" stroke="#bbbbbb"/>"##);
        tile_paths(m.tile(cell), x, y, &mut out);
    }
    for k in 0..m.boundary_len() {
        let e = m.edge(k);
        let (x, y) = (MARGIN + e.cell.col as f64 * CELL, MARGIN + e.cell.row as f64 * CELL);
        let (px, py) = side_point(x, y, e.side);
        let (dx, dy) = match e.side {
            Side::North => (0.0, -10.0),
            Side::South => (0.0, 18.0),
            Side::East => (8.0, 4.0),
            Side::West => (-16.0, 4.0),
        };
        let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, fmt2(px + dx - 3.0), fmt2(py + dy), labels[k]);
    }
    let _ = writeln!(out, "</g>");

    if show_closure {
        let cx = grid_w + 2.0 * MARGIN + MARGIN + radius;
        let cy = height / 2.0;
        let n = m.boundary_len() as f64;
        // counterclockwise in the plane, starting at the top of the left side
        let point = |k: usize| {
            let a = std::f64::consts::PI * (0.75 + 2.0 * k as f64 / n);
            (cx + radius * a.cos(), cy + radius * a.sin())
        };
        let _ = writeln!(out, r#"<g id="closure" font-family="monospace" font-size="12">"#);
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="#bbbbbb"/>"##,
            fmt2(cx),
            fmt2(cy),
            fmt2(radius)
        );
        for (a, b) in m.pairs() {
            let (p, q) = (point(a), point(b));
            let style = if m.edge_carries_arc(a) {
                r#"stroke="black" stroke-width="2""#
            } else {
                r##"stroke="#999999" stroke-dasharray="4 3""##
            };
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {style}/>"#,
                fmt2(p.0),
                fmt2(p.1),
                fmt2(q.0),
                fmt2(q.1)
            );
        }
        for k in 0..m.boundary_len() {
            let (x, y) = point(k);
            let (lx, ly) = (cx + (x - cx) * 1.12, cy + (y - cy) * 1.12);
            let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, fmt2(lx - 4.0), fmt2(ly + 4.0), labels[k]);
        }
        for ((a, b), (c, d)) in surface::interlocked_pairs(m) {
            let at = segment_crossing(point(a), point(b), point(c), point(d)).unwrap_or_else(|| {
                let (p, q) = (point(a), point(c));
                ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0)
            });
            let _ = writeln!(
                out,
                r#"<circle class="virtual" cx="{}" cy="{}" r="5" fill="white" stroke="black"/>"#,
                fmt2(at.0),
                fmt2(at.1)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
