//! SVG drawing of a tiling as a stack of unit cubes.
//!
//! A tiling of height `d` is drawn through its plane partition `P = d - t`:
//! the tops of the columns are the horizontal lozenges, the two kinds of
//! side faces are the other two orientations. The box `a×b×d` is projected
//! isometrically with `X = 26(s - r)`, `Y = 15(r + s) - 30z`, so every vertex
//! has integer coordinates and the text output is reproducible byte for byte.

use std::fmt::Write as _;

use super::tiling::LozengeTiling;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgStyle {
    /// Fill of horizontal lozenges.
    pub top: String,
    /// Fill of faces across rows.
    pub left: String,
    /// Fill of faces across columns.
    pub right: String,
    pub stroke: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { top: "#f2c14e".into(), left: "#5b8e7d".into(), right: "#2f4858".into(), stroke: "#111111".into() }
    }
}

type Point = (i64, i64, i64);

fn project((r, s, z): Point) -> (i64, i64) {
    (26 * (s - r), 15 * (r + s) - 30 * z)
}

struct Face {
    class: &'static str,
    corners: [Point; 4],
}

fn faces(t: &LozengeTiling, d: usize) -> Vec<Face> {
    let base = t.base();
    let (a, b, d) = (base.len() as i64, base.first() as i64, d as i64);
    let pp = t.plane_partition(d as usize);
    let height = |r: i64, s: i64| -> i64 {
        if r == 0 || s == 0 {
            return d;
        }
        pp.get(r as usize - 1).and_then(|row| row.get(s as usize - 1)).map_or(0, |&v| v as i64)
    };
    let mut out = Vec::new();
    for r in 1..=a {
        for s in 1..=base.part(r as usize) as i64 {
            let z = height(r, s);
            out.push(Face { class: "h", corners: [(r - 1, s - 1, z), (r - 1, s, z), (r, s, z), (r, s - 1, z)] });
        }
    }
    // faces at r = const between rows r and r+1, r = 0 being the back wall
    for s in 1..=b {
        for r in 0..=a {
            if r > 0 && !base.contains_cell((r as usize, s as usize)) {
                break;
            }
            for z in height(r + 1, s) + 1..=height(r, s) {
                out.push(Face { class: "l", corners: [(r, s - 1, z - 1), (r, s, z - 1), (r, s, z), (r, s - 1, z)] });
            }
        }
    }
    for r in 1..=a {
        for s in 0..=b {
            if s > 0 && !base.contains_cell((r as usize, s as usize)) {
                break;
            }
            for z in height(r, s + 1) + 1..=height(r, s) {
                out.push(Face { class: "r", corners: [(r - 1, s, z - 1), (r, s, z - 1), (r, s, z), (r - 1, s, z)] });
            }
        }
    }
    out
}

fn points(ps: &[Point]) -> String {
    ps.iter()
        .map(|&p| {
            let (x, y) = project(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The tiling drawn inside the outline of the box `ℓ(μ) × μ_1 × d`.
pub fn render_svg(t: &LozengeTiling, d: usize, style: &SvgStyle) -> String {
    let (a, b, dz) = (t.base().len() as i64, t.base().first() as i64, d as i64);
    let outline = [(a, 0, 0), (a, b, 0), (0, b, 0), (0, b, dz), (0, 0, dz), (a, 0, dz)];
    let faces = faces(t, d);
    let projected: Vec<(i64, i64)> = outline.iter().map(|&p| project(p)).collect();
    let pad = 10;
    let min_x = projected.iter().map(|p| p.0).min().unwrap_or(0) - pad;
    let max_x = projected.iter().map(|p| p.0).max().unwrap_or(0) + pad;
    let min_y = projected.iter().map(|p| p.1).min().unwrap_or(0) - pad;
    let max_y = projected.iter().map(|p| p.1).max().unwrap_or(0) + pad;
    let (w, h) = (max_x - min_x, max_y - min_y);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{min_x} {min_y} {w} {h}" width="{w}" height="{h}">"#
    );
    let _ = writeln!(out, r#"<g stroke="{}" stroke-width="1" stroke-linejoin="round">"#, style.stroke);
    for f in &faces {
        let fill = match f.class {
            "h" => &style.top,
            "l" => &style.left,
            _ => &style.right,
        };
        let _ = writeln!(out, r#"<polygon class="{}" fill="{fill}" points="{}"/>"#, f.class, points(&f.corners));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<polygon class="outline" fill="none" stroke="{}" stroke-width="2" points="{}"/>"#, style.stroke, points(&outline));
    out.push_str("</svg>\n");
    out
}

/// Number of lozenges drawn, i.e. `|μ| + d·ℓ(μ) + d·μ_1` for base `μ`.
pub fn lozenge_count(svg: &str) -> usize {
    ["class=\"h\"", "class=\"l\"", "class=\"r\""].iter().map(|c| svg.matches(c).count()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lozenge::{enumerate_tilings, Region};
    use crate::shapes::Partition;

    #[test]
    fn counts() {
        let r = Region::MuD { mu: Partition::of(&[1]), d: 1 };
        for t in enumerate_tilings(&r).unwrap() {
            assert_eq!(lozenge_count(&render_svg(&t, 1, &SvgStyle::default())), 3);
        }
        let r = Region::Hexagon { a: 2, b: 3, c: 2 };
        for t in enumerate_tilings(&r).unwrap() {
            assert_eq!(lozenge_count(&render_svg(&t, 2, &SvgStyle::default())), 6 + 6 + 4);
        }
        let empty = LozengeTiling::seed(&Region::MuD { mu: Partition::empty(), d: 2 });
        let svg = render_svg(&empty, 2, &SvgStyle::default());
        assert_eq!(lozenge_count(&svg), 0);
        assert!(svg.contains("class=\"outline\""));
    }
}
