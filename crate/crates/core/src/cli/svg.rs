//! Static SVG 1.1 diagrams of an instance and a result document.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;

use super::json::ResultDocument;
use crate::depth::depth_region;
use crate::error::Result;
use crate::geom::{convex_hull, Point, PointSet, RegionKind};

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 60.0;

const COLORS: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];
const DASHES: [&str; 6] = ["none", "12 6", "4 4", "16 4 4 4", "2 6", "20 8"];

/// Affine map from data coordinates into the viewBox, y pointing up.
struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Frame {
    fn fit(pts: &[(f64, f64)]) -> Frame {
        let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in pts {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        if pts.is_empty() {
            (min_x, min_y, max_x, max_y) = (0.0, 0.0, 1.0, 1.0);
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let inner = SIZE - 2.0 * MARGIN;
        let scale = if span > 0.0 { inner / span } else { 1.0 };
        Frame {
            min_x,
            min_y,
            scale,
            off_x: MARGIN + (inner - (max_x - min_x) * scale) / 2.0,
            off_y: MARGIN + (inner - (max_y - min_y) * scale) / 2.0,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (String, String) {
        let sx = self.off_x + (x - self.min_x) * self.scale;
        let sy = SIZE - (self.off_y + (y - self.min_y) * self.scale);
        (num(sx), num(sy))
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" { "0.000000".to_string() } else { s }
}

fn to_f64(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}

fn points_attr(frame: &Frame, pts: &[Point]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = frame.map(to_f64(p));
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the diagram as a string.
pub fn svg_string(ps: &PointSet, result: &ResultDocument) -> Result<String> {
    // Results without a stored C_3 still get it shaded when it exists.
    let region = match &result.c3 {
        Some(c3) => Some(c3.region()?),
        None => depth_region(ps, 3).ok().map(|dr| dr.region),
    };
    let witnesses = result
        .partitions
        .iter()
        .map(|p| p.witness_point())
        .collect::<Result<Vec<_>>>()?;

    let mut all: Vec<(f64, f64)> = ps.iter().map(to_f64).collect();
    if let Some(r) = &region {
        all.extend(r.vertices().iter().map(to_f64));
    }
    all.extend(witnesses.iter().flatten().map(to_f64));
    let frame = Frame::fit(&all);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n");
    s.push_str("<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n");

    if let Some(r) = &region {
        s.push_str("<g id=\"c3\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"2\">\n");
        let v = r.vertices();
        match r.kind() {
            RegionKind::Empty => {}
            RegionKind::SinglePoint => {
                let (x, y) = frame.map(to_f64(&v[0]));
                let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"14\"/>");
            }
            RegionKind::Segment => {
                let (x1, y1) = frame.map(to_f64(&v[0]));
                let (x2, y2) = frame.map(to_f64(&v[1]));
                let _ = writeln!(s, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke-width=\"10\"/>");
            }
            RegionKind::Polygon => {
                let _ = writeln!(s, "<polygon points=\"{}\"/>", points_attr(&frame, v));
            }
        }
        s.push_str("</g>\n");
    }

    s.push_str("<g id=\"partitions\" fill=\"none\" stroke-width=\"2.5\" stroke-linejoin=\"round\">\n");
    for (i, part) in result.partitions.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let dash = DASHES[(i / COLORS.len() + i) % DASHES.len()];
        let _ = writeln!(s, "<g id=\"partition-{i}\" stroke=\"{color}\" stroke-dasharray=\"{dash}\">");
        for block in &part.parts {
            let pts: Vec<Point> = block.iter().filter(|&&j| j < ps.len()).map(|&j| ps[j].clone()).collect();
            let hull = convex_hull(&pts);
            match hull.kind() {
                RegionKind::Empty => {}
                RegionKind::SinglePoint => {
                    let (x, y) = frame.map(to_f64(&hull.vertices()[0]));
                    let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"{}\"/>", 12 + 3 * (i % 5));
                }
                RegionKind::Segment => {
                    let _ = writeln!(s, "<polyline points=\"{}\"/>", points_attr(&frame, hull.vertices()));
                }
                RegionKind::Polygon => {
                    let _ = writeln!(s, "<polygon points=\"{}\"/>", points_attr(&frame, hull.vertices()));
                }
            }
        }
        s.push_str("</g>\n");
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"witnesses\" stroke-width=\"2\">\n");
    for (i, w) in witnesses.iter().enumerate() {
        if let Some(w) = w {
            let color = COLORS[i % COLORS.len()];
            let (x, y) = frame.map(to_f64(w));
            let _ = writeln!(
                s,
                "<rect x=\"{x}\" y=\"{y}\" width=\"10\" height=\"10\" transform=\"translate(-5 -5) rotate(45 {x} {y})\" fill=\"none\" stroke=\"{color}\"/>"
            );
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"points\" font-family=\"sans-serif\" font-size=\"22\">\n");
    for (i, p) in ps.iter().enumerate() {
        let (x, y) = frame.map(to_f64(p));
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"5\" fill=\"#000000\"/>");
        let _ = writeln!(s, "<text x=\"{x}\" y=\"{y}\" dx=\"8\" dy=\"-8\" fill=\"#000000\">{i}</text>");
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

pub fn render_svg(ps: &PointSet, result: &ResultDocument, path: &Path) -> Result<()> {
    let s = svg_string(ps, result)?;
    std::fs::write(path, s)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::json::ResultDocument;
    use crate::error::Error;

    fn triangle() -> PointSet {
        PointSet::from_ints(&[(0, 0), (10, 0), (0, 10)])
    }

    #[test]
    fn empty_partition_list() {
        let ps = triangle();
        let doc = ResultDocument::from_enumeration(&ps, &[]);
        let s = svg_string(&ps, &doc).unwrap();
        assert!(s.contains("<g id=\"points\""));
        assert!(s.contains("<g id=\"c3\""));
        assert!(!s.contains("partition-0"));
        assert_eq!(s.matches("<text").count(), 3);
        assert_eq!(s, svg_string(&ps, &doc).unwrap());
    }

    #[test]
    fn fixed_precision_coordinates() {
        let ps = triangle();
        let s = svg_string(&ps, &ResultDocument::from_enumeration(&ps, &[])).unwrap();
        // Square data box maps exactly onto the margins.
        assert!(s.contains("cx=\"60.000000\" cy=\"940.000000\""), "{s}");
        assert!(s.contains("cx=\"940.000000\" cy=\"940.000000\""));
        assert!(s.contains("cx=\"60.000000\" cy=\"60.000000\""));
    }

    #[test]
    fn unwritable_path() {
        let ps = triangle();
        let doc = ResultDocument::from_enumeration(&ps, &[]);
        let r = render_svg(&ps, &doc, Path::new("/nonexistent-dir/x/out.svg"));
        assert!(matches!(r, Err(Error::Io(_))));
    }
}
