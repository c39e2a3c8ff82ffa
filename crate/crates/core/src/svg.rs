//! Deterministic SVG rendering of 2D sets: fixed viewBox from the joint
//! bounding box plus a 10% margin, sets drawn in input order, coordinates
//! formatted with a fixed precision so identical inputs give identical bytes.

use crate::error::{Error, Result};
use crate::polytope::Polytope;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Clone, Debug, Default)]
pub struct SvgStyle {
    pub label_vertices: bool,
    pub width: Option<u32>,
}

pub struct SvgSet<'a> {
    pub polytope: &'a Polytope,
    pub label: String,
}

pub fn render_svg(sets: &[SvgSet<'_>], style: &SvgStyle) -> Result<String> {
    for s in sets {
        if s.polytope.dim() != 2 {
            return Err(Error::UnsupportedDimension(s.polytope.dim()));
        }
    }
    let width = style.width.unwrap_or(480);
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for s in sets {
        for v in s.polytope.vertices() {
            for (c, x) in v.0.iter().enumerate() {
                let x = x.to_f64();
                min[c] = min[c].min(x);
                max[c] = max[c].max(x);
            }
        }
    }
    let (view, scale, off) = if sets.is_empty() {
        ("0 0 1 1".to_string(), 1.0, [0.0, 0.0])
    } else {
        let w = (max[0] - min[0]).max(1e-6);
        let h = (max[1] - min[1]).max(1e-6);
        let mx = 0.1 * w;
        let my = 0.1 * h;
        let vw = w + 2.0 * mx;
        let vh = h + 2.0 * my;
        let scale = width as f64 / vw;
        (
            format!("0 0 {:.4} {:.4}", vw * scale, vh * scale),
            scale,
            [min[0] - mx, min[1] - my],
        )
    };
    let height = if sets.is_empty() {
        width
    } else {
        let parts: Vec<f64> = view.split(' ').map(|t| t.parse().unwrap()).collect();
        parts[3].ceil() as u32
    };
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"{view}\">\n"
    ));
    // SVG y grows downward; flip around the viewBox.
    let tx = |x: f64| (x - off[0]) * scale;
    let ty_height: f64 = view.split(' ').nth(3).map(|t| t.parse().unwrap()).unwrap_or(1.0);
    let ty = |y: f64| ty_height - (y - off[1]) * scale;
    for (i, s) in sets.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let verts = s.polytope.vertices();
        match verts.len() {
            1 => {
                let v = &verts[0];
                out.push_str(&format!(
                    "  <circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"3\" fill=\"{color}\"><title>{}</title></circle>\n",
                    tx(v.0[0].to_f64()),
                    ty(v.0[1].to_f64()),
                    s.label
                ));
            }
            _ => {
                let mut d = String::new();
                for (k, v) in verts.iter().enumerate() {
                    let cmd = if k == 0 { 'M' } else { 'L' };
                    d.push_str(&format!(
                        "{cmd} {:.4} {:.4} ",
                        tx(v.0[0].to_f64()),
                        ty(v.0[1].to_f64())
                    ));
                }
                d.push('Z');
                out.push_str(&format!(
                    "  <path d=\"{d}\" fill=\"{color}\" fill-opacity=\"0.15\" stroke=\"{color}\" stroke-width=\"1.5\"><title>{}</title></path>\n",
                    s.label
                ));
            }
        }
        if style.label_vertices {
            for v in verts {
                out.push_str(&format!(
                    "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"9\">({}, {})</text>\n",
                    tx(v.0[0].to_f64()) + 3.0,
                    ty(v.0[1].to_f64()) - 3.0,
                    v.0[0],
                    v.0[1]
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
