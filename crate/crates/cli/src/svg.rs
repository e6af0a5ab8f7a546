//! Static SVG 1.1 drawings of triangulations and slice arrangements.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;

use frieze_core::exactgeom::{CellComplex, Point, Rational, Window};
use frieze_core::{QuiddityCycle, Triangulation};
use num_traits::ToPrimitive;

const PAD: f64 = 28.0;

fn header(width: f64, height: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    )
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Regular `n`-gon with vertex 1 at the top and vertices numbered
/// clockwise; each vertex is labelled by its cycle entry.
pub fn triangulation(c: &QuiddityCycle, t: &Triangulation, radius: f64) -> String {
    let n = t.n();
    let side = 2.0 * (radius + PAD);
    let pos = |k: usize, r: f64| {
        let a = -FRAC_PI_2 + TAU * (k - 1) as f64 / n as f64;
        (side / 2.0 + r * a.cos(), side / 2.0 + r * a.sin())
    };
    let mut out = header(side, side);
    out.push_str(
        "<g fill=\"#dfe8f2\" stroke=\"#1b3a5c\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n",
    );
    for tri in t.triangles() {
        let pts: Vec<String> = tri
            .iter()
            .map(|&k| {
                let (x, y) = pos(k, radius);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon class=\"triangle\" points=\"{}\"/>",
            pts.join(" ")
        );
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n");
    for k in 1..=n {
        let (x, y) = pos(k, radius + 14.0);
        let _ = writeln!(
            out,
            "<text x=\"{x:.2}\" y=\"{y:.2}\">{}</text>",
            c.entry(k as isize)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Faces of the complex inside its window. Triangles are pale; any other
/// face is highlighted.
pub fn arrangement(cx: &CellComplex, scale: f64) -> String {
    let w: &Window = &cx.window;
    let (x0, x1, y0, y1) = (f(&w.x_min), f(&w.x_max), f(&w.y_min), f(&w.y_max));
    let (width, height) = ((x1 - x0) * scale + 2.0 * PAD, (y1 - y0) * scale + 2.0 * PAD);
    let map = |p: &Point| ((f(&p.x) - x0) * scale + PAD, (y1 - f(&p.y)) * scale + PAD);
    let mut out = header(width, height);
    out.push_str("<g stroke=\"#222222\" stroke-width=\"0.8\" stroke-linejoin=\"round\">\n");
    for face in &cx.faces {
        let pts: Vec<String> = cx
            .face_points(face)
            .iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let (class, fill) = if face.vertices.len() == 3 {
            ("triangle", "#eef3e6")
        } else {
            ("polygon", "#f2b8a0")
        };
        let _ = writeln!(
            out,
            "<polygon class=\"{class}\" fill=\"{fill}\" points=\"{}\"/>",
            pts.join(" ")
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
