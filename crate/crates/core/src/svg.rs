//! Static SVG figures of the unit square, `y` pointing up.

use crate::exact_geom::{approx, ConvexPoly, Point, Rect};
use std::fmt::Write as _;

pub const VIEWPORT: f64 = 1000.0;

fn sx(x: f64) -> f64 {
    x * VIEWPORT
}

fn sy(y: f64) -> f64 {
    (1.0 - y) * VIEWPORT
}

fn coords(p: &Point) -> String {
    format!("{:.3},{:.3}", sx(approx(&p.x)), sy(approx(&p.y)))
}

/// Accumulates shapes; `finish` wraps them with the square's frame.
#[derive(Debug, Clone, Default)]
pub struct Svg {
    body: String,
}

impl Svg {
    pub fn new() -> Svg {
        Svg::default()
    }

    pub fn polygon(&mut self, poly: &ConvexPoly, fill: &str, opacity: f64) -> &mut Self {
        let pts: Vec<String> = poly.vertices().iter().map(coords).collect();
        match pts.len() {
            0 => {}
            1 | 2 => {
                let (a, b) = (&pts[0], pts.last().expect("nonempty"));
                let (x1, y1) = a.split_once(',').expect("pair");
                let (x2, y2) = b.split_once(',').expect("pair");
                writeln!(
                    self.body,
                    r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{fill}" stroke-width="3"/>"#
                )
                .unwrap();
            }
            _ => {
                writeln!(
                    self.body,
                    r#"  <polygon points="{}" fill="{fill}" fill-opacity="{opacity}" stroke="black" stroke-width="1"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
        self
    }

    pub fn rect(&mut self, r: &Rect, fill: &str) -> &mut Self {
        let (x0, x1) = (sx(approx(&r.x_lo)), sx(approx(&r.x_hi)));
        let (y0, y1) = (sy(approx(&r.y_hi)), sy(approx(&r.y_lo)));
        writeln!(
            self.body,
            r#"  <rect x="{x0:.3}" y="{y0:.3}" width="{:.3}" height="{:.3}" fill="{fill}"/>"#,
            x1 - x0,
            y1 - y0
        )
        .unwrap();
        self
    }

    pub fn point(&mut self, p: &Point, fill: &str) -> &mut Self {
        let c = coords(p);
        let (x, y) = c.split_once(',').expect("pair");
        writeln!(self.body, r#"  <circle cx="{x}" cy="{y}" r="4" fill="{fill}"/>"#).unwrap();
        self
    }

    pub fn finish(&self) -> String {
        let v = VIEWPORT as u32;
        format!(
            concat!(
                r#"<?xml version="1.0" encoding="UTF-8"?>"#,
                "\n",
                r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{v}" height="{v}" viewBox="0 0 {v} {v}">"#,
                "\n",
                r#"  <rect x="0" y="0" width="{v}" height="{v}" fill="white" stroke="black" stroke-width="2"/>"#,
                "\n{body}</svg>\n"
            ),
            v = v,
            body = self.body
        )
    }
}
