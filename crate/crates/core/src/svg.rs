//! SVG drawings of Newton polygons.
//!
//! One data unit is 40 pixels with a 20 pixel margin, and the y axis points
//! up so larger valuations sit higher. Output is a pure function of the
//! input.

use std::fmt::Write;

use crate::newton::{LatticePoint, NewtonPolygon};

const UNIT: u64 = 40;
const MARGIN: u64 = 20;
const TITLE_HEIGHT: u64 = 24;

struct Frame {
    max_x: u64,
    max_y: u64,
    top: u64,
}

impl Frame {
    fn new(points: &[LatticePoint], top: u64) -> Frame {
        Frame {
            max_x: points.iter().map(|p| p.x).max().unwrap_or(0).max(1),
            max_y: points.iter().map(|p| p.y).max().unwrap_or(0).max(1),
            top,
        }
    }

    fn width(&self) -> u64 {
        2 * MARGIN + UNIT * self.max_x
    }

    fn height(&self) -> u64 {
        2 * MARGIN + UNIT * self.max_y
    }

    fn px(&self, x: u64) -> u64 {
        MARGIN + UNIT * x
    }

    fn py(&self, y: u64) -> u64 {
        self.top + MARGIN + UNIT * (self.max_y - y)
    }
}

fn draw(out: &mut String, frame: &Frame, np: &NewtonPolygon, points: &[LatticePoint]) {
    out.push_str("<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for x in 0..=frame.max_x {
        let _ = writeln!(
            out,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>",
            frame.px(x),
            frame.py(frame.max_y),
            frame.py(0)
        );
    }
    for y in 0..=frame.max_y {
        let _ = writeln!(
            out,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>",
            frame.px(0),
            frame.py(y),
            frame.px(frame.max_x)
        );
    }
    out.push_str("</g>\n");

    if !np.vertices.is_empty() {
        let pixels: Vec<String> = np
            .vertices
            .iter()
            .map(|v| format!("{},{}", frame.px(v.x), frame.py(v.y)))
            .collect();
        let data: Vec<String> = np.vertices.iter().map(|v| format!("{},{}", v.x, v.y)).collect();
        let _ = writeln!(
            out,
            "<polyline class=\"hull\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"{}\" data-points=\"{}\"/>",
            pixels.join(" "),
            data.join(" ")
        );
    }

    for p in points {
        let is_vertex = np.vertices.contains(p);
        let (class, r, fill) = if is_vertex {
            ("vertex", 6, "#1f4e9c")
        } else {
            ("point", 4, "#888888")
        };
        let _ = writeln!(
            out,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\" data-x=\"{}\" data-y=\"{}\"/>",
            frame.px(p.x),
            frame.py(p.y),
            p.x,
            p.y
        );
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn header(out: &mut String, width: u64, height: u64) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
}

/// A single polygon together with all finite coefficient points.
pub fn render_svg(np: &NewtonPolygon, points: &[LatticePoint]) -> String {
    let frame = Frame::new(points, 0);
    let mut out = String::new();
    header(&mut out, frame.width(), frame.height());
    draw(&mut out, &frame, np, points);
    out.push_str("</svg>\n");
    out
}

/// Titled panels stacked vertically in one document.
pub fn render_panels(panels: &[(String, NewtonPolygon, Vec<LatticePoint>)]) -> String {
    let mut top = 0;
    let mut width = 2 * MARGIN + UNIT;
    let mut body = String::new();
    for (title, np, points) in panels {
        let _ = writeln!(
            body,
            "<text x=\"{MARGIN}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\">{}</text>",
            top + TITLE_HEIGHT - 6,
            escape(title)
        );
        let frame = Frame::new(points, top + TITLE_HEIGHT);
        draw(&mut body, &frame, np, points);
        width = width.max(frame.width());
        top += TITLE_HEIGHT + frame.height();
    }
    let height = top.max(2 * MARGIN + UNIT);
    let mut out = String::new();
    header(&mut out, width, height);
    out.push_str(&body);
    out.push_str("</svg>\n");
    out
}
