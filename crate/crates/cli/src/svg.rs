//! Minimal layered SVG plots in the complex plane.

use std::path::{Path, PathBuf};

use ncomp::nnc::Ellipse;
use ncomp::C64;
use xmlwriter::{Options, XmlWriter};

use crate::error::CliResult;
use crate::table::write_file;

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 0.10;

#[derive(Debug, Clone)]
enum Shape {
    Dots { points: Vec<C64>, radius: f64, fill: String },
    Line { points: Vec<C64>, stroke: String, width: f64, closed: bool, fill: Option<String> },
    Ellipse { ellipse: Ellipse, stroke: String },
    Marker { at: C64, fill: String },
}

#[derive(Debug, Clone)]
struct Layer {
    id: String,
    shapes: Vec<Shape>,
}

/// Layers are drawn in insertion order; the view box covers every point
/// plus a 10% margin.
#[derive(Debug, Clone, Default)]
pub struct Plot {
    layers: Vec<Layer>,
    legend: Vec<String>,
}

impl Plot {
    pub fn new() -> Self {
        Self::default()
    }

    fn layer(&mut self, id: &str) -> &mut Vec<Shape> {
        if let Some(i) = self.layers.iter().position(|l| l.id == id) {
            return &mut self.layers[i].shapes;
        }
        self.layers.push(Layer {
            id: id.to_string(),
            shapes: Vec::new(),
        });
        &mut self.layers.last_mut().expect("just pushed").shapes
    }

    pub fn dots(&mut self, layer: &str, points: &[C64], radius: f64, fill: &str) {
        self.layer(layer).push(Shape::Dots {
            points: points.to_vec(),
            radius,
            fill: fill.into(),
        });
    }

    pub fn polyline(&mut self, layer: &str, points: &[C64], stroke: &str, width: f64) {
        self.layer(layer).push(Shape::Line {
            points: points.to_vec(),
            stroke: stroke.into(),
            width,
            closed: false,
            fill: None,
        });
    }

    pub fn polygon(&mut self, layer: &str, points: &[C64], stroke: &str, fill: Option<&str>) {
        self.layer(layer).push(Shape::Line {
            points: points.to_vec(),
            stroke: stroke.into(),
            width: 1.5,
            closed: true,
            fill: fill.map(Into::into),
        });
    }

    pub fn ellipse(&mut self, layer: &str, ellipse: Ellipse, stroke: &str) {
        self.layer(layer).push(Shape::Ellipse {
            ellipse,
            stroke: stroke.into(),
        });
    }

    pub fn marker(&mut self, layer: &str, at: C64, fill: &str) {
        self.layer(layer).push(Shape::Marker { at, fill: fill.into() });
    }

    pub fn legend(&mut self, line: impl Into<String>) {
        self.legend.push(line.into());
    }

    fn bounds(&self) -> (C64, C64) {
        let mut lo = C64::new(f64::INFINITY, f64::INFINITY);
        let mut hi = C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut add = |p: C64| {
            if p.re.is_finite() && p.im.is_finite() {
                lo = C64::new(lo.re.min(p.re), lo.im.min(p.im));
                hi = C64::new(hi.re.max(p.re), hi.im.max(p.im));
            }
        };
        for layer in &self.layers {
            for s in &layer.shapes {
                match s {
                    Shape::Dots { points, .. } | Shape::Line { points, .. } => points.iter().for_each(|&p| add(p)),
                    Shape::Ellipse { ellipse, .. } => ellipse.boundary(64).into_iter().for_each(&mut add),
                    Shape::Marker { at, .. } => add(*at),
                }
            }
        }
        if !lo.re.is_finite() {
            return (C64::new(-1.0, -1.0), C64::new(1.0, 1.0));
        }
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-9);
        let pad = C64::new(MARGIN * span, MARGIN * span);
        (lo - pad, hi + pad)
    }

    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let scale = WIDTH / (hi.re - lo.re);
        let height = (hi.im - lo.im) * scale;
        let map = |p: C64| ((p.re - lo.re) * scale, (hi.im - p.im) * scale);
        let path = |pts: &[C64], closed: bool| {
            let mut d = String::new();
            for (i, &p) in pts.iter().enumerate() {
                let (x, y) = map(p);
                d.push_str(&format!("{}{x:.3},{y:.3} ", if i == 0 { "M" } else { "L" }));
            }
            if closed {
                d.push('Z');
            }
            d.trim_end().to_string()
        };

        let mut w = XmlWriter::new(Options::default());
        w.start_element("svg");
        w.write_attribute("xmlns", "http://www.w3.org/2000/svg");
        w.write_attribute("viewBox", &format!("0 0 {WIDTH:.3} {height:.3}"));
        w.write_attribute("width", &format!("{WIDTH:.0}"));
        w.write_attribute("height", &format!("{height:.0}"));
        w.start_element("rect");
        w.write_attribute("width", "100%");
        w.write_attribute("height", "100%");
        w.write_attribute("fill", "white");
        w.end_element();
        for layer in &self.layers {
            w.start_element("g");
            w.write_attribute("id", &layer.id);
            for s in &layer.shapes {
                match s {
                    Shape::Dots { points, radius, fill } => {
                        for &p in points {
                            let (x, y) = map(p);
                            w.start_element("circle");
                            w.write_attribute("cx", &format!("{x:.3}"));
                            w.write_attribute("cy", &format!("{y:.3}"));
                            w.write_attribute("r", &format!("{radius:.2}"));
                            w.write_attribute("fill", fill);
                            w.end_element();
                        }
                    }
                    Shape::Line { points, stroke, width, closed, fill } => {
                        if points.is_empty() {
                            continue;
                        }
                        w.start_element("path");
                        w.write_attribute("d", &path(points, *closed));
                        w.write_attribute("stroke", stroke);
                        w.write_attribute("stroke-width", &format!("{width:.2}"));
                        w.write_attribute("fill", fill.as_deref().unwrap_or("none"));
                        w.end_element();
                    }
                    Shape::Ellipse { ellipse, stroke } => {
                        let (cx, cy) = map(ellipse.center());
                        let (alpha, beta) = ellipse.semi_axes();
                        w.start_element("ellipse");
                        w.write_attribute("cx", &format!("{cx:.3}"));
                        w.write_attribute("cy", &format!("{cy:.3}"));
                        w.write_attribute("rx", &format!("{:.3}", alpha * scale));
                        w.write_attribute("ry", &format!("{:.3}", beta * scale));
                        w.write_attribute(
                            "transform",
                            &format!("rotate({:.4} {cx:.3} {cy:.3})", -ellipse.rotation().to_degrees()),
                        );
                        w.write_attribute("stroke", stroke);
                        w.write_attribute("stroke-width", "0.8");
                        w.write_attribute("fill", "none");
                        w.end_element();
                    }
                    Shape::Marker { at, fill } => {
                        let (x, y) = map(*at);
                        w.start_element("path");
                        w.write_attribute(
                            "d",
                            &format!("M{:.3},{y:.3} L{:.3},{y:.3} M{x:.3},{:.3} L{x:.3},{:.3}", x - 6.0, x + 6.0, y - 6.0, y + 6.0),
                        );
                        w.write_attribute("stroke", fill);
                        w.write_attribute("stroke-width", "2");
                        w.end_element();
                    }
                }
            }
            w.end_element();
        }
        w.start_element("g");
        w.write_attribute("id", "legend");
        for (i, line) in self.legend.iter().enumerate() {
            w.start_element("text");
            w.write_attribute("x", "8");
            w.write_attribute("y", &format!("{}", 18 + 16 * i));
            w.write_attribute("font-family", "sans-serif");
            w.write_attribute("font-size", "13");
            w.write_text(line);
            w.end_element();
        }
        w.end_element();
        w.end_document()
    }

    pub fn write(&self, dir: &Path, name: &str) -> CliResult<PathBuf> {
        let path = dir.join(name);
        write_file(&path, self.render().as_bytes())?;
        Ok(path)
    }
}
