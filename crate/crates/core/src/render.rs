//! SVG rendering of geometric graphs.
//!
//! Plane coordinates have y pointing up; the drawing flips them so north is
//! at the top. The view box covers the node bounding box plus a 10% margin.

use std::fmt::Write;

use crate::error::Result;
use crate::graph::GeometricGraph;

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Draw the circle centred at `v` with radius `d(u, v)` for this `(u, v)` pair.
    pub highlight: Option<(usize, usize)>,
}

pub fn render_svg(graph: &GeometricGraph, options: &RenderOptions) -> Result<String> {
    let nodes = graph.nodes();
    if let Some((u, v)) = options.highlight {
        nodes.check_index(u)?;
        nodes.check_index(v)?;
    }
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in nodes.points() {
        min_x = min_x.min(p.x());
        max_x = max_x.max(p.x());
        min_y = min_y.min(p.y());
        max_y = max_y.max(p.y());
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.1 * span;
    let (width, height) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let radius = span / 80.0;
    let stroke = span / 400.0;
    let font = span / 30.0;

    // flipped y: svg_y = -y
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
        min_x - margin,
        -(max_y + margin),
        width,
        height,
        (600.0 * height / width).round()
    )
    .unwrap();
    writeln!(
        svg,
        r#"<title>{} k={} ({})</title>"#,
        graph.family(),
        graph.k(),
        if graph.is_directed() { "directed" } else { "undirected" }
    )
    .unwrap();
    if graph.is_directed() {
        writeln!(
            svg,
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#
        )
        .unwrap();
    }
    if let Some((u, v)) = options.highlight {
        let (pu, pv) = (nodes.point(u), nodes.point(v));
        writeln!(
            svg,
            r#"<circle class="cv" cx="{}" cy="{}" r="{}" fill="none" stroke="gray" stroke-width="{}" stroke-dasharray="{} {}"/>"#,
            pv.x(),
            -pv.y(),
            pu.distance(pv),
            stroke,
            4.0 * stroke,
            4.0 * stroke
        )
        .unwrap();
    }
    svg.push_str("<g class=\"edges\" stroke=\"black\">\n");
    for &(a, b) in graph.edges() {
        let (pa, pb) = (nodes.point(a), nodes.point(b));
        write!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{}""#,
            pa.x(),
            -pa.y(),
            pb.x(),
            -pb.y(),
            stroke
        )
        .unwrap();
        if graph.is_directed() {
            svg.push_str(r#" marker-end="url(#arrow)""#);
        }
        svg.push_str("/>\n");
    }
    svg.push_str("</g>\n<g class=\"nodes\">\n");
    for (id, p) in nodes.iter() {
        writeln!(
            svg,
            r#"<circle class="node" cx="{}" cy="{}" r="{}" fill="black"/><text x="{}" y="{}" font-size="{}">{}</text>"#,
            p.x(),
            -p.y(),
            radius,
            p.x() + 1.5 * radius,
            -p.y() - 1.5 * radius,
            font,
            escape(id)
        )
        .unwrap();
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
