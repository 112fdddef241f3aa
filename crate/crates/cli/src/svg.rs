//! Static SVG scatter of points per fiber parameter. No interactivity; the
//! plot is a batch artifact with deterministic bytes for a fixed input.

use num_traits::ToPrimitive;
use ramify_core::arith::rat::Rat;
use std::collections::BTreeMap;
use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

/// Scatter of (t, number of points emitted in the fiber over t).
pub fn fiber_scatter<'a>(ts: impl Iterator<Item = &'a Rat>) -> String {
    let mut counts: BTreeMap<Rat, u64> = BTreeMap::new();
    for t in ts {
        *counts.entry(t.clone()).or_default() += 1;
    }
    let mut doc = String::new();
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        doc,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    // axes
    let x0 = MARGIN;
    let x1 = WIDTH - MARGIN;
    let y0 = HEIGHT - MARGIN;
    let y1 = MARGIN;
    let _ = writeln!(
        doc,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        doc,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        doc,
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">fiber parameter t</text>",
        WIDTH / 2.0 - 50.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        doc,
        "<text x=\"12\" y=\"{}\" font-size=\"12\" transform=\"rotate(-90 12 {})\">points in fiber</text>",
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    if !counts.is_empty() {
        let tf: Vec<(f64, u64)> = counts
            .iter()
            .map(|(t, n)| (t.to_f64().unwrap_or(0.0), *n))
            .collect();
        let tmin = tf.iter().map(|(t, _)| *t).fold(f64::INFINITY, f64::min);
        let tmax = tf.iter().map(|(t, _)| *t).fold(f64::NEG_INFINITY, f64::max);
        let nmax = tf.iter().map(|(_, n)| *n).max().unwrap_or(1) as f64;
        let span = if tmax > tmin { tmax - tmin } else { 1.0 };
        for (t, n) in tf {
            let px = x0 + (t - tmin) / span * (x1 - x0);
            let py = y0 - (n as f64) / nmax * (y0 - y1);
            let _ = writeln!(
                doc,
                "<circle cx=\"{px}\" cy=\"{py}\" r=\"4\" fill=\"steelblue\"/>"
            );
        }
    }
    let _ = writeln!(doc, "</svg>");
    doc
}
