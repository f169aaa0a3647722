//! Tabular results and their CSV, JSON and SVG renderings.

use gamow_core::Complex64;
use serde_json::{json, Map, Value};

use crate::number::format_real;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_real(*v),
        }
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Cell::Int(v) => *v as f64,
            Cell::Real(v) => *v,
        }
    }

    fn to_json(self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Real(v) => real_json(v),
        }
    }
}

/// The printed value, re-parsed, so JSON and CSV carry identical numbers.
fn real_json(x: f64) -> Value {
    let text = format_real(x);
    if !x.is_finite() {
        return Value::String(text);
    }
    let parsed: f64 = text.parse().expect("formatted number parses");
    json!(parsed)
}

fn complex_json(z: Option<Complex64>) -> Value {
    match z {
        Some(z) => json!({ "re": real_json(z.re), "im": real_json(z.im) }),
        None => Value::Null,
    }
}

/// How the SVG rendering draws a table.
#[derive(Debug, Clone, PartialEq)]
pub enum Plot {
    /// One polyline per listed column against column `x`.
    Columns { x: usize, ys: Vec<usize> },
    /// One polyline per group of rows sharing column `group`, `y` against `x`.
    Grouped { group: usize, x: usize, y: usize },
    /// The parametric curve `(column re, column im)`.
    Argand { re: usize, im: usize },
}

/// Run parameters echoed in JSON output.
#[derive(Debug, Clone, PartialEq)]
pub struct Meta {
    pub command: &'static str,
    pub v0: f64,
    pub a: f64,
    pub ell: u32,
    pub k_alpha: Option<Complex64>,
    pub eps: Option<Complex64>,
    pub mode: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub meta: Meta,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub plot: Plot,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let m = &self.meta;
        let mut meta = Map::new();
        meta.insert("command".into(), json!(m.command));
        meta.insert("v0".into(), real_json(m.v0));
        meta.insert("a".into(), real_json(m.a));
        meta.insert("ell".into(), json!(m.ell));
        meta.insert("k_alpha".into(), complex_json(m.k_alpha));
        meta.insert("eps".into(), complex_json(m.eps));
        meta.insert("mode".into(), m.mode.map_or(Value::Null, |s| json!(s)));
        meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect()))
            .collect();
        let doc = json!({
            "schema": SCHEMA_VERSION,
            "meta": Value::Object(meta),
            "columns": self.columns,
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("json serialization");
        text.push('\n');
        text
    }

    fn traces(&self) -> Vec<(String, Vec<(f64, f64)>)> {
        let col = |row: &[Cell], i: usize| row[i].as_f64();
        match &self.plot {
            Plot::Columns { x, ys } => ys
                .iter()
                .map(|&y| {
                    let pts = self.rows.iter().map(|r| (col(r, *x), col(r, y))).collect();
                    (self.columns[y].to_string(), pts)
                })
                .collect(),
            Plot::Argand { re, im } => {
                let pts = self
                    .rows
                    .iter()
                    .map(|r| (col(r, *re), col(r, *im)))
                    .collect();
                vec![("argand".to_string(), pts)]
            }
            Plot::Grouped { group, x, y } => {
                let mut out: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
                for r in &self.rows {
                    let key = format!("{}={}", self.columns[*group], r[*group].render());
                    match out.last_mut() {
                        Some((k, pts)) if *k == key => pts.push((col(r, *x), col(r, *y))),
                        _ => out.push((key, vec![(col(r, *x), col(r, *y))])),
                    }
                }
                out
            }
        }
    }

    pub fn to_svg(&self) -> String {
        const W: f64 = 800.0;
        const H: f64 = 600.0;
        const PAD: f64 = 40.0;
        const COLORS: [&str; 6] = [
            "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
        ];
        let traces = self.traces();
        let finite = traces
            .iter()
            .flat_map(|(_, p)| p.iter())
            .filter(|(x, y)| x.is_finite() && y.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in finite {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !(x1 > x0) {
            x0 -= 0.5;
            x1 += 0.5;
        }
        if !(y1 > y0) {
            y0 -= 0.5;
            y1 += 0.5;
        }
        let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
        let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);
        let mut out = format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n"
        );
        out.push_str(&format!(
            "<title>{} v0={} a={} ell={}</title>\n",
            self.meta.command,
            format_real(self.meta.v0),
            format_real(self.meta.a),
            self.meta.ell
        ));
        for (i, (name, pts)) in traces.iter().enumerate() {
            let coords: Vec<String> = pts
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.3},{:.3}", sx(x), sy(y)))
                .collect();
            out.push_str(&format!(
                "<polyline id=\"{name}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                COLORS[i % COLORS.len()],
                coords.join(" ")
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}
