//! TSV and JSON renderings of replacement reports. Vertex ids are shifted back
//! into the input's id base.

use std::fmt::Write as _;

use rsp_core::{FailedElement, ReplacementPaths, ReplacementReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

/// Integral values print as integers, everything else with 9 significant digits.
pub fn format_number(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 {
        return format!("{}", x as i64);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn json_number(x: f64) -> serde_json::Number {
    if x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 {
        serde_json::Number::from(x as i64)
    } else {
        let rounded: f64 = format_number(x).parse().expect("formatted float parses");
        serde_json::Number::from_f64(rounded).expect("finite")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonSwap {
    pub u: usize,
    pub v: usize,
    pub weight: serde_json::Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonElement {
    pub kind: String,
    pub index: usize,
    pub distance: Option<serde_json::Number>,
    pub swap: Option<JsonSwap>,
    pub path: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub elements: Vec<JsonElement>,
}

/// One row per failed element, in output order.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub kind: &'static str,
    pub index: usize,
    pub distance: Option<f64>,
    /// `(x, y, weight)` in output ids.
    pub swap: Option<(usize, usize, f64)>,
    pub path: Option<Vec<usize>>,
}

pub fn rows<'a>(
    solution: &'a ReplacementPaths<'_>,
    reports: impl IntoIterator<Item = &'a ReplacementReport>,
    id_base: usize,
    with_paths: bool,
) -> Vec<Row> {
    reports
        .into_iter()
        .map(|r| {
            let kind = match r.element {
                FailedElement::Edge { .. } => "edge",
                FailedElement::Vertex { .. } => "node",
            };
            let path = if with_paths {
                solution
                    .path(r)
                    .map(|p| p.into_iter().map(|v| v + id_base).collect())
            } else {
                None
            };
            Row {
                kind,
                index: r.element.index(),
                distance: r.distance(),
                swap: r.swap.map(|s| (s.x + id_base, s.y + id_base, s.weight)),
                path,
            }
        })
        .collect()
}

pub fn render_tsv(rows: &[Row], with_paths: bool) -> String {
    let mut out = String::from("kind\tindex\tdistance\tswap_u\tswap_v\tswap_w");
    if with_paths {
        out.push_str("\tpath");
    }
    out.push('\n');
    for row in rows {
        let distance = row
            .distance
            .map_or_else(|| "INF".to_string(), format_number);
        write!(out, "{}\t{}\t{}", row.kind, row.index, distance).unwrap();
        match row.swap {
            Some((u, v, w)) => write!(out, "\t{u}\t{v}\t{}", format_number(w)).unwrap(),
            None => out.push_str("\t-\t-\t-"),
        }
        if with_paths {
            out.push('\t');
            match &row.path {
                Some(p) => {
                    let ids: Vec<String> = p.iter().map(usize::to_string).collect();
                    out.push_str(&ids.join(";"));
                }
                None => out.push('-'),
            }
        }
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[Row]) -> JsonReport {
    JsonReport {
        elements: rows
            .iter()
            .map(|row| JsonElement {
                kind: row.kind.to_string(),
                index: row.index,
                distance: row.distance.map(json_number),
                swap: row.swap.map(|(u, v, w)| JsonSwap {
                    u,
                    v,
                    weight: json_number(w),
                }),
                path: row.path.clone(),
            })
            .collect(),
    }
}

pub fn render_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(rows)).expect("report serializes");
    s.push('\n');
    s
}
