//! File formats: the point CSV, the edge-list and report JSON documents, and
//! certificate JSON lines. Every format carries `format: 1` and parsers
//! reject other versions. Numbers in the CSV are written with 17 significant
//! digits so pipelines are lossless at double precision; writes go through a
//! temp file and rename.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::analysis::SpannerReport;
use crate::certificates::Certificate;
use crate::geometry::Point;
use crate::graph::Graph;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse: {0}")]
    Parse(String),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),
    #[error("point file has {points} points but graph expects {graph}")]
    DimensionMismatch { points: usize, graph: usize },
}

/// Writes via a temporary file in the target directory plus rename, so
/// readers never observe partial output.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), IoError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(d) => {
            fs::create_dir_all(d)?;
            tempfile::NamedTempFile::new_in(d)?
        }
        None => tempfile::NamedTempFile::new_in(".")?,
    };
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| IoError::Io(e.error))?;
    Ok(())
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn points_to_csv(points: &[Point]) -> String {
    let mut out = String::from("# format: 1\nx,y\n");
    for p in points {
        out.push_str(&fmt_g17(p.x));
        out.push(',');
        out.push_str(&fmt_g17(p.y));
        out.push('\n');
    }
    out
}

pub fn parse_points_csv(text: &str) -> Result<Vec<Point>, IoError> {
    let mut points = Vec::new();
    let mut saw_header = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("format:") {
                let version: u32 = v.trim().parse().map_err(|_| {
                    IoError::Parse(format!("line {}: bad format version", lineno + 1))
                })?;
                if version != FORMAT_VERSION {
                    return Err(IoError::UnsupportedVersion(version));
                }
            }
            continue;
        }
        if !saw_header {
            if line != "x,y" {
                return Err(IoError::Parse(format!(
                    "line {}: expected header `x,y`, got `{line}`",
                    lineno + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let (xs, ys) = line.split_once(',').ok_or_else(|| {
            IoError::Parse(format!("line {}: expected `x,y` pair", lineno + 1))
        })?;
        let x: f64 = xs.trim().parse().map_err(|_| {
            IoError::Parse(format!("line {}: bad x coordinate", lineno + 1))
        })?;
        let y: f64 = ys.trim().parse().map_err(|_| {
            IoError::Parse(format!("line {}: bad y coordinate", lineno + 1))
        })?;
        if !x.is_finite() || !y.is_finite() {
            return Err(IoError::Parse(format!(
                "line {}: coordinates must be finite",
                lineno + 1
            )));
        }
        points.push(Point::new(x, y));
    }
    if !saw_header {
        return Err(IoError::Parse("missing `x,y` header".into()));
    }
    Ok(points)
}

pub fn write_points_csv(path: &Path, points: &[Point]) -> Result<(), IoError> {
    atomic_write(path, points_to_csv(points).as_bytes())
}

pub fn read_points_csv(path: &Path) -> Result<Vec<Point>, IoError> {
    parse_points_csv(&fs::read_to_string(path)?)
}

/// The edge-list document written by the build command.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphFile {
    pub format: u32,
    pub n: usize,
    pub theta_rad: f64,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn new(graph: &Graph, theta_rad: f64) -> GraphFile {
        GraphFile {
            format: FORMAT_VERSION,
            n: graph.n(),
            theta_rad,
            edges: graph.edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, IoError> {
        if self.format != FORMAT_VERSION {
            return Err(IoError::UnsupportedVersion(self.format));
        }
        for &(i, j) in &self.edges {
            if i >= self.n || j >= self.n || i == j {
                return Err(IoError::Parse(format!("bad edge ({i}, {j}) for n = {}", self.n)));
            }
        }
        Ok(Graph::new(self.n, self.edges.iter().copied()))
    }
}

pub fn write_graph_json(path: &Path, file: &GraphFile) -> Result<(), IoError> {
    let mut body = serde_json::to_string(file).expect("graph file serializes");
    body.push('\n');
    atomic_write(path, body.as_bytes())
}

pub fn read_graph_json(path: &Path) -> Result<GraphFile, IoError> {
    let text = fs::read_to_string(path)?;
    let file: GraphFile =
        serde_json::from_str(&text).map_err(|e| IoError::Parse(e.to_string()))?;
    if file.format != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(file.format));
    }
    Ok(file)
}

fn serialize_ratio<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str("inf")
    }
}

fn deserialize_ratio<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(f64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Num(x) => Ok(x),
        Raw::Text(s) if s == "inf" => Ok(f64::INFINITY),
        Raw::Text(s) => Err(D::Error::custom(format!("bad spanning ratio `{s}`"))),
    }
}

/// The analysis report document: the spanner metrics plus the aperture they
/// were measured at and the proven bound when one exists.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportFile {
    pub format: u32,
    #[serde(serialize_with = "serialize_ratio", deserialize_with = "deserialize_ratio")]
    pub spanning_ratio: f64,
    pub witness: (usize, usize),
    pub connected: bool,
    pub component_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub theta_rad: f64,
    pub bound: Option<f64>,
}

impl ReportFile {
    pub fn new(report: &SpannerReport, theta_rad: f64, bound: Option<f64>) -> ReportFile {
        ReportFile {
            format: FORMAT_VERSION,
            spanning_ratio: report.spanning_ratio,
            witness: report.witness,
            connected: report.connected,
            component_count: report.component_count,
            edge_count: report.edge_count,
            max_degree: report.max_degree,
            theta_rad,
            bound,
        }
    }
}

pub fn write_report_json(path: &Path, report: &ReportFile) -> Result<(), IoError> {
    let mut body = serde_json::to_string(report).expect("report serializes");
    body.push('\n');
    atomic_write(path, body.as_bytes())
}

pub fn read_report_json(path: &Path) -> Result<ReportFile, IoError> {
    let text = fs::read_to_string(path)?;
    let file: ReportFile =
        serde_json::from_str(&text).map_err(|e| IoError::Parse(e.to_string()))?;
    if file.format != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(file.format));
    }
    Ok(file)
}

pub fn certificates_to_jsonl(certs: &[Certificate]) -> String {
    let mut out = String::new();
    for c in certs {
        out.push_str(&serde_json::to_string(c).expect("certificate serializes"));
        out.push('\n');
    }
    out
}

pub fn write_certificates_jsonl(path: &Path, certs: &[Certificate]) -> Result<(), IoError> {
    atomic_write(path, certificates_to_jsonl(certs).as_bytes())
}
