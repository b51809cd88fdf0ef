//! Plain-text formats for complexes, point clouds and edge lists.
//!
//! * complex: a header `dim=<d> vertices=<n> max_dim=<m>` then one face per
//!   line as space-separated vertex indices;
//! * point cloud: CSV, one point per row, 17 significant digits;
//! * edge list: a header `n=<count>` then `u v` per line.
//!
//! Blank lines and lines starting with `#` are skipped by every parser.

use std::fmt::Write as _;

use crate::complex::{DensityKind, Graph, PointCloud, SimplicialComplex};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header_value<T: std::str::FromStr>(line: usize, fields: &[(&str, &str)], key: &str) -> Result<T> {
    let raw = fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| parse_err(line, format!("missing {key}=")))?;
    raw.parse().map_err(|_| parse_err(line, format!("bad value for {key}: {raw:?}")))
}

fn header_fields(line: &str) -> Vec<(&str, &str)> {
    line.split_whitespace().filter_map(|f| f.split_once('=')).collect()
}

pub fn complex_to_string(c: &SimplicialComplex) -> String {
    let mut out = format!("dim={} vertices={} max_dim={}\n", c.dimension(), c.vertex_count(), c.max_dim());
    for dim in 0..=c.max_dim() {
        for face in c.faces(dim).iter() {
            let words: Vec<String> = face.iter().map(u32::to_string).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Reads a complex; faces are closed downward, so listing facets suffices.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let fields = header_fields(header);
    let n: usize = header_value(hl, &fields, "vertices")?;
    let max_dim: usize = header_value(hl, &fields, "max_dim")?;
    let mut simplices = Vec::new();
    for (line, l) in lines {
        let face = l
            .split_whitespace()
            .map(|w| w.parse::<usize>().map_err(|_| parse_err(line, format!("bad vertex {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if face.len() > max_dim + 1 {
            return Err(parse_err(line, format!("face exceeds max_dim {max_dim}")));
        }
        if let Some(&v) = face.iter().find(|&&v| v >= n) {
            return Err(parse_err(line, format!("vertex {v} out of range")));
        }
        simplices.push(face);
    }
    SimplicialComplex::from_simplices(n, &simplices, max_dim)
}

pub fn points_to_csv(pts: &PointCloud) -> String {
    let mut out = String::new();
    for p in pts.points() {
        for (i, x) in p.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{x:.16e}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_points_csv(text: &str) -> Result<PointCloud> {
    let mut dim = None;
    let mut coords = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .split(',')
            .map(|w| w.trim().parse::<f64>().map_err(|_| parse_err(line, format!("bad number {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match dim {
            None => dim = Some(row.len()),
            Some(d) if d != row.len() => {
                return Err(parse_err(line, format!("expected {d} coordinates, got {}", row.len())));
            }
            _ => {}
        }
        coords.extend(row);
    }
    let dim = dim.ok_or_else(|| parse_err(1, "no points"))?;
    PointCloud::new(dim, coords, DensityKind::External)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let n: usize = header_value(hl, &header_fields(header), "n")?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let ends: Vec<usize> = l
            .split_whitespace()
            .map(|w| w.parse().map_err(|_| parse_err(line, format!("bad vertex {w:?}"))))
            .collect::<Result<_>>()?;
        let [u, v] = ends[..] else {
            return Err(parse_err(line, "expected two vertices"));
        };
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}
