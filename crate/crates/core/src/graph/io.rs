//! Edge-list format: optional `#` comment lines; first data line `n m`;
//! then `m` lines `u v` with `0 <= u < v < n`, whitespace-separated.

use crate::error::{Error, Result};

use super::Graph;

pub fn load_graph(text: &str) -> Result<Graph> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = data_lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header line".into() })?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
    let m: usize = parse_field(parts.next(), line_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse { line: line_no, msg: "header has extra fields".into() });
    }

    let mut g = Graph::new(n);
    let mut read = 0usize;
    for (line_no, line) in data_lines {
        if read == m {
            return Err(Error::Parse { line: line_no, msg: format!("more than {m} edge lines") });
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line_no, "endpoint")?;
        let v: usize = parse_field(parts.next(), line_no, "endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "edge line has extra fields".into() });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex id out of range in edge {u} {v} (n = {n})"),
            });
        }
        if u == v {
            return Err(Error::Parse { line: line_no, msg: format!("self-loop at vertex {u}") });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse { line: line_no, msg: format!("duplicate edge {u} {v}") });
        }
        g.add_edge(u, v).expect("validated above");
        read += 1;
    }
    if read != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {m} edges, found {read}"),
        });
    }
    Ok(g)
}

/// Serialization matching `load_graph` bit-exactly: header then sorted edges.
pub fn save_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
}
