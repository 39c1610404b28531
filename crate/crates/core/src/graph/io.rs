//! Text formats: a line-based edge list (`n <count>` header, then `u v [k]`)
//! and the short form of graph6 (n ≤ 62).

use std::fmt::Write as _;

use super::{MultiDigraph, SimpleGraph};
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Yields `(line number, fields)` for non-blank, non-comment lines.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn parse_header<'a>(recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<usize> {
    match recs.next() {
        Some((ln, f)) if f.len() == 2 && f[0] == "n" => {
            f[1].parse().map_err(|_| parse_err(ln, format!("bad vertex count {:?}", f[1])))
        }
        Some((ln, _)) => Err(parse_err(ln, "expected header `n <count>`")),
        None => Err(parse_err(1, "empty input; expected header `n <count>`")),
    }
}

fn parse_vertex(ln: usize, s: &str, n: usize) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| parse_err(ln, format!("bad vertex {s:?}")))?;
    if v >= n {
        return Err(parse_err(ln, format!("vertex index {v} out of range (n = {n})")));
    }
    Ok(v)
}

/// Parses a multidigraph edge list; repeated arcs add up.
pub fn parse_edge_list(text: &str) -> Result<MultiDigraph> {
    let mut recs = records(text);
    let n = parse_header(&mut recs)?;
    let mut g = MultiDigraph::new(n);
    for (ln, f) in recs {
        if !(2..=3).contains(&f.len()) {
            return Err(parse_err(ln, "expected `u v [k]`"));
        }
        let u = parse_vertex(ln, f[0], n)?;
        let v = parse_vertex(ln, f[1], n)?;
        let k = match f.get(2) {
            None => 1,
            Some(s) => {
                let k: i128 = s.parse().map_err(|_| parse_err(ln, format!("bad multiplicity {s:?}")))?;
                if k < 0 {
                    return Err(parse_err(ln, format!("negative multiplicity {k}")));
                }
                u64::try_from(k).map_err(|_| parse_err(ln, "multiplicity too large"))?
            }
        };
        g.add_arcs(u, v, k);
    }
    Ok(g)
}

pub fn to_edge_list(g: &MultiDigraph) -> String {
    let mut s = format!("n {}\n", g.n());
    for i in 0..g.n() {
        for (j, k) in g.successors(i) {
            let _ = writeln!(s, "{i} {j} {k}");
        }
    }
    s
}

/// Parses an undirected edge list (`n <count>`, then `u v`).
pub fn parse_simple_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut recs = records(text);
    let n = parse_header(&mut recs)?;
    let mut h = SimpleGraph::new(n);
    for (ln, f) in recs {
        if f.len() != 2 {
            return Err(parse_err(ln, "expected `u v`"));
        }
        let u = parse_vertex(ln, f[0], n)?;
        let v = parse_vertex(ln, f[1], n)?;
        h.try_add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(h)
}

pub fn to_simple_edge_list(h: &SimpleGraph) -> String {
    let mut s = format!("n {}\n", h.n());
    for (u, v) in h.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Decodes a graph6 string. Bits run over the upper triangle column by
/// column: x(0,1), x(0,2), x(1,2), x(0,3), …
pub fn parse_graph6(line: &str) -> Result<SimpleGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("invalid character {:?}", c as char)));
    }
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty string".into()))?;
    if first == 126 {
        return Err(Error::Graph6("only the short form (n ≤ 62) is supported".into()));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        let what = if body.len() < need { "truncated" } else { "trailing data after" };
        return Err(Error::Graph6(format!("{what} bit string: {} chunks for n = {n}, expected {need}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut h = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                h.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(h)
}

pub fn to_graph6(h: &SimpleGraph) -> Result<String> {
    let n = h.n();
    if n > 62 {
        return Err(Error::SizeCap { what: "graph6 short form", n, cap: 62 });
    }
    let mut out = vec![n as u8 + 63];
    let (mut chunk, mut len) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | h.has_edge(i, j) as u8;
            len += 1;
            if len == 6 {
                out.push(chunk + 63);
                (chunk, len) = (0, 0);
            }
        }
    }
    if len > 0 {
        out.push((chunk << (6 - len)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
