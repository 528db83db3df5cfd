use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

/// Parses the edge-list format: a header line `n m` followed by exactly
/// `m` lines `u v`. Blank lines are skipped; duplicates and loops are kept.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line `n m`"))?;
    let (n, m) = parse_pair(header_line, header)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            header_line,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("more edge lines than the {m} declared"),
            ));
        }
        let (u, v) = parse_pair(line, body)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("endpoint out of range 0..{n} in `{body}`"),
            ));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("expected two integers in `{body}`")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::parse(line, format!("trailing tokens in `{body}`")));
    }
    Ok(pair)
}

/// Renders a graph in the edge-list format, preserving edge order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string (McKay's format). Surrounding whitespace and
/// the optional `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(G6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, format!("invalid graph6 byte 0x{b:02x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, rest @ ..] => (read_n(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_n(rest, 3)?, &rest[3..]),
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            1,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::parse(
            1,
            format!(
                "graph6 body for n={n} needs {need} bytes, found {}",
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

fn read_n(rest: &[u8], count: usize) -> Result<usize> {
    if rest.len() < count {
        return Err(Error::parse(1, "truncated graph6 size header"));
    }
    Ok(rest[..count]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

/// Encodes a simple graph as graph6. Loops and parallel edges are rejected.
pub fn to_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Input(
            "graph6 cannot encode loops or parallel edges".into(),
        ));
    }
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
