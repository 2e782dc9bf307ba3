use super::ColoredGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn graph6_read(text: &str) -> Result<ColoredGraph> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "byte {b} outside the graph6 range 63..=126"
        )));
    }
    let (n, body) = read_size(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for {n} vertices needs {expected} bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Error::Parse("non-zero graph6 padding bits".into()));
    }
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
    ColoredGraph::uncolored(n, edges)
}

fn read_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let digits = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    match bytes {
        [] => Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((digits(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(Error::Parse("truncated graph6 size".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((digits(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Parse("truncated graph6 size".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes a simple graph (no loops, one colour) without a header.
pub fn graph6_write(graph: &ColoredGraph) -> Result<String> {
    if graph.has_loops() {
        return Err(Error::UnsupportedFeature(
            "graph6 cannot encode loops".into(),
        ));
    }
    if graph.color_count() > 1 {
        return Err(Error::UnsupportedFeature(
            "graph6 cannot encode edge colours".into(),
        ));
    }
    let n = graph.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_digits = |out: &mut Vec<u8>, value: usize, count: usize| {
        for d in (0..count).rev() {
            out.push((value >> (6 * d) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_digits(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_digits(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | graph.has_edge(i, j) as u8;
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
