//! graph6 encoding (McKay's format) restricted to orders the crate supports.

use crate::error::{Error, Result};
use crate::graph::{Graph, N_MAX};

pub const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(base + pos, format!("byte {:#04x} is not a graph6 character", body[pos])));
    }

    let (n, header_len) = match body {
        [] => return Err(parse_err(base, "empty record")),
        [126, 126, ..] => {
            return Err(parse_err(base, "orders above 258047 are not supported"));
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(base + body.len(), "truncated 4-byte order prefix"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, 4)
        }
        [b, ..] => (usize::from(b - 63), 1),
    };
    if n > N_MAX {
        return Err(parse_err(base, format!("order {n} exceeds the supported maximum of {N_MAX}")));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let data = &body[header_len..];
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(parse_err(
            base + header_len + data.len().min(expected),
            format!("expected {expected} adjacency bytes for n={n}, found {}", data.len()),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + header_len + data.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_family, Family};

    #[test]
    fn k2_is_a_underscore() {
        let k2 = gen_family(Family::Complete(2)).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
    }

    #[test]
    fn known_records() {
        // D?{ is the star K_{1,4} centred at vertex 4; DQc is the petgraph fixture.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        let g = parse_graph6("DQc").unwrap();
        let mut e: Vec<_> = g.edges().collect();
        e.sort();
        assert_eq!(e, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn large_orders_use_long_prefix() {
        let g = gen_family(Family::Cycle(64)).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = gen_family(Family::Path(63)).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_records_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // Too few adjacency bytes for n=5 (needs 2).
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { offset: 3, .. })));
        // K_2 with a padding bit set.
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("A _"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("~??~"), Err(Error::Parse { .. }))); // no data for n=63
        assert!(matches!(parse_graph6(">>graph6<<D?"), Err(Error::Parse { offset: 12, .. })));
    }

    #[test]
    fn rejects_orders_over_64() {
        // n = 65 encoded with the 4-byte prefix.
        let s = "~?@@";
        let err = parse_graph6(s).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }
}
