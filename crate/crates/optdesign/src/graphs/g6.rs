//! graph6 encoding: 6 bits per character offset by 63, upper-triangle
//! columns in colex order (0,1),(0,2),(1,2),(0,3),...

use super::{Graph, GraphError, MAX_VERTICES};

/// Decode a single graph6 line (no trailing newline).
pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(GraphError::Graph6(format!(
                "invalid character {:?} at byte {i}",
                c as char
            )));
        }
    }
    if bytes[0] == 126 {
        // multi-byte sizes encode n > 62, beyond this representation
        return Err(GraphError::Graph6(
            "multi-byte vertex counts (n > 62) unsupported".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    if payload.len() < nchars {
        return Err(GraphError::Graph6(format!(
            "truncated payload: need {nchars} characters for n={n}, got {}",
            payload.len()
        )));
    }
    if payload.len() > nchars {
        return Err(GraphError::Graph6(format!(
            "trailing characters: expected {nchars} payload characters for n={n}, got {}",
            payload.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = (payload[bit / 6] - 63) as u32;
            if group >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let group = (payload[nchars - 1] - 63) as u32;
        let pad = 6 - nbits % 6;
        if group & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_VERTICES);
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::petersen;

    #[test]
    fn decode_bw_is_triangle() {
        let g = decode_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
    }

    #[test]
    fn decode_bg_is_path() {
        // bits 101000 -> edges (0,1) and (1,2)
        let g = decode_graph6("Bg").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn encode_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(encode_graph6(&g), "Bw");
    }

    #[test]
    fn petersen_roundtrip() {
        let g = petersen();
        let s = encode_graph6(&g);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn invalid_character_rejected() {
        assert!(matches!(decode_graph6("B\u{20}"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn truncated_payload_rejected() {
        // n = 10 needs 45 bits = 8 characters
        assert!(matches!(decode_graph6("I"), Err(GraphError::Graph6(_))));
        assert!(matches!(decode_graph6("Iw"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn trailing_characters_rejected() {
        assert!(matches!(decode_graph6("Bww"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn empty_graphs() {
        let g = decode_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(encode_graph6(&g), "@");
        let g = decode_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
    }
}
