//! graph6 interchange, short form only (at most 62 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{choose2, Graph};

/// Largest order expressible in the short form.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + choose2(n).div_ceil(6));
    out.push(n as u8 + 63);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    let parse_err = |offset: usize, message: String| Error::Parse {
        offset: base + offset,
        message,
    };

    let Some(&first) = body.first() else {
        return Err(parse_err(0, "empty graph6 string".into()));
    };
    let n = match first {
        63..=125 => (first - 63) as usize,
        126 => {
            return Err(Error::Capacity(
                "graph6 long form (more than 62 vertices) is not supported".into(),
            ))
        }
        b => return Err(parse_err(0, format!("invalid order byte 0x{b:02x}"))),
    };

    let nbits = choose2(n);
    let expected = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() < expected {
        return Err(parse_err(
            body.len(),
            format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > expected {
        return Err(parse_err(
            1 + expected,
            "trailing bytes after graph data".into(),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for (idx, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1 + idx, format!("invalid data byte 0x{b:02x}")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let set = v >> shift & 1 == 1;
            if bit < nbits {
                if set {
                    let (i, j) = pair_of_index(bit);
                    g.set_edge(i, j, true);
                }
            } else if set {
                return Err(parse_err(1 + idx, "non-zero padding bits".into()));
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encode graphs as newline-delimited graph6, one per line.
pub fn encode_graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

/// Decode newline-delimited graph6. Blank lines are skipped; parse error
/// offsets are relative to the start of `text`.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut start = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        if !body.is_empty() {
            match decode_graph6(body) {
                Ok(g) => graphs.push(g),
                Err(Error::Parse { offset, message }) => {
                    return Err(Error::Parse {
                        offset: start + offset,
                        message,
                    })
                }
                Err(e) => return Err(e),
            }
        }
        start += line.len();
    }
    Ok(graphs)
}

/// Inverse of the column-major upper-triangle index: bit `k` is the pair `(i, j)`, `i < j`.
fn pair_of_index(k: usize) -> (usize, usize) {
    let mut j = 1;
    while choose2(j + 1) <= k {
        j += 1;
    }
    (k - choose2(j), j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_five() {
        assert_eq!(encode_graph6(&Graph::empty(5).unwrap()).unwrap(), "D??");
    }

    #[test]
    fn k4_decodes() {
        assert_eq!(decode_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(decode_graph6("C~\n").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(
            decode_graph6(">>graph6<<C~").unwrap(),
            Graph::complete(4).unwrap()
        );
    }

    #[test]
    fn known_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn order_zero_and_one() {
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(decode_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            decode_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            decode_graph6("!"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            decode_graph6("D?"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            decode_graph6("D???"),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            decode_graph6("D? "),
            Err(Error::Parse { offset: 2, .. })
        ));
        // K_2 uses one bit; "B" + 0b100001 sets a padding bit
        assert!(matches!(
            decode_graph6("A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(decode_graph6("A_").is_ok());
        assert!(matches!(decode_graph6("~?@?"), Err(Error::Capacity(_))));
    }

    #[test]
    fn too_large_to_encode() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(encode_graph6(&g), Err(Error::Capacity(_))));
        assert!(encode_graph6(&Graph::empty(62).unwrap()).is_ok());
    }

    #[test]
    fn lines() {
        let gs = vec![Graph::complete(4).unwrap(), Graph::empty(5).unwrap()];
        let text = encode_graph6_lines(&gs).unwrap();
        assert_eq!(text, "C~\nD??\n");
        assert_eq!(decode_graph6_lines(&format!("{text}\n")).unwrap(), gs);
        assert!(matches!(
            decode_graph6_lines("C~\nD?\n"),
            Err(Error::Parse { offset: 5, .. })
        ));
    }

    #[test]
    fn pair_index_matches_layout() {
        let mut k = 0;
        for j in 1..10 {
            for i in 0..j {
                assert_eq!(pair_of_index(k), (i, j));
                k += 1;
            }
        }
    }
}
