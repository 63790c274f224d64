//! graph6 encoding: a length prefix followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use std::fs;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_ORDER: usize = (1 << 36) - 1;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend(b"~~");
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextets(bytes: &[u8]) -> impl Iterator<Item = usize> + '_ {
    bytes.iter().map(|b| (b - BIAS) as usize)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = |len: usize| {
        bytes
            .get(..len)
            .ok_or_else(|| Error::Graph6("truncated length header".into()))
    };
    if bytes.first() != Some(&b'~') {
        let first = short(1)?;
        return Ok(((first[0] - BIAS) as usize, &bytes[1..]));
    }
    let (width, skip) = if bytes.get(1) == Some(&b'~') { (6, 2) } else { (3, 1) };
    let field = short(skip + width)?;
    let n = sextets(&field[skip..]).fold(0, |acc, s| acc << 6 | s);
    let valid = if width == 3 { n > 62 } else { n > 258_047 };
    if !valid {
        return Err(Error::Graph6(format!("non-canonical length header for order {n}")));
    }
    Ok((n, &bytes[skip + width..]))
}

/// Parses one graph6 string, with or without the `>>graph6<<` header.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(bad) = bytes.iter().find(|b| !(BIAS..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} is outside the graph6 range")));
    }
    if bytes.is_empty() {
        return Err(Error::Graph6("empty graph6 string".into()));
    }
    let (n, body) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            let sextet = body[index / 6] - BIAS;
            if sextet >> (5 - index % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            index += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Reads one graph per non-empty line.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path.as_ref())?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            from_graph6(line.trim()).map_err(|e| {
                Error::Graph6(format!("{}:{}: {e}", path.as_ref().display(), i + 1))
            })
        })
        .collect()
}

pub fn write_graph6_file(path: impl AsRef<Path>, graphs: &[Graph]) -> Result<()> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{builtin, complete_graph, cycle_graph, paley_graph};

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&complete_graph(5)), "D~{");
        assert_eq!(to_graph6(&cycle_graph(5)), "Dhc");
        assert_eq!(from_graph6("D~{").unwrap(), complete_graph(5));
        assert_eq!(from_graph6("Dhc").unwrap(), cycle_graph(5));
        assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), cycle_graph(5));
        assert_eq!(to_graph6(&builtin("petersen").unwrap()).len(), 1 + 8);
        // Reference encoding of the same labelled graph from networkx.
        assert_eq!(to_graph6(&paley_graph(13).unwrap()), "LlthgsL`mEkLkL");
    }

    #[test]
    fn small_orders() {
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6("?").unwrap().order(), 0);
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(from_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn extended_length_prefix() {
        let g = paley_graph(101).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s[..4], "~?@d");
        assert_eq!(from_graph6(&s).unwrap(), g);
        let mut prefix = Vec::new();
        encode_order(258_048, &mut prefix);
        assert_eq!(prefix.len(), 8);
        assert_eq!(decode_order(&prefix).unwrap().0, 258_048);
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("Dhcc").is_err());
        assert!(from_graph6("D~|").is_err()); // padding bit set
        assert!(from_graph6("D h").is_err());
        assert!(from_graph6("~?").is_err());
        assert!(from_graph6("~??C").is_err()); // order 4 in long form
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("graphs.g6");
        let graphs = vec![cycle_graph(5), complete_graph(5), builtin("petersen").unwrap()];
        write_graph6_file(&path, &graphs).unwrap();
        assert_eq!(read_graph6_file(&path).unwrap(), graphs);
    }
}
