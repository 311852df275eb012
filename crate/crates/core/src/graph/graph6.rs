//! graph6 encoding: an order field followed by the upper triangle of the
//! adjacency matrix, column by column, packed into printable 6-bit groups.

use thiserror::Error;

use super::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed length field")]
    MalformedLength,
    #[error("graph order {0} exceeds the limit of {MAX_ORDER} vertices")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    WrongDataLength { expected: usize, found: usize },
    #[error("nonzero padding bits after the adjacency data")]
    TrailingBits,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn check_byte(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, body) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 8-byte form is only used for n ≥ 258048.
            if bytes.len() < 8 {
                return Err(Graph6Error::MalformedLength);
            }
            let mut n = 0usize;
            for (i, &b) in bytes[2..8].iter().enumerate() {
                n = n << 6 | check_byte(i + 2, b)? as usize;
            }
            return Err(if n >= 258_048 {
                Graph6Error::TooLarge(n)
            } else {
                Graph6Error::MalformedLength
            });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedLength);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | check_byte(i + 1, b)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::MalformedLength);
        }
        (n, &bytes[4..])
    } else {
        (check_byte(0, bytes[0])? as usize, &bytes[1..])
    };

    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = data_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongDataLength {
            expected,
            found: body.len(),
        });
    }
    let offset = bytes.len() - body.len();
    let groups = body
        .iter()
        .enumerate()
        .map(|(i, &b)| check_byte(offset + i, b))
        .collect::<Result<Vec<u8>, _>>()?;

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let padding = expected * 6 - k;
    if padding > 0 && groups[expected - 1] & ((1u8 << padding) - 1) != 0 {
        return Err(Graph6Error::TrailingBits);
    }
    Ok(Graph::from_rows_symmetrized(n, &rows))
}

/// Encodes without the optional header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference strings produced by an independent graph6 writer.
    #[test]
    fn known_encodings() {
        let cases = [
            ("A_", Graph::complete(2).unwrap()),
            ("Bw", Graph::complete(3).unwrap()),
            ("@", Graph::empty(1).unwrap()),
            ("?", Graph::empty(0).unwrap()),
            ("Dhc", Graph::cycle(5).unwrap()),
            ("Ch", Graph::path(4).unwrap()),
        ];
        for (s, g) in cases {
            assert_eq!(to_graph6(&g), s);
            assert_eq!(from_graph6(s).unwrap(), g);
        }
    }

    #[test]
    fn long_length_field() {
        let k63 = Graph::complete(63).unwrap();
        let s = to_graph6(&k63);
        assert!(s.starts_with("~??~~~"));
        assert_eq!(s.len(), 330);
        assert_eq!(from_graph6(&s).unwrap(), k63);

        let p64 = Graph::path(64).unwrap();
        let s = to_graph6(&p64);
        assert!(s.starts_with("~?@?hCGG"));
        assert_eq!(s.len(), 340);
        assert_eq!(from_graph6(&s).unwrap(), p64);
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(
            from_graph6(">>graph6<<Bw").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("~?"), Err(Graph6Error::MalformedLength));
        assert_eq!(from_graph6("~??B"), Err(Graph6Error::MalformedLength));
        // order 65 in the 4-byte form
        assert_eq!(from_graph6("~?@@"), Err(Graph6Error::TooLarge(65)));
        assert_eq!(from_graph6("~~??????"), Err(Graph6Error::MalformedLength));
        assert_eq!(from_graph6("~~?@????"), Err(Graph6Error::TooLarge(1 << 24)));
        // K2 with a stray padding bit set
        assert_eq!(from_graph6("A`"), Err(Graph6Error::TrailingBits));
        assert_eq!(
            from_graph6("Bww"),
            Err(Graph6Error::WrongDataLength {
                expected: 1,
                found: 2
            })
        );
        assert!(matches!(
            from_graph6("B!"),
            Err(Graph6Error::InvalidByte { offset: 1, .. })
        ));
    }
}
