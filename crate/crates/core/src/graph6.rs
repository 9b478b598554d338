//! graph6 encoding of labeled graphs.
//!
//! Size header `N(n)`: one byte `n + 63` for `n <= 62`, `~` plus three
//! 6-bit groups for `n <= 258047`, `~~` plus six groups beyond that. The
//! upper triangle follows, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! six bits per byte, most significant first, zero padded, each plus 63.
//! That bit order is exactly [`crate::graph::pair_index`] order.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

const HEADER: &[u8] = b">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sextet(line: &[u8], offset: usize) -> Result<u64> {
    match line.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(parse_err(
            offset,
            format!("byte 0x{b:02x} is not a graph6 character"),
        )),
        None => Err(parse_err(offset, "unexpected end of input")),
    }
}

fn parse_size(line: &[u8]) -> Result<(usize, usize)> {
    let groups = |start: usize, count: usize| -> Result<u64> {
        (start..start + count).try_fold(0u64, |acc, i| Ok(acc << 6 | sextet(line, i)?))
    };
    if line.first() != Some(&b'~') {
        return Ok((groups(0, 1)? as usize, 1));
    }
    if line.get(1) != Some(&b'~') {
        let n = groups(1, 3)?;
        if n < 63 {
            return Err(parse_err(0, format!("size {n} must use the one-byte form")));
        }
        return Ok((n as usize, 4));
    }
    let n = groups(2, 6)?;
    if n < 258048 {
        return Err(parse_err(0, format!("size {n} must use a shorter form")));
    }
    Ok((n as usize, 8))
}

/// Decodes one graph6 string (no trailing newline, optional `>>graph6<<`).
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let base = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &line[base..];
    let shift = |e: Error| match e {
        Error::Parse { offset, message } => parse_err(offset + base, message),
        other => other,
    };
    let (n, header_len) = parse_size(body).map_err(shift)?;
    if n == 0 {
        return Err(parse_err(base, "graphs must have at least one vertex"));
    }
    let pairs = pair_count(n);
    let data_len = pairs.div_ceil(6);
    let mut g = Graph::empty(n);
    for k in 0..data_len {
        let offset = header_len + k;
        let bits = sextet(body, offset).map_err(shift)?;
        for b in 0..6 {
            let idx = 6 * k + b;
            let on = bits >> (5 - b) & 1 == 1;
            if idx < pairs {
                if on {
                    g.set_pair(idx, true);
                }
            } else if on {
                return Err(parse_err(base + offset, "nonzero padding bits"));
            }
        }
    }
    let end = header_len + data_len;
    if body.len() > end {
        return Err(parse_err(base + end, "trailing bytes after graph"));
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let push_groups = |out: &mut Vec<u8>, v: u64, count: u32| {
        for k in (0..count).rev() {
            out.push((v >> (6 * k) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(b'~');
        push_groups(&mut out, n as u64, 3);
    } else {
        out.extend_from_slice(b"~~");
        push_groups(&mut out, n as u64, 6);
    }
    let pairs = pair_count(n);
    for chunk in (0..pairs).step_by(6) {
        let mut v = 0u8;
        for b in 0..6 {
            let idx = chunk + b;
            v = v << 1 | (idx < pairs && g.pair(idx)) as u8;
        }
        out.push(v + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads a graph6 file: one graph per nonblank line. Errors carry the byte
/// offset within the file.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0usize;
    for line in reader.split(b'\n') {
        let line = line?;
        let len = line.len() + 1;
        let trimmed = line.strip_suffix(b"\r").unwrap_or(&line);
        if !trimmed.is_empty() {
            let g = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, message } => parse_err(offset + o, message),
                other => other,
            })?;
            graphs.push(g);
        }
        offset += len;
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6(b"C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6(b"Ch").unwrap(), Graph::path(4));
        assert_eq!(write_graph6(&Graph::empty(4)), "C?");
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6(b">>graph6<<Ch").unwrap(), Graph::path(4));
    }

    #[test]
    fn malformed_input() {
        let offset = |s: &[u8]| match parse_graph6(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(offset(b""), 0);
        assert_eq!(offset(b"C"), 1);
        assert_eq!(offset(b"C~~"), 2);
        assert_eq!(offset(b"C\x01"), 1);
        assert_eq!(offset(b"?"), 0);
        // 3 vertices use 3 of 6 bits; low bits must be zero
        assert_eq!(offset(b"B@"), 1);
        assert_eq!(offset(b"~??"), 3);
        assert_eq!(offset(b"~??}"), 0);
        assert_eq!(offset(b"~?@?"), 4);
        assert_eq!(offset(b">>graph6<<C"), 11);
    }

    #[test]
    fn long_form_sizes() {
        for n in [62, 63, 64, 100, 300] {
            let g = Graph::path(n);
            let s = write_graph6(&g);
            assert_eq!(s.as_bytes()[0] == b'~', n >= 63);
            assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
        assert!(write_graph6(&Graph::empty(63)).starts_with("~??~"));
    }

    #[test]
    fn file_reader_offsets() {
        let text = b"C~\r\n\nCh\nC\x7f\n";
        match read_graph6(&text[..]) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 9),
            other => panic!("{other:?}"),
        }
        let ok = read_graph6(&b"C~\r\n\nCh\n"[..]).unwrap();
        assert_eq!(ok, vec![Graph::complete(4), Graph::path(4)]);
    }

    #[test]
    fn roundtrip_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for n in [5, 20, 62, 63, 100] {
            for _ in 0..2000 {
                let mut g = Graph::empty(n);
                for p in 0..pair_count(n) {
                    g.set_pair(p, rng.gen());
                }
                assert_eq!(parse_graph6(write_graph6(&g).as_bytes()).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip(n in prop::sample::select(vec![1usize, 2, 5, 20, 62, 63, 100]), seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut s = seed | 1;
            for p in 0..pair_count(n) {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                g.set_pair(p, s & 1 == 1);
            }
            let text = write_graph6(&g);
            prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
        }
    }
}
