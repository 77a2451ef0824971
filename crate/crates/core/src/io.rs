//! The `.hg3` text format.
//!
//! ```text
//! hg 3 <n> <m>
//! <a> <b> <c>      (m lines, 0 <= a < b < c < n, lexicographic order)
//! ```
//!
//! ASCII decimal, single spaces, LF line endings. Writers emit exactly this
//! form; readers reject anything that is not already canonical.

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

pub fn to_hg3(g: &UniformHypergraph) -> String {
    let mut s = format!("hg 3 {} {}\n", g.n(), g.edge_count());
    for [a, b, c] in g.edges() {
        s.push_str(&format!("{a} {b} {c}\n"));
    }
    s
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn parse_uint(tok: &str, line: usize) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return parse_err(line, format!("expected a decimal integer, got {tok:?}"));
    }
    if tok.len() > 1 && tok.starts_with('0') {
        return parse_err(line, format!("leading zero in {tok:?}"));
    }
    tok.parse()
        .or_else(|_| parse_err(line, format!("integer out of range: {tok:?}")))
}

pub fn from_hg3(text: &str) -> Result<UniformHypergraph> {
    if text.contains('\r') {
        return parse_err(1, "CR characters are not allowed (LF line endings only)");
    }
    let body = match text.strip_suffix('\n') {
        Some(b) => b,
        None => return parse_err(1, "missing trailing newline"),
    };
    let mut lines = body.split('\n');
    let header: Vec<&str> = lines.next().unwrap_or("").split(' ').collect();
    if header.len() != 4 || header[0] != "hg" || header[1] != "3" {
        return parse_err(1, "header must be `hg 3 <n> <m>`");
    }
    let n = parse_uint(header[2], 1)?;
    let m = parse_uint(header[3], 1)?;

    let mut edges: Vec<[usize; 3]> = Vec::with_capacity(m);
    for (i, raw) in lines.enumerate() {
        let lineno = i + 2;
        let toks: Vec<&str> = raw.split(' ').collect();
        if toks.len() != 3 {
            return parse_err(lineno, "edge line must be `<a> <b> <c>`");
        }
        let e = [
            parse_uint(toks[0], lineno)?,
            parse_uint(toks[1], lineno)?,
            parse_uint(toks[2], lineno)?,
        ];
        if !(e[0] < e[1] && e[1] < e[2]) {
            return parse_err(lineno, "edge vertices must be strictly increasing");
        }
        if e[2] >= n {
            return parse_err(lineno, format!("vertex {} outside 0..{n}", e[2]));
        }
        if let Some(prev) = edges.last() {
            match prev.cmp(&e) {
                std::cmp::Ordering::Equal => return parse_err(lineno, "duplicate edge"),
                std::cmp::Ordering::Greater => {
                    return parse_err(lineno, "edges are not in lexicographic order")
                }
                std::cmp::Ordering::Less => {}
            }
        }
        edges.push(e);
    }
    if edges.len() != m {
        return parse_err(
            edges.len() + 1,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    Ok(UniformHypergraph::from_canonical_parts(n, edges))
}
