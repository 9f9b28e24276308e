//! The `.hg` text format: one edge per line as whitespace-separated vertex
//! tokens, `#` comments, blank lines ignored, a bare `-` for an empty edge,
//! and an optional leading `vertices:` directive that pins the universe and
//! its order. Without the directive the universe is the tokens in order of
//! first appearance.

use hgdual::{Hypergraph, VertexSet};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

pub fn parse_hg(text: &str) -> Result<Hypergraph, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut declared = false;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut saw_content = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !saw_content && line.starts_with("vertices:") {
            saw_content = true;
            declared = true;
            for tok in line["vertices:".len()..].split_whitespace() {
                if tok == "-" {
                    return Err(err(lineno, "'-' is reserved and cannot name a vertex"));
                }
                if index.contains_key(tok) {
                    return Err(err(lineno, format!("duplicate vertex '{tok}' in universe")));
                }
                index.insert(tok.to_string(), labels.len());
                labels.push(tok.to_string());
            }
            continue;
        }
        saw_content = true;

        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens == ["-"] {
            edges.push(Vec::new());
            continue;
        }
        let mut edge = Vec::with_capacity(tokens.len());
        for tok in tokens {
            if tok == "-" {
                return Err(err(lineno, "'-' denotes an empty edge and must stand alone"));
            }
            let ix = match index.get(tok) {
                Some(&ix) => ix,
                None if declared => {
                    return Err(err(
                        lineno,
                        format!("vertex '{tok}' is not in the declared universe"),
                    ));
                }
                None => {
                    index.insert(tok.to_string(), labels.len());
                    labels.push(tok.to_string());
                    labels.len() - 1
                }
            };
            if edge.contains(&ix) {
                return Err(err(lineno, format!("duplicate vertex '{tok}' in edge")));
            }
            edge.push(ix);
        }
        edges.push(edge);
    }

    if !saw_content {
        return Err(err(
            0,
            "no universe derivable from an empty file; add a 'vertices:' line",
        ));
    }

    let n = labels.len();
    let h = Hypergraph::new(
        n,
        edges
            .into_iter()
            .map(|e| VertexSet::from_indices(n, e))
            .collect(),
    );
    Ok(h.with_labels(labels))
}

/// Emits a `vertices:` directive followed by one line per edge, so the text
/// parses back to the same hypergraph, universe order and labels included.
pub fn serialize_hg(h: &Hypergraph) -> String {
    let mut out = String::from("vertices:");
    for v in 0..h.universe_size() {
        out.push(' ');
        out.push_str(&h.label(v));
    }
    out.push('\n');
    for e in h.edges() {
        out.push_str(&h.format_set(e));
        out.push('\n');
    }
    out
}

/// Re-indexes `g` onto `h`'s universe by label, so hypergraphs from two
/// files can be compared. Fails on labels unknown to `h`.
pub fn align_universe(h: &Hypergraph, g: &Hypergraph) -> Result<Hypergraph, String> {
    let mut index: HashMap<String, usize> = HashMap::new();
    for v in 0..h.universe_size() {
        index.insert(h.label(v), v);
    }
    let n = h.universe_size();
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let mut mapped = VertexSet::empty(n);
        for v in e.iter() {
            let label = g.label(v);
            match index.get(&label) {
                Some(&ix) => mapped.insert(ix),
                None => {
                    return Err(format!(
                        "vertex '{label}' does not exist in the first hypergraph"
                    ))
                }
            }
        }
        edges.push(mapped);
    }
    let mut labels = Vec::with_capacity(n);
    for v in 0..n {
        labels.push(h.label(v));
    }
    Ok(Hypergraph::new(n, edges).with_labels(labels))
}
