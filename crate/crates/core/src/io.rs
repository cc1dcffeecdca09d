//! Text formats: poset files, extension files and DOT export.
//!
//! A poset file starts with `poset <n>`, then one cover `u v` per line and
//! optional `label <id> <text>` lines; `#` starts a comment line. An extension
//! file holds one linear extension per line as space-separated ids.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::dimension::{LinearExtension, Realizer};
use crate::poset::{ElementId, Poset, PosetError, RelationWarning};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<ElementId, FormatError> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected an element id, found {tok:?}")))
}

/// Parses a poset file, returning the pairs dropped as redundant or reflexive.
pub fn parse_poset_with_warnings(text: &str) -> Result<(Poset, Vec<RelationWarning>), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"poset <n>\""))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["poset", n] => n
            .parse::<usize>()
            .map_err(|_| parse_err(hline, format!("bad size {n:?}")))?,
        _ => return Err(parse_err(hline, "expected header \"poset <n>\"")),
    };
    let mut pairs = Vec::new();
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (line, l) in lines {
        if let Some(rest) = l.strip_prefix("label ") {
            let rest = rest.trim_start();
            let (id, text) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line, "label needs an id and a text"))?;
            let id = parse_id(id, line)?;
            if id >= n {
                return Err(parse_err(line, format!("element {id} is out of range")));
            }
            labels[id] = Some(text.trim().to_string());
            continue;
        }
        match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u >= n || v >= n {
                    return Err(parse_err(
                        line,
                        format!("element {} is out of range", u.max(v)),
                    ));
                }
                pairs.push((u, v));
            }
            _ => {
                return Err(parse_err(
                    line,
                    format!("expected \"<u> <v>\", found {l:?}"),
                ))
            }
        }
    }
    let (p, warnings) = Poset::from_covers_with_warnings(n, &pairs)?;
    let p = if labels.iter().any(Option::is_some) {
        p.with_labels(labels)?
    } else {
        p
    };
    Ok((p, warnings))
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    parse_poset_with_warnings(text).map(|(p, _)| p)
}

/// Canonical text: header, covers in lexicographic order, then labels by id.
pub fn serialize_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.len());
    let mut covers = p.covers().to_vec();
    covers.sort_unstable();
    for (u, v) in covers {
        let _ = writeln!(out, "{u} {v}");
    }
    for x in p.elements() {
        if let Some(l) = p.label(x) {
            let _ = writeln!(out, "label {x} {l}");
        }
    }
    out
}

/// Parses an extension file. Ids are checked against `n`; whether each line is
/// really a linear extension is left to the verifier.
pub fn parse_extensions(text: &str, n: usize) -> Result<Realizer, FormatError> {
    let mut exts = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let ids = l
            .split_whitespace()
            .map(|t| {
                let id = parse_id(t, i + 1)?;
                if id >= n {
                    return Err(parse_err(i + 1, format!("element {id} is out of range")));
                }
                Ok(id)
            })
            .collect::<Result<Vec<_>, _>>()?;
        exts.push(LinearExtension::new(ids));
    }
    Ok(Realizer::new(exts))
}

pub fn serialize_extensions(r: &Realizer) -> String {
    r.extensions.iter().map(|e| format!("{e}\n")).collect()
}

/// Elements and covers to emphasize in a DOT drawing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Highlight {
    pub elements: BTreeSet<ElementId>,
    pub edges: BTreeSet<(ElementId, ElementId)>,
}

impl Highlight {
    /// The reducible elements.
    pub fn reducibles(p: &Poset) -> Self {
        Highlight {
            elements: p.reducibles().into_iter().collect(),
            edges: BTreeSet::new(),
        }
    }
}

/// Longest chain length below each element, counted in covers.
pub fn heights(p: &Poset) -> Vec<usize> {
    let mut h = vec![0; p.len()];
    for x in p.topological_order() {
        h[x] = p
            .lower_covers(x)
            .iter()
            .map(|&y| h[y] + 1)
            .max()
            .unwrap_or(0);
    }
    h
}

/// The Hasse diagram as a DOT digraph drawn bottom to top, one edge per cover
/// and one `rank=same` group per height.
pub fn to_dot(p: &Poset, highlight: Option<&Highlight>) -> String {
    let empty = Highlight::default();
    let hl = highlight.unwrap_or(&empty);
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in p.elements() {
        let _ = write!(
            out,
            "  {x} [label=\"{}\"",
            p.display_name(x).replace('"', "\\\"")
        );
        if hl.elements.contains(&x) {
            out.push_str(", style=filled, fillcolor=lightgray");
        }
        out.push_str("];\n");
    }
    let mut covers = p.covers().to_vec();
    covers.sort_unstable();
    for (u, v) in covers {
        let _ = write!(out, "  {u} -> {v}");
        if hl.edges.contains(&(u, v)) {
            out.push_str(" [color=red]");
        }
        out.push_str(";\n");
    }
    let h = heights(p);
    let top = h.iter().copied().max().unwrap_or(0);
    for level in 0..=top {
        let members: Vec<String> = p
            .elements()
            .filter(|&x| h[x] == level)
            .map(|x| x.to_string())
            .collect();
        if !members.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
        }
    }
    out.push_str("}\n");
    out
}
