//! Line-oriented text formats.
//!
//! Posets:
//!
//! ```text
//! # comment
//! elements: 0 1 2 3 4
//! 0 < 2
//! 0 < 3
//! ```
//!
//! Each `x < y` line says that `y` covers `x` (implied pairs are accepted).
//! Labels are whitespace-free words or brace groups such as `{0 1 3}`, which
//! is how crosscut poset nodes are written. A crosscut poset additionally
//! carries a `side:` line with one `D` or `U` per element.
//!
//! Maps are `x -> y` lines over the source and target labels.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::crosscut::{CrosscutPoset, Side};
use crate::error::{Error, Result};
use crate::fpp::{DismantlingTrace, FppVerdict};
use crate::morphism::OrderMap;
use crate::poset::Poset;

/// A parsed poset file, with the side tags if it had a `side:` line.
#[derive(Clone, Debug)]
pub struct PosetDocument {
    pub poset: Poset,
    pub sides: Option<Vec<Side>>,
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Splits a line into words, keeping `{...}` groups whole.
fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '{' {
            let mut group = String::new();
            loop {
                match chars.next() {
                    Some('}') => {
                        group.push('}');
                        break;
                    }
                    Some(ch) => group.push(ch),
                    None => return Err(parse_error(lineno, "unterminated '{'")),
                }
            }
            // Normalize inner whitespace.
            let inner: Vec<&str> = group[1..group.len() - 1].split_whitespace().collect();
            tokens.push(format!("{{{}}}", inner.join(" ")));
        } else {
            let mut word = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '{' {
                    break;
                }
                word.push(ch);
                chars.next();
            }
            tokens.push(word);
        }
    }
    Ok(tokens)
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_document(text: &str) -> Result<PosetDocument> {
    let mut lines = content_lines(text);
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing 'elements:' line"))?;
    let rest = first
        .strip_prefix("elements:")
        .ok_or_else(|| parse_error(first_no, "expected 'elements:' line"))?;
    let labels = tokenize(rest, first_no)?;
    let mut index = HashMap::new();
    for (i, label) in labels.iter().enumerate() {
        if index.insert(label.clone(), i).is_some() {
            return Err(parse_error(first_no, format!("duplicate element {label:?}")));
        }
    }
    let lookup = |label: &str, lineno: usize| {
        index
            .get(label)
            .copied()
            .ok_or_else(|| parse_error(lineno, format!("unknown element {label:?}")))
    };

    let mut covers = Vec::new();
    let mut sides = None;
    for (lineno, line) in lines {
        if let Some(rest) = line.strip_prefix("side:") {
            let tags = tokenize(rest, lineno)?
                .iter()
                .map(|t| match t.as_str() {
                    "D" => Ok(Side::Down),
                    "U" => Ok(Side::Up),
                    other => Err(parse_error(lineno, format!("bad side tag {other:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if tags.len() != labels.len() {
                return Err(parse_error(lineno, "side line length differs from element count"));
            }
            sides = Some(tags);
            continue;
        }
        let tokens = tokenize(line, lineno)?;
        match tokens.as_slice() {
            [x, op, y] if op == "<" => covers.push((lookup(x, lineno)?, lookup(y, lineno)?)),
            _ => return Err(parse_error(lineno, format!("expected 'x < y', got {line:?}"))),
        }
    }
    let poset = Poset::from_covers(labels, &covers)?;
    Ok(PosetDocument { poset, sides })
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    parse_document(text).map(|d| d.poset)
}

/// Writes the `elements:` line and one line per Hasse edge.
pub fn emit_poset(p: &Poset) -> String {
    let mut out = format!("elements: {}\n", p.labels().join(" "));
    for (x, y) in p.covers() {
        let _ = writeln!(out, "{} < {}", p.label(x), p.label(y));
    }
    out
}

pub fn emit_crosscut(c: &CrosscutPoset) -> String {
    let order = c.order();
    let mut out = format!("elements: {}\n", order.labels().join(" "));
    let tags: Vec<&str> = c.sides().iter().map(|s| s.tag()).collect();
    let _ = writeln!(out, "side: {}", tags.join(" "));
    for (x, y) in order.covers() {
        let _ = writeln!(out, "{} < {}", order.label(x), order.label(y));
    }
    out
}

pub fn parse_map(source: &Poset, target: &Poset, text: &str) -> Result<OrderMap> {
    let mut values = vec![None; source.len()];
    let mut last_line = 0;
    for (lineno, line) in content_lines(text) {
        last_line = lineno;
        let tokens = tokenize(line, lineno)?;
        let [x, arrow, y] = tokens.as_slice() else {
            return Err(parse_error(lineno, format!("expected 'x -> y', got {line:?}")));
        };
        if arrow != "->" {
            return Err(parse_error(lineno, format!("expected 'x -> y', got {line:?}")));
        }
        let x = source
            .find(x)
            .ok_or_else(|| parse_error(lineno, format!("unknown source element {x:?}")))?;
        let y = target
            .find(y)
            .ok_or_else(|| parse_error(lineno, format!("unknown target element {y:?}")))?;
        if values[x].replace(y).is_some() {
            return Err(parse_error(lineno, format!("{:?} mapped twice", source.label(x))));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| parse_error(last_line, format!("no image for {:?}", source.label(x)))))
        .collect::<Result<Vec<_>>>()?;
    OrderMap::new(source.clone(), target.clone(), values)
}

pub fn emit_map(f: &OrderMap) -> String {
    let mut out = String::new();
    for x in f.source().elements() {
        let _ = writeln!(out, "{} -> {}", f.source().label(x), f.target().label(f.apply(x)));
    }
    out
}

/// `FPP: <bool> (method=<m>)`, followed by the witness map when there is one.
pub fn format_verdict(v: &FppVerdict) -> String {
    let mut out = format!("FPP: {} (method={})\n", v.has_fpp, v.method);
    if let Some(w) = &v.witness {
        out.push_str("witness:\n");
        out.push_str(&emit_map(w));
    }
    out
}

pub fn format_trace(p: &Poset, t: &DismantlingTrace) -> String {
    let mut out = String::new();
    for (i, step) in t.steps.iter().enumerate() {
        let _ = writeln!(
            out,
            "step {}: remove {} ({})",
            i + 1,
            p.label(step.removed),
            step.reason
        );
    }
    let core: Vec<&str> = t.core_elements.iter().map(|x| p.label(x)).collect();
    let _ = writeln!(out, "core: {}", core.join(" "));
    let _ = writeln!(out, "dismantlable: {}", t.is_dismantlable());
    out
}
