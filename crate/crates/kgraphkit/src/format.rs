//! The line-oriented text format for graph presentations.
//!
//! One record per line: `rank <k>`, `vertex <id>`, `edge <id> color=<i>
//! range=<vid> source=<vid>`, `square <f> <g> = <g2> <f2>` (read as f
//! followed by g equals g2 followed by f2, with the lower color first on
//! both sides), and `budget degree=<a,...> presentation=<n>
//! saturation=<a,...>` with any subset of the three keys. Everything after
//! `#` is a comment.

use crate::budget::PartialBudget;
use crate::error::{Error, Result};
use crate::skeleton::{EdgeSpec, KGraphSpec, SquareSpec};

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens with their 1-based column positions.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_number<T: std::str::FromStr>(lineno: usize, col: usize, tok: &str) -> Result<T> {
    tok.parse::<T>()
        .map_err(|_| parse_err(lineno, col, format!("expected a number, got `{tok}`")))
}

fn parse_component_list(lineno: usize, col: usize, val: &str) -> Result<Vec<u32>> {
    let parts: Result<Vec<u32>> = val
        .split(',')
        .map(|c| {
            c.parse::<u32>()
                .map_err(|_| parse_err(lineno, col, format!("expected numbers, got `{val}`")))
        })
        .collect();
    let parts = parts?;
    if parts.is_empty() {
        return Err(parse_err(lineno, col, "empty component list"));
    }
    Ok(parts)
}

fn key_value<'a>(
    lineno: usize,
    col: usize,
    tok: &'a str,
    key: &str,
) -> Result<&'a str> {
    match tok.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(parse_err(
            lineno,
            col,
            format!("expected `{key}=<value>`, got `{tok}`"),
        )),
    }
}

/// Parses the text format into a raw presentation plus any budget
/// components the file sets. The presentation is not validated here; build
/// the graph from it to validate.
pub fn parse_kgraph(text: &str) -> Result<(KGraphSpec, PartialBudget)> {
    let mut spec = KGraphSpec::default();
    let mut budget = PartialBudget::default();
    let mut rank_seen: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let (kcol, keyword) = toks[0];
        match keyword {
            "rank" => {
                if rank_seen.is_some() {
                    return Err(parse_err(lineno, kcol, "duplicate rank line"));
                }
                let &[(col, tok)] = &toks[1..] else {
                    return Err(parse_err(lineno, kcol, "usage: rank <k>"));
                };
                let k: usize = parse_number(lineno, col, tok)?;
                rank_seen = Some(k);
                spec.rank = k;
            }
            "vertex" => {
                let &[(_, id)] = &toks[1..] else {
                    return Err(parse_err(lineno, kcol, "usage: vertex <id>"));
                };
                spec.vertices.push(id.to_string());
            }
            "edge" => {
                let &[(_, id), (c1, t1), (c2, t2), (c3, t3)] = &toks[1..] else {
                    return Err(parse_err(
                        lineno,
                        kcol,
                        "usage: edge <id> color=<i> range=<vid> source=<vid>",
                    ));
                };
                let color_val = key_value(lineno, c1, t1, "color")?;
                let color: usize = parse_number(lineno, c1, color_val)?;
                let range = key_value(lineno, c2, t2, "range")?;
                let source = key_value(lineno, c3, t3, "source")?;
                spec.edges.push(EdgeSpec {
                    id: id.to_string(),
                    color,
                    range: range.to_string(),
                    source: source.to_string(),
                });
            }
            "square" => {
                let &[(_, f), (_, g), (ecol, eq), (_, g2), (_, f2)] = &toks[1..] else {
                    return Err(parse_err(
                        lineno,
                        kcol,
                        "usage: square <f> <g> = <g2> <f2>",
                    ));
                };
                if eq != "=" {
                    return Err(parse_err(lineno, ecol, format!("expected `=`, got `{eq}`")));
                }
                spec.squares.push(SquareSpec {
                    f: f.to_string(),
                    g: g.to_string(),
                    g2: g2.to_string(),
                    f2: f2.to_string(),
                });
            }
            "budget" => {
                if toks.len() == 1 {
                    return Err(parse_err(
                        lineno,
                        kcol,
                        "usage: budget [degree=<a,...>] [presentation=<n>] [saturation=<a,...>]",
                    ));
                }
                for &(col, tok) in &toks[1..] {
                    let Some((key, val)) = tok.split_once('=') else {
                        return Err(parse_err(
                            lineno,
                            col,
                            format!("expected `<key>=<value>`, got `{tok}`"),
                        ));
                    };
                    match key {
                        "degree" => {
                            budget.degree_bound = Some(parse_component_list(lineno, col, val)?)
                        }
                        "presentation" => {
                            budget.presentation_bound = Some(parse_number(lineno, col, val)?)
                        }
                        "saturation" => {
                            budget.saturation_bound = Some(parse_component_list(lineno, col, val)?)
                        }
                        _ => {
                            return Err(parse_err(
                                lineno,
                                col,
                                format!("unknown budget key `{key}`"),
                            ))
                        }
                    }
                }
            }
            _ => {
                return Err(parse_err(
                    lineno,
                    kcol,
                    format!("unknown record `{keyword}`"),
                ));
            }
        }
    }
    if rank_seen.is_none() {
        return Err(parse_err(1, 1, "missing `rank <k>` line"));
    }
    Ok((spec, budget))
}

fn components_string(v: &[u32]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders a presentation (and any set budget components) in the text
/// format. Parsing the output reproduces the inputs record for record.
pub fn serialize_kgraph(spec: &KGraphSpec, budget: &PartialBudget) -> String {
    let mut out = String::new();
    out.push_str(&format!("rank {}\n", spec.rank));
    for v in &spec.vertices {
        out.push_str(&format!("vertex {v}\n"));
    }
    for e in &spec.edges {
        out.push_str(&format!(
            "edge {} color={} range={} source={}\n",
            e.id, e.color, e.range, e.source
        ));
    }
    for s in &spec.squares {
        out.push_str(&format!("square {} {} = {} {}\n", s.f, s.g, s.g2, s.f2));
    }
    if !budget.is_empty() {
        out.push_str("budget");
        if let Some(d) = &budget.degree_bound {
            out.push_str(&format!(" degree={}", components_string(d)));
        }
        if let Some(p) = budget.presentation_bound {
            out.push_str(&format!(" presentation={p}"));
        }
        if let Some(s) = &budget.saturation_bound {
            out.push_str(&format!(" saturation={}", components_string(s)));
        }
        out.push('\n');
    }
    out
}
