//! Text and JSON formats for posets, hypergraphs and edge labelings.
//!
//! ```text
//! poset v1
//! elements 3
//! element 0 bottom
//! cover 0 1
//! rel 0 2
//! ```
//!
//! `cover` lines must be genuine covers of the resulting order; `rel` lines may
//! be any order relations and are closed and reduced. Either `elements <n>` or
//! one `element <i> <name>` line per element fixes the ground set. Blank lines
//! and `#` comments are ignored everywhere; unknown directives are errors.
//!
//! ```text
//! hypergraph v1
//! d 2
//! vertices 3
//! edge 0 1
//! ```
//!
//! Edge labelings are `label <x> <y> <k>` lines, one per cover.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::labeling::EdgeLabeling;
use crate::poset::Poset;
use crate::Instance;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn num(line: usize, tok: Option<&&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

fn exact_arity(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() == n {
        Ok(())
    } else {
        Err(parse_err(
            line,
            format!("`{}` expects {} arguments", toks[0], n - 1),
        ))
    }
}

fn expect_header(text: &str, header: &str) -> Result<usize> {
    match content_lines(text).next() {
        Some((line, toks)) if toks.join(" ") == header => Ok(line),
        Some((line, _)) => Err(parse_err(line, format!("expected header `{header}`"))),
        None => Err(parse_err(1, format!("empty input, expected `{header}`"))),
    }
}

pub fn parse_poset_text(text: &str) -> Result<Poset> {
    let header = expect_header(text, "poset v1")?;
    let mut count: Option<(usize, usize)> = None;
    let mut names: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    let mut covers: Vec<(usize, usize, usize)> = Vec::new();
    let mut rels: Vec<(usize, usize, usize)> = Vec::new();
    for (line, toks) in content_lines(text).filter(|(l, _)| *l != header) {
        match toks[0] {
            "elements" => {
                exact_arity(line, &toks, 2)?;
                if count.is_some() {
                    return Err(parse_err(line, "duplicate `elements` line"));
                }
                count = Some((line, num(line, toks.get(1), "element count")?));
            }
            "element" => {
                if toks.len() < 3 {
                    return Err(parse_err(line, "`element` expects an index and a name"));
                }
                let i = num(line, toks.get(1), "element index")?;
                let name = toks[2..].join(" ");
                if names.insert(i, (line, name)).is_some() {
                    return Err(parse_err(line, format!("element {i} named twice")));
                }
            }
            kind @ ("cover" | "rel") => {
                exact_arity(line, &toks, 3)?;
                let x = num(line, toks.get(1), "element")?;
                let y = num(line, toks.get(2), "element")?;
                if x == y {
                    return Err(parse_err(line, format!("self-loop on element {x}")));
                }
                if kind == "cover" {
                    &mut covers
                } else {
                    &mut rels
                }
                .push((line, x, y));
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let n = match count {
        Some((_, n)) => n,
        None => names.keys().next_back().map_or(0, |&m| m + 1),
    };
    if let Some((&i, (line, _))) = names.iter().find(|(&i, _)| i >= n) {
        return Err(parse_err(
            *line,
            format!("element {i} out of range for {n} elements"),
        ));
    }
    if count.is_none() && names.len() != n {
        let missing = (0..n).find(|i| !names.contains_key(i)).unwrap_or(0);
        return Err(parse_err(
            header,
            format!("element {missing} is never declared"),
        ));
    }
    for &(line, x, y) in covers.iter().chain(&rels) {
        if x >= n || y >= n {
            return Err(parse_err(
                line,
                format!("element {} out of range for {n} elements", x.max(y)),
            ));
        }
    }
    let pairs: Vec<(usize, usize)> = covers
        .iter()
        .chain(&rels)
        .map(|&(_, x, y)| (x, y))
        .collect();
    let mut p = Poset::build(n, &pairs)?;
    if let Some(&(line, x, y)) = covers.iter().find(|&&(_, x, y)| !p.is_cover(x, y)) {
        return Err(parse_err(
            line,
            format!("{x} < {y} is not a cover relation"),
        ));
    }
    if !names.is_empty() {
        let all = (0..n)
            .map(|i| {
                names
                    .get(&i)
                    .map_or_else(|| i.to_string(), |(_, s)| s.clone())
            })
            .collect();
        p = p.with_names(all)?;
    }
    Ok(p)
}

pub fn poset_to_text(p: &Poset) -> String {
    let mut out = String::from("poset v1\n");
    let _ = writeln!(out, "elements {}", p.len());
    if let Some(names) = p.names() {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "element {i} {name}");
        }
    }
    for &(x, y) in p.covers() {
        let _ = writeln!(out, "cover {x} {y}");
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    covers: Vec<(usize, usize)>,
}

pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let raw: PosetJson = serde_json::from_str(text).map_err(json_err)?;
    let p = Poset::build(raw.n, &raw.covers)?;
    if let Some(&(x, y)) = raw.covers.iter().find(|&&(x, y)| !p.is_cover(x, y)) {
        return Err(parse_err(1, format!("{x} < {y} is not a cover relation")));
    }
    match raw.names {
        Some(names) => p.with_names(names),
        None => Ok(p),
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    let raw = PosetJson {
        n: p.len(),
        names: p.names().map(<[String]>::to_vec),
        covers: p.covers().to_vec(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line().max(1), e.to_string())
}

pub fn parse_hypergraph_text(text: &str) -> Result<Hypergraph> {
    let header = expect_header(text, "hypergraph v1")?;
    let mut d = None;
    let mut v = None;
    let mut edges = Vec::new();
    for (line, toks) in content_lines(text).filter(|(l, _)| *l != header) {
        match toks[0] {
            "d" => {
                exact_arity(line, &toks, 2)?;
                d = Some(num(line, toks.get(1), "d")?);
            }
            "vertices" => {
                exact_arity(line, &toks, 2)?;
                v = Some(num(line, toks.get(1), "vertex count")?);
            }
            "edge" => {
                let e = toks[1..]
                    .iter()
                    .map(|t| num(line, Some(t), "vertex"))
                    .collect::<Result<Vec<_>>>()?;
                edges.push((line, e));
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let d = d.ok_or_else(|| parse_err(header, "missing `d` line"))?;
    let v = v.ok_or_else(|| parse_err(header, "missing `vertices` line"))?;
    // validate per line first so errors carry the offending line
    let mut seen = std::collections::HashSet::new();
    for (line, e) in &edges {
        let mut s = e.clone();
        s.sort_unstable();
        Hypergraph::new(d, v, vec![s.clone()]).map_err(|err| parse_err(*line, err.to_string()))?;
        if !seen.insert(s) {
            return Err(parse_err(*line, "duplicate edge"));
        }
    }
    Hypergraph::new(d, v, edges.into_iter().map(|(_, e)| e).collect())
}

pub fn hypergraph_to_text(h: &Hypergraph) -> String {
    let mut out = String::from("hypergraph v1\n");
    let _ = writeln!(out, "d {}", h.d());
    let _ = writeln!(out, "vertices {}", h.vertex_count());
    for e in h.edges() {
        let items: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "edge {}", items.join(" "));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    d: usize,
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

pub fn parse_hypergraph_json(text: &str) -> Result<Hypergraph> {
    let raw: HypergraphJson = serde_json::from_str(text).map_err(json_err)?;
    Hypergraph::new(raw.d, raw.vertices, raw.edges)
}

pub fn hypergraph_to_json(h: &Hypergraph) -> String {
    let raw = HypergraphJson {
        d: h.d(),
        vertices: h.vertex_count(),
        edges: h.edges().to_vec(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Parses either text format, or a JSON object (a poset when it has an `n`
/// field, a hypergraph when it has `d`).
pub fn parse_instance(text: &str) -> Result<Instance> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
        return if value.get("n").is_some() {
            parse_poset_json(text).map(Instance::Poset)
        } else if value.get("d").is_some() {
            parse_hypergraph_json(text).map(Instance::Hypergraph)
        } else {
            Err(parse_err(1, "JSON object has neither `n` nor `d`"))
        };
    }
    match content_lines(text).next() {
        Some((_, toks)) if toks.first() == Some(&"poset") => {
            parse_poset_text(text).map(Instance::Poset)
        }
        Some((_, toks)) if toks.first() == Some(&"hypergraph") => {
            parse_hypergraph_text(text).map(Instance::Hypergraph)
        }
        Some((line, _)) => Err(parse_err(line, "expected `poset v1` or `hypergraph v1`")),
        None => Err(parse_err(1, "empty input")),
    }
}

pub fn instance_to_text(instance: &Instance) -> String {
    match instance {
        Instance::Poset(p) => poset_to_text(p),
        Instance::Hypergraph(h) => hypergraph_to_text(h),
    }
}

pub fn instance_to_json(instance: &Instance) -> String {
    match instance {
        Instance::Poset(p) => poset_to_json(p),
        Instance::Hypergraph(h) => hypergraph_to_json(h),
    }
}

pub fn parse_labeling_text(p: &Poset, text: &str) -> Result<EdgeLabeling> {
    let mut labels = BTreeMap::new();
    for (line, toks) in content_lines(text) {
        if toks[0] != "label" {
            return Err(parse_err(line, format!("unknown directive `{}`", toks[0])));
        }
        exact_arity(line, &toks, 4)?;
        let x = num(line, toks.get(1), "element")?;
        let y = num(line, toks.get(2), "element")?;
        let k: i64 = toks[3]
            .parse()
            .map_err(|_| parse_err(line, format!("label `{}` is not an integer", toks[3])))?;
        if x >= p.len() || y >= p.len() || !p.is_cover(x, y) {
            return Err(parse_err(
                line,
                format!("{x} < {y} is not a cover relation"),
            ));
        }
        if labels.insert((x, y), k).is_some() {
            return Err(parse_err(line, format!("cover {x} {y} labeled twice")));
        }
    }
    EdgeLabeling::new(p, labels)
}

pub fn labeling_to_text(lam: &EdgeLabeling) -> String {
    let mut out = String::new();
    for ((x, y), k) in lam.iter() {
        let _ = writeln!(out, "label {x} {y} {k}");
    }
    out
}
