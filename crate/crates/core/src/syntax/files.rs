//! Line-oriented trust (`.vtrust`) and search configuration (`.vcfg`) files.
//!
//! ```text
//! # trust file
//! relation T
//! k T[0.5] l
//! l T[0.4] m
//! ```
//!
//! ```text
//! # search configuration
//! assume:
//!   e ^ a1 in C
//!   e ^ a1 in C /\ C
//! trust:
//!   k T[0.5] l
//! rules: Assume, AndIntro
//! depth: 3
//! max-proofs: 1000
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{ParseError, TrustError};
use crate::judgement::ActorId;
use crate::kernel::RuleName;
use crate::search::StepConfig;
use crate::trust::TrustRelation;
use crate::weight::Weight;

use super::parser::Parser;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn leading_ws(line: &str) -> usize {
    line.chars().take_while(|c| c.is_whitespace()).count()
}

struct Edge {
    relation: String,
    truster: ActorId,
    trusted: ActorId,
    weight: Weight,
}

fn parse_edge(text: &str, line: usize, column: usize) -> Result<Edge, ParseError> {
    let mut p = Parser::at(text, line, column)?;
    let truster = p.actor()?;
    let relation = p.ident_token()?;
    let weight = p.eat_bracket_weight()?.unwrap_or_else(Weight::one);
    let trusted = p.actor()?;
    p.finish()?;
    Ok(Edge {
        relation,
        truster,
        trusted,
        weight,
    })
}

fn add_edge(rels: &mut Vec<TrustRelation>, e: Edge, line: usize, column: usize) -> Result<(), ParseError> {
    let idx = match rels.iter().position(|r| r.name == e.relation) {
        Some(i) => i,
        None => {
            rels.push(TrustRelation::new(e.relation.clone()));
            rels.len() - 1
        }
    };
    rels[idx]
        .add_edge(e.truster, e.trusted, e.weight)
        .map_err(|err: TrustError| ParseError::new(line, column, err.to_string()))
}

/// Parses a trust file holding one or more `relation` blocks.
pub fn parse_trust_relations(text: &str) -> Result<Vec<TrustRelation>, ParseError> {
    let mut rels: Vec<TrustRelation> = Vec::new();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let col = leading_ws(body) + 1;
        let trimmed = body.trim();
        if let Some(rest) = trimmed.strip_prefix("relation") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                let mut p = Parser::at(rest, line, col + "relation".len())?;
                let name = p.ident_token()?;
                p.finish()?;
                if rels.iter().any(|r| r.name == name) {
                    return Err(ParseError::new(line, col, format!("relation `{name}` is declared twice")));
                }
                rels.push(TrustRelation::new(name.clone()));
                current = Some(name);
                continue;
            }
        }
        let Some(name) = &current else {
            return Err(ParseError::new(line, col, "edge before any `relation` header"));
        };
        let edge = parse_edge(trimmed, line, col)?;
        if &edge.relation != name {
            return Err(ParseError::new(
                line,
                col,
                format!("edge names relation `{}` inside relation `{name}`", edge.relation),
            ));
        }
        add_edge(&mut rels, edge, line, col)?;
    }
    Ok(rels)
}

/// Parses a trust file that declares exactly one relation.
pub fn parse_trust(text: &str) -> Result<TrustRelation, ParseError> {
    let mut rels = parse_trust_relations(text)?;
    match rels.len() {
        1 => Ok(rels.remove(0)),
        0 => Err(ParseError::new(1, 1, "no `relation` header")),
        n => Err(ParseError::new(1, 1, format!("expected one relation, found {n}"))),
    }
}

fn write_edges(out: &mut String, rel: &TrustRelation, indent: &str) {
    for e in rel.edges() {
        if e.weight.is_one() {
            let _ = writeln!(out, "{indent}{} {} {}", e.truster, rel.name, e.trusted);
        } else {
            let _ = writeln!(out, "{indent}{} {}[{}] {}", e.truster, rel.name, e.weight, e.trusted);
        }
    }
}

pub fn print_trust(rel: &TrustRelation) -> String {
    let mut out = format!("relation {}\n", rel.name);
    write_edges(&mut out, rel, "");
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Assume,
    Trust,
    Rules,
    Depth,
    MaxProofs,
}

const SECTIONS: [(&str, Section); 5] = [
    ("assume", Section::Assume),
    ("trust", Section::Trust),
    ("rules", Section::Rules),
    ("depth", Section::Depth),
    ("max-proofs", Section::MaxProofs),
];

fn section_header(trimmed: &str) -> Option<(Section, &str, usize)> {
    SECTIONS.iter().find_map(|(name, s)| {
        let rest = trimmed.strip_prefix(name)?.strip_prefix(':')?;
        Some((*s, rest, name.len() + 1))
    })
}

fn parse_count(text: &str, line: usize, column: usize, what: &str) -> Result<usize, ParseError> {
    let t = text.trim();
    match t.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(ParseError::new(line, column, format!("{what} must be a positive integer, got `{t}`"))),
    }
}

/// Parses a search configuration. Omitted sections take their defaults.
pub fn parse_config(text: &str) -> Result<StepConfig, ParseError> {
    let mut cfg = StepConfig::default();
    let mut rules: Option<BTreeSet<RuleName>> = None;
    let mut section: Option<Section> = None;
    let mut seen = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let col = leading_ws(body) + 1;
        let trimmed = body.trim();
        let (sec, rest, rest_col) = match section_header(trimmed) {
            Some((s, rest, off)) => {
                if seen.contains(&s) {
                    return Err(ParseError::new(line, col, "section appears twice"));
                }
                seen.push(s);
                section = Some(s);
                if rest.trim().is_empty() {
                    continue;
                }
                (s, rest, col + off + leading_ws(rest))
            }
            None => match section {
                Some(s) => (s, trimmed, col),
                None => return Err(ParseError::new(line, col, "expected a section header such as `assume:`")),
            },
        };
        let rest = rest.trim();
        match sec {
            Section::Assume => {
                let mut p = Parser::at(rest, line, rest_col)?;
                let j = p.judgement()?;
                p.finish()?;
                cfg.assumables.push(j);
            }
            Section::Trust => {
                if let Some(name) = rest.strip_prefix("relation ") {
                    let name = name.trim();
                    if !cfg.trust.iter().any(|r| r.name == name) {
                        cfg.trust.push(TrustRelation::new(name));
                    }
                    continue;
                }
                let edge = parse_edge(rest, line, rest_col)?;
                add_edge(&mut cfg.trust, edge, line, rest_col)?;
            }
            Section::Rules => {
                let set = rules.get_or_insert_with(BTreeSet::new);
                for word in rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|w| !w.is_empty()) {
                    let r = word
                        .parse::<RuleName>()
                        .map_err(|e| ParseError::new(line, rest_col, e.to_string()))?;
                    set.insert(r);
                }
            }
            Section::Depth => cfg.depth = parse_count(rest, line, rest_col, "depth")?,
            Section::MaxProofs => cfg.max_proofs = parse_count(rest, line, rest_col, "max-proofs")?,
        }
    }
    if let Some(r) = rules {
        cfg.rules = r;
    }
    Ok(cfg)
}

pub fn print_config(cfg: &StepConfig) -> String {
    let mut out = String::new();
    if !cfg.assumables.is_empty() {
        out.push_str("assume:\n");
        for j in &cfg.assumables {
            let _ = writeln!(out, "  {j}");
        }
    }
    if !cfg.trust.is_empty() {
        out.push_str("trust:\n");
        for rel in &cfg.trust {
            if rel.edge_count() == 0 {
                let _ = writeln!(out, "  relation {}", rel.name);
            }
            write_edges(&mut out, rel, "  ");
        }
    }
    let rules: Vec<&str> = cfg.rules.iter().map(|r| r.as_str()).collect();
    let _ = writeln!(out, "rules: {}", rules.join(", "));
    let _ = writeln!(out, "depth: {}", cfg.depth);
    let _ = writeln!(out, "max-proofs: {}", cfg.max_proofs);
    out
}
