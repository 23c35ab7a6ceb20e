//! DIMACS `col` and `cnf` reading and writing.
//!
//! `col`: comment lines start with `c`, one header `p edge <n> <m>` (the
//! variant `p col` is accepted too), then edge lines `e <u> <v>` with
//! 1-based endpoints. Self-loops and repeated edges are dropped with a
//! warning, and a header edge count that differs from the number of edge
//! lines is reported as a warning; the edges actually read win.
//!
//! `cnf`: comment lines, a header `p cnf <r> <s>`, then clauses as
//! whitespace-separated literals each terminated by `0`, freely spread over
//! lines. A line holding only `%` ends the input (as in SATLIB files).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use chroma_core::reductions::CnfFormula;
use chroma_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the input as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| err(line, format!("{what} '{token}' is not a non-negative integer")))
}

pub fn parse_dimacs_col(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = BTreeSet::new();
    let mut edge_lines = 0;
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(err(
                            line,
                            format!("expected 'p edge', found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let n = parse_count(tokens.next(), line, "vertex count")?;
                let m = parse_count(tokens.next(), line, "edge count")?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after problem line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err(line, "edge before problem line"))?;
                let u = parse_count(tokens.next(), line, "endpoint")?;
                let v = parse_count(tokens.next(), line, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after edge"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                edge_lines += 1;
                if u == v {
                    warnings.push(format!("line {line}: self-loop on {u} dropped"));
                } else if !edges.insert((u.min(v) - 1, u.max(v) - 1)) {
                    warnings.push(format!("line {line}: repeated edge {u}-{v} dropped"));
                }
            }
            Some(t) => return Err(err(line, format!("unknown line type '{t}'"))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(0, "missing problem line 'p edge <n> <m>'"))?;
    if m != edge_lines {
        warnings.push(format!(
            "header declares {m} edges but {edge_lines} edge lines were read"
        ));
    }
    let graph = Graph::new(n, edges).map_err(|e| err(0, e.to_string()))?;
    Ok(ParsedGraph { graph, warnings })
}

/// Header, then edges in canonical order with 1-based endpoints.
pub fn write_dimacs_col(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            writeln!(out, "c {line}").expect("writing to a string");
        }
    }
    writeln!(out, "p edge {} {}", g.n(), g.m()).expect("writing to a string");
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a string");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedCnf {
    /// The non-empty clauses.
    pub formula: CnfFormula,
    /// An empty clause was read, so the formula is unsatisfiable whatever
    /// the other clauses say.
    pub unsatisfiable_at_parse: bool,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs_cnf(text: &str) -> Result<ParsedCnf, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_start = 0;
    let mut empty_clause = false;
    let mut read = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed == "%" {
            break;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            if header.is_some() {
                return Err(err(line, "second problem line"));
            }
            let mut tokens = rest.split_whitespace();
            if tokens.next() != Some("cnf") {
                return Err(err(line, "expected 'p cnf <variables> <clauses>'"));
            }
            let r = parse_count(tokens.next(), line, "variable count")?;
            let s = parse_count(tokens.next(), line, "clause count")?;
            if tokens.next().is_some() {
                return Err(err(line, "trailing tokens after problem line"));
            }
            if r > i32::MAX as usize {
                return Err(err(line, "too many variables"));
            }
            header = Some((r, s));
            continue;
        }
        let (r, _) = header.ok_or_else(|| err(line, "clause before problem line"))?;
        for token in trimmed.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| err(line, format!("literal '{token}' is not an integer")))?;
            if lit == 0 {
                read += 1;
                if current.is_empty() {
                    empty_clause = true;
                } else {
                    clauses.push(std::mem::take(&mut current));
                }
            } else if lit.unsigned_abs() as usize > r {
                return Err(err(line, format!("literal {lit} outside variables 1..={r}")));
            } else {
                if current.is_empty() {
                    current_start = line;
                }
                current.push(lit);
            }
        }
    }
    let (r, s) = header.ok_or_else(|| err(0, "missing problem line 'p cnf <r> <s>'"))?;
    if !current.is_empty() {
        return Err(err(current_start, "clause missing its terminating 0"));
    }
    let mut warnings = Vec::new();
    if read != s {
        warnings.push(format!("header declares {s} clauses but {read} were read"));
    }
    if empty_clause {
        warnings.push("empty clause read: formula is unsatisfiable".into());
    }
    let formula = CnfFormula::new(r, clauses).map_err(|e| err(0, e.to_string()))?;
    Ok(ParsedCnf {
        formula,
        unsatisfiable_at_parse: empty_clause,
        warnings,
    })
}

pub fn write_dimacs_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.variables(), phi.clauses().len());
    for clause in phi.clauses() {
        for lit in clause {
            write!(out, "{lit} ").expect("writing to a string");
        }
        out.push_str("0\n");
    }
    out
}
