//! The line-oriented input format.
//!
//! ```text
//! # Comments run from `#` to the end of the line.
//! kind rank-table
//! n 2
//! rank empty 0
//! rank 1 1
//! rank 2 1
//! rank 1,2 1
//! ```
//!
//! Other kinds use `vertices <count>` with `edge <u> <v>` (graph),
//! `n <count>` with `base <elements>` (matroid), and `vertices <names>` with
//! `hedge <names>` (hypergraph). Elements and vertices are numbered from 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::frontends::{FrontendError, GraphModel, HypergraphModel, MatroidModel};
use crate::polymatroid::{Polymatroid, RankTable, ValidationError, HARD_MAX_GROUND};
use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    /// Rank values indexed by subset bitmask.
    RankTable {
        n: usize,
        ranks: Vec<i64>,
    },
    /// Zero-based endpoints.
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Matroid {
        n: usize,
        bases: Vec<Subset>,
    },
    /// Hyperedges as sets of vertex indices into `names`.
    Hypergraph {
        names: Vec<String>,
        hyperedges: Vec<Subset>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    RankTable,
    Graph,
    Matroid,
    Hypergraph,
}

impl DocumentKind {
    pub fn name(self) -> &'static str {
        match self {
            DocumentKind::RankTable => "rank-table",
            DocumentKind::Graph => "graph",
            DocumentKind::Matroid => "matroid",
            DocumentKind::Hypergraph => "hypergraph",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "rank-table" => DocumentKind::RankTable,
            "graph" => DocumentKind::Graph,
            "matroid" | "matroid-bases" => DocumentKind::Matroid,
            "hypergraph" => DocumentKind::Hypergraph,
            _ => return None,
        })
    }
}

/// A syntax or semantic error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

fn tokenize(line: &str, number: usize) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in content.char_indices().chain([(content.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &content[s..i],
                    line: number,
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn parse_count(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text.parse::<usize>().map_err(|_| {
        tok.error(format!(
            "expected a nonnegative {what}, found {:?}",
            tok.text
        ))
    })
}

/// A 1-based label in `1..=bound`.
fn parse_label(tok: &Token<'_>, text: &str, bound: usize, what: &str) -> Result<usize, ParseError> {
    match text.parse::<usize>() {
        Ok(v) if (1..=bound).contains(&v) => Ok(v - 1),
        Ok(v) => Err(tok.error(format!("{what} {v} is outside 1..={bound}"))),
        Err(_) => Err(tok.error(format!("expected a {what}, found {text:?}"))),
    }
}

/// `empty` or a comma-separated list of distinct elements.
fn parse_elements(tok: &Token<'_>, n: usize) -> Result<Subset, ParseError> {
    if tok.text == "empty" {
        return Ok(Subset::EMPTY);
    }
    let mut s = Subset::EMPTY;
    for part in tok.text.split(',') {
        let e = parse_label(tok, part, n, "element")?;
        if s.contains(e) {
            return Err(tok.error(format!("element {} is repeated", e + 1)));
        }
        s = s.with(e);
    }
    Ok(s)
}

fn expect_args<'a>(tokens: &'a [Token<'a>], count: usize) -> Result<&'a [Token<'a>], ParseError> {
    let head = &tokens[0];
    if tokens.len() - 1 != count {
        let at = tokens.get(count + 1).unwrap_or(head);
        return Err(at.error(format!(
            "`{}` takes {count} argument{}, found {}",
            head.text,
            if count == 1 { "" } else { "s" },
            tokens.len() - 1
        )));
    }
    Ok(&tokens[1..])
}

/// Vertex names separated by whitespace or commas.
fn split_names<'a>(tokens: &'a [Token<'a>]) -> impl Iterator<Item = (Token<'a>, &'a str)> + 'a {
    tokens.iter().flat_map(|t| {
        t.text
            .split(',')
            .filter(|s| !s.is_empty())
            .map(move |s| (*t, s))
    })
}

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let lines: Vec<Vec<Token<'_>>> = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(l, i + 1))
        .filter(|t| !t.is_empty())
        .collect();
    let end = ParseError {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing `kind` line".into(),
    };
    let Some((first, rest)) = lines.split_first() else {
        return Err(end);
    };
    if first[0].text != "kind" {
        return Err(first[0].error(format!("expected `kind`, found {:?}", first[0].text)));
    }
    let kind_tok = expect_args(first, 1)?[0];
    let kind = DocumentKind::parse(kind_tok.text).ok_or_else(|| {
        kind_tok.error(format!(
            "unknown kind {:?}; expected rank-table, graph, matroid or hypergraph",
            kind_tok.text
        ))
    })?;
    let Some((header, body)) = rest.split_first() else {
        return Err(ParseError {
            message: format!("missing the size line of a {} document", kind.name()),
            ..end
        });
    };
    let size_key = match kind {
        DocumentKind::RankTable | DocumentKind::Matroid => "n",
        DocumentKind::Graph | DocumentKind::Hypergraph => "vertices",
    };
    if header[0].text != size_key {
        return Err(header[0].error(format!("expected `{size_key}`, found {:?}", header[0].text)));
    }
    let entry_key = match kind {
        DocumentKind::RankTable => "rank",
        DocumentKind::Graph => "edge",
        DocumentKind::Matroid => "base",
        DocumentKind::Hypergraph => "hedge",
    };
    for line in body {
        if line[0].text != entry_key {
            return Err(line[0].error(format!("expected `{entry_key}`, found {:?}", line[0].text)));
        }
    }

    match kind {
        DocumentKind::RankTable => {
            let n_tok = expect_args(header, 1)?[0];
            let n = parse_count(&n_tok, "element count")?;
            if n == 0 || n > HARD_MAX_GROUND {
                return Err(n_tok.error(format!("n must lie in 1..={HARD_MAX_GROUND}")));
            }
            let mut ranks: BTreeMap<u32, i64> = BTreeMap::new();
            for line in body {
                let args = expect_args(line, 2)?;
                let s = parse_elements(&args[0], n)?;
                let v = args[1].text.parse::<i64>().map_err(|_| {
                    args[1].error(format!(
                        "expected an integer rank, found {:?}",
                        args[1].text
                    ))
                })?;
                if ranks.insert(s.bits(), v).is_some() {
                    return Err(args[0].error(format!("rank of {s} given twice")));
                }
            }
            if let Some(missing) = Subset::all(n).find(|s| !ranks.contains_key(&s.bits())) {
                return Err(n_tok.error(format!(
                    "rank table is incomplete: no value for {}",
                    if missing.is_empty() {
                        "empty".to_string()
                    } else {
                        missing.to_string()
                    }
                )));
            }
            Ok(InputDocument::RankTable {
                n,
                ranks: ranks.into_values().collect(),
            })
        }
        DocumentKind::Graph => {
            let v_tok = expect_args(header, 1)?[0];
            let vertices = parse_count(&v_tok, "vertex count")?;
            if vertices == 0 {
                return Err(v_tok.error("a graph needs at least one vertex"));
            }
            if body.len() > MAX_ELEMENTS {
                return Err(body[MAX_ELEMENTS][0].error(format!("more than {MAX_ELEMENTS} edges")));
            }
            let edges = body
                .iter()
                .map(|line| {
                    let args = expect_args(line, 2)?;
                    Ok((
                        parse_label(&args[0], args[0].text, vertices, "vertex")?,
                        parse_label(&args[1], args[1].text, vertices, "vertex")?,
                    ))
                })
                .collect::<Result<_, ParseError>>()?;
            Ok(InputDocument::Graph { vertices, edges })
        }
        DocumentKind::Matroid => {
            let n_tok = expect_args(header, 1)?[0];
            let n = parse_count(&n_tok, "element count")?;
            if n > MAX_ELEMENTS {
                return Err(n_tok.error(format!("n must be at most {MAX_ELEMENTS}")));
            }
            let bases = body
                .iter()
                .map(|line| parse_elements(&expect_args(line, 1)?[0], n))
                .collect::<Result<_, ParseError>>()?;
            Ok(InputDocument::Matroid { n, bases })
        }
        DocumentKind::Hypergraph => {
            let mut names: Vec<String> = Vec::new();
            for (tok, name) in split_names(&header[1..]) {
                if names.iter().any(|n| n == name) {
                    return Err(tok.error(format!("vertex name {name:?} is repeated")));
                }
                names.push(name.to_string());
            }
            if names.is_empty() {
                return Err(header[0].error("a hypergraph needs at least one vertex"));
            }
            if names.len() > MAX_ELEMENTS {
                return Err(header[0].error(format!("more than {MAX_ELEMENTS} vertices")));
            }
            let hyperedges = body
                .iter()
                .map(|line| {
                    let mut e = Subset::EMPTY;
                    for (tok, name) in split_names(&line[1..]) {
                        let v = names
                            .iter()
                            .position(|n| n == name)
                            .ok_or_else(|| tok.error(format!("unknown vertex {name:?}")))?;
                        e = e.with(v);
                    }
                    if e.is_empty() {
                        return Err(line[0].error("a hyperedge needs at least one vertex"));
                    }
                    Ok(e)
                })
                .collect::<Result<_, ParseError>>()?;
            Ok(InputDocument::Hypergraph { names, hyperedges })
        }
    }
}

fn elements_text(s: Subset) -> String {
    if s.is_empty() {
        return "empty".into();
    }
    s.labels()
        .into_iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl InputDocument {
    pub fn kind(&self) -> DocumentKind {
        match self {
            InputDocument::RankTable { .. } => DocumentKind::RankTable,
            InputDocument::Graph { .. } => DocumentKind::Graph,
            InputDocument::Matroid { .. } => DocumentKind::Matroid,
            InputDocument::Hypergraph { .. } => DocumentKind::Hypergraph,
        }
    }

    /// Canonical text; `parse(&doc.emit()) == Ok(doc)`.
    pub fn emit(&self) -> String {
        let mut out = format!("kind {}\n", self.kind().name());
        match self {
            InputDocument::RankTable { n, ranks } => {
                let _ = writeln!(out, "n {n}");
                for (s, v) in Subset::all(*n).zip(ranks) {
                    let _ = writeln!(out, "rank {} {v}", elements_text(s));
                }
            }
            InputDocument::Graph { vertices, edges } => {
                let _ = writeln!(out, "vertices {vertices}");
                for (u, v) in edges {
                    let _ = writeln!(out, "edge {} {}", u + 1, v + 1);
                }
            }
            InputDocument::Matroid { n, bases } => {
                let _ = writeln!(out, "n {n}");
                for b in bases {
                    let _ = writeln!(out, "base {}", elements_text(*b));
                }
            }
            InputDocument::Hypergraph { names, hyperedges } => {
                let _ = writeln!(out, "vertices {}", names.join(" "));
                for e in hyperedges {
                    let members: Vec<&str> = e.elements().map(|v| names[v].as_str()).collect();
                    let _ = writeln!(out, "hedge {}", members.join(" "));
                }
            }
        }
        out
    }

    /// Ground-set size of the polymatroid this document describes.
    pub fn ground_size(&self) -> usize {
        match self {
            InputDocument::RankTable { n, .. } | InputDocument::Matroid { n, .. } => *n,
            InputDocument::Graph { edges, .. } => edges.len(),
            InputDocument::Hypergraph { hyperedges, .. } => hyperedges.len(),
        }
    }

    /// Builds the model and its polymatroid, refusing ground sets larger than
    /// `max_n`.
    pub fn build(&self, max_n: usize) -> Result<Instance, BuildError> {
        let size = self.ground_size();
        let limit = max_n.min(HARD_MAX_GROUND);
        if size > limit {
            return Err(BuildError::TooLarge { size, limit });
        }
        Ok(match self {
            InputDocument::RankTable { n, ranks } => {
                let table = RankTable::new(*n, ranks.clone())?;
                Instance::RankTable(Polymatroid::new(table)?)
            }
            InputDocument::Graph { vertices, edges } => {
                let g = GraphModel::new(*vertices, edges.clone())?;
                let p = g.polymatroid(limit)?;
                Instance::Graph(g, p)
            }
            InputDocument::Matroid { n, bases } => {
                let m = MatroidModel::new(*n, bases.clone())?;
                let p = m.polymatroid(limit)?;
                Instance::Matroid(m, p)
            }
            InputDocument::Hypergraph { names, hyperedges } => {
                let h = HypergraphModel::new(names.clone(), hyperedges.clone())?;
                let p = h.polymatroid(limit)?;
                Instance::Hypergraph(h, p)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("ground set of size {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid rank table: {0}")]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Frontend(#[from] FrontendError),
}

/// A validated model together with its polymatroid.
#[derive(Debug, Clone)]
pub enum Instance {
    RankTable(Polymatroid),
    Graph(GraphModel, Polymatroid),
    Matroid(MatroidModel, Polymatroid),
    Hypergraph(HypergraphModel, Polymatroid),
}

impl Instance {
    pub fn polymatroid(&self) -> &Polymatroid {
        match self {
            Instance::RankTable(p)
            | Instance::Graph(_, p)
            | Instance::Matroid(_, p)
            | Instance::Hypergraph(_, p) => p,
        }
    }
}
