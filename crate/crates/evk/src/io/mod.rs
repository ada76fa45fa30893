//! Text formats for tensors and hypergraphs, and the analysis report.
//!
//! Tensor files: a header line `tensor m n`, then one line per canonical
//! entry with `m` 1-based vertex indices followed by a value token (decimal
//! or `p/q`). Hypergraph files: a header `hypergraph m n`, then one line of
//! `m` vertex indices per edge. Lines starting with `#` and blank lines are
//! ignored.

mod report;

pub use report::{AnalysisReport, BoundsJson, PerronJson, SweepJson};

use crate::hypergraph::{HypergraphError, UniformHypergraph};
use crate::tensor::{SymTensorSupport, TensorError};
use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Tensor {
        line: usize,
        #[source]
        source: TensorError,
    },
    #[error("{0}")]
    Hypergraph(#[from] HypergraphError),
}

/// A parsed input file: either a tensor support or a uniform hypergraph.
#[derive(Debug, Clone)]
pub enum FileContent {
    Tensor(SymTensorSupport),
    Hypergraph(UniformHypergraph),
}

impl FileContent {
    /// The support to analyze: a hypergraph contributes its adjacency tensor.
    pub fn support(&self) -> SymTensorSupport {
        match self {
            FileContent::Tensor(t) => t.clone(),
            FileContent::Hypergraph(g) => g.adjacency_tensor(),
        }
    }
}

/// Parses a value token: an integer, a fraction `p/q`, or a decimal.
pub fn parse_rational(token: &str) -> Option<BigRational> {
    if let Some((p, q)) = token.split_once('/') {
        let num: BigInt = p.parse().ok()?;
        let den: BigInt = q.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int, frac)) = token.split_once('.') {
        let negative = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().ok()?;
        let num = int_part.clone() * &scale + if negative { -frac_part } else { frac_part };
        return Some(BigRational::new(num, scale));
    }
    let num: BigInt = token.parse().ok()?;
    Some(BigRational::from(num))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: &str, lineno: usize) -> Result<(&str, usize, usize), ParseError> {
    let mut parts = line.split_whitespace();
    let kind = parts.next().unwrap_or_default();
    let bad = |message: String| ParseError::Malformed {
        line: lineno,
        message,
    };
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad("header needs 'tensor|hypergraph m n'".into()))?;
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad("header needs 'tensor|hypergraph m n'".into()))?;
    if parts.next().is_some() {
        return Err(bad("trailing tokens after header".into()));
    }
    Ok((kind, m, n))
}

/// Parses either file format, deciding by the header keyword.
pub fn parse_input(text: &str) -> Result<FileContent, ParseError> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(ParseError::Empty)?;
    let (kind, m, n) = parse_header(header, lineno)?;
    match kind {
        "tensor" => {
            let mut entries = Vec::new();
            for (lineno, line) in lines {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != m + 1 {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        message: format!("expected {m} indices and a value"),
                    });
                }
                let mut tuple = Vec::with_capacity(m);
                for t in &tokens[..m] {
                    tuple.push(t.parse::<usize>().map_err(|_| ParseError::Malformed {
                        line: lineno,
                        message: format!("bad index token '{t}'"),
                    })?);
                }
                let value = parse_rational(tokens[m]).ok_or_else(|| ParseError::Malformed {
                    line: lineno,
                    message: format!("bad value token '{}'", tokens[m]),
                })?;
                entries.push((tuple, value, lineno));
            }
            let first_line = entries.first().map(|(_, _, l)| *l).unwrap_or(lineno);
            let raw = entries.into_iter().map(|(t, v, _)| (t, v)).collect();
            SymTensorSupport::build_support(m, n, raw)
                .map(FileContent::Tensor)
                .map_err(|source| ParseError::Tensor {
                    line: first_line,
                    source,
                })
        }
        "hypergraph" => {
            let mut edges = Vec::new();
            for (lineno, line) in lines {
                let mut edge = Vec::with_capacity(m);
                for t in line.split_whitespace() {
                    edge.push(t.parse::<usize>().map_err(|_| ParseError::Malformed {
                        line: lineno,
                        message: format!("bad index token '{t}'"),
                    })?);
                }
                if edge.len() != m {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        message: format!("edge needs exactly {m} vertices"),
                    });
                }
                edges.push(edge);
            }
            Ok(FileContent::Hypergraph(UniformHypergraph::new(
                m, n, edges,
            )?))
        }
        other => Err(ParseError::Malformed {
            line: lineno,
            message: format!("unknown input kind '{other}'"),
        }),
    }
}

/// Canonical hypergraph text: header plus one sorted edge per line.
pub fn write_hypergraph(g: &UniformHypergraph) -> String {
    let mut out = format!("hypergraph {} {}\n", g.uniformity(), g.vertex_count());
    for e in g.edges() {
        let tokens: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical tensor text: header plus one canonical entry per line.
pub fn write_tensor(a: &SymTensorSupport) -> String {
    let mut out = format!("tensor {} {}\n", a.order(), a.dim());
    for (key, value) in a.entries() {
        let tokens: Vec<String> = key.indices().iter().map(|v| v.to_string()).collect();
        let v = if value.denom().is_one() {
            value.numer().to_string()
        } else {
            format!("{}/{}", value.numer(), value.denom())
        };
        out.push_str(&format!("{} {}\n", tokens.join(" "), v));
    }
    out
}
