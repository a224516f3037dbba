//! Line-oriented text format for algebras and their representations.
//!
//! ```text
//! # sl_2 with its natural module
//! algebra sl2 dim 3
//! labels e h f
//! b 0 1 0 -2/1
//! b 0 2 1 1/1
//! b 1 0 0 2/1
//! b 1 2 2 -2/1
//! b 2 0 1 -1/1
//! b 2 1 2 2/1
//! rep natural dim 2
//! m 0 0 1 1/1
//! m 1 0 0 1/1
//! m 1 1 1 -1/1
//! m 2 1 0 1/1
//! ```
//!
//! * `algebra <name> dim <n> [graded <bit> …]` must come first; the optional
//!   bit list gives the parity of each basis vector.
//! * `labels <l_1> … <l_n>` is optional (default `x1 … xn`).
//! * `b i j k p/q` sets `[b_i, b_j]` to have `b_k` coefficient `p/q`. Both
//!   orders of every pair are listed; nothing is inferred.
//! * `rep <name> dim <d>` opens a representation block whose `m i r c p/q`
//!   lines set entry `(r, c)` of the matrix of `b_i`.
//!
//! Indices are 0-based. `#` starts a comment. Integers are accepted where a
//! rational is expected; output always uses `p/q`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Parity};
use crate::linalg::{Rational, RationalMatrix};
use crate::rep::Representation;

/// A parsed algebra file. Nothing is validated beyond shapes and indices;
/// run [`LieAlgebra::validate`] and [`Representation::invariant_violations`]
/// to check the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: Arc<LieAlgebra>,
    pub representations: Vec<(String, Representation)>,
}

/// Formats a rational as `p/q`, with `q = 1` written out.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn error(&self, token: usize, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(token)
            .map_or_else(|| self.tokens.last().map_or(1, |(c, t)| c + t.chars().count()), |(c, _)| *c);
        Error::Parse { line: self.number, column, message: message.into() }
    }

    fn expect_len(&self, len: usize, shape: &str) -> Result<()> {
        if self.tokens.len() != len {
            return Err(self.error(self.tokens.len().min(len), format!("expected `{shape}`")));
        }
        Ok(())
    }

    fn keyword(&self, token: usize, word: &str) -> Result<()> {
        match self.tokens.get(token) {
            Some((_, t)) if *t == word => Ok(()),
            _ => Err(self.error(token, format!("expected `{word}`"))),
        }
    }

    fn index(&self, token: usize, bound: usize) -> Result<usize> {
        let (_, t) = self.tokens[token];
        let v: usize = t.parse().map_err(|_| self.error(token, format!("invalid index {t:?}")))?;
        if v >= bound {
            return Err(self.error(token, format!("index {v} out of range for dimension {bound}")));
        }
        Ok(v)
    }

    fn count(&self, token: usize) -> Result<usize> {
        let (_, t) = self.tokens[token];
        t.parse().map_err(|_| self.error(token, format!("invalid dimension {t:?}")))
    }

    fn rational(&self, token: usize) -> Result<Rational> {
        let (_, t) = self.tokens[token];
        t.parse().map_err(|_| self.error(token, format!("invalid rational {t:?}")))
    }
}

fn tokenize(number: usize, text: &str) -> Line<'_> {
    let text = text.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                tokens.push((c, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        tokens.push((c, &text[b..]));
    }
    Line { number, tokens }
}

struct RepBlock {
    name: String,
    dim: usize,
    entries: Vec<Vec<(usize, usize, Rational)>>,
    seen: HashSet<(usize, usize, usize)>,
}

/// Parses the text format; errors carry 1-based line and column.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let mut header: Option<(String, usize, Option<Vec<Parity>>)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut constants = Vec::new();
    let mut seen = HashSet::new();
    let mut reps: Vec<RepBlock> = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = tokenize(number + 1, raw);
        let Some(&(_, head)) = line.tokens.first() else { continue };
        let Some((_, n, _)) = &header else {
            if head != "algebra" {
                return Err(line.error(0, "file must start with an `algebra` header"));
            }
            if line.tokens.len() < 4 {
                return Err(line.error(line.tokens.len(), "expected `algebra <name> dim <n>`"));
            }
            line.keyword(2, "dim")?;
            let n = line.count(3)?;
            let parity = if line.tokens.len() > 4 {
                line.keyword(4, "graded")?;
                let bits = (5..line.tokens.len())
                    .map(|t| match line.tokens[t].1 {
                        "0" => Ok(Parity::Even),
                        "1" => Ok(Parity::Odd),
                        other => Err(line.error(t, format!("parity must be 0 or 1, got {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if bits.len() != n {
                    return Err(line.error(line.tokens.len(), format!("expected {n} parity bits, got {}", bits.len())));
                }
                Some(bits)
            } else {
                None
            };
            header = Some((line.tokens[1].1.to_string(), n, parity));
            continue;
        };
        let n = *n;
        match head {
            "algebra" => return Err(line.error(0, "duplicate `algebra` header")),
            "labels" => {
                if labels.is_some() || !constants.is_empty() || !reps.is_empty() {
                    return Err(line.error(0, "`labels` must directly follow the header, once"));
                }
                if line.tokens.len() != n + 1 {
                    return Err(line.error(line.tokens.len().min(n + 1), format!("expected {n} labels")));
                }
                let names: Vec<String> = line.tokens[1..].iter().map(|(_, t)| t.to_string()).collect();
                if let Some(dup) = (1..=n).find(|&t| names[..t - 1].contains(&names[t - 1])) {
                    return Err(line.error(dup, "duplicate label"));
                }
                labels = Some(names);
            }
            "b" => {
                if !reps.is_empty() {
                    return Err(line.error(0, "bracket entries must precede representation blocks"));
                }
                line.expect_len(5, "b i j k p/q")?;
                let (i, j, k) = (line.index(1, n)?, line.index(2, n)?, line.index(3, n)?);
                if !seen.insert((i, j, k)) {
                    return Err(line.error(0, format!("constant ({i},{j},{k}) given twice")));
                }
                constants.push((i, j, k, line.rational(4)?));
            }
            "rep" => {
                line.expect_len(4, "rep <name> dim <d>")?;
                line.keyword(2, "dim")?;
                let name = line.tokens[1].1.to_string();
                if reps.iter().any(|r| r.name == name) {
                    return Err(line.error(1, format!("duplicate representation {name:?}")));
                }
                let dim = line.count(3)?;
                reps.push(RepBlock { name, dim, entries: vec![Vec::new(); n], seen: HashSet::new() });
            }
            "m" => {
                let Some(block) = reps.last_mut() else {
                    return Err(line.error(0, "matrix entry outside a `rep` block"));
                };
                line.expect_len(5, "m i r c p/q")?;
                let i = line.index(1, n)?;
                let (r, c) = (line.index(2, block.dim)?, line.index(3, block.dim)?);
                if !block.seen.insert((i, r, c)) {
                    return Err(line.error(0, format!("entry ({i},{r},{c}) given twice")));
                }
                block.entries[i].push((r, c, line.rational(4)?));
            }
            other => return Err(line.error(0, format!("unknown directive {other:?}"))),
        }
    }

    let (name, n, parity) = header.ok_or(Error::Parse { line: 1, column: 1, message: "empty file".into() })?;
    let labels = labels.unwrap_or_else(|| (1..=n).map(|i| format!("x{i}")).collect());
    let algebra = Arc::new(LieAlgebra::from_structure_constants(labels, parity, constants)?);
    let representations = reps
        .into_iter()
        .map(|b| {
            let matrices = b.entries.into_iter().map(|e| RationalMatrix::from_entries(b.dim, b.dim, e)).collect();
            Ok((b.name, Representation::new_unchecked(algebra.clone(), b.dim, matrices)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraFile { name, algebra, representations })
}

/// Writes the text format; [`parse_algebra_file`] reads it back unchanged.
pub fn render_algebra_file(name: &str, g: &LieAlgebra, reps: &[(String, Representation)]) -> String {
    let mut out = format!("algebra {name} dim {}", g.dim());
    if let Some(p) = g.parity() {
        out.push_str(" graded");
        for x in p {
            write!(out, " {}", x.bit()).unwrap();
        }
    }
    out.push_str("\nlabels");
    for l in g.labels() {
        write!(out, " {l}").unwrap();
    }
    out.push('\n');
    for (i, j, k, c) in g.structure_constants() {
        writeln!(out, "b {i} {j} {k} {}", format_rational(c)).unwrap();
    }
    for (rep_name, rep) in reps {
        writeln!(out, "rep {rep_name} dim {}", rep.dim()).unwrap();
        for (i, m) in rep.matrices().iter().enumerate() {
            for (r, c, x) in m.entries() {
                writeln!(out, "m {i} {r} {c} {}", format_rational(x)).unwrap();
            }
        }
    }
    out
}
