//! Text grammars for groups and representations, and label conventions.
//!
//! Groups are factor tokens joined by `x`: `A5`, `B5xA1`, `A1xA1xA1`.
//! Representations are tensor factors joined by `*`, summands joined by `+`,
//! with `^d` marking a dual: `[0,0,1]`, `[1]*[1]*[1]`, `[1,0,0]+[1,0,0]^d`.
//! A factor may also be written `L3` or `2L1` for a multiple of a
//! fundamental weight (1-based node index).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::rep_calc::{RepExpr, Summand, TensorFactor};
use crate::root_data::{GroupSpec, Series, SimpleLieType, Weight};

/// A parse failure with the offending column, rendered with a caret.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.input[..self.pos.min(self.input.len())].chars().count();
        writeln!(f, "{} (column {})", self.message, col + 1)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(col))
    }
}

impl ParseError {
    pub fn new(input: &str, pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            pos,
            message: message.into(),
        }
    }
}

fn err(input: &str, pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::new(input, pos, message)
}

/// Node numbering used for Dynkin labels on input.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Bourbaki numbering, used internally everywhere.
    #[default]
    Bourbaki,
    /// Onishchik–Vinberg numbering. It differs from Bourbaki only for the E
    /// series, where OV numbers the long chain first and the branch node last.
    Ov,
}

impl std::str::FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bourbaki" => Ok(Convention::Bourbaki),
            "ov" => Ok(Convention::Ov),
            other => Err(format!(
                "unknown convention `{other}` (expected bourbaki or ov)"
            )),
        }
    }
}

/// `OV_TO_BOURBAKI[k][i]` is the 1-based Bourbaki node of OV node `i + 1`
/// for `E6`, `E7`, `E8`.
pub const OV_TO_BOURBAKI: [&[usize]; 3] = [
    &[1, 3, 4, 5, 6, 2],
    &[7, 6, 5, 4, 3, 1, 2],
    &[8, 7, 6, 5, 4, 3, 1, 2],
];

fn ov_table(ty: SimpleLieType) -> Option<&'static [usize]> {
    match ty.series() {
        Series::E => Some(OV_TO_BOURBAKI[ty.rank() - 6]),
        _ => None,
    }
}

/// Converts labels given in `convention` to Bourbaki labels.
pub fn to_bourbaki(ty: SimpleLieType, labels: &Weight, convention: Convention) -> Weight {
    match (convention, ov_table(ty)) {
        (Convention::Ov, Some(map)) => {
            let mut out = Weight::zero(labels.len());
            for (i, &b) in map.iter().enumerate() {
                out[b - 1] = labels[i];
            }
            out
        }
        _ => labels.clone(),
    }
}

/// Inverse of [`to_bourbaki`].
pub fn from_bourbaki(ty: SimpleLieType, labels: &Weight, convention: Convention) -> Weight {
    match (convention, ov_table(ty)) {
        (Convention::Ov, Some(map)) => Weight(map.iter().map(|&b| labels[b - 1]).collect()),
        _ => labels.clone(),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        err(self.src, self.pos, message)
    }

    fn integer(&mut self) -> std::result::Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| err(self.src, start, "expected an integer"))
    }

    fn unsigned(&mut self) -> std::result::Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| err(self.src, start, "expected a positive integer"))
    }
}

/// Parses a group such as `B5xA1`.
pub fn parse_group(src: &str) -> std::result::Result<GroupSpec, ParseError> {
    let mut cur = Cursor::new(src);
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let series = match cur.bump().and_then(Series::from_letter) {
            Some(s) => s,
            None => return Err(err(src, start, "expected a series letter A-G")),
        };
        let rank_pos = cur.pos;
        let rank = cur.unsigned()?;
        let ty = SimpleLieType::new(series, rank).map_err(|e| err(src, rank_pos, e.to_string()))?;
        factors.push(ty);
        if cur.at_end() {
            break;
        }
        if !(cur.eat('x') || cur.eat('×')) {
            return Err(cur.error("expected `x` between factors"));
        }
    }
    Ok(GroupSpec::new(factors).expect("at least one factor parsed"))
}

/// Unbound syntax of one tensor factor.
#[derive(Debug, Clone, PartialEq, Eq)]
enum FactorSyntax {
    Labels(Vec<i64>),
    Fundamental { coef: i64, node: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct FactorTok {
    syntax: FactorSyntax,
    dual: bool,
    pos: usize,
}

fn parse_factor(cur: &mut Cursor<'_>) -> std::result::Result<FactorTok, ParseError> {
    cur.skip_ws();
    let pos = cur.pos;
    let syntax = if cur.eat('[') {
        let mut labels = Vec::new();
        if !cur.eat(']') {
            loop {
                labels.push(cur.integer()?);
                if cur.eat(']') {
                    break;
                }
                if !cur.eat(',') {
                    return Err(cur.error("expected `,` or `]`"));
                }
            }
        }
        FactorSyntax::Labels(labels)
    } else {
        let coef = if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            cur.integer()?
        } else {
            1
        };
        cur.skip_ws();
        if !matches!(cur.peek(), Some('L') | Some('l')) {
            return Err(cur.error("expected `[labels]` or a fundamental weight like `L1`"));
        }
        cur.bump();
        let node_pos = cur.pos;
        let node = cur.unsigned()?;
        if node == 0 {
            return Err(err(
                cur.src,
                node_pos,
                "fundamental weights are numbered from 1",
            ));
        }
        FactorSyntax::Fundamental { coef, node }
    };
    let dual = if cur.eat('^') {
        cur.skip_ws();
        if cur.bump() != Some('d') {
            return Err(err(
                cur.src,
                cur.pos.saturating_sub(1),
                "expected `d` after `^`",
            ));
        }
        true
    } else {
        false
    };
    Ok(FactorTok { syntax, dual, pos })
}

/// Parses and binds a representation to `group`, converting labels from
/// `convention` to Bourbaki numbering. Each summand lists its tensor factors
/// in group order; missing trailing factors are trivial.
pub fn parse_rep(
    src: &str,
    group: &GroupSpec,
    convention: Convention,
) -> std::result::Result<RepExpr, ParseError> {
    let mut cur = Cursor::new(src);
    let mut raw: Vec<Vec<FactorTok>> = Vec::new();
    loop {
        let mut factors = vec![parse_factor(&mut cur)?];
        while cur.eat('*') || cur.eat('⊗') {
            factors.push(parse_factor(&mut cur)?);
        }
        raw.push(factors);
        if cur.at_end() {
            break;
        }
        if !(cur.eat('+') || cur.eat('⊕')) {
            return Err(cur.error("expected `*`, `+` or end of input"));
        }
    }

    let mut summands: Vec<Summand> = Vec::new();
    for toks in raw {
        if toks.len() > group.factors().len() {
            let tok = &toks[group.factors().len()];
            return Err(err(
                src,
                tok.pos,
                format!("group {group} has only {} factor(s)", group.factors().len()),
            ));
        }
        let mut factors = Vec::new();
        for (i, ty) in group.factors().iter().enumerate() {
            let Some(tok) = toks.get(i) else {
                factors.push(TensorFactor {
                    weight: Weight::zero(ty.rank()),
                    dual: false,
                });
                continue;
            };
            let labels = match &tok.syntax {
                FactorSyntax::Labels(l) => {
                    if l.len() != ty.rank() {
                        return Err(err(
                            src,
                            tok.pos,
                            format!("{ty} needs {} labels, got {}", ty.rank(), l.len()),
                        ));
                    }
                    Weight(l.clone())
                }
                FactorSyntax::Fundamental { coef, node } => {
                    if *node > ty.rank() {
                        return Err(err(src, tok.pos, format!("{ty} has no node {node}")));
                    }
                    let mut w = Weight::zero(ty.rank());
                    w[node - 1] = *coef;
                    w
                }
            };
            if !labels.is_dominant() {
                return Err(err(
                    src,
                    tok.pos,
                    "highest weights must have nonnegative labels",
                ));
            }
            factors.push(TensorFactor {
                weight: to_bourbaki(*ty, &labels, convention),
                dual: tok.dual,
            });
        }
        match summands.iter_mut().find(|s| s.factors == factors) {
            Some(s) => s.multiplicity += 1,
            None => summands.push(Summand {
                multiplicity: 1,
                factors,
            }),
        }
    }
    Ok(RepExpr { summands })
}

/// Convenience for callers holding both texts.
pub fn parse_group_and_rep(
    group: &str,
    rep: &str,
    convention: Convention,
) -> Result<(GroupSpec, RepExpr)> {
    let g = parse_group(group).map_err(Error::Parse)?;
    let r = parse_rep(rep, &g, convention).map_err(Error::Parse)?;
    Ok((g, r))
}

/// Renders `rep` in the grammar accepted by [`parse_rep`] (Bourbaki labels).
pub fn render_rep(rep: &RepExpr) -> String {
    let mut parts = Vec::new();
    for s in &rep.summands {
        let f: Vec<String> = s
            .factors
            .iter()
            .map(|t| {
                if t.dual {
                    format!("{}^d", t.weight)
                } else {
                    t.weight.to_string()
                }
            })
            .collect();
        let one = f.join("*");
        for _ in 0..s.multiplicity {
            parts.push(one.clone());
        }
    }
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group("A5").unwrap().to_string(), "A5");
        assert_eq!(parse_group("B5xA1").unwrap().factors().len(), 2);
        assert_eq!(
            parse_group(" A1 x A1 x A1 ").unwrap().to_string(),
            "A1xA1xA1"
        );
        assert_eq!(parse_group("e7").unwrap().to_string(), "E7");
    }

    #[test]
    fn group_errors_carry_position() {
        let e = parse_group("A5xQ2").unwrap_err();
        assert_eq!(e.pos, 3);
        let e = parse_group("D3").unwrap_err();
        assert_eq!(e.pos, 1);
        let e = parse_group("A5 A1").unwrap_err();
        assert!(e.message.contains("`x`"));
        let shown = parse_group("A5xQ2").unwrap_err().to_string();
        assert!(shown.ends_with("\n     ^"), "{shown}");
    }

    #[test]
    fn reps() {
        let g = parse_group("A1xA1xA1").unwrap();
        let r = parse_rep("[1]*[1]*[1]", &g, Convention::Bourbaki).unwrap();
        assert_eq!(r.summands.len(), 1);
        assert_eq!(render_rep(&r), "[1]*[1]*[1]");

        let g = parse_group("C3").unwrap();
        let r = parse_rep("[1,0,0]+[1,0,0]^d", &g, Convention::Bourbaki).unwrap();
        assert_eq!(r.summands.len(), 2);
        assert!(r.summands[1].factors[0].dual);
        let r = parse_rep("L1+L1", &g, Convention::Bourbaki).unwrap();
        assert_eq!(r.summands.len(), 1);
        assert_eq!(r.summands[0].multiplicity, 2);
        assert_eq!(render_rep(&r), "[1,0,0]+[1,0,0]");

        let g = parse_group("A1xA1").unwrap();
        let r = parse_rep("2L1*L1", &g, Convention::Bourbaki).unwrap();
        assert_eq!(render_rep(&r), "[2]*[1]");
        let r = parse_rep("[1]", &g, Convention::Bourbaki).unwrap();
        assert_eq!(render_rep(&r), "[1]*[0]");
    }

    #[test]
    fn rep_errors() {
        let g = parse_group("C3").unwrap();
        let e = parse_rep("[0,0,1", &g, Convention::Bourbaki).unwrap_err();
        assert_eq!(e.pos, 6);
        let e = parse_rep("[0,1]", &g, Convention::Bourbaki).unwrap_err();
        assert!(e.message.contains("needs 3 labels"));
        let e = parse_rep("[0,0,1]*[1]", &g, Convention::Bourbaki).unwrap_err();
        assert_eq!(e.pos, 8);
        let e = parse_rep("[0,-1,1]", &g, Convention::Bourbaki).unwrap_err();
        assert!(e.message.contains("nonnegative"));
        let e = parse_rep("L4", &g, Convention::Bourbaki).unwrap_err();
        assert!(e.message.contains("no node 4"));
    }

    #[test]
    fn ov_remaps_e7_only() {
        let e7 = SimpleLieType::new(Series::E, 7).unwrap();
        let ov1 = Weight::fundamental(7, 0);
        assert_eq!(
            to_bourbaki(e7, &ov1, Convention::Ov),
            Weight::fundamental(7, 6)
        );
        let c3 = SimpleLieType::new(Series::C, 3).unwrap();
        let w = Weight(vec![0, 0, 1]);
        assert_eq!(to_bourbaki(c3, &w, Convention::Ov), w);
        for rank in 6..=8 {
            let e = SimpleLieType::new(Series::E, rank).unwrap();
            let w = Weight((1..=rank as i64).collect());
            let b = to_bourbaki(e, &w, Convention::Ov);
            assert_eq!(from_bourbaki(e, &b, Convention::Ov), w);
        }
    }
}
