//! Canonical text form: terms in descending word order, each written `+c*u[i,j]*...`
//! or `-c*u[i,j]*...` with `c` an exact coefficient (`3`, `3/4`); a constant term is
//! just `+c`; zero is `0`. Terms are separated by single spaces.
//!
//! The parser also accepts a missing leading sign, a missing coefficient and
//! arbitrary whitespace.

use std::fmt;

use thiserror::Error;

use super::{Coefficient, Letter, NcPolynomial, Variable, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("empty input")]
    Empty,
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("bad variable {0:?}")]
    BadVariable(String),
    #[error("variable {0} is outside the universe n = {1}")]
    OutOfRange(String, u8),
    #[error("unexpected {0:?}")]
    Unexpected(String),
}

impl<C: Coefficient> fmt::Display for NcPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            write!(f, "{}{}", if negative { '-' } else { '+' }, magnitude)?;
            if !w.is_empty() {
                write!(f, "*{}", w.display(self.universe()))?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> NcPolynomial<C> {
    /// Parses the canonical text form over `n x n` variables.
    pub fn parse(s: &str, universe: u8) -> Result<Self, ParsePolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError::Empty);
        }
        if compact == "0" {
            return Ok(Self::zero(universe));
        }
        let mut terms = Vec::new();
        for raw in split_terms(&compact) {
            terms.push(parse_term::<C>(raw, universe)?);
        }
        Ok(Self::from_terms(terms, universe))
    }
}

/// Splits at `+`/`-` that start a term (outside brackets, not inside a `c/d`).
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term<C: Coefficient>(raw: &str, n: u8) -> Result<(Word, C), ParsePolyError> {
    let (negative, body) = match raw.as_bytes().first() {
        Some(b'+') => (false, &raw[1..]),
        Some(b'-') => (true, &raw[1..]),
        _ => (false, raw),
    };
    if body.is_empty() {
        return Err(ParsePolyError::Unexpected(raw.to_string()));
    }
    // the coefficient runs up to the first variable, with or without a `*`
    let split = body.find('u').unwrap_or(body.len());
    let (coef_text, vars) = body.split_at(split);
    let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
    let coef = if coef_text.is_empty() {
        C::one()
    } else {
        coef_text
            .parse::<C>()
            .map_err(|_| ParsePolyError::BadCoefficient(coef_text.to_string()))?
    };
    let mut letters: Vec<Letter> = Vec::new();
    if !vars.is_empty() {
        for f in vars.split('*') {
            letters.push(parse_variable(f, n)?);
        }
    }
    Ok((
        Word::from_letters(&letters),
        if negative { -coef } else { coef },
    ))
}

fn parse_variable(f: &str, n: u8) -> Result<Letter, ParsePolyError> {
    let bad = || ParsePolyError::BadVariable(f.to_string());
    let inner = f
        .strip_prefix("u[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (r, c) = inner.split_once(',').ok_or_else(bad)?;
    let row: u8 = r.parse().map_err(|_| bad())?;
    let col: u8 = c.parse().map_err(|_| bad())?;
    Variable::new(row, col)
        .letter(n)
        .map_err(|_| ParsePolyError::OutOfRange(f.to_string(), n))
}
