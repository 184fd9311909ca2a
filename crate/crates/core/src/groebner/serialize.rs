//! Text files holding a basis: one header line of `key=value` fields, then one
//! polynomial per line in canonical form.

use std::fmt;

use thiserror::Error;

use crate::ncpoly::{Coefficient, NcPolynomial, ParsePolyError};

use super::{AbortReason, GbStatus, GroebnerBasis, WordOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbHeader {
    /// Revlex code of the matroid.
    pub matroid: String,
    pub n: usize,
    pub r: usize,
    pub axioms: String,
    pub order: WordOrder,
    pub status: GbStatus,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GbFile<C: Coefficient> {
    pub header: GbHeader,
    pub generators: Vec<NcPolynomial<C>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseGbError {
    #[error("missing header line")]
    MissingHeader,
    #[error("header field {0:?} missing or malformed")]
    BadField(&'static str),
    #[error("line {line}: {source}")]
    Poly { line: usize, source: ParsePolyError },
    #[error("n = {0} is too large for the variable alphabet")]
    UniverseTooLarge(usize),
}

impl fmt::Display for GbHeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matroid={} n={} r={} axioms={} order={} status={} degree={}",
            self.matroid, self.n, self.r, self.axioms, self.order, self.status, self.degree
        )
    }
}

fn parse_status(s: &str) -> Option<GbStatus> {
    if s == "complete" {
        return Some(GbStatus::Complete);
    }
    let inner = |p: &str| s.strip_prefix(p).and_then(|r| r.strip_suffix(')'));
    if let Some(d) = inner("truncated(") {
        return d.parse().ok().map(GbStatus::TruncatedAtDegree);
    }
    match inner("aborted(")? {
        "time" => Some(GbStatus::Aborted(AbortReason::TimeBudget)),
        "iterations" => Some(GbStatus::Aborted(AbortReason::IterationBudget)),
        _ => None,
    }
}

impl std::str::FromStr for GbHeader {
    type Err = ParseGbError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let fields: Vec<(&str, &str)> = line
            .split_whitespace()
            .filter_map(|kv| kv.split_once('='))
            .collect();
        let get = |k: &'static str| {
            fields
                .iter()
                .find(|(key, _)| *key == k)
                .map(|(_, v)| *v)
                .ok_or(ParseGbError::BadField(k))
        };
        let num = |k: &'static str| {
            get(k)?
                .parse::<usize>()
                .map_err(|_| ParseGbError::BadField(k))
        };
        if get("order")? != "degrevlex" {
            return Err(ParseGbError::BadField("order"));
        }
        Ok(GbHeader {
            matroid: get("matroid")?.to_string(),
            n: num("n")?,
            r: num("r")?,
            axioms: get("axioms")?.to_string(),
            order: WordOrder::Degrevlex,
            status: parse_status(get("status")?).ok_or(ParseGbError::BadField("status"))?,
            degree: num("degree")?,
        })
    }
}

impl<C: Coefficient> GbFile<C> {
    pub fn new(
        basis: &GroebnerBasis<C>,
        matroid: impl Into<String>,
        n: usize,
        r: usize,
        axioms: impl Into<String>,
    ) -> Self {
        GbFile {
            header: GbHeader {
                matroid: matroid.into(),
                n,
                r,
                axioms: axioms.into(),
                order: basis.order,
                status: basis.status,
                degree: basis.max_degree,
            },
            generators: basis.generators.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseGbError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(ParseGbError::MissingHeader)?;
        let header: GbHeader = first.parse()?;
        let universe = u8::try_from(header.n)
            .ok()
            .filter(|&u| u <= crate::ncpoly::MAX_UNIVERSE)
            .ok_or(ParseGbError::UniverseTooLarge(header.n))?;
        let generators = lines
            .map(|(i, l)| {
                NcPolynomial::parse(l, universe).map_err(|source| ParseGbError::Poly {
                    line: i + 1,
                    source,
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(GbFile { header, generators })
    }
}

impl<C: Coefficient> fmt::Display for GbFile<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
