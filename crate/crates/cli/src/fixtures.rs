//! Reference rows read from text: either a tab-separated table with a header naming
//! its columns, or bare `hex n r` lines. Blank lines and `#` comments are skipped.

use std::path::Path;

use qautm::matroid::{decode_revlex, Matroid, RevlexCode};
use qautm::quantum::Verdict;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub hex: String,
    pub n: usize,
    pub rank: usize,
    pub table: Option<usize>,
    pub girth: Option<usize>,
    pub nonbases: Option<usize>,
    pub aut_order: Option<usize>,
    pub d_b: Option<usize>,
    pub verdict_b: Option<Verdict>,
    pub verdict_c: Option<Verdict>,
}

impl FixtureRow {
    pub fn matroid(&self) -> Result<Matroid, CliError> {
        Ok(decode_revlex(&RevlexCode::new(
            &self.hex, self.n, self.rank,
        )?)?)
    }

    pub fn key(&self) -> (usize, usize, String) {
        (self.n, self.rank, self.hex.clone())
    }
}

fn parse_verdict(s: &str) -> Option<Verdict> {
    match s {
        "commutative" => Some(Verdict::Commutative),
        "noncommutative" => Some(Verdict::Noncommutative),
        "unknown" => Some(Verdict::Unknown),
        _ => None,
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>, CliError> {
    let mut columns: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.contains(&"hex") {
            columns = Some(fields.iter().map(|s| s.to_string()).collect());
            continue;
        }
        let bad = |what: &str| CliError::Invalid(format!("line {}: {what}", i + 1));
        let get = |name: &str, pos: usize| -> Option<&str> {
            match &columns {
                Some(cols) => cols
                    .iter()
                    .position(|c| c == name)
                    .and_then(|k| fields.get(k))
                    .copied(),
                None => fields.get(pos).copied(),
            }
        };
        let num = |name: &str, pos: usize| get(name, pos).and_then(|s| s.parse::<usize>().ok());
        let hex = get("hex", 0).ok_or_else(|| bad("missing hex"))?.to_string();
        rows.push(FixtureRow {
            hex,
            n: num("n", 1).ok_or_else(|| bad("missing n"))?,
            rank: num("rank", 2).ok_or_else(|| bad("missing rank"))?,
            table: num("table", usize::MAX),
            girth: num("girth", usize::MAX),
            nonbases: num("nonbases", usize::MAX),
            aut_order: num("aut", usize::MAX),
            d_b: num("d_B", usize::MAX),
            verdict_b: get("verdict_B", usize::MAX).and_then(parse_verdict),
            verdict_c: get("verdict_C", usize::MAX).and_then(parse_verdict),
        });
    }
    Ok(rows)
}

pub fn read_fixtures(path: &Path) -> Result<Vec<FixtureRow>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_fixtures(&text)
}
