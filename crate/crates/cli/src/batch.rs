use std::collections::BTreeMap;

use rayon::prelude::*;

use qautm::matroid::{binomial, Matroid};
use qautm::quantum::{Axioms, Verdict};

use crate::{evaluate, CliError, ResultRow, RunConfig};

/// Scheduling weight: the number of bases times the number of non-bases among
/// subsets of size at most the rank, so cheap instances run first.
pub fn relation_weight(m: &Matroid) -> usize {
    let b = m.num_bases();
    let subsets: usize = (0..=m.rank()).map(|k| binomial(m.n(), k)).sum();
    b * subsets.saturating_sub(b)
}

/// Evaluates every matroid on a pool of `config.threads` workers. Rows come back
/// sorted by `(n, rank, hex)` whatever the completion order.
pub fn run_batch(matroids: &[Matroid], config: &RunConfig) -> Result<Vec<ResultRow>, CliError> {
    let mut jobs: Vec<&Matroid> = matroids.iter().collect();
    jobs.sort_by_key(|m| (m.n(), m.rank(), relation_weight(m)));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let rows: Vec<Result<ResultRow, CliError>> =
        pool.install(|| jobs.par_iter().map(|m| evaluate(m, config)).collect());
    let mut rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| (a.n, a.rank, &a.hex).cmp(&(b.n, b.rank, &b.hex)));
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableKind {
    BothNoncommutative,
    BothCommutative,
    OnlyCircuitsNoncommutative,
    OnlyBasesNoncommutative,
    Unknown,
}

impl TableKind {
    pub const ALL: [TableKind; 5] = [
        TableKind::BothNoncommutative,
        TableKind::BothCommutative,
        TableKind::OnlyCircuitsNoncommutative,
        TableKind::OnlyBasesNoncommutative,
        TableKind::Unknown,
    ];

    pub fn classify(row: &ResultRow) -> TableKind {
        use Verdict::*;
        match (row.verdict(Axioms::Bases), row.verdict(Axioms::Circuits)) {
            (Some(Noncommutative), Some(Noncommutative)) => TableKind::BothNoncommutative,
            (Some(Commutative), Some(Commutative)) => TableKind::BothCommutative,
            (Some(Commutative), Some(Noncommutative)) => TableKind::OnlyCircuitsNoncommutative,
            (Some(Noncommutative), Some(Commutative)) => TableKind::OnlyBasesNoncommutative,
            _ => TableKind::Unknown,
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            TableKind::BothNoncommutative => "table1_both_noncommutative.tsv",
            TableKind::BothCommutative => "table2_both_commutative.tsv",
            TableKind::OnlyCircuitsNoncommutative => "table3_bases_commutative_circuits_not.tsv",
            TableKind::OnlyBasesNoncommutative => "table4_circuits_commutative_bases_not.tsv",
            TableKind::Unknown => "unknown.tsv",
        }
    }
}

pub type Partition<'a> = BTreeMap<TableKind, Vec<&'a ResultRow>>;

/// Splits rows by their pair of bases and circuits verdicts, keeping row order.
pub fn partition(rows: &[ResultRow]) -> Partition<'_> {
    let mut out: Partition<'_> = TableKind::ALL.iter().map(|&k| (k, Vec::new())).collect();
    for r in rows {
        out.get_mut(&TableKind::classify(r))
            .expect("all kinds present")
            .push(r);
    }
    out
}

/// The text of one table file.
pub fn render(rows: &[&ResultRow]) -> String {
    let mut s = String::from(crate::TSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.tsv());
        s.push('\n');
    }
    s
}
