use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use qautm::classical::automorphism_group;
use qautm::groebner::{EngineConfig, GbStatus};
use qautm::matroid::{encode_revlex, Girth, Matroid};
use qautm::quantum::{
    decide_commutativity, quantum_aut_spec, theorem_shortcut, Axioms, DecideConfig, Method, Verdict,
};
use qautm::Rational;

use crate::CliError;

/// Settings shared by every job of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub degree_bound: Option<usize>,
    /// Per Buchberger run. Defaults to ten minutes.
    pub time_budget: Duration,
    /// Worker threads for batches; `0` lets the pool pick.
    pub threads: usize,
    pub shortcuts: bool,
    pub output_path: Option<PathBuf>,
    pub axioms: Vec<Axioms>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            degree_bound: None,
            time_budget: Duration::from_secs(600),
            threads: 0,
            shortcuts: true,
            output_path: None,
            axioms: vec![Axioms::Bases, Axioms::Circuits],
        }
    }
}

impl RunConfig {
    pub fn engine(&self) -> EngineConfig {
        EngineConfig {
            degree_bound: self.degree_bound,
            time_budget: Some(self.time_budget),
            ..Default::default()
        }
    }

    pub fn decide(&self) -> DecideConfig {
        DecideConfig {
            engine: self.engine(),
            shortcuts: self.shortcuts,
        }
    }
}

/// How one axiom system was settled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub verdict: Verdict,
    pub method: Method,
    pub status: Option<GbStatus>,
    pub degree: Option<usize>,
}

impl fmt::Display for AxiomOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={} method={}", self.verdict, self.method)?;
        if let Some(s) = self.status {
            write!(f, " status={s}")?;
        }
        if let Some(d) = self.degree {
            write!(f, " degree={d}")?;
        }
        Ok(())
    }
}

/// One line of a result table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultRow {
    pub hex: String,
    pub n: usize,
    pub rank: usize,
    pub girth: Girth,
    pub nonbases: usize,
    pub aut_order: usize,
    pub outcomes: BTreeMap<Axioms, AxiomOutcome>,
    pub wall_time: Duration,
}

pub const TSV_HEADER: &str =
    "hex\tn\trank\tgirth\tnonbases\taut\td_B\tverdict_B\tverdict_C\tstatus";

impl ResultRow {
    pub fn verdict(&self, axioms: Axioms) -> Option<Verdict> {
        self.outcomes.get(&axioms).map(|o| o.verdict)
    }

    /// Degree of the bases-axioms basis, if one was computed to completion.
    pub fn d_b(&self) -> Option<usize> {
        let o = self.outcomes.get(&Axioms::Bases)?;
        match o.status {
            Some(GbStatus::Complete) => o.degree,
            _ => None,
        }
    }

    /// The table row without timing, so reruns are byte-identical.
    pub fn tsv(&self) -> String {
        let dash = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let status = self.outcomes.get(&Axioms::Bases).map(|o| match o.status {
            Some(s) => s.to_string(),
            None => o.method.to_string(),
        });
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.hex,
            self.n,
            self.rank,
            self.girth,
            self.nonbases,
            self.aut_order,
            dash(self.d_b().map(|d| d.to_string())),
            dash(self.verdict(Axioms::Bases).map(|v| v.to_string())),
            dash(self.verdict(Axioms::Circuits).map(|v| v.to_string())),
            dash(status),
        )
    }
}

/// Runs every configured axiom system on `m`.
///
/// With shortcuts disabled, a Gröbner verdict that contradicts an applicable theorem
/// is reported as an inconsistency rather than a result.
pub fn evaluate(m: &Matroid, config: &RunConfig) -> Result<ResultRow, CliError> {
    let start = Instant::now();
    let hex = encode_revlex(m)?.hex;
    let aut_order = automorphism_group(m)?.order();
    let mut outcomes = BTreeMap::new();
    for &axioms in &config.axioms {
        let spec = quantum_aut_spec::<Rational>(m, axioms)?;
        let v = decide_commutativity(&spec, &config.decide())?;
        if let (Method::Groebner, Some(expected)) = (v.method, theorem_shortcut(m, axioms)) {
            if v.verdict != expected && v.verdict != Verdict::Unknown {
                return Err(CliError::Inconsistent(format!(
                    "{hex} n={} r={} {axioms}: Gröbner verdict {} contradicts the theorem verdict {expected}",
                    m.n(),
                    m.rank(),
                    v.verdict
                )));
            }
        }
        outcomes.insert(
            axioms,
            AxiomOutcome {
                verdict: v.verdict,
                method: v.method,
                status: v.basis.as_ref().map(|b| b.status),
                degree: v.basis.as_ref().map(|b| b.max_degree),
            },
        );
    }
    Ok(ResultRow {
        hex,
        n: m.n(),
        rank: m.rank(),
        girth: m.girth(),
        nonbases: m.num_nonbases(),
        aut_order,
        outcomes,
        wall_time: start.elapsed(),
    })
}
