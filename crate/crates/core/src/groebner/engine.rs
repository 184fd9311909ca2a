use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};

use crate::ncpoly::{Coefficient, DivisorFinder, FactorMatch, Letter, NcPolynomial};

use super::automaton::DivisibilityAutomaton;
use super::obstruction::{obstructions_of_words, s_polynomial, Obstruction};
use super::GbError;
use crate::ncpoly::reduce::reduce;

/// Limits for a Buchberger run. At least one limit must be set, or `unbounded`
/// acknowledged, before [`buchberger`] will start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Obstructions whose common multiple is longer than this are discarded.
    pub degree_bound: Option<usize>,
    /// Cap on processed obstructions.
    pub max_iterations: Option<u64>,
    pub time_budget: Option<Duration>,
    pub interreduce: bool,
    pub unbounded: bool,
    /// Keep every polynomial appended to the basis, for auditing.
    pub keep_history: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            degree_bound: None,
            max_iterations: None,
            time_budget: None,
            interreduce: true,
            unbounded: false,
            keep_history: false,
        }
    }
}

impl EngineConfig {
    /// Runs until the queue empties, however long that takes.
    pub fn unbounded() -> Self {
        EngineConfig {
            unbounded: true,
            ..Default::default()
        }
    }

    pub fn with_time_budget(budget: Duration) -> Self {
        EngineConfig {
            time_budget: Some(budget),
            ..Default::default()
        }
    }

    pub fn with_degree_bound(bound: usize) -> Self {
        EngineConfig {
            degree_bound: Some(bound),
            ..Default::default()
        }
    }

    /// Degree bound `2 · max generator degree` and a ten minute budget.
    pub fn truncated_default<C: Coefficient>(generators: &[NcPolynomial<C>]) -> Self {
        let d = generators
            .iter()
            .filter_map(NcPolynomial::degree)
            .max()
            .unwrap_or(0);
        EngineConfig {
            degree_bound: Some(2 * d),
            time_budget: Some(Duration::from_secs(600)),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), GbError> {
        let bounded = self.degree_bound.is_some()
            || self.max_iterations.is_some()
            || self.time_budget.is_some();
        if bounded || self.unbounded {
            Ok(())
        } else {
            Err(GbError::NoBound)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbortReason {
    TimeBudget,
    IterationBudget,
}

impl fmt::Display for AbortReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbortReason::TimeBudget => "time",
            AbortReason::IterationBudget => "iterations",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GbStatus {
    Complete,
    /// Every obstruction up to this degree was processed; longer ones were dropped.
    TruncatedAtDegree(usize),
    Aborted(AbortReason),
}

impl GbStatus {
    pub fn is_complete(self) -> bool {
        self == GbStatus::Complete
    }
}

impl fmt::Display for GbStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbStatus::Complete => write!(f, "complete"),
            GbStatus::TruncatedAtDegree(d) => write!(f, "truncated({d})"),
            GbStatus::Aborted(r) => write!(f, "aborted({r})"),
        }
    }
}

/// The only word order implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WordOrder {
    #[default]
    Degrevlex,
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("degrevlex")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub obstructions: u64,
    pub discarded_by_degree: u64,
    pub processed: u64,
    pub skipped_dead: u64,
    pub zero_reductions: u64,
    pub insertions: u64,
    pub deactivations: u64,
    /// Pairs of monomials, whose obstructions are never formed.
    pub monomial_pairs_skipped: u64,
    pub max_processed_degree: usize,
    /// Whether the degrees of processed obstructions never went down.
    pub degrees_nondecreasing: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<C: Coefficient> {
    pub generators: Vec<NcPolynomial<C>>,
    pub order: WordOrder,
    pub status: GbStatus,
    pub max_degree: usize,
    pub stats: GbStats,
    /// Everything appended during the run when `keep_history` was set.
    pub history: Vec<NcPolynomial<C>>,
}

impl<C: Coefficient> GroebnerBasis<C> {
    pub fn universe(&self) -> Option<u8> {
        self.generators.first().map(NcPolynomial::universe)
    }

    pub fn reducer(&self) -> DivisibilityAutomaton {
        super::build_reducer(&self.generators)
    }

    /// Normal form modulo the basis.
    pub fn reduce(&self, p: &NcPolynomial<C>) -> NcPolynomial<C> {
        reduce(p, &self.generators, &self.reducer(), None)
    }
}

/// Largest total degree among the generators.
pub fn gb_degree<C: Coefficient>(basis: &GroebnerBasis<C>) -> usize {
    basis.max_degree
}

struct QueueEntry {
    degree: usize,
    seq: u64,
    ob: Obstruction,
}

impl PartialEq for QueueEntry {
    fn eq(&self, other: &Self) -> bool {
        (self.degree, self.seq) == (other.degree, other.seq)
    }
}

impl Eq for QueueEntry {}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, self.seq).cmp(&(other.degree, other.seq))
    }
}

/// Divides by monomials when possible: such a step deletes a term without adding any.
struct MonomialsFirst<'a> {
    monomials: &'a DivisibilityAutomaton,
    all: &'a DivisibilityAutomaton,
}

impl DivisorFinder for MonomialsFirst<'_> {
    fn find_divisor(&self, text: &[Letter]) -> Option<FactorMatch> {
        self.monomials
            .find_divisor(text)
            .or_else(|| self.all.find_divisor(text))
    }
}

struct Engine<'c, C> {
    config: &'c EngineConfig,
    universe: u8,
    polys: Vec<NcPolynomial<C>>,
    alive: Vec<bool>,
    automaton: DivisibilityAutomaton,
    /// The same ids, holding only the leading words of monomial elements.
    monomial_automaton: DivisibilityAutomaton,
    queue: BinaryHeap<Reverse<QueueEntry>>,
    seq: u64,
    truncated: bool,
    unit: bool,
    start: Instant,
    stats: GbStats,
    history: Vec<NcPolynomial<C>>,
    /// Ids of elements by leading word length; may hold retired ids.
    by_length: Vec<Vec<usize>>,
    /// Ids of elements with two or more terms; may hold retired ids.
    non_monomials: Vec<usize>,
    live_monomials: usize,
}

impl<C: Coefficient> Engine<'_, C> {
    fn out_of_time(&self) -> Option<AbortReason> {
        if let Some(b) = self.config.time_budget {
            if self.start.elapsed() >= b {
                return Some(AbortReason::TimeBudget);
            }
        }
        if let Some(m) = self.config.max_iterations {
            if self.stats.processed >= m {
                return Some(AbortReason::IterationBudget);
            }
        }
        None
    }

    fn reduce(&self, p: &NcPolynomial<C>) -> NcPolynomial<C> {
        let finder = MonomialsFirst {
            monomials: &self.monomial_automaton,
            all: &self.automaton,
        };
        reduce(p, &self.polys, &finder, None)
    }

    fn retire(&mut self, g: usize) {
        self.alive[g] = false;
        self.automaton.remove(g);
        self.monomial_automaton.remove(g);
        if self.polys[g].len() == 1 {
            self.live_monomials -= 1;
        }
        self.stats.deactivations += 1;
    }

    /// Reduces `h` and inserts it, together with anything it displaces. Elements whose
    /// leading word contains the new leading word are retired and re-reduced.
    fn insert(&mut self, h: NcPolynomial<C>) -> Result<(), AbortReason> {
        let mut pending = VecDeque::from([h]);
        while let Some(p) = pending.pop_front() {
            if let Some(reason) = self.out_of_time() {
                return Err(reason);
            }
            let r = self.reduce(&p);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            if r.lt().is_empty() {
                self.unit = true;
                return Ok(());
            }
            let k = self.polys.len();
            let lt = r.lt().clone();
            // r is reduced, so only strictly longer leading words can contain LT(r)
            for len in lt.len() + 1..self.by_length.len() {
                let mut bucket = std::mem::take(&mut self.by_length[len]);
                bucket.retain(|&g| self.alive[g]);
                for &g in &bucket {
                    if self.polys[g]
                        .lt()
                        .occurrences(lt.letters())
                        .next()
                        .is_some()
                    {
                        self.retire(g);
                        pending.push_back(self.polys[g].clone());
                    }
                }
                bucket.retain(|&g| self.alive[g]);
                self.by_length[len] = bucket;
            }
            if self.config.keep_history {
                self.history.push(r.clone());
            }
            let monomial = r.len() == 1;
            self.polys.push(r);
            self.alive.push(true);
            self.automaton.push(lt.clone());
            if monomial {
                self.monomial_automaton.push(lt.clone());
            } else {
                self.monomial_automaton.push_absent();
            }
            if self.by_length.len() <= lt.len() {
                self.by_length.resize(lt.len() + 1, Vec::new());
            }
            self.by_length[lt.len()].push(k);
            self.stats.insertions += 1;
            // two monomials have an identically zero S-polynomial at every placement
            let partners: Vec<usize> = if monomial {
                self.stats.monomial_pairs_skipped += self.live_monomials as u64 + 1;
                self.live_monomials += 1;
                self.non_monomials.retain(|&g| self.alive[g]);
                self.non_monomials.clone()
            } else {
                self.non_monomials.push(k);
                (0..=k).filter(|&g| self.alive[g]).collect()
            };
            for g in partners {
                let glt = self.polys[g].lt().clone();
                for ob in obstructions_of_words(k, &lt, g, &glt) {
                    self.enqueue(ob, lt.len());
                }
            }
        }
        Ok(())
    }

    fn enqueue(&mut self, ob: Obstruction, lt_f_len: usize) {
        self.stats.obstructions += 1;
        let degree = ob.degree(lt_f_len);
        if self.config.degree_bound.is_some_and(|b| degree > b) {
            self.truncated = true;
            self.stats.discarded_by_degree += 1;
            return;
        }
        self.seq += 1;
        self.queue.push(Reverse(QueueEntry {
            degree,
            seq: self.seq,
            ob,
        }));
    }

    fn run(&mut self, generators: Vec<NcPolynomial<C>>) -> GbStatus {
        let mut gens = generators;
        gens.retain(|g| !g.is_zero());
        gens.sort_by(|a, b| a.lt().cmp(b.lt()));
        for g in gens {
            if let Err(reason) = self.insert(g) {
                return GbStatus::Aborted(reason);
            }
            if self.unit {
                return GbStatus::Complete;
            }
        }
        let mut last_degree = 0;
        while let Some(Reverse(entry)) = self.queue.pop() {
            if let Some(reason) = self.out_of_time() {
                return GbStatus::Aborted(reason);
            }
            let ob = entry.ob;
            if !self.alive[ob.f_index] || !self.alive[ob.g_index] {
                self.stats.skipped_dead += 1;
                continue;
            }
            self.stats.processed += 1;
            if entry.degree < last_degree {
                self.stats.degrees_nondecreasing = false;
            }
            last_degree = entry.degree;
            self.stats.max_processed_degree = self.stats.max_processed_degree.max(entry.degree);
            let s = s_polynomial(&ob, &self.polys[ob.f_index], &self.polys[ob.g_index])
                .expect("queued obstructions are valid");
            let r = self.reduce(&s);
            if r.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if let Err(reason) = self.insert(r) {
                return GbStatus::Aborted(reason);
            }
            if self.unit {
                return GbStatus::Complete;
            }
        }
        match (self.truncated, self.config.degree_bound) {
            (true, Some(b)) => GbStatus::TruncatedAtDegree(b),
            _ => GbStatus::Complete,
        }
    }

    /// Live elements with tails reduced, monic, sorted by leading word.
    fn finish(mut self, status: GbStatus) -> GroebnerBasis<C> {
        let mut generators: Vec<NcPolynomial<C>> = if self.unit {
            vec![NcPolynomial::one(self.universe)]
        } else {
            if self.config.interreduce {
                for i in 0..self.polys.len() {
                    if !self.alive[i] {
                        continue;
                    }
                    let g = &self.polys[i];
                    let head =
                        NcPolynomial::from_sorted_terms(vec![g.terms()[0].clone()], self.universe);
                    let tail =
                        NcPolynomial::from_sorted_terms(g.terms()[1..].to_vec(), self.universe);
                    let tail = reduce(&tail, &self.polys, &self.automaton, None);
                    self.polys[i] = &head + &tail;
                }
            }
            self.polys
                .into_iter()
                .zip(self.alive)
                .filter_map(|(p, a)| a.then(|| p.monic()))
                .collect()
        };
        generators.sort_by(|a, b| a.lt().cmp(b.lt()));
        let max_degree = generators
            .iter()
            .filter_map(NcPolynomial::degree)
            .max()
            .unwrap_or(0);
        self.stats.elapsed = self.start.elapsed();
        GroebnerBasis {
            generators,
            order: WordOrder::Degrevlex,
            status,
            max_degree,
            stats: self.stats,
            history: self.history,
        }
    }
}

/// Noncommutative Buchberger with a degree-then-FIFO obstruction queue.
///
/// Obstructions are processed in order of the length of their common multiple; the
/// S-polynomial is reduced through the divisibility automaton and a nonzero remainder
/// joins the basis. Obstructions past the degree bound are dropped (the result is then
/// `TruncatedAtDegree`), and exhausting a budget returns the partial basis as
/// `Aborted`. Either way every generator returned lies in the ideal.
pub fn buchberger<C: Coefficient>(
    generators: &[NcPolynomial<C>],
    config: &EngineConfig,
) -> Result<GroebnerBasis<C>, GbError> {
    config.validate()?;
    let universe = generators.first().map_or(1, NcPolynomial::universe);
    if generators.iter().any(|g| g.universe() != universe) {
        return Err(GbError::VariableUniverseMismatch);
    }
    let n = universe as usize;
    let mut engine = Engine {
        config,
        universe,
        polys: Vec::new(),
        alive: Vec::new(),
        automaton: DivisibilityAutomaton::new(n * n),
        monomial_automaton: DivisibilityAutomaton::new(n * n),
        queue: BinaryHeap::new(),
        seq: 0,
        truncated: false,
        unit: false,
        start: Instant::now(),
        stats: GbStats {
            degrees_nondecreasing: true,
            ..Default::default()
        },
        history: Vec::new(),
        by_length: Vec::new(),
        non_monomials: Vec::new(),
        live_monomials: 0,
    };
    let status = engine.run(generators.to_vec());
    Ok(engine.finish(status))
}

/// Result of running with degree bounds `d - 1` and `2d - 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Stabilization<C: Coefficient> {
    pub low: GroebnerBasis<C>,
    pub high: GroebnerBasis<C>,
    /// Both runs finished within budget and returned the same generators.
    pub stabilized: bool,
}

/// Compares truncated bases at `d - 1` and `2d - 2`; agreement is the stabilization
/// criterion for accepting the lower one as a Gröbner basis.
pub fn stabilize<C: Coefficient>(
    generators: &[NcPolynomial<C>],
    d: usize,
    config: &EngineConfig,
) -> Result<Stabilization<C>, GbError> {
    let low_cfg = EngineConfig {
        degree_bound: Some(d.saturating_sub(1)),
        ..config.clone()
    };
    let high_cfg = EngineConfig {
        degree_bound: Some((2 * d).saturating_sub(2)),
        ..config.clone()
    };
    let low = buchberger(generators, &low_cfg)?;
    let high = buchberger(generators, &high_cfg)?;
    let finished = |s: GbStatus| !matches!(s, GbStatus::Aborted(_));
    let stabilized =
        finished(low.status) && finished(high.status) && low.generators == high.generators;
    Ok(Stabilization {
        low,
        high,
        stabilized,
    })
}
