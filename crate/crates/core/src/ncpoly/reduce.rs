use std::collections::BTreeMap;

use super::{Coefficient, Letter, NcPolynomial, Word};

/// An occurrence of pattern `pattern` in a text, covering positions `start..start + len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorMatch {
    pub pattern: usize,
    pub start: usize,
    pub len: usize,
}

impl FactorMatch {
    /// Position of the last matched letter; `None` for an empty pattern.
    pub fn end(&self) -> Option<usize> {
        (self.len > 0).then(|| self.start + self.len - 1)
    }
}

/// Locates leading words of basis elements inside a word.
pub trait DivisorFinder {
    /// The divisor used to rewrite `text`: the lowest-indexed pattern that occurs as
    /// a factor, at its leftmost occurrence.
    fn find_divisor(&self, text: &[Letter]) -> Option<FactorMatch>;
}

/// Quadratic factor scan; the reference the automaton is tested against.
#[derive(Debug, Clone, Default)]
pub struct NaiveFinder {
    patterns: Vec<Option<Word>>,
}

impl NaiveFinder {
    /// Patterns are the leading words of `basis`; zero polynomials are skipped.
    pub fn for_basis<C: Coefficient>(basis: &[NcPolynomial<C>]) -> NaiveFinder {
        NaiveFinder {
            patterns: basis
                .iter()
                .map(|g| (!g.is_zero()).then(|| g.lt().clone()))
                .collect(),
        }
    }

    pub fn from_patterns(patterns: Vec<Option<Word>>) -> NaiveFinder {
        NaiveFinder { patterns }
    }

    fn live(&self) -> impl Iterator<Item = (usize, &Word)> {
        self.patterns
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.as_ref().map(|w| (i, w)))
    }

    /// The occurrence of a nonempty pattern that ends earliest, lowest pattern index
    /// on ties.
    pub fn first_match(&self, text: &[Letter]) -> Option<FactorMatch> {
        (0..text.len()).find_map(|end| {
            self.live()
                .filter(|(_, w)| !w.is_empty())
                .find(|(_, w)| w.len() <= end + 1 && &text[end + 1 - w.len()..=end] == w.letters())
                .map(|(pattern, w)| FactorMatch {
                    pattern,
                    start: end + 1 - w.len(),
                    len: w.len(),
                })
        })
    }
}

impl DivisorFinder for NaiveFinder {
    fn find_divisor(&self, text: &[Letter]) -> Option<FactorMatch> {
        let text_word = Word::from_letters(text);
        self.live().find_map(|(pattern, w)| {
            text_word
                .occurrences(w.letters())
                .next()
                .map(|start| FactorMatch {
                    pattern,
                    start,
                    len: w.len(),
                })
        })
    }
}

/// One rewriting step `coef * left * basis[index] * right`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep<C> {
    pub coef: C,
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

/// Cofactors with `p = Σ coef * left * basis[index] * right + remainder`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReductionTrace<C> {
    pub steps: Vec<ReductionStep<C>>,
}

/// Fully reduces `p` by the leading words of `basis`, using the naive finder.
pub fn normal_remainder<C: Coefficient>(
    p: &NcPolynomial<C>,
    basis: &[NcPolynomial<C>],
) -> NcPolynomial<C> {
    reduce(p, basis, &NaiveFinder::for_basis(basis), None)
}

/// Fully reduces `p`, also returning the cofactor trace. `finder` must index patterns
/// by position in `basis`.
pub fn normal_remainder_with_trace<C: Coefficient, F: DivisorFinder + ?Sized>(
    p: &NcPolynomial<C>,
    basis: &[NcPolynomial<C>],
    finder: &F,
) -> (NcPolynomial<C>, ReductionTrace<C>) {
    let mut trace = ReductionTrace { steps: Vec::new() };
    let r = reduce(p, basis, finder, Some(&mut trace));
    (r, trace)
}

/// Terms are rewritten from the largest down: the largest unprocessed term is either
/// divisible, in which case it is cancelled against a multiple of a basis element
/// (only introducing smaller terms), or it is final.
pub(crate) fn reduce<C: Coefficient, F: DivisorFinder + ?Sized>(
    p: &NcPolynomial<C>,
    basis: &[NcPolynomial<C>],
    finder: &F,
    mut trace: Option<&mut ReductionTrace<C>>,
) -> NcPolynomial<C> {
    let mut work: BTreeMap<Word, C> = p.terms().iter().cloned().collect();
    let mut rem: Vec<(Word, C)> = Vec::new();
    while let Some((w, c)) = work.pop_last() {
        let Some(m) = finder.find_divisor(w.letters()) else {
            rem.push((w, c));
            continue;
        };
        let g = &basis[m.pattern];
        let k = c / g.lc().clone();
        let left = w.slice(0..m.start);
        let right = w.slice(m.start + m.len..w.len());
        for (gw, gc) in &g.terms()[1..] {
            let key = gw.sandwich(&left, &right);
            let delta = -(k.clone() * gc.clone());
            match work.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let v = e.get().clone() + delta;
                    if v.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(delta);
                }
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.steps.push(ReductionStep {
                coef: k,
                left,
                index: m.pattern,
                right,
            });
        }
    }
    NcPolynomial::from_sorted_terms(rem, p.universe())
}

/// Rebuilds `Σ coef * left * basis[index] * right + remainder`.
pub fn replay_trace<C: Coefficient>(
    trace: &ReductionTrace<C>,
    basis: &[NcPolynomial<C>],
    remainder: &NcPolynomial<C>,
) -> NcPolynomial<C> {
    let terms = trace
        .steps
        .iter()
        .flat_map(|s| {
            basis[s.index]
                .sandwich(&s.coef, &s.left, &s.right)
                .into_terms()
        })
        .chain(remainder.terms().iter().cloned());
    NcPolynomial::from_terms(terms, remainder.universe())
}
