use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coefficient, Letter, PolyError, Variable, Word, MAX_UNIVERSE};

/// A noncommutative polynomial over the variables `u[i,j]`, `1 <= i, j <= n`.
///
/// Terms are kept sorted by descending word with no zero coefficients, so the first
/// term is the leading term and equality is structural.
#[derive(Clone, PartialEq)]
pub struct NcPolynomial<C> {
    universe: u8,
    terms: Vec<(Word, C)>,
}

impl<C: Coefficient> NcPolynomial<C> {
    pub fn zero(universe: u8) -> Self {
        NcPolynomial {
            universe,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: C, universe: u8) -> Self {
        Self::monomial(Word::empty(), c, universe)
    }

    pub fn one(universe: u8) -> Self {
        Self::constant(C::one(), universe)
    }

    pub fn monomial(word: Word, c: C, universe: u8) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(word, c)]
        };
        NcPolynomial { universe, terms }
    }

    /// The variable `u[row, col]`.
    pub fn var(row: u8, col: u8, universe: u8) -> Result<Self, PolyError> {
        if universe == 0 || universe > MAX_UNIVERSE {
            return Err(PolyError::UniverseTooLarge(universe));
        }
        let l = Variable::new(row, col).letter(universe)?;
        Ok(Self::monomial(Word::from_letters(&[l]), C::one(), universe))
    }

    /// The word `u[i1,j1] * u[i2,j2] * ...` for the given index pairs.
    pub fn word_of(pairs: &[(u8, u8)], universe: u8) -> Result<Word, PolyError> {
        let letters = pairs
            .iter()
            .map(|&(r, c)| Variable::new(r, c).letter(universe))
            .collect::<Result<Vec<Letter>, _>>()?;
        Ok(Word::from_letters(&letters))
    }

    /// Collects terms, combining equal words and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(terms: I, universe: u8) -> Self {
        let mut terms: Vec<(Word, C)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Word, C)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => {
                    *lc = lc.clone() + c;
                }
                _ => out.push((w, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        NcPolynomial {
            universe,
            terms: out,
        }
    }

    /// Terms that are already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_terms(terms: Vec<(Word, C)>, universe: u8) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        NcPolynomial { universe, terms }
    }

    pub fn universe(&self) -> u8 {
        self.universe
    }

    pub fn terms(&self) -> &[(Word, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Word, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<(&Word, &C), PolyError> {
        self.terms
            .first()
            .map(|(w, c)| (w, c))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Leading word; panics on zero.
    pub fn lt(&self) -> &Word {
        &self.terms[0].0
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|(w, _)| w.len())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .iter()
            .all(|(w, _)| Some(w.len()) == self.degree())
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms
            .binary_search_by(|(x, _)| w.cmp(x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(PolyError::VariableUniverseMismatch(
                self.universe,
                other.universe,
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, C::one()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, -C::one()))
    }

    /// `self + k * other` by a sorted merge.
    fn merge(&self, other: &Self, k: C) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), k.clone() * b[j].1.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.clone() + k.clone() * b[j].1.clone();
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        NcPolynomial {
            universe: self.universe,
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let terms = self.terms.iter().flat_map(|(u, a)| {
            other
                .terms
                .iter()
                .map(move |(v, b)| (u.concat(v), a.clone() * b.clone()))
        });
        Ok(Self::from_terms(terms, self.universe))
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.universe);
        }
        NcPolynomial {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * k.clone()))
                .collect(),
        }
    }

    /// `k * left * self * right`; order is preserved since the word order is
    /// compatible with multiplication.
    pub fn sandwich(&self, k: &C, left: &Word, right: &Word) -> Self {
        if k.is_zero() {
            return Self::zero(self.universe);
        }
        NcPolynomial {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left, right), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = C::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// The involution fixing every `u[i,j]`: words are reversed and coefficients
    /// conjugated.
    pub fn star(&self) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(w, c)| (w.reversed(), c.conj())),
            self.universe,
        )
    }

    /// Evaluates at a point where each letter takes the given scalar value.
    pub fn evaluate<F: Fn(Letter) -> C>(&self, value: F) -> C {
        self.terms.iter().fold(C::zero(), |acc, (w, c)| {
            let m = w.letters().iter().fold(c.clone(), |p, &l| p * value(l));
            acc + m
        })
    }

    /// Moves the polynomial into a larger variable universe by renumbering letters.
    pub fn embed(&self, universe: u8) -> Self {
        self.map_variables(|v| v, universe)
    }

    /// Substitutes `f(u[i,j])` for every variable; the images must lie in `universe`.
    pub fn map_variables<F: Fn(Variable) -> Variable>(&self, f: F, universe: u8) -> Self {
        let old = self.universe;
        let terms = self.terms.iter().map(|(w, c)| {
            let letters: Vec<Letter> = w
                .letters()
                .iter()
                .map(|&l| {
                    let v = f(Variable::from_letter(l, old));
                    (v.row - 1) * universe + (v.col - 1)
                })
                .collect();
            (Word::from_letters(&letters), c.clone())
        });
        Self::from_terms(terms, universe)
    }
}

impl<C: Coefficient> fmt::Debug for NcPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coefficient> Add for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn add(self, rhs: Self) -> NcPolynomial<C> {
        self.try_add(rhs).expect("variable universes differ")
    }
}

impl<C: Coefficient> Sub for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn sub(self, rhs: Self) -> NcPolynomial<C> {
        self.try_sub(rhs).expect("variable universes differ")
    }
}

impl<C: Coefficient> Mul for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn mul(self, rhs: Self) -> NcPolynomial<C> {
        self.try_mul(rhs).expect("variable universes differ")
    }
}

impl<C: Coefficient> Neg for &NcPolynomial<C> {
    type Output = NcPolynomial<C>;
    fn neg(self) -> NcPolynomial<C> {
        self.scale(&-C::one())
    }
}
