//! The free associative algebra `K<u_ij>` over the `n^2` variables of an `n x n`
//! magic matrix, with exact coefficients and a fixed degree-reverse-lexicographic
//! word order.

mod poly;
pub(crate) mod reduce;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

pub use poly::NcPolynomial;
pub use reduce::{
    normal_remainder, normal_remainder_with_trace, replay_trace, DivisorFinder, FactorMatch,
    NaiveFinder, ReductionStep, ReductionTrace,
};
pub use text::ParsePolyError;

/// Scalars the algebra is built over.
///
/// `conj` is the involution used by [`NcPolynomial::star`]; it is the identity for
/// the real fields used here. `is_negative` only drives the sign in text output.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn conj(&self) -> Self {
        self.clone()
    }

    fn is_negative(&self) -> bool;
}

impl<T> Coefficient for Ratio<T>
where
    T: Clone + Integer + Signed + fmt::Debug + fmt::Display + FromStr,
{
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Largest `n` for which letters fit in a byte.
pub const MAX_UNIVERSE: u8 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different variable sets (n = {0} and n = {1})")]
    VariableUniverseMismatch(u8, u8),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("variable u[{row},{col}] is outside the universe n = {n}")]
    VariableOutOfRange { row: u8, col: u8, n: u8 },
    #[error("universe n = {0} is outside 1..=16")]
    UniverseTooLarge(u8),
}

/// The generator `u[row, col]`, `1 <= row, col <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    pub row: u8,
    pub col: u8,
}

/// A variable encoded as `(row - 1) * n + (col - 1)`, so that letter order is the
/// `(row, col)` lexicographic variable order.
pub type Letter = u8;

impl Variable {
    pub fn new(row: u8, col: u8) -> Variable {
        Variable { row, col }
    }

    pub fn letter(self, n: u8) -> Result<Letter, PolyError> {
        if self.row == 0 || self.col == 0 || self.row > n || self.col > n {
            return Err(PolyError::VariableOutOfRange {
                row: self.row,
                col: self.col,
                n,
            });
        }
        Ok((self.row - 1) * n + (self.col - 1))
    }

    pub fn from_letter(letter: Letter, n: u8) -> Variable {
        Variable {
            row: letter / n + 1,
            col: letter % n + 1,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},{}]", self.row, self.col)
    }
}

/// A monomial: a finite sequence of letters, empty for `1`.
///
/// Ordered by degree first; words of equal length compare letters from the right,
/// and at the first difference the word holding the smaller letter is the larger word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Letter; 12]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        Word(SmallVec::from_slice(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut w = SmallVec::with_capacity(left.len() + self.len() + right.len());
        w.extend_from_slice(&left.0);
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&right.0);
        Word(w)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_letters(&self.0[range])
    }

    /// Starting positions of `pattern` as a factor of `self`.
    pub fn occurrences<'a>(&'a self, pattern: &'a [Letter]) -> impl Iterator<Item = usize> + 'a {
        let k = pattern.len();
        (0..=self.len().saturating_sub(k))
            .filter(move |&p| k <= self.len() && &self.0[p..p + k] == pattern)
    }

    pub fn display(&self, n: u8) -> WordDisplay<'_> {
        WordDisplay { word: self, n }
    }
}

/// Compares two words under the degree reverse lexicographic order.
pub fn compare_words(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_words(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    n: u8,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", Variable::from_letter(l, self.n))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn degree_dominates() {
        assert!(w(&[3, 3]) < w(&[0, 0, 0]));
        assert_eq!(w(&[1, 2]).cmp(&w(&[1, 2])), Ordering::Equal);
        assert!(Word::empty() < w(&[0]));
    }

    #[test]
    fn tie_rule_golden() {
        // n = 2: u11 = 0, u12 = 1. Rightmost letters are u12 vs u11; the word ending
        // in the smaller letter u11 is the larger one.
        let u11_u12 = w(&[0, 1]);
        let u12_u11 = w(&[1, 0]);
        assert!(u12_u11 > u11_u12);
        // among single letters the order is reversed: u11 is the largest variable
        assert!(w(&[0]) > w(&[1]) && w(&[1]) > w(&[2]) && w(&[2]) > w(&[3]));
    }

    #[test]
    fn letters_follow_row_col_order() {
        let n = 3;
        let mut prev = None;
        for r in 1..=n {
            for c in 1..=n {
                let l = Variable::new(r, c).letter(n).unwrap();
                if let Some(p) = prev {
                    assert!(l > p);
                }
                prev = Some(l);
                assert_eq!(Variable::from_letter(l, n), Variable::new(r, c));
            }
        }
        assert!(Variable::new(4, 1).letter(3).is_err());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..4, 0..6).prop_map(|v| Word::from_letters(&v))
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(u in word_strategy(), v in word_strategy(), a in word_strategy(), b in word_strategy()) {
            let o = u.cmp(&v);
            prop_assert_eq!(u.sandwich(&a, &b).cmp(&v.sandwich(&a, &b)), o);
            prop_assert!(Word::empty() <= u);
        }

        #[test]
        fn order_is_total_and_antisymmetric(u in word_strategy(), v in word_strategy()) {
            prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
            prop_assert_eq!(u.cmp(&v) == Ordering::Equal, u == v);
        }
    }
}
