use crate::ncpoly::{Coefficient, NcPolynomial, Word};

use super::GbError;

/// A placement `w_f · LT(f) · w_f' = w_g · LT(g) · w_g'` of two leading words inside
/// a common multiple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub f_index: usize,
    pub g_index: usize,
    pub w_f: Word,
    pub w_f_right: Word,
    pub w_g: Word,
    pub w_g_right: Word,
}

impl Obstruction {
    /// Length of the common multiple word.
    pub fn degree(&self, lt_f_len: usize) -> usize {
        self.w_f.len() + lt_f_len + self.w_f_right.len()
    }

    pub fn common_multiple(&self, lt_f: &Word) -> Word {
        lt_f.sandwich(&self.w_f, &self.w_f_right)
    }
}

/// Every nontrivial configuration of `LT(f)` and `LT(g)`:
///
/// * proper overlaps in both orientations, a suffix of one leading word equal to a
///   prefix of the other, overlap length at least 1 and below both lengths;
/// * containments of the shorter word as a factor of the longer one (for equal
///   words, the single aligned placement);
///
/// When `f_index == g_index` only the self-overlaps of `LT(f)` remain: the mirrored
/// orientation is the same obstruction with the roles swapped, and the aligned
/// containment is trivial.
pub fn find_obstructions<C: Coefficient>(
    f_index: usize,
    f: &NcPolynomial<C>,
    g_index: usize,
    g: &NcPolynomial<C>,
) -> Result<Vec<Obstruction>, GbError> {
    if f.is_zero() || g.is_zero() {
        return Err(GbError::ZeroPolynomial);
    }
    Ok(obstructions_of_words(f_index, f.lt(), g_index, g.lt()))
}

pub(crate) fn obstructions_of_words(
    f_index: usize,
    a: &Word,
    g_index: usize,
    b: &Word,
) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let (la, lb) = (a.len(), b.len());
    let (al, bl) = (a.letters(), b.letters());
    let e = Word::empty;
    let obs = |w_f: Word, w_f_right: Word, w_g: Word, w_g_right: Word| Obstruction {
        f_index,
        g_index,
        w_f,
        w_f_right,
        w_g,
        w_g_right,
    };
    if f_index == g_index {
        for k in 1..la {
            if al[la - k..] == al[..k] {
                out.push(obs(e(), a.slice(k..la), a.slice(0..la - k), e()));
            }
        }
        return out;
    }
    for k in 1..la.min(lb) {
        // suffix of LT(f) = prefix of LT(g): common word a · b[k..]
        if al[la - k..] == bl[..k] {
            out.push(obs(e(), b.slice(k..lb), a.slice(0..la - k), e()));
        }
    }
    for k in 1..la.min(lb) {
        // suffix of LT(g) = prefix of LT(f): common word b · a[k..]
        if bl[lb - k..] == al[..k] {
            out.push(obs(b.slice(0..lb - k), e(), e(), a.slice(k..la)));
        }
    }
    if lb <= la {
        for p in a.occurrences(bl) {
            out.push(obs(e(), e(), a.slice(0..p), a.slice(p + lb..la)));
        }
    } else {
        for p in b.occurrences(al) {
            out.push(obs(b.slice(0..p), b.slice(p + la..lb), e(), e()));
        }
    }
    out
}

/// `(1/lc f) · w_f · f · w_f' - (1/lc g) · w_g · g · w_g'`.
pub fn s_polynomial<C: Coefficient>(
    ob: &Obstruction,
    f: &NcPolynomial<C>,
    g: &NcPolynomial<C>,
) -> Result<NcPolynomial<C>, GbError> {
    if f.is_zero() || g.is_zero() {
        return Err(GbError::ZeroPolynomial);
    }
    if f.universe() != g.universe() {
        return Err(GbError::VariableUniverseMismatch);
    }
    if ob.common_multiple(f.lt()) != g.lt().sandwich(&ob.w_g, &ob.w_g_right) {
        return Err(GbError::InvalidObstruction);
    }
    let left = f.sandwich(&(C::one() / f.lc().clone()), &ob.w_f, &ob.w_f_right);
    let right = g.sandwich(&(C::one() / g.lc().clone()), &ob.w_g, &ob.w_g_right);
    Ok(&left - &right)
}
