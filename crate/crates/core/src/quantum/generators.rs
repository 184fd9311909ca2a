use crate::matroid::{Matroid, Subset};
use crate::ncpoly::{Coefficient, NcPolynomial, Word};

use super::{universe_of, Axioms, QuantumError};

/// Cap on the number of monomials [`tuple_ideal_generators`] will produce.
pub const MAX_TUPLE_GENERATORS: usize = 250_000;

/// The independent, basis, flat or circuit tuples of a matroid, as a membership test
/// on tuples of ground labels.
#[derive(Debug, Clone, Copy)]
pub struct TupleSet<'a> {
    pub matroid: &'a Matroid,
    pub kind: Axioms,
}

fn repeat_free(t: &[u8]) -> Option<Subset> {
    let s = Subset::from_labels(t.iter().copied());
    (s.len() == t.len()).then_some(s)
}

impl<'a> TupleSet<'a> {
    pub fn new(matroid: &'a Matroid, kind: Axioms) -> TupleSet<'a> {
        TupleSet { matroid, kind }
    }

    pub fn contains(&self, t: &[u8]) -> bool {
        let m = self.matroid;
        if !t.iter().all(|&x| m.ground_labels().contains(x)) {
            return false;
        }
        match self.kind {
            Axioms::Independent => repeat_free(t).is_some_and(|s| m.is_independent(s)),
            Axioms::Bases => {
                t.len() == m.rank() && repeat_free(t).is_some_and(|s| m.is_independent(s))
            }
            Axioms::Flats => repeat_free(t).is_some_and(|s| m.is_flat(s)),
            Axioms::Circuits => match *t {
                [a, b] if a == b => !m.loops().contains(a),
                _ => repeat_free(t).is_some_and(|s| m.is_circuit(s)),
            },
        }
    }

    /// Positive lengths at which some tuple belongs to the family. At every other
    /// length all tuples are outside it and no pair is mismatched.
    pub fn lengths(&self) -> Vec<usize> {
        let m = self.matroid;
        let mut out: Vec<usize> = match self.kind {
            Axioms::Independent => (1..=m.rank()).collect(),
            Axioms::Bases => vec![m.rank()],
            Axioms::Flats => m.flats().cardinalities(),
            Axioms::Circuits => {
                let mut c = m.circuits().cardinalities();
                if m.loops() != m.ground_labels() {
                    c.push(2);
                }
                c
            }
        };
        out.retain(|&k| k > 0);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All tuples of length `k` over the ground set, split into members and the rest.
    pub fn partition(&self, k: usize) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let labels = self.matroid.ground_labels().to_vec();
        let (mut inside, mut outside) = (Vec::new(), Vec::new());
        if labels.is_empty() {
            return (inside, outside);
        }
        let mut digits = vec![0usize; k];
        loop {
            let t: Vec<u8> = digits.iter().map(|&d| labels[d]).collect();
            if self.contains(&t) {
                inside.push(t);
            } else {
                outside.push(t);
            }
            let Some(pos) = (0..k).rev().find(|&i| digits[i] + 1 < labels.len()) else {
                break;
            };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
        (inside, outside)
    }
}

/// Magic matrix relations on `n x n` variables, in this order: idempotents
/// `u_ij^2 - u_ij`, row products `u_ik u_il` and column products `u_kj u_lj` for
/// `k != l`, column sums and row sums minus one.
pub fn qsym_ideal_generators<C: Coefficient>(n: u8) -> Vec<NcPolynomial<C>> {
    let v = |i, j| NcPolynomial::<C>::var(i, j, n).expect("in range");
    let one = NcPolynomial::<C>::one(n);
    let mut out =
        Vec::with_capacity(n as usize * n as usize * (2 * n as usize - 1) + 2 * n as usize);
    for i in 1..=n {
        for j in 1..=n {
            let u = v(i, j);
            out.push(&(&u * &u) - &u);
        }
    }
    for i in 1..=n {
        for k in 1..=n {
            for l in (1..=n).filter(|&l| l != k) {
                out.push(&v(i, k) * &v(i, l));
            }
        }
    }
    for j in 1..=n {
        for k in 1..=n {
            for l in (1..=n).filter(|&l| l != k) {
                out.push(&v(k, j) * &v(l, j));
            }
        }
    }
    for j in 1..=n {
        let s = (1..=n).fold(NcPolynomial::zero(n), |acc, k| &acc + &v(k, j));
        out.push(&s - &one);
    }
    for i in 1..=n {
        let s = (1..=n).fold(NcPolynomial::zero(n), |acc, k| &acc + &v(i, k));
        out.push(&s - &one);
    }
    out
}

/// `u_AB = u_{a1 b1} ... u_{ak bk}` for label tuples `A`, `B` over `labels`.
pub fn tuple_monomial<C: Coefficient>(a: &[u8], b: &[u8], labels: &[u8]) -> NcPolynomial<C> {
    let n = labels.len() as u8;
    let index = |l: u8| {
        labels
            .iter()
            .position(|&x| x == l)
            .expect("label in ground set") as u8
    };
    let letters: Vec<u8> = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| index(x) * n + index(y))
        .collect();
    NcPolynomial::monomial(Word::from_letters(&letters), C::one(), n)
}

/// One monomial `u_AB` for every ordered pair of equal-length tuples with exactly one
/// of `A`, `B` in the family.
pub fn tuple_ideal_generators<C: Coefficient>(
    tuples: &TupleSet<'_>,
) -> Result<Vec<NcPolynomial<C>>, QuantumError> {
    let m = tuples.matroid;
    let labels = m.ground_labels().to_vec();
    universe_of(m.ground_labels())?;
    let parts: Vec<_> = tuples
        .lengths()
        .into_iter()
        .map(|k| tuples.partition(k))
        .collect();
    let total: usize = parts.iter().map(|(i, o)| 2 * i.len() * o.len()).sum();
    if total > MAX_TUPLE_GENERATORS {
        return Err(QuantumError::TooManyGenerators(total, MAX_TUPLE_GENERATORS));
    }
    let mut out = Vec::with_capacity(total);
    for (inside, outside) in &parts {
        for a in inside {
            for b in outside {
                out.push(tuple_monomial(a, b, &labels));
                out.push(tuple_monomial(b, a, &labels));
            }
        }
    }
    Ok(out)
}

/// `xy - yx` for every pair of variables `x < y` in `(row, col)` order.
pub fn commutators<C: Coefficient>(n: u8) -> Vec<NcPolynomial<C>> {
    let letters = n as usize * n as usize;
    let mut out = Vec::with_capacity(letters * letters.saturating_sub(1) / 2);
    for x in 0..letters as u8 {
        for y in x + 1..letters as u8 {
            let xy = NcPolynomial::monomial(Word::from_letters(&[x, y]), C::one(), n);
            let yx = NcPolynomial::monomial(Word::from_letters(&[y, x]), C::one(), n);
            out.push(&xy - &yx);
        }
    }
    out
}
