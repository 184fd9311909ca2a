//! Finite matroids given by their bases, and the structures derived from them.
//!
//! Ground sets are sets of labels in `1..=31` held in a bitmask ([`Subset`]); every
//! derived family (independent sets, flats, circuits) is computed by brute force over
//! the power set, which is fine at the sizes this crate targets (`n <= 7` in practice).

mod enumerate;
mod revlex;
mod subset;

use std::fmt;

use thiserror::Error;

pub use enumerate::{
    canonical_form, enumerate_all, enumerate_matroids, iso_catalog, MAX_ENUMERATION_SIZE,
};
pub use revlex::{decode_revlex, encode_revlex, revlex_rank, revlex_subsets, RevlexCode};
pub use subset::{binomial, Labels, Submasks, Subset, MAX_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set must be nonempty")]
    EmptyGroundSet,
    #[error("label {0} is outside 1..=31")]
    LabelOutOfRange(u8),
    #[error("basis family is empty")]
    NoBases,
    #[error("basis {basis} is not a subset of the ground set {ground}")]
    BasisOutsideGround { basis: Subset, ground: Subset },
    #[error(
        "bases have different cardinalities ({first} has {first_len}, {other} has {other_len})"
    )]
    RejectedNotEqualCardinality {
        first: Subset,
        first_len: usize,
        other: Subset,
        other_len: usize,
    },
    #[error("basis exchange fails for A={a}, B={b}, a={element}")]
    RejectedExchangeAxiom { a: Subset, b: Subset, element: u8 },
    #[error("{subset} is not a subset of the ground set {ground}")]
    NotASubset { subset: Subset, ground: Subset },
    #[error("rank {rank} out of range for a ground set of size {n}")]
    RankOutOfRange { rank: usize, n: usize },
    #[error("ground sets overlap in {0}")]
    GroundSetOverlap(Subset),
    #[error("relabeling is not injective on the ground set")]
    NonInjectiveRelabel,
    #[error("hex string has length {got}, expected {expected}")]
    BadHexLength { expected: usize, got: usize },
    #[error("invalid hex string {0:?}")]
    BadHex(String),
    #[error("padding bits of {0:?} are not zero")]
    BadHexPadding(String),
    #[error("decoded basis family is not a matroid: {0}")]
    ExchangeAxiomFailure(Box<MatroidError>),
    #[error("ground set of size {n} is too large for this operation (limit {limit})")]
    TooLarge { n: usize, limit: usize },
}

/// The ground set `E(M)`: a set of positive labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet(Subset);

impl GroundSet {
    pub fn new(labels: Subset) -> Result<GroundSet, MatroidError> {
        if labels.is_empty() {
            return Err(MatroidError::EmptyGroundSet);
        }
        if labels.contains(0) {
            return Err(MatroidError::LabelOutOfRange(0));
        }
        Ok(GroundSet(labels))
    }

    /// `{1, ..., n}`.
    pub fn range(n: usize) -> GroundSet {
        GroundSet(Subset::range(n))
    }

    /// The empty ground set. Only used for the image of the map that collapses
    /// everything onto the basepoint in strong-map counting.
    pub fn empty() -> GroundSet {
        GroundSet(Subset::EMPTY)
    }

    pub fn labels(self) -> Subset {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// True when the labels are exactly `1..=n`.
    pub fn is_standard(self) -> bool {
        self.0 == Subset::range(self.len())
    }

    pub fn max_label(self) -> u8 {
        self.0.max_label().unwrap_or(0)
    }

    pub fn iter(self) -> Labels {
        self.0.iter()
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which derived family a [`SubsetFamily`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Independent,
    Flats,
    Circuits,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    pub kind: FamilyKind,
    members: Vec<Subset>,
}

impl SubsetFamily {
    fn new(kind: FamilyKind, mut members: Vec<Subset>) -> Self {
        members.sort_unstable();
        members.dedup();
        SubsetFamily { kind, members }
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Cardinalities that occur, ascending.
    pub fn cardinalities(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.members.iter().map(|s| s.len()).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn is_downward_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&s| s.iter().all(|x| self.contains(s.without(x))))
    }

    pub fn is_antichain(&self) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| a == b || !a.is_subset_of(b)))
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.contains(a.intersection(b)))
        })
    }
}

/// Girth of a matroid: the size of its smallest circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// `girth >= k`, with infinity above everything.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// A matroid presented by its bases. Immutable once built; the basis exchange axiom
/// is checked at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>,
    rank: usize,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

impl Matroid {
    pub fn new<I>(ground: GroundSet, bases: I) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::NoBases)?;
        for &b in &bases {
            if !b.is_subset_of(ground.labels()) {
                return Err(MatroidError::BasisOutsideGround {
                    basis: b,
                    ground: ground.labels(),
                });
            }
            if b.len() != first.len() {
                return Err(MatroidError::RejectedNotEqualCardinality {
                    first,
                    first_len: first.len(),
                    other: b,
                    other_len: b.len(),
                });
            }
        }
        check_exchange(&bases)?;
        Ok(Matroid {
            ground,
            rank: first.len(),
            bases,
        })
    }

    /// Builds without running the exchange check. `bases` must be sorted, nonempty,
    /// equicardinal and satisfy the exchange axiom.
    pub(crate) fn from_sorted_bases_unchecked(ground: GroundSet, bases: Vec<Subset>) -> Matroid {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        let rank = bases[0].len();
        Matroid {
            ground,
            bases,
            rank,
        }
    }

    /// The uniform matroid `U(r, E)`; `r = 0` gives the single basis `∅`.
    pub fn uniform(r: usize, ground: GroundSet) -> Result<Matroid, MatroidError> {
        if r > ground.len() {
            return Err(MatroidError::RankOutOfRange {
                rank: r,
                n: ground.len(),
            });
        }
        let bases: Vec<Subset> = ground.labels().subsets().filter(|s| s.len() == r).collect();
        Ok(Matroid::from_sorted_bases_unchecked(ground, bases))
    }

    /// `U(r, n)` on `{1..n}`.
    pub fn uniform_n(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        Matroid::uniform(r, GroundSet::range(n))
    }

    /// The matroid on the empty ground set, whose only basis is `∅`.
    pub fn empty() -> Matroid {
        Matroid::from_sorted_bases_unchecked(GroundSet::empty(), vec![Subset::EMPTY])
    }

    /// The Fano plane, labelled so that its lines are 123, 145, 246, 356, 347, 257, 167.
    pub fn fano() -> Matroid {
        let lines = ["123", "145", "246", "356", "347", "257", "167"]
            .map(|l| Subset::from_labels(l.bytes().map(|b| b - b'0')));
        let bases = Subset::range(7)
            .subsets()
            .filter(|s| s.len() == 3 && !lines.contains(s))
            .collect();
        Matroid::from_sorted_bases_unchecked(GroundSet::range(7), bases)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn ground_labels(&self) -> Subset {
        self.ground.labels()
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in increasing mask (revlex) order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// `C(n, r) - |B(M)|`.
    pub fn num_nonbases(&self) -> usize {
        binomial(self.n(), self.rank) - self.bases.len()
    }

    pub fn nonbases(&self) -> Vec<Subset> {
        self.ground
            .labels()
            .subsets()
            .filter(|s| s.len() == self.rank && !self.is_basis(*s))
            .collect()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        s.len() <= self.rank && self.bases.iter().any(|&b| s.is_subset_of(b))
    }

    fn check_subset(&self, s: Subset) -> Result<(), MatroidError> {
        if s.is_subset_of(self.ground.labels()) {
            Ok(())
        } else {
            Err(MatroidError::NotASubset {
                subset: s,
                ground: self.ground.labels(),
            })
        }
    }

    pub fn independent_sets(&self) -> SubsetFamily {
        let members = self
            .ground
            .labels()
            .subsets()
            .filter(|&s| self.is_independent(s))
            .collect();
        SubsetFamily::new(FamilyKind::Independent, members)
    }

    pub fn rank_of(&self, s: Subset) -> Result<usize, MatroidError> {
        self.check_subset(s)?;
        Ok(self.rank_unchecked(s))
    }

    pub(crate) fn rank_unchecked(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn closure(&self, s: Subset) -> Result<Subset, MatroidError> {
        self.check_subset(s)?;
        Ok(self.closure_unchecked(s))
    }

    fn closure_unchecked(&self, s: Subset) -> Subset {
        let r = self.rank_unchecked(s);
        self.ground
            .iter()
            .filter(|&x| s.contains(x) || self.rank_unchecked(s.with(x)) == r)
            .collect()
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground.labels()) && self.closure_unchecked(s) == s
    }

    pub fn flats(&self) -> SubsetFamily {
        let members = self
            .ground
            .labels()
            .subsets()
            .filter(|&s| self.closure_unchecked(s) == s)
            .collect();
        SubsetFamily::new(FamilyKind::Flats, members)
    }

    pub fn circuits(&self) -> SubsetFamily {
        let members = self
            .ground
            .labels()
            .subsets()
            .filter(|&s| {
                !s.is_empty()
                    && !self.is_independent(s)
                    && s.iter().all(|x| self.is_independent(s.without(x)))
            })
            .collect();
        SubsetFamily::new(FamilyKind::Circuits, members)
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground.labels())
            && !s.is_empty()
            && !self.is_independent(s)
            && s.iter().all(|x| self.is_independent(s.without(x)))
    }

    pub fn girth(&self) -> Girth {
        // smallest dependent set is a circuit
        let n = self.n();
        for k in 1..=n {
            let dependent = self
                .ground
                .labels()
                .subsets()
                .any(|s| s.len() == k && !self.is_independent(s));
            if dependent {
                return Girth::Finite(k);
            }
        }
        Girth::Infinite
    }

    pub fn loops(&self) -> Subset {
        self.ground
            .iter()
            .filter(|&x| !self.is_independent(Subset::singleton(x)))
            .collect()
    }

    /// Unordered pairs `{x, y}` of non-loops with `{x, y}` dependent.
    pub fn parallel_pairs(&self) -> Vec<(u8, u8)> {
        let loops = self.loops();
        let live: Vec<u8> = self.ground.labels().difference(loops).to_vec();
        let mut out = Vec::new();
        for (i, &x) in live.iter().enumerate() {
            for &y in &live[i + 1..] {
                if !self.is_independent(Subset::from_labels([x, y])) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_pairs().is_empty()
    }

    /// `M \ L`: independent sets are those of `M` avoiding `L`.
    pub fn delete(&self, l: Subset) -> Result<Matroid, MatroidError> {
        self.check_subset(l)?;
        let rest = self.ground.labels().difference(l);
        let r = self.rank_unchecked(rest);
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .map(|b| b.intersection(rest))
            .filter(|b| b.len() == r)
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid::from_sorted_bases_unchecked(GroundSet(rest), bases))
    }

    /// `M | L`, the deletion of the complement of `L`.
    pub fn restrict(&self, l: Subset) -> Result<Matroid, MatroidError> {
        self.check_subset(l)?;
        self.delete(self.ground.labels().difference(l))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let overlap = self.ground_labels().intersection(other.ground_labels());
        if !overlap.is_empty() {
            return Err(MatroidError::GroundSetOverlap(overlap));
        }
        let ground = GroundSet(self.ground_labels().union(other.ground_labels()));
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .flat_map(|&a| other.bases.iter().map(move |&b| a.union(b)))
            .collect();
        bases.sort_unstable();
        Ok(Matroid::from_sorted_bases_unchecked(ground, bases))
    }

    /// Applies an injective relabeling of the ground set.
    pub fn relabel<F: Fn(u8) -> u8>(&self, map: F) -> Result<Matroid, MatroidError> {
        let image: Subset = self.ground.iter().map(&map).collect();
        if image.len() != self.n() {
            return Err(MatroidError::NonInjectiveRelabel);
        }
        if let Some(bad) = self
            .ground
            .iter()
            .map(&map)
            .find(|&l| l == 0 || l > MAX_LABEL)
        {
            return Err(MatroidError::LabelOutOfRange(bad));
        }
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .map(|b| b.iter().map(&map).collect())
            .collect();
        bases.sort_unstable();
        Ok(Matroid::from_sorted_bases_unchecked(
            GroundSet(image),
            bases,
        ))
    }

    /// Relabels the ground set onto `{1..n}` preserving label order.
    pub fn standardize(&self) -> Matroid {
        let labels = self.ground.labels().to_vec();
        self.relabel(|x| labels.iter().position(|&l| l == x).unwrap() as u8 + 1)
            .expect("order-preserving relabel is injective")
    }

    /// Adds `offset` to every label.
    pub fn shift(&self, offset: u8) -> Result<Matroid, MatroidError> {
        self.relabel(|x| x.saturating_add(offset))
    }
}

fn check_exchange(bases: &[Subset]) -> Result<(), MatroidError> {
    // bases are sorted, so membership is a binary search
    let is_basis = |s: Subset| bases.binary_search(&s).is_ok();
    for &a in bases {
        for &b in bases {
            if a == b {
                continue;
            }
            for x in a.difference(b).iter() {
                let ok = b
                    .difference(a)
                    .iter()
                    .any(|y| is_basis(a.without(x).with(y)));
                if !ok {
                    return Err(MatroidError::RejectedExchangeAxiom { a, b, element: x });
                }
            }
        }
    }
    Ok(())
}

/// Parses `"123"`-style or `"1,2,3"`-style subset notation.
pub fn parse_subset(s: &str) -> Option<Subset> {
    let s = s.trim();
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().ok().filter(|l| (1..=MAX_LABEL).contains(l)))
            .collect::<Option<Vec<u8>>>()
            .map(Subset::from_labels)
    } else {
        s.bytes()
            .map(|b| (b'1'..=b'9').contains(&b).then(|| b - b'0'))
            .collect::<Option<Vec<u8>>>()
            .map(Subset::from_labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> Subset {
        parse_subset(s).unwrap()
    }

    fn brute_rank(m: &Matroid, a: Subset) -> usize {
        a.subsets()
            .filter(|&s| m.bases().iter().any(|&b| s.is_subset_of(b)))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn uniform_two_four() {
        let m = Matroid::new(
            GroundSet::range(4),
            Subset::range(4).subsets().filter(|s| s.len() == 2),
        )
        .unwrap();
        assert_eq!(m, Matroid::uniform_n(2, 4).unwrap());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.num_bases(), 6);
    }

    #[test]
    fn single_element() {
        let m = Matroid::new(GroundSet::range(1), [set("1")]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.independent_sets().members(), &[Subset::EMPTY, set("1")]);
        assert_eq!(m.flats().members(), &[Subset::EMPTY, set("1")]);
        assert!(m.circuits().is_empty());
    }

    #[test]
    fn rejects_mixed_cardinality() {
        let err = Matroid::new(GroundSet::range(3), [set("12"), set("3")]).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::RejectedNotEqualCardinality { .. }
        ));
    }

    #[test]
    fn rejects_exchange_violation() {
        // {12, 34}: removing 1 from 12 cannot be repaired from 34
        let err = Matroid::new(GroundSet::range(4), [set("12"), set("34")]).unwrap_err();
        match err {
            MatroidError::RejectedExchangeAxiom { a, b, element } => {
                assert_eq!((a, b), (set("12"), set("34")));
                assert_eq!(element, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn uniform_counts() {
        assert_eq!(Matroid::uniform_n(2, 4).unwrap().num_bases(), 6);
        assert_eq!(Matroid::uniform_n(3, 7).unwrap().num_bases(), 35);
        let z = Matroid::uniform_n(0, 1).unwrap();
        assert_eq!(z.bases(), &[Subset::EMPTY]);
        assert_eq!(z.loops(), set("1"));
        assert!(matches!(
            Matroid::uniform_n(3, 2),
            Err(MatroidError::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        let u24 = Matroid::uniform_n(2, 4).unwrap();
        assert_eq!(u24.rank_of(set("123")).unwrap(), 2);
        assert_eq!(u24.rank_of(Subset::EMPTY).unwrap(), 0);
        let fano = Matroid::fano();
        assert_eq!(fano.rank_of(set("123")).unwrap(), 2);
        assert_eq!(fano.rank_of(Subset::EMPTY).unwrap(), 0);
        assert!(matches!(
            u24.rank_of(set("5")),
            Err(MatroidError::NotASubset { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let u24 = Matroid::uniform_n(2, 4).unwrap();
        assert_eq!(u24.closure(set("1")).unwrap(), set("1"));
        let fano = Matroid::fano();
        assert_eq!(fano.closure(set("12")).unwrap(), set("123"));
        assert_eq!(fano.closure(set("16")).unwrap(), set("167"));
        for a in Subset::range(7).subsets() {
            let c = fano.closure(a).unwrap();
            assert_eq!(fano.closure(c).unwrap(), c);
            assert!(a.is_subset_of(c));
        }
    }

    #[test]
    fn flats_examples() {
        let u23 = Matroid::uniform_n(2, 3).unwrap();
        assert_eq!(
            u23.flats().members(),
            &[Subset::EMPTY, set("1"), set("2"), set("3"), set("123")]
        );
        let fano = Matroid::fano();
        let flats = fano.flats();
        assert_eq!(flats.len(), 16);
        let by_rank = |k: usize| {
            flats
                .iter()
                .filter(|&f| fano.rank_of(f).unwrap() == k)
                .count()
        };
        assert_eq!(
            (by_rank(0), by_rank(1), by_rank(2), by_rank(3)),
            (1, 7, 7, 1)
        );
        assert!(flats.is_intersection_closed());
    }

    #[test]
    fn circuits_examples() {
        let u24 = Matroid::uniform_n(2, 4).unwrap();
        let c = u24.circuits();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|s| s.len() == 3));
        let fano = Matroid::fano();
        let c = fano.circuits();
        let triples = c.iter().filter(|s| s.len() == 3).count();
        let quads = c.iter().filter(|s| s.len() == 4).count();
        // 7 lines, and the 7 complements of lines
        assert_eq!((triples, quads, c.len()), (7, 7, 14));
        assert!(c.is_antichain());
        assert!(Matroid::uniform_n(1, 1).unwrap().circuits().is_empty());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Matroid::uniform_n(2, 4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(Matroid::uniform_n(1, 2).unwrap().girth(), Girth::Finite(2));
        assert_eq!(Matroid::uniform_n(4, 4).unwrap().girth(), Girth::Infinite);
        assert_eq!(Matroid::fano().girth(), Girth::Finite(3));
    }

    #[test]
    fn loops_and_parallels() {
        let z = Matroid::uniform_n(0, 2).unwrap();
        assert_eq!(z.loops(), set("12"));
        assert!(!z.is_simple());
        assert!(Matroid::uniform_n(2, 4).unwrap().is_simple());
        // bases 13, 23, 14, 24: {1,2} and {3,4} are parallel classes
        let m = Matroid::new(
            GroundSet::range(4),
            [set("13"), set("23"), set("14"), set("24")],
        )
        .unwrap();
        assert_eq!(m.parallel_pairs(), vec![(1, 2), (3, 4)]);
        assert!(!m.is_simple());
    }

    #[test]
    fn minors_and_sums() {
        let u24 = Matroid::uniform_n(2, 4).unwrap();
        assert_eq!(
            u24.delete(set("4")).unwrap(),
            Matroid::uniform_n(2, 3).unwrap()
        );
        let a = Matroid::uniform(1, GroundSet::new(set("1")).unwrap()).unwrap();
        let b = Matroid::uniform(0, GroundSet::new(set("2")).unwrap()).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.loops(), set("2"));
        assert!(matches!(
            a.direct_sum(&a),
            Err(MatroidError::GroundSetOverlap(_))
        ));
        let line = Matroid::fano().restrict(set("123")).unwrap();
        assert_eq!(line.rank(), 2);
        assert_eq!(line.bases(), &[set("12"), set("13"), set("23")]);
    }

    #[test]
    fn rank_is_submodular_on_small_matroids() {
        for m in enumerate_all(4).unwrap() {
            let subsets: Vec<Subset> = m.ground_labels().subsets().collect();
            for &a in &subsets {
                assert_eq!(m.rank_of(a).unwrap(), brute_rank(&m, a));
                for &b in &subsets {
                    let ra = m.rank_of(a).unwrap();
                    let rb = m.rank_of(b).unwrap();
                    let ru = m.rank_of(a.union(b)).unwrap();
                    let ri = m.rank_of(a.intersection(b)).unwrap();
                    assert!(ra + rb >= ru + ri);
                    if a.is_subset_of(b) {
                        assert!(ra <= rb);
                    }
                }
            }
        }
    }

    #[test]
    fn derived_family_invariants() {
        for m in enumerate_all(4).unwrap() {
            let ind = m.independent_sets();
            assert!(ind.is_downward_closed());
            let maximal: Vec<Subset> = ind.iter().filter(|s| s.len() == m.rank()).collect();
            assert_eq!(maximal, m.bases());
            assert!(m.circuits().is_antichain());
            let flats = m.flats();
            assert!(flats.is_intersection_closed());
            assert!(flats.contains(m.ground_labels()));
            for s in m.ground_labels().subsets() {
                assert!(flats.contains(m.closure(s).unwrap()));
            }
            let girth_ge4 = m
                .ground_labels()
                .subsets()
                .filter(|s| s.len() <= 3)
                .all(|s| m.is_independent(s));
            assert_eq!(m.girth().at_least(4), girth_ge4);
        }
    }

    #[test]
    fn parse_subset_forms() {
        assert_eq!(parse_subset("123"), Some(Subset::from_labels([1, 2, 3])));
        assert_eq!(parse_subset("1, 12"), Some(Subset::from_labels([1, 12])));
        assert_eq!(parse_subset("1x"), None);
    }
}
