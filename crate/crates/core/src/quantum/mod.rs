//! Ideals of quantum automorphism groups of matroids, built inside the free algebra on
//! the magic matrix `u = (u_ij)` indexed by the ground set.
//!
//! Ground set labels are numbered in increasing order, so the `k`-th smallest label is
//! row and column `k` of `u`.

mod generators;
mod verdict;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, Subset};
use crate::ncpoly::{Coefficient, NcPolynomial};

pub use generators::{
    commutators, qsym_ideal_generators, tuple_ideal_generators, tuple_monomial, TupleSet,
    MAX_TUPLE_GENERATORS,
};
pub use verdict::{
    decide_commutativity, eval_at_permutation, same_ideal, theorem_shortcut, CommutativityVerdict,
    DecideConfig, Method, Verdict, Witness,
};

/// Which family of tuples the quantum group must preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axioms {
    Independent,
    Bases,
    Flats,
    Circuits,
}

impl Axioms {
    pub const ALL: [Axioms; 4] = [
        Axioms::Independent,
        Axioms::Bases,
        Axioms::Flats,
        Axioms::Circuits,
    ];
}

impl fmt::Display for Axioms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axioms::Independent => "independent",
            Axioms::Bases => "bases",
            Axioms::Flats => "flats",
            Axioms::Circuits => "circuits",
        })
    }
}

impl FromStr for Axioms {
    type Err = QuantumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "independent" | "I" => Ok(Axioms::Independent),
            "bases" | "B" => Ok(Axioms::Bases),
            "flats" | "F" => Ok(Axioms::Flats),
            "circuits" | "C" => Ok(Axioms::Circuits),
            _ => Err(QuantumError::UnknownAxioms(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error("unknown axiom system {0:?}")]
    UnknownAxioms(String),
    #[error("the ground sets of a free product must be disjoint")]
    LabelOverlap,
    #[error("expected a rank 2 matroid, got rank {0}")]
    WrongRank(usize),
    #[error("the matroid has loops")]
    HasLoops,
    #[error("an empty ground set has no magic matrix")]
    EmptyGround,
    #[error("ground set of size {0} exceeds the variable alphabet")]
    TooManyVariables(usize),
    #[error("{0} tuple generators exceed the limit of {1}")]
    TooManyGenerators(usize, usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// `I(QAut_*(M))` for one axiom system: the magic matrix relations together with a
/// monomial `u_AB` for every pair of equal-length tuples exactly one of which belongs
/// to the chosen tuple family.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumGroupSpec<C: Coefficient> {
    /// `None` for ideals not attached to a single axiom system (free products, graphs).
    pub matroid: Option<Matroid>,
    pub axioms: Option<Axioms>,
    /// Ground labels in row order.
    pub labels: Vec<u8>,
    pub generators: Vec<NcPolynomial<C>>,
}

impl<C: Coefficient> QuantumGroupSpec<C> {
    pub fn universe(&self) -> u8 {
        self.labels.len() as u8
    }

    /// Row/column index of a ground label.
    pub fn index_of(&self, label: u8) -> Option<u8> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|i| i as u8 + 1)
    }
}

pub(crate) fn universe_of(labels: Subset) -> Result<u8, QuantumError> {
    match labels.len() {
        0 => Err(QuantumError::EmptyGround),
        n if n > crate::ncpoly::MAX_UNIVERSE as usize => Err(QuantumError::TooManyVariables(n)),
        n => Ok(n as u8),
    }
}

/// The spec for `m` under `axioms`.
pub fn quantum_aut_spec<C: Coefficient>(
    m: &Matroid,
    axioms: Axioms,
) -> Result<QuantumGroupSpec<C>, QuantumError> {
    let n = universe_of(m.ground_labels())?;
    let mut generators = qsym_ideal_generators(n);
    generators.extend(tuple_ideal_generators(&TupleSet::new(m, axioms))?);
    Ok(QuantumGroupSpec {
        matroid: Some(m.clone()),
        axioms: Some(axioms),
        labels: m.ground_labels().to_vec(),
        generators,
    })
}

/// The quantum symmetric group on the given labels as a spec.
pub fn qsym_spec<C: Coefficient>(labels: Subset) -> Result<QuantumGroupSpec<C>, QuantumError> {
    let n = universe_of(labels)?;
    Ok(QuantumGroupSpec {
        matroid: None,
        axioms: None,
        labels: labels.to_vec(),
        generators: qsym_ideal_generators(n),
    })
}

/// The free product of two quantum permutation groups on disjoint ground sets: both
/// ideals, the magic relations on the union, and `u_ij = 0` whenever exactly one of
/// `i`, `j` lies in the first ground set.
pub fn free_product_ideal<C: Coefficient>(
    g: &QuantumGroupSpec<C>,
    h: &QuantumGroupSpec<C>,
) -> Result<QuantumGroupSpec<C>, QuantumError> {
    let first = Subset::from_labels(g.labels.iter().copied());
    let second = Subset::from_labels(h.labels.iter().copied());
    if !first.is_disjoint(second) {
        return Err(QuantumError::LabelOverlap);
    }
    let all = first.union(second);
    let n = universe_of(all)?;
    let labels = all.to_vec();
    let position = |l: u8| labels.iter().position(|&x| x == l).unwrap() as u8 + 1;
    let lift = |spec: &QuantumGroupSpec<C>, p: &NcPolynomial<C>| {
        p.map_variables(
            |v| {
                let (r, c) = (
                    spec.labels[v.row as usize - 1],
                    spec.labels[v.col as usize - 1],
                );
                crate::ncpoly::Variable::new(position(r), position(c))
            },
            n,
        )
    };
    let mut generators = qsym_ideal_generators(n);
    generators.extend(g.generators.iter().map(|p| lift(g, p)));
    generators.extend(h.generators.iter().map(|p| lift(h, p)));
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            if first.contains(a) != first.contains(b) {
                generators.push(NcPolynomial::var(i as u8 + 1, j as u8 + 1, n).expect("in range"));
            }
        }
    }
    Ok(QuantumGroupSpec {
        matroid: None,
        axioms: None,
        labels,
        generators,
    })
}

/// The quantum automorphism group of the graph on `E(m)` joining elements in distinct
/// rank 1 flats, for a loopless rank 2 matroid `m`: the magic relations plus `u_ab u_cd`
/// whenever exactly one of `ac`, `bd` is an edge.
pub fn graph_qaut_ideal<C: Coefficient>(m: &Matroid) -> Result<QuantumGroupSpec<C>, QuantumError> {
    if m.rank() != 2 {
        return Err(QuantumError::WrongRank(m.rank()));
    }
    if !m.loops().is_empty() {
        return Err(QuantumError::HasLoops);
    }
    let n = universe_of(m.ground_labels())?;
    let labels = m.ground_labels().to_vec();
    // two non-loops lie in distinct rank 1 flats exactly when they form a basis
    let edge =
        |i: usize, j: usize| i != j && m.is_basis(Subset::from_labels([labels[i], labels[j]]));
    let mut generators = qsym_ideal_generators(n);
    let k = n as usize;
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    if edge(a, c) != edge(b, d) {
                        let word = NcPolynomial::<C>::word_of(
                            &[(a as u8 + 1, b as u8 + 1), (c as u8 + 1, d as u8 + 1)],
                            n,
                        )
                        .expect("in range");
                        generators.push(NcPolynomial::monomial(word, C::one(), n));
                    }
                }
            }
        }
    }
    Ok(QuantumGroupSpec {
        matroid: Some(m.clone()),
        axioms: None,
        labels,
        generators,
    })
}
