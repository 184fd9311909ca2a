use std::fmt;

use crate::classical::Permutation;
use crate::groebner::{buchberger, EngineConfig, GbError, GbStatus, GroebnerBasis};
use crate::matroid::Matroid;
use crate::ncpoly::{Coefficient, NcPolynomial, Variable};

use super::{commutators, Axioms, QuantumGroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Commutative,
    Noncommutative,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Commutative => "commutative",
            Verdict::Noncommutative => "noncommutative",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    TheoremShortcut,
    Groebner,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::TheoremShortcut => "theorem",
            Method::Groebner => "groebner",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness<C: Coefficient> {
    /// A commutator with a nonzero normal form modulo a complete basis.
    NonzeroCommutator {
        commutator: NcPolynomial<C>,
        normal_form: NcPolynomial<C>,
    },
    /// Every one of `count` commutators reduced to zero.
    AllCommutatorsVanish { count: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutativityVerdict<C: Coefficient> {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<Witness<C>>,
    /// The basis the verdict was read from, when one was computed.
    pub basis: Option<GroebnerBasis<C>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideConfig {
    pub engine: EngineConfig,
    pub shortcuts: bool,
}

impl DecideConfig {
    pub fn new(engine: EngineConfig) -> DecideConfig {
        DecideConfig {
            engine,
            shortcuts: true,
        }
    }

    pub fn without_shortcuts(engine: EngineConfig) -> DecideConfig {
        DecideConfig {
            engine,
            shortcuts: false,
        }
    }
}

/// Verdicts that follow from structure alone: flats always give the classical group,
/// and so do independent sets and bases once the girth is at least four.
pub fn theorem_shortcut(m: &Matroid, axioms: Axioms) -> Option<Verdict> {
    match axioms {
        Axioms::Flats => Some(Verdict::Commutative),
        Axioms::Independent | Axioms::Bases if m.girth().at_least(4) => Some(Verdict::Commutative),
        _ => None,
    }
}

/// Decides whether the quotient by the presentation's ideal is commutative.
///
/// All commutators reducing to zero proves commutativity whatever the basis status,
/// since every basis element lies in the ideal. A nonzero normal form only proves the
/// converse when the basis is complete; otherwise the answer is `Unknown`.
pub fn decide_commutativity<C: Coefficient>(
    spec: &QuantumGroupSpec<C>,
    config: &DecideConfig,
) -> Result<CommutativityVerdict<C>, GbError> {
    if config.shortcuts {
        if let (Some(m), Some(axioms)) = (&spec.matroid, spec.axioms) {
            if let Some(verdict) = theorem_shortcut(m, axioms) {
                return Ok(CommutativityVerdict {
                    verdict,
                    method: Method::TheoremShortcut,
                    witness: None,
                    basis: None,
                });
            }
        }
    }
    let basis = buchberger(&spec.generators, &config.engine)?;
    let comms = commutators::<C>(spec.universe());
    let reducer = basis.reducer();
    let complete = basis.status == GbStatus::Complete;
    let mut first_nonzero = None;
    for c in &comms {
        let nf = crate::ncpoly::reduce::reduce(c, &basis.generators, &reducer, None);
        if !nf.is_zero() {
            first_nonzero = Some((c.clone(), nf));
            break;
        }
    }
    let (verdict, witness) = match first_nonzero {
        None => (
            Verdict::Commutative,
            Some(Witness::AllCommutatorsVanish { count: comms.len() }),
        ),
        Some((commutator, normal_form)) if complete => (
            Verdict::Noncommutative,
            Some(Witness::NonzeroCommutator {
                commutator,
                normal_form,
            }),
        ),
        Some(_) => (Verdict::Unknown, None),
    };
    Ok(CommutativityVerdict {
        verdict,
        method: Method::Groebner,
        witness,
        basis: Some(basis),
    })
}

/// The character `u_ij -> [sigma(i) = j]` of the commutative quotient, applied to `p`.
/// `labels` gives the ground label of each row.
pub fn eval_at_permutation<C: Coefficient>(
    p: &NcPolynomial<C>,
    sigma: &Permutation,
    labels: &[u8],
) -> C {
    let n = p.universe();
    p.evaluate(|l| {
        let v = Variable::from_letter(l, n);
        let (i, j) = (labels[v.row as usize - 1], labels[v.col as usize - 1]);
        if sigma.apply(i) == j {
            C::one()
        } else {
            C::zero()
        }
    })
}

/// Whether two bases generate the same ideal: each side's generators reduce to zero
/// modulo the other.
pub fn same_ideal<C: Coefficient>(a: &GroebnerBasis<C>, b: &GroebnerBasis<C>) -> bool {
    let inside = |x: &GroebnerBasis<C>, y: &GroebnerBasis<C>| {
        x.generators.iter().all(|g| y.reduce(g).is_zero())
    };
    inside(a, b) && inside(b, a)
}
