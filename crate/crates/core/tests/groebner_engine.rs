use std::time::Duration;

use proptest::prelude::*;
use qautm::classical::Permutations;
use qautm::groebner::{
    buchberger, build_reducer, find_obstructions, s_polynomial, EngineConfig, GbStatus,
    GroebnerBasis,
};
use qautm::matroid::iso_catalog;
use qautm::ncpoly::{normal_remainder, normal_remainder_with_trace, replay_trace, Word};
use qautm::quantum::{
    commutators, eval_at_permutation, qsym_ideal_generators, quantum_aut_spec, Axioms,
};
use qautm::{Poly, Rational};

/// Every S-polynomial of every pair reduces to zero, checked with the naive reducer.
fn s_polynomials_vanish(b: &GroebnerBasis<Rational>) -> bool {
    let g = &b.generators;
    for i in 0..g.len() {
        for j in i..g.len() {
            for ob in find_obstructions(i, &g[i], j, &g[j]).unwrap() {
                let s = s_polynomial(&ob, &g[i], &g[j]).unwrap();
                if !normal_remainder(&s, g).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn magic_relations_on_two_points() {
    let gens: Vec<Poly> = qsym_ideal_generators(2);
    let b = buchberger(&gens, &EngineConfig::unbounded()).unwrap();
    assert_eq!(b.status, GbStatus::Complete);
    for c in commutators::<Rational>(2) {
        assert!(b.reduce(&c).is_zero(), "{c}");
    }
    let labels = [1, 2];
    for images in Permutations::new(2) {
        let sigma = qautm::classical::Permutation::from_images(&labels, &images);
        for g in &b.generators {
            assert_eq!(
                eval_at_permutation(g, &sigma, &labels),
                Rational::from_integer(0.into())
            );
        }
    }
}

#[test]
fn complete_bases_pass_exhaustive_recheck() {
    for n in 1..=3u8 {
        let b = buchberger(
            &qsym_ideal_generators::<Rational>(n),
            &EngineConfig::unbounded(),
        )
        .unwrap();
        assert!(b.status.is_complete());
        assert!(s_polynomials_vanish(&b), "magic relations n = {n}");
    }
    for m in iso_catalog(3).unwrap().iter().filter(|m| m.n() > 0) {
        for axioms in Axioms::ALL {
            let spec = quantum_aut_spec::<Rational>(m, axioms).unwrap();
            let b = buchberger(
                &spec.generators,
                &EngineConfig::with_time_budget(Duration::from_secs(60)),
            )
            .unwrap();
            assert!(b.status.is_complete(), "{m:?} {axioms}");
            assert!(s_polynomials_vanish(&b), "{m:?} {axioms}");
        }
    }
}

#[test]
fn ideal_is_preserved() {
    for m in iso_catalog(3).unwrap().iter().filter(|m| m.n() > 0) {
        let spec = quantum_aut_spec::<Rational>(m, Axioms::Bases).unwrap();
        let cfg = EngineConfig {
            keep_history: true,
            ..EngineConfig::unbounded()
        };
        let b = buchberger(&spec.generators, &cfg).unwrap();
        for h in b.history.iter().chain(&spec.generators) {
            assert!(b.reduce(h).is_zero(), "{h}");
        }
    }
}

#[test]
fn truncated_bases_only_certify_members() {
    let m = qautm::matroid::decode_revlex(&qautm::matroid::RevlexCode::new("3f", 4, 2).unwrap())
        .unwrap();
    let spec = quantum_aut_spec::<Rational>(&m, Axioms::Bases).unwrap();
    let truncated = buchberger(&spec.generators, &EngineConfig::with_degree_bound(3)).unwrap();
    assert_eq!(truncated.status, GbStatus::TruncatedAtDegree(3));
    let full = buchberger(&spec.generators, &EngineConfig::unbounded()).unwrap();
    assert!(full.status.is_complete());
    // the truncated generators are ideal members
    for g in &truncated.generators {
        assert!(full.reduce(g).is_zero());
    }
    // and zero remainders replay to the polynomial from the cofactors
    let reducer = build_reducer(&truncated.generators);
    let mut certified = 0;
    for c in commutators::<Rational>(4) {
        let (r, trace) = normal_remainder_with_trace(&c, &truncated.generators, &reducer);
        assert_eq!(replay_trace(&trace, &truncated.generators, &r), c);
        if r.is_zero() {
            certified += 1;
            assert!(full.reduce(&c).is_zero());
        }
    }
    assert!(certified > 0);
}

fn homogeneous_quadratic() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u8..4, 0u8..4), -2i64..3), 1..4).prop_map(|terms| {
        Poly::from_terms(
            terms.into_iter().map(|((a, b), c)| {
                (
                    Word::from_letters(&[a, b]),
                    Rational::from_integer(c.into()),
                )
            }),
            2,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homogeneous_runs_pop_in_degree_order(gens in prop::collection::vec(homogeneous_quadratic(), 1..4)) {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let cfg = EngineConfig {
            max_iterations: Some(40),
            time_budget: Some(Duration::from_millis(200)),
            ..Default::default()
        };
        let b = buchberger(&gens, &cfg).unwrap();
        prop_assert!(b.stats.degrees_nondecreasing);
        // a run stopped during the initial pass may not have seen every generator
        let initial_pass_done = b.stats.processed > 0 || !matches!(b.status, GbStatus::Aborted(_));
        for g in gens.iter().filter(|_| initial_pass_done) {
            prop_assert!(b.reduce(g).is_zero());
        }
    }
}
