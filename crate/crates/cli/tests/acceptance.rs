//! One line per acceptance criterion. Runs without the libtest harness so the lines
//! show up in plain `cargo test` output; exits nonzero if any hard criterion fails.

use std::path::Path;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qautm::classical::{automorphism_group, is_isomorphic, Permutation, Permutations};
use qautm::groebner::{
    buchberger, build_reducer, find_obstructions, s_polynomial, DivisibilityAutomaton,
    EngineConfig, GbFile, GbStatus, GroebnerBasis,
};
use qautm::matroid::{
    decode_revlex, encode_revlex, enumerate_matroids, iso_catalog, parse_subset, Girth, Matroid,
    RevlexCode,
};
use qautm::ncpoly::{
    normal_remainder, normal_remainder_with_trace, replay_trace, DivisorFinder, NaiveFinder, Word,
};
use qautm::quantum::{
    commutators, decide_commutativity, eval_at_permutation, quantum_aut_spec, Axioms, DecideConfig,
    Verdict,
};
use qautm::strong_maps::{lovasz_isomorphism_test, verify_decomposition, Catalog};
use qautm::Rational;
use qautm_cli::{evaluate, read_fixtures, FixtureRow, RunConfig};

/// Budget per Gröbner run where a criterion allows one.
const PER_MATROID_BUDGET: Duration = Duration::from_secs(300);
/// Budget for the uniform matroids of girth at least four.
const UNIFORM_BUDGET: Duration = Duration::from_secs(60);
/// Budget for the Fano run that is expected not to finish.
const FANO_BUDGET: Duration = Duration::from_secs(20);
const AUTOMATON_CASES: usize = 2000;

enum Outcome {
    Pass(String),
    Soft(String),
    Fail(String),
}

type Check = fn() -> Outcome;

/// `(hex, n, rank)` of every reference row on at most four elements.
const EXPECTED_SMALL_ROWS: [(&str, usize, usize); 17] = [
    ("3", 2, 1),
    ("1", 2, 1),
    ("7", 3, 1),
    ("3", 3, 1),
    ("1", 3, 1),
    ("f", 4, 1),
    ("3", 4, 1),
    ("1e", 4, 2),
    ("01", 4, 2),
    ("3f", 4, 2),
    ("1f", 4, 2),
    ("7", 4, 1),
    ("1", 4, 1),
    ("0b", 4, 2),
    ("07", 4, 2),
    ("03", 4, 2),
    ("f", 4, 3),
];

fn code(hex: &str, n: usize, r: usize) -> Matroid {
    decode_revlex(&RevlexCode::new(hex, n, r).unwrap()).unwrap()
}

fn fixtures() -> Vec<FixtureRow> {
    read_fixtures(&Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/reference.tsv")).unwrap()
}

fn small_fixtures() -> Vec<FixtureRow> {
    fixtures().into_iter().filter(|f| f.n <= 4).collect()
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

fn labeled_matroids(max_n: usize) -> Vec<Matroid> {
    let mut out = vec![Matroid::empty()];
    for n in 1..=max_n {
        for r in 0..=n {
            out.extend(enumerate_matroids(n, r, false).unwrap());
        }
    }
    out
}

fn fail_if(errors: Vec<String>, pass: String) -> Outcome {
    if errors.is_empty() {
        Outcome::Pass(pass)
    } else {
        Outcome::Fail(errors.join("; "))
    }
}

fn encoding_fidelity() -> Outcome {
    let start = Instant::now();
    let m = code("3f7eefd6f", 7, 3);
    let mut errors = Vec::new();
    if m.num_bases() != 28 {
        errors.push(format!("{} bases", m.num_bases()));
    }
    let mut want: Vec<_> = ["123", "145", "246", "356", "347", "257", "167"]
        .iter()
        .map(|s| parse_subset(s).unwrap())
        .collect();
    want.sort();
    let mut got = m.nonbases();
    got.sort();
    if got != want {
        errors.push(format!("nonbases {got:?}"));
    }
    let back = encode_revlex(&m).unwrap().hex;
    if back != "3f7eefd6f" {
        errors.push(format!("re-encoded to {back}"));
    }
    if start.elapsed() >= Duration::from_secs(1) {
        errors.push(format!("took {:?}", start.elapsed()));
    }
    fail_if(errors, "Fano code: 28 bases, 7 nonbases, round trip".into())
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let config = RunConfig {
        axioms: vec![Axioms::Bases],
        time_budget: PER_MATROID_BUDGET,
        ..Default::default()
    };
    let rows = small_fixtures();
    let mut errors = Vec::new();
    for f in &rows {
        let row = evaluate(&f.matroid().unwrap(), &config).unwrap();
        let tag = format!("{} n={} r={}", f.hex, f.n, f.rank);
        if f.girth.map(Girth::Finite) != Some(row.girth) {
            errors.push(format!("{tag} girth {}", row.girth));
        }
        if f.nonbases != Some(row.nonbases) {
            errors.push(format!("{tag} nonbases {}", row.nonbases));
        }
        if f.aut_order != Some(row.aut_order) {
            errors.push(format!("{tag} aut {}", row.aut_order));
        }
        if f.verdict_b != row.verdict(Axioms::Bases) {
            errors.push(format!("{tag} verdict_B {:?}", row.verdict(Axioms::Bases)));
        }
    }
    let mut keys: Vec<_> = rows.iter().map(|f| (f.hex.as_str(), f.n, f.rank)).collect();
    keys.sort();
    let mut want = EXPECTED_SMALL_ROWS.to_vec();
    want.sort();
    if keys != want {
        errors.push(format!("fixture rows {keys:?}"));
    }
    if start.elapsed() >= Duration::from_secs(1800) {
        errors.push(format!("took {:?}", start.elapsed()));
    }
    fail_if(
        errors,
        format!(
            "{} rows with n <= 4 reproduced in {:.1?}",
            rows.len(),
            start.elapsed()
        ),
    )
}

fn circuit_spot_checks() -> Outcome {
    let cases = [
        ("3f", 4, 2, Verdict::Noncommutative, Verdict::Commutative),
        ("f", 4, 1, Verdict::Noncommutative, Verdict::Noncommutative),
    ];
    let config = RunConfig {
        time_budget: PER_MATROID_BUDGET,
        ..Default::default()
    };
    let mut errors = Vec::new();
    for (hex, n, r, b, c) in cases {
        let row = evaluate(&code(hex, n, r), &config).unwrap();
        if row.verdict(Axioms::Bases) != Some(b) || row.verdict(Axioms::Circuits) != Some(c) {
            errors.push(format!(
                "{hex} n={n}: B={:?} C={:?}",
                row.verdict(Axioms::Bases),
                row.verdict(Axioms::Circuits)
            ));
        }
    }
    fail_if(
        errors,
        "U(2,4): B noncommutative, C commutative; f n=4 r=1: both noncommutative".into(),
    )
}

fn degree_soft_check() -> Outcome {
    let mut mismatches = Vec::new();
    for (hex, n, r, want) in [("3", 2, 1, 2), ("3f", 4, 2, 3), ("1f", 4, 2, 2)] {
        let spec = quantum_aut_spec::<Rational>(&code(hex, n, r), Axioms::Bases).unwrap();
        let b = buchberger(
            &spec.generators,
            &EngineConfig::with_time_budget(PER_MATROID_BUDGET),
        )
        .unwrap();
        if b.status != GbStatus::Complete || b.max_degree != want {
            let path = std::env::temp_dir().join(format!("qautm_dB_{hex}_{n}_{r}.gb"));
            std::fs::write(&path, GbFile::new(&b, hex, n, r, "bases").to_string()).unwrap();
            mismatches.push(format!(
                "{hex} n={n}: {} degree {} (basis at {})",
                b.status,
                b.max_degree,
                path.display()
            ));
        }
    }
    if mismatches.is_empty() {
        Outcome::Pass("d_B = 2, 3, 2 for 3 (n=2), 3f, 1f".into())
    } else {
        Outcome::Soft(mismatches.join("; "))
    }
}

fn flats_commutative() -> Outcome {
    let config =
        DecideConfig::without_shortcuts(EngineConfig::with_time_budget(PER_MATROID_BUDGET));
    let mut errors = Vec::new();
    let matroids: Vec<Matroid> = labeled_matroids(3)
        .into_iter()
        .filter(|m| m.n() > 0)
        .collect();
    for m in &matroids {
        let spec = quantum_aut_spec::<Rational>(m, Axioms::Flats).unwrap();
        let v = decide_commutativity(&spec, &config).unwrap();
        if v.verdict != Verdict::Commutative {
            errors.push(format!("{m:?}: {}", v.verdict));
        }
    }
    fail_if(
        errors,
        format!(
            "flats ideal commutative by Gröbner basis for all {} matroids with 1 <= n <= 3",
            matroids.len()
        ),
    )
}

fn independent_equals_bases() -> Outcome {
    let cfg = EngineConfig::with_time_budget(PER_MATROID_BUDGET);
    let mut errors = Vec::new();
    let (mut compared, mut skipped) = (0, 0);
    for m in iso_catalog(4).unwrap().iter().filter(|m| m.n() > 0) {
        let gb = |ax| {
            buchberger(
                &quantum_aut_spec::<Rational>(m, ax).unwrap().generators,
                &cfg,
            )
            .unwrap()
        };
        let (i, b) = (gb(Axioms::Independent), gb(Axioms::Bases));
        if !(i.status.is_complete() && b.status.is_complete()) {
            skipped += 1;
            continue;
        }
        compared += 1;
        if i.generators != b.generators {
            errors.push(format!("{m:?}"));
        }
    }
    fail_if(
        errors,
        format!("reduced bases agree on {compared} classes with n <= 4 ({skipped} over budget)"),
    )
}

fn uniform_girth_four() -> Outcome {
    let config = DecideConfig::without_shortcuts(EngineConfig::with_time_budget(UNIFORM_BUDGET));
    let mut errors = Vec::new();
    let mut notes = Vec::new();
    for (r, n) in [(3, 4), (4, 5)] {
        let m = Matroid::uniform_n(r, n).unwrap();
        let spec = quantum_aut_spec::<Rational>(&m, Axioms::Bases).unwrap();
        let v = decide_commutativity(&spec, &config).unwrap();
        let status = v
            .basis
            .as_ref()
            .map(|b| b.status.to_string())
            .unwrap_or_default();
        notes.push(format!("U({r},{n}) {status}"));
        if v.verdict != Verdict::Commutative {
            errors.push(format!("U({r},{n}): {} ({status})", v.verdict));
        }
    }
    fail_if(
        errors,
        format!("commutators vanish without shortcuts: {}", notes.join(", ")),
    )
}

fn permutation_oracle() -> Outcome {
    let mut errors = Vec::new();
    let mut count = 0;
    for m in iso_catalog(4).unwrap().iter().filter(|m| m.n() > 0) {
        let spec = quantum_aut_spec::<Rational>(m, Axioms::Bases).unwrap();
        let aut = automorphism_group(m).unwrap();
        let mut zeros = 0;
        for images in Permutations::new(m.n()) {
            let sigma = Permutation::from_images(&spec.labels, &images);
            let kills = spec
                .generators
                .iter()
                .all(|g| eval_at_permutation(g, &sigma, &spec.labels) == zero());
            if kills != aut.contains(&sigma) {
                errors.push(format!("{m:?} at {images:?}"));
            }
            zeros += kills as usize;
        }
        if zeros != aut.order() {
            errors.push(format!("{m:?}: {zeros} zeros, |Aut| = {}", aut.order()));
        }
        count += 1;
    }
    for f in small_fixtures() {
        let order = automorphism_group(&f.matroid().unwrap()).unwrap().order();
        if Some(order) != f.aut_order {
            errors.push(format!("{} n={}: |Aut| = {order}", f.hex, f.n));
        }
    }
    fail_if(
        errors,
        format!("characters vanish exactly on Aut(M) for {count} classes; |Aut| columns match"),
    )
}

fn lovasz_suite() -> Outcome {
    let catalog = Catalog::new(3).unwrap();
    let all = labeled_matroids(3);
    let mut errors = Vec::new();
    for a in &all {
        for b in &all {
            if !verify_decomposition(a, b, &catalog).unwrap() {
                errors.push(format!("decomposition {a:?} -> {b:?}"));
            }
            let lovasz = lovasz_isomorphism_test(a, b, &catalog)
                .unwrap()
                .counts_agree;
            if lovasz != is_isomorphic(a, b).is_some() {
                errors.push(format!("isomorphism {a:?} vs {b:?}"));
            }
        }
    }
    let pairs = all.len() * all.len();
    fail_if(
        errors,
        format!("decomposition and isomorphism test on {pairs} ordered pairs with |E| <= 3"),
    )
}

fn s_polynomials_vanish(b: &GroebnerBasis<Rational>) -> bool {
    let g = &b.generators;
    (0..g.len()).all(|i| {
        (i..g.len()).all(|j| {
            find_obstructions(i, &g[i], j, &g[j])
                .unwrap()
                .iter()
                .all(|ob| normal_remainder(&s_polynomial(ob, &g[i], &g[j]).unwrap(), g).is_zero())
        })
    })
}

fn engine_micro_properties() -> Outcome {
    let mut errors = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let word = |rng: &mut StdRng, max: usize| {
        let len = rng.gen_range(0..=max);
        Word::from_letters(&(0..len).map(|_| rng.gen_range(0..3u8)).collect::<Vec<_>>())
    };
    for case in 0..AUTOMATON_CASES {
        let patterns: Vec<Option<Word>> = (0..rng.gen_range(1..8))
            .map(|_| rng.gen_bool(0.9).then(|| word(&mut rng, 4)))
            .collect();
        let auto = DivisibilityAutomaton::from_patterns(3, patterns.clone());
        let naive = NaiveFinder::from_patterns(patterns);
        let text = word(&mut rng, 10);
        if auto.find_divisor(text.letters()) != naive.find_divisor(text.letters())
            || auto.first_match(text.letters()) != naive.first_match(text.letters())
        {
            errors.push(format!("automaton case {case}"));
        }
    }
    let mut complete = 0;
    let mut replays = 0;
    for m in iso_catalog(3).unwrap().iter().filter(|m| m.n() > 0) {
        for axioms in Axioms::ALL {
            let spec = quantum_aut_spec::<Rational>(m, axioms).unwrap();
            let b = buchberger(
                &spec.generators,
                &EngineConfig::with_time_budget(PER_MATROID_BUDGET),
            )
            .unwrap();
            if !b.status.is_complete() {
                errors.push(format!("{m:?} {axioms}: {}", b.status));
                continue;
            }
            complete += 1;
            if !s_polynomials_vanish(&b) {
                errors.push(format!(
                    "{m:?} {axioms}: S-polynomial with nonzero remainder"
                ));
            }
            let reducer = build_reducer(&b.generators);
            for p in commutators::<Rational>(spec.universe())
                .iter()
                .chain(&spec.generators)
            {
                let (r, trace) = normal_remainder_with_trace(p, &b.generators, &reducer);
                replays += 1;
                if replay_trace(&trace, &b.generators, &r) != *p {
                    errors.push(format!("{m:?} {axioms}: trace of {p} does not replay"));
                }
            }
        }
    }
    fail_if(
        errors,
        format!("{AUTOMATON_CASES} automaton cases, {complete} complete bases rechecked, {replays} traces replayed"),
    )
}

fn fano_exits_cleanly() -> Outcome {
    let spec = quantum_aut_spec::<Rational>(&Matroid::fano(), Axioms::Bases).unwrap();
    let start = Instant::now();
    let b = buchberger(
        &spec.generators,
        &EngineConfig::with_time_budget(FANO_BUDGET),
    )
    .unwrap();
    let elapsed = start.elapsed();
    match b.status {
        GbStatus::Aborted(_) | GbStatus::TruncatedAtDegree(_) if elapsed < FANO_BUDGET * 3 => {
            Outcome::Pass(format!(
                "Fano bases run stopped as {} after {elapsed:.1?}",
                b.status
            ))
        }
        s => Outcome::Fail(format!("Fano bases run ended {s} after {elapsed:.1?}")),
    }
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("1 encoding fidelity", encoding_fidelity),
        ("2 table reproduction n<=4", table_reproduction),
        ("3 circuit axioms spot checks", circuit_spot_checks),
        ("4 d_B soft check", degree_soft_check),
        ("5a flats commutative", flats_commutative),
        ("5b independent = bases", independent_equals_bases),
        ("5c girth >= 4 commutative", uniform_girth_four),
        ("5d permutation oracle", permutation_oracle),
        ("6 strong map suite", lovasz_suite),
        ("7 engine micro-properties", engine_micro_properties),
        ("8 Fano budget exit", fano_exits_cleanly),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    (f(), start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for ((name, _), (outcome, t)) in criteria.iter().zip(results) {
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Soft(d) => ("SOFT-FAIL", d),
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "{tag:<9} criterion {name:<32} [{:>7.1}s] {detail}",
            t.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
