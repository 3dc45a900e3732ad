//! Exit criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p hosoya --test acceptance -- --nocapture` to see them.
//! All comparisons are exact.

use std::time::{Duration, Instant};

use hosoya::families::{self, FamilySpec};
use hosoya::graphs::{
    check_distance_regular, distance_distribution, hosoya_oracle, hyper_wiener_oracle,
    wiener_oracle, DrgError, Graph, GraphError, Rejection,
};
use hosoya::intersection::{IntersectionArray, IntersectionError, SrgParams, SrgViolation, Violation};
use hosoya::polynomial::{binomial_shifted, IntPolynomial};
use hosoya::report::{verify_family, verify_graph, Source, Verification};
use hosoya::DEFAULT_MAX_VERTICES;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn hypercube_identity() -> Outcome {
    let start = Instant::now();
    for k in 2..=10u64 {
        let closed = IntersectionArray::hypercube(k)
            .hosoya_closed_form()
            .map_err(|e| e.to_string())?;
        let expanded = binomial_shifted(k as u32, &(BigInt::from(1) << (k - 1)));
        ensure(closed == expanded, || format!("Q_{k}: {closed} != {expanded}"))?;
        let g = families::hypercube(k).map_err(|e| e.to_string())?;
        let oracle = hosoya_oracle(&g).map_err(|e| e.to_string())?;
        ensure(closed == oracle, || format!("Q_{k}: closed {closed} != oracle {oracle}"))?;
    }
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("k = 2..10 exact, {took:.2?}"))
}

fn family_corpus() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    let mut push = |s: String| specs.push(s.parse::<FamilySpec>().unwrap());
    (3..=8).for_each(|n| push(format!("complete:{n}")));
    (3..=12).for_each(|n| push(format!("cycle:{n}")));
    (2..=5).for_each(|m| push(format!("bipartite:{m}")));
    (2..=10).for_each(|k| push(format!("hypercube:{k}")));
    push("petersen".into());
    (5..=8).for_each(|n| push(format!("kneser2:{n}")));
    for (d, q) in [(2, 3), (3, 3), (2, 4)] {
        push(format!("hamming:{d},{q}"));
    }
    for (n, k) in [(4, 2), (5, 2), (6, 3)] {
        push(format!("johnson:{n},{k}"));
    }
    (3..=4).for_each(|k| push(format!("odd:{k}")));
    specs
}

fn family_corpus_matches() -> Outcome {
    let start = Instant::now();
    let corpus = family_corpus();
    for spec in &corpus {
        let r = verify_family(spec, DEFAULT_MAX_VERTICES).map_err(|e| format!("{spec}: {e}"))?;
        ensure(r.verification == Verification::VerifiedMatch, || {
            format!("{spec}: {:?} {:?}", r.verification, r.witness)
        })?;
    }
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!("{} instances verified_match, {took:.2?}", corpus.len()))
}

/// Random arrays with `D <= 6`, entries `<= 9` and integral spheres.
fn random_valid_arrays(count: usize, seed: u64) -> Vec<IntersectionArray> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.random_range(1..=6);
        let b: Vec<i64> = (0..d).map(|_| rng.random_range(1..=9)).collect();
        let mut c = vec![1i64];
        let mut k = b[0];
        for &bi in &b[1..] {
            let options: Vec<i64> = (1..=9).filter(|x| (k * bi) % x == 0).collect();
            let ci = options[rng.random_range(0..options.len())];
            c.push(ci);
            k = k * bi / ci;
        }
        if let Ok(v) = IntersectionArray::validate(&b, &c) {
            out.push(v.array);
        }
    }
    out
}

fn wiener_is_derivative() -> Outcome {
    let mut arrays = Vec::new();
    for spec in family_corpus() {
        let g = spec.build(DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
        arrays.push(check_distance_regular(&g).map_err(|e| format!("{spec}: {e}"))?);
    }
    let extracted = arrays.len();
    let random = random_valid_arrays(100, 0x5eed);
    ensure(random.iter().any(|a| a.diameter() == 6), || "no D = 6 array drawn".into())?;
    arrays.extend(random);
    for a in &arrays {
        let w = a.wiener_closed_form().map_err(|e| format!("{a}: {e}"))?;
        let h = a.hosoya_closed_form().map_err(|e| format!("{a}: {e}"))?;
        let via_derivative = h.derivative().value_at_one();
        ensure(w == via_derivative, || format!("{a}: W = {w}, H'(1) = {via_derivative}"))?;
    }
    Ok(format!("{extracted} extracted + 100 random arrays"))
}

fn srg_forms() -> Outcome {
    let cases = [
        (SrgParams::new(10, 3, 0, 1), "petersen"),
        (SrgParams::new(5, 2, 0, 1), "cycle:5"),
        (SrgParams::new(6, 3, 0, 3), "bipartite:3"),
        (SrgParams::new(15, 6, 1, 3), "kneser2:6"),
    ];
    for (p, spec) in cases {
        let ratio = p.hosoya().map_err(|e| e.to_string())?;
        let simplified = p.hosoya_simplified().map_err(|e| e.to_string())?;
        let general = p
            .to_array()
            .and_then(|a| a.hosoya_closed_form())
            .map_err(|e| e.to_string())?;
        let g = spec.parse::<FamilySpec>().unwrap().build(100).map_err(|e| e.to_string())?;
        let oracle = hosoya_oracle(&g).map_err(|e| e.to_string())?;
        ensure(
            ratio == simplified && simplified == general && general == oracle,
            || format!("{p}: {ratio} / {simplified} / {general} / oracle {oracle}"),
        )?;
    }
    Ok("4 parameter sets, all four routes equal".into())
}

fn spot_values() -> Outcome {
    let cases = [
        ("petersen", IntersectionArray::validate(&[3, 2], &[1, 1]), 75, 105),
        ("hypercube:3", IntersectionArray::validate(&[3, 2, 1], &[1, 2, 3]), 48, 72),
    ];
    for (spec, array, w, ww) in cases {
        let array = array.map_err(|e| e.to_string())?.array;
        let g = spec.parse::<FamilySpec>().unwrap().build(100).map_err(|e| e.to_string())?;
        let values = [
            ("closed W", array.wiener_closed_form().map_err(|e| e.to_string())?, w),
            ("oracle W", wiener_oracle(&g).map_err(|e| e.to_string())?, w),
            ("closed WW", array.hyper_wiener_closed_form().map_err(|e| e.to_string())?, ww),
            ("oracle WW", hyper_wiener_oracle(&g).map_err(|e| e.to_string())?, ww),
        ];
        for (what, got, want) in values {
            ensure(got == BigInt::from(want), || format!("{spec} {what}: {got} != {want}"))?;
        }
    }
    Ok("Petersen W=75 WW=105, Q_3 W=48 WW=72".into())
}

fn negative_suite() -> Outcome {
    let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    ensure(
        matches!(check_distance_regular(&p4), Err(DrgError::Rejected(Rejection::NotRegular { .. }))),
        || "P_4 not rejected as NotRegular".into(),
    )?;
    let report = verify_graph(Source::File { path: "P_4".into() }, &p4).map_err(|e| e.to_string())?;
    ensure(
        report.verification == Verification::OracleOnly
            && report.hosoya == IntPolynomial::from_coeffs([0, 3, 2, 1]),
        || format!("P_4 report {:?} {}", report.verification, report.hosoya),
    )?;

    let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    ensure(
        distance_distribution(&split) == Err(GraphError::Disconnected)
            && check_distance_regular(&split) == Err(DrgError::Graph(GraphError::Disconnected))
            && verify_graph(Source::File { path: "2K_2".into() }, &split).is_err(),
        || "disconnected graph accepted".into(),
    )?;

    let first_c = IntersectionArray::validate(&[3, 2], &[2, 1]);
    ensure(
        matches!(&first_c, Err(IntersectionError::HardInvalid(v)) if v.contains(&Violation::FirstCNotOne { found: 2 })),
        || format!("{{3,2;2,1}}: {first_c:?}"),
    )?;

    let relation = SrgParams::new(10, 3, 0, 2);
    ensure(
        relation.feasibility() == Err(SrgViolation::RelationViolated { lhs: 12, rhs: 6 })
            && relation.hosoya_simplified()
                == Err(IntersectionError::Srg(SrgViolation::RelationViolated { lhs: 12, rhs: 6 })),
        || "(10,3,0,2) passed the relation check".into(),
    )?;

    let sphere = IntersectionArray::validate(&[3, 2], &[1, 4]);
    ensure(
        sphere == Err(IntersectionError::HardInvalid(vec![Violation::NonIntegralSphere { index: 2 }])),
        || format!("{{3,2;1,4}}: {sphere:?}"),
    )?;
    Ok("P_4, 2K_2, {3,2;2,1}, SRG(10,3,0,2), {3,2;1,4} all rejected".into())
}

fn desk_scale() -> Outcome {
    let spec: FamilySpec = "hypercube:13".parse().unwrap();
    let start = Instant::now();
    let r = verify_family(&spec, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
    let took = within(Duration::from_secs(60), start)?;
    ensure(r.verification == Verification::VerifiedMatch, || format!("{:?}", r.witness))?;
    ensure(r.n == BigInt::from(8192), || format!("n = {}", r.n))?;
    ensure(r.hosoya.coeff(1) == BigInt::from(53248), || "edge count".into())?;
    Ok(format!("8192 vertices, 53248 edges, verified_match in {took:.2?}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 hypercube identity", hypercube_identity),
        ("2 closed form vs oracle on the family corpus", family_corpus_matches),
        ("3 Wiener index is H'(1)", wiener_is_derivative),
        ("4 strongly regular forms", srg_forms),
        ("5 Wiener / hyper-Wiener spot values", spot_values),
        ("6 negative suite", negative_suite),
        ("7 desk-scale verify of hypercube:13", desk_scale),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
