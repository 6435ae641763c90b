use std::path::PathBuf;

use fibercount::ci::{self, CiSpec};
use fibercount::laurent::{pencil_identity_check, LaurentPolynomial, Substitution};
use fibercount::ledger::{self, BudgetResult};
use fibercount::polytope::polytope_from_json;
use fibercount::toric::{self, CrepantWitness, ToricFanoInput};
use fibercount::{pencil, Status};
use num_bigint::BigInt;

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn corpus() -> Vec<LaurentPolynomial> {
    fixture("polynomials.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (vars, text) = l.split_once('|').unwrap();
            let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
            LaurentPolynomial::parse(text, &vars).unwrap()
        })
        .collect()
}

#[test]
fn corpus_round_trips_and_identity() {
    let polys = corpus();
    assert_eq!(polys.len(), 10);
    for p in &polys {
        assert_eq!(&LaurentPolynomial::parse(&p.to_string(), p.vars()).unwrap(), p);
        let one = LaurentPolynomial::one(p.vars());
        assert!(pencil_identity_check(p, &Substitution::identity(p.vars()), p, &one).unwrap());
    }
}

#[test]
fn monomial_shift_translates_newton_polytope() {
    for p in corpus() {
        let e: Vec<i64> = (0..p.dim()).map(|i| i as i64 - 1).collect();
        let shifted = p.shift(&e);
        let moved = p
            .newton_polytope()
            .unwrap()
            .translate(&fibercount::LatticePoint::from_i64(&e))
            .unwrap();
        assert_eq!(shifted.newton_polytope().unwrap(), moved);
    }
}

#[test]
fn spot_values() {
    for (s, r, h0) in [("4;4", 4, 5), ("4;2", 29, 30), ("5;2,2", 18, 19), ("4;3", 14, 15)] {
        let spec: CiSpec = s.parse().unwrap();
        assert_eq!(ci::r_boundary(&spec).unwrap(), BigInt::from(r), "{s}");
        assert_eq!(ci::h0_anticanonical(&spec), BigInt::from(h0), "{s}");
        assert_eq!(ci::h0_monomial_oracle(&spec), BigInt::from(h0), "{s}");
        let threefold: BigInt = spec.anticanonical_degree() / 2 + 2;
        assert_eq!(threefold, BigInt::from(h0 - 1), "{s}");
    }
}

#[test]
fn givental_dimension_and_sweep_fixture() {
    let listed: Vec<String> = fixture("sweep_n5.txt")
        .lines()
        .filter(|l| l.starts_with('('))
        .map(String::from)
        .collect();
    let specs = ci::sweep_specs(5);
    let got: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
    assert_eq!(got, listed);
    for s in ci::sweep_specs(8) {
        assert_eq!(fibercount::laurent::givental_ci(&s).dim(), s.ambient() - s.k());
    }
}

#[test]
fn sweep_is_order_stable() {
    let a: Vec<String> = ci::sweep(5).iter().map(|r| r.to_json().to_string()).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b: Vec<String> = pool.install(|| ci::sweep(5).iter().map(|r| r.to_json().to_string()).collect());
    assert_eq!(a, b);
    assert_eq!(a.len(), 12);
}

#[test]
fn toric_fixture_counts() {
    let expected = [
        ("P2", 9),
        ("P1xP1", 8),
        ("Bl1P2", 8),
        ("Bl2P2", 7),
        ("Bl3P2", 6),
        ("P3", 34),
        ("P1xP2", 29),
        ("P1xP1xP1", 26),
    ];
    let fixtures = toric::toric_fixtures();
    assert_eq!(fixtures.len(), expected.len());
    for (t, (name, c)) in fixtures.iter().zip(expected) {
        assert_eq!(t.name(), name);
        let rep = toric::verify_toric(t);
        assert_eq!(rep.status(), Status::Pass, "{rep}");
        assert_eq!(rep.value("components"), Some(c), "{name}");
        assert!(t.fan_polytope().is_reflexive().unwrap());
        assert!(toric::crepant_witness(t).unwrap().is_found());
    }
}

#[test]
fn p3_witness_tiles_the_boundary() {
    let t = toric::toric_fixtures().into_iter().find(|t| t.name() == "P3").unwrap();
    let CrepantWitness::WitnessFound(simplices) = toric::crepant_witness(&t).unwrap() else {
        panic!("no witness");
    };
    assert_eq!(simplices.len(), 64);
    let vol: BigInt = simplices.iter().map(|s| s.normalized_volume()).sum();
    let nabla = t.dual().unwrap();
    assert_eq!(vol, fibercount::polytope::boundary_normalized_volume(&nabla).unwrap());
}

#[test]
fn polytope_files() {
    let p2 = polytope_from_json(&fixture("polytopes/p2_fan.json"), true).unwrap();
    let dual = p2.polar_dual().unwrap();
    assert_eq!(dual.to_string(), "conv{(-1,-1),(-1,2),(2,-1)}");
    let t = ToricFanoInput::from_polytope("p1xp2", polytope_from_json(&fixture("polytopes/p1xp2_fan.json"), true).unwrap()).unwrap();
    assert_eq!(toric::h0_toric(&t).unwrap(), BigInt::from(30));
    let bad = ToricFanoInput::from_polytope("p112", polytope_from_json(&fixture("polytopes/p112_fan.json"), true).unwrap()).unwrap();
    assert_eq!(toric::verify_toric(&bad).status(), Status::Fail);
    let nr = polytope_from_json(&fixture("polytopes/non_reflexive.json"), true).unwrap();
    assert!(!nr.is_reflexive().unwrap());
}

#[test]
fn ledger_cases() {
    let want = [("1.1", 3), ("1.11", 6), ("2.1", 4), ("2.2", 5), ("2.3", 6), ("9.1", 8), ("10.1", 5)];
    let cases = ledger::builtin_cases();
    assert_eq!(cases.len(), 7);
    for (c, (family, n)) in cases.iter().zip(want) {
        assert_eq!(c.family, family);
        assert_eq!(ledger::components_at_infinity_ledger(c).unwrap(), n);
        assert_eq!(ledger::expected_components(c.anticanonical_cube).unwrap(), n);
        let verified = matches!(ledger::intersection_budget(c), BudgetResult::Verified(_));
        assert_eq!(verified, ["1.11", "2.2", "2.3", "9.1"].contains(&family), "{family}");
        assert!(ledger::verify_ledger(c).pass());
    }
}

#[test]
fn expected_components_steps_by_one() {
    for k in 2..50 {
        assert_eq!(
            ledger::expected_components(2 * k).unwrap() - ledger::expected_components(2 * k - 2).unwrap(),
            1
        );
    }
}

#[test]
fn sextic_pencil_matches_fixture() {
    let data: serde_json::Value = serde_json::from_str(&fixture("sextic_pencil.json")).unwrap();
    let r = pencil::check().unwrap();
    let vars = pencil::target_vars();
    let derived = LaurentPolynomial::parse(data["derived_factor"].as_str().unwrap(), &vars).unwrap();
    let printed = LaurentPolynomial::parse(data["printed_factor"].as_str().unwrap(), &vars).unwrap();
    assert_eq!(r.derived_factor, derived);
    assert_eq!(r.printed_factor, printed);
    assert!(r.derived_matches);
    assert!(!r.printed_matches);
    assert_eq!(r.h0_minus_one, data["components"].as_i64().unwrap());
}
