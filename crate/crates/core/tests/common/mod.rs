#![allow(dead_code)]

use fibercount::laurent::{substitute, LaurentPolynomial, Substitution};
use fibercount::{LatticePoint, LatticePolytope, RationalPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

pub fn points(rows: &[Vec<i64>]) -> Vec<LatticePoint> {
    rows.iter().map(|r| LatticePoint::from_i64(r)).collect()
}

/// 1 to 10 points in `[-r, r]^d`.
pub fn point_cloud(d: usize, r: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-r..=r, d), 1..10)
}

/// Point clouds that also contain `±e_i`, so the origin is interior.
pub fn cloud_around_origin(d: usize, r: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    point_cloud(d, r).prop_map(move |mut pts| {
        for i in 0..d {
            for s in [-1, 1] {
                let mut e = vec![0; d];
                e[i] = s;
                pts.push(e);
            }
        }
        pts
    })
}

fn sorted_vertices(p: &LatticePolytope) -> Vec<RationalPoint> {
    let mut v = p.vertices().to_vec();
    v.sort();
    v
}

pub fn double_dual_is_identity(rows: &[Vec<i64>]) -> Outcome {
    let p = LatticePolytope::hull(&points(rows)).unwrap();
    let dd = p.polar_dual().unwrap().polar_dual().unwrap();
    prop_assert_eq!(sorted_vertices(&dd), sorted_vertices(&p));
    prop_assert_eq!(dd.facets(), p.facets());
    Ok(())
}

pub fn reflexive_iff_integral_dual(rows: &[Vec<i64>]) -> Outcome {
    let p = LatticePolytope::hull(&points(rows)).unwrap();
    let dual = p.polar_dual().unwrap();
    prop_assert_eq!(p.is_reflexive().unwrap(), dual.is_lattice());
    if p.is_reflexive().unwrap() {
        prop_assert!(dual.is_reflexive().unwrap());
        let (interior, _) = p.split_lattice_points().unwrap();
        prop_assert_eq!(interior, vec![LatticePoint::zero(p.dim())]);
    }
    Ok(())
}

/// Lattice points by scanning the bounding box with the membership test.
pub fn box_scan(p: &LatticePolytope) -> Vec<LatticePoint> {
    let d = p.dim();
    let verts = p.lattice_vertices().unwrap();
    let lo: Vec<i64> = (0..d).map(|i| verts.iter().map(|v| v.to_i64().unwrap()[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|i| verts.iter().map(|v| v.to_i64().unwrap()[i]).max().unwrap()).collect();
    let size: i64 = lo.iter().zip(&hi).map(|(l, h)| h - l + 1).product();
    assert!(size <= 1_000_000);
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let x = LatticePoint::from_i64(&cur);
        if p.contains(&x.to_rational()) {
            out.push(x);
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

pub fn enumeration_matches_box_scan(rows: &[Vec<i64>]) -> Outcome {
    let p = LatticePolytope::hull(&points(rows)).unwrap();
    let mut scanned = box_scan(&p);
    scanned.sort();
    prop_assert_eq!(p.lattice_points(), scanned);
    Ok(())
}

pub fn count_is_translation_invariant(rows: &[Vec<i64>], shift: &[i64]) -> Outcome {
    let p = LatticePolytope::hull(&points(rows)).unwrap();
    let v = LatticePoint::from_i64(shift);
    let q = p.translate(&v).unwrap();
    let expected: Vec<LatticePoint> = p.lattice_points().iter().map(|x| x.add(&v)).collect();
    prop_assert_eq!(q.lattice_points(), expected);
    let moved: Vec<LatticePoint> = points(rows).iter().map(|x| x.add(&v)).collect();
    prop_assert_eq!(LatticePolytope::hull(&moved).unwrap().lattice_points().len(), p.lattice_points().len());
    Ok(())
}

pub fn xyz() -> Vec<String> {
    ["x", "y", "z"].map(String::from).to_vec()
}

/// Random Laurent polynomials in `x, y, z` with exponents in `[-r, r]` and small
/// rational coefficients.
pub fn laurent(r: i64, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    let term = (prop::collection::vec(-r..=r, 3), -9i64..=9, 1i64..=4);
    prop::collection::vec(term, 0..max_terms).prop_map(|terms| {
        let vars = xyz();
        let mut p = LaurentPolynomial::zero(&vars);
        for (e, n, d) in terms {
            let c = BigRational::new(BigInt::from(n), BigInt::from(d));
            p = &p + &LaurentPolynomial::monomial(&vars, e, c);
        }
        p
    })
}

pub fn format_parse_round_trip(p: &LaurentPolynomial) -> Outcome {
    let text = p.to_string();
    let back = LaurentPolynomial::parse(&text, p.vars()).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(&back, p);
    Ok(())
}

/// Composing and then evaluating agrees with evaluating the images first.
pub fn substitution_agrees_pointwise(p: &LaurentPolynomial, images: &[(LaurentPolynomial, LaurentPolynomial)], pts: &[Vec<(i64, i64)>]) -> Outcome {
    let vars = xyz();
    let parts: Vec<(String, fibercount::LaurentFraction)> = vars
        .iter()
        .zip(images)
        .filter_map(|(v, (n, d))| {
            fibercount::LaurentFraction::new(n.clone(), d.clone()).ok().map(|f| (v.clone(), f))
        })
        .collect();
    let Ok(sigma) = Substitution::new(&vars, &vars, parts) else {
        return Ok(());
    };
    // A zero image raised to a negative power has no composite.
    let Ok(composed) = substitute(p, &sigma, &[]) else {
        return Ok(());
    };
    for pt in pts {
        let x: Vec<BigRational> = pt
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        let inner: Option<Vec<BigRational>> = vars
            .iter()
            .map(|v| sigma.image(v).unwrap().evaluate(&x))
            .collect();
        let Some(inner) = inner else { continue };
        let Some(direct) = p.evaluate(&inner) else { continue };
        let Some(via) = composed.evaluate(&x) else { continue };
        prop_assert_eq!(direct, via);
    }
    Ok(())
}

pub fn rational_points(count: usize) -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    prop::collection::vec(prop::collection::vec((-7i64..=7, 1i64..=5), 3), count)
}

/// Small polynomials for substitution images: few terms, low degree.
pub fn small_laurent() -> impl Strategy<Value = LaurentPolynomial> {
    let term = (prop::collection::vec(-1i64..=2, 3), -3i64..=3);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        let vars = xyz();
        let mut p = LaurentPolynomial::zero(&vars);
        for (e, n) in terms {
            p = &p + &LaurentPolynomial::monomial(&vars, e, BigRational::from_integer(n.into()));
        }
        p
    })
}
