//! Lattice-point enumeration by prefix fixing.
//!
//! Coordinate `j` is bounded using the facets of the projection of the polytope onto
//! the first `j + 1` coordinates, so every admissible prefix extends to a real point
//! of the polytope and no bounding box is ever scanned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{linalg, LatticePoint, LatticePolytope, RationalPoint};

/// `a·x >= c` over the first `a.len()` coordinates.
struct IntIneq {
    a: Vec<BigInt>,
    c: BigInt,
}

fn integer_rows(p: &LatticePolytope) -> Vec<IntIneq> {
    p.facets()
        .iter()
        .map(|h| {
            let q = h.offset.denom().clone();
            IntIneq {
                a: h.normal.0.iter().map(|x| x * &q).collect(),
                c: -h.offset.numer().clone(),
            }
        })
        .collect()
}

pub(super) fn lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    if p.is_full_dim() {
        return full_dim_points(p);
    }
    let coords: Vec<Vec<BigRational>> = p.vertices().iter().map(|v| v.0.clone()).collect();
    let chart = linalg::AffineChart::new(&coords);
    if chart.dim() == 0 {
        return p.vertices()[0].to_lattice().into_iter().collect();
    }
    let projected: Vec<RationalPoint> = coords
        .iter()
        .map(|v| RationalPoint(chart.project(v)))
        .collect();
    let inner = LatticePolytope::hull_rational(&projected).expect("nonempty vertex set");
    let mut out: Vec<LatticePoint> = full_dim_points(&inner)
        .into_iter()
        .filter_map(|y| RationalPoint(chart.lift(&linalg::to_rational(&y.0))).to_lattice())
        .collect();
    out.sort();
    out
}

fn full_dim_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    let n = p.dim();
    let mut levels: Vec<Vec<IntIneq>> = Vec::with_capacity(n);
    for j in 1..n {
        let proj: Vec<RationalPoint> = p
            .vertices()
            .iter()
            .map(|v| RationalPoint(v.0[..j].to_vec()))
            .collect();
        let q = LatticePolytope::hull_rational(&proj).expect("nonempty vertex set");
        debug_assert!(q.is_full_dim());
        levels.push(integer_rows(&q));
    }
    levels.push(integer_rows(p));

    let mut out = Vec::new();
    let mut prefix: Vec<BigInt> = Vec::with_capacity(n);
    // partial[level][row] = sum_{i < prefix.len()} a_i x_i, maintained incrementally.
    let mut partial: Vec<Vec<BigInt>> = levels
        .iter()
        .map(|rows| vec![BigInt::zero(); rows.len()])
        .collect();
    recurse(&levels, &mut prefix, &mut partial, &mut out);
    out
}

fn bounds(rows: &[IntIneq], partial: &[BigInt], j: usize) -> Option<(BigInt, BigInt)> {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for (row, s) in rows.iter().zip(partial) {
        let rhs = &row.c - s;
        let aj = &row.a[j];
        if aj.is_positive() {
            let b = rhs.div_ceil(aj);
            if lo.as_ref().is_none_or(|l| b > *l) {
                lo = Some(b);
            }
        } else if aj.is_negative() {
            let b = rhs.div_floor(aj);
            if hi.as_ref().is_none_or(|h| b < *h) {
                hi = Some(b);
            }
        } else if rhs.is_positive() {
            return None;
        }
    }
    Some((lo.expect("bounded polytope"), hi.expect("bounded polytope")))
}

fn recurse(
    levels: &[Vec<IntIneq>],
    prefix: &mut Vec<BigInt>,
    partial: &mut [Vec<BigInt>],
    out: &mut Vec<LatticePoint>,
) {
    let j = prefix.len();
    if j == levels.len() {
        out.push(LatticePoint(prefix.clone()));
        return;
    }
    let Some((lo, hi)) = bounds(&levels[j], &partial[j], j) else {
        return;
    };
    let mut x = lo;
    while x <= hi {
        for (rows, sums) in levels[j + 1..].iter().zip(partial[j + 1..].iter_mut()) {
            for (row, s) in rows.iter().zip(sums.iter_mut()) {
                *s += &row.a[j] * &x;
            }
        }
        prefix.push(x.clone());
        recurse(levels, prefix, partial, out);
        prefix.pop();
        for (rows, sums) in levels[j + 1..].iter().zip(partial[j + 1..].iter_mut()) {
            for (row, s) in rows.iter().zip(sums.iter_mut()) {
                *s -= &row.a[j] * &x;
            }
        }
        x += 1;
    }
}
