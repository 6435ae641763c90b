//! Double-description convex hull over the integers.
//!
//! The facet inequalities `a·x + b >= 0` of `conv(points)` are the extreme rays of
//! the homogeneous cone `{(a, b) : a·q + b >= 0 for every input point q}`. The cone
//! is built incrementally, one point constraint at a time, with the combinatorial
//! adjacency test deciding which ray pairs spawn new rays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::linalg::{self, make_primitive};

/// Facets and vertices of a full-dimensional integer point set.
#[derive(Debug, Clone)]
pub(crate) struct RawHull {
    /// `(a, b)` meaning `a·x + b >= 0`, with `a` primitive.
    pub facets: Vec<(Vec<BigInt>, BigInt)>,
    /// Indices into the input of the vertex points (first occurrence on duplicates).
    pub vertices: Vec<usize>,
    /// For every facet, the input indices of the points lying on it.
    pub incidence: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn contains(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

/// Computes the hull of integer points whose affine hull is all of `R^dim`.
///
/// Panics if the points are not full-dimensional; callers check the affine rank first.
pub(crate) fn hull_full_dim(points: &[Vec<BigInt>]) -> RawHull {
    let dim = points[0].len();
    let d = dim + 1;

    // Deduplicate, keeping the first index of each distinct point.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]).then(i.cmp(&j)));
    order.dedup_by(|a, b| points[*a] == points[*b]);

    // Far-from-centroid points first: they are likely vertices and keep the
    // intermediate hulls small.
    let m = order.len();
    let mut centroid = vec![BigInt::zero(); dim];
    for &i in &order {
        for (c, x) in centroid.iter_mut().zip(&points[i]) {
            *c += x;
        }
    }
    let count = BigInt::from(m);
    let mut keyed: Vec<(BigInt, usize)> = order
        .iter()
        .map(|&i| {
            let dist: BigInt = points[i]
                .iter()
                .zip(&centroid)
                .map(|(x, c)| {
                    let t = x * &count - c;
                    &t * &t
                })
                .sum();
            (dist, i)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then(points[a.1].cmp(&points[b.1])));
    let mut seq: Vec<usize> = keyed.into_iter().map(|(_, i)| i).collect();

    let homog = |i: usize| -> Vec<BigInt> {
        let mut r = points[i].clone();
        r.push(BigInt::from(1));
        r
    };

    // Greedy choice of d affinely independent points, moved to the front.
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut chosen = Vec::new();
    for (pos, &i) in seq.iter().enumerate() {
        let mut cand = basis.clone();
        cand.push(linalg::to_rational(&homog(i)));
        if linalg::rank(&cand) == cand.len() {
            basis = cand;
            chosen.push(pos);
            if chosen.len() == d {
                break;
            }
        }
    }
    assert_eq!(chosen.len(), d, "hull_full_dim called on a degenerate point set");
    let mut front: Vec<usize> = chosen.iter().map(|&p| seq[p]).collect();
    let rest: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(p, _)| !chosen.contains(p))
        .map(|(_, &i)| i)
        .collect();
    front.extend(rest);
    seq = front;

    // Initial rays: columns of the inverse of the first d constraint rows.
    let mut aug: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row = linalg::to_rational(&homog(seq[r]));
            row.extend((0..d).map(|c| {
                BigRational::from_integer(BigInt::from((r == c) as i32))
            }));
            row
        })
        .collect();
    aug = linalg::rref(aug).0;
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<BigRational> = (0..d).map(|r| aug[r][d + j].clone()).collect();
            let l = linalg::common_denominator(col.iter());
            let mut coords = linalg::scale_to_int(&col, &l);
            make_primitive(&mut coords);
            let mut zeros = Bits::new(m);
            for r in (0..d).filter(|&r| r != j) {
                zeros.set(r);
            }
            Ray { coords, zeros }
        })
        .collect();

    for t in d..m {
        let q = homog(seq[t]);
        let vals: Vec<BigInt> = rays.iter().map(|r| linalg::dot(&r.coords, &q)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        for (r, v) in rays.iter_mut().zip(&vals) {
            if v.is_zero() {
                r.zeros.set(t);
            }
        }
        if neg.is_empty() {
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if (common.count() as usize) + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == n || !r.zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let mut coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(a, b)| &vals[p] * a - &vals[n] * b)
                    .collect();
                make_primitive(&mut coords);
                let mut zeros = common;
                zeros.set(t);
                fresh.push(Ray { coords, zeros });
            }
        }
        let mut keep: Vec<Ray> = rays
            .into_iter()
            .zip(&vals)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r)
            .collect();
        keep.extend(fresh);
        rays = keep;
    }

    let mut facets = Vec::with_capacity(rays.len());
    let mut incidence = Vec::with_capacity(rays.len());
    for ray in &rays {
        let mut a = ray.coords[..dim].to_vec();
        let g = make_primitive(&mut a);
        let b = &ray.coords[dim] / &g;
        facets.push((a, b));
        let mut on: Vec<usize> = (0..m).filter(|&t| ray.zeros.get(t)).map(|t| seq[t]).collect();
        on.sort_unstable();
        incidence.push(on);
    }

    let mut vertices: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| {
            let normals: Vec<Vec<BigRational>> = facets
                .iter()
                .zip(&incidence)
                .filter(|(_, on)| on.binary_search(&i).is_ok())
                .map(|((a, _), _)| linalg::to_rational(a))
                .collect();
            normals.len() >= dim && linalg::rank(&normals) == dim
        })
        .collect();
    vertices.sort_unstable();

    RawHull {
        facets,
        vertices,
        incidence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn unit_square() {
        let h = hull_full_dim(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(h.facets.len(), 4);
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn interior_and_duplicate_points_are_dropped() {
        let h = hull_full_dim(&pts(&[&[1, 0], &[0, 1], &[-1, -1], &[0, 0], &[1, 0]]));
        assert_eq!(h.facets.len(), 3);
        assert_eq!(h.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn cube_with_face_points() {
        let mut rows = Vec::new();
        for x in -1..=1 {
            for y in -1..=1 {
                for z in -1..=1 {
                    rows.push(vec![BigInt::from(x), BigInt::from(y), BigInt::from(z)]);
                }
            }
        }
        let h = hull_full_dim(&rows);
        assert_eq!(h.facets.len(), 6);
        assert_eq!(h.vertices.len(), 8);
        assert!(h.incidence.iter().all(|on| on.len() == 9));
    }
}
