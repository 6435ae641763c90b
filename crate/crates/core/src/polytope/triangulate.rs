//! Boundary triangulations and lattice volumes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hull::hull_full_dim;
use super::{abs_det, linalg, LatticePoint, LatticePolytope};
use crate::error::{Error, Result};

/// A lattice simplex on the boundary of a polytope around the origin.
///
/// The `n` vertices span an `(n-1)`-dimensional face; together with the origin they
/// span a cone whose determinant measures its lattice volume.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub vertices: Vec<LatticePoint>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<LatticePoint>) -> Self {
        vertices.sort();
        Simplex { vertices }
    }

    /// `|det|` of the vertex matrix: the normalized volume of the cone from the origin.
    pub fn normalized_volume(&self) -> BigInt {
        abs_det(&self.vertices)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        if self.vertices.iter().any(|v| v.dim() != self.vertices.len()) {
            return Err(Error::DimensionMismatch {
                expected: self.vertices.len(),
                got: self.vertices.first().map_or(0, LatticePoint::dim),
            });
        }
        let d = self.normalized_volume();
        if d.is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(d.is_one())
    }
}

/// Integer points expressed in a chart of their affine hull.
struct Config {
    dim: usize,
    coords: Vec<Vec<BigInt>>,
}

impl Config {
    fn new(points: &[LatticePoint]) -> Self {
        let rat: Vec<Vec<BigRational>> = points.iter().map(|p| p.to_rational().0).collect();
        let chart = linalg::AffineChart::new(&rat);
        // Pivot coordinates of integer points are integers.
        let coords = points
            .iter()
            .map(|p| chart.pivots().iter().map(|&c| p.0[c].clone()).collect())
            .collect();
        Config {
            dim: chart.dim(),
            coords,
        }
    }

    fn sub(&self, idx: &[usize]) -> Vec<Vec<BigInt>> {
        idx.iter().map(|&i| self.coords[i].clone()).collect()
    }

    /// Facets of `conv(idx)` as index lists of the points of `idx` lying on them.
    fn facets(&self, idx: &[usize]) -> Vec<Vec<usize>> {
        let raw = hull_full_dim(&self.sub(idx));
        raw.incidence
            .iter()
            .map(|on| on.iter().map(|&k| idx[k]).collect())
            .collect()
    }

    /// The members of `candidates` lying in `conv(idx)`.
    fn inside(&self, idx: &[usize], candidates: &[usize]) -> Vec<usize> {
        let raw = hull_full_dim(&self.sub(idx));
        candidates
            .iter()
            .copied()
            .filter(|&c| {
                raw.facets
                    .iter()
                    .all(|(a, b)| !(linalg::dot(a, &self.coords[c]) + b).is_negative())
            })
            .collect()
    }
}

/// Pulling refinement of `conv(points)` by every point, in the given order.
///
/// Returns the maximal simplices as index lists into `points`.
fn pulling(points: &[LatticePoint], order: &[usize]) -> Vec<Vec<usize>> {
    let cfg = Config::new(points);
    let r = cfg.dim;
    let mut cells: Vec<Vec<usize>> = vec![(0..points.len()).collect()];
    if r == 0 {
        return cells;
    }
    for &q in order {
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.len() == r + 1 || !cell.contains(&q) {
                next.push(cell);
                continue;
            }
            for facet in cfg.facets(&cell) {
                if facet.contains(&q) {
                    continue;
                }
                let mut apexed = facet.clone();
                apexed.push(q);
                let mut piece = cfg.inside(&apexed, &cell);
                piece.sort_unstable();
                next.push(piece);
            }
        }
        cells = next;
    }
    debug_assert!(cells.iter().all(|c| c.len() == r + 1));
    cells
}

/// Pulling triangulation of the boundary, facet by facet, using every boundary lattice
/// point and pulling in lexicographic order.
pub(super) fn pulling_boundary(p: &LatticePolytope) -> Vec<Simplex> {
    let (_, boundary) = p.split_lattice_points().expect("full-dimensional");
    let mut out = Vec::new();
    for h in p.facets() {
        // `boundary` is lexicographically sorted, so the facet subset is too.
        let on: Vec<LatticePoint> = boundary
            .iter()
            .filter(|x| h.slack_lattice(x).is_zero())
            .cloned()
            .collect();
        let order: Vec<usize> = (0..on.len()).collect();
        for cell in pulling(&on, &order) {
            out.push(Simplex::new(cell.iter().map(|&i| on[i].clone()).collect()));
        }
    }
    out.sort();
    out
}

/// Normalized volume of the cone from the origin over `conv(apex ∪ face)`, computed by
/// coning each face from its first vertex over the subfaces that avoid it.
fn cone_volume(apex: &mut Vec<LatticePoint>, face: &[LatticePoint]) -> BigInt {
    if face.len() == 1 {
        apex.push(face[0].clone());
        let v = abs_det(apex);
        apex.pop();
        return v;
    }
    let cfg = Config::new(face);
    let all: Vec<usize> = (0..face.len()).collect();
    let raw = hull_full_dim(&cfg.sub(&all));
    let v0 = *raw.vertices.iter().min_by(|&&a, &&b| face[a].cmp(&face[b])).unwrap();
    let vertex_set: Vec<usize> = raw.vertices.clone();
    let mut total = BigInt::zero();
    for on in &raw.incidence {
        if on.contains(&v0) {
            continue;
        }
        let sub: Vec<LatticePoint> = on
            .iter()
            .filter(|i| vertex_set.contains(i))
            .map(|&i| face[i].clone())
            .collect();
        apex.push(face[v0].clone());
        total += cone_volume(apex, &sub);
        apex.pop();
    }
    total
}

/// Normalized volume of the boundary of a polytope with the origin in its interior:
/// the sum over facets of the lattice volume of the cone from the origin.
///
/// Uses only vertices of each facet, so it is independent of any triangulation that
/// uses boundary lattice points.
pub fn boundary_normalized_volume(p: &LatticePolytope) -> Result<BigInt> {
    if !p.is_full_dim() {
        return Err(Error::NotFullDimensional);
    }
    if !p.origin_is_interior() {
        return Err(Error::OriginNotInterior);
    }
    let verts = p.lattice_vertices()?;
    let mut total = BigInt::zero();
    for h in p.facets() {
        let face: Vec<LatticePoint> = verts
            .iter()
            .filter(|v| h.slack_lattice(v).is_zero())
            .cloned()
            .collect();
        total += cone_volume(&mut Vec::new(), &face);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rows: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<LatticePoint> = rows.iter().map(|r| LatticePoint::from_i64(r)).collect();
        LatticePolytope::hull(&pts).unwrap()
    }

    fn simplex(rows: &[&[i64]]) -> Simplex {
        Simplex::new(rows.iter().map(|r| LatticePoint::from_i64(r)).collect())
    }

    #[test]
    fn unimodularity() {
        assert!(simplex(&[&[1, 0], &[0, 1]]).is_unimodular().unwrap());
        assert!(!simplex(&[&[2, -1], &[-1, 2]]).is_unimodular().unwrap());
        assert!(simplex(&[&[2, -1], &[1, 0]]).is_unimodular().unwrap());
        assert_eq!(
            simplex(&[&[1, 1], &[2, 2]]).is_unimodular(),
            Err(Error::DegenerateSimplex)
        );
    }

    #[test]
    fn square_boundary_splits_at_midpoints() {
        let sq = poly(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]);
        let t = sq.pulling_triangulation_boundary().unwrap();
        assert_eq!(t.len(), 8);
        assert!(t.iter().all(|s| s.is_unimodular().unwrap()));
    }

    #[test]
    fn reflexive_triangle_boundary() {
        let tri = poly(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(tri.pulling_triangulation_boundary().unwrap().len(), 3);
    }

    #[test]
    fn non_reflexive_is_rejected() {
        let p = poly(&[&[1, 0], &[0, 1], &[-3, -3]]);
        assert_eq!(p.pulling_triangulation_boundary(), Err(Error::NotReflexive));
    }

    #[test]
    fn projective_space_dual_boundary() {
        // The polar of the P^3 fan polytope is a tetrahedron whose four facets are
        // lattice triangles of edge length 4: 16 unit triangles each.
        let d = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]])
            .polar_dual()
            .unwrap();
        assert_eq!(boundary_normalized_volume(&d).unwrap(), BigInt::from(64));
        let t = d.pulling_triangulation_boundary().unwrap();
        assert_eq!(t.len(), 64);
        let vol: BigInt = t.iter().map(Simplex::normalized_volume).sum();
        assert_eq!(vol, BigInt::from(64));
        let mut verts: Vec<LatticePoint> = t.iter().flat_map(|s| s.vertices.clone()).collect();
        verts.sort();
        verts.dedup();
        assert_eq!(verts.len(), 34);
    }
}
