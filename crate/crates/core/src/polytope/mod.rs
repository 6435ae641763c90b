//! Exact convex lattice polytopes.
//!
//! Polytopes carry both a vertex and a facet description. All arithmetic is over
//! `BigInt`/`BigRational`; nothing in this module has a tolerance.

mod enumerate;
mod hull;
mod json;
pub mod linalg;
mod triangulate;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use json::{polytope_from_json, polytope_to_json};
pub use triangulate::{boundary_normalized_volume, Simplex};

/// A point of `Z^n`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(linalg::to_rational(&self.0))
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(BigRational::is_integer)
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.is_integral()
            .then(|| LatticePoint(self.0.iter().map(BigRational::to_integer).collect()))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `{x : <normal, x> >= -offset}` with a primitive integer normal.
///
/// The offset is integral for lattice polytopes and may be a fraction otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: LatticePoint,
    pub offset: BigRational,
}

impl Halfspace {
    /// `<normal, x> + offset`, which is nonnegative exactly on the halfspace.
    pub fn slack(&self, x: &RationalPoint) -> BigRational {
        linalg::dot_int_rat(&self.normal.0, &x.0) + &self.offset
    }

    pub fn slack_lattice(&self, x: &LatticePoint) -> BigRational {
        BigRational::from_integer(linalg::dot(&self.normal.0, &x.0)) + &self.offset
    }
}

/// A convex polytope with rational vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Halfspace>,
    is_lattice: bool,
    is_full_dim: bool,
}

impl LatticePolytope {
    /// Convex hull of lattice points.
    ///
    /// Non-full-dimensional input is accepted; the result then has its vertices but
    /// no facets, and `is_full_dim()` is false.
    pub fn hull(points: &[LatticePoint]) -> Result<Self> {
        let rational: Vec<RationalPoint> = points.iter().map(LatticePoint::to_rational).collect();
        Self::hull_rational(&rational)
    }

    /// Convex hull of rational points.
    pub fn hull_rational(points: &[RationalPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::Malformed("zero-dimensional ambient space".into()));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        let coords: Vec<Vec<BigRational>> = points.iter().map(|p| p.0.clone()).collect();
        let chart = linalg::AffineChart::new(&coords);
        let rank = chart.dim();

        let projected: Vec<Vec<BigRational>> = coords.iter().map(|p| chart.project(p)).collect();
        let scale = linalg::common_denominator(projected.iter().flatten());
        let (vertex_idx, facets) = if rank == 0 {
            (vec![0], Vec::new())
        } else {
            let ints: Vec<Vec<BigInt>> = projected
                .iter()
                .map(|p| linalg::scale_to_int(p, &scale))
                .collect();
            let raw = hull::hull_full_dim(&ints);
            let facets = if rank == dim {
                raw.facets
                    .iter()
                    .map(|(a, b)| Halfspace {
                        normal: LatticePoint(a.clone()),
                        offset: BigRational::new(b.clone(), scale.clone()),
                    })
                    .collect()
            } else {
                Vec::new()
            };
            (raw.vertices, facets)
        };
        let mut vertices: Vec<RationalPoint> =
            vertex_idx.iter().map(|&i| points[i].clone()).collect();
        vertices.sort();
        vertices.dedup();
        Ok(Self::from_parts(dim, vertices, facets, rank == dim))
    }

    fn from_parts(
        dim: usize,
        vertices: Vec<RationalPoint>,
        mut facets: Vec<Halfspace>,
        is_full_dim: bool,
    ) -> Self {
        facets.sort();
        let is_lattice = vertices.iter().all(RationalPoint::is_integral);
        LatticePolytope {
            dim,
            vertices,
            facets,
            is_lattice,
            is_full_dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Vertices as lattice points, or `NotLattice`.
    pub fn lattice_vertices(&self) -> Result<Vec<LatticePoint>> {
        self.vertices
            .iter()
            .map(|v| v.to_lattice().ok_or(Error::NotLattice))
            .collect()
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_lattice(&self) -> bool {
        self.is_lattice
    }

    pub fn is_full_dim(&self) -> bool {
        self.is_full_dim
    }

    fn require_full_dim(&self) -> Result<()> {
        if self.is_full_dim {
            Ok(())
        } else {
            Err(Error::NotFullDimensional)
        }
    }

    /// Exact membership test.
    pub fn contains(&self, x: &RationalPoint) -> bool {
        if x.dim() != self.dim {
            return false;
        }
        if self.is_full_dim {
            return self.facets.iter().all(|h| !h.slack(x).is_negative());
        }
        // Lower-dimensional: test in a chart of the affine hull.
        let mut pts: Vec<RationalPoint> = self.vertices.clone();
        pts.push(x.clone());
        let coords: Vec<Vec<BigRational>> = pts.iter().map(|p| p.0.clone()).collect();
        let chart = linalg::AffineChart::new(&coords);
        let base = linalg::AffineChart::new(&coords[..coords.len() - 1]);
        if chart.dim() != base.dim() {
            return false;
        }
        if base.dim() == 0 {
            return &self.vertices[0] == x;
        }
        let proj: Vec<RationalPoint> = self
            .vertices
            .iter()
            .map(|v| RationalPoint(base.project(&v.0)))
            .collect();
        let inner = LatticePolytope::hull_rational(&proj).expect("nonempty");
        inner.contains(&RationalPoint(base.project(&x.0)))
    }

    /// True iff the origin satisfies every facet inequality strictly.
    pub fn origin_is_interior(&self) -> bool {
        self.is_full_dim && self.facets.iter().all(|h| h.offset.is_positive())
    }

    /// Polar dual `{x : <x, v> >= -1 for every vertex v}`.
    pub fn polar_dual(&self) -> Result<Self> {
        self.require_full_dim()?;
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        let vertices: Vec<RationalPoint> = self
            .facets
            .iter()
            .map(|h| {
                RationalPoint(
                    h.normal
                        .0
                        .iter()
                        .map(|a| BigRational::from_integer(a.clone()) / &h.offset)
                        .collect(),
                )
            })
            .collect();
        let facets = self
            .vertices
            .iter()
            .map(|v| {
                let l = linalg::common_denominator(v.0.iter());
                let mut w = linalg::scale_to_int(&v.0, &l);
                let g = linalg::make_primitive(&mut w);
                Halfspace {
                    normal: LatticePoint(w),
                    offset: BigRational::new(l, g),
                }
            })
            .collect();
        let mut vertices = vertices;
        vertices.sort();
        Ok(Self::from_parts(self.dim, vertices, facets, true))
    }

    /// A lattice polytope with the origin in its interior whose facets all sit at
    /// lattice distance one from the origin.
    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_full_dim()?;
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        Ok(self.is_lattice && self.facets.iter().all(|h| h.offset.is_one()))
    }

    pub fn translate(&self, v: &LatticePoint) -> Result<Self> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        let shift = v.to_rational();
        let vertices = self
            .vertices
            .iter()
            .map(|p| RationalPoint(p.0.iter().zip(&shift.0).map(|(a, b)| a + b).collect()))
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset - BigRational::from_integer(linalg::dot(&h.normal.0, &v.0)),
            })
            .collect();
        Ok(Self::from_parts(self.dim, vertices, facets, self.is_full_dim))
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        enumerate::lattice_points(self)
    }

    /// Partition of the lattice points into interior and boundary points.
    pub fn split_lattice_points(&self) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
        self.require_full_dim()?;
        Ok(self
            .lattice_points()
            .into_iter()
            .partition(|p| self.facets.iter().all(|h| h.slack_lattice(p).is_positive())))
    }

    /// Facets as lists of the vertices lying on them.
    pub fn facet_vertices(&self) -> Vec<Vec<RationalPoint>> {
        self.facets
            .iter()
            .map(|h| {
                self.vertices
                    .iter()
                    .filter(|v| h.slack(v).is_zero())
                    .cloned()
                    .collect()
            })
            .collect()
    }

    /// Pulling triangulation of the boundary on all boundary lattice points.
    pub fn pulling_triangulation_boundary(&self) -> Result<Vec<Simplex>> {
        if !self.is_reflexive()? {
            return Err(Error::NotReflexive);
        }
        Ok(triangulate::pulling_boundary(self))
    }
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `|det|` of the square matrix with the given rows.
pub fn abs_det(rows: &[LatticePoint]) -> BigInt {
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.0.clone()).collect();
    linalg::det(&m).abs()
}
