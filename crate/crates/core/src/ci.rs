//! Complete intersections in projective space and their Givental mirrors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::givental_ci;
use crate::polytope::{LatticePoint, LatticePolytope};
use crate::report::{Check, VerificationReport};

/// A smooth Fano complete intersection of hypersurfaces of degrees `degrees` in `P^ambient`.
///
/// Degrees are kept nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CiSpec {
    ambient: usize,
    degrees: Vec<usize>,
}

impl CiSpec {
    pub fn new(ambient: usize, mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidSpec(format!("degree {d} < 2")));
        }
        let total: usize = degrees.iter().sum();
        if total > ambient {
            return Err(Error::InvalidSpec(format!(
                "Fano index {} < 1, not Fano",
                ambient as i64 + 1 - total as i64
            )));
        }
        if degrees.len() >= ambient {
            return Err(Error::InvalidSpec("dimension < 1".into()));
        }
        Ok(CiSpec { ambient, degrees })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    pub fn fano_index(&self) -> usize {
        self.ambient + 1 - self.degrees.iter().sum::<usize>()
    }

    /// Dimension of the variety, which is also the number of mirror variables.
    pub fn dim(&self) -> usize {
        self.ambient - self.k()
    }

    /// `(-K)^n = i^n · prod d`.
    pub fn anticanonical_degree(&self) -> BigInt {
        let i = BigInt::from(self.fano_index());
        let mut v = num_traits::pow(i, self.dim());
        for &d in &self.degrees {
            v *= d;
        }
        v
    }
}

impl fmt::Display for CiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({};{})", self.ambient, ds.join(","))
    }
}

impl FromStr for CiSpec {
    type Err = Error;

    /// `"N;d1,d2,..."`; `"N"` or `"N;"` is projective space itself.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidSpec(format!("{m} in {s:?}"));
        let (n, ds) = s.split_once(';').unwrap_or((s, ""));
        let ambient: usize = n.trim().parse().map_err(|_| bad("bad ambient dimension"))?;
        let degrees = ds
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad degree")))
            .collect::<Result<Vec<_>>>()?;
        CiSpec::new(ambient, degrees)
    }
}

/// Vertices of the dual polytope predicted by the block construction.
///
/// Columns follow the mirror variable order: each block's `d_i - 1` columns, then the
/// `i_X - 1` y-columns.
pub fn matrix_m(spec: &CiSpec) -> Result<Vec<LatticePoint>> {
    if spec.k() == 0 {
        return Err(Error::DegenerateKZero);
    }
    let n = spec.dim();
    let ix = spec.fano_index() as i64;
    let ycols = spec.dim() - spec.degrees.iter().map(|d| d - 1).sum::<usize>();
    let y0 = n - ycols;
    let mut rows = Vec::new();
    let mut col = 0;
    for &d in &spec.degrees {
        for j in 0..d {
            let mut row = vec![0i64; n];
            if j + 1 < d {
                row[col + j] = ix;
            } else {
                row[col..col + d - 1].fill(-ix);
            }
            row[y0..].fill(-1);
            rows.push(row);
        }
        col += d - 1;
    }
    for s in 0..ycols {
        let mut row = vec![0i64; n];
        row[y0..].fill(-1);
        row[y0 + s] += ix;
        rows.push(row);
    }
    Ok(rows.iter().map(|r| LatticePoint::from_i64(r)).collect())
}

/// Whether the rows of each block, shifted by `shift_vector`, sum to zero.
pub fn block_row_sums_vanish(spec: &CiSpec, rows: &[LatticePoint]) -> bool {
    let shift = shift_vector(spec);
    let mut start = 0;
    spec.degrees.iter().all(|&d| {
        let block = &rows[start..start + d];
        start += d;
        (0..spec.dim()).all(|c| {
            block
                .iter()
                .map(|r| &r.0[c] + &shift.0[c])
                .sum::<BigInt>()
                .is_zero()
        })
    })
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum over S ⊆ blocks of (-1)^|S| · C(N + i_X - sum_{i∈S} d_i, N)`.
pub fn h0_anticanonical(spec: &CiSpec) -> BigInt {
    let nn = spec.ambient as i64;
    let ix = spec.fano_index() as i64;
    let k = spec.k();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << k) {
        let s: i64 = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| spec.degrees[i] as i64)
            .sum();
        let term = binomial(nn + ix - s, nn);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Exponent vectors of degree-`i_X` monomials in the `N+1` variables not divisible by
/// any block monomial. Variables are ordered block by block, then the `i_X` free ones.
fn reduced_monomials(spec: &CiSpec) -> Vec<Vec<usize>> {
    let nvars = spec.ambient + 1;
    let deg = spec.fano_index();
    let mut out = Vec::new();
    let mut cur = vec![0usize; nvars];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, deg, &mut cur, &mut out);
    out.retain(|m| {
        let mut start = 0;
        spec.degrees.iter().all(|&d| {
            let divisible = m[start..start + d].iter().all(|&a| a > 0);
            start += d;
            !divisible
        })
    });
    out
}

/// Direct count of the monomials behind `h0_anticanonical`.
pub fn h0_monomial_oracle(spec: &CiSpec) -> BigInt {
    BigInt::from(reduced_monomials(spec).len())
}

/// `(0,…,0,1,…,1)` with `i_X - 1` ones.
pub fn shift_vector(spec: &CiSpec) -> LatticePoint {
    let n = spec.dim();
    let ones = spec.fano_index() - 1;
    let v: Vec<i64> = (0..n).map(|c| (c + ones >= n) as i64).collect();
    LatticePoint::from_i64(&v)
}

/// Newton polytope of the Givental polynomial.
pub fn newton_polytope_ci(spec: &CiSpec) -> Result<LatticePolytope> {
    givental_ci(spec).newton_polytope()
}

/// The polar dual of the Newton polytope.
pub fn dual_polytope_ci(spec: &CiSpec) -> Result<LatticePolytope> {
    newton_polytope_ci(spec)?.polar_dual()
}

/// Number of boundary lattice points of the dual polytope.
pub fn r_boundary(spec: &CiSpec) -> Result<BigInt> {
    let (_, boundary) = dual_polytope_ci(spec)?.split_lattice_points()?;
    Ok(BigInt::from(boundary.len()))
}

/// Checks that sending a monomial `z^a` to `sum a_g · u_g` (with `u_g` the shifted
/// vertex `v'_g` divided by `i_X`, and `u = 0` for the free variable of the zero vector)
/// is a bijection from reduced monomials onto the lattice points of the shifted dual.
///
/// In particular every lattice point of the shifted polytope is a combination of its
/// vertices with denominator `i_X`.
pub fn monomial_bijection_holds(spec: &CiSpec, shifted: &LatticePolytope) -> Result<bool> {
    if spec.k() == 0 {
        return Err(Error::DegenerateKZero);
    }
    let n = spec.dim();
    let ix = BigInt::from(spec.fano_index());
    let shift = shift_vector(spec);
    // Generators in variable order: block rows, y-rows, then the zero vector.
    let mut gens: Vec<Vec<BigInt>> = matrix_m(spec)?
        .iter()
        .map(|v| v.add(&shift).0.iter().map(|c| c / &ix).collect())
        .collect();
    gens.push(vec![BigInt::zero(); n]);
    debug_assert_eq!(gens.len(), spec.ambient + 1);

    let monomials = reduced_monomials(spec);
    let mut image = BTreeSet::new();
    for m in &monomials {
        let mut p = vec![BigInt::zero(); n];
        for (a, g) in m.iter().zip(&gens) {
            for (pc, gc) in p.iter_mut().zip(g) {
                *pc += gc * *a;
            }
        }
        image.insert(LatticePoint::new(p));
    }
    let points: BTreeSet<LatticePoint> = shifted.lattice_points().into_iter().collect();
    Ok(image.len() == monomials.len() && image == points)
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().unwrap_or(i64::MAX)
}

/// Runs the full pipeline for one complete intersection. Failed comparisons become
/// failed checks, not errors.
pub fn verify_ci(spec: &CiSpec) -> Result<VerificationReport> {
    if spec.k() == 0 {
        return Err(Error::DegenerateKZero);
    }
    let start = Instant::now();
    let mut rep = VerificationReport::new(spec.to_string());

    let delta = newton_polytope_ci(spec)?;
    let nabla = delta.polar_dual()?;
    rep.push(Check::flag("delta_reflexive", delta.is_reflexive()?));
    rep.push(Check::flag("nabla_reflexive", nabla.is_reflexive()?));

    let m_rows = matrix_m(spec)?;
    let m_set: BTreeSet<LatticePoint> = m_rows.iter().cloned().collect();
    let v_set: BTreeSet<LatticePoint> = nabla.lattice_vertices()?.into_iter().collect();
    rep.push(Check::flag("vertices_equal_matrix_m", m_set == v_set));
    rep.push(Check::flag("block_row_sums_vanish", block_row_sums_vanish(spec, &m_rows)));

    let (interior, boundary) = nabla.split_lattice_points()?;
    let origin_only = interior.len() == 1 && interior[0].is_zero();
    rep.push(Check::flag("interior_is_origin", origin_only));

    let h0 = h0_anticanonical(spec);
    let oracle = h0_monomial_oracle(spec);
    let shifted = nabla.translate(&shift_vector(spec))?;
    let shifted_count = BigInt::from(shifted.lattice_points().len());
    let r = BigInt::from(boundary.len());
    rep.push(Check::equal("h0_oracle", to_i64(&h0), to_i64(&oracle)));
    rep.push(Check::equal("h0_shifted_points", to_i64(&h0), to_i64(&shifted_count)));
    rep.push(Check::flag("monomial_bijection", monomial_bijection_holds(spec, &shifted)?));
    rep.push(Check::equal("r_equals_h0_minus_1", to_i64(&h0) - 1, to_i64(&r)));
    if spec.dim() == 3 {
        let formula: BigInt = spec.anticanonical_degree() / 2 + 2;
        rep.push(Check::equal("threefold_formula", to_i64(&formula), to_i64(&h0) - 1));
    }

    rep.set("N", spec.ambient as i64);
    rep.set("n", spec.dim() as i64);
    rep.set("i_X", spec.fano_index() as i64);
    rep.set("h0", to_i64(&h0));
    rep.set("r", to_i64(&r));
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// Every spec with `3 ≤ N ≤ max_ambient`, `k ≥ 1`, `n ≥ 2`, ordered by `N`, then by
/// number of hypersurfaces, then lexicographically.
pub fn sweep_specs(max_ambient: usize) -> Vec<CiSpec> {
    fn seqs(max_part: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for d in 2..=max_part.min(budget) {
            cur.push(d);
            seqs(d, budget - d, cur, out);
            cur.pop();
        }
    }
    let mut specs = Vec::new();
    for nn in 3..=max_ambient {
        let mut all = Vec::new();
        seqs(nn, nn, &mut Vec::new(), &mut all);
        all.retain(|ds| nn - ds.len() >= 2);
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        specs.extend(all.into_iter().map(|ds| CiSpec::new(nn, ds).expect("valid by construction")));
    }
    specs
}

/// `verify_ci` over `sweep_specs(max_ambient)`, in parallel on the current rayon pool;
/// the output order is the generation order.
pub fn sweep(max_ambient: usize) -> Vec<VerificationReport> {
    sweep_specs(max_ambient)
        .par_iter()
        .map(|s| verify_ci(s).unwrap_or_else(|e| VerificationReport::failed(s.to_string(), e)))
        .collect()
}
