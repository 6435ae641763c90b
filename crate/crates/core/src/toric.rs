//! Smooth toric Fano varieties given by their fan polytopes.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::{default_variables, LaurentPolynomial};
use crate::polytope::{abs_det, boundary_normalized_volume, LatticePoint, LatticePolytope, Simplex};
use crate::report::{Check, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricFanoInput {
    name: String,
    fan_polytope: LatticePolytope,
    rays: Vec<LatticePoint>,
}

impl ToricFanoInput {
    /// The rays must span a full-dimensional polytope with the origin in its interior,
    /// and each vertex must be primitive.
    pub fn new(name: impl Into<String>, rays: &[LatticePoint]) -> Result<Self> {
        let fan_polytope = LatticePolytope::hull(rays)?;
        Self::from_polytope(name, fan_polytope)
    }

    pub fn from_polytope(name: impl Into<String>, fan_polytope: LatticePolytope) -> Result<Self> {
        if !fan_polytope.is_full_dim() {
            return Err(Error::NotFullDimensional);
        }
        if !fan_polytope.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        let rays = fan_polytope.lattice_vertices()?;
        for v in &rays {
            let g = v.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            if !g.is_one() {
                return Err(Error::Malformed(format!("ray {v} is not primitive")));
            }
        }
        Ok(ToricFanoInput {
            name: name.into(),
            fan_polytope,
            rays,
        })
    }

    pub fn from_i64(name: &str, rays: &[&[i64]]) -> Result<Self> {
        let pts: Vec<LatticePoint> = rays.iter().map(|r| LatticePoint::from_i64(r)).collect();
        Self::new(name, &pts)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.fan_polytope.dim()
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn fan_polytope(&self) -> &LatticePolytope {
        &self.fan_polytope
    }

    pub fn dual(&self) -> Result<LatticePolytope> {
        self.fan_polytope.polar_dual()
    }
}

/// Every facet of the fan polytope is a simplex whose vertices form a lattice basis.
pub fn is_smooth_fano(t: &ToricFanoInput) -> bool {
    let n = t.dim();
    t.fan_polytope.facets().iter().all(|h| {
        let on: Vec<LatticePoint> = t
            .rays
            .iter()
            .filter(|v| h.slack_lattice(v).is_zero())
            .cloned()
            .collect();
        on.len() == n && abs_det(&on).is_one()
    })
}

/// Lattice points of the dual polytope minus one.
pub fn components_at_infinity_toric(t: &ToricFanoInput) -> Result<BigInt> {
    Ok(h0_toric(t)? - 1)
}

/// Lattice points of the dual polytope.
pub fn h0_toric(t: &ToricFanoInput) -> Result<BigInt> {
    if !is_smooth_fano(t) {
        return Err(Error::NotSmoothFano);
    }
    Ok(BigInt::from(t.dual()?.lattice_points().len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrepantWitness {
    WitnessFound(Vec<Simplex>),
    /// The pulling triangulation produced a simplex that is not unimodular; another
    /// triangulation might still exist.
    Inconclusive(Simplex),
}

impl CrepantWitness {
    pub fn is_found(&self) -> bool {
        matches!(self, CrepantWitness::WitnessFound(_))
    }
}

/// Pulling triangulation of the dual's boundary, accepted when every cone is unimodular.
pub fn crepant_witness(t: &ToricFanoInput) -> Result<CrepantWitness> {
    let simplices = t.dual()?.pulling_triangulation_boundary()?;
    for s in &simplices {
        if !s.is_unimodular()? {
            return Ok(CrepantWitness::Inconclusive(s.clone()));
        }
    }
    Ok(CrepantWitness::WitnessFound(simplices))
}

/// The fan polytope of the toric mirror polynomial `sum of x^v over vertices`.
pub fn vertex_sum_polynomial(t: &ToricFanoInput) -> Result<LaurentPolynomial> {
    LaurentPolynomial::vertex_sum(&t.fan_polytope, &default_variables(t.dim()))
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().unwrap_or(i64::MAX)
}

pub fn verify_toric(t: &ToricFanoInput) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::new(t.name());
    if let Err(e) = verify_into(t, &mut rep) {
        rep.push(Check::flag("completed", false));
        rep.notes.push(e.to_string());
    }
    rep.elapsed = start.elapsed();
    rep
}

fn verify_into(t: &ToricFanoInput, rep: &mut VerificationReport) -> Result<()> {
    let n = t.dim();
    let smooth = is_smooth_fano(t);
    rep.push(Check::flag("smooth_fano", smooth));
    let reflexive = t.fan_polytope.is_reflexive()?;
    rep.push(Check::flag("delta_reflexive", reflexive));
    let vs = vertex_sum_polynomial(t)?;
    rep.push(Check::flag("vertex_sum_newton_is_delta", vs.newton_polytope()? == t.fan_polytope));
    if !smooth || !reflexive {
        return Ok(());
    }

    let nabla = t.dual()?;
    let all = nabla.lattice_points();
    let (interior, boundary) = nabla.split_lattice_points()?;
    let h0 = all.len() as i64;
    let components = boundary.len() as i64 + interior.len() as i64 - 1;
    rep.push(Check::flag("interior_is_origin", interior.len() == 1 && interior[0].is_zero()));
    rep.push(Check::equal("h0_equals_components_plus_1", h0, components + 1));

    // For reflexive ∇ every facet lies at height one, so the boundary volume is vol(∇).
    let volume = boundary_normalized_volume(&nabla)?;
    match n {
        2 => {
            let k2 = 12 - t.fan_polytope.split_lattice_points()?.1.len() as i64;
            rep.push(Check::equal("components_equal_boundary_length", components, to_i64(&volume)));
            rep.push(Check::equal("components_equal_k2", k2, components));
        }
        3 => {
            let formula = to_i64(&volume) / 2 + 2;
            rep.push(Check::equal("threefold_formula", formula, components));
        }
        _ => {}
    }

    match crepant_witness(t)? {
        CrepantWitness::WitnessFound(simplices) => {
            let total: BigInt = simplices.iter().map(Simplex::normalized_volume).sum();
            rep.push(Check::equal("witness_volume", to_i64(&volume), to_i64(&total)));
            let used: BTreeSet<LatticePoint> =
                simplices.iter().flat_map(|s| s.vertices.iter().cloned()).collect();
            let expected: BTreeSet<LatticePoint> = boundary.into_iter().collect();
            rep.push(Check::flag("witness_uses_all_boundary_points", used == expected));
            rep.set("witness_simplices", simplices.len() as i64);
        }
        CrepantWitness::Inconclusive(s) => {
            let verts: Vec<String> = s.vertices.iter().map(|v| v.to_string()).collect();
            rep.conditions.push(format!(
                "no crepant witness: pulling produced non-unimodular cone {}",
                verts.join(" ")
            ));
        }
    }
    rep.set("n", n as i64);
    rep.set("h0", h0);
    rep.set("components", components);
    rep.set("volume", to_i64(&volume));
    Ok(())
}

/// Smooth toric Fano fixtures: the five toric del Pezzo surfaces and three threefolds.
pub fn toric_fixtures() -> Vec<ToricFanoInput> {
    let table: [(&str, &[&[i64]]); 8] = [
        ("P2", &[&[1, 0], &[0, 1], &[-1, -1]]),
        ("P1xP1", &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]),
        ("Bl1P2", &[&[1, 0], &[1, 1], &[0, 1], &[-1, -1]]),
        ("Bl2P2", &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1]]),
        ("Bl3P2", &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]]),
        ("P3", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
        ("P1xP2", &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, -1, -1]]),
        (
            "P1xP1xP1",
            &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]],
        ),
    ];
    table
        .iter()
        .map(|(name, rays)| ToricFanoInput::from_i64(name, rays).expect("valid fixture"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> ToricFanoInput {
        toric_fixtures().into_iter().find(|t| t.name() == name).unwrap()
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth_fano(&fixture("P2")));
        assert!(is_smooth_fano(&fixture("P1xP1")));
        let bad = ToricFanoInput::from_i64("P112", &[&[1, 0], &[0, 1], &[-1, -2]]).unwrap();
        assert!(!is_smooth_fano(&bad));
        assert_eq!(h0_toric(&bad), Err(Error::NotSmoothFano));
        let rep = verify_toric(&bad);
        assert!(!rep.check("smooth_fano").unwrap().pass);
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            ToricFanoInput::from_i64("x", &[&[1, 0], &[0, 1], &[1, 1]]).unwrap_err(),
            Error::OriginNotInterior
        );
        assert!(matches!(
            ToricFanoInput::from_i64("x", &[&[2, 0], &[0, 1], &[-1, -1]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn counts() {
        let p1 = ToricFanoInput::from_i64("P1", &[&[1], &[-1]]).unwrap();
        assert_eq!(h0_toric(&p1).unwrap(), BigInt::from(3));
        assert_eq!(h0_toric(&fixture("P2")).unwrap(), BigInt::from(10));
        assert_eq!(h0_toric(&fixture("P1xP2")).unwrap(), BigInt::from(30));
        assert_eq!(components_at_infinity_toric(&fixture("P3")).unwrap(), BigInt::from(34));
    }

    #[test]
    fn witness_for_p2() {
        match crepant_witness(&fixture("P2")).unwrap() {
            CrepantWitness::WitnessFound(s) => assert_eq!(s.len(), 9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn surfaces() {
        for (name, k2) in [("P2", 9), ("P1xP1", 8), ("Bl1P2", 8), ("Bl2P2", 7), ("Bl3P2", 6)] {
            let rep = verify_toric(&fixture(name));
            assert!(rep.pass(), "{rep}");
            assert_eq!(rep.value("components"), Some(k2), "{name}");
        }
    }
}
