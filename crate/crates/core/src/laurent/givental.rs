//! The Givental (Hori–Vafa) Laurent polynomial of a complete intersection.

use num_rational::BigRational;
use num_traits::One;

use super::LaurentPolynomial;
use crate::ci::CiSpec;

/// `x{i}_{j}` for each block `i` and `j < d_i`, then `y1, …, y{i_X-1}`.
pub fn givental_variables(spec: &CiSpec) -> Vec<String> {
    let mut vars = Vec::with_capacity(spec.dim());
    for (i, &d) in spec.degrees().iter().enumerate() {
        for j in 1..d {
            vars.push(format!("x{}_{}", i + 1, j));
        }
    }
    for s in 1..spec.fano_index() {
        vars.push(format!("y{s}"));
    }
    vars
}

/// `prod_i (x_{i,1}+…+x_{i,d_i-1}+1)^{d_i} / (prod x · prod y) + y_1 + … + y_{i_X-1}`.
pub fn givental_ci(spec: &CiSpec) -> LaurentPolynomial {
    let vars = givental_variables(spec);
    let n = vars.len();
    let mut p = LaurentPolynomial::monomial(&vars, vec![-1; n], BigRational::one());
    let mut col = 0;
    for &d in spec.degrees() {
        let mut block = LaurentPolynomial::one(&vars);
        for j in 0..d - 1 {
            block = &block + &LaurentPolynomial::var(&vars, col + j);
        }
        p = &p * &block.pow(d as u32);
        col += d - 1;
    }
    for s in col..n {
        p = &p + &LaurentPolynomial::var(&vars, s);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::LatticePoint;

    fn spec(s: &str) -> CiSpec {
        s.parse().unwrap()
    }

    #[test]
    fn variable_names() {
        assert_eq!(givental_variables(&spec("7;3,2")), ["x1_1", "x1_2", "x2_1", "y1", "y2"]);
        assert_eq!(givental_variables(&spec("3")), ["y1", "y2", "y3"]);
    }

    #[test]
    fn two_quadrics_in_p5() {
        let s = spec("5;2,2");
        let vars = givental_variables(&s);
        let expected = LaurentPolynomial::parse(
            "(x1_1+1)^2*(x2_1+1)^2*x1_1^-1*x2_1^-1*y1^-1 + y1",
            &vars,
        )
        .unwrap();
        let p = givental_ci(&s);
        assert_eq!(p, expected);
        let mut verts = p.newton_polytope().unwrap().lattice_vertices().unwrap();
        verts.sort();
        let mut want: Vec<LatticePoint> = [[1, 1, -1], [1, -1, -1], [-1, 1, -1], [-1, -1, -1], [0, 0, 1]]
            .iter()
            .map(|r| LatticePoint::from_i64(r))
            .collect();
        want.sort();
        assert_eq!(verts, want);
    }

    #[test]
    fn degenerate_cases() {
        let s = spec("4;4");
        let vars = givental_variables(&s);
        let quartic = LaurentPolynomial::parse("(x1_1+x1_2+x1_3+1)^4*x1_1^-1*x1_2^-1*x1_3^-1", &vars).unwrap();
        assert_eq!(givental_ci(&s), quartic);
        let s = spec("3");
        let vars = givental_variables(&s);
        let proj = LaurentPolynomial::parse("y1^-1*y2^-1*y3^-1 + y1 + y2 + y3", &vars).unwrap();
        assert_eq!(givental_ci(&s), proj);
    }
}
