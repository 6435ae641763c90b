//! Laurent polynomials with exact rational coefficients.

mod fraction;
mod givental;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::{LatticePoint, LatticePolytope};

pub use fraction::{pencil_identity_check, substitute, LaurentFraction, Substitution};
pub use givental::{givental_ci, givental_variables};

/// Exponent vector of a monomial.
pub type Exponent = Vec<i64>;

/// A finite sum of monomials `c·x^e` with nonzero rational `c` and `e ∈ Z^n`.
///
/// Terms are kept in lexicographic exponent order. Two polynomials can only be
/// combined when they share the same ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(vars: &[String]) -> Self {
        LaurentPolynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: BigRational) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn monomial(vars: &[String], exp: Exponent, c: BigRational) -> Self {
        assert_eq!(exp.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exp, c);
        p
    }

    /// The `i`-th variable.
    pub fn var(vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, BigRational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn parse(text: &str, vars: &[String]) -> Result<Self> {
        parse::parse(text, vars)
    }

    /// Parses with the variables taken from the text in order of first appearance.
    pub fn parse_infer(text: &str) -> Result<Self> {
        parse::parse(text, &parse::identifiers(text))
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[i64]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `Some((e, c))` when the polynomial is the single term `c·x^e`.
    pub fn as_monomial(&self) -> Option<(&Exponent, &BigRational)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative powers are only defined for monomials.
    pub fn pow_signed(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            return Some(self.pow(k as u32));
        }
        let (e, c) = self.as_monomial()?;
        let inv_e: Exponent = e.iter().map(|x| -x).collect();
        Some(Self::monomial(&self.vars, inv_e, c.recip()).pow((-k) as u32))
    }

    /// Componentwise minimum of the exponents (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Exponent {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.dim()];
        };
        it.fold(first.clone(), |m, e| m.iter().zip(e).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn max_exponents(&self) -> Exponent {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.dim()];
        };
        it.fold(first.clone(), |m, e| m.iter().zip(e).map(|(a, b)| *a.max(b)).collect())
    }

    /// Exact quotient `self / divisor`, or `ExactDivisionFailed`.
    ///
    /// The divisor is shifted to an ordinary polynomial; the division then runs with
    /// lexicographic leading terms.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ExactDivisionFailed);
        }
        let dmin = divisor.min_exponents();
        let neg_dmin: Exponent = dmin.iter().map(|x| -x).collect();
        let d0 = divisor.shift(&neg_dmin);
        let (lead_e, lead_c) = d0.terms.iter().next_back().unwrap();
        // Per variable, min/max exponents add under multiplication, which boxes in
        // every exponent the quotient can have.
        let lo = self.min_exponents();
        let hi: Exponent = self
            .max_exponents()
            .iter()
            .zip(d0.max_exponents())
            .map(|(a, b)| a - b)
            .collect();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let qe: Exponent = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let in_box = qe
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(q, (l, h))| l <= q && q <= h);
            if !in_box {
                return Err(Error::ExactDivisionFailed);
            }
            let qc = c / lead_c;
            let t = Self::monomial(&self.vars, qe.clone(), qc.clone());
            rem = &rem - &(&t * &d0);
            quot.add_term(qe, qc);
        }
        let quot = quot.shift(&neg_dmin);
        Ok(quot)
    }

    /// Value at a rational point; `None` when a negative power hits a zero coordinate.
    pub fn evaluate(&self, point: &[BigRational]) -> Option<BigRational> {
        assert_eq!(point.len(), self.dim());
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k < 0 && x.is_zero() {
                    return None;
                }
                t *= num_traits::pow::Pow::pow(x, k as i32);
            }
            total += t;
        }
        Some(total)
    }

    /// Convex hull of the exponent vectors.
    pub fn newton_polytope(&self) -> Result<LatticePolytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pts: Vec<LatticePoint> = self
            .terms
            .keys()
            .map(|e| LatticePoint::from_i64(e))
            .collect();
        LatticePolytope::hull(&pts)
    }

    /// Sum of the monomials at the vertices of a full-dimensional lattice polytope.
    pub fn vertex_sum(delta: &LatticePolytope, vars: &[String]) -> Result<Self> {
        if !delta.is_lattice() {
            return Err(Error::NotLattice);
        }
        if !delta.is_full_dim() {
            return Err(Error::NotFullDimensional);
        }
        if vars.len() != delta.dim() {
            return Err(Error::DimensionMismatch {
                expected: delta.dim(),
                got: vars.len(),
            });
        }
        let mut p = Self::zero(vars);
        for v in delta.lattice_vertices()? {
            let e = v
                .to_i64()
                .ok_or_else(|| Error::Malformed("exponent out of range".into()))?;
            p.add_term(e, BigRational::one());
        }
        Ok(p)
    }
}

/// `x1, …, xn`.
pub fn default_variables(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(&-rhs).expect("variable lists differ")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-BigRational::one())
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms in lexicographic exponent order, e.g. `x^-1*y^-1 + y + 3/2*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k != 0)
                .peekable();
            let constant = factors.peek().is_none();
            if constant || !abs.is_one() {
                write_coefficient(f, &abs)?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (k, name) in factors {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if *k == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn format_is_lexicographic() {
        let p = LaurentPolynomial::parse("x + y + x^-1*y^-1", &xy()).unwrap();
        assert_eq!(p.to_string(), "x^-1*y^-1 + y + x");
        let q = LaurentPolynomial::parse("-3/2*x^2 + 5 - y", &xy()).unwrap();
        assert_eq!(q.to_string(), "5 - y - 3/2*x^2");
    }

    #[test]
    fn newton_polytopes() {
        let p = LaurentPolynomial::parse("x + y + x^-1*y^-1", &xy()).unwrap();
        let np = p.newton_polytope().unwrap();
        assert_eq!(
            np.lattice_vertices().unwrap(),
            vec![
                LatticePoint::from_i64(&[-1, -1]),
                LatticePoint::from_i64(&[0, 1]),
                LatticePoint::from_i64(&[1, 0])
            ]
        );
        let c = LaurentPolynomial::constant(&xy(), rat(5));
        let np = c.newton_polytope().unwrap();
        assert!(!np.is_full_dim());
        assert_eq!(np.lattice_vertices().unwrap(), vec![LatticePoint::zero(2)]);
        assert_eq!(
            LaurentPolynomial::zero(&xy()).newton_polytope(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn vertex_sum_examples() {
        let tri = LatticePolytope::hull(&[
            LatticePoint::from_i64(&[1, 0]),
            LatticePoint::from_i64(&[0, 1]),
            LatticePoint::from_i64(&[-1, -1]),
        ])
        .unwrap();
        let p = LaurentPolynomial::vertex_sum(&tri, &xy()).unwrap();
        assert_eq!(p, LaurentPolynomial::parse("x + y + x^-1*y^-1", &xy()).unwrap());

        let square = LatticePolytope::hull(&[
            LatticePoint::from_i64(&[-1, -1]),
            LatticePoint::from_i64(&[-1, 1]),
            LatticePoint::from_i64(&[1, -1]),
            LatticePoint::from_i64(&[1, 1]),
            LatticePoint::from_i64(&[0, 0]),
        ])
        .unwrap();
        assert_eq!(LaurentPolynomial::vertex_sum(&square, &xy()).unwrap().num_terms(), 4);

        let point = LatticePolytope::hull(&[LatticePoint::from_i64(&[1, 2])]).unwrap();
        assert_eq!(
            LaurentPolynomial::vertex_sum(&point, &xy()),
            Err(Error::NotFullDimensional)
        );
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let a = LaurentPolynomial::parse("(x+y+1)^3*(x-y)", &v).unwrap();
        let b = LaurentPolynomial::parse("x - y", &v).unwrap();
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, LaurentPolynomial::parse("(x+y+1)^3", &v).unwrap());
        let m = LaurentPolynomial::parse("x^-2*y", &v).unwrap();
        assert_eq!(a.exact_div(&m).unwrap(), a.shift(&[2, -1]));
        let c = LaurentPolynomial::parse("x + 2", &v).unwrap();
        assert_eq!(a.exact_div(&c), Err(Error::ExactDivisionFailed));
    }

    #[test]
    fn evaluation() {
        let p = LaurentPolynomial::parse("x + y^-1", &xy()).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.evaluate(&[half.clone(), half.clone()]), Some(half + rat(2)));
        assert_eq!(p.evaluate(&[rat(1), rat(0)]), None);
    }
}
