//! Quotients of Laurent polynomials and exact substitution.
//!
//! There is deliberately no multivariate gcd here. Equality of quotients is decided by
//! cross-multiplication, and reduction only removes monomials and factors the caller
//! names explicitly, each verified by exact division.

use std::collections::HashMap;

use num_rational::BigRational;

use super::{Exponent, LaurentPolynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentFraction {
    pub numerator: LaurentPolynomial,
    pub denominator: LaurentPolynomial,
}

impl LaurentFraction {
    pub fn new(numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> Result<Self> {
        if numerator.vars() != denominator.vars() {
            return Err(Error::VariableMismatch);
        }
        if denominator.is_zero() {
            return Err(Error::Malformed("zero denominator".into()));
        }
        Ok(LaurentFraction {
            numerator,
            denominator,
        })
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        let one = LaurentPolynomial::one(p.vars());
        LaurentFraction {
            numerator: p,
            denominator: one,
        }
    }

    pub fn vars(&self) -> &[String] {
        self.numerator.vars()
    }

    /// Moves every monomial factor so that numerator and denominator become ordinary
    /// polynomials with no common monomial divisor.
    pub fn cancel_monomials(&self) -> Self {
        let nmin = self.numerator.min_exponents();
        let dmin = self.denominator.min_exponents();
        let net: Exponent = nmin.iter().zip(&dmin).map(|(n, d)| n - d).collect();
        let up: Exponent = nmin
            .iter()
            .zip(&net)
            .map(|(n, t)| -n + (*t).max(0))
            .collect();
        let down: Exponent = dmin
            .iter()
            .zip(&net)
            .map(|(d, t)| -d + (-t).max(0))
            .collect();
        LaurentFraction {
            numerator: self.numerator.shift(&up),
            denominator: self.denominator.shift(&down),
        }
    }

    /// Divides numerator and denominator by `factor`, which must divide both exactly.
    pub fn cancel_factor(&self, factor: &LaurentPolynomial) -> Result<Self> {
        Ok(LaurentFraction {
            numerator: self.numerator.exact_div(factor)?,
            denominator: self.denominator.exact_div(factor)?,
        })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &LaurentFraction) -> Result<bool> {
        let lhs = self.numerator.try_mul(&other.denominator)?;
        let rhs = other.numerator.try_mul(&self.denominator)?;
        Ok(lhs == rhs)
    }

    /// `None` at a pole (or where a negative power meets a zero coordinate).
    pub fn evaluate(&self, point: &[BigRational]) -> Option<BigRational> {
        let n = self.numerator.evaluate(point)?;
        let d = self.denominator.evaluate(point)?;
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(n / d)
    }
}

/// A change of variables: every source variable maps to a quotient in the target
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    source: Vec<String>,
    target: Vec<String>,
    images: Vec<LaurentFraction>,
}

impl Substitution {
    pub fn new(
        source: &[String],
        target: &[String],
        images: Vec<(String, LaurentFraction)>,
    ) -> Result<Self> {
        let mut ordered = Vec::with_capacity(source.len());
        for name in source {
            let (_, image) = images
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::IncompleteSubstitution(name.clone()))?;
            if image.vars() != target {
                return Err(Error::VariableMismatch);
            }
            ordered.push(image.clone());
        }
        Ok(Substitution {
            source: source.to_vec(),
            target: target.to_vec(),
            images: ordered,
        })
    }

    /// Parses `(variable, numerator, denominator)` triples.
    pub fn parse(source: &[String], target: &[String], images: &[(&str, &str, &str)]) -> Result<Self> {
        let parsed = images
            .iter()
            .map(|(name, num, den)| {
                let f = LaurentFraction::new(
                    LaurentPolynomial::parse(num, target)?,
                    LaurentPolynomial::parse(den, target)?,
                )?;
                Ok((name.to_string(), f))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, parsed)
    }

    pub fn identity(vars: &[String]) -> Self {
        Substitution {
            source: vars.to_vec(),
            target: vars.to_vec(),
            images: (0..vars.len())
                .map(|i| LaurentFraction::from_polynomial(LaurentPolynomial::var(vars, i)))
                .collect(),
        }
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn image(&self, var: &str) -> Option<&LaurentFraction> {
        self.source
            .iter()
            .position(|v| v == var)
            .map(|i| &self.images[i])
    }
}

struct Composer<'a> {
    images: Vec<&'a LaurentFraction>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    cache: HashMap<(usize, i64), LaurentPolynomial>,
}

impl Composer<'_> {
    /// `n^(e - lo) · d^(hi - e)` for variable `i`: one term's contribution after
    /// clearing the common denominator.
    fn factor(&mut self, i: usize, e: i64) -> LaurentPolynomial {
        if let Some(p) = self.cache.get(&(i, e)) {
            return p.clone();
        }
        let img = self.images[i];
        let p = &img.numerator.pow((e - self.lo[i]) as u32)
            * &img.denominator.pow((self.hi[i] - e) as u32);
        self.cache.insert((i, e), p.clone());
        p
    }

    /// Sum over `terms` of `c · prod_{j >= i} factor(j, e_j)`, grouping by exponent of
    /// variable `i` so shared suffixes are expanded once.
    fn compose(&mut self, terms: &[(Exponent, BigRational)], i: usize, target: &[String]) -> LaurentPolynomial {
        if i == self.images.len() {
            let c = terms.iter().fold(BigRational::from_integer(0.into()), |a, (_, c)| a + c);
            return LaurentPolynomial::constant(target, c);
        }
        let mut groups: Vec<(i64, Vec<(Exponent, BigRational)>)> = Vec::new();
        for (e, c) in terms {
            match groups.iter_mut().find(|(k, _)| *k == e[i]) {
                Some((_, g)) => g.push((e.clone(), c.clone())),
                None => groups.push((e[i], vec![(e.clone(), c.clone())])),
            }
        }
        let mut acc = LaurentPolynomial::zero(target);
        for (k, group) in groups {
            let inner = self.compose(&group, i + 1, target);
            let f = self.factor(i, k);
            acc = &acc + &(&inner * &f);
        }
        acc
    }
}

/// Composes `p` with `sigma`, then cancels common monomials and each factor in
/// `cancel` (every one of which must divide both sides exactly).
pub fn substitute(
    p: &LaurentPolynomial,
    sigma: &Substitution,
    cancel: &[LaurentPolynomial],
) -> Result<LaurentFraction> {
    let images: Vec<&LaurentFraction> = p
        .vars()
        .iter()
        .map(|v| sigma.image(v).ok_or_else(|| Error::IncompleteSubstitution(v.clone())))
        .collect::<Result<_>>()?;
    let n = p.dim();
    let lo: Vec<i64> = p.min_exponents().iter().map(|&x| x.min(0)).collect();
    let hi: Vec<i64> = p.max_exponents().iter().map(|&x| x.max(0)).collect();
    let target = sigma.target();

    let mut composer = Composer {
        images,
        lo: lo.clone(),
        hi: hi.clone(),
        cache: HashMap::new(),
    };
    let terms: Vec<(Exponent, BigRational)> =
        p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let numerator = composer.compose(&terms, 0, target);
    let mut denominator = LaurentPolynomial::one(target);
    for i in 0..n {
        let img = composer.images[i];
        denominator = &denominator * &img.numerator.pow((-lo[i]) as u32);
        denominator = &denominator * &img.denominator.pow(hi[i] as u32);
    }

    let mut out = LaurentFraction::new(numerator, denominator)?.cancel_monomials();
    for f in cancel {
        out = out.cancel_factor(f)?;
    }
    Ok(out)
}

/// True iff `p ∘ sigma == num / den` as rational functions.
pub fn pencil_identity_check(
    p: &LaurentPolynomial,
    sigma: &Substitution,
    num: &LaurentPolynomial,
    den: &LaurentPolynomial,
) -> Result<bool> {
    let composed = substitute(p, sigma, &[])?;
    let claimed = LaurentFraction::new(num.clone(), den.clone())?;
    composed.equals(&claimed)
}
