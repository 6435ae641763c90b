//! Exact linear algebra over `BigInt` / `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut m: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Divides an integer vector by the gcd of its entries (no-op on the zero vector).
pub fn make_primitive(v: &mut [BigInt]) -> BigInt {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    g
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| y * BigRational::from_integer(x.clone()))
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator<'a>(v: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    v.into_iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Scales a rational vector to integers by `scale` (which must clear all denominators).
pub fn scale_to_int(v: &[BigRational], scale: &BigInt) -> Vec<BigInt> {
    v.iter()
        .map(|x| {
            let y = x * BigRational::from_integer(scale.clone());
            debug_assert!(y.is_integer());
            y.to_integer()
        })
        .collect()
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// An affine coordinate chart on the affine hull of a finite point set.
///
/// Projection keeps the pivot coordinates; it is injective on the affine hull,
/// and `lift` is its inverse there.
#[derive(Debug, Clone)]
pub struct AffineChart {
    origin: Vec<BigRational>,
    pivots: Vec<usize>,
    basis: Vec<Vec<BigRational>>,
}

impl AffineChart {
    pub fn new(points: &[Vec<BigRational>]) -> Self {
        let origin = points[0].clone();
        let diffs: Vec<Vec<BigRational>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let (basis, pivots) = rref(diffs);
        Self {
            origin,
            pivots,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn project(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.pivots.iter().map(|&c| x[c].clone()).collect()
    }

    pub fn lift(&self, y: &[BigRational]) -> Vec<BigRational> {
        let mut x = self.origin.clone();
        for ((yi, &c), row) in y.iter().zip(&self.pivots).zip(&self.basis) {
            let t = yi - &self.origin[c];
            if t.is_zero() {
                continue;
            }
            for (xj, bj) in x.iter_mut().zip(row) {
                *xj += &t * bj;
            }
        }
        x
    }
}

pub fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

pub fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(det(&ints(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(det(&ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), BigInt::zero());
        assert_eq!(
            det(&ints(&[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]])),
            BigInt::from(5)
        );
    }

    #[test]
    fn chart_round_trip() {
        let pts: Vec<Vec<BigRational>> = ints(&[&[0, 0, 1], &[1, 1, 1], &[2, 2, 1]])
            .iter()
            .map(|r| to_rational(r))
            .collect();
        let chart = AffineChart::new(&pts);
        assert_eq!(chart.dim(), 1);
        for p in &pts {
            assert_eq!(&chart.lift(&chart.project(p)), p);
        }
    }
}
