use std::ops::{Add, Mul, Sub};

use super::LaurentSeries;
use crate::exact::Rat;

/// Truncated bivariate Laurent series on a box of exponents
/// `[min_x, trunc_x] x [min_y, trunc_y]`, stored densely.
#[derive(Clone, Debug)]
pub struct BiSeries {
    min: (i64, i64),
    trunc: (i64, i64),
    coeffs: Vec<Rat>,
}

impl BiSeries {
    pub fn zeros(min: (i64, i64), trunc: (i64, i64)) -> Self {
        assert!(trunc.0 >= min.0 && trunc.1 >= min.1, "empty coefficient box");
        let len = ((trunc.0 - min.0 + 1) * (trunc.1 - min.1 + 1)) as usize;
        BiSeries {
            min,
            trunc,
            coeffs: vec![Rat::zero(); len],
        }
    }

    pub fn constant(c: Rat, trunc: (i64, i64)) -> Self {
        let mut s = Self::zeros((0, 0), trunc);
        s.set(0, 0, c);
        s
    }

    /// `a(x) * b(y)`.
    pub fn outer(a: &LaurentSeries, b: &LaurentSeries) -> Self {
        let mut s = Self::zeros(
            (a.min_order(), b.min_order()),
            (a.trunc_order(), b.trunc_order()),
        );
        for (i, ca) in a.coeffs() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs() {
                s.set(i, j, ca * cb);
            }
        }
        s
    }

    pub fn min(&self) -> (i64, i64) {
        self.min
    }

    pub fn trunc(&self) -> (i64, i64) {
        self.trunc
    }

    fn width(&self) -> usize {
        (self.trunc.1 - self.min.1 + 1) as usize
    }

    fn index(&self, i: i64, j: i64) -> usize {
        (i - self.min.0) as usize * self.width() + (j - self.min.1) as usize
    }

    /// Coefficient of `x^i y^j`; zero below the box, panics above it.
    pub fn coeff(&self, i: i64, j: i64) -> Rat {
        assert!(
            i <= self.trunc.0 && j <= self.trunc.1,
            "x^{i} y^{j} is beyond the truncation {:?}",
            self.trunc
        );
        if i < self.min.0 || j < self.min.1 {
            Rat::zero()
        } else {
            self.coeffs[self.index(i, j)].clone()
        }
    }

    fn set(&mut self, i: i64, j: i64, c: Rat) {
        let k = self.index(i, j);
        self.coeffs[k] = c;
    }

    /// Known exponents in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &Rat)> {
        let (min, w) = (self.min, self.width());
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (min.0 + (k / w) as i64, min.1 + (k % w) as i64, c))
    }

    pub fn truncate(&self, trunc: (i64, i64)) -> Self {
        assert!(trunc.0 <= self.trunc.0 && trunc.1 <= self.trunc.1);
        let mut s = Self::zeros(self.min, trunc);
        for (i, j, c) in self.terms() {
            if i <= trunc.0 && j <= trunc.1 {
                s.set(i, j, c.clone());
            }
        }
        s
    }

    pub fn scale(&self, by: &Rat) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
            ..self.clone()
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(Rat, Rat) -> Rat) -> Self {
        let min = (self.min.0.min(other.min.0), self.min.1.min(other.min.1));
        let trunc = (self.trunc.0.min(other.trunc.0), self.trunc.1.min(other.trunc.1));
        let mut s = Self::zeros(min, trunc);
        for i in min.0..=trunc.0 {
            for j in min.1..=trunc.1 {
                s.set(i, j, f(self.coeff(i, j), other.coeff(i, j)));
            }
        }
        s
    }

    /// Inverse of a series with nonzero constant term and no negative powers.
    pub fn inverse(&self) -> Self {
        assert!(self.min == (0, 0), "inverse needs a power series");
        let c00 = self.coeff(0, 0);
        assert!(!c00.is_zero(), "constant term must be invertible");
        let inv0 = c00.recip();
        let (tx, ty) = self.trunc;
        let mut b = Self::zeros((0, 0), self.trunc);
        for i in 0..=tx {
            for j in 0..=ty {
                let mut acc = if (i, j) == (0, 0) { Rat::one() } else { Rat::zero() };
                for k in 0..=i {
                    for l in 0..=j {
                        if (k, l) == (0, 0) {
                            continue;
                        }
                        let a = &self.coeffs[self.index(k, l)];
                        if !a.is_zero() {
                            acc -= a * &b.coeffs[b.index(i - k, j - l)];
                        }
                    }
                }
                b.set(i, j, acc * &inv0);
            }
        }
        b
    }

    pub fn powi(&self, k: u32) -> Self {
        assert!(k >= 1);
        (1..k).fold(self.clone(), |acc, _| &acc * self)
    }

    /// `x d/dx`: multiplies the coefficient of `x^i y^j` by `i`.
    pub fn x_deriv(&self) -> Self {
        let mut s = self.clone();
        for k in 0..s.coeffs.len() {
            let i = s.min.0 + (k / s.width()) as i64;
            s.coeffs[k] = &s.coeffs[k] * i;
        }
        s
    }

    /// `y d/dy`.
    pub fn y_deriv(&self) -> Self {
        let mut s = self.clone();
        for k in 0..s.coeffs.len() {
            let j = s.min.1 + (k % s.width()) as i64;
            s.coeffs[k] = &s.coeffs[k] * j;
        }
        s
    }

    /// Lines `m n p/q` for every exponent pair with `m, n >= from`.
    pub fn dump_lines(&self, from: (i64, i64)) -> Vec<String> {
        self.terms()
            .filter(|(i, j, _)| *i >= from.0 && *j >= from.1)
            .map(|(i, j, c)| format!("{i} {j} {c}"))
            .collect()
    }
}

/// Equal when both are known to the same order and agree on every
/// coefficient; leading zeros inside the box do not matter.
impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.trunc != other.trunc {
            return false;
        }
        let lo = (self.min.0.min(other.min.0), self.min.1.min(other.min.1));
        (lo.0..=self.trunc.0)
            .all(|i| (lo.1..=self.trunc.1).all(|j| self.coeff(i, j) == other.coeff(i, j)))
    }
}

impl Eq for BiSeries {}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let min = (self.min.0 + rhs.min.0, self.min.1 + rhs.min.1);
        let trunc = (
            (self.trunc.0 + rhs.min.0).min(rhs.trunc.0 + self.min.0),
            (self.trunc.1 + rhs.min.1).min(rhs.trunc.1 + self.min.1),
        );
        let mut out = BiSeries::zeros(min, trunc);
        let rhs_terms: Vec<_> = rhs.terms().filter(|(_, _, c)| !c.is_zero()).collect();
        for (i, j, a) in self.terms() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in &rhs_terms {
                let (p, q) = (i + k, j + l);
                if p <= trunc.0 && q <= trunc.1 {
                    let idx = out.index(p, q);
                    out.coeffs[idx] += a * *b;
                }
            }
        }
        out
    }
}
