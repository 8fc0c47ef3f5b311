use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rat;

/// Truncated Laurent series `sum_{e = min_order}^{trunc_order} c_e x^e + O(x^(trunc_order + 1))`.
#[derive(Clone)]
pub struct LaurentSeries {
    min_order: i64,
    trunc_order: i64,
    coeffs: Vec<Rat>,
}

impl LaurentSeries {
    /// Coefficients for exponents `min_order, min_order + 1, ...`; the last
    /// one sits at `trunc_order`.
    pub fn new(min_order: i64, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        let trunc_order = min_order + coeffs.len() as i64 - 1;
        LaurentSeries {
            min_order,
            trunc_order,
            coeffs,
        }
    }

    pub fn zero(trunc_order: i64) -> Self {
        Self::new(0, vec![Rat::zero(); (trunc_order + 1).max(1) as usize])
    }

    pub fn constant(c: Rat, trunc_order: i64) -> Self {
        let mut s = Self::zero(trunc_order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(trunc_order: i64) -> Self {
        Self::constant(Rat::one(), trunc_order)
    }

    /// The variable itself, `x + O(x^(trunc_order + 1))`.
    pub fn var(trunc_order: i64) -> Self {
        assert!(trunc_order >= 1);
        let mut s = Self::zero(trunc_order);
        s.coeffs[1] = Rat::one();
        s
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    /// Coefficient of `x^e`; zero below `min_order`.
    ///
    /// Panics above `trunc_order`, where nothing is known.
    pub fn coeff(&self, e: i64) -> Rat {
        assert!(e <= self.trunc_order, "x^{e} is beyond the truncation order {}", self.trunc_order);
        if e < self.min_order {
            Rat::zero()
        } else {
            self.coeffs[(e - self.min_order) as usize].clone()
        }
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &Rat)> {
        (self.min_order..).zip(self.coeffs.iter())
    }

    /// Exponent of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs().find(|(_, c)| !c.is_zero()).map(|(e, _)| e)
    }

    /// Drops everything above `trunc_order`.
    pub fn truncate(&self, trunc_order: i64) -> Self {
        assert!(trunc_order <= self.trunc_order && trunc_order >= self.min_order);
        let keep = (trunc_order - self.min_order + 1) as usize;
        Self::new(self.min_order, self.coeffs[..keep].to_vec())
    }

    fn combine(&self, other: &Self, f: impl Fn(Rat, Rat) -> Rat) -> Self {
        let min = self.min_order.min(other.min_order);
        let trunc = self.trunc_order.min(other.trunc_order);
        Self::new(min, (min..=trunc).map(|e| f(self.coeff(e), other.coeff(e))).collect())
    }

    pub fn scale(&self, by: &Rat) -> Self {
        Self::new(self.min_order, self.coeffs.iter().map(|c| c * by).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.min_order + k, self.coeffs.clone())
    }

    /// Multiplicative inverse. A series of valuation `v` inverts to one
    /// starting at `x^-v`, with relative precision unchanged.
    pub fn inverse(&self) -> Self {
        let v = self.valuation().expect("cannot invert a series with no known nonzero term");
        let rel = (self.trunc_order - v) as usize;
        let a: Vec<Rat> = (0..=rel).map(|i| self.coeff(v + i as i64)).collect();
        let lead_inv = a[0].recip();
        let mut b = vec![Rat::zero(); rel + 1];
        b[0] = lead_inv.clone();
        for i in 1..=rel {
            let mut acc = Rat::zero();
            for k in 1..=i {
                if !a[k].is_zero() {
                    acc += &a[k] * &b[i - k];
                }
            }
            b[i] = -(acc * &lead_inv);
        }
        Self::new(-v, b)
    }

    pub fn powi(&self, k: i64) -> Self {
        if k < 0 {
            return self.inverse().powi(-k);
        }
        if k == 0 {
            return LaurentSeries::one((self.trunc_order - self.min_order).max(0));
        }
        let mut result: Option<LaurentSeries> = None;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    Some(r) => &r * &base,
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result.unwrap()
    }

    /// `(1 + self)^beta` for rational `beta`, by the binomial series.
    /// Requires zero constant term and no negative powers.
    pub fn one_plus_pow(&self, beta: &Rat) -> Self {
        assert!(self.min_order >= 0 && self.coeff(0).is_zero(), "binomial series needs valuation >= 1");
        // f = (1+t)^beta solves (1+t) f' = beta t' f, which gives
        // n f_n = sum_{k=1}^{n} (beta k - (n - k)) t_k f_{n-k}.
        let n = self.trunc_order.max(0) as usize;
        let t: Vec<Rat> = (0..=n as i64).map(|e| self.coeff(e)).collect();
        let mut f = vec![Rat::zero(); n + 1];
        f[0] = Rat::one();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                if !t[k].is_zero() {
                    let w = beta * (k as i64) - Rat::from((m - k) as i64);
                    acc += w * &t[k] * &f[m - k];
                }
            }
            f[m] = acc / Rat::from(m as i64);
        }
        Self::new(0, f)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs().map(|(e, c)| c * e).collect::<Vec<_>>();
        if self.min_order == 0 && coeffs.len() > 1 {
            Self::new(0, coeffs[1..].to_vec())
        } else {
            Self::new(self.min_order - 1, coeffs)
        }
    }

    /// `(exponent, coefficient)` lines in the dump format.
    pub fn dump_lines(&self, from: i64) -> Vec<String> {
        self.coeffs()
            .filter(|(e, _)| *e >= from)
            .map(|(e, c)| format!("{e} {c}"))
            .collect()
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.coeffs() {
            if !c.is_zero() {
                write!(f, "{c}*x^{e} + ")?;
            }
        }
        write!(f, "O(x^{})", self.trunc_order + 1)
    }
}

/// Value equality: same truncation order, same coefficients.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.trunc_order == other.trunc_order
            && (self.min_order.min(other.min_order)..=self.trunc_order)
                .all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl Eq for LaurentSeries {}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale(&Rat::from(-1))
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let min = self.min_order + rhs.min_order;
        let trunc = (self.trunc_order + rhs.min_order).min(rhs.trunc_order + self.min_order);
        let mut out = vec![Rat::zero(); (trunc - min + 1) as usize];
        for (i, a) in self.coeffs() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs() {
                let e = i + j;
                if e > trunc {
                    break;
                }
                if !b.is_zero() {
                    out[(e - min) as usize] += a * b;
                }
            }
        }
        LaurentSeries::new(min, out)
    }
}
