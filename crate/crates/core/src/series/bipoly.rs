use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Exact polynomial in `u, v`, keyed by exponent pair. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly(BTreeMap<(u32, u32), Rat>);

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn u() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.0.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.0.iter()
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }

    /// Leading term under lex order with `u > v`.
    fn leading(&self) -> Option<((u32, u32), &Rat)> {
        self.0.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, by: &Rat) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in &self.0 {
            p.add_term(*k, c * by);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(BiPoly::constant(Rat::one()), |acc, _| &acc * self)
    }

    /// Quotient of an exact division; errors if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &BiPoly) -> Result<BiPoly> {
        let (lead_key, lead_c) = divisor
            .leading()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((i, j), c)) = rem.leading() {
            if i < lead_key.0 || j < lead_key.1 {
                return Err(Error::Domain("polynomial division leaves a remainder".into()));
            }
            let step = BiPoly::monomial(c * &lead_inv, i - lead_key.0, j - lead_key.1);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (k, c) in &rhs.0 {
            p.add_term(*k, c.clone());
        }
        p
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&Rat::from(-1))
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero();
        for ((i, j), a) in &self.0 {
            for ((k, l), b) in &rhs.0 {
                p.add_term((i + k, j + l), a * b);
            }
        }
        p
    }
}
