use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::Rat;
use crate::error::{Error, Result};

/// `coeff * pi^(sqrt_pi_exp / 2)`: the exact value of a product of gamma
/// functions at half-integer arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaValue {
    pub coeff: Rat,
    pub sqrt_pi_exp: i64,
}

impl GammaValue {
    pub fn rational(coeff: Rat) -> Self {
        GammaValue { coeff, sqrt_pi_exp: 0 }
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    /// `pi` itself.
    pub fn pi() -> Self {
        GammaValue {
            coeff: Rat::one(),
            sqrt_pi_exp: 2,
        }
    }

    /// The rational value, if the powers of sqrt(pi) have cancelled (or the
    /// coefficient is zero).
    pub fn as_rational(&self) -> Option<&Rat> {
        (self.sqrt_pi_exp == 0 || self.coeff.is_zero()).then_some(&self.coeff)
    }

    pub fn scale(self, by: &Rat) -> Self {
        GammaValue {
            coeff: self.coeff * by,
            sqrt_pi_exp: self.sqrt_pi_exp,
        }
    }
}

impl Mul for GammaValue {
    type Output = GammaValue;
    fn mul(self, rhs: GammaValue) -> GammaValue {
        GammaValue {
            coeff: self.coeff * rhs.coeff,
            sqrt_pi_exp: self.sqrt_pi_exp + rhs.sqrt_pi_exp,
        }
    }
}

impl Div for GammaValue {
    type Output = GammaValue;
    fn div(self, rhs: GammaValue) -> GammaValue {
        GammaValue {
            coeff: self.coeff / rhs.coeff,
            sqrt_pi_exp: self.sqrt_pi_exp - rhs.sqrt_pi_exp,
        }
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrt_pi_exp {
            0 => write!(f, "{}", self.coeff),
            e => write!(f, "{} * pi^({}/2)", self.coeff, e),
        }
    }
}

fn check_arg(z: &Rat) -> Result<()> {
    if !z.is_half_integer() {
        return Err(Error::Domain(format!("gamma argument {z} is not in Z/2")));
    }
    if z.is_nonpositive_integer() {
        return Err(Error::Pole(z.to_string()));
    }
    Ok(())
}

/// Gamma at a single half-integer that is not a pole.
///
/// Walks from 1 or 1/2 using `G(z+1) = z G(z)`, downward via division for
/// negative half-integers.
pub fn gamma(z: &Rat) -> Result<GammaValue> {
    check_arg(z)?;
    let (base, sqrt_pi_exp) = if z.is_integer() {
        (Rat::one(), 0)
    } else {
        (Rat::new(1, 2), 1)
    };
    let steps = (z - &base)
        .to_i64()
        .and_then(|s| s.to_i32().map(i64::from))
        .ok_or_else(|| Error::Domain(format!("gamma argument {z} is too large")))?;
    let mut coeff = Rat::one();
    let mut w = base;
    if steps >= 0 {
        for _ in 0..steps {
            coeff *= &w;
            w += Rat::one();
        }
    } else {
        for _ in 0..(-steps) {
            w -= Rat::one();
            coeff /= &w;
        }
    }
    Ok(GammaValue { coeff, sqrt_pi_exp })
}

/// `prod Gamma(num_i) / prod Gamma(den_j)` over half-integer arguments.
pub fn gamma_product(num: &[Rat], den: &[Rat]) -> Result<GammaValue> {
    let mut acc = GammaValue::one();
    for z in num {
        acc = acc * gamma(z)?;
    }
    for z in den {
        acc = acc / gamma(z)?;
    }
    Ok(acc)
}

/// Like [`gamma_product`], but a pole in the denominator makes the whole
/// product zero (`1/Gamma` is entire). Poles in the numerator are still errors.
pub fn gamma_ratio(num: &[Rat], den: &[Rat]) -> Result<GammaValue> {
    for z in num.iter().chain(den) {
        if !z.is_half_integer() {
            return Err(Error::Domain(format!("gamma argument {z} is not in Z/2")));
        }
    }
    for z in num {
        check_arg(z)?;
    }
    if den.iter().any(Rat::is_nonpositive_integer) {
        return Ok(GammaValue::rational(Rat::zero()));
    }
    gamma_product(num, den)
}

/// `2^e` for an integer exponent, as a rational.
pub fn pow2(e: i64) -> Rat {
    let p = num_traits::pow(BigInt::from(2), e.unsigned_abs() as usize);
    if e >= 0 {
        Rat::from(p)
    } else {
        Rat::from(p).recip()
    }
}
