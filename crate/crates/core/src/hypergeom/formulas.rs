use super::{eval_terminating, HypSpec};
use crate::error::{Error, Result};
use crate::exact::{gamma_ratio, pochhammer, pow2, GammaValue, Rat};

fn poch(x: &Rat, n: i64) -> Rat {
    pochhammer(x, n).expect("nonnegative length")
}

fn neg(n: i64) -> Rat {
    Rat::from(-n)
}

/// `3F2[-N, a, b; d, e; 1] = (e-b)_N / (e)_N 3F2[-N, b, d-a; d, 1+b-e-N; 1]`.
pub fn transform_3f2_check(n: i64, a: &Rat, b: &Rat, d: &Rat, e: &Rat) -> Result<bool> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let e_n = poch(e, n);
    if e_n.is_zero() {
        return Err(Error::LowerParamPole {
            param: e.to_string(),
            terminate: n as u64,
        });
    }
    let left = eval_terminating(&HypSpec::at_one(vec![neg(n), a.clone(), b.clone()], vec![d.clone(), e.clone()]))?;
    let right_series = eval_terminating(&HypSpec::at_one(
        vec![neg(n), b.clone(), d - a],
        vec![d.clone(), b - e - n + 1],
    ))?;
    Ok(left == poch(&(e - b), n) / e_n * right_series)
}

/// Right side `(1+s+sN)_N b (N+1) / ((1+s(b+N))_N (b+N))` of the
/// Gessel-Stanton evaluation.
pub fn gessel_stanton_rhs(n: i64, b: &Rat, s: &Rat) -> Result<Rat> {
    let den = poch(&(s * (b + n) + 1), n) * (b + n);
    if den.is_zero() {
        return Err(Error::Domain(format!("Gessel-Stanton denominator vanishes at N={n}, b={b}, s={s}")));
    }
    Ok(poch(&(s * n + s + 1), n) * b * (n + 1) / den)
}

/// `3F2[-sb+s+1, b-1, -N; b+1, s(-N-b)-N; 1]` against its closed form.
pub fn gessel_stanton_check(n: i64, b: &Rat, s: &Rat) -> Result<bool> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let spec = HypSpec::at_one(
        vec![-(s * b) + s + 1, b - 1, neg(n)],
        vec![b + 1, s * (-b - n) - n],
    );
    Ok(eval_terminating(&spec)? == gessel_stanton_rhs(n, b, s)?)
}

/// `(c-b)_N / (c)_N`, cross-checked against the `2F1[-N, b; c; 1]` series.
pub fn chu_vandermonde(n: i64, b: &Rat, c: &Rat) -> Result<Rat> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let c_n = poch(c, n);
    if c_n.is_zero() {
        return Err(Error::LowerParamPole {
            param: c.to_string(),
            terminate: n as u64,
        });
    }
    let closed = poch(&(c - b), n) / c_n;
    let series = eval_terminating(&HypSpec::at_one(vec![neg(n), b.clone()], vec![c.clone()]))?;
    if closed != series {
        return Err(Error::Mismatch {
            what: format!("Chu-Vandermonde at N={n}, b={b}, c={c}"),
            left: closed.to_string(),
            right: series.to_string(),
        });
    }
    Ok(closed)
}

fn rational_value(v: GammaValue, what: &str) -> Result<Rat> {
    v.as_rational()
        .cloned()
        .ok_or_else(|| Error::Domain(format!("{what}: sqrt(pi) powers do not cancel ({v})")))
}

/// Gamma-product side of Dixon's formula for `3F2[a, b, c; 1+a-b, 1+a-c; 1]`.
pub fn dixon_rhs(a: &Rat, b: &Rat, c: &Rat) -> Result<Rat> {
    let one = Rat::one();
    let half_a = a / 2;
    let num = [
        &one + a - b,
        &one + a - c,
        &one + &half_a,
        &one + &half_a - b - c,
    ];
    let den = [&one + a, &one + &half_a - b, &one + &half_a - c, &one + a - b - c];
    rational_value(gamma_ratio(&num, &den)?, "Dixon")
}

pub fn dixon_check(a: &Rat, b: &Rat, c: &Rat) -> Result<bool> {
    let one = Rat::one();
    let spec = HypSpec::at_one(vec![a.clone(), b.clone(), c.clone()], vec![&one + a - b, &one + a - c]);
    let left = eval_terminating(&spec)?;
    Ok(left == dixon_rhs(a, b, c)?)
}

/// Gamma-product side of Whipple's formula for `3F2[a, 1-a, c; d, 1+2c-d; 1]`:
///
/// `2^(1-2c) pi G(d) G(1+2c-d) / (G(1/2+a/2+c-d/2) G(a/2+d/2) G(1-a/2+c-d/2) G(1/2-a/2+d/2))`
pub fn whipple_rhs(a: &Rat, c: &Rat, d: &Rat) -> Result<Rat> {
    let two_c = c * 2;
    let exp = (Rat::one() - &two_c)
        .to_i64()
        .ok_or_else(|| Error::Domain(format!("2^(1-2c) is irrational for c = {c}")))?;
    let half = Rat::new(1, 2);
    let (ha, hd) = (a / 2, d / 2);
    let num = [d.clone(), &two_c - d + 1];
    let den = [
        &half + &ha + c - &hd,
        &ha + &hd,
        Rat::one() - &ha + c - &hd,
        &half - &ha + &hd,
    ];
    let v = gamma_ratio(&num, &den)? * GammaValue::pi();
    Ok(rational_value(v, "Whipple")? * pow2(exp))
}

pub fn whipple_check(a: &Rat, c: &Rat, d: &Rat) -> Result<bool> {
    let one = Rat::one();
    let spec = HypSpec::at_one(vec![a.clone(), &one - a, c.clone()], vec![d.clone(), c * 2 - d + 1]);
    let left = eval_terminating(&spec)?;
    Ok(left == whipple_rhs(a, c, d)?)
}
