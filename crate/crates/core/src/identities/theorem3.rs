use super::double_sum;
use crate::error::{Error, Result};
use crate::exact::{binomial_gen, certify_poly_identity, Rat};

pub fn lhs_theorem3(m: i64, n: i64, x: &Rat) -> Rat {
    double_sum(1..=m, 1..=n, |a, b| {
        binomial_gen(&(x + m - a + b - 1), n + b - 1) * binomial_gen(&(x + a - b - 1), n - b)
    })
}

/// `mn / (2x + m) C(2x + m, 2n)`.
pub fn rhs_theorem3(m: i64, n: i64, x: &Rat) -> Result<Rat> {
    let y = x * 2 + m;
    if y.is_zero() {
        return Err(Error::Domain("2x + m = 0".into()));
    }
    Ok(Rat::from(m * n) / &y * binomial_gen(&y, 2 * n))
}

/// Certifies the identity as a polynomial identity in `x`.
///
/// Both sides have degree at most `2n` in `x` (the right side because
/// `C(y, 2n) / y = C(y - 1, 2n - 1) / (2n)`), so `2n + 1` agreeing points
/// with `2x + m != 0` are a proof.
pub fn theorem3_certify(m: i64, n: i64) -> Result<bool> {
    if m < 1 || n < 1 {
        return Err(Error::Domain("certification needs m, n >= 1".into()));
    }
    let points: Vec<Rat> = (1..=2 * n + 1).map(Rat::from).collect();
    certify_poly_identity(
        (2 * n) as usize,
        |x| lhs_theorem3(m, n, x),
        |x| rhs_theorem3(m, n, x).expect("positive sample points"),
        &points,
    )
}

fn reflected_summand(m: i64, n: i64, x: &Rat) -> impl Fn(i64, i64) -> Rat + '_ {
    move |a, b| binomial_gen(&(x + a - 1), n + b - 1) * binomial_gen(&(x + m - a), n - b)
}

/// The shifted form obtained by `x -> -x - m + n`, times two.
pub fn doub_xab_lhs(m: i64, n: i64, x: &Rat) -> Rat {
    double_sum(1..=m, 1..=n, reflected_summand(m, n, x)) * 2
}

pub fn doub_xab_rhs(m: i64, n: i64, x: &Rat) -> Rat {
    binomial_gen(&(x * 2 + m - 1), 2 * n - 1) * m
}

/// Checks the three steps of the shifted proof: the doubled identity itself,
/// the reflection `a -> m + 1 - a, b -> 1 - b` onto `b in [1 - n, 0]`, and
/// the full range `b in [1 - n, n]` summing by Chu-Vandermonde to
/// `m C(2x + m - 1, 2n - 1)`.
pub fn doub_xab_check(m: i64, n: i64, x: &Rat) -> bool {
    let summand = reflected_summand(m, n, x);
    let upper = double_sum(1..=m, 1..=n, &summand);
    let lower = double_sum(1..=m, 1 - n..=0, |a, b| {
        binomial_gen(&(x + m - a), n - b) * binomial_gen(&(x + a - 1), n + b - 1)
    });
    let full = double_sum(1..=m, 1 - n..=n, &summand);
    let rhs = doub_xab_rhs(m, n, x);
    let doubled = &upper * 2 == rhs;
    let reflection = upper == lower;
    let vandermonde = full == rhs;
    doubled && reflection && vandermonde
}

/// `x -> -x - m + n` carries the original identity to the doubled one.
pub fn shift_to_doubled(m: i64, n: i64, x: &Rat) -> Rat {
    -x - m + n
}
