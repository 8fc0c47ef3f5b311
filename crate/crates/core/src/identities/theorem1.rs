use super::double_sum;
use crate::error::{Error, Result};
use crate::exact::{binomial_gen, certify_poly_identity, Rat};

/// Rejects alpha = 0 and alpha = -1, where `1 + alpha` or `1/alpha` breaks down.
pub fn check_alpha(alpha: &Rat) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::Domain("alpha = 0 outside domain".into()));
    }
    if *alpha == Rat::from(-1) {
        return Err(Error::Domain("alpha = -1 outside domain".into()));
    }
    Ok(())
}

/// `(1 + alpha) m` and `(1 + 1/alpha) n`, the two binomial tops.
pub(crate) fn tops(m: i64, n: i64, alpha: &Rat) -> (Rat, Rat) {
    let inv = alpha.recip();
    ((alpha + 1) * m, (inv + 1) * n)
}

/// `m + n/alpha`, which must be nonzero for the closed form.
fn weight(m: i64, n: i64, alpha: &Rat) -> Rat {
    alpha.recip() * n + m
}

pub fn lhs_theorem1(m: i64, n: i64, alpha: &Rat) -> Rat {
    let (top_m, top_n) = tops(m, n, alpha);
    double_sum(1..=m, 1..=n, |a, b| {
        binomial_gen(&(&top_m - a + b - 1), m - a) * binomial_gen(&(&top_n + a - b - 1), n - b)
    })
}

/// Closed form `mn / ((1+a)(m + n/a)) C((1+a)m, m) C((1+1/a)n, n)`.
pub fn rhs_theorem1(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    if m == 0 && n == 0 {
        return Err(Error::Degenerate("m = n = 0 gives 0/0".into()));
    }
    let w = weight(m, n, alpha);
    if w.is_zero() {
        return Err(Error::Degenerate("m + n/alpha = 0".into()));
    }
    let (top_m, top_n) = tops(m, n, alpha);
    let factor = Rat::from(m * n) / ((alpha + 1) * w);
    Ok(factor * binomial_gen(&top_m, m) * binomial_gen(&top_n, n))
}

fn k_summand(m: i64, n: i64, top_m: &Rat, top_n: &Rat, k: i64) -> Rat {
    binomial_gen(top_m, m - k) * binomial_gen(top_n, n - k)
}

/// `sum_k k C((1+a)m, m-k) C((1+1/a)n, n-k)`.
pub fn single_sum_k(m: i64, n: i64, alpha: &Rat) -> Rat {
    let (top_m, top_n) = tops(m, n, alpha);
    (0..=m.min(n))
        .map(|k| k_summand(m, n, &top_m, &top_n, k) * k)
        .sum()
}

/// Antidifference `s(k)` with `k C(..) C(..) = s(k) - s(k+1)`.
pub fn telescope_term(m: i64, n: i64, alpha: &Rat, k: i64) -> Result<Rat> {
    check_alpha(alpha)?;
    let w = weight(m, n, alpha);
    if w.is_zero() {
        return Err(Error::Degenerate("m + n/alpha = 0".into()));
    }
    let (top_m, top_n) = tops(m, n, alpha);
    let inv = alpha.recip();
    let lead = (&inv * k + m) * (alpha * k + n) / ((alpha + 1) * w);
    Ok(lead * k_summand(m, n, &top_m, &top_n, k))
}

/// Checks the telescoping step at a single `k`.
pub fn telescope_certificate(m: i64, n: i64, alpha: &Rat, k: i64) -> Result<bool> {
    let (top_m, top_n) = tops(m, n, alpha);
    let summand = k_summand(m, n, &top_m, &top_n, k) * k;
    let diff = telescope_term(m, n, alpha, k)? - telescope_term(m, n, alpha, k + 1)?;
    Ok(summand == diff)
}

/// `s(0) - s(min(m,n) + 1)`: the value the certificate telescopes to.
pub fn telescoped_total(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    Ok(telescope_term(m, n, alpha, 0)? - telescope_term(m, n, alpha, m.min(n) + 1)?)
}

/// Certifies the identity for fixed `m, n >= 1` as a polynomial identity in
/// alpha.
///
/// Multiplying both sides by `(1+a)(m a + n) a^(n-1)` leaves polynomials in
/// alpha of degree at most `m + n`, so agreement at `m + n + 1` points is a
/// proof. The points `1..=m+n+1` avoid every excluded alpha.
pub fn theorem1_certify_alpha(m: i64, n: i64) -> Result<bool> {
    if m < 1 || n < 1 {
        return Err(Error::Domain("alpha certification needs m, n >= 1".into()));
    }
    let clear = move |a: &Rat| (a + 1) * (a * m + n) * a.pow((n - 1) as i32);
    let pts: Vec<Rat> = (1..=m + n + 1).map(Rat::from).collect();
    certify_poly_identity(
        (m + n) as usize,
        |a| clear(a) * lhs_theorem1(m, n, a),
        |a| clear(a) * rhs_theorem1(m, n, a).expect("sample points avoid poles"),
        &pts,
    )
}
