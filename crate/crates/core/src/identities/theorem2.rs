use super::double_sum;
use super::theorem1::{check_alpha, tops};
use crate::error::{Error, Result};
use crate::exact::{binomial_gen, Rat};

/// Both double sums; either range may be empty.
pub fn lhs_theorem2(m: i64, n: i64, r: i64, alpha: &Rat) -> Rat {
    let (top_m, top_n) = tops(m, n, alpha);
    let term = |low_m: i64, low_n: i64| {
        let (top_m, top_n) = (&top_m, &top_n);
        move |a: i64, b: i64| {
            binomial_gen(&(top_m - a + b - 1), low_m - a)
                * binomial_gen(&(top_n + a - b - 1), low_n - b)
        }
    };
    let inner = double_sum(0..=m - r - 2, 0..=n - r - 2, term(m - r - 2, n - r - 2));
    let outer = double_sum(0..=m + r, 0..=n + r, term(m + r, n + r));
    inner + outer
}

pub fn rhs_theorem2(m: i64, n: i64, r: i64, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let (top_m, top_n) = tops(m, n, alpha);
    let main = if m * n == 0 {
        Rat::zero()
    } else {
        let w = alpha.recip() * n + m;
        if w.is_zero() {
            return Err(Error::Degenerate("m + n/alpha = 0".into()));
        }
        Rat::from(2 * m * n) / ((alpha + 1) * w) * binomial_gen(&top_m, m) * binomial_gen(&top_n, n)
    };
    let band: Rat = (-r..=r)
        .map(|k| binomial_gen(&top_m, m - k) * binomial_gen(&top_n, n - k) * (r - k.abs() + 1))
        .sum();
    Ok(main + band)
}
