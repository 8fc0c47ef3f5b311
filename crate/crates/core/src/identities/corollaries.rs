//! Integer specializations of the two main theorems and the range-extension
//! steps used to derive them. All tops are integers here.

use super::double_sum;
use crate::exact::{binom, pochhammer, Rat};

fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

fn poch(x: &Rat, n: i64) -> Rat {
    pochhammer(x, n).expect("nonnegative length")
}

pub fn s3_lhs(m: i64, n: i64) -> Rat {
    double_sum(1..=m, 1..=n, |a, b| {
        binom(m + n - a + b - 1, m - a) * binom(m + n + a - b - 1, n - b)
    })
}

pub fn s3_rhs(m: i64, n: i64) -> Rat {
    ratio(m * n, 2 * (m + n)) * binom(m + n, m).pow(2)
}

pub fn s4_lhs(m: i64, n: i64) -> Rat {
    double_sum(1..=m - 2, 1..=n - 2, |a, b| {
        binom(m + n + a - b - 1, m + a + 1) * binom(m + n - a + b - 1, n + b + 1)
    })
}

pub fn s4_rhs(m: i64, n: i64) -> Rat {
    let c = binom(m + n, m);
    c.pow(2) + binom(m + n, m - 1) * binom(m + n, n - 1) + ratio(m * n, 2 * (m + n)) * c.pow(2)
        - binom(2 * m + 2 * n, 2 * n)
}

/// The `pqmn / ((p+q)(m+n)) C(pm+qm, pm) C(pn+qn, pn)` term shared by the
/// first corollary family.
pub fn cor1_rhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    ratio(p * q * m * n, (p + q) * (m + n)) * binom(p * m + q * m, p * m) * binom(p * n + q * n, p * n)
}

fn cor1_term(p: i64, q: i64, m: i64, n: i64) -> impl Fn(i64, i64) -> Rat {
    move |a, b| binom(p * m + q * m - a + b - 1, p * m - a) * binom(p * n + q * n + a - b - 1, q * n - b)
}

pub fn cor1_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    double_sum(1..=p * m, 1..=q * n, cor1_term(p, q, m, n))
}

pub fn cor1_exchanged_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    double_sum(1..=p * m, 1..=q * n, |a, b| {
        binom(p * m + q * m - a + b - 1, b - 1) * binom(p * n + q * n + a - b - 1, a - 1)
    })
}

pub fn cor1_exchanged_rhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    ratio(p * q * m * n, (p + q) * (m + n)) * binom(p * m + p * n, p * m) * binom(q * m + q * n, q * m)
}

/// `a` running over `[1 - pn, pm]`.
pub fn chu_full_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    double_sum(1 - p * n..=p * m, 1..=q * n, cor1_term(p, q, m, n))
}

pub fn chu_full_rhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    ratio(p * q * n, p + q) * binom(p * m + q * m + p * n + q * n, p * m + p * n)
}

/// The `a <= 0` half of [`chu_full_lhs`].
pub fn chu_negative_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    double_sum(1 - p * n..=0, 1..=q * n, cor1_term(p, q, m, n))
}

pub fn chu_negative_rhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    chu_full_rhs(p, q, m, n) - cor1_rhs(p, q, m, n)
}

/// [`chu_negative_lhs`] after `a -> 1 - a`.
pub fn chu_reflected_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    double_sum(1..=p * n, 1..=q * n, |a, b| {
        binom(p * m + q * m + a + b - 2, p * m + a - 1) * binom(p * n + q * n - a - b, q * n - b)
    })
}

/// [`chu_reflected_lhs`] divided through by `C(pm+qm, pm)`.
pub fn cor1_pochhammer_lhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    let top = Rat::from(p * m + q * m + 1);
    let (pm1, qm1) = (Rat::from(p * m + 1), Rat::from(q * m + 1));
    double_sum(1..=p * n, 1..=q * n, |a, b| {
        poch(&top, a + b - 2) / (poch(&pm1, a - 1) * poch(&qm1, b - 1))
            * binom(p * n + q * n - a - b, q * n - b)
    })
}

pub fn cor1_pochhammer_rhs(p: i64, q: i64, m: i64, n: i64) -> Rat {
    let top = Rat::from(p * m + q * m + 1);
    let (pm1, qm1) = (Rat::from(p * m + 1), Rat::from(q * m + 1));
    Rat::from(p * q * n) * poch(&top, p * n + q * n)
        / (Rat::from(p + q) * poch(&pm1, p * n) * poch(&qm1, q * n))
        - ratio(p * q * m * n, (p + q) * (m + n)) * binom(p * n + q * n, p * n)
}

pub fn cor2_lhs(m: i64, n: i64, x: &Rat) -> Rat {
    let top = x * (m + n) + 1;
    let (mx1, nx1) = (x * m + 1, x * n + 1);
    double_sum(1..=m, 1..=n, |a, b| {
        poch(&top, a + b - 2) / (poch(&mx1, a - 1) * poch(&nx1, b - 1)) * binom(m + n - a - b, m - a)
    })
}

pub fn cor2_rhs(m: i64, n: i64, x: &Rat) -> Rat {
    let top = x * (m + n) + 1;
    let (mx1, nx1) = (x * m + 1, x * n + 1);
    Rat::from(m * n) * poch(&top, m + n) / (Rat::from(m + n) * poch(&mx1, m) * poch(&nx1, n))
        - x * (m * n) / ((x + 1) * (m + n)) * binom(m + n, m)
}

/// The large-x limit of the second corollary.
pub fn cor3_lhs(m: i64, n: i64) -> Rat {
    let (mr, nr, s) = (Rat::from(m), Rat::from(n), Rat::from(m + n));
    double_sum(1..=m, 1..=n, |a, b| {
        binom(m + n - a - b, m - a) * s.pow((a + b - 2) as i32)
            / (mr.pow((a - 1) as i32) * nr.pow((b - 1) as i32))
    })
}

pub fn cor3_rhs(m: i64, n: i64) -> Rat {
    let (mr, nr, s) = (Rat::from(m), Rat::from(n), Rat::from(m + n));
    s.pow((m + n - 1) as i32) / (mr.pow((m - 1) as i32) * nr.pow((n - 1) as i32))
        - ratio(m * n, m + n) * binom(m + n, m)
}

/// First double sum of the `(p, q, r)` family, `a, b >= 1`.
fn pqr_head(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    double_sum(1..=p * m - r - 1, 1..=q * n - r - 1, |a, b| {
        binom(p * m + q * m - a + b - 1, p * m - r - 1 - a)
            * binom(p * n + q * n + a - b - 1, q * n - r - 1 - b)
    })
}

/// Summand of the reflected second sum, shared by the range-split steps.
fn reflected_term(p: i64, q: i64, m: i64, n: i64, r: i64) -> impl Fn(i64, i64) -> Rat {
    move |a, b| binom(p * m + q * m + a - b - 1, p * m + r + a) * binom(p * n + q * n - a + b - 1, q * n + r + b)
}

pub fn pqrsum_lhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    let tail = double_sum(0..=p * m + r, 0..=q * n + r, |a, b| {
        binom(p * m + q * m - a + b - 1, p * m + r - a) * binom(p * n + q * n + a - b - 1, q * n + r - b)
    });
    pqr_head(p, q, m, n, r) + tail
}

pub fn pqrsum_rhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    let band: Rat = (-r..=r)
        .map(|k| binom(p * m + q * m, p * m - k) * binom(p * n + q * n, q * n - k) * (r - k.abs() + 1))
        .sum();
    cor1_rhs(p, q, m, n) * 2 + band
}

/// Second sum over `a, b <= 0`.
fn pm_r_quadrant(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    double_sum(-p * m - r..=0, -q * n - r..=0, reflected_term(p, q, m, n, r))
}

/// `a <= 0`, `1 <= b <= qm - r - 1`.
fn pm_r_strip(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    double_sum(-p * m - r..=0, 1..=q * m - r - 1, reflected_term(p, q, m, n, r))
}

/// `1 <= a <= pn - r - 1`, `1 <= b <= qm - r - 1`.
fn pm_r_corner(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    double_sum(1..=p * n - r - 1, 1..=q * m - r - 1, reflected_term(p, q, m, n, r))
}

pub fn pm_r_1_lhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    pqr_head(p, q, m, n, r) + pm_r_quadrant(p, q, m, n, r)
}

pub fn pm_r_2_lhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    pm_r_strip(p, q, m, n, r) + pm_r_quadrant(p, q, m, n, r)
}

pub fn pm_r_2_rhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    ratio((p * m + r + 1) * q, p + q) * binom((p + q) * (m + n), p * m + p * n)
}

pub fn pm_r_3_lhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    pm_r_strip(p, q, m, n, r) + pm_r_corner(p, q, m, n, r)
}

pub fn pm_r_3_rhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    ratio((q * m - r - 1) * p, p + q) * binom((p + q) * (m + n), p * m + p * n)
}

pub fn cor4_lhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    let first = double_sum(1..=p * m - r, 1..=q * n - r, |a, b| {
        binom(p * m + q * m - a + b - 1, p * m - r - a) * binom(p * n + q * n + a - b - 1, q * n - r - b)
    });
    let second = double_sum(1..=p * n - r, 1..=q * m - r, |a, b| {
        binom(p * n + q * n - a + b - 1, p * n - r - a) * binom(p * m + q * m + a - b - 1, q * m - r - b)
    });
    first + second
}

pub fn cor4_rhs(p: i64, q: i64, m: i64, n: i64, r: i64) -> Rat {
    let band: Rat = (1 - r..=r - 1)
        .map(|k| binom(p * m + q * m, p * m - k) * binom(p * n + q * n, q * n - k) * (r - k.abs()))
        .sum();
    cor1_rhs(p, q, m, n) * 2 - binom((p + q) * (m + n), p * m + p * n) * r + band
}

/// Re-derives both sides of the fourth corollary at `r` from the three
/// range-split steps at `r - 1`, by the same bookkeeping the derivation uses:
/// `head + corner = rhs1 - rhs2 + rhs3`.
pub fn cor4_from_steps(p: i64, q: i64, m: i64, n: i64, r: i64) -> (Rat, Rat) {
    let s = r - 1;
    let lhs = pqr_head(p, q, m, n, s) + pm_r_corner(p, q, m, n, s);
    let rhs = pqrsum_rhs(p, q, m, n, s) - pm_r_2_rhs(p, q, m, n, s) + pm_r_3_rhs(p, q, m, n, s);
    (lhs, rhs)
}

pub fn cor5_lhs(m: i64, n: i64, r: i64) -> Rat {
    double_sum(1..=m - r, 1..=n - r, |a, b| {
        binom(2 * m - a + b - 1, m - r - a) * binom(2 * n + a - b - 1, n - r - b)
    })
}

pub fn cor5_rhs(m: i64, n: i64, r: i64) -> Rat {
    let cc = binom(2 * m, m) * binom(2 * n, n);
    let band: Rat = (1..r).map(|k| binom(2 * m, m - k) * binom(2 * n, n - k) * (r - k)).sum();
    ratio(m * n, 2 * (m + n)) * &cc - ratio(r, 2) * binom(2 * m + 2 * n, m + n) + ratio(r, 2) * cc + band
}

pub fn cor6_lhs(m: i64, n: i64, r: i64) -> Rat {
    double_sum(1..=m - r, 1..=n - r, |a, b| {
        binom(m + n - a + b - 1, m - r - a) * binom(m + n + a - b - 1, n - r - b)
    })
}

pub fn cor6_rhs(m: i64, n: i64, r: i64) -> Rat {
    let sq = binom(m + n, m).pow(2);
    let band: Rat = (1..r).map(|k| binom(m + n, m - k) * binom(m + n, n - k) * (r - k)).sum();
    ratio(m * n, 2 * (m + n)) * &sq - ratio(r, 2) * binom(2 * m + 2 * n, 2 * m) + ratio(r, 2) * sq + band
}

pub fn cor5_r2_rhs(m: i64, n: i64) -> Rat {
    let cc = binom(2 * m, m) * binom(2 * n, n);
    &cc + binom(2 * m, m - 1) * binom(2 * n, n - 1) + ratio(m * n, 2 * (m + n)) * cc
        - binom(2 * m + 2 * n, m + n)
}

pub fn cor5_r1_rhs(m: i64, n: i64) -> Rat {
    let cc = binom(2 * m, m) * binom(2 * n, n);
    ratio(1, 2) * &cc + ratio(m * n, 2 * (m + n)) * cc - ratio(1, 2) * binom(2 * m + 2 * n, m + n)
}

pub fn cor6_r1_rhs(m: i64, n: i64) -> Rat {
    let sq = binom(m + n, m).pow(2);
    ratio(1, 2) * &sq + ratio(m * n, 2 * (m + n)) * sq - ratio(1, 2) * binom(2 * m + 2 * n, 2 * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::identities::theorem1::{lhs_theorem1, rhs_theorem1};
    use crate::identities::theorem2::{lhs_theorem2, rhs_theorem2};

    #[test]
    fn symmetric_examples() {
        assert_eq!(s3_lhs(2, 1), Rat::from(3));
        assert_eq!(s3_rhs(2, 1), Rat::from(3));
        assert_eq!(s4_lhs(3, 3), Rat::one());
        assert_eq!(s4_rhs(3, 3), Rat::from(400 + 225 + 300 - 924));
        // both sides vanish below the nonempty range
        assert_eq!(s4_lhs(2, 2), Rat::zero());
        assert_eq!(s4_rhs(2, 2), Rat::zero());
        assert_eq!(s4_rhs(1, 3), Rat::zero());
    }

    #[test]
    fn s3_is_theorem1_at_ratio_alpha() {
        for m in 1..=8 {
            for n in 1..=8 {
                let a = rat(n, m);
                assert_eq!(s3_lhs(m, n), lhs_theorem1(m, n, &a));
                assert_eq!(s3_rhs(m, n), rhs_theorem1(m, n, &a).unwrap());
            }
        }
    }

    #[test]
    fn cor1_is_theorem1_rescaled() {
        for p in 1..=3 {
            for q in 1..=3 {
                for m in 1..=3 {
                    for n in 1..=3 {
                        let a = rat(q, p);
                        assert_eq!(cor1_lhs(p, q, m, n), lhs_theorem1(p * m, q * n, &a));
                        assert_eq!(cor1_rhs(p, q, m, n), rhs_theorem1(p * m, q * n, &a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pqrsum_is_theorem2_rescaled() {
        for (p, q, m, n, r) in [(1, 2, 2, 1, 0), (2, 3, 1, 2, 1), (3, 1, 2, 2, 2)] {
            let a = rat(q, p);
            assert_eq!(pqrsum_lhs(p, q, m, n, r), lhs_theorem2(p * m, q * n, r, &a));
            assert_eq!(pqrsum_rhs(p, q, m, n, r), rhs_theorem2(p * m, q * n, r, &a).unwrap());
        }
    }

    #[test]
    fn chu_steps_combine_into_cor4() {
        for p in 1..=3 {
            for q in 1..=3 {
                for m in 1..=3 {
                    for n in 1..=3 {
                        for r in 1..=(q * m).min(p * n) {
                            let (l, rr) = cor4_from_steps(p, q, m, n, r);
                            assert_eq!(l, rr);
                            assert_eq!(l, cor4_lhs(p, q, m, n, r));
                            assert_eq!(rr, cor4_rhs(p, q, m, n, r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn range_split_fails_outside_its_domain() {
        // qm - r - 1 < 0: the b-strip is empty and the split no longer covers the support
        assert_ne!(pm_r_2_lhs(1, 1, 1, 1, 1), pm_r_2_rhs(1, 1, 1, 1, 1));
        assert_eq!(pm_r_2_lhs(1, 1, 2, 2, 1), pm_r_2_rhs(1, 1, 2, 2, 1));
    }

    #[test]
    fn specializations_match_parents() {
        for m in 1..=7 {
            for n in 1..=7 {
                assert_eq!(cor5_rhs(m, n, 2), cor5_r2_rhs(m, n));
                assert_eq!(cor5_rhs(m, n, 1), cor5_r1_rhs(m, n));
                assert_eq!(cor6_rhs(m, n, 1), cor6_r1_rhs(m, n));
                assert_eq!(cor6_rhs(m, n, 2), s4_rhs(m, n));
                assert_eq!(cor6_lhs(m, n, 2), s4_lhs(m, n));
            }
        }
    }
}
