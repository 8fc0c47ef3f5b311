//! The hypergeometric route to Theorem 1: the left side as an `a`-sum of
//! 3F2's, the 3F2 transformation, the collapse to a single 3F2 and its
//! Gessel-Stanton evaluation.

use super::formulas::gessel_stanton_rhs;
use super::{eval_terminating, HypSpec};
use crate::error::{Error, Result};
use crate::exact::{binomial_gen, pochhammer, Rat};
use crate::identities::check_alpha;

fn poch(x: &Rat, n: i64) -> Rat {
    pochhammer(x, n).expect("nonnegative length")
}

fn pole(what: String) -> Error {
    Error::PipelinePole(what)
}

fn eval(spec: &HypSpec, stage: &str) -> Result<Rat> {
    eval_terminating(spec).map_err(|e| match e {
        Error::LowerParamPole { param, .. } => pole(format!("{stage}: lower parameter {param}")),
        other => other,
    })
}

fn check(m: i64, n: i64, alpha: &Rat) -> Result<()> {
    check_alpha(alpha)?;
    if m < 1 || n < 1 {
        return Err(Error::Domain("hypergeometric route needs m, n >= 1".into()));
    }
    Ok(())
}

struct Tops {
    m_top: Rat,
    n_top: Rat,
    inv: Rat,
}

fn tops(m: i64, n: i64, alpha: &Rat) -> Tops {
    let inv = alpha.recip();
    Tops {
        m_top: (alpha + 1) * m,
        n_top: (&inv + 1) * n,
        inv,
    }
}

/// `b = k + 1` rewritten as a `3F2[1-n, 1, (1+a)m+1-a; am+1, -(1+1/a)n-a+2; 1]`
/// for each `a`.
pub fn second_proof_stage_one(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    check(m, n, alpha)?;
    let t = tops(m, n, alpha);
    let mut total = Rat::zero();
    for a in 1..=m {
        let spec = HypSpec::at_one(
            vec![Rat::from(1 - n), Rat::one(), &t.m_top + 1 - a],
            vec![alpha * m + 1, -&t.n_top - a + 2],
        );
        let lead = binomial_gen(&(&t.m_top - a), m - a) * binomial_gen(&(&t.n_top + a - 2), n - 1);
        total += lead * eval(&spec, &format!("stage one, a = {a}"))?;
    }
    Ok(total)
}

/// Stage one after the 3F2 transformation.
pub fn second_proof_stage_two(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    check(m, n, alpha)?;
    let t = tops(m, n, alpha);
    let shifted = -((alpha + 1) * (&t.inv * n + m)) + 1;
    let num = poch(&shifted, n - 1);
    let mut total = Rat::zero();
    for a in 1..=m {
        let den = poch(&(-&t.n_top - a + 2), n - 1);
        if den.is_zero() {
            return Err(pole(format!("(-(1+1/alpha)n - {a} + 2)_{}", n - 1)));
        }
        let spec = HypSpec::at_one(
            vec![Rat::from(1 - n), &t.m_top + 1 - a, alpha * m],
            vec![alpha * m + 1, &t.m_top + &t.inv * n + 1],
        );
        let lead = binomial_gen(&(&t.m_top - a), m - a) * binomial_gen(&(&t.n_top + a - 2), n - 1);
        total += lead * &num / den * eval(&spec, &format!("stage two, a = {a}"))?;
    }
    Ok(total)
}

/// The single 3F2 left after exchanging the `a`- and `k`-sums:
/// `3F2[1-n, am, (1+a)m+1; am+2, (1+a)m+n/a+1; 1]`.
pub fn chain_3f2(m: i64, n: i64, alpha: &Rat) -> HypSpec {
    let t = tops(m, n, alpha);
    HypSpec::at_one(
        vec![Rat::from(1 - n), alpha * m, &t.m_top + 1],
        vec![alpha * m + 2, &t.m_top + &t.inv * n + 1],
    )
}

/// Everything in front of the final 3F2.
fn chain_prefactor(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    let t = tops(m, n, alpha);
    let den = poch(&(Rat::from(2) - &t.n_top), n - 1);
    if den.is_zero() {
        return Err(pole(format!("(2 - (1+1/alpha)n)_{}", n - 1)));
    }
    let am1 = alpha * m + 1;
    if am1.is_zero() {
        return Err(pole("alpha m + 1".into()));
    }
    let shifted = -((alpha + 1) * (&t.inv * n + m)) + 1;
    Ok(binomial_gen(&t.m_top, m) * binomial_gen(&(&t.n_top - 2), n - 1) * poch(&shifted, n - 1) / den
        * Rat::from(m)
        / am1)
}

/// The left side of Theorem 1 computed through the hypergeometric pipeline,
/// summing the final 3F2 term by term.
pub fn second_proof_chain(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    check(m, n, alpha)?;
    let pre = chain_prefactor(m, n, alpha)?;
    Ok(pre * eval(&chain_3f2(m, n, alpha), "final 3F2")?)
}

/// Same pipeline, closing the final 3F2 with Gessel-Stanton at
/// `N = n - 1, b = alpha m + 1, s = -1 - 1/alpha`.
pub fn second_proof_chain_gessel_stanton(m: i64, n: i64, alpha: &Rat) -> Result<Rat> {
    check(m, n, alpha)?;
    let pre = chain_prefactor(m, n, alpha)?;
    let b = alpha * m + 1;
    let s = -(alpha.recip() + 1);
    let closed = gessel_stanton_rhs(n - 1, &b, &s).map_err(|_| pole("Gessel-Stanton denominator".into()))?;
    Ok(pre * closed)
}

/// Dixon parameters `(a, b, c)` matching [`chain_3f2`] at alpha = 1:
/// `a = 2m + 1, b = m, c = 1 - n`.
pub fn dixon_params_at_alpha_one(m: i64, n: i64) -> (Rat, Rat, Rat) {
    (Rat::from(2 * m + 1), Rat::from(m), Rat::from(1 - n))
}

/// Whipple parameters `(a, c, d)` matching [`chain_3f2`] when `alpha m = n`
/// (in particular m = n at alpha = 1): `a = 1 - n, c = (1+alpha)m + 1,
/// d = alpha m + 2`. `None` when the upper pair does not sum to 1.
pub fn whipple_params_at_balanced(m: i64, n: i64, alpha: &Rat) -> Option<(Rat, Rat, Rat)> {
    if alpha * m != Rat::from(n) {
        return None;
    }
    Some((Rat::from(1 - n), (alpha + 1) * m + 1, alpha * m + 2))
}
