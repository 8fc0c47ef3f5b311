//! Generating-function kernels built from `u(x)` and `v(y)`, where
//! `x = (u-1)/u^(1+alpha)` and `y = (v-1)/v^(1+1/alpha)`.

use super::{BiPoly, BiSeries, LaurentSeries};
use crate::error::{Error, Result};
use crate::exact::{binomial_gen, Rat};
use crate::identities::theorem1::rhs_theorem1;

fn check_alpha(alpha: &Rat) -> Result<()> {
    if alpha.is_zero() || *alpha == Rat::from(-1) {
        return Err(Error::Domain(format!("alpha = {alpha} outside domain")));
    }
    Ok(())
}

/// Solves `t = x (1 + t)^exponent` modulo `x^(order+1)` by fixed-point
/// iteration; each pass fixes one more coefficient.
pub fn revert(exponent: &Rat, order: i64) -> LaurentSeries {
    assert!(order >= 1);
    let x = LaurentSeries::var(order);
    let mut t = LaurentSeries::zero(order);
    for _ in 0..order {
        t = (&x * &t.one_plus_pow(exponent)).truncate(order);
    }
    t
}

/// `u(x) - 1`, with `x = t / (1+t)^(1+alpha)`.
pub fn revert_u(alpha: &Rat, order: i64) -> Result<LaurentSeries> {
    if alpha.is_zero() {
        return Err(Error::Domain("alpha = 0 outside domain".into()));
    }
    Ok(revert(&(alpha + 1), order))
}

/// Substitutes `t` back into `t / (1+t)^(1+alpha)`; true iff the result is `x`.
pub fn reversion_holds(alpha: &Rat, t: &LaurentSeries) -> bool {
    let back = t * &t.one_plus_pow(&-(alpha + 1));
    let n = t.trunc_order();
    (0..=n).all(|e| back.coeff(e) == if e == 1 { Rat::one() } else { Rat::zero() })
}

/// `u / (1 + alpha - alpha u)` as a series in `x`, given `t = u - 1`.
pub fn remark_series(alpha: &Rat, t: &LaurentSeries) -> LaurentSeries {
    let one = LaurentSeries::one(t.trunc_order());
    let u = &one + t;
    let den = &one - &t.scale(alpha);
    &u * &den.inverse()
}

/// Coefficient of `x^m` in the remark series equals `C((1+alpha)m, m)`.
pub fn remark_check(alpha: &Rat, order: i64) -> Result<bool> {
    check_alpha(alpha)?;
    let a = remark_series(alpha, &revert_u(alpha, order)?);
    Ok((0..=order).all(|m| a.coeff(m) == binomial_gen(&((alpha + 1) * m), m)))
}

/// `sum_n C(aa + beta n, n) w^n = z^(aa+1) / ((1-beta) z + beta)` with
/// `w = (z-1)/z^beta`, checked through `w^order`.
pub fn classical_gf_check(aa: &Rat, beta: &Rat, order: i64) -> Result<bool> {
    if beta.is_zero() {
        return Err(Error::Domain("beta = 0 outside domain".into()));
    }
    let t = revert(beta, order);
    let one = LaurentSeries::one(order);
    let den = &one + &t.scale(&(Rat::one() - beta));
    let f = &t.one_plus_pow(&(aa + 1)) * &den.inverse();
    Ok((0..=order).all(|n| f.coeff(n) == binomial_gen(&(aa + beta * n), n)))
}

/// The pieces shared by every kernel: `t = u-1`, `s = v-1` and the two
/// remark series `A(x)`, `B(y)`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub alpha: Rat,
    pub order: i64,
    pub t: LaurentSeries,
    pub s: LaurentSeries,
    pub a: LaurentSeries,
    pub b: LaurentSeries,
}

impl Kernel {
    pub fn new(alpha: &Rat, order: i64) -> Result<Self> {
        check_alpha(alpha)?;
        let beta = alpha.recip();
        let t = revert_u(alpha, order)?;
        let s = revert_u(&beta, order)?;
        let a = remark_series(alpha, &t);
        let b = remark_series(&beta, &s);
        Ok(Kernel {
            alpha: alpha.clone(),
            order,
            t,
            s,
            a,
            b,
        })
    }

    fn ab(&self) -> BiSeries {
        BiSeries::outer(&self.a, &self.b)
    }

    /// `(u-1)(v-1)`.
    fn w(&self) -> BiSeries {
        BiSeries::outer(&self.t, &self.s)
    }

    /// `(uv - u - v)^-2 = (1 - w)^-2`.
    fn inv_square(&self) -> BiSeries {
        let n = self.order;
        let inv = (&BiSeries::constant(Rat::one(), (n, n)) - &self.w()).inverse();
        &inv * &inv
    }

    /// `uv (u-1)^k (v-1)^k / (D (uv-u-v)^2)` where `D` is the remark
    /// denominator pair.
    pub fn g_kernel(&self, k: i64) -> BiSeries {
        let tk = BiSeries::outer(&self.t.powi(k), &self.s.powi(k));
        &(&self.ab() * &tk) * &self.inv_square()
    }

    /// `uv (u-1)^k (v-1)^k / D`, no squared factor.
    pub fn middle_kernel(&self, k: i64) -> BiSeries {
        &self.ab() * &BiSeries::outer(&self.t.powi(k), &self.s.powi(k))
    }
}

/// Second construction of `F`: `AB * sum_k k w^k`.
fn f_geometric(k: &Kernel, m: i64) -> BiSeries {
    let w = k.w();
    let mut total = BiSeries::zeros((0, 0), (m, m));
    let mut power = w.clone();
    for j in 1..=m {
        total = &total + &power.scale(&Rat::from(j));
        power = &power * &w;
    }
    &k.ab() * &total
}

/// `F(x,y) = uv(u-1)(v-1) / (D (uv-u-v)^2)` through `x^M y^M`.
pub fn f_closed_form(alpha: &Rat, m: i64) -> Result<BiSeries> {
    if m < 1 {
        return Err(Error::Domain(format!("order {m} < 1")));
    }
    Ok(Kernel::new(alpha, m)?.g_kernel(1).truncate((m, m)))
}

/// Both constructions of `F` agree.
pub fn f_paths_agree(alpha: &Rat, m: i64) -> Result<bool> {
    let k = Kernel::new(alpha, m)?;
    let direct = k.g_kernel(1).truncate((m, m));
    Ok(direct == f_geometric(&k, m).truncate((m, m)))
}

/// Coefficients of `F` are the closed form of the double sum: zero when
/// `mn = 0`. Cells where the closed form is degenerate are skipped.
pub fn f_coefficients_check(alpha: &Rat, m: i64) -> Result<bool> {
    let f = f_closed_form(alpha, m)?;
    for (i, j, c) in f.terms() {
        let want = match rhs_theorem1(i, j, alpha) {
            Ok(v) => v,
            Err(Error::Degenerate(_)) if i > 0 && j > 0 => continue,
            Err(_) => Rat::zero(),
        };
        if *c != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The triple sum defining `G_r`; also valid for negative `r`.
pub fn g_oracle(alpha: &Rat, r: i64, m: i64, n: i64) -> Rat {
    let top_x = (alpha + 1) * m;
    let top_y = (alpha.recip() + 1) * n;
    let mut total = Rat::zero();
    for a in 0..=m + r {
        for b in 0..=n + r {
            let left = binomial_gen(&(&top_x + (b - a - 1)), m + r - a);
            if left.is_zero() {
                continue;
            }
            total += left * binomial_gen(&(&top_y + (a - b - 1)), n + r - b);
        }
    }
    total
}

/// `G_r` as a Laurent series, valid on `[-r, M]^2`.
pub fn g_r_series(alpha: &Rat, r: i64, m: i64) -> Result<BiSeries> {
    let k = Kernel::new(alpha, m + r + 2)?;
    Ok(k.g_kernel(-r).truncate((m, m)))
}

/// Compares `G_r` and `G_{-r-2}` with their triple sums on `[-r, M]^2`.
pub fn g_r_check(alpha: &Rat, r: i64, m: i64) -> Result<bool> {
    if r < 0 || m < r + 1 {
        return Err(Error::Domain(format!("need r >= 0 and M >= r+1, got r={r}, M={m}")));
    }
    let k = Kernel::new(alpha, m + r + 2)?;
    let g = k.g_kernel(-r).truncate((m, m));
    let g_neg = k.g_kernel(r + 2).truncate((m, m));
    for i in -r..=m {
        for j in -r..=m {
            if g.coeff(i, j) != g_oracle(alpha, r, i, j) {
                return Ok(false);
            }
            if g_neg.coeff(i, j) != g_oracle(alpha, -r - 2, i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For `-r <= k <= r`, coefficients of the middle kernel are
/// `C((1+alpha)m, m-k) C((1+1/alpha)n, n-k)` for `m, n >= -r`.
pub fn middle_gf_check(alpha: &Rat, r: i64, m: i64) -> Result<bool> {
    let k = Kernel::new(alpha, m + r + 2)?;
    let top_x = alpha + 1;
    let top_y = alpha.recip() + 1;
    for e in -r..=r {
        let g = k.middle_kernel(e).truncate((m, m));
        for i in -r..=m {
            for j in -r..=m {
                let want = binomial_gen(&(&top_x * i), i - e) * binomial_gen(&(&top_y * j), j - e);
                if g.coeff(i, j) != want {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `[(1+alpha) x d/dx + (1+1/alpha) y d/dy] F = x A'(x) y B'(y)`.
pub fn pde_check(alpha: &Rat, m: i64) -> Result<bool> {
    if m < 2 {
        return Err(Error::Domain(format!("order {m} < 2")));
    }
    let k = Kernel::new(alpha, m)?;
    let f = k.g_kernel(1).truncate((m, m));
    let lhs = &f.x_deriv().scale(&(alpha + 1)) + &f.y_deriv().scale(&(alpha.recip() + 1));
    let rhs = BiSeries::outer(&k.a.derivative().shift(1), &k.b.derivative().shift(1));
    Ok(lhs == rhs.truncate((m, m)))
}

/// `G_r + G_{-r-2} = 2F + sum_{k=-r}^{r} (r - |k| + 1) * middle_k`, with every
/// term multiplied by `L = D (u-1)^r (v-1)^r (uv-u-v)^2` and reduced by exact
/// division to a polynomial in `u, v`.
pub fn routine_identity_check(alpha: &Rat, r: i64) -> Result<bool> {
    check_alpha(alpha)?;
    if r < 0 {
        return Err(Error::Domain(format!("r = {r} < 0")));
    }
    let (u, v) = (BiPoly::u(), BiPoly::v());
    let one = BiPoly::constant(Rat::one());
    let beta = alpha.recip();
    let du = &BiPoly::constant(alpha + 1) - &u.scale(alpha);
    let dv = &BiPoly::constant(&beta + 1) - &v.scale(&beta);
    let d = &du * &dv;
    let uv = &u * &v;
    let um = &u - &one;
    let vm = &v - &one;
    let q = (&(&uv - &u) - &v).pow(2);
    let rr = r as u32;
    let ur = &um.pow(rr) * &vm.pow(rr);
    let l = &(&d * &ur) * &q;

    // Each term is (numerator / denominator) * L.
    let term = |num: &BiPoly, den: &BiPoly| -> Result<BiPoly> { (&l * num).div_exact(den) };
    let uvk = |k: u32| &um.pow(k) * &vm.pow(k);

    let g_r = term(&uv, &(&(&d * &ur) * &q))?;
    let g_neg = term(&(&uv * &uvk(rr + 2)), &(&d * &q))?;
    let f2 = term(&(&uv * &uvk(1)).scale(&Rat::from(2)), &(&d * &q))?;
    let mut rhs = f2;
    for k in -r..=r {
        let weight = Rat::from(r - k.abs() + 1);
        let piece = if k >= 0 {
            term(&(&uv * &uvk(k as u32)), &d)?
        } else {
            term(&uv, &(&d * &uvk((-k) as u32)))?
        };
        rhs = &rhs + &piece.scale(&weight);
    }
    Ok(&g_r + &g_neg == rhs)
}
