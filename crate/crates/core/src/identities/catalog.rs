use super::corollaries as cor;
use super::theorem1::{check_alpha, lhs_theorem1, rhs_theorem1, single_sum_k, telescoped_total};
use super::theorem2::{lhs_theorem2, rhs_theorem2};
use super::theorem3::{doub_xab_lhs, doub_xab_rhs, lhs_theorem3, rhs_theorem3};
use super::{IdentityDescriptor, Param, ParamSet};
use crate::error::{Error, Result};
use crate::exact::{pochhammer, Rat};
use crate::hypergeom::second_proof_chain;

use Param::*;

const MN: &[Param] = &[M, N];
const MNA: &[Param] = &[M, N, Alpha];
const MNRA: &[Param] = &[M, N, R, Alpha];
const PQMN: &[Param] = &[P, Q, M, N];
const PQMNR: &[Param] = &[P, Q, M, N, R];
const MNR: &[Param] = &[M, N, R];
const MNX: &[Param] = &[M, N, X];

fn at_least(ps: &ParamSet, params: &[Param], min: i64) -> Result<()> {
    for &p in params {
        let v = ps.int(p)?;
        if v < min {
            return Err(Error::Domain(format!("{p} = {v} outside domain (need {p} >= {min})")));
        }
    }
    Ok(())
}

fn not_both_zero(ps: &ParamSet) -> Result<()> {
    if ps.int(M)? == 0 && ps.int(N)? == 0 {
        return Err(Error::Degenerate("m = n = 0 gives 0/0".into()));
    }
    Ok(())
}

fn dom_mn_natural(ps: &ParamSet) -> Result<()> {
    at_least(ps, MN, 0)?;
    not_both_zero(ps)
}

fn dom_mn_positive(ps: &ParamSet) -> Result<()> {
    at_least(ps, MN, 1)
}

fn dom_mnr_positive(ps: &ParamSet) -> Result<()> {
    at_least(ps, MNR, 1)
}

fn alpha_weight_ok(ps: &ParamSet) -> Result<()> {
    let alpha = ps.rational(Alpha)?;
    check_alpha(alpha)?;
    let (m, n) = (ps.int(M)?, ps.int(N)?);
    if m * n != 0 && (alpha.recip() * n + m).is_zero() {
        return Err(Error::Degenerate("m + n/alpha = 0".into()));
    }
    Ok(())
}

fn dom_thm1(ps: &ParamSet) -> Result<()> {
    dom_mn_natural(ps)?;
    alpha_weight_ok(ps)
}

fn dom_chain(ps: &ParamSet) -> Result<()> {
    at_least(ps, MN, 1)?;
    alpha_weight_ok(ps)
}

fn dom_thm2(ps: &ParamSet) -> Result<()> {
    at_least(ps, &[M, N, R], 0)?;
    alpha_weight_ok(ps)
}

fn dom_pqmn(ps: &ParamSet) -> Result<()> {
    at_least(ps, PQMN, 1)
}

fn dom_pqmnr(ps: &ParamSet) -> Result<()> {
    at_least(ps, PQMN, 1)?;
    at_least(ps, &[R], 0)
}

/// The range-split steps need the `b`-strip `[1, qm - r - 1]` and the
/// `a`-strip `[1, pn - r - 1]` to be genuine (possibly empty) tails of the
/// natural support, i.e. `r + 1 <= min(qm, pn)`.
fn dom_range_split(ps: &ParamSet) -> Result<()> {
    dom_pqmnr(ps)?;
    let (p, q, m, n, r) = pqmnr(ps)?;
    if r + 1 > (q * m).min(p * n) {
        return Err(Error::Domain(format!(
            "r = {r} outside domain (need r + 1 <= min(qm, pn) = {})",
            (q * m).min(p * n)
        )));
    }
    Ok(())
}

fn dom_cor4(ps: &ParamSet) -> Result<()> {
    at_least(ps, PQMNR, 1)
}

fn dom_cor2(ps: &ParamSet) -> Result<()> {
    at_least(ps, MN, 1)?;
    let (m, n, x) = (ps.int(M)?, ps.int(N)?, ps.rational(X)?);
    if (x + 1).is_zero() {
        return Err(Error::Domain("x = -1 outside domain".into()));
    }
    for (k, len) in [(m, m), (n, n)] {
        if pochhammer(&(x * k + 1), len)?.is_zero() {
            return Err(Error::Domain(format!("({k}x + 1)_{len} vanishes at x = {x}")));
        }
    }
    Ok(())
}

fn dom_thm3(ps: &ParamSet) -> Result<()> {
    at_least(ps, MN, 1)?;
    if (ps.rational(X)? * 2 + ps.int(M)?).is_zero() {
        return Err(Error::Domain("2x + m = 0 outside domain".into()));
    }
    Ok(())
}

fn mn(ps: &ParamSet) -> Result<(i64, i64)> {
    Ok((ps.int(M)?, ps.int(N)?))
}

fn pqmn(ps: &ParamSet) -> Result<(i64, i64, i64, i64)> {
    Ok((ps.int(P)?, ps.int(Q)?, ps.int(M)?, ps.int(N)?))
}

fn pqmnr(ps: &ParamSet) -> Result<(i64, i64, i64, i64, i64)> {
    Ok((ps.int(P)?, ps.int(Q)?, ps.int(M)?, ps.int(N)?, ps.int(R)?))
}

macro_rules! eval {
    (mn: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (m, n) = mn(ps)?;
            Ok($f(m, n))
        }
        g
    }};
    (mnr: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (m, n) = mn(ps)?;
            Ok($f(m, n, ps.int(R)?))
        }
        g
    }};
    (mnx: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (m, n) = mn(ps)?;
            Ok($f(m, n, ps.rational(X)?))
        }
        g
    }};
    (mna: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (m, n) = mn(ps)?;
            $f(m, n, ps.rational(Alpha)?)
        }
        g
    }};
    (pqmn: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (p, q, m, n) = pqmn(ps)?;
            Ok($f(p, q, m, n))
        }
        g
    }};
    (pqmnr: $f:path) => {{
        fn g(ps: &ParamSet) -> Result<Rat> {
            let (p, q, m, n, r) = pqmnr(ps)?;
            Ok($f(p, q, m, n, r))
        }
        g
    }};
}

fn ok<T>(v: T) -> Result<T> {
    Ok(v)
}

fn thm1_lhs(m: i64, n: i64, a: &Rat) -> Result<Rat> {
    ok(lhs_theorem1(m, n, a))
}

fn kxy_lhs(m: i64, n: i64, a: &Rat) -> Result<Rat> {
    ok(single_sum_k(m, n, a))
}

fn thm2_lhs(ps: &ParamSet) -> Result<Rat> {
    let (m, n) = mn(ps)?;
    Ok(lhs_theorem2(m, n, ps.int(R)?, ps.rational(Alpha)?))
}

fn thm2_rhs(ps: &ParamSet) -> Result<Rat> {
    let (m, n) = mn(ps)?;
    rhs_theorem2(m, n, ps.int(R)?, ps.rational(Alpha)?)
}

fn thm3_rhs(m: i64, n: i64, x: &Rat) -> Rat {
    rhs_theorem3(m, n, x).expect("domain excludes 2x + m = 0")
}

static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "S3",
        params: MN,
        lhs: eval!(mn: cor::s3_lhs),
        rhs: eval!(mn: cor::s3_rhs),
        domain: dom_mn_natural,
        anchor: "Introduction, first motivating identity",
        summary: "sum C(m+n-a+b-1, m-a) C(m+n+a-b-1, n-b) = mn/(2(m+n)) C(m+n, m)^2",
    },
    IdentityDescriptor {
        id: "S4",
        params: MN,
        lhs: eval!(mn: cor::s4_lhs),
        rhs: eval!(mn: cor::s4_rhs),
        domain: dom_mn_natural,
        anchor: "Introduction, second motivating identity (also the r = 2 case of the m+n corollary)",
        summary: "a, b in [1, m-2] x [1, n-2]; closed form in C(m+n, m), C(2m+2n, 2n)",
    },
    IdentityDescriptor {
        id: "thm1",
        params: MNA,
        lhs: eval!(mna: thm1_lhs),
        rhs: eval!(mna: rhs_theorem1),
        domain: dom_thm1,
        anchor: "Theorem 1",
        summary: "the alpha double sum = mn/((1+a)(m+n/a)) C((1+a)m, m) C((1+1/a)n, n)",
    },
    IdentityDescriptor {
        id: "kxyalpha",
        params: MNA,
        lhs: eval!(mna: kxy_lhs),
        rhs: eval!(mna: rhs_theorem1),
        domain: dom_thm1,
        anchor: "Theorem 1, first proof: the reduced single sum over k",
        summary: "sum_k k C((1+a)m, m-k) C((1+1/a)n, n-k) = Theorem 1 closed form",
    },
    IdentityDescriptor {
        id: "telescope",
        params: MNA,
        lhs: eval!(mna: kxy_lhs),
        rhs: eval!(mna: telescoped_total),
        domain: dom_thm1,
        anchor: "Theorem 1, first proof: telescoping over k",
        summary: "the k-sum equals s(0) - s(min(m,n)+1) of the antidifference",
    },
    IdentityDescriptor {
        id: "thm1-3f2",
        params: MNA,
        lhs: eval!(mna: second_proof_chain),
        rhs: eval!(mna: rhs_theorem1),
        domain: dom_chain,
        anchor: "Theorem 1, second proof: prefactor times the terminating 3F2",
        summary: "hypergeometric pipeline value = Theorem 1 closed form",
    },
    IdentityDescriptor {
        id: "thm2",
        params: MNRA,
        lhs: thm2_lhs,
        rhs: thm2_rhs,
        domain: dom_thm2,
        anchor: "Theorem 2",
        summary: "two double sums = 2x Theorem 1 closed form + sum_k (r-|k|+1) C(..,m-k) C(..,n-k)",
    },
    IdentityDescriptor {
        id: "cor1",
        params: PQMN,
        lhs: eval!(pqmn: cor::cor1_lhs),
        rhs: eval!(pqmn: cor::cor1_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 (alpha = q/p, m -> pm, n -> qn)",
        summary: "pqmn/((p+q)(m+n)) C(pm+qm, pm) C(pn+qn, pn)",
    },
    IdentityDescriptor {
        id: "cor1-exchanged",
        params: PQMN,
        lhs: eval!(pqmn: cor::cor1_exchanged_lhs),
        rhs: eval!(pqmn: cor::cor1_exchanged_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 with p <-> m, q <-> n exchanged",
        summary: "lower indices b-1, a-1; closed form C(pm+pn, pm) C(qm+qn, qm)",
    },
    IdentityDescriptor {
        id: "chu-full",
        params: PQMN,
        lhs: eval!(pqmn: cor::chu_full_lhs),
        rhs: eval!(pqmn: cor::chu_full_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 range extension, Chu-Vandermonde over a in [1-pn, pm]",
        summary: "pqn/(p+q) C(pm+qm+pn+qn, pm+pn)",
    },
    IdentityDescriptor {
        id: "chu-negative",
        params: PQMN,
        lhs: eval!(pqmn: cor::chu_negative_lhs),
        rhs: eval!(pqmn: cor::chu_negative_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 range extension, the a in [1-pn, 0] part",
        summary: "full range minus Corollary 1",
    },
    IdentityDescriptor {
        id: "chu-reflected",
        params: PQMN,
        lhs: eval!(pqmn: cor::chu_reflected_lhs),
        rhs: eval!(pqmn: cor::chu_negative_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 range extension, after a -> 1 - a",
        summary: "C(pm+qm+a+b-2, pm+a-1) C(pn+qn-a-b, qn-b) form",
    },
    IdentityDescriptor {
        id: "cor1-pochhammer",
        params: PQMN,
        lhs: eval!(pqmn: cor::cor1_pochhammer_lhs),
        rhs: eval!(pqmn: cor::cor1_pochhammer_rhs),
        domain: dom_pqmn,
        anchor: "Corollary 1 range extension, reflected form divided by C(pm+qm, pm)",
        summary: "Pochhammer ratios (pm+qm+1)_{a+b-2} / ((pm+1)_{a-1} (qm+1)_{b-1})",
    },
    IdentityDescriptor {
        id: "cor2",
        params: MNX,
        lhs: eval!(mnx: cor::cor2_lhs),
        rhs: eval!(mnx: cor::cor2_rhs),
        domain: dom_cor2,
        anchor: "Corollary 2 (p, q, m, n -> m, n, x, 1)",
        summary: "Pochhammer double sum in x",
    },
    IdentityDescriptor {
        id: "cor3",
        params: MN,
        lhs: eval!(mn: cor::cor3_lhs),
        rhs: eval!(mn: cor::cor3_rhs),
        domain: dom_mn_positive,
        anchor: "Corollary 3 (x -> infinity in Corollary 2)",
        summary: "(m+n)^(m+n-1)/(m^(m-1) n^(n-1)) - mn/(m+n) C(m+n, m)",
    },
    IdentityDescriptor {
        id: "pqrsum",
        params: PQMNR,
        lhs: eval!(pqmnr: cor::pqrsum_lhs),
        rhs: eval!(pqmnr: cor::pqrsum_rhs),
        domain: dom_pqmnr,
        anchor: "Theorem 2 at alpha = q/p, m -> pm, n -> qn",
        summary: "integer form of Theorem 2",
    },
    IdentityDescriptor {
        id: "pm-r-1",
        params: PQMNR,
        lhs: eval!(pqmnr: cor::pm_r_1_lhs),
        rhs: eval!(pqmnr: cor::pqrsum_rhs),
        domain: dom_pqmnr,
        anchor: "Corollary 4 derivation, second sum reindexed over a, b <= 0",
        summary: "same closed form as pqrsum",
    },
    IdentityDescriptor {
        id: "pm-r-2",
        params: PQMNR,
        lhs: eval!(pqmnr: cor::pm_r_2_lhs),
        rhs: eval!(pqmnr: cor::pm_r_2_rhs),
        domain: dom_range_split,
        anchor: "Corollary 4 derivation, Chu-Vandermonde over b in [-qn-r, qm-r-1]",
        summary: "(pm+r+1)q/(p+q) C((p+q)(m+n), pm+pn)",
    },
    IdentityDescriptor {
        id: "pm-r-3",
        params: PQMNR,
        lhs: eval!(pqmnr: cor::pm_r_3_lhs),
        rhs: eval!(pqmnr: cor::pm_r_3_rhs),
        domain: dom_range_split,
        anchor: "Corollary 4 derivation, Chu-Vandermonde over a in [-pm-r, pn-r-1] (the two sums added)",
        summary: "(qm-r-1)p/(p+q) C((p+q)(m+n), pm+pn)",
    },
    IdentityDescriptor {
        id: "cor4",
        params: PQMNR,
        lhs: eval!(pqmnr: cor::cor4_lhs),
        rhs: eval!(pqmnr: cor::cor4_rhs),
        domain: dom_cor4,
        anchor: "Corollary 4",
        summary: "two double sums = 2 Cor1 - r C((p+q)(m+n), pm+pn) + sum_k (r-|k|) C C",
    },
    IdentityDescriptor {
        id: "cor5",
        params: MNR,
        lhs: eval!(mnr: cor::cor5_lhs),
        rhs: eval!(mnr: cor::cor5_rhs),
        domain: dom_mnr_positive,
        anchor: "Corollary 5 (p = q = 1)",
        summary: "C(2m-a+b-1, m-r-a) C(2n+a-b-1, n-r-b) form",
    },
    IdentityDescriptor {
        id: "cor6",
        params: MNR,
        lhs: eval!(mnr: cor::cor6_lhs),
        rhs: eval!(mnr: cor::cor6_rhs),
        domain: dom_mnr_positive,
        anchor: "Corollary 6 (the m+n form; alias cor7)",
        summary: "C(m+n-a+b-1, m-r-a) C(m+n+a-b-1, n-r-b) form",
    },
    IdentityDescriptor {
        id: "cor5-r2",
        params: MN,
        lhs: eval!(mn: cor5_r2_lhs),
        rhs: eval!(mn: cor::cor5_r2_rhs),
        domain: dom_mn_positive,
        anchor: "Corollary 5 displayed at r = 2",
        summary: "C(2m,m)C(2n,n) + C(2m,m-1)C(2n,n-1) + mn/(2(m+n)) C(2m,m)C(2n,n) - C(2m+2n, m+n)",
    },
    IdentityDescriptor {
        id: "cor5-r1",
        params: MN,
        lhs: eval!(mn: cor5_r1_lhs),
        rhs: eval!(mn: cor::cor5_r1_rhs),
        domain: dom_mn_positive,
        anchor: "Corollary 5 displayed at r = 1",
        summary: "1/2 C(2m,m)C(2n,n) + mn/(2(m+n)) C(2m,m)C(2n,n) - 1/2 C(2m+2n, m+n)",
    },
    IdentityDescriptor {
        id: "cor6-r1",
        params: MN,
        lhs: eval!(mn: cor6_r1_lhs),
        rhs: eval!(mn: cor::cor6_r1_rhs),
        domain: dom_mn_positive,
        anchor: "Corollary 6 displayed at r = 1",
        summary: "1/2 C(m+n,m)^2 + mn/(2(m+n)) C(m+n,m)^2 - 1/2 C(2m+2n, 2m)",
    },
    IdentityDescriptor {
        id: "thm3",
        params: MNX,
        lhs: eval!(mnx: lhs_theorem3),
        rhs: eval!(mnx: thm3_rhs),
        domain: dom_thm3,
        anchor: "Theorem 3",
        summary: "sum C(x+m-a+b-1, n+b-1) C(x+a-b-1, n-b) = mn/(2x+m) C(2x+m, 2n)",
    },
    IdentityDescriptor {
        id: "doub-xab",
        params: MNX,
        lhs: eval!(mnx: doub_xab_lhs),
        rhs: eval!(mnx: doub_xab_rhs),
        domain: dom_mn_positive,
        anchor: "Theorem 3, proof: form after x -> -x-m+n",
        summary: "2 sum C(x+a-1, n+b-1) C(x+m-a, n-b) = m C(2x+m-1, 2n-1)",
    },
];

fn cor5_r2_lhs(m: i64, n: i64) -> Rat {
    cor::cor5_lhs(m, n, 2)
}

fn cor5_r1_lhs(m: i64, n: i64) -> Rat {
    cor::cor5_lhs(m, n, 1)
}

fn cor6_r1_lhs(m: i64, n: i64) -> Rat {
    cor::cor6_lhs(m, n, 1)
}

pub fn registry() -> &'static [IdentityDescriptor] {
    REGISTRY
}

/// Finds an identity by id. `cor7` is accepted as another name for `cor6`.
pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor> {
    let id = if id == "cor7" { "cor6" } else { id };
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
