//! Direct double-sum evaluators and closed forms for every identity, behind
//! a registry addressed by stable string ids.
//!
//! Left sides are always evaluated by plain nested summation; they are the
//! oracles. Right sides are the closed forms.

mod catalog;
pub mod corollaries;
pub mod theorem1;
pub mod theorem2;
pub mod theorem3;

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rat;

pub use catalog::{lookup, registry};
pub use theorem1::{
    check_alpha, lhs_theorem1, rhs_theorem1, single_sum_k, telescope_certificate, telescope_term,
    telescoped_total, theorem1_certify_alpha,
};
pub use theorem2::{lhs_theorem2, rhs_theorem2};
pub use theorem3::{doub_xab_check, lhs_theorem3, rhs_theorem3, theorem3_certify};

/// Default alpha sample set.
pub fn alpha_samples() -> Vec<Rat> {
    [(1, 1), (2, 1), (3, 1), (1, 2), (2, 3), (5, 3), (7, 2)]
        .iter()
        .map(|&(p, q)| Rat::new(p, q))
        .collect()
}

pub(crate) fn double_sum<F>(a: RangeInclusive<i64>, b: RangeInclusive<i64>, term: F) -> Rat
where
    F: Fn(i64, i64) -> Rat,
{
    // Terms share few distinct denominators, so numerators are pooled per
    // denominator and reduced once at the end.
    let mut pools: HashMap<BigInt, BigInt> = HashMap::new();
    for i in a {
        for j in b.clone() {
            let t = term(i, j);
            if t.is_zero() {
                continue;
            }
            *pools.entry(t.denom().clone()).or_default() += t.numer();
        }
    }
    pools.into_iter().map(|(d, n)| Rat::from(n) / Rat::from(d)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    M,
    N,
    R,
    P,
    Q,
    Alpha,
    X,
}

impl Param {
    pub const ALL: [Param; 7] = [Param::M, Param::N, Param::R, Param::P, Param::Q, Param::Alpha, Param::X];

    pub fn name(self) -> &'static str {
        match self {
            Param::M => "m",
            Param::N => "n",
            Param::R => "r",
            Param::P => "p",
            Param::Q => "q",
            Param::Alpha => "alpha",
            Param::X => "x",
        }
    }

    pub fn is_rational(self) -> bool {
        matches!(self, Param::Alpha | Param::X)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters of a single evaluation. Field order is the sort order used
/// for reports.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamSet {
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub r: Option<i64>,
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub alpha: Option<Rat>,
    pub x: Option<Rat>,
}

macro_rules! setter {
    ($name:ident, $ty:ty) => {
        pub fn $name(mut self, v: impl Into<$ty>) -> Self {
            self.$name = Some(v.into());
            self
        }
    };
}

impl ParamSet {
    pub fn new() -> Self {
        Self::default()
    }

    setter!(m, i64);
    setter!(n, i64);
    setter!(r, i64);
    setter!(p, i64);
    setter!(q, i64);
    setter!(alpha, Rat);
    setter!(x, Rat);

    /// Value of `param` as a rational, if set.
    pub fn get(&self, param: Param) -> Option<Rat> {
        match param {
            Param::M => self.m.map(Rat::from),
            Param::N => self.n.map(Rat::from),
            Param::R => self.r.map(Rat::from),
            Param::P => self.p.map(Rat::from),
            Param::Q => self.q.map(Rat::from),
            Param::Alpha => self.alpha.clone(),
            Param::X => self.x.clone(),
        }
    }

    /// Sets `param`; integer parameters reject non-integers.
    pub fn set(&mut self, param: Param, value: Rat) -> Result<()> {
        let int = || {
            value
                .to_i64()
                .ok_or_else(|| Error::Domain(format!("{param} must be an integer, got {value}")))
        };
        match param {
            Param::M => self.m = Some(int()?),
            Param::N => self.n = Some(int()?),
            Param::R => self.r = Some(int()?),
            Param::P => self.p = Some(int()?),
            Param::Q => self.q = Some(int()?),
            Param::Alpha => self.alpha = Some(value),
            Param::X => self.x = Some(value),
        }
        Ok(())
    }

    fn int(&self, param: Param) -> Result<i64> {
        let v = match param {
            Param::M => self.m,
            Param::N => self.n,
            Param::R => self.r,
            Param::P => self.p,
            Param::Q => self.q,
            _ => unreachable!("{param} is rational"),
        };
        v.ok_or_else(|| Error::Domain(format!("missing parameter {param}")))
    }

    fn rational(&self, param: Param) -> Result<&Rat> {
        let v = match param {
            Param::Alpha => &self.alpha,
            Param::X => &self.x,
            _ => unreachable!("{param} is an integer"),
        };
        v.as_ref().ok_or_else(|| Error::Domain(format!("missing parameter {param}")))
    }

    /// Keeps only the listed parameters.
    pub fn restrict(&self, keep: &[Param]) -> ParamSet {
        let mut out = ParamSet::new();
        for &p in keep {
            if let Some(v) = self.get(p) {
                out.set(p, v).expect("value came from the same slot");
            }
        }
        out
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in Param::ALL {
            if let Some(v) = self.get(p) {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{p}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl Serialize for ParamSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let present: Vec<(Param, Rat)> =
            Param::ALL.iter().filter_map(|&p| self.get(p).map(|v| (p, v))).collect();
        let mut map = serializer.serialize_map(Some(present.len()))?;
        for (p, v) in present {
            map.serialize_entry(p.name(), &v)?;
        }
        map.end()
    }
}

pub type Evaluator = fn(&ParamSet) -> Result<Rat>;

/// A registry entry: two evaluators and the domain on which they must agree.
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub params: &'static [Param],
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    pub domain: fn(&ParamSet) -> Result<()>,
    /// Where the identity comes from.
    pub anchor: &'static str,
    pub summary: &'static str,
}

impl IdentityDescriptor {
    /// Checks that every required parameter is present, then the domain.
    pub fn check(&self, params: &ParamSet) -> Result<()> {
        for &p in self.params {
            if params.get(p).is_none() {
                return Err(Error::Domain(format!("{} needs parameter {p}", self.id)));
            }
        }
        (self.domain)(params)
    }
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("anchor", &self.anchor)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: ParamSet,
    pub lhs_value: Rat,
    pub rhs_value: Rat,
    pub equal: bool,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    params: &'a ParamSet,
    lhs: &'a Rat,
    rhs: &'a Rat,
    equal: bool,
    micros: u64,
}

impl VerificationReport {
    /// JSON record. With `timings` off the elapsed time is written as 0 so
    /// that output is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> String {
        let micros = if timings {
            u64::try_from(self.elapsed.as_micros()).unwrap_or(u64::MAX)
        } else {
            0
        };
        serde_json::to_string(&ReportJson {
            identity: &self.identity,
            params: &self.params,
            lhs: &self.lhs_value,
            rhs: &self.rhs_value,
            equal: self.equal,
            micros,
        })
        .expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] lhs={} rhs={} {}",
            self.identity,
            self.params,
            self.lhs_value,
            self.rhs_value,
            if self.equal { "equal" } else { "UNEQUAL" }
        )
    }
}

/// Evaluates both sides of a registered identity.
pub fn eval_identity(id: &str, params: &ParamSet) -> Result<VerificationReport> {
    let desc = lookup(id)?;
    desc.check(params)?;
    let params = params.restrict(desc.params);
    let start = Instant::now();
    let lhs_value = (desc.lhs)(&params)?;
    let rhs_value = (desc.rhs)(&params)?;
    let elapsed = start.elapsed();
    Ok(VerificationReport {
        identity: desc.id.to_string(),
        equal: lhs_value == rhs_value,
        params,
        lhs_value,
        rhs_value,
        elapsed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn registry_examples() {
        let cases = [
            ("S3", ParamSet::new().m(2).n(1), Rat::from(3)),
            ("S4", ParamSet::new().m(3).n(3), Rat::one()),
            ("cor7", ParamSet::new().m(2).n(2).r(1), Rat::one()),
            ("thm3", ParamSet::new().m(1).n(1).x(Rat::from(2)), Rat::from(2)),
            ("thm1", ParamSet::new().m(2).n(1).alpha(rat(1, 2)), Rat::from(3)),
        ];
        for (id, ps, v) in cases {
            let rep = eval_identity(id, &ps).unwrap();
            assert!(rep.equal, "{rep}");
            assert_eq!(rep.lhs_value, v, "{id}");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            eval_identity("nope", &ParamSet::new()).unwrap_err(),
            Error::UnknownIdentity("nope".into())
        );
        let e = eval_identity("thm1", &ParamSet::new().m(1).n(1).alpha(Rat::from(-1))).unwrap_err();
        assert_eq!(e, Error::Domain("alpha = -1 outside domain".into()));
        assert!(matches!(
            eval_identity("thm1", &ParamSet::new().m(0).n(0).alpha(Rat::one())),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(eval_identity("S3", &ParamSet::new().m(1)), Err(Error::Domain(_))));
    }

    #[test]
    fn unused_params_are_dropped() {
        let rep = eval_identity("S3", &ParamSet::new().m(2).n(1).alpha(Rat::from(9))).unwrap();
        assert_eq!(rep.params, ParamSet::new().m(2).n(1));
    }

    #[test]
    fn json_shape() {
        let rep = eval_identity("thm1", &ParamSet::new().m(2).n(1).alpha(rat(1, 2))).unwrap();
        let s = rep.to_json(false);
        assert_eq!(
            s,
            r#"{"identity":"thm1","params":{"m":"2","n":"1","alpha":"1/2"},"lhs":"3","rhs":"3","equal":true,"micros":0}"#
        );
    }

    #[test]
    fn param_order_sorts_numerically() {
        let a = ParamSet::new().m(2).alpha(rat(1, 2));
        let b = ParamSet::new().m(2).alpha(Rat::from(1));
        let c = ParamSet::new().m(10);
        assert!(a < b && b < c);
    }
}
