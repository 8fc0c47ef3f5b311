//! Terminating hypergeometric series at exact rational arguments, the
//! classical summation and transformation formulas, and the hypergeometric
//! route to Theorem 1.

mod chain;
mod formulas;

pub use chain::{
    chain_3f2, dixon_params_at_alpha_one, second_proof_chain, second_proof_chain_gessel_stanton,
    second_proof_stage_one, second_proof_stage_two, whipple_params_at_balanced,
};
pub use formulas::{
    chu_vandermonde, dixon_check, dixon_rhs, gessel_stanton_check, gessel_stanton_rhs,
    transform_3f2_check, whipple_check, whipple_rhs,
};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// `pFq[upper; lower; arg]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypSpec {
    pub upper: Vec<Rat>,
    pub lower: Vec<Rat>,
    pub arg: Rat,
}

impl HypSpec {
    pub fn new(upper: Vec<Rat>, lower: Vec<Rat>, arg: Rat) -> Self {
        HypSpec { upper, lower, arg }
    }

    /// Unit argument, the only one the formulas here need.
    pub fn at_one(upper: Vec<Rat>, lower: Vec<Rat>) -> Self {
        Self::new(upper, lower, Rat::one())
    }

    /// Index of the last nonzero term: the smallest `N` with `-N` among the
    /// upper parameters.
    pub fn termination_index(&self) -> Result<u64> {
        self.upper
            .iter()
            .filter(|u| u.is_nonpositive_integer())
            .filter_map(|u| u.to_i64())
            .map(|u| (-u) as u64)
            .min()
            .ok_or(Error::NonTerminating)
    }

    fn check_lower(&self, terminate: u64) -> Result<()> {
        for l in &self.lower {
            if let Some(v) = l.to_i64() {
                if v <= 0 && ((-v) as u64) < terminate {
                    return Err(Error::LowerParamPole {
                        param: l.to_string(),
                        terminate,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Exact value of a terminating series.
pub fn eval_terminating(spec: &HypSpec) -> Result<Rat> {
    let last = spec.termination_index()?;
    spec.check_lower(last)?;
    let mut term = Rat::one();
    let mut sum = Rat::one();
    for k in 0..last {
        let k = k as i64;
        let mut ratio = spec.arg.clone() / (k + 1);
        for u in &spec.upper {
            ratio *= u + k;
        }
        for l in &spec.lower {
            ratio /= l + k;
        }
        term *= ratio;
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn r(v: i64) -> Rat {
        Rat::from(v)
    }

    #[test]
    fn examples() {
        // 1 - 2/3 + 1/6
        let s = HypSpec::at_one(vec![r(-2), r(1)], vec![r(3)]);
        assert_eq!(eval_terminating(&s).unwrap(), rat(1, 2));
        let s = HypSpec::at_one(vec![rat(7, 3), r(0), r(5)], vec![rat(1, 2)]);
        assert_eq!(eval_terminating(&s).unwrap(), Rat::one());
        let (a, b, c, d) = (rat(3, 2), rat(-5, 7), r(4), rat(2, 9));
        let s = HypSpec::at_one(vec![r(-1), a.clone(), b.clone()], vec![c.clone(), d.clone()]);
        assert_eq!(eval_terminating(&s).unwrap(), Rat::one() - a * b / (c * d));
    }

    #[test]
    fn errors() {
        let s = HypSpec::at_one(vec![rat(1, 2)], vec![r(1)]);
        assert_eq!(eval_terminating(&s), Err(Error::NonTerminating));
        let s = HypSpec::at_one(vec![r(-3), r(1)], vec![r(-1)]);
        assert!(matches!(eval_terminating(&s), Err(Error::LowerParamPole { .. })));
        // a lower pole past the termination index is harmless
        let s = HypSpec::at_one(vec![r(-1), r(1)], vec![r(-1)]);
        assert_eq!(eval_terminating(&s).unwrap(), Rat::from(2));
    }

    #[test]
    fn smallest_termination_wins() {
        let s = HypSpec::at_one(vec![r(-5), r(-2), r(-7)], vec![]);
        assert_eq!(s.termination_index().unwrap(), 2);
    }

    #[test]
    fn non_unit_argument() {
        // 1F0[-3;;z] = (1 - z)^3
        let z = rat(2, 5);
        let s = HypSpec::new(vec![r(-3)], vec![], z.clone());
        assert_eq!(eval_terminating(&s).unwrap(), (Rat::one() - z).pow(3));
    }

    proptest! {
        #[test]
        fn permutation_invariant(
            nn in 0i64..7,
            a in (-20i64..20, 1i64..6),
            b in (-20i64..20, 1i64..6),
            c in (1i64..20, 1i64..6),
            d in (1i64..20, 1i64..6),
        ) {
            let (a, b) = (rat(a.0, a.1), rat(b.0, b.1));
            let (c, d) = (rat(c.0, c.1), rat(d.0, d.1));
            let one = HypSpec::at_one(vec![r(-nn), a.clone(), b.clone()], vec![c.clone(), d.clone()]);
            let two = HypSpec::at_one(vec![b, r(-nn), a], vec![d, c]);
            prop_assert_eq!(eval_terminating(&one).unwrap(), eval_terminating(&two).unwrap());
        }
    }
}
