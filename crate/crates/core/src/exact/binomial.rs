use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::sync::OnceLock;

use super::Rat;
use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `x (x+step) (x+2 step) ... ` over `count` factors, in integers:
/// returns the numerator product with `x = p/q`, leaving `q^count` to the caller.
fn scaled_product(x: &Rat, count: u64, rising: bool) -> BigInt {
    let q = x.denom();
    let mut cur = x.numer().clone();
    let mut acc = BigInt::one();
    for _ in 0..count {
        acc *= &cur;
        if rising {
            cur += q;
        } else {
            cur -= q;
        }
    }
    acc
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`, zero for `k < 0`.
pub fn binomial_gen(x: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    if let Some(n) = x.is_integer().then(|| x.to_i64()).flatten() {
        return Rat::from(binom_int(n, k));
    }
    let k = k as u64;
    let num = scaled_product(x, k, false);
    let den = num_traits::pow(x.denom().clone(), k as usize) * factorial(k);
    Rat::from_big(BigRational::new(num, den))
}

const PASCAL_ROWS: i64 = 160;

/// Rows `0..=PASCAL_ROWS` of Pascal's triangle, built once; the sweeps
/// evaluate the same small binomials millions of times.
fn pascal() -> &'static [Vec<BigInt>] {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=PASCAL_ROWS as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        rows
    })
}

/// `C(n, k)` for integer `n` and `k >= 0`.
fn binom_int(n: i64, k: i64) -> BigInt {
    if n < 0 {
        // C(n, k) = (-1)^k C(k - n - 1, k)
        let c = binom_int(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > n {
        return BigInt::from(0);
    }
    if n <= PASCAL_ROWS {
        return pascal()[n as usize][k as usize].clone();
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        // exact at every step: c * (n - i) / (i + 1) is C(n, i + 1)
        match c.checked_mul(n - i) {
            Some(t) => c = t / (i + 1),
            None => {
                let mut big = BigInt::from(c);
                for j in i..k {
                    big = big * BigInt::from(n - j) / BigInt::from(j + 1);
                }
                return big;
            }
        }
    }
    BigInt::from(c)
}

/// Convenience for integer tops.
pub fn binom(n: i64, k: i64) -> Rat {
    binomial_gen(&Rat::from(n), k)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`.
pub fn pochhammer(x: &Rat, n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let n = n as u64;
    let num = scaled_product(x, n, true);
    let den = num_traits::pow(x.denom().clone(), n as usize);
    Ok(Rat::from_big(BigRational::new(num, den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binom(4, 2), rat(6, 1));
        assert_eq!(binomial_gen(&rat(5, 2), 2), rat(15, 8));
        assert_eq!(binom(3, 5), Rat::zero());
        assert_eq!(binom(7, -1), Rat::zero());
        assert_eq!(binom(-1, 3), rat(-1, 1));
        assert_eq!(binom(0, 0), Rat::one());
        assert_eq!(binom(-1, 0), Rat::one());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(1, 1), 4).unwrap(), rat(24, 1));
        assert_eq!(pochhammer(&rat(-17, 3), 0).unwrap(), Rat::one());
        assert_eq!(pochhammer(&rat(1, 2), 3).unwrap(), rat(15, 8));
        assert_eq!(pochhammer(&rat(-2, 1), 3).unwrap(), Rat::zero());
        assert_eq!(pochhammer(&rat(1, 1), -1), Err(Error::NegativeIndex(-1)));
    }

    /// k-th forward difference of `x -> C(x, k)` is identically 1, and the
    /// (k+1)-th is 0, which pins the degree at exactly k.
    #[test]
    fn binomial_has_degree_k() {
        fn diff(vals: &[Rat]) -> Vec<Rat> {
            vals.windows(2).map(|w| &w[1] - &w[0]).collect()
        }
        for k in 0..8i64 {
            let start = rat(-7, 3);
            let pts: Vec<Rat> = (0..(k + 2)).map(|i| binomial_gen(&(&start + i), k)).collect();
            let mut d = pts;
            for _ in 0..k {
                d = diff(&d);
            }
            assert!(d.iter().all(|v| v.is_one()), "k={k}: {d:?}");
            assert!(diff(&d).iter().all(Rat::is_zero));
        }
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-60i64..60, 1i64..9).prop_map(|(n, d)| rat(n, d))
    }

    #[test]
    fn integer_path_matches_product() {
        for n in -12i64..170 {
            for k in 0..45 {
                let x = Rat::from(n);
                let slow = Rat::from_big(BigRational::new(
                    scaled_product(&x, k as u64, false),
                    factorial(k as u64),
                ));
                assert_eq!(binomial_gen(&x, k), slow, "C({n},{k})");
            }
        }
        // crosses the u128 overflow boundary
        let big = binom(200, 100);
        assert_eq!(big, binom(199, 99) + binom(199, 100));
    }

    proptest! {
        #[test]
        fn pascal_rule(x in small_rat(), k in -2i64..12) {
            let lhs = binomial_gen(&x, k);
            let rhs = binomial_gen(&(&x - 1), k) + binomial_gen(&(&x - 1), k - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_splits(x in small_rat(), m in 0i64..10, n in 0i64..10) {
            let whole = pochhammer(&x, m + n).unwrap();
            let split = pochhammer(&x, m).unwrap() * pochhammer(&(&x + m), n).unwrap();
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn complement_symmetry(n in 0i64..40, k in -3i64..45) {
            prop_assert_eq!(binom(n, k), binom(n, n - k));
        }

        #[test]
        fn matches_naive_product(x in small_rat(), k in 0i64..10) {
            let naive: Rat = (0..k).map(|i| &x - i).product::<Rat>()
                / Rat::from(factorial(k as u64));
            prop_assert_eq!(binomial_gen(&x, k), naive);
        }
    }
}
