//! Reverting x = t/(1+t)^(1+alpha) and reading binomial coefficients off
//! the resulting series.

use binomsum::exact::{binomial_gen, rat};
use binomsum::series::{classical_gf_check, remark_series, revert_u, reversion_holds};

fn main() -> binomsum::Result<()> {
    let t = revert_u(&rat(1, 1), 8)?;
    println!("alpha=1, Catalan numbers:");
    for line in t.dump_lines(1) {
        println!("  {line}");
    }

    let alpha = rat(2, 3);
    let t = revert_u(&alpha, 10)?;
    println!("alpha={alpha}: substitution gives back x: {}", reversion_holds(&alpha, &t));
    let a = remark_series(&alpha, &t);
    for m in 0..=5 {
        let want = binomial_gen(&((&alpha + 1) * m), m);
        println!("  [x^{m}] u/(1+a-au) = {}  C((1+a)m, m) = {want}", a.coeff(m));
    }

    println!("classical formula aa=3/2 beta=5/2: {}", classical_gf_check(&rat(3, 2), &rat(5, 2), 8)?);
    Ok(())
}
