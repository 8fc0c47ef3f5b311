//! Terminating hypergeometric sums and the classical evaluations, including
//! the hypergeometric route to the alpha double sum.

use binomsum::exact::{rat, Rat};
use binomsum::hypergeom::{
    chain_3f2, chu_vandermonde, dixon_check, dixon_params_at_alpha_one, eval_terminating,
    gessel_stanton_check, second_proof_chain, second_proof_chain_gessel_stanton, whipple_check,
    whipple_params_at_balanced, HypSpec,
};
use binomsum::identities::theorem1::rhs_theorem1;

fn main() -> binomsum::Result<()> {
    let spec = HypSpec::at_one(vec![Rat::from(-3), rat(1, 2)], vec![rat(5, 2)]);
    println!("2F1[-3, 1/2; 5/2; 1] = {}", eval_terminating(&spec)?);
    println!("Chu-Vandermonde (3, -1/2, 5/2) = {}", chu_vandermonde(3, &rat(-1, 2), &rat(5, 2))?);
    println!("Gessel-Stanton N=6 b=3/7 s=5/7: {}", gessel_stanton_check(6, &rat(3, 7), &rat(5, 7))?);
    println!("Dixon (5, -2, 1/2): {}", dixon_check(&Rat::from(5), &Rat::from(-2), &rat(1, 2))?);
    println!("Whipple (-2, 3/2, 3): {}", whipple_check(&Rat::from(-2), &rat(3, 2), &Rat::from(3))?);

    let (m, n, alpha) = (3, 4, rat(5, 3));
    println!("pipeline 3F2 for m={m} n={n} alpha={alpha}: {:?}", chain_3f2(m, n, &alpha));
    println!("  direct       {}", second_proof_chain(m, n, &alpha)?);
    println!("  closed by GS {}", second_proof_chain_gessel_stanton(m, n, &alpha)?);
    println!("  closed form  {}", rhs_theorem1(m, n, &alpha)?);

    let (a, b, c) = dixon_params_at_alpha_one(2, 3);
    println!("at alpha=1 the pipeline is Dixon at ({a}, {b}, {c}): {}", dixon_check(&a, &b, &c)?);
    if let Some((a, c, d)) = whipple_params_at_balanced(2, 3, &rat(3, 2)) {
        println!("at alpha*m = n it is Whipple at ({a}, {c}, {d}): {}", whipple_check(&a, &c, &d)?);
    }
    Ok(())
}
