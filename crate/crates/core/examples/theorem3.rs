//! The x-identity: numeric checks, certification as a polynomial in x, and
//! the doubled form used in its proof.

use binomsum::exact::{rat, Rat};
use binomsum::identities::{doub_xab_check, lhs_theorem3, rhs_theorem3, theorem3_certify};

fn main() -> binomsum::Result<()> {
    for x in [Rat::zero(), rat(5, 2), rat(-7, 3), Rat::from(11)] {
        println!("m=3 n=2 x={x}: {} = {}", lhs_theorem3(3, 2, &x), rhs_theorem3(3, 2, &x)?);
    }
    for (m, n) in [(1, 1), (4, 3), (7, 6)] {
        println!(
            "m={m} n={n}: polynomial identity {}, doubled form at x=5/2 {}",
            theorem3_certify(m, n)?,
            doub_xab_check(m, n, &rat(5, 2))
        );
    }
    Ok(())
}
