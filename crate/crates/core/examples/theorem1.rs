//! Both sides of the alpha double sum at a few points, then a certification
//! that the identity holds as a rational function of alpha.

use binomsum::exact::rat;
use binomsum::identities::theorem1::{lhs_theorem1, rhs_theorem1, theorem1_certify_alpha};

fn main() -> binomsum::Result<()> {
    for (m, n, alpha) in [(2, 1, rat(1, 2)), (3, 3, rat(1, 1)), (5, 4, rat(7, 2)), (4, 6, rat(-3, 5))] {
        let lhs = lhs_theorem1(m, n, &alpha);
        let rhs = rhs_theorem1(m, n, &alpha)?;
        println!("m={m} n={n} alpha={alpha}: {lhs} = {rhs} ({})", lhs == rhs);
    }
    for (m, n) in [(1, 1), (3, 2), (4, 5)] {
        println!("polynomial in alpha, m={m} n={n}: {}", theorem1_certify_alpha(m, n)?);
    }
    Ok(())
}
