//! The single k-sum closed by an explicit antidifference.

use binomsum::exact::rat;
use binomsum::identities::theorem1::{
    rhs_theorem1, single_sum_k, telescope_certificate, telescope_term, telescoped_total,
};

fn main() -> binomsum::Result<()> {
    let (m, n, alpha) = (4, 3, rat(2, 3));
    for k in 0..=m.min(n) + 1 {
        println!(
            "k={k} s(k)={} certificate={}",
            telescope_term(m, n, &alpha, k)?,
            telescope_certificate(m, n, &alpha, k)?
        );
    }
    println!("k-sum       {}", single_sum_k(m, n, &alpha));
    println!("s(0)-s(end) {}", telescoped_total(m, n, &alpha)?);
    println!("closed form {}", rhs_theorem1(m, n, &alpha)?);
    Ok(())
}
