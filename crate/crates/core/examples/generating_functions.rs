//! Bivariate generating functions: F(x,y), the Laurent family G_r, the
//! Euler-operator PDE and the cleared-denominator polynomial identity.

use binomsum::exact::rat;
use binomsum::series::{f_closed_form, g_r_check, g_r_series, pde_check, routine_identity_check};

fn main() -> binomsum::Result<()> {
    let f = f_closed_form(&rat(1, 1), 4)?;
    println!("F at alpha=1 (m n coefficient):");
    for line in f.dump_lines((1, 1)) {
        println!("  {line}");
    }

    let g = g_r_series(&rat(1, 1), 2, 3)?;
    println!("G_2 principal part corner: [x^-2 y^-2] = {}, [x^-1 y^-1] = {}", g.coeff(-2, -2), g.coeff(-1, -1));

    for alpha in [rat(1, 1), rat(2, 3), rat(7, 2)] {
        println!(
            "alpha={alpha}: G_r vs triple sums (r=0..3) {}, pde {}, polynomial identity r=3 {}",
            (0..=3).all(|r| g_r_check(&alpha, r, 6).unwrap_or(false)),
            pde_check(&alpha, 6)?,
            routine_identity_check(&alpha, 3)?
        );
    }
    Ok(())
}
