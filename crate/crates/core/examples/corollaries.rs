//! Integer specializations, evaluated through the registry.

use binomsum::exact::rat;
use binomsum::identities::{eval_identity, ParamSet};

fn main() -> binomsum::Result<()> {
    let cases = [
        ("cor1", ParamSet::new().p(2).q(3).m(2).n(1)),
        ("chu-full", ParamSet::new().p(1).q(2).m(3).n(2)),
        ("cor2", ParamSet::new().m(3).n(2).x(rat(5, 2))),
        ("cor3", ParamSet::new().m(4).n(3)),
        ("pqrsum", ParamSet::new().p(2).q(1).m(3).n(2).r(2)),
        ("pm-r-3", ParamSet::new().p(2).q(1).m(3).n(2).r(1)),
        ("cor4", ParamSet::new().p(1).q(3).m(2).n(2).r(2)),
        ("cor7", ParamSet::new().m(5).n(4).r(3)),
        ("cor5-r2", ParamSet::new().m(4).n(4)),
    ];
    for (id, params) in cases {
        println!("{}", eval_identity(id, &params)?);
    }
    // outside r+1 <= min(qm, pn) the range-split step is not an identity
    match eval_identity("pm-r-2", &ParamSet::new().p(1).q(1).m(1).n(1).r(1)) {
        Ok(r) => println!("{r}"),
        Err(e) => println!("pm-r-2 at r=1, m=n=1: {e}"),
    }
    Ok(())
}
