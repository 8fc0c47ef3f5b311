use super::Rat;
use crate::error::{Error, Result};

/// Checks `lhs(p) == rhs(p)` at every sample point.
///
/// When both sides are polynomials of degree at most `degree_bound`,
/// agreement at `degree_bound + 1` distinct points proves the identity.
/// Fewer distinct points than that is an error.
pub fn certify_poly_identity<L, R>(
    degree_bound: usize,
    lhs_at: L,
    rhs_at: R,
    sample_points: &[Rat],
) -> Result<bool>
where
    L: Fn(&Rat) -> Rat,
    R: Fn(&Rat) -> Rat,
{
    let mut distinct: Vec<&Rat> = sample_points.iter().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < degree_bound + 1 {
        return Err(Error::InsufficientSamples {
            needed: degree_bound + 1,
            got: distinct.len(),
        });
    }
    Ok(distinct.into_iter().all(|p| lhs_at(p) == rhs_at(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn linear() {
        let pts = [rat(0, 1), rat(1, 1)];
        let two_x_plus_one = |x: &Rat| x * 2 + 1;
        assert!(certify_poly_identity(1, two_x_plus_one, two_x_plus_one, &pts).unwrap());
        assert!(!certify_poly_identity(1, two_x_plus_one, |x: &Rat| x * 2, &pts).unwrap());
    }

    #[test]
    fn duplicates_do_not_count() {
        let pts = [rat(1, 1), rat(1, 1), rat(2, 2)];
        let err = certify_poly_identity(1, |x: &Rat| x.clone(), |x: &Rat| x.clone(), &pts);
        assert_eq!(err, Err(Error::InsufficientSamples { needed: 2, got: 1 }));
    }
}
