//! Largest admissible starting value `g_0`.
//!
//! The set of `g_0 >= 0` for which the recursion stays nonnegative is an
//! interval `[0, g0_max]`, and `g_1 >= 0` bounds it by `alpha_1 / xi - 1`.
//! Feasibility of any rational candidate is decided exactly, so bisection
//! only has to bracket the supremum.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{g_recursion, certify_xi_stieltjes};
use crate::cf::{s_extract, MomentSequence};
use crate::error::{Error, Result};
use crate::rat::{int, serde_rat, Rat};

/// Bracket `[upper_bound_lo, upper_bound_hi]` around `g0_max`.
///
/// Every `g_0 <= upper_bound_lo` is feasible and every
/// `g_0 > upper_bound_hi` is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GZeroInterval {
    #[serde(with = "serde_rat")]
    pub lower: Rat,
    #[serde(with = "serde_rat")]
    pub upper_bound_lo: Rat,
    #[serde(with = "serde_rat")]
    pub upper_bound_hi: Rat,
    #[serde(with = "serde_rat")]
    pub tolerance: Rat,
}

impl GZeroInterval {
    pub fn is_exact(&self) -> bool {
        self.upper_bound_lo == self.upper_bound_hi
    }

    pub fn width(&self) -> Rat {
        &self.upper_bound_hi - &self.upper_bound_lo
    }
}

/// Brackets `g0_max` to within `tol` for a certified prefix.
pub fn g0_max(a: &MomentSequence, xi: &Rat, tol: &Rat) -> Result<GZeroInterval> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument("xi must be > 0".into()));
    }
    if !tol.is_positive() {
        return Err(Error::InvalidArgument("tol must be > 0".into()));
    }
    if !certify_xi_stieltjes(a, xi)?.is_certified() {
        return Err(Error::InfeasibleBase);
    }
    let s = s_extract(a)?.standardized();
    let alphas = s.alphas();
    if alphas.is_empty() {
        return Err(Error::InvalidArgument("prefix too short to bound g0 (no coefficients)".into()));
    }
    let ends = s.terminated();
    let feasible = |x: &Rat| g_recursion(alphas, ends, xi, x).is_feasible();

    let upper = &alphas[0] / xi - int(1);
    let interval = |lo: Rat, hi: Rat| GZeroInterval {
        lower: Rat::zero(),
        upper_bound_lo: lo,
        upper_bound_hi: hi,
        tolerance: tol.clone(),
    };
    if feasible(&upper) {
        return Ok(interval(upper.clone(), upper));
    }
    let (mut lo, mut hi) = (Rat::zero(), upper);
    let two = int(2);
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / &two;
        if feasible(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(interval(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::{alpha_from_g, GSequence};
    use crate::cf::s_expand;
    use crate::rat::rat;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn remark_example_has_zero_sup() {
        let a = MomentSequence::new(vec![int(1), rat(3, 2), rat(5, 2), rat(9, 2), rat(17, 2)]);
        let tol = rat(1, 1_000_000);
        let iv = g0_max(&a, &int(1), &tol).unwrap();
        assert_eq!(iv.upper_bound_lo, int(0));
        assert!(iv.upper_bound_hi <= tol && iv.upper_bound_hi.is_positive());
    }

    #[test]
    fn point_mass_sup_is_exact() {
        let a = MomentSequence::new(ints(&[1, 2, 4, 8, 16]));
        let iv = g0_max(&a, &int(1), &rat(1, 1000)).unwrap();
        assert!(iv.is_exact());
        assert_eq!(iv.upper_bound_lo, int(1));
    }

    #[test]
    fn constructed_sequence_bounds_g0() {
        let s = alpha_from_g(&GSequence::new(ints(&[1, 1, 1, 1])), &int(1)).unwrap();
        let a = MomentSequence::from(s_expand(&s, 8));
        let iv = g0_max(&a, &int(1), &rat(1, 1_000_000)).unwrap();
        assert!(iv.upper_bound_lo >= int(1));
        // g_3 = 2 - (1 + g_0) / (2 (2 - g_0)) >= 0 gives g_0 <= 7/5
        assert!(iv.upper_bound_lo <= rat(7, 5) && rat(7, 5) <= iv.upper_bound_hi);
    }

    #[test]
    fn contract_violations() {
        let catalan = MomentSequence::new(ints(&[1, 1, 2, 5, 14]));
        assert_eq!(g0_max(&catalan, &int(1), &rat(1, 10)), Err(Error::InfeasibleBase));
        let a = MomentSequence::new(ints(&[1, 2, 4]));
        assert!(g0_max(&a, &int(1), &int(0)).is_err());
        assert!(g0_max(&a, &int(0), &int(1)).is_err());
        assert!(g0_max(&MomentSequence::new(ints(&[3])), &int(1), &int(1)).is_err());
    }
}
