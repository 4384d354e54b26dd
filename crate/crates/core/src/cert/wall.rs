//! Bounded-support certifier: moments of a measure on `[0, xi]`.
//!
//! Here the coefficients satisfy `alpha_n = xi (1 - g_{n-1}) g_n` with
//! `g_0 = 0` and every `g_n` in `[0, 1]`.

use num_traits::{One, Signed, Zero};

use super::CertVerdict;
use crate::cf::{extract_partial, ExtractEnd, MomentSequence};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Decides whether `a_0..a_N` are the first moments of a positive measure on `[0, xi]`.
pub fn certify_wall(a: &MomentSequence, xi: &Rat) -> Result<CertVerdict> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument("xi must be > 0".into()));
    }
    let ex = extract_partial(a)?;
    if ex.c.is_zero() && ex.end == ExtractEnd::Terminated {
        return Ok(CertVerdict::degenerate());
    }
    let one = Rat::one();
    let mut g = vec![Rat::zero()];
    for (pos, alpha) in ex.alphas.iter().enumerate() {
        let n = pos + 1;
        let room = &one - &g[n - 1];
        if room.is_zero() {
            return Ok(CertVerdict::refuted(
                n,
                g,
                format!("g_{} = 1 forces alpha_{n} = 0, but alpha_{n} = {alpha}", n - 1),
            ));
        }
        let gn = alpha / (xi * room);
        let bad = gn.is_negative() || gn > one;
        g.push(gn);
        if bad {
            return Ok(CertVerdict::refuted(n, g.clone(), format!("g_{n} = {} is outside [0, 1]", g[n])));
        }
    }
    match ex.end {
        ExtractEnd::Terminated => g.push(Rat::zero()),
        ExtractEnd::Exhausted => {}
        ExtractEnd::Failed { index, reason } => {
            return Ok(CertVerdict::refuted(index, g, format!("no standard S-fraction: {reason}")));
        }
    }
    Ok(CertVerdict::certified(g, format!("consistent with a measure on [0, {xi}]")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::CertStatus;
    use crate::rat::{int, rat};

    fn catalan(len: usize) -> MomentSequence {
        let mut c = vec![int(1)];
        for n in 1..len as i64 {
            let prev = c.last().unwrap().clone();
            c.push(prev * int(2 * (2 * n - 1)) / int(n + 1));
        }
        MomentSequence::new(c)
    }

    #[test]
    fn catalan_on_zero_four() {
        let v = certify_wall(&catalan(12), &int(4)).unwrap();
        assert!(v.is_certified());
        for (n, g) in v.witness_slice().iter().enumerate().skip(1) {
            assert_eq!(g, &rat(n as i64, 2 * (n as i64 + 1)));
        }
    }

    #[test]
    fn catalan_refuted_below_four() {
        assert!(certify_wall(&catalan(24), &rat(7, 2)).unwrap().is_refuted());
    }

    #[test]
    fn point_mass_inside_unit_interval() {
        let a = MomentSequence::new(vec![int(1), rat(1, 2), rat(1, 4), rat(1, 8)]);
        let v = certify_wall(&a, &int(1)).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.witness_slice(), &[int(0), rat(1, 2), int(0)]);
    }

    #[test]
    fn point_mass_at_the_edge() {
        // delta_1 on [0, 1]: g_1 = 1, then the fraction ends
        let a = MomentSequence::new(vec![int(1); 5]);
        assert!(certify_wall(&a, &int(1)).unwrap().is_certified());
        // delta_2 is outside [0, 1]
        let a = MomentSequence::new(vec![int(1), int(2), int(4)]);
        assert_eq!(certify_wall(&a, &int(1)).unwrap().refutation_index, Some(1));
    }

    #[test]
    fn edge_cases() {
        let zero = MomentSequence::new(vec![int(0); 3]);
        assert_eq!(certify_wall(&zero, &int(1)).unwrap().status, CertStatus::Degenerate);
        let sym = MomentSequence::new(vec![int(1), int(0), int(1)]);
        assert_eq!(certify_wall(&sym, &int(2)).unwrap().refutation_index, Some(1));
        assert!(certify_wall(&sym, &int(0)).is_err());
    }
}
