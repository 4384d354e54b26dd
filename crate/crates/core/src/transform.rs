//! Binomial transform of moment sequences and the matching J-fraction shift.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cf::{JCoefficients, MomentSequence};
use crate::rat::Rat;

/// `b_n = sum_k C(n, k) a_k xi^{n-k}`: the moments of the representing
/// measure translated by `xi`. Length is preserved.
pub fn binomial_transform(a: &MomentSequence, xi: &Rat) -> MomentSequence {
    if xi.is_zero() {
        return a.clone();
    }
    let len = a.len();
    let mut powers = Vec::with_capacity(len);
    let mut p = Rat::one();
    for _ in 0..len {
        powers.push(p.clone());
        p *= xi;
    }
    let mut row: Vec<BigInt> = Vec::with_capacity(len);
    let mut out = Vec::with_capacity(len);
    for n in 0..len {
        next_pascal_row(&mut row);
        let b = (0..=n).fold(Rat::zero(), |acc, k| {
            let a_k = &a.moments[k];
            if a_k.is_zero() {
                acc
            } else {
                acc + a_k * &powers[n - k] * Rat::from_integer(row[k].clone())
            }
        });
        out.push(b);
    }
    MomentSequence::new(out)
}

/// Advances `row` from Pascal row `n - 1` to row `n` (the empty row becomes `[1]`).
fn next_pascal_row(row: &mut Vec<BigInt>) {
    for k in (1..row.len()).rev() {
        let prev = row[k - 1].clone();
        row[k] += prev;
    }
    row.push(BigInt::one());
}

/// Replaces every `gamma_i` with `gamma_i + xi`; the betas are untouched.
pub fn j_shift(j: &JCoefficients, xi: &Rat) -> JCoefficients {
    let mut out = j.clone();
    for g in out.gammas_mut() {
        *g += xi;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{contract, j_expand, s_expand, SCoefficients};
    use crate::rat::{int, rat};
    use proptest::prelude::*;

    fn ms(v: Vec<Rat>) -> MomentSequence {
        MomentSequence::new(v)
    }

    #[test]
    fn pascal_rows() {
        let mut row = Vec::new();
        for _ in 0..5 {
            next_pascal_row(&mut row);
        }
        let expect: Vec<BigInt> = [1, 4, 6, 4, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(row, expect);
    }

    #[test]
    fn transform_examples() {
        let ones = ms(vec![int(1); 4]);
        assert_eq!(binomial_transform(&ones, &int(1)), ms(vec![int(1), int(2), int(4), int(8)]));

        let a = ms(vec![int(1), rat(3, 2), rat(5, 2), rat(9, 2)]);
        // oracle: (delta_0 + delta_1)/2 has moments 1, 1/2, 1/2, ...
        assert_eq!(binomial_transform(&a, &int(-1)), ms(vec![int(1), rat(1, 2), rat(1, 2), rat(1, 2)]));
        assert_eq!(binomial_transform(&a, &int(0)), a);
        assert_eq!(binomial_transform(&ms(vec![]), &int(3)), ms(vec![]));
    }

    #[test]
    fn shift_examples() {
        let j = JCoefficients::new(vec![int(1), int(2), int(2)], vec![int(1), int(1)]).unwrap();
        let shifted = j_shift(&j, &int(1));
        assert_eq!(shifted.gammas(), &[int(2), int(3), int(3)]);
        assert_eq!(shifted.betas(), j.betas());
        assert_eq!(j_shift(&j, &int(0)), j);

        let j = JCoefficients::new(vec![rat(3, 2), rat(3, 2), int(0)], vec![rat(1, 4), int(0)]).unwrap();
        let shifted = j_shift(&j, &int(-1));
        assert_eq!(shifted.gammas(), &[rat(1, 2), rat(1, 2), int(-1)]);
        assert_eq!(shifted.betas(), &[rat(1, 4), int(0)]);
        // oracle: series of the shifted fraction is the transformed series
        let a = MomentSequence::from(j_expand(&j, &int(1), 8));
        let b = MomentSequence::from(j_expand(&shifted, &int(1), 8));
        assert_eq!(binomial_transform(&a, &int(-1)), b);
    }

    fn arb_rat(max: i64) -> impl Strategy<Value = Rat> {
        (-max..=max, 1i64..=max).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn group_law(a in proptest::collection::vec(arb_rat(12), 0..12), xi in arb_rat(6)) {
            let a = ms(a);
            let back = binomial_transform(&binomial_transform(&a, &xi), &-xi.clone());
            prop_assert_eq!(back, a);
        }

        #[test]
        fn shift_matches_transform(
            alphas in proptest::collection::vec((0i64..=10, 1i64..=6).prop_map(|(n, d)| rat(n, d)), 0..8),
            c in (1i64..=5).prop_map(int),
            xi in arb_rat(5),
            order in 0usize..=14,
        ) {
            let s = SCoefficients::new(c.clone(), alphas, false).unwrap();
            let lhs = j_expand(&j_shift(&contract(&s), &xi), &c, order);
            let rhs = binomial_transform(&MomentSequence::from(s_expand(&s, order)), &xi);
            prop_assert_eq!(MomentSequence::from(lhs), rhs);
        }
    }
}
