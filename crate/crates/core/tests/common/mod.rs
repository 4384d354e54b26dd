//! Test-only oracles that avoid the library's continued-fraction code paths.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use stieltjes_cf::rat::{int, rat};
use stieltjes_cf::{MomentSequence, Rat};

pub fn catalan(len: usize) -> MomentSequence {
    // C_n = binom(2n, n) / (n + 1), computed from factorial ratios
    let moments = (0..len as i64)
        .map(|n| {
            let mut num = int(1);
            for k in 1..=n {
                num = num * int(n + k) / int(k);
            }
            num / int(n + 1)
        })
        .collect();
    MomentSequence::new(moments)
}

/// Plain cofactor-free elimination, kept separate from the library's own.
fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut acc = Rat::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !m[r][i].is_zero()) else { return Rat::zero() };
        if p != i {
            m.swap(p, i);
            acc = -acc;
        }
        acc *= m[i][i].clone();
        let row = m[i].clone();
        for r in m.iter_mut().skip(i + 1) {
            let f = &r[i] / &row[i];
            for (c, v) in r.iter_mut().enumerate().skip(i) {
                *v -= &f * &row[c];
            }
        }
    }
    acc
}

fn hankel(a: &[Rat], shift: usize, k: usize) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    det((0..k).map(|i| (0..k).map(|j| a[i + j + shift].clone()).collect()).collect())
}

/// How the Hankel-ratio coefficient list ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HankelEnd {
    /// Data exhausted.
    Open,
    /// A zero coefficient at this index.
    ZeroAt(usize),
}

/// S-fraction coefficients from Hankel determinant ratios:
/// `alpha_{2k+1} = H0_k H1_{k+1} / (H0_{k+1} H1_k)`,
/// `alpha_{2k} = H0_{k+1} H1_{k-1} / (H0_k H1_k)`.
/// Stops at the first zero coefficient. Requires `a_0 > 0`.
pub fn hankel_alphas(a: &[Rat]) -> (Vec<Rat>, HankelEnd) {
    assert!(a[0].is_positive());
    let mut out = Vec::new();
    for i in 1..a.len() {
        let k = i / 2;
        let (num, den) = if i % 2 == 1 {
            (hankel(a, 0, k) * hankel(a, 1, k + 1), hankel(a, 0, k + 1) * hankel(a, 1, k))
        } else {
            (hankel(a, 0, k + 1) * hankel(a, 1, k - 1), hankel(a, 0, k) * hankel(a, 1, k))
        };
        if num.is_zero() {
            return (out, HankelEnd::ZeroAt(i));
        }
        assert!(!den.is_zero(), "degenerate Hankel ratio at {i}");
        out.push(num / den);
    }
    (out, HankelEnd::Open)
}

/// Straight-line g recursion with `g_0 = 0`: `None` if every step stays
/// nonnegative, otherwise the first failing index.
pub fn straight_line_refutation(alphas: &[Rat], zero_at: Option<usize>, xi: &Rat) -> Option<usize> {
    let one = Rat::one();
    let mut g = vec![Rat::zero()];
    let mut i = 1;
    while i <= alphas.len() {
        let alpha = &alphas[i - 1];
        let next = if i % 2 == 1 {
            alpha - xi * (&one + &g[i - 1])
        } else {
            if g[i - 1].is_zero() {
                return Some(i);
            }
            alpha * (&one + &g[i - 2]) / &g[i - 1]
        };
        if next.is_negative() {
            return Some(i);
        }
        g.push(next);
        i += 1;
    }
    match zero_at {
        // a zero at an odd index needs xi (1 + g) + g' = 0
        Some(z) if z % 2 == 1 && xi.is_positive() => Some(z),
        _ => None,
    }
}

/// Oracle verdict for a moment prefix: refutation index or `None`.
pub fn oracle_refutation(a: &MomentSequence, xi: &Rat) -> Option<usize> {
    let (alphas, end) = hankel_alphas(&a.moments);
    let zero_at = match end {
        HankelEnd::Open => None,
        HankelEnd::ZeroAt(i) => Some(i),
    };
    straight_line_refutation(&alphas, zero_at, xi)
}

/// Random rational `n / d` with `lo <= n <= hi`, `1 <= d <= dmax`.
pub fn rand_rat(rng: &mut stieltjes_cf::oracle::SplitMix64, lo: i64, hi: i64, dmax: i64) -> Rat {
    let n = rng.range(lo, hi);
    let d = rng.range(1, dmax);
    rat(n, d)
}
