//! Built-in worked examples, run by `stieltjes-cf paper-demos`.

use num_traits::Signed;
use serde::Serialize;

use crate::cert::{alpha_from_g, certify_wall, certify_xi_stieltjes, g0_max, rebase_g0, GSequence};
use crate::cf::{s_expand, s_extract, MomentSequence};
use crate::error::Result;
use crate::rat::{int, rat, Rat, Tuple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn demo(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> DemoResult {
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    DemoResult { name: name.to_string(), passed, detail }
}

/// Catalan numbers `C_0..C_{len-1}`.
pub fn catalan(len: usize) -> MomentSequence {
    let mut c: Vec<Rat> = Vec::with_capacity(len);
    for n in 0..len as i64 {
        c.push(match c.last() {
            None => int(1),
            Some(prev) => prev * int(2 * (2 * n - 1)) / int(n + 1),
        });
    }
    MomentSequence::new(c)
}

/// `a_n = (1 + 2^n) / 2`, the moments of `(delta_1 + delta_2) / 2`.
pub fn half_one_plus_two_pow(len: usize) -> MomentSequence {
    let mut out = Vec::with_capacity(len);
    let mut p = int(1);
    for _ in 0..len {
        out.push((int(1) + &p) / int(2));
        p *= int(2);
    }
    MomentSequence::new(out)
}

fn index(v: &crate::cert::CertVerdict) -> String {
    v.refutation_index.map_or_else(|| "-".to_string(), |i| i.to_string())
}

pub fn run_all() -> Vec<DemoResult> {
    let tol = rat(1, 1_000_000);
    vec![
        demo("catalan S-fraction has alpha_i = 1", || {
            let s = s_extract(&catalan(9))?;
            Ok((s.c() == &int(1) && s.alphas() == vec![int(1); 8].as_slice(), format!("alpha = {}", Tuple(s.alphas()))))
        }),
        demo("catalan certified on [0, 4]", || {
            let v = certify_wall(&catalan(40), &int(4))?;
            let closed = v.witness_slice().iter().enumerate().skip(1).take(19)
                .all(|(n, g)| *g == rat(n as i64, 2 * (n as i64 + 1)));
            Ok((v.is_certified() && closed, format!("{}, g_n = n/(2(n+1))", v.status)))
        }),
        demo("catalan refuted on [7/2, inf) for Wall", || {
            let v = certify_wall(&catalan(40), &rat(7, 2))?;
            Ok((v.is_refuted(), format!("{} at index {}", v.status, index(&v))))
        }),
        demo("catalan is not xi-Stieltjes for xi > 0", || {
            let mut detail = Vec::new();
            let mut ok = true;
            for xi in [rat(1, 10), rat(1, 4), rat(1, 2), int(1)] {
                let v = certify_xi_stieltjes(&catalan(40), &xi)?;
                ok &= v.is_refuted();
                detail.push(format!("xi={xi}: index {}", index(&v)));
            }
            Ok((ok, detail.join("; ")))
        }),
        demo("(1 + 2^n)/2 has alpha = (3/2, 1/6, 4/3)", || {
            let s = s_extract(&half_one_plus_two_pow(5))?;
            Ok((
                s.alphas() == [rat(3, 2), rat(1, 6), rat(4, 3)] && s.terminated(),
                format!("alpha = {}, terminated = {}", Tuple(s.alphas()), s.terminated()),
            ))
        }),
        demo("(1 + 2^n)/2 is 1-Stieltjes with g = (0, 1/2, 1/3, 0)", || {
            let v = certify_xi_stieltjes(&half_one_plus_two_pow(5), &int(1))?;
            let ok = v.is_certified() && v.witness_slice() == [int(0), rat(1, 2), rat(1, 3), int(0)];
            Ok((ok, format!("{}, g = {}", v.status, Tuple(v.witness_slice()))))
        }),
        demo("(1 + 2^n)/2 admits no g_0 > 0", || {
            let g = GSequence::new(vec![int(0), rat(1, 2), rat(1, 3), int(0)]);
            let mut ok = true;
            let mut detail = Vec::new();
            for g0 in [rat(1, 8), rat(1, 4), rat(3, 8)] {
                let v = rebase_g0(&g, &int(1), &g0)?;
                let t = v.trace.clone().unwrap_or_default();
                let t = t.as_slice();
                let g1 = rat(1, 2) - &g0;
                let g2 = (int(1) + &g0) / (int(3) * (int(1) - int(2) * &g0));
                ok &= v.is_refuted()
                    && v.refutation_index == Some(3)
                    && t.len() == 4
                    && t[1] == g1
                    && t[2] == g2
                    && t[3].is_negative();
                detail.push(format!("g0={g0}: g' = {}", Tuple(t)));
            }
            Ok((ok, detail.join("; ")))
        }),
        demo("(1 + 2^n)/2 has g0_max = 0", || {
            let iv = g0_max(&half_one_plus_two_pow(5), &int(1), &tol)?;
            Ok((
                iv.upper_bound_lo == int(0) && iv.upper_bound_hi <= tol,
                format!("[{}, {}]", iv.upper_bound_lo, iv.upper_bound_hi),
            ))
        }),
        demo("g = (1, 1, 1, 1) gives g0_max >= 1", || {
            let s = alpha_from_g(&GSequence::new(vec![int(1); 4]), &int(1))?;
            let a = MomentSequence::from(s_expand(&s, 8));
            let iv = g0_max(&a, &int(1), &tol)?;
            Ok((iv.upper_bound_lo >= int(1), format!("[{}, {}]", iv.upper_bound_lo, iv.upper_bound_hi)))
        }),
    ]
}
