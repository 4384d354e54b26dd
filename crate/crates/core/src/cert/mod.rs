//! Certification of moment prefixes with support in `[xi, inf)`.
//!
//! A sequence is `xi`-Stieltjes exactly when its S-fraction coefficients can
//! be written as
//!
//! ```text
//!  alpha_{2k-1} = xi (1 + g_{2k-2}) + g_{2k-1}
//!  alpha_{2k}   = g_{2k-1} g_{2k} / (1 + g_{2k-2})
//! ```
//!
//! with `g_0 = 0` and every `g_i >= 0`. The certifier extracts the
//! coefficients from a finite moment prefix and inverts this map. Since a
//! nonnegative `g` prefix always extends (set the rest to zero), a
//! certified prefix is an exact statement about the finite data.

mod g0max;
mod wall;

pub use g0max::{g0_max, GZeroInterval};
pub use wall::certify_wall;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::{extract_partial, s_extract, ExtractEnd, MomentSequence, SCoefficients};
use crate::error::{Error, Result};
use crate::rat::{is_nonneg, serde_rat_vec, Rat};
use crate::transform::binomial_transform;

/// The parameters `g_0, g_1, ..., g_L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GSequence(#[serde(with = "serde_rat_vec")] pub Vec<Rat>);

impl GSequence {
    pub fn new(g: Vec<Rat>) -> Self {
        Self(g)
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(is_nonneg)
    }

    fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(Signed::is_negative)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertStatus {
    CertifiedPrefix,
    Refuted,
    /// The zero sequence; trivially the moments of the zero measure.
    Degenerate,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertStatus::CertifiedPrefix => "CertifiedPrefix",
            CertStatus::Refuted => "Refuted",
            CertStatus::Degenerate => "Degenerate",
        })
    }
}

/// Outcome of a certification.
///
/// `witness_g` is present on `CertifiedPrefix` and is entrywise nonnegative.
/// On `Refuted`, `refutation_index` names the first violated index and
/// `trace_g` holds the values computed up to and including it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertVerdict {
    pub status: CertStatus,
    #[serde(rename = "witness_g")]
    pub witness: Option<GSequence>,
    pub refutation_index: Option<usize>,
    #[serde(rename = "trace_g", default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<GSequence>,
    pub detail: String,
}

impl CertVerdict {
    pub fn certified(witness: Vec<Rat>, detail: impl Into<String>) -> Self {
        Self {
            status: CertStatus::CertifiedPrefix,
            witness: Some(GSequence(witness)),
            refutation_index: None,
            trace: None,
            detail: detail.into(),
        }
    }

    pub fn refuted(index: usize, trace: Vec<Rat>, detail: impl Into<String>) -> Self {
        Self {
            status: CertStatus::Refuted,
            witness: None,
            refutation_index: Some(index),
            trace: Some(GSequence(trace)),
            detail: detail.into(),
        }
    }

    pub fn degenerate() -> Self {
        Self {
            status: CertStatus::Degenerate,
            witness: Some(GSequence::default()),
            refutation_index: None,
            trace: None,
            detail: "zero sequence: moments of the zero measure".into(),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status == CertStatus::CertifiedPrefix
    }

    pub fn is_refuted(&self) -> bool {
        self.status == CertStatus::Refuted
    }

    /// Certified or degenerate: some admissible measure has these moments.
    pub fn is_consistent(&self) -> bool {
        !self.is_refuted()
    }

    pub fn witness_slice(&self) -> &[Rat] {
        self.witness.as_ref().map_or(&[], GSequence::as_slice)
    }
}

/// `alpha_1..alpha_L` from `g_0..g_L` (one coefficient per `g` beyond `g_0`).
///
/// The result has `c = 1`; callers attach their own constant with
/// [`SCoefficients::with_c`]. A zero `g_{2k}` yields a zero coefficient, so
/// the output need not be in standard form.
pub fn alpha_from_g(g: &GSequence, xi: &Rat) -> Result<SCoefficients> {
    if xi.is_negative() {
        return Err(Error::InvalidArgument("xi must be >= 0".into()));
    }
    if let Some(index) = g.first_negative() {
        return Err(Error::NegativeG { index });
    }
    Ok(SCoefficients::unit(alphas_from_g(g.as_slice(), xi)))
}

pub(crate) fn alphas_from_g(g: &[Rat], xi: &Rat) -> Vec<Rat> {
    (1..g.len())
        .map(|i| {
            if i % 2 == 1 {
                xi * (Rat::one() + &g[i - 1]) + &g[i]
            } else {
                &g[i - 1] * &g[i] / (Rat::one() + &g[i - 2])
            }
        })
        .collect()
}

/// Result of running the `g` recursion over a coefficient prefix.
pub(crate) enum Recursion {
    Feasible(Vec<Rat>),
    Infeasible { index: usize, trace: Vec<Rat>, reason: String },
}

impl Recursion {
    pub(crate) fn is_feasible(&self) -> bool {
        matches!(self, Recursion::Feasible(_))
    }

    fn into_verdict(self, detail: &str) -> CertVerdict {
        match self {
            Recursion::Feasible(g) => CertVerdict::certified(g, detail),
            Recursion::Infeasible { index, trace, reason } => CertVerdict::refuted(index, trace, reason),
        }
    }
}

/// Inverts the parametrization for a fixed `g_0`.
///
/// `alphas` must be the nonzero prefix of a standard fraction and `ends`
/// says whether the fraction stops right after it. Works for any `xi >= 0`.
pub(crate) fn g_recursion(alphas: &[Rat], ends: bool, xi: &Rat, g0: &Rat) -> Recursion {
    let mut g: Vec<Rat> = Vec::with_capacity(alphas.len() + 2);
    g.push(g0.clone());
    for (pos, alpha) in alphas.iter().enumerate() {
        let i = pos + 1;
        let gi = if i % 2 == 1 {
            alpha - xi * (Rat::one() + &g[i - 1])
        } else {
            if g[i - 1].is_zero() {
                return Recursion::Infeasible {
                    index: i,
                    trace: g,
                    reason: format!("g_{} = 0 forces alpha_{i} = 0, but alpha_{i} = {alpha}", i - 1),
                };
            }
            alpha * (Rat::one() + &g[i - 2]) / &g[i - 1]
        };
        let negative = gi.is_negative();
        g.push(gi);
        if negative {
            return Recursion::Infeasible { index: i, reason: format!("g_{i} = {} < 0", g[i]), trace: g };
        }
    }
    if ends {
        let i = alphas.len() + 1;
        if i % 2 == 1 && xi.is_positive() {
            let need = xi * (Rat::one() + &g[i - 1]);
            g.push(-need.clone());
            return Recursion::Infeasible {
                index: i,
                trace: g,
                reason: format!("the fraction ends, so alpha_{i} = 0, but it must be at least {need}"),
            };
        }
        // alpha_i = 0 closes the fraction and frees every later g. The
        // explicit zero is only needed when g_{i-1} alone does not force it.
        if !g[i - 1].is_zero() {
            g.push(Rat::zero());
        }
    }
    Recursion::Feasible(g)
}

/// Recovers `g` from S-fraction coefficients for a chosen `g_0`.
///
/// Requires standard form. A fraction whose last nonzero coefficient sits
/// at an even index is refuted: the next odd coefficient would have to be
/// at least `xi (1 + g) > 0`.
pub fn g_from_alpha(s: &SCoefficients, xi: &Rat, g0: &Rat) -> Result<CertVerdict> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument("xi must be > 0".into()));
    }
    if g0.is_negative() {
        return Err(Error::InvalidArgument("g0 must be >= 0".into()));
    }
    if !s.is_standard() {
        return Err(Error::NonStandardInput);
    }
    if s.c().is_zero() {
        return Ok(CertVerdict::degenerate());
    }
    let k = s.nonzero_len();
    Ok(g_recursion(&s.alphas()[..k], s.ends(), xi, g0).into_verdict("every g_i >= 0"))
}

/// Decides whether `a_0..a_N` are the first moments of some positive measure
/// supported in `[xi, inf)`.
///
/// For `xi = 0` this is the nonnegativity test on the S-fraction
/// coefficients; the returned witness is the `xi = 0` parametrization.
pub fn certify_xi_stieltjes(a: &MomentSequence, xi: &Rat) -> Result<CertVerdict> {
    if xi.is_negative() {
        return Err(Error::InvalidArgument("xi must be >= 0".into()));
    }
    let ex = extract_partial(a)?;
    if ex.c.is_zero() && ex.end == ExtractEnd::Terminated {
        return Ok(CertVerdict::degenerate());
    }
    let ends = match &ex.end {
        ExtractEnd::Terminated => true,
        ExtractEnd::Exhausted => false,
        ExtractEnd::Failed { index, reason } => {
            // A violation inside the recovered prefix takes precedence.
            if let Recursion::Infeasible { index, trace, reason } =
                g_recursion(&ex.alphas, false, xi, &Rat::zero())
            {
                return Ok(CertVerdict::refuted(index, trace, reason));
            }
            return Ok(CertVerdict::refuted(*index, Vec::new(), format!("no standard S-fraction: {reason}")));
        }
    };
    if xi.is_zero() {
        if let Some(pos) = ex.alphas.iter().position(Signed::is_negative) {
            let i = pos + 1;
            return Ok(CertVerdict::refuted(i, Vec::new(), format!("alpha_{i} = {} < 0", ex.alphas[pos])));
        }
    }
    Ok(g_recursion(&ex.alphas, ends, xi, &Rat::zero())
        .into_verdict(format!("consistent with a measure on [{xi}, inf)").as_str()))
}

/// The two independently computed `g` sequences of [`dual_route_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualRoute {
    /// From the coefficients of `B_{-xi} a`.
    pub route_binomial: GSequence,
    /// The certifier's witness, from the coefficients of `a` itself.
    pub route_direct: GSequence,
}

/// Computes `g` twice and checks that the results agree.
///
/// The binomial route translates the data by `-xi`, extracts the
/// (nonnegative) coefficients `alpha^b` of the shifted sequence and sets
/// `g_{2k-1} = alpha^b_{2k-1}`,
/// `g_{2k} = (1 + g_{2k-2}) / (xi (1 + g_{2k-2}) + g_{2k-1}) * alpha^b_{2k}`.
/// The direct route is the witness of [`certify_xi_stieltjes`].
pub fn dual_route_check(a: &MomentSequence, xi: &Rat) -> Result<DualRoute> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument("xi must be > 0".into()));
    }
    let verdict = certify_xi_stieltjes(a, xi)?;
    match verdict.status {
        CertStatus::Degenerate => {
            return Ok(DualRoute { route_binomial: GSequence::default(), route_direct: GSequence::default() })
        }
        CertStatus::Refuted => return Err(Error::NotCertified),
        CertStatus::CertifiedPrefix => {}
    }
    let direct = verdict.witness.unwrap_or_default();

    let b = binomial_transform(a, &-xi.clone());
    let sb = s_extract(&b)?;
    let mut g = vec![Rat::zero()];
    for (pos, alpha) in sb.alphas().iter().enumerate() {
        let i = pos + 1;
        let gi = if i % 2 == 1 {
            alpha.clone()
        } else {
            let base = Rat::one() + &g[i - 2];
            let denom = xi * &base + &g[i - 1];
            base / denom * alpha
        };
        g.push(gi);
    }
    if sb.terminated() && !g.last().is_some_and(Zero::is_zero) {
        g.push(Rat::zero());
    }
    let via_binomial = GSequence(g);

    let common = via_binomial.len().min(direct.len());
    if let Some(index) = (0..common).find(|&i| via_binomial.0[i] != direct.0[i]) {
        return Err(Error::RouteMismatch { index });
    }
    Ok(DualRoute { route_binomial: via_binomial, route_direct: direct })
}

/// Re-expresses a feasible `g` with a new starting value `g'_0`.
///
/// Solves `xi g_{2k-2} + g_{2k-1} = xi g'_{2k-2} + g'_{2k-1}` and
/// `g_{2k-1} g_{2k} / (1 + g_{2k-2}) = g'_{2k-1} g'_{2k} / (1 + g'_{2k-2})`
/// index by index. When `g'_{2k+1} = 0` the quotient is undefined; it is
/// satisfied by `g'_{2k+2} = 0` if `g_{2k+1} g_{2k+2} = 0`, and refuted
/// otherwise. The certified result reproduces the same coefficients.
pub fn rebase_g0(g: &GSequence, xi: &Rat, g0_new: &Rat) -> Result<CertVerdict> {
    if !xi.is_positive() {
        return Err(Error::InvalidArgument("xi must be > 0".into()));
    }
    if g0_new.is_negative() {
        return Err(Error::InvalidArgument("g0_new must be >= 0".into()));
    }
    if g.is_empty() {
        return Err(Error::InvalidArgument("g must contain g_0".into()));
    }
    if let Some(index) = g.first_negative() {
        return Err(Error::NegativeG { index });
    }
    let old = g.as_slice();
    let mut new: Vec<Rat> = Vec::with_capacity(old.len());
    new.push(g0_new.clone());
    for i in 1..old.len() {
        let gi = if i % 2 == 1 {
            &old[i] + xi * (&old[i - 1] - &new[i - 1])
        } else if new[i - 1].is_zero() {
            if !(&old[i - 1] * &old[i]).is_zero() {
                new.push(Rat::zero());
                return Ok(CertVerdict::refuted(
                    i,
                    new,
                    format!("g'_{} = 0 cannot reproduce a nonzero alpha_{i}", i - 1),
                ));
            }
            Rat::zero()
        } else {
            &old[i] * (&old[i - 1] / &new[i - 1]) * ((Rat::one() + &new[i - 2]) / (Rat::one() + &old[i - 2]))
        };
        let negative = gi.is_negative();
        new.push(gi);
        if negative {
            return Ok(CertVerdict::refuted(i, new.clone(), format!("g'_{i} = {} < 0", new[i])));
        }
    }
    if alphas_from_g(&new, xi) != alphas_from_g(old, xi) {
        return Err(Error::Internal("rebased g does not reproduce the coefficients".into()));
    }
    Ok(CertVerdict::certified(new, format!("rebased to g_0 = {g0_new}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::s_expand;
    use crate::rat::{int, rat};

    fn gs(v: Vec<Rat>) -> GSequence {
        GSequence(v)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn remark() -> MomentSequence {
        MomentSequence::new(vec![int(1), rat(3, 2), rat(5, 2), rat(9, 2), rat(17, 2)])
    }

    #[test]
    fn alpha_from_g_examples() {
        let s = alpha_from_g(&gs(vec![int(0), rat(1, 2)]), &int(1)).unwrap();
        assert_eq!(s.alphas(), &[rat(3, 2)]);

        let s = alpha_from_g(&gs(ints(&[0, 0, 0, 0, 0])), &int(1)).unwrap();
        assert_eq!(s.alphas(), ints(&[1, 0, 1, 0]).as_slice());

        // one coefficient per g beyond g_0
        let s = alpha_from_g(&gs(ints(&[1, 1, 1, 1])), &int(1)).unwrap();
        assert_eq!(s.alphas(), &[int(3), rat(1, 2), int(3)]);
        let s = alpha_from_g(&gs(ints(&[1, 1, 1, 1, 1])), &int(1)).unwrap();
        assert_eq!(s.alphas(), &[int(3), rat(1, 2), int(3), rat(1, 2)]);
        // round trip through g_from_alpha at the same g_0
        let v = g_from_alpha(&s, &int(1), &int(1)).unwrap();
        assert_eq!(v.witness_slice(), ints(&[1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn alpha_from_g_rejects_negative() {
        assert_eq!(alpha_from_g(&gs(vec![int(0), int(-1)]), &int(1)), Err(Error::NegativeG { index: 1 }));
    }

    #[test]
    fn g_from_alpha_examples() {
        let s = SCoefficients::unit(vec![rat(3, 2), rat(1, 6), rat(4, 3)]).with_terminated(true);
        let v = g_from_alpha(&s, &int(1), &int(0)).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.witness_slice(), &[int(0), rat(1, 2), rat(1, 3), int(0)]);

        let s = SCoefficients::unit(ints(&[2])).with_terminated(true);
        let v = g_from_alpha(&s, &int(1), &int(0)).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.witness_slice(), ints(&[0, 1, 0]).as_slice());
    }

    #[test]
    fn all_ones_refuted_at_first_even_index() {
        // g_1 = 1 - 1 = 0 while alpha_2 = 1 > 0
        let s = SCoefficients::unit(ints(&[1; 30]));
        let v = g_from_alpha(&s, &int(1), &int(0)).unwrap();
        assert!(v.is_refuted());
        assert_eq!(v.refutation_index, Some(2));
    }

    #[test]
    fn termination_parity() {
        // last nonzero coefficient at an even index
        let s = SCoefficients::unit(ints(&[3, 1])).with_terminated(true);
        let v = g_from_alpha(&s, &int(1), &int(0)).unwrap();
        assert_eq!(v.refutation_index, Some(3));
        // ... at an odd index
        let s = SCoefficients::unit(ints(&[3, 1, 5])).with_terminated(true);
        assert!(g_from_alpha(&s, &int(1), &int(0)).unwrap().is_certified());
        // same coefficients, not known to end
        let s = SCoefficients::unit(ints(&[3, 1]));
        assert!(g_from_alpha(&s, &int(1), &int(0)).unwrap().is_certified());
    }

    #[test]
    fn g_from_alpha_input_checks() {
        let s = SCoefficients::unit(ints(&[1, 0, 1]));
        assert_eq!(g_from_alpha(&s, &int(1), &int(0)), Err(Error::NonStandardInput));
        let s = SCoefficients::unit(ints(&[1]));
        assert!(g_from_alpha(&s, &int(0), &int(0)).is_err());
        assert!(g_from_alpha(&s, &int(1), &int(-1)).is_err());
        let v = g_from_alpha(&SCoefficients::zero(), &int(1), &int(0)).unwrap();
        assert_eq!(v.status, CertStatus::Degenerate);
    }

    #[test]
    fn certify_examples() {
        let v = certify_xi_stieltjes(&remark(), &int(1)).unwrap();
        assert!(v.is_certified());
        assert_eq!(v.witness_slice(), &[int(0), rat(1, 2), rat(1, 3), int(0)]);

        let geo = MomentSequence::new(ints(&[1, 2, 4, 8, 16]));
        assert!(certify_xi_stieltjes(&geo, &int(2)).unwrap().is_certified());
        let v = certify_xi_stieltjes(&geo, &int(3)).unwrap();
        assert!(v.is_refuted());
        assert_eq!(v.refutation_index, Some(1));

        // eight Catalan numbers still fit a measure on [1/10, inf); ten do not
        let catalan8 = MomentSequence::new(ints(&[1, 1, 2, 5, 14, 42, 132, 429]));
        assert!(certify_xi_stieltjes(&catalan8, &rat(1, 10)).unwrap().is_certified());
        let catalan10 = MomentSequence::new(ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]));
        let v = certify_xi_stieltjes(&catalan10, &rat(1, 10)).unwrap();
        assert_eq!(v.refutation_index, Some(9));
        assert!(certify_xi_stieltjes(&catalan10, &int(0)).unwrap().is_certified());
    }

    #[test]
    fn certify_edge_cases() {
        let zero = MomentSequence::new(ints(&[0, 0, 0]));
        assert_eq!(certify_xi_stieltjes(&zero, &int(1)).unwrap().status, CertStatus::Degenerate);
        // c delta_0 is Stieltjes but has no mass in [1, inf)
        let delta0 = MomentSequence::new(ints(&[2, 0, 0]));
        assert!(certify_xi_stieltjes(&delta0, &int(0)).unwrap().is_certified());
        assert_eq!(certify_xi_stieltjes(&delta0, &int(1)).unwrap().refutation_index, Some(1));
        // delta_{-1}: negative alpha_1
        let neg = MomentSequence::new(ints(&[1, -1, 1]));
        assert_eq!(certify_xi_stieltjes(&neg, &int(0)).unwrap().refutation_index, Some(1));
        // symmetric two-point measure: no S-fraction at all
        let sym = MomentSequence::new(ints(&[1, 0, 1, 0]));
        let v = certify_xi_stieltjes(&sym, &int(0)).unwrap();
        assert_eq!(v.refutation_index, Some(1));
        assert_eq!(certify_xi_stieltjes(&MomentSequence::new(ints(&[-1])), &int(0)).unwrap().refutation_index, Some(0));
        assert!(certify_xi_stieltjes(&remark(), &int(-1)).is_err());
        assert_eq!(certify_xi_stieltjes(&MomentSequence::new(vec![]), &int(1)), Err(Error::EmptyMoments));
    }

    #[test]
    fn dual_route_examples() {
        let r = dual_route_check(&remark(), &int(1)).unwrap();
        assert_eq!(r.route_binomial.as_slice(), &[int(0), rat(1, 2), rat(1, 3), int(0)]);
        assert_eq!(r.route_direct, r.route_binomial);

        let delta2 = MomentSequence::new(ints(&[1, 2, 4, 8, 16]));
        let r = dual_route_check(&delta2, &int(1)).unwrap();
        assert_eq!(r.route_binomial.as_slice(), ints(&[0, 1, 0]).as_slice());
        assert_eq!(r.route_direct.as_slice(), ints(&[0, 1, 0]).as_slice());

        let r = dual_route_check(&MomentSequence::new(ints(&[0, 0])), &int(1)).unwrap();
        assert!(r.route_binomial.is_empty() && r.route_direct.is_empty());

        let catalan = MomentSequence::new(ints(&[1, 1, 2, 5, 14]));
        assert_eq!(dual_route_check(&catalan, &int(1)), Err(Error::NotCertified));
    }

    #[test]
    fn rebase_remark_example() {
        let g = gs(vec![int(0), rat(1, 2), rat(1, 3), int(0)]);
        let v = rebase_g0(&g, &int(1), &rat(1, 4)).unwrap();
        assert!(v.is_refuted());
        assert_eq!(v.refutation_index, Some(3));
        let t = v.trace.unwrap();
        assert_eq!(t.as_slice(), &[rat(1, 4), rat(1, 4), rat(5, 6), rat(-1, 2)]);
    }

    #[test]
    fn rebase_to_zero_and_identity() {
        let g = gs(ints(&[1, 1, 1, 1]));
        let v = rebase_g0(&g, &int(1), &int(0)).unwrap();
        assert!(v.is_certified());
        let w = v.witness.unwrap();
        assert!(w.is_nonneg());
        assert_eq!(alphas_from_g(w.as_slice(), &int(1)), alphas_from_g(g.as_slice(), &int(1)));

        let v = rebase_g0(&g, &int(1), &int(1)).unwrap();
        assert_eq!(v.witness.unwrap(), g);
    }

    #[test]
    fn rebase_zero_odd_entry() {
        // g'_1 = 0 with g_1 g_2 = 0 is fine
        let g = gs(ints(&[1, 0, 0, 2]));
        let v = rebase_g0(&g, &int(1), &int(1)).unwrap();
        assert!(v.is_certified());
        // g'_1 = 0 against a nonzero alpha_2
        let g = gs(vec![int(0), int(1), int(1)]);
        let v = rebase_g0(&g, &int(1), &int(1)).unwrap();
        assert_eq!(v.refutation_index, Some(2));
        // g'_1 = 1 + 2 (0 - 1) < 0
        let v = rebase_g0(&g, &int(2), &int(1)).unwrap();
        assert_eq!(v.refutation_index, Some(1));
    }

    #[test]
    fn witness_reproduces_moments() {
        let a = remark();
        let v = certify_xi_stieltjes(&a, &int(1)).unwrap();
        let s = alpha_from_g(v.witness.as_ref().unwrap(), &int(1)).unwrap().with_c(int(1)).unwrap();
        assert_eq!(s_expand(&s, 4).into_coeffs(), a.moments);
    }

    #[test]
    fn verdict_json() {
        let v = certify_xi_stieltjes(&remark(), &int(1)).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with(r#"{"status":"CertifiedPrefix","witness_g":["0","1/2","1/3","0"],"refutation_index":null"#));
        assert_eq!(serde_json::from_str::<CertVerdict>(&text).unwrap(), v);
    }
}
