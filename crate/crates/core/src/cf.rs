//! S-fraction and J-fraction coefficients.
//!
//! The S-fraction with leading constant `c` and coefficients `alpha_1, alpha_2, ...` is
//!
//! ```text
//!  c / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))
//! ```
//!
//! and the J-fraction with `gamma_0, gamma_1, ...` and `beta_1, beta_2, ...` is
//!
//! ```text
//!  1 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / (1 - ...)))
//! ```
//!
//! Both are treated as formal power series. Coefficients past the stored
//! lists are zero, so every stored fraction is finite.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{serde_rat, serde_rat_vec, Rat};
use crate::series::TruncatedSeries;

/// A finite prefix `a_0..a_N` of a moment sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MomentSequence {
    #[serde(with = "serde_rat_vec")]
    pub moments: Vec<Rat>,
}

impl MomentSequence {
    pub fn new(moments: Vec<Rat>) -> Self {
        Self { moments }
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    /// Highest moment index, `N` for `a_0..a_N`.
    pub fn order(&self) -> Option<usize> {
        self.moments.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.moments.iter().all(Zero::is_zero)
    }

    /// First `len` moments (or all of them if fewer exist).
    pub fn prefix(&self, len: usize) -> Self {
        Self { moments: self.moments[..len.min(self.len())].to_vec() }
    }

    pub fn to_series(&self) -> Result<TruncatedSeries> {
        TruncatedSeries::new(self.moments.clone()).map_err(|_| Error::EmptyMoments)
    }
}

impl From<TruncatedSeries> for MomentSequence {
    fn from(s: TruncatedSeries) -> Self {
        Self { moments: s.into_coeffs() }
    }
}

/// Leading constant and coefficients of an S-fraction.
///
/// `terminated` records that every coefficient after the stored list is
/// known to be zero. The standard form puts nothing but zeros after the
/// first zero coefficient and marks such a fraction terminated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SCoeffRepr", into = "SCoeffRepr")]
pub struct SCoefficients {
    c: Rat,
    alphas: Vec<Rat>,
    terminated: bool,
}

#[derive(Serialize, Deserialize)]
struct SCoeffRepr {
    #[serde(with = "serde_rat")]
    c: Rat,
    #[serde(with = "serde_rat_vec")]
    alphas: Vec<Rat>,
    #[serde(default)]
    terminated: bool,
}

impl TryFrom<SCoeffRepr> for SCoefficients {
    type Error = Error;
    fn try_from(r: SCoeffRepr) -> Result<Self> {
        SCoefficients::new(r.c, r.alphas, r.terminated)
    }
}

impl From<SCoefficients> for SCoeffRepr {
    fn from(s: SCoefficients) -> Self {
        SCoeffRepr { c: s.c, alphas: s.alphas, terminated: s.terminated }
    }
}

impl SCoefficients {
    /// Fails if `c < 0`, or if `c = 0` while some coefficient is nonzero.
    pub fn new(c: Rat, alphas: Vec<Rat>, terminated: bool) -> Result<Self> {
        if c.is_negative() {
            return Err(Error::InvalidArgument("S-fraction constant c must be >= 0".into()));
        }
        if c.is_zero() && alphas.iter().any(|a| !a.is_zero()) {
            return Err(Error::InvalidArgument("c = 0 admits no nonzero coefficients".into()));
        }
        Ok(Self { c, alphas, terminated })
    }

    /// `c = 1` with the given coefficients, not terminated.
    pub fn unit(alphas: Vec<Rat>) -> Self {
        Self { c: Rat::one(), alphas, terminated: false }
    }

    /// The zero fraction, representing the zero measure.
    pub fn zero() -> Self {
        Self { c: Rat::zero(), alphas: Vec::new(), terminated: true }
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn alphas(&self) -> &[Rat] {
        &self.alphas
    }

    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// Same coefficients with another leading constant.
    pub fn with_c(mut self, c: Rat) -> Result<Self> {
        self.c = c;
        Self::new(self.c, self.alphas, self.terminated)
    }

    pub fn with_terminated(mut self, terminated: bool) -> Self {
        self.terminated = terminated;
        self
    }

    /// Number of coefficients before the first zero.
    pub fn nonzero_len(&self) -> usize {
        self.alphas.iter().take_while(|a| !a.is_zero()).count()
    }

    /// True if the fraction ends inside the stored list or is flagged terminated.
    pub fn ends(&self) -> bool {
        self.terminated || self.nonzero_len() < self.alphas.len()
    }

    pub fn is_standard(&self) -> bool {
        let k = self.nonzero_len();
        let tail_zero = self.alphas[k..].iter().all(Zero::is_zero);
        tail_zero && (k == self.alphas.len() || self.terminated)
    }

    /// Cuts the list at the first zero coefficient. The result describes the
    /// same series and is in standard form.
    pub fn standardized(&self) -> Self {
        let k = self.nonzero_len();
        let cut = k < self.alphas.len();
        let alphas = if self.c.is_zero() { Vec::new() } else { self.alphas[..k].to_vec() };
        Self { c: self.c.clone(), alphas, terminated: self.terminated || cut || self.c.is_zero() }
    }
}

/// Diagonal (`gammas`) and off-diagonal (`betas`) J-fraction coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "JCoeffRepr", into = "JCoeffRepr")]
pub struct JCoefficients {
    gammas: Vec<Rat>,
    betas: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct JCoeffRepr {
    #[serde(with = "serde_rat_vec")]
    gammas: Vec<Rat>,
    #[serde(with = "serde_rat_vec")]
    betas: Vec<Rat>,
}

impl TryFrom<JCoeffRepr> for JCoefficients {
    type Error = Error;
    fn try_from(r: JCoeffRepr) -> Result<Self> {
        JCoefficients::new(r.gammas, r.betas)
    }
}

impl From<JCoefficients> for JCoeffRepr {
    fn from(j: JCoefficients) -> Self {
        JCoeffRepr { gammas: j.gammas, betas: j.betas }
    }
}

impl JCoefficients {
    /// Requires `betas.len() + 1 == gammas.len()`.
    pub fn new(gammas: Vec<Rat>, betas: Vec<Rat>) -> Result<Self> {
        if gammas.len() != betas.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "J-fraction needs one more gamma than beta (got {} and {})",
                gammas.len(),
                betas.len()
            )));
        }
        Ok(Self { gammas, betas })
    }

    pub fn gammas(&self) -> &[Rat] {
        &self.gammas
    }

    pub fn betas(&self) -> &[Rat] {
        &self.betas
    }

    pub(crate) fn gammas_mut(&mut self) -> &mut [Rat] {
        &mut self.gammas
    }
}

/// Power series of the S-fraction through `t^order`.
///
/// Evaluated bottom-up. Level `k` of the fraction first touches the `t^k`
/// coefficient, so at most `order` levels are needed and the tail below
/// them is replaced by 1.
pub fn s_expand(s: &SCoefficients, order: usize) -> TruncatedSeries {
    if s.c.is_zero() {
        return TruncatedSeries::zero(order);
    }
    let depth = s.alphas.len().min(order);
    let mut f = TruncatedSeries::one(order);
    for alpha in s.alphas[..depth].iter().rev() {
        // 1 - alpha t f has constant term 1, so the inverse always exists.
        let denom = &TruncatedSeries::one(order) - &f.mul_t().scale(alpha);
        f = denom.reciprocal().expect("unit constant term");
    }
    f.scale(&s.c)
}

/// How an S-fraction extraction ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum ExtractEnd {
    /// A zero coefficient appeared with an identically zero residual.
    Terminated,
    /// The data ran out; later coefficients are undetermined.
    Exhausted,
    /// No standard S-fraction exists; `index` is the first failing coefficient.
    Failed { index: usize, reason: String },
}

/// Coefficients recovered before extraction stopped, and why it stopped.
#[derive(Debug, Clone)]
pub(crate) struct Extraction {
    pub c: Rat,
    pub alphas: Vec<Rat>,
    pub end: ExtractEnd,
}

pub(crate) fn extract_partial(a: &MomentSequence) -> Result<Extraction> {
    let series = a.to_series()?;
    let a0 = series.coeff(0).clone();
    if a.is_zero() {
        return Ok(Extraction { c: Rat::zero(), alphas: Vec::new(), end: ExtractEnd::Terminated });
    }
    if a0.is_negative() {
        return Ok(Extraction {
            c: a0,
            alphas: Vec::new(),
            end: ExtractEnd::Failed { index: 0, reason: "a_0 < 0".into() },
        });
    }
    if a0.is_zero() {
        return Ok(Extraction {
            c: a0,
            alphas: Vec::new(),
            end: ExtractEnd::Failed { index: 0, reason: "a_0 = 0 but later moments are nonzero".into() },
        });
    }

    // Write f_k = p_{k+1} / p_k with p_0 = 1 and p_1 = a / a_0. Then
    // f_k = 1 / (1 - alpha_{k+1} t f_{k+1}) becomes the linear step
    // p_{k+2} = (p_{k+1} - p_k) / (alpha_{k+1} t), so no series inversion is needed.
    let inv = a0.recip();
    let mut prev: Vec<Rat> = vec![Rat::zero(); series.coeffs().len()];
    prev[0] = Rat::one();
    let mut cur: Vec<Rat> = series.coeffs().iter().map(|x| x * &inv).collect();
    let mut alphas = Vec::new();
    while cur.len() >= 2 {
        let diff: Vec<Rat> = cur.iter().zip(&prev).map(|(x, y)| x - y).collect();
        let alpha = diff[1].clone();
        if alpha.is_zero() {
            if diff.iter().all(Zero::is_zero) {
                return Ok(Extraction { c: a0, alphas, end: ExtractEnd::Terminated });
            }
            let index = alphas.len() + 1;
            return Ok(Extraction {
                c: a0,
                alphas,
                end: ExtractEnd::Failed {
                    index,
                    reason: format!("alpha_{index} = 0 but the remaining series is not zero"),
                },
            });
        }
        let scale = alpha.recip();
        let next: Vec<Rat> = diff[1..].iter().map(|x| x * &scale).collect();
        cur.pop();
        prev = cur;
        cur = next;
        alphas.push(alpha);
    }
    Ok(Extraction { c: a0, alphas, end: ExtractEnd::Exhausted })
}

/// The unique standard S-fraction reproducing `a_0..a_N`.
///
/// At most `N` coefficients come out of `N + 1` moments. Coefficients are
/// not required to be nonnegative.
pub fn s_extract(a: &MomentSequence) -> Result<SCoefficients> {
    let ex = extract_partial(a)?;
    match ex.end {
        ExtractEnd::Failed { index, reason } => Err(Error::NotSFracRepresentable { index, reason }),
        end => Ok(SCoefficients { c: ex.c, alphas: ex.alphas, terminated: end == ExtractEnd::Terminated }),
    }
}

/// Even contraction of an S-fraction into the equivalent J-fraction:
/// `gamma_0 = alpha_1`, `gamma_n = alpha_{2n} + alpha_{2n+1}`,
/// `beta_n = alpha_{2n-1} alpha_{2n}`. The leading constant is not carried.
pub fn contract(s: &SCoefficients) -> JCoefficients {
    let alpha = |i: usize| -> Rat { s.alphas.get(i - 1).cloned().unwrap_or_else(Rat::zero) };
    let m = s.alphas.len() / 2;
    let mut gammas = Vec::with_capacity(m + 1);
    let mut betas = Vec::with_capacity(m);
    gammas.push(alpha(1));
    for n in 1..=m {
        gammas.push(alpha(2 * n) + alpha(2 * n + 1));
        betas.push(alpha(2 * n - 1) * alpha(2 * n));
    }
    JCoefficients { gammas, betas }
}

/// Power series of `c` times the J-fraction through `t^order`.
///
/// Level `k` first touches `t^{2k}`, so only `order / 2 + 1` levels are evaluated.
pub fn j_expand(j: &JCoefficients, c: &Rat, order: usize) -> TruncatedSeries {
    let levels = j.gammas.len();
    let cap = levels.min(order / 2 + 1);
    let mut f = TruncatedSeries::one(order);
    for k in (0..cap).rev() {
        let mut denom = TruncatedSeries::linear(Rat::one(), -j.gammas[k].clone(), order);
        if k + 1 < levels {
            denom = &denom - &f.mul_t().mul_t().scale(&j.betas[k]);
        }
        f = denom.reciprocal().expect("unit constant term");
    }
    f.scale(c)
}
