//! Ground truth that does not go through continued fractions: finite
//! discrete measures, their moments, translation, Hankel minors, and a
//! reproducible generator of random measures.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::MomentSequence;
use crate::error::{Error, Result};
use crate::rat::{serde_rat_vec, Rat};

/// Finite positive combination of point masses `sum_i w_i delta_{x_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MeasureRepr", into = "MeasureRepr")]
pub struct DiscreteMeasure {
    atoms: Vec<Rat>,
    weights: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct MeasureRepr {
    #[serde(with = "serde_rat_vec")]
    atoms: Vec<Rat>,
    #[serde(with = "serde_rat_vec")]
    weights: Vec<Rat>,
}

impl TryFrom<MeasureRepr> for DiscreteMeasure {
    type Error = Error;
    fn try_from(r: MeasureRepr) -> Result<Self> {
        DiscreteMeasure::new(r.atoms, r.weights)
    }
}

impl From<DiscreteMeasure> for MeasureRepr {
    fn from(m: DiscreteMeasure) -> Self {
        MeasureRepr { atoms: m.atoms, weights: m.weights }
    }
}

impl DiscreteMeasure {
    /// Atoms must be pairwise distinct and weights strictly positive.
    pub fn new(atoms: Vec<Rat>, weights: Vec<Rat>) -> Result<Self> {
        if atoms.len() != weights.len() {
            return Err(Error::InvalidMeasure(format!(
                "{} atoms but {} weights",
                atoms.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::InvalidMeasure(format!("weight {w} is not positive")));
        }
        let mut seen = HashSet::new();
        if let Some(x) = atoms.iter().find(|x| !seen.insert(*x)) {
            return Err(Error::InvalidMeasure(format!("atom {x} appears twice")));
        }
        Ok(Self { atoms, weights })
    }

    pub fn empty() -> Self {
        Self { atoms: Vec::new(), weights: Vec::new() }
    }

    /// Unit point mass at `x`.
    pub fn dirac(x: Rat) -> Self {
        Self { atoms: vec![x], weights: vec![Rat::one()] }
    }

    pub fn atoms(&self) -> &[Rat] {
        &self.atoms
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn min_atom(&self) -> Option<&Rat> {
        self.atoms.iter().min()
    }

    pub fn max_atom(&self) -> Option<&Rat> {
        self.atoms.iter().max()
    }

    /// Adds a point mass; fails if `x` is already an atom or `w <= 0`.
    pub fn with_atom(mut self, x: Rat, w: Rat) -> Result<Self> {
        self.atoms.push(x);
        self.weights.push(w);
        Self::new(self.atoms, self.weights)
    }
}

/// `a_k = sum_i w_i x_i^k` for `k = 0..=n_max`.
pub fn moments(m: &DiscreteMeasure, n_max: usize) -> MomentSequence {
    let mut out = vec![Rat::zero(); n_max + 1];
    for (x, w) in m.atoms.iter().zip(&m.weights) {
        let mut term = w.clone();
        for slot in out.iter_mut() {
            *slot += &term;
            term *= x;
        }
    }
    MomentSequence::new(out)
}

/// Shifts every atom by `xi`.
pub fn translate(m: &DiscreteMeasure, xi: &Rat) -> DiscreteMeasure {
    DiscreteMeasure {
        atoms: m.atoms.iter().map(|x| x + xi).collect(),
        weights: m.weights.clone(),
    }
}

/// Leading principal minors of `(a_{i+j})` and `(a_{i+j+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HankelReport {
    #[serde(rename = "dets_H", with = "serde_rat_vec")]
    pub dets_h: Vec<Rat>,
    #[serde(rename = "dets_Hshift", with = "serde_rat_vec")]
    pub dets_hshift: Vec<Rat>,
    /// Positivity flags for `(H, Hshift)`.
    pub psd: (bool, bool),
}

impl HankelReport {
    pub fn both_psd(&self) -> bool {
        self.psd.0 && self.psd.1
    }
}

/// Exact Hankel minors with the finite-rank convention: a list passes when
/// every minor is nonnegative and no zero minor is followed by a nonzero one.
pub fn hankel_report(a: &MomentSequence) -> HankelReport {
    let dets_h = hankel_minors(&a.moments, 0);
    let dets_hshift = hankel_minors(&a.moments, 1);
    let psd = (minors_pass(&dets_h), minors_pass(&dets_hshift));
    HankelReport { dets_h, dets_hshift, psd }
}

fn hankel_minors(a: &[Rat], shift: usize) -> Vec<Rat> {
    // a k x k minor reads a_{shift}..a_{shift + 2k - 2}
    let usable = a.len().saturating_sub(shift);
    let max_k = if usable == 0 { 0 } else { (usable - 1) / 2 + 1 };
    (1..=max_k)
        .map(|k| {
            let m = (0..k).map(|i| (0..k).map(|j| a[i + j + shift].clone()).collect()).collect();
            determinant(m)
        })
        .collect()
}

fn minors_pass(dets: &[Rat]) -> bool {
    let mut seen_zero = false;
    for d in dets {
        if d.is_negative() || (seen_zero && !d.is_zero()) {
            return false;
        }
        seen_zero |= d.is_zero();
    }
    true
}

/// Exact determinant by Gaussian elimination with row swaps.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// SplitMix64: the integer recurrence behind [`random_measure`].
///
/// `state += 0x9E3779B97F4A7C15`, then the output is `state` mixed by
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`
/// (all arithmetic wrapping mod 2^64).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `0..n` (plain modulo reduction). `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo) as u64 + 1) as i64
    }
}

/// Deterministic random measure with `count` distinct atoms on the grid
/// `min_atom + (max_atom - min_atom) u / D`, `u = 0..=D`, and weights
/// `p / q` with `1 <= p, q <= denom_bound`.
///
/// `D` is `denom_bound`, raised to `count - 1` if the grid would otherwise
/// be too small for distinct atoms. When `min_atom == max_atom` at most one
/// atom exists. Draw order: for each atom, `u = below(D + 1)` (redrawn on
/// collision), then `p = 1 + below(denom_bound)`, `q = 1 + below(denom_bound)`.
pub fn random_measure(seed: u64, count: usize, min_atom: &Rat, max_atom: &Rat, denom_bound: u64) -> Result<DiscreteMeasure> {
    if min_atom > max_atom {
        return Err(Error::InvalidArgument("min_atom must be <= max_atom".into()));
    }
    let bound = denom_bound.max(1);
    let span = max_atom - min_atom;
    let count = if span.is_zero() { count.min(1) } else { count };
    let grid = bound.max(count.saturating_sub(1) as u64).max(1);
    let mut rng = SplitMix64::new(seed);
    let mut used = HashSet::new();
    let mut atoms = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    for _ in 0..count {
        let u = loop {
            let u = rng.below(grid + 1);
            if used.insert(u) {
                break u;
            }
        };
        let x = min_atom + &span * Rat::new(u.into(), grid.into());
        let p = 1 + rng.below(bound);
        let q = 1 + rng.below(bound);
        atoms.push(x);
        weights.push(Rat::new(p.into(), q.into()));
    }
    DiscreteMeasure::new(atoms, weights)
}
