//! Continued-fraction characterization of moment sequences with support in
//! `[xi, inf)`, in exact rational arithmetic.
//!
//! * [`series`]: truncated formal power series over the rationals.
//! * [`cf`]: S-fraction and J-fraction expansion, extraction and contraction.
//! * [`transform`]: the `xi`-binomial transform and J-fraction shift.
//! * [`cert`]: certification and refutation of finite moment prefixes.
//! * [`oracle`]: discrete measures and Hankel minors as independent ground truth.
//! * [`cli`]: the `stieltjes-cf` command line.

pub mod cert;
pub mod cf;
pub mod cli;
pub mod demos;
pub mod error;
pub mod oracle;
pub mod rat;
pub mod series;
pub mod transform;

pub use cert::{
    alpha_from_g, certify_wall, certify_xi_stieltjes, dual_route_check, g0_max, g_from_alpha, rebase_g0,
    CertStatus, CertVerdict, DualRoute, GSequence, GZeroInterval,
};
pub use cf::{contract, j_expand, s_expand, s_extract, JCoefficients, MomentSequence, SCoefficients};
pub use error::{Error, Result};
pub use oracle::{hankel_report, moments, random_measure, translate, DiscreteMeasure, HankelReport};
pub use rat::{parse_rat, Rat};
pub use series::TruncatedSeries;
pub use transform::{binomial_transform, j_shift};
