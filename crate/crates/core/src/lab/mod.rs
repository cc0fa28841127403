//! Foliation-specific analysis of the singular set.

pub mod classify;
pub mod error;
pub mod integral;
pub mod jet;
pub mod koszul;
pub mod nk;
pub mod scheme;

pub use classify::{classify_point, local_chart, milnor, milnor_affine, milnor_field, milnor_rot, PointClass, PointKind, SimpleClass};
pub use error::LabError;
pub use integral::{compose_first_integral, frobenius_first_integral, TruncFirstIntegral};
pub use jet::{jet_classify, JetClass, JetVerdict};
pub use koszul::{koszul_generators, KoszulPair};
pub use nk::{nk_count, nk_divisor, NKCountReport, NKDivisor, NKPoint};
pub use scheme::{
    affine_decomposition, isolated_count, singular_scheme, AffineComponentCheck, CurveComponent, IsolatedReport,
    SingularScheme,
};

use crate::ideal::{CancelToken, DEFAULT_MORA_CAP};

pub const DEFAULT_FIRST_INTEGRAL_CAP: u32 = 8;
pub const DEFAULT_KOSZUL_CAP: u32 = 6;

/// Degree caps and the cancellation token shared by long computations.
#[derive(Debug, Clone)]
pub struct LabConfig {
    pub mora_cap: u32,
    pub first_integral_cap: u32,
    pub koszul_cap: u32,
    pub cancel: CancelToken,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            mora_cap: DEFAULT_MORA_CAP,
            first_integral_cap: DEFAULT_FIRST_INTEGRAL_CAP,
            koszul_cap: DEFAULT_KOSZUL_CAP,
            cancel: CancelToken::new(),
        }
    }
}

impl LabConfig {
    /// Run `f` with this configuration's token visible to every checkpoint.
    pub fn scope<R>(&self, f: impl FnOnce() -> R) -> R {
        self.cancel.scope(f)
    }
}
