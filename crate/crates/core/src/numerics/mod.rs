//! Foundational numeric services: configurable-precision arithmetic helpers,
//! Gauss-Legendre and adaptive quadrature, principal-value integration,
//! 1-D optimization, and finite differences.
//!
//! High-precision work runs on [`rug::Float`]; the working precision is a
//! per-call parameter (see [`Precision`]). Hankel matrices lose O(n) digits,
//! so moment/determinant work defaults to 256 bits while everything else is
//! fine at hardware doubles.

mod diff;
mod optimize;
mod quad;

pub use diff::{finite_diff, finite_diff_float, DiffOrder};
pub use optimize::{bisect_root, maximize_1d, minimize_1d};
pub use quad::{
    gauss_legendre, integrate_adaptive, integrate_adaptive_f64, principal_value,
    principal_value_f64, Integral, QuadratureRule,
};

use crate::error::{Error, Result};
use rug::Float;

/// Working precision in mantissa bits for extended-precision computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    /// Hardware double equivalent.
    pub const DOUBLE: Precision = Precision { bits: 53 };
    /// Default for moment/determinant work.
    pub const DETERMINANT: Precision = Precision { bits: 256 };

    pub fn new(bits: u32) -> Result<Self> {
        if bits < 53 {
            return Err(Error::InvalidArgument(format!(
                "mantissa_bits must be >= 53, got {bits}"
            )));
        }
        Ok(Precision { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Doubled mantissa, used by the automatic escalation path.
    pub fn doubled(self) -> Precision {
        Precision {
            bits: self.bits.saturating_mul(2),
        }
    }

    pub fn float(self, v: f64) -> Float {
        Float::with_val(self.bits, v)
    }

    /// A sensible quadrature tolerance a few digits above the epsilon of this
    /// precision.
    pub fn quad_tol(self) -> f64 {
        let shift = self.bits.saturating_sub(12).min(1000) as i32;
        2f64.powi(-shift)
    }

    /// Machine epsilon of this precision as an `f64` (subnormal-safe clamp).
    pub fn epsilon(self) -> f64 {
        2f64.powi(-(self.bits.min(1000) as i32))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DETERMINANT
    }
}

/// Convert preserving the value exactly (f64 -> Float is exact at >= 53 bits).
pub fn to_float(prec: Precision, v: f64) -> Float {
    Float::with_val(prec.bits(), v)
}
