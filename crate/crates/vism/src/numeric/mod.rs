//! Arbitrary-precision real arithmetic and the few special functions the
//! solver needs.
//!
//! Precision is specified in decimal significant digits and threaded through
//! every computation as a [`PrecisionContext`]. Values convert to and from
//! decimal strings at API boundaries so results do not depend on the binary
//! representation underneath.

mod quadrature;

pub use quadrature::{gauss_quadrature, gauss_quadrature_with_limit};

use crate::error::{Result, VismError};
use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

const LOG2_10: f64 = 3.321928094887362;

/// Working precision: `digits` significant decimal digits guaranteed at the
/// API boundary, with `guard_digits` extra digits carried internally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: u32,
    guard_digits: u32,
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 16;
    pub const DEFAULT_GUARD: u32 = 10;

    /// Context with the default guard of 10 extra digits.
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard_digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(VismError::PrecisionTooLow(digits));
        }
        Ok(PrecisionContext {
            digits,
            guard_digits,
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Binary precision carried internally: digits + guard, converted to bits
    /// with a small slack.
    pub(crate) fn prec_bits(&self) -> u32 {
        ((self.digits + self.guard_digits) as f64 * LOG2_10).ceil() as u32 + 4
    }

    pub fn zero(&self) -> HPReal {
        HPReal(Float::new(self.prec_bits()))
    }

    pub fn one(&self) -> HPReal {
        self.from_u32(1)
    }

    /// 10^-digits: the guaranteed boundary accuracy.
    pub fn epsilon(&self) -> HPReal {
        self.pow10(-(self.digits as i32))
    }

    /// 10^-(digits+guard): the internal working accuracy.
    pub fn working_epsilon(&self) -> HPReal {
        self.pow10(-((self.digits + self.guard_digits) as i32))
    }

    /// 10^k at working precision.
    pub fn pow10(&self, k: i32) -> HPReal {
        HPReal(Float::with_val(self.prec_bits(), 10).pow(k))
    }

    pub fn from_u32(&self, v: u32) -> HPReal {
        HPReal(Float::with_val(self.prec_bits(), v))
    }

    pub fn from_i64(&self, v: i64) -> HPReal {
        HPReal(Float::with_val(self.prec_bits(), v))
    }

    pub fn from_f64(&self, v: f64) -> HPReal {
        HPReal(Float::with_val(self.prec_bits(), v))
    }

    /// Parse a decimal string ("1.25", "-3e-4", ...) at working precision.
    pub fn from_str(&self, s: &str) -> Result<HPReal> {
        let incomplete = Float::parse(s.trim()).map_err(|_| VismError::NumberParse {
            text: s.to_string(),
        })?;
        Ok(HPReal(Float::with_val(self.prec_bits(), incomplete)))
    }

    /// π at working precision.
    pub fn pi(&self) -> HPReal {
        hp_pi(self)
    }
}

/// π to `ctx.digits` correct digits.
pub fn hp_pi(ctx: &PrecisionContext) -> HPReal {
    HPReal(Float::with_val(ctx.prec_bits(), Constant::Pi))
}

/// An arbitrary-precision real number. Immutable in spirit: operations
/// produce new values, at the larger of the operand precisions.
#[derive(Clone, Debug)]
pub struct HPReal(pub(crate) Float);

impl HPReal {
    pub(crate) fn raw(f: Float) -> Self {
        HPReal(f)
    }

    pub(crate) fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn abs(&self) -> HPReal {
        HPReal(self.0.abs_ref().complete(self.prec()))
    }

    pub fn sqrt(&self) -> HPReal {
        HPReal(self.0.sqrt_ref().complete(self.prec()))
    }

    pub fn sin(&self) -> HPReal {
        HPReal(self.0.sin_ref().complete(self.prec()))
    }

    pub fn cos(&self) -> HPReal {
        HPReal(self.0.cos_ref().complete(self.prec()))
    }

    pub fn sin_cos(&self) -> (HPReal, HPReal) {
        let (s, c) = self
            .0
            .clone()
            .sin_cos(Float::new(self.prec()));
        (HPReal(s), HPReal(c))
    }

    pub fn exp(&self) -> HPReal {
        HPReal(self.0.exp_ref().complete(self.prec()))
    }

    pub fn ln(&self) -> HPReal {
        HPReal(self.0.ln_ref().complete(self.prec()))
    }

    pub fn log10(&self) -> HPReal {
        HPReal(self.0.log10_ref().complete(self.prec()))
    }

    pub fn powi(&self, k: i32) -> HPReal {
        HPReal(Float::with_val(self.prec(), (&self.0).pow(k)))
    }

    pub fn pow(&self, e: &HPReal) -> HPReal {
        let prec = self.prec().max(e.prec());
        HPReal(Float::with_val(prec, (&self.0).pow(&e.0)))
    }

    pub fn square(&self) -> HPReal {
        HPReal(self.0.square_ref().complete(self.prec()))
    }

    pub fn recip(&self) -> HPReal {
        HPReal(self.0.recip_ref().complete(self.prec()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Total order; values are never NaN by construction.
    pub fn cmp_total(&self, other: &HPReal) -> Ordering {
        self.0.partial_cmp(&other.0).expect("NaN in HPReal")
    }

    pub fn max(&self, other: &HPReal) -> HPReal {
        if self.cmp_total(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn min(&self, other: &HPReal) -> HPReal {
        if self.cmp_total(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Decimal serialization with `digits` significant digits, scientific
    /// form `d.dd...e±x`. Parsing this string back under the same context
    /// reproduces the value to that precision.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        // rug's `{:.P e}` prints P total significant digits.
        let d = digits.max(1) as usize;
        format!("{:.*e}", d, self.0)
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Print at the value's full decimal capacity.
        let digits = (self.prec() as f64 / LOG2_10).floor() as u32;
        write!(f, "{}", self.to_decimal_string(digits.max(1)))
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                let prec = self.prec().max(rhs.prec());
                HPReal(std::ops::$trait::$method(&self.0, &rhs.0).complete(prec))
            }
        }
        impl std::ops::$trait<HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl std::ops::Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal((-&self.0).complete(self.prec()))
    }
}

impl std::ops::Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -&self
    }
}

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2x·H_n − 2n·H_{n−1}.
pub fn hermite(n: u32, x: &HPReal) -> HPReal {
    let prec = x.prec();
    let one = HPReal(Float::with_val(prec, 1));
    if n == 0 {
        return one;
    }
    let two_x = HPReal(Float::with_val(prec, 2)) * x;
    let mut prev = one; // H_0
    let mut cur = two_x.clone(); // H_1
    for k in 1..n {
        let two_k = HPReal(Float::with_val(prec, 2 * k));
        let next = &two_x * &cur - &two_k * &prev;
        prev = cur;
        cur = next;
    }
    cur
}
