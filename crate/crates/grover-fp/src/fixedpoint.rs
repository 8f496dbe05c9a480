//! Exact dyadic fixed-point values with floor-semantics truncation.
//!
//! An [`FxValue`] is a dyadic rational `mantissa * 2^-frac_bits` with an
//! unbounded integer mantissa, so additions, integer scalings, power-of-two
//! scalings, and full-width products are always exact. Precision is lost only
//! where the emulated hardware loses it: in [`quantize`], [`right_shift`],
//! and [`mul_truncate`], each of which returns the kept value together with
//! the exact discarded remainder.
//!
//! Truncation uses floor semantics throughout: the remainder is always in
//! `[0, 2^-f)`, also for negative inputs. This makes the mathematical
//! `mod 2^-f` and the hardware arithmetic right shift one and the same
//! operation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dyadic rational `mantissa * 2^-frac_bits`.
///
/// `frac_bits` counts fractional bits; the mantissa is an unbounded signed
/// integer, so no operation in this module can overflow. Two values are
/// arithmetically combined only after being brought to a common `frac_bits`
/// (the maximum of the two), which is exact because it only adds trailing
/// zeros.
#[derive(Debug, Clone)]
pub struct FxValue {
    mantissa: BigInt,
    frac_bits: u32,
}

/// Result of a truncating operation: the kept fixed-point value plus the
/// exact discarded remainder.
///
/// Invariants: `value + eps` reconstructs the untruncated input exactly, and
/// `0 <= eps < 2^-value.frac_bits()` (floor semantics, nonnegative
/// remainder).
#[derive(Debug, Clone)]
pub struct TruncationResult {
    pub value: FxValue,
    pub eps: FxValue,
}

impl FxValue {
    pub fn new(mantissa: impl Into<BigInt>, frac_bits: u32) -> Self {
        FxValue {
            mantissa: mantissa.into(),
            frac_bits,
        }
    }

    pub fn zero(frac_bits: u32) -> Self {
        FxValue::new(0, frac_bits)
    }

    /// Decomposes a finite `f64` into an exact dyadic value.
    ///
    /// Every finite binary64 number is a dyadic rational, so this conversion
    /// is lossless. Non-finite inputs are rejected.
    pub fn from_f64_exact(r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite value {r}")));
        }
        let bits = r.to_bits();
        let sign_neg = bits >> 63 == 1;
        let exp_field = ((bits >> 52) & 0x7ff) as i64;
        let frac_field = bits & ((1u64 << 52) - 1);
        // Normal numbers carry an implicit leading bit; subnormals do not.
        let (mant, exp) = if exp_field == 0 {
            (frac_field, -1074i64)
        } else {
            (frac_field | (1u64 << 52), exp_field - 1075)
        };
        let mut m = BigInt::from(mant);
        if sign_neg {
            m = -m;
        }
        Ok(if exp >= 0 {
            FxValue::new(m << exp as u32, 0)
        } else {
            FxValue::new(m, (-exp) as u32)
        })
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> FxValue {
        FxValue::new(self.mantissa.abs(), self.frac_bits)
    }

    /// Re-expresses the value at `frac_bits >= self.frac_bits()`. Exact.
    pub fn with_frac_bits(&self, frac_bits: u32) -> FxValue {
        assert!(
            frac_bits >= self.frac_bits,
            "cannot lower frac_bits exactly; use quantize_exact"
        );
        FxValue::new(
            &self.mantissa << (frac_bits - self.frac_bits),
            frac_bits,
        )
    }

    /// Multiplies by `2^e` exactly.
    pub fn scale_pow2(&self, e: i64) -> FxValue {
        if e >= 0 {
            let e = e as u32;
            // Consume trailing fractional bits before widening the mantissa.
            let drop = e.min(self.frac_bits);
            FxValue::new(&self.mantissa << (e - drop), self.frac_bits - drop)
        } else {
            FxValue::new(self.mantissa.clone(), self.frac_bits + (-e) as u32)
        }
    }

    /// Multiplies by an integer exactly.
    pub fn mul_int(&self, k: impl Into<BigInt>) -> FxValue {
        FxValue::new(&self.mantissa * k.into(), self.frac_bits)
    }

    /// Full-precision product; fractional bits add.
    pub fn mul_exact(&self, rhs: &FxValue) -> FxValue {
        FxValue::new(&self.mantissa * &rhs.mantissa, self.frac_bits + rhs.frac_bits)
    }

    /// Nearest-`f64` approximation.
    ///
    /// Handles mantissas and fractional resolutions far beyond the binary64
    /// range by pre-shifting to a 64-bit window, so the result never passes
    /// through an intermediate infinity.
    pub fn to_f64(&self) -> f64 {
        if self.mantissa.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits();
        let (top, dropped) = if bits > 63 {
            let s = bits - 63;
            ((&self.mantissa >> s).to_i64().expect("63-bit window"), s)
        } else {
            (self.mantissa.to_i64().expect("fits i64"), 0)
        };
        let exp = dropped as i64 - self.frac_bits as i64;
        ldexp(top as f64, exp)
    }

    fn aligned_mantissas(&self, rhs: &FxValue) -> (BigInt, BigInt, u32) {
        let f = self.frac_bits.max(rhs.frac_bits);
        let a = &self.mantissa << (f - self.frac_bits);
        let b = &rhs.mantissa << (f - rhs.frac_bits);
        (a, b, f)
    }
}

/// `x * 2^e` without intermediate overflow/underflow for any `i64` exponent.
fn ldexp(x: f64, e: i64) -> f64 {
    let mut v = x;
    let mut rem = e;
    while rem != 0 && v != 0.0 && v.is_finite() {
        let step = rem.clamp(-1000, 1000);
        v *= f64::from_bits(((1023 + step) as u64) << 52);
        rem -= step;
    }
    v
}

impl Add for &FxValue {
    type Output = FxValue;
    fn add(self, rhs: &FxValue) -> FxValue {
        let (a, b, f) = self.aligned_mantissas(rhs);
        FxValue::new(a + b, f)
    }
}

impl Sub for &FxValue {
    type Output = FxValue;
    fn sub(self, rhs: &FxValue) -> FxValue {
        let (a, b, f) = self.aligned_mantissas(rhs);
        FxValue::new(a - b, f)
    }
}

impl Neg for &FxValue {
    type Output = FxValue;
    fn neg(self) -> FxValue {
        FxValue::new(-&self.mantissa, self.frac_bits)
    }
}

impl PartialEq for FxValue {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned_mantissas(other);
        a == b
    }
}

impl Eq for FxValue {}

impl PartialOrd for FxValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FxValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned_mantissas(other);
        a.cmp(&b)
    }
}

impl fmt::Display for FxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^-{}", self.mantissa, self.frac_bits)
    }
}

/// Stores a real number at `f` fractional bits with floor semantics.
///
/// The kept value has mantissa `floor(r * 2^f)`; the remainder is
/// `r mod 2^-f`, exact and in `[0, 2^-f)` also for negative `r`.
pub fn quantize(r: f64, f: u32) -> Result<TruncationResult> {
    let exact = FxValue::from_f64_exact(r)?;
    Ok(quantize_exact(&exact, f))
}

/// [`quantize`] for an already-exact dyadic input. Infallible.
pub fn quantize_exact(x: &FxValue, f: u32) -> TruncationResult {
    if x.frac_bits <= f {
        return TruncationResult {
            value: x.with_frac_bits(f),
            eps: FxValue::zero(x.frac_bits),
        };
    }
    let s = x.frac_bits - f;
    let q = &x.mantissa >> s; // floor
    let rem = &x.mantissa - (&q << s);
    TruncationResult {
        value: FxValue::new(q, f),
        eps: FxValue::new(rem, x.frac_bits),
    }
}

/// Arithmetic right shift by `a` bits: multiplies by `2^-a` and truncates
/// back to the operand's own fractional resolution.
///
/// `value + eps == x * 2^-a` exactly, with `0 <= eps < 2^-x.frac_bits()`.
pub fn right_shift(x: &FxValue, a: u32) -> TruncationResult {
    let q = &x.mantissa >> a; // floor also for negative mantissas
    let rem = &x.mantissa - (&q << a);
    TruncationResult {
        value: FxValue::new(q, x.frac_bits),
        eps: FxValue::new(rem, x.frac_bits + a),
    }
}

/// Product of two same-`f` values, truncated from the exact `2f`-bit result
/// back to `f` fractional bits.
pub fn mul_truncate(x: &FxValue, y: &FxValue) -> Result<TruncationResult> {
    if x.frac_bits != y.frac_bits {
        return Err(Error::FracBitsMismatch {
            lhs: x.frac_bits,
            rhs: y.frac_bits,
        });
    }
    Ok(quantize_exact(&x.mul_exact(y), x.frac_bits))
}
