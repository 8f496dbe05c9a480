//! Bit-exact fixed-point Grover evolution on the two-value representation.
//!
//! Each iteration negates the solution amplitude (oracle), forms the exact
//! integer sum of all `2^n` amplitudes, applies the diffusion scaling as an
//! `(n-1)`-bit arithmetic right shift — the single truncating step — and
//! reflects both amplitudes about the scaled sum. Mantissas are unbounded
//! integers, so the `n + f + 2`-bit headroom requirement is met by
//! construction and every run is reproducible mantissa-for-mantissa.
//!
//! [`measured_l2`] compares the resulting fixed-point measurement
//! probabilities against the ideal ones and reports their l2 distance.

use num_bigint::BigInt;
use num_integer::Roots;

use crate::fixedpoint::{right_shift, FxValue};
use crate::reference::{self, GroverParams};

/// Fixed-point amplitude pair at `f` fractional bits after `iteration`
/// Grover steps.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedTwoValueState {
    pub amp_s: FxValue,
    pub amp_ns: FxValue,
    pub iteration: u32,
}

/// Initial amplitude mantissa `floor(2^(f - n/2))`, computed as
/// `isqrt(2^(2f - n))` so odd `n` needs no irrational intermediate.
pub fn initial_mantissa(n: u32, f: u32) -> BigInt {
    if 2 * f >= n {
        Roots::sqrt(&(BigInt::from(1) << (2 * f - n)))
    } else {
        BigInt::from(0)
    }
}

/// Uniform-superposition fixed-point state: both mantissas
/// `floor(2^(f - n/2))`.
pub fn initial_fixed_state(params: &GroverParams) -> FixedTwoValueState {
    let m = initial_mantissa(params.n(), params.f());
    FixedTwoValueState {
        amp_s: FxValue::new(m.clone(), params.f()),
        amp_ns: FxValue::new(m, params.f()),
        iteration: 0,
    }
}

/// One fixed-point Grover iteration: oracle negation, exact integer
/// amplitude sum, `(n-1)`-bit right shift, reflection.
pub fn fixed_iterate(state: &FixedTwoValueState, params: &GroverParams) -> FixedTwoValueState {
    let s = -&state.amp_s;
    let sum = &state.amp_ns.mul_int(params.nonsolution_count()) + &s.mul_int(params.n_s());
    let scaled = right_shift(&sum, params.n() - 1).value;
    FixedTwoValueState {
        amp_s: &scaled - &s,
        amp_ns: &scaled - &state.amp_ns,
        iteration: state.iteration + 1,
    }
}

/// Runs the full `k`-iteration fixed-point emulation.
pub fn run_fixed(params: &GroverParams) -> FixedTwoValueState {
    let mut state = initial_fixed_state(params);
    for _ in 0..params.k() {
        state = fixed_iterate(&state, params);
    }
    state
}

/// Fixed-point measurement probabilities `(prob_s, prob_ns)` per basis
/// state: each is `(mantissa² >> f) · 2^-f`, i.e. the squared amplitude
/// truncated to `f` fractional bits.
pub fn fixed_probabilities(state: &FixedTwoValueState, f: u32) -> (f64, f64) {
    let prob = |amp: &FxValue| -> f64 {
        let sq = amp.mantissa() * amp.mantissa();
        FxValue::new(sq >> f, f).to_f64()
    };
    (prob(&state.amp_s), prob(&state.amp_ns))
}

/// Measured l2 error together with the per-basis-state probabilities that
/// produced it.
#[derive(Debug, Clone, Copy)]
pub struct MeasuredL2 {
    pub l2: f64,
    pub prob_s_ideal: f64,
    pub prob_ns_ideal: f64,
    pub prob_s_fixed: f64,
    pub prob_ns_fixed: f64,
}

/// Fractional resolution used for the ideal reference amplitudes inside the
/// l2 measurement. `2f + n + 8` bits keep the ideal side's own error far
/// below the truncation errors being measured.
pub(crate) fn measurement_resolution(params: &GroverParams) -> u32 {
    (2 * params.f() + params.n() + 8).max(96)
}

/// Runs both the fixed-point emulation and the ideal reference, and returns
/// the l2 distance between their measurement probability distributions:
/// `sqrt((2^n − n_s)·(p_ns − p_fixed_ns)² + n_s·(p_s − p_fixed_s)²)`.
pub fn measured_l2_detail(params: &GroverParams) -> MeasuredL2 {
    let fixed = run_fixed(params);
    let (prob_s_fixed, prob_ns_fixed) = fixed_probabilities(&fixed, params.f());

    let ideal = reference::run_ideal_dyadic(
        params.n(),
        params.n_s(),
        params.k(),
        measurement_resolution(params),
    );
    let prob_s_ideal = ideal.amp_s.mul_exact(&ideal.amp_s).to_f64();
    let prob_ns_ideal = ideal.amp_ns.mul_exact(&ideal.amp_ns).to_f64();

    let d_s = prob_s_ideal - prob_s_fixed;
    let d_ns = prob_ns_ideal - prob_ns_fixed;
    let l2 = (params.nonsolution_count() as f64 * d_ns * d_ns
        + params.n_s() as f64 * d_s * d_s)
        .sqrt();
    MeasuredL2 {
        l2,
        prob_s_ideal,
        prob_ns_ideal,
        prob_s_fixed,
        prob_ns_fixed,
    }
}

/// See [`measured_l2_detail`].
pub fn measured_l2(params: &GroverParams) -> f64 {
    measured_l2_detail(params).l2
}
