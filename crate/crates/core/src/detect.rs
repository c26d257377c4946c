//! The six detection rules (three users, uplink and downlink) and the shared
//! sample-statistics estimators. All detectors assume perfect CSI.

use num_complex::Complex64;

use crate::channel::ReceivedFrame;
use crate::error::{Error, Result};
use crate::noise::ChannelRealization;
use crate::params::{DerivedPowers, Link};

/// Empirical mean of a complex frame.
pub fn sample_mean(y: &[Complex64]) -> Result<Complex64> {
    if y.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(y.iter().sum::<Complex64>() / y.len() as f64)
}

/// Unbiased complex sample variance, `1/(N-1) sum |y_n - ybar|^2`.
pub fn sample_variance(y: &[Complex64]) -> Result<f64> {
    if y.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let m = sample_mean(y)?;
    let ss = y.iter().map(|v| (v - m).norm_sqr()).sum::<f64>();
    Ok(ss / (y.len() as f64 - 1.0))
}

/// Half-frame empirical cross-covariance,
/// `(2/N) sum Re{(y_n - ybar_1)(y_{n+N/2} - ybar_2)^*}`, with the two halves
/// demeaned separately.
pub fn empirical_cross_cov(y: &[Complex64]) -> Result<f64> {
    let n = y.len();
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadFrameLength(n));
    }
    let (a, b) = y.split_at(n / 2);
    let ma = sample_mean(a)?;
    let mb = sample_mean(b)?;
    let acc = a
        .iter()
        .zip(b)
        .map(|(x, z)| ((x - ma) * (z - mb).conj()).re)
        .sum::<f64>();
    Ok(2.0 * acc / n as f64)
}

/// Mean detector: minimum distance between the sample mean and the two
/// reference means. On the uplink the references include the structured
/// offset `h3 m3`; the downlink references are `h1 m1` as printed (the
/// downlink powers carry `m3 = 0`). Exact ties resolve to bit 0.
pub fn detect_u1(y: &ReceivedFrame, powers: &DerivedPowers) -> Result<u8> {
    let ybar = sample_mean(&y.samples)?;
    let ch = &y.channel;
    let r0 = ch.h1 * powers.m1l + ch.h3 * powers.m3;
    let r1 = ch.h1 * powers.m1h + ch.h3 * powers.m3;
    let d0 = (ybar - r0).norm_sqr();
    let d1 = (ybar - r1).norm_sqr();
    Ok(if d1 < d0 { 1 } else { 0 })
}

/// Conditional per-sample variances of the received signal under the two
/// variance hypotheses, computed from CSI and resolved powers.
pub fn conditional_variances(powers: &DerivedPowers, ch: &ChannelRealization) -> (f64, f64) {
    match powers.link {
        Link::Uplink => {
            let common = powers.sigma1_sq * ch.h1.norm_sqr()
                + powers.sigma3_sq * ch.h3.norm_sqr()
                + powers.sigmaw_sq;
            (
                common + powers.sigma2l_sq * ch.h2.norm_sqr(),
                common + powers.sigma2h_sq * ch.h2.norm_sqr(),
            )
        }
        Link::Downlink => {
            let h2sq = ch.h2.norm_sqr();
            let common = h2sq * powers.sigma3_sq + powers.sigmaw_sq;
            (
                common + h2sq * powers.sigma2l_sq,
                common + h2sq * powers.sigma2h_sq,
            )
        }
    }
}

/// Optimal variance-test threshold `gamma = ln(s1^2/s0^2) s1^2 s0^2 / (s1^2 - s0^2)`.
/// Returns `None` when the hypotheses coincide.
pub fn variance_threshold(s0_sq: f64, s1_sq: f64) -> Option<f64> {
    if s0_sq == s1_sq {
        return None;
    }
    Some((s1_sq / s0_sq).ln() * s1_sq * s0_sq / (s1_sq - s0_sq))
}

/// Outcome of the variance detector. `degenerate` flags the measure-zero
/// case where the two hypotheses coincide and the threshold is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct U2Detection {
    pub bit: u8,
    pub degenerate: bool,
}

/// Strict-inequality decision: equality with the threshold resolves to 0.
fn decide_variance(sy_sq: f64, gamma: f64) -> u8 {
    u8::from(sy_sq > gamma)
}

/// Variance detector: compares the sample variance against the optimal
/// threshold; decides 1 iff `s_y^2 > gamma` (strict).
pub fn detect_u2(y: &ReceivedFrame, powers: &DerivedPowers) -> Result<U2Detection> {
    let sy_sq = sample_variance(&y.samples)?;
    let (s0, s1) = conditional_variances(powers, &y.channel);
    match variance_threshold(s0, s1) {
        Some(gamma) => Ok(U2Detection {
            bit: decide_variance(sy_sq, gamma),
            degenerate: false,
        }),
        None => Ok(U2Detection {
            bit: 0,
            degenerate: true,
        }),
    }
}

/// Reference correlation levels at the receiver: `|h3|^2 rho_k` times the
/// correlation-component power (`eta P` uplink, `(1 - psi) P` downlink; both
/// are `powers.sigma3_sq`).
pub fn u3_references(powers: &DerivedPowers, ch: &ChannelRealization) -> (f64, f64) {
    let scale = ch.h3.norm_sqr() * powers.sigma3_sq;
    (powers.rho_l * scale, powers.rho_h * scale)
}

/// Correlation detector: minimum distance between the empirical half-frame
/// cross-covariance and the two reference levels. Ties resolve to bit 0.
pub fn detect_u3(y: &ReceivedFrame, powers: &DerivedPowers) -> Result<u8> {
    let rho_y = empirical_cross_cov(&y.samples)?;
    let (r_l, r_h) = u3_references(powers, &y.channel);
    let d0 = (rho_y - r_l) * (rho_y - r_l);
    let d1 = (rho_y - r_h) * (rho_y - r_h);
    Ok(if d1 < d0 { 1 } else { 0 })
}
