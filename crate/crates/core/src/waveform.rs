//! Per-bit transmit frame synthesis: the three uplink user waveforms and the
//! downlink base-station waveform that jointly encodes all three bits.
//!
//! Pairing layout: sample `n` pairs with sample `n + N/2`. The correlation
//! detector correlates the first half of a frame against the second half, so
//! the transmitter places each correlated pair across the two halves.

use rand::Rng;

use crate::error::{Error, Result};
use crate::noise::{correlated_pairs, gaussian_block};
use crate::params::DerivedPowers;

/// A length-N real transmit frame. Sample `n` pairs with `n + N/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub samples: Vec<f64>,
}

impl Frame {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// One bit per user.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitTriple {
    pub b1: u8,
    pub b2: u8,
    pub b3: u8,
}

impl BitTriple {
    pub fn new(b1: u8, b2: u8, b3: u8) -> Self {
        debug_assert!(b1 <= 1 && b2 <= 1 && b3 <= 1);
        BitTriple { b1, b2, b3 }
    }
}

/// How the downlink base-station frame realizes the three-bit encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlModel {
    /// Pairs drawn jointly from N(m1, Sigma_{k,j}): mean from b1, variance
    /// from b2, pair correlation from b3.
    Joint,
    /// Sum of a constant mean, i.i.d. variance-modulated noise, and an
    /// independent zero-mean correlated component of power (1 - psi) P.
    /// Total power exceeds P; this is the model consistent with the printed
    /// downlink receiver statistics.
    Superposed,
}

impl DlModel {
    pub fn as_str(&self) -> &'static str {
        match self {
            DlModel::Joint => "joint",
            DlModel::Superposed => "superposed",
        }
    }
}

impl std::str::FromStr for DlModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "joint" => Ok(DlModel::Joint),
            "superposed" => Ok(DlModel::Superposed),
            other => Err(Error::UnknownDownlinkModel(other.to_string())),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadFrameLength(n));
    }
    Ok(())
}

/// Interleaves `N/2` pairs into the frame layout: pair `i` lands at
/// `(i, i + N/2)`.
fn frame_from_halves(first: Vec<f64>, mut second: Vec<f64>) -> Frame {
    let mut samples = first;
    samples.append(&mut second);
    Frame { samples }
}

/// Mean-modulated uplink frame: N i.i.d. samples with bit-dependent mean and
/// fixed variance sigma1^2.
pub fn ul_mean_frame<R: Rng>(bit: u8, powers: &DerivedPowers, n: usize, rng: &mut R) -> Result<Frame> {
    check_n(n)?;
    let samples = gaussian_block(powers.m1(bit), powers.sigma1_sq, n, rng)?;
    Ok(Frame { samples })
}

/// Variance-modulated uplink frame: zero mean, variance sigma_{2,l}^2 or
/// sigma_{2,h}^2.
pub fn ul_variance_frame<R: Rng>(
    bit: u8,
    powers: &DerivedPowers,
    n: usize,
    rng: &mut R,
) -> Result<Frame> {
    check_n(n)?;
    let samples = gaussian_block(0.0, powers.sigma2_sq(bit), n, rng)?;
    Ok(Frame { samples })
}

/// Correlation-modulated uplink frame: N/2 bivariate pairs with marginal mean
/// m3, marginal variance sigma3^2, and bit-dependent pair correlation.
pub fn ul_correlation_frame<R: Rng>(
    bit: u8,
    powers: &DerivedPowers,
    n: usize,
    rng: &mut R,
) -> Result<Frame> {
    check_n(n)?;
    let (first, second) = correlated_pairs(powers.m3, powers.sigma3_sq, powers.rho(bit), n / 2, rng)?;
    Ok(frame_from_halves(first, second))
}

/// Downlink base-station frame jointly encoding all three bits.
pub fn dl_bs_frame<R: Rng>(
    bits: BitTriple,
    powers: &DerivedPowers,
    model: DlModel,
    n: usize,
    rng: &mut R,
) -> Result<Frame> {
    check_n(n)?;
    let mean = powers.m1(bits.b1);
    let var2 = powers.sigma2_sq(bits.b2);
    let rho = powers.rho(bits.b3);
    match model {
        DlModel::Joint => {
            let (first, second) = correlated_pairs(mean, var2, rho, n / 2, rng)?;
            Ok(frame_from_halves(first, second))
        }
        DlModel::Superposed => {
            let noise = gaussian_block(0.0, var2, n, rng)?;
            let (cf, cs) = correlated_pairs(0.0, powers.sigma3_sq, rho, n / 2, rng)?;
            let corr = frame_from_halves(cf, cs);
            let samples = noise
                .iter()
                .zip(&corr.samples)
                .map(|(a, b)| mean + a + b)
                .collect();
            Ok(Frame { samples })
        }
    }
}
