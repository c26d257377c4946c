//! Block fading plus AWGN: turns real transmit frames into the complex
//! received vectors seen by the detectors. One channel realization per frame.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::noise::{awgn_block, ChannelRealization};
use crate::waveform::Frame;

/// A received complex frame together with the channel snapshot that produced
/// it (genie CSI for the detectors).
#[derive(Debug, Clone, PartialEq)]
pub struct ReceivedFrame {
    pub samples: Vec<Complex64>,
    pub channel: ChannelRealization,
}

impl ReceivedFrame {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Uplink superposition: `y_n = h1 s1_n + h2 s2_n + h3 s3_n + w_n` with the
/// channel held constant across the frame.
pub fn uplink_combine<R: Rng>(
    f1: &Frame,
    f2: &Frame,
    f3: &Frame,
    ch: &ChannelRealization,
    sigmaw_sq: f64,
    rng: &mut R,
) -> Result<ReceivedFrame> {
    let n = f1.len();
    if f2.len() != n {
        return Err(Error::LengthMismatch(n, f2.len()));
    }
    if f3.len() != n {
        return Err(Error::LengthMismatch(n, f3.len()));
    }
    let w = awgn_block(sigmaw_sq, n, rng)?;
    let samples = (0..n)
        .map(|i| ch.h1 * f1.samples[i] + ch.h2 * f2.samples[i] + ch.h3 * f3.samples[i] + w[i])
        .collect();
    Ok(ReceivedFrame {
        samples,
        channel: *ch,
    })
}

/// Downlink reception at one user: `y_n = h s_n + w_n`.
pub fn downlink_receive<R: Rng>(
    f: &Frame,
    ch: &ChannelRealization,
    user: u8,
    sigmaw_sq: f64,
    rng: &mut R,
) -> Result<ReceivedFrame> {
    let h = ch.user(user);
    let w = awgn_block(sigmaw_sq, f.len(), rng)?;
    let samples = f
        .samples
        .iter()
        .zip(&w)
        .map(|(s, w)| h * s + w)
        .collect();
    Ok(ReceivedFrame {
        samples,
        channel: *ch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::{SeedSpec, StreamRole};

    fn unit_channel() -> ChannelRealization {
        ChannelRealization {
            h1: Complex64::new(1.0, 0.0),
            h2: Complex64::new(1.0, 0.0),
            h3: Complex64::new(1.0, 0.0),
        }
    }

    #[test]
    fn identity_channel_sums_inputs() {
        let mut rng = SeedSpec::new(20, 0, 0, StreamRole::Awgn).rng();
        let f1 = Frame { samples: vec![1.0, 2.0, 3.0, 4.0] };
        let f2 = Frame { samples: vec![0.5; 4] };
        let f3 = Frame { samples: vec![-1.0; 4] };
        let y = uplink_combine(&f1, &f2, &f3, &unit_channel(), 0.0, &mut rng).unwrap();
        for i in 0..4 {
            let expect = f1.samples[i] + f2.samples[i] + f3.samples[i];
            assert!((y.samples[i] - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }

        let zero = Frame { samples: vec![0.0; 4] };
        let y = uplink_combine(&zero, &zero, &zero, &unit_channel(), 0.0, &mut rng).unwrap();
        assert!(y.samples.iter().all(|z| z.norm_sqr() == 0.0));
    }

    #[test]
    fn length_mismatch_rejected() {
        let mut rng = SeedSpec::new(21, 0, 0, StreamRole::Awgn).rng();
        let f1 = Frame { samples: vec![0.0; 4] };
        let f2 = Frame { samples: vec![0.0; 6] };
        assert!(uplink_combine(&f1, &f2, &f1, &unit_channel(), 0.0, &mut rng).is_err());
    }

    #[test]
    fn uplink_variance_additivity() {
        // unit-variance independent inputs, |h_i| = 1, sigmaw_sq = 1 -> E[|y|^2] ~ 4
        let n = 1_000_000;
        let mut rng = SeedSpec::new(22, 0, 0, StreamRole::Awgn).rng();
        let mut gen = SeedSpec::new(22, 0, 1, StreamRole::U1Frame).rng();
        let mk = |rng: &mut rand_chacha::ChaCha8Rng| Frame {
            samples: crate::noise::gaussian_block(0.0, 1.0, n, rng).unwrap(),
        };
        let (f1, f2, f3) = (mk(&mut gen), mk(&mut gen), mk(&mut gen));
        let ch = ChannelRealization {
            h1: Complex64::new(0.6, 0.8),
            h2: Complex64::new(0.0, 1.0),
            h3: Complex64::new(-1.0, 0.0),
        };
        let y = uplink_combine(&f1, &f2, &f3, &ch, 1.0, &mut rng).unwrap();
        let second = y.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        assert!((second - 4.0).abs() / 4.0 < 0.02, "E[|y|^2] = {second}");
    }

    #[test]
    fn downlink_rotation_and_mean() {
        let mut rng = SeedSpec::new(23, 0, 0, StreamRole::AwgnUser(1)).rng();
        let f = Frame { samples: vec![1.0, -2.0, 3.0, -4.0] };
        let ch = ChannelRealization {
            h1: Complex64::new(0.0, 1.0),
            h2: Complex64::new(1.0, 0.0),
            h3: Complex64::new(1.0, 0.0),
        };
        let y = downlink_receive(&f, &ch, 1, 0.0, &mut rng).unwrap();
        for (s, z) in f.samples.iter().zip(&y.samples) {
            assert!((z - Complex64::new(0.0, *s)).norm() < 1e-12);
        }
    }

    #[test]
    fn downlink_second_moment() {
        let n = 1_000_000;
        let mut rng = SeedSpec::new(24, 0, 0, StreamRole::AwgnUser(2)).rng();
        let mut gen = SeedSpec::new(24, 0, 1, StreamRole::BsFrame).rng();
        let mean = 1.5;
        let var = 2.0;
        let f = Frame {
            samples: crate::noise::gaussian_block(mean, var, n, &mut gen).unwrap(),
        };
        let ch = ChannelRealization {
            h1: Complex64::new(1.0, 0.0),
            h2: Complex64::new(0.6, -0.8),
            h3: Complex64::new(1.0, 0.0),
        };
        let sigmaw_sq = 0.7;
        let y = downlink_receive(&f, &ch, 2, sigmaw_sq, &mut rng).unwrap();
        let second = y.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        let expect = ch.h2.norm_sqr() * var + (ch.h2 * mean).norm_sqr() + sigmaw_sq;
        assert!((second - expect).abs() / expect < 0.02);
    }

    #[test]
    fn noiseless_linearity() {
        let mut rng = SeedSpec::new(25, 0, 0, StreamRole::Awgn).rng();
        let f = Frame { samples: vec![1.0, -1.0, 2.0, 0.5] };
        let scaled = Frame { samples: f.samples.iter().map(|x| 3.0 * x).collect() };
        let zero = Frame { samples: vec![0.0; 4] };
        let ch = ChannelRealization {
            h1: Complex64::new(0.3, 0.4),
            h2: Complex64::new(1.0, 0.0),
            h3: Complex64::new(1.0, 0.0),
        };
        let y1 = uplink_combine(&f, &zero, &zero, &ch, 0.0, &mut rng).unwrap();
        let y2 = uplink_combine(&scaled, &zero, &zero, &ch, 0.0, &mut rng).unwrap();
        for (a, b) in y1.samples.iter().zip(&y2.samples) {
            assert!((a * 3.0 - b).norm() < 1e-12);
        }
    }
}
