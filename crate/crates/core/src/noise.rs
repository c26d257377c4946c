//! Deterministic, seedable generation of every random quantity in the
//! simulator: scalar Gaussians, correlated Gaussian pairs, Rician channel
//! coefficients, and complex AWGN.
//!
//! Streams are derived by hashing `(master_seed, stream_id)` into a ChaCha
//! seed, so distinct stream ids give statistically independent sequences
//! without any coordination between workers.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Role tag distinguishing the independent streams inside one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StreamRole {
    U1Frame,
    U2Frame,
    U3Frame,
    BsFrame,
    Channel,
    Awgn,
    /// Per-user downlink AWGN (user index 1..=3).
    AwgnUser(u8),
    TheoryChannel,
    TheoryInner,
    Other(u16),
}

impl StreamRole {
    fn code(&self) -> u16 {
        match self {
            StreamRole::U1Frame => 1,
            StreamRole::U2Frame => 2,
            StreamRole::U3Frame => 3,
            StreamRole::BsFrame => 4,
            StreamRole::Channel => 5,
            StreamRole::Awgn => 6,
            StreamRole::AwgnUser(u) => 16 + *u as u16,
            StreamRole::TheoryChannel => 32,
            StreamRole::TheoryInner => 33,
            StreamRole::Other(c) => 256 + c,
        }
    }
}

/// Fully qualified stream identity: same spec, same sample sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedSpec {
    pub master: u64,
    /// Sweep-point index (or any coarse partition of the experiment).
    pub point: u64,
    /// Trial / batch index within the point.
    pub trial: u64,
    pub role: StreamRole,
}

impl SeedSpec {
    pub fn new(master: u64, point: u64, trial: u64, role: StreamRole) -> Self {
        SeedSpec {
            master,
            point,
            trial,
            role,
        }
    }

    /// Derives the child RNG for this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut hasher = Sha256::new();
        hasher.update(self.master.to_le_bytes());
        hasher.update(self.point.to_le_bytes());
        hasher.update(self.trial.to_le_bytes());
        hasher.update(self.role.code().to_le_bytes());
        let digest = hasher.finalize();
        let mut seed = [0u8; 32];
        seed.copy_from_slice(&digest);
        ChaCha8Rng::from_seed(seed)
    }
}

/// One block-fading snapshot: complex coefficients for the three users.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelRealization {
    pub h1: Complex64,
    pub h2: Complex64,
    pub h3: Complex64,
}

impl ChannelRealization {
    pub fn user(&self, idx: u8) -> Complex64 {
        match idx {
            1 => self.h1,
            2 => self.h2,
            3 => self.h3,
            _ => panic!("user index {idx} out of range"),
        }
    }
}

/// Component mean of a Rician coefficient with linear factor `k`.
pub fn rician_component_mean(k: f64) -> f64 {
    (k / (2.0 * (1.0 + k))).sqrt()
}

/// Component variance of a Rician coefficient with linear factor `k`.
pub fn rician_component_var(k: f64) -> f64 {
    1.0 / (2.0 * (1.0 + k))
}

/// `n` i.i.d. draws from N(mean, variance). Zero variance yields the
/// constant mean.
pub fn gaussian_block<R: Rng>(mean: f64, variance: f64, n: usize, rng: &mut R) -> Result<Vec<f64>> {
    if !variance.is_finite() || !mean.is_finite() {
        return Err(Error::NonFinite("gaussian_block"));
    }
    if variance < 0.0 {
        return Err(Error::NegativeVariance(variance));
    }
    let sd = variance.sqrt();
    Ok((0..n)
        .map(|_| mean + sd * rng.sample::<f64, _>(StandardNormal))
        .collect())
}

/// Correlated pair synthesis via the conditional construction
/// `y = mean + rho (x - mean) + sqrt(1 - rho^2) z`, exact for the full
/// range |rho| <= 1 including the endpoints.
pub fn correlated_pairs<R: Rng>(
    mean: f64,
    variance: f64,
    rho: f64,
    n_pairs: usize,
    rng: &mut R,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if rho.abs() > 1.0 {
        return Err(Error::CorrelationOutOfRange(rho));
    }
    if variance < 0.0 {
        return Err(Error::NegativeVariance(variance));
    }
    let sd = variance.sqrt();
    let tail = (1.0 - rho * rho).max(0.0).sqrt();
    let mut xs = Vec::with_capacity(n_pairs);
    let mut ys = Vec::with_capacity(n_pairs);
    for _ in 0..n_pairs {
        let gx: f64 = rng.sample(StandardNormal);
        let gz: f64 = rng.sample(StandardNormal);
        xs.push(mean + sd * gx);
        ys.push(mean + sd * (rho * gx + tail * gz));
    }
    Ok((xs, ys))
}

/// Draws one channel realization: six independent Gaussians, one
/// (real, imaginary) pair per user, each component distributed
/// N(sqrt(K / (2(1+K))), 1 / (2(1+K))).
pub fn rician_channel<R: Rng>(k: f64, rng: &mut R) -> Result<ChannelRealization> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::param("k", format!("Rician factor must be finite and >= 0, got {k}")));
    }
    let mu = rician_component_mean(k);
    let sd = rician_component_var(k).sqrt();
    let draw = |rng: &mut R| Complex64::new(
        mu + sd * rng.sample::<f64, _>(StandardNormal),
        mu + sd * rng.sample::<f64, _>(StandardNormal),
    );
    Ok(ChannelRealization {
        h1: draw(rng),
        h2: draw(rng),
        h3: draw(rng),
    })
}

/// `n` circularly symmetric complex Gaussian samples with total variance
/// `sigmaw_sq` (i.e. `sigmaw_sq / 2` per real component).
pub fn awgn_block<R: Rng>(sigmaw_sq: f64, n: usize, rng: &mut R) -> Result<Vec<Complex64>> {
    if sigmaw_sq < 0.0 {
        return Err(Error::NegativeVariance(sigmaw_sq));
    }
    let sd = (sigmaw_sq / 2.0).sqrt();
    Ok((0..n)
        .map(|_| {
            Complex64::new(
                sd * rng.sample::<f64, _>(StandardNormal),
                sd * rng.sample::<f64, _>(StandardNormal),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mean_var(xs: &[f64]) -> (f64, f64) {
        let n = xs.len() as f64;
        let m = xs.iter().sum::<f64>() / n;
        let v = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1.0);
        (m, v)
    }

    #[test]
    fn gaussian_block_zero_variance() {
        let mut rng = SeedSpec::new(1, 0, 0, StreamRole::U1Frame).rng();
        let xs = gaussian_block(5.0, 0.0, 4, &mut rng).unwrap();
        assert_eq!(xs, vec![5.0; 4]);
    }

    #[test]
    fn gaussian_block_moments() {
        let mut rng = SeedSpec::new(2, 0, 0, StreamRole::U1Frame).rng();
        let xs = gaussian_block(0.0, 1.0, 1_000_000, &mut rng).unwrap();
        let (m, v) = mean_var(&xs);
        assert!(m.abs() < 0.004, "mean {m}");
        assert!((v - 1.0).abs() < 0.01, "variance {v}");
    }

    #[test]
    fn gaussian_block_rejects_negative_variance() {
        let mut rng = SeedSpec::new(1, 0, 0, StreamRole::U1Frame).rng();
        assert!(gaussian_block(0.0, -1.0, 4, &mut rng).is_err());
    }

    #[test]
    fn identical_seed_spec_identical_output() {
        let spec = SeedSpec::new(42, 7, 3, StreamRole::U2Frame);
        let a = gaussian_block(0.0, 1.0, 256, &mut spec.rng()).unwrap();
        let b = gaussian_block(0.0, 1.0, 256, &mut spec.rng()).unwrap();
        assert_eq!(a, b);
        // distinct role -> distinct stream
        let c = gaussian_block(0.0, 1.0, 256, &mut SeedSpec::new(42, 7, 3, StreamRole::U3Frame).rng())
            .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn correlated_pairs_endpoints() {
        let mut rng = SeedSpec::new(3, 0, 0, StreamRole::U3Frame).rng();
        let (x, y) = correlated_pairs(2.0, 1.5, 1.0, 100, &mut rng).unwrap();
        for (a, b) in x.iter().zip(&y) {
            assert!((a - b).abs() < 1e-12);
        }
        let (x, y) = correlated_pairs(0.0, 1.5, -1.0, 100, &mut rng).unwrap();
        for (a, b) in x.iter().zip(&y) {
            assert!((a + b).abs() < 1e-12);
        }
        assert!(correlated_pairs(0.0, 1.0, 1.5, 10, &mut rng).is_err());
    }

    #[test]
    fn correlated_pairs_empirical_rho() {
        let mut rng = SeedSpec::new(4, 0, 0, StreamRole::U3Frame).rng();
        let (x, y) = correlated_pairs(1.0, 2.0, 0.5, 1_000_000, &mut rng).unwrap();
        let (mx, vx) = mean_var(&x);
        let (my, vy) = mean_var(&y);
        // each marginal individually passes the moment checks
        assert!((mx - 1.0).abs() < 0.006 && (my - 1.0).abs() < 0.006);
        assert!((vx - 2.0).abs() < 0.02 && (vy - 2.0).abs() < 0.02);
        let cov = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - mx) * (b - my))
            .sum::<f64>()
            / (x.len() as f64 - 1.0);
        let rho = cov / (vx * vy).sqrt();
        assert!((rho - 0.5).abs() < 0.01, "empirical rho {rho}");
    }

    #[test]
    fn rician_component_moments() {
        // K = 10: mean ~ 0.67420, variance ~ 0.045455 per component
        assert!((rician_component_mean(10.0) - 0.67420).abs() < 1e-5);
        assert!((rician_component_var(10.0) - 0.045455).abs() < 1e-6);
        let mut rng = SeedSpec::new(5, 0, 0, StreamRole::Channel).rng();
        let n = 1_000_000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            let ch = rician_channel(10.0, &mut rng).unwrap();
            sum += ch.h1.re;
            sum_sq += ch.h1.re * ch.h1.re;
        }
        let m = sum / n as f64;
        let v = sum_sq / n as f64 - m * m;
        assert!((m - 0.67420).abs() < 3e-3);
        assert!((v - 0.045455).abs() < 5e-4);
    }

    #[test]
    fn rician_unit_second_moment() {
        // E[|h|^2] = 1 within 1% for K in {1, 3.162, 10}
        for (i, k) in [1.0, 3.162, 10.0].iter().enumerate() {
            let mut rng = SeedSpec::new(6 + i as u64, 0, 0, StreamRole::Channel).rng();
            let n = 1_000_000usize;
            let mut acc = 0.0;
            for _ in 0..n {
                let ch = rician_channel(*k, &mut rng).unwrap();
                acc += ch.h2.norm_sqr();
            }
            let second = acc / n as f64;
            assert!((second - 1.0).abs() < 0.01, "K={k}: E[|h|^2]={second}");
        }
    }

    #[test]
    fn rician_deterministic_limit() {
        let mut rng = SeedSpec::new(9, 0, 0, StreamRole::Channel).rng();
        let ch = rician_channel(1e6, &mut rng).unwrap();
        let target = 0.5f64.sqrt();
        for h in [ch.h1, ch.h2, ch.h3] {
            assert!((h.re - target).abs() < 1e-2);
            assert!((h.im - target).abs() < 1e-2);
        }
    }

    #[test]
    fn awgn_moments() {
        let mut rng = SeedSpec::new(10, 0, 0, StreamRole::Awgn).rng();
        let zero = awgn_block(0.0, 16, &mut rng).unwrap();
        assert!(zero.iter().all(|z| z.norm_sqr() == 0.0));

        let w = awgn_block(2.0, 1_000_000, &mut rng).unwrap();
        let re: Vec<f64> = w.iter().map(|z| z.re).collect();
        let im: Vec<f64> = w.iter().map(|z| z.im).collect();
        let (_, vr) = mean_var(&re);
        let (_, vi) = mean_var(&im);
        assert!((vr - 1.0).abs() < 0.01 && (vi - 1.0).abs() < 0.01);
        let second = w.iter().map(|z| z.norm_sqr()).sum::<f64>() / w.len() as f64;
        assert!((second - 2.0).abs() / 2.0 < 0.01);
    }
}
