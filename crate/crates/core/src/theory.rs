//! Conditional bit-error probabilities (closed Q-function forms where they
//! exist, an inner Monte Carlo estimate of the correlation-statistic variance
//! where they do not) and unconditional BEPs via importance-sampled channel
//! averaging.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::noise::{
    rician_component_mean, rician_component_var, ChannelRealization, SeedSpec, StreamRole,
};
use crate::params::{DerivedPowers, Link};
use crate::waveform::DlModel;

/// Gaussian tail probability Q(x) = P(Z > x) for Z ~ N(0, 1).
pub fn q_function(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(x / std::f64::consts::SQRT_2)
}

/// Unconditional BEP estimate from channel averaging.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BepEstimate {
    pub value: f64,
    pub std_error: f64,
    pub j_used: usize,
}

/// Proposal density for the channel-averaging estimator. Every component of
/// the six-dimensional channel vector is drawn from the proposal; the
/// estimate weights each draw by the true-density-to-proposal ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Proposal {
    /// Proposal equals the true Rician component density: weights are
    /// identically one and the estimator reduces to plain Monte Carlo.
    Matched,
    /// Gaussian proposal with the component mean shifted by `shift`
    /// (same variance). Exercises genuinely non-unit weights.
    MeanShifted { shift: f64 },
}

fn mean_detector_bep(
    m1l_sq: f64,
    h1: Complex64,
    var_cov_per_hypothesis: [(f64, f64, f64); 2],
) -> f64 {
    let m_d = h1.norm_sqr() * m1l_sq;
    let mut acc = 0.0;
    for (vr, vi, cv) in var_cov_per_hypothesis {
        let sigma_d_sq = m1l_sq * (h1.re * h1.re * vr + h1.im * h1.im * vi + 2.0 * h1.re * h1.im * cv);
        // each variance hypothesis is equiprobable, hence the 1/2 weight
        acc += 0.5
            * if sigma_d_sq <= 0.0 {
                // noiseless separable case, unless there is no separation
                if m_d > 0.0 {
                    0.0
                } else {
                    0.5
                }
            } else {
                q_function(m_d / sigma_d_sq.sqrt())
            };
    }
    acc
}

/// Uplink mean-user conditional BEP, averaged over the two equiprobable
/// variance hypotheses of the interfering variance user.
pub fn bep_u1_ul(powers: &DerivedPowers, ch: &ChannelRealization, n: usize) -> f64 {
    let nf = n as f64;
    let eta_p = powers.sigma3_sq;
    let var_cov = [powers.sigma2l_sq, powers.sigma2h_sq].map(|s2| {
        let vr = (ch.h1.re * ch.h1.re * powers.sigma1_sq
            + ch.h2.re * ch.h2.re * s2
            + eta_p * ch.h3.re * ch.h3.re
            + powers.sigmaw_sq / 2.0)
            / nf;
        let vi = (ch.h1.im * ch.h1.im * powers.sigma1_sq
            + ch.h2.im * ch.h2.im * s2
            + eta_p * ch.h3.im * ch.h3.im
            + powers.sigmaw_sq / 2.0)
            / nf;
        let cv = (ch.h1.re * ch.h1.im * powers.sigma1_sq
            + ch.h2.re * ch.h2.im * s2
            + eta_p * ch.h3.re * ch.h3.im)
            / nf;
        (vr, vi, cv)
    });
    mean_detector_bep(powers.m1l * powers.m1l, ch.h1, var_cov)
}

/// Downlink mean-user conditional BEP, implemented exactly as printed: the
/// variance block carries only the receiving user's coefficient and the
/// `beta P^2 / sigma_w^2` interference term.
pub fn bep_u1_dl(powers: &DerivedPowers, ch: &ChannelRealization, n: usize) -> f64 {
    let nf = n as f64;
    let u3_term = powers.beta * powers.p * powers.p / powers.sigmaw_sq;
    let var_cov = [powers.sigma2l_sq, powers.sigma2h_sq].map(|s2| {
        let vr = (ch.h1.re * ch.h1.re * s2 + u3_term * ch.h1.re * ch.h1.re + powers.sigmaw_sq / 2.0)
            / nf;
        let vi = (ch.h1.im * ch.h1.im * s2 + u3_term * ch.h1.im * ch.h1.im + powers.sigmaw_sq / 2.0)
            / nf;
        let cv = (ch.h1.re * ch.h1.im * s2 + u3_term * ch.h1.re * ch.h1.im) / nf;
        (vr, vi, cv)
    });
    mean_detector_bep(powers.m1l * powers.m1l, ch.h1, var_cov)
}

/// Per-sample real/imaginary variances and their covariance under one
/// variance hypothesis, as used by the CLT approximation of the sample
/// variance statistic.
pub fn received_component_stats(
    powers: &DerivedPowers,
    ch: &ChannelRealization,
    sigma2_sq: f64,
) -> (f64, f64, f64) {
    match powers.link {
        Link::Uplink => {
            let eta_p = powers.sigma3_sq; // = epsilon * sigmaw_sq
            (
                ch.h1.re * ch.h1.re * powers.sigma1_sq
                    + ch.h2.re * ch.h2.re * sigma2_sq
                    + eta_p * ch.h3.re * ch.h3.re
                    + powers.sigmaw_sq / 2.0,
                ch.h1.im * ch.h1.im * powers.sigma1_sq
                    + ch.h2.im * ch.h2.im * sigma2_sq
                    + eta_p * ch.h3.im * ch.h3.im
                    + powers.sigmaw_sq / 2.0,
                ch.h1.re * ch.h1.im * powers.sigma1_sq
                    + ch.h2.re * ch.h2.im * sigma2_sq
                    + eta_p * ch.h3.re * ch.h3.im,
            )
        }
        Link::Downlink => {
            let ac = powers.sigma3_sq; // (1 - psi) P
            (
                ch.h2.re * ch.h2.re * sigma2_sq + ac * ch.h2.re * ch.h2.re + powers.sigmaw_sq / 2.0,
                ch.h2.im * ch.h2.im * sigma2_sq + ac * ch.h2.im * ch.h2.im + powers.sigmaw_sq / 2.0,
                ch.h2.re * ch.h2.im * sigma2_sq + ac * ch.h2.re * ch.h2.im,
            )
        }
    }
}

/// CLT moments of the sample-variance statistic:
/// `mu_s = N/(N-1) (sigma_R^2 + sigma_I^2)`,
/// `sigma_s^2 = 2N/(N-1)^2 (sigma_R^4 + sigma_I^4 + 2 c^2)`.
pub fn clt_moments(sigma_r_sq: f64, sigma_i_sq: f64, c: f64, n: usize) -> (f64, f64) {
    let nf = n as f64;
    let mu = nf / (nf - 1.0) * (sigma_r_sq + sigma_i_sq);
    let var = 2.0 * nf / ((nf - 1.0) * (nf - 1.0))
        * (sigma_r_sq * sigma_r_sq + sigma_i_sq * sigma_i_sq + 2.0 * c * c);
    (mu, var)
}

/// Extra variance of the sample-variance statistic caused by the
/// correlation-modulated component: samples n and n + N/2 are dependent, so
/// the N/2 pair covariances Cov(|y_n|^2, |y_m|^2) = 2 rho^2 sigma3^4 |h|^4
/// add to the i.i.d. CLT variance. Averaged over the two equiprobable
/// correlation hypotheses.
fn pair_correlation_variance(powers: &DerivedPowers, n: usize) -> f64 {
    let nf = n as f64;
    let rho_bar_sq = 0.5 * (powers.rho_l * powers.rho_l + powers.rho_h * powers.rho_h);
    nf / ((nf - 1.0) * (nf - 1.0)) * 2.0 * rho_bar_sq * powers.sigma3_sq * powers.sigma3_sq
}

fn bep_variance_detector(powers: &DerivedPowers, ch: &ChannelRealization, n: usize) -> f64 {
    // the correlated component reaches the variance detector through h3 on
    // the uplink and through the user's own channel on the downlink
    let h_corr = match powers.link {
        Link::Uplink => ch.h3,
        Link::Downlink => ch.h2,
    };
    let pair_var = pair_correlation_variance(powers, n) * h_corr.norm_sqr() * h_corr.norm_sqr();
    let (mu, sigma): (Vec<f64>, Vec<f64>) = [powers.sigma2l_sq, powers.sigma2h_sq]
        .iter()
        .map(|&s2| {
            let (sr, si, c) = received_component_stats(powers, ch, s2);
            let (mu, var) = clt_moments(sr, si, c, n);
            (mu, (var + pair_var).sqrt())
        })
        .unzip();
    let denom = sigma[0] + sigma[1];
    if mu[1] == mu[0] || denom == 0.0 {
        return 0.5;
    }
    q_function((mu[1] - mu[0]) / denom)
}

/// Uplink variance-user conditional BEP (simplified equal-error-threshold
/// Q form of the CLT approximation).
pub fn bep_u2_ul(powers: &DerivedPowers, ch: &ChannelRealization, n: usize) -> f64 {
    debug_assert_eq!(powers.link, Link::Uplink);
    bep_variance_detector(powers, ch, n)
}

/// Downlink variance-user conditional BEP.
pub fn bep_u2_dl(powers: &DerivedPowers, ch: &ChannelRealization, n: usize) -> f64 {
    debug_assert_eq!(powers.link, Link::Downlink);
    bep_variance_detector(powers, ch, n)
}

/// Exact per-sample law of everything in the received frame except the
/// correlation-modulated component: zero-mean bivariate Gaussian over
/// (real, imaginary) sampled through its 2x2 Cholesky factor.
#[derive(Clone, Copy)]
struct ComponentChol {
    l11: f64,
    l21: f64,
    l22: f64,
}

impl ComponentChol {
    fn new(vr: f64, vi: f64, c: f64) -> Self {
        let l11 = vr.sqrt();
        let l21 = if l11 > 0.0 { c / l11 } else { 0.0 };
        let l22 = (vi - l21 * l21).max(0.0).sqrt();
        ComponentChol { l11, l21, l22 }
    }

    #[inline]
    fn sample<R: Rng>(&self, rng: &mut R) -> Complex64 {
        let g1: f64 = rng.sample(StandardNormal);
        let g2: f64 = rng.sample(StandardNormal);
        Complex64::new(self.l11 * g1, self.l21 * g1 + self.l22 * g2)
    }
}

/// Cholesky pair for one (correlation bit, variance bit) hypothesis: the
/// joint law of a received sample pair (a, b) has block covariance
/// [[A, B], [B, A]] (A: per-sample covariance, B: cross covariance through
/// the correlated component), so (a + b)/sqrt(2) ~ N(0, A + B) and
/// (a - b)/sqrt(2) ~ N(0, A - B) are independent — two bivariate draws
/// reproduce the exact four-dimensional law.
#[derive(Clone, Copy)]
struct PairChol {
    sum: ComponentChol,
    diff: ComponentChol,
}

impl PairChol {
    /// `(vr, vi, c)` is the independent per-sample residue, `h` the channel
    /// coefficient of the correlated component with per-sample power
    /// `sigma3_sq` and pair correlation `rho`.
    fn new(vr: f64, vi: f64, c: f64, h: Complex64, sigma3_sq: f64, rho: f64) -> Self {
        let (hr, hi) = (h.re, h.im);
        let (arr, aii, ari) = (sigma3_sq * hr * hr, sigma3_sq * hi * hi, sigma3_sq * hr * hi);
        PairChol {
            sum: ComponentChol::new(
                vr + (1.0 + rho) * arr,
                vi + (1.0 + rho) * aii,
                c + (1.0 + rho) * ari,
            ),
            diff: ComponentChol::new(
                vr + (1.0 - rho) * arr,
                vi + (1.0 - rho) * aii,
                c + (1.0 - rho) * ari,
            ),
        }
    }

    #[inline]
    fn sample<R: Rng>(&self, rng: &mut R) -> (Complex64, Complex64) {
        let s = self.sum.sample(rng);
        let d = self.diff.sample(rng);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        ((s + d) * r, (s - d) * r)
    }
}

/// Synthesizes the half-frame cross-covariance statistic at a fixed channel,
/// drawing interferer bits uniformly per frame. The sampled law is exactly
/// the received-frame law; independent Gaussian contributions are folded
/// into one bivariate draw per sample for speed.
struct RhoHatSampler {
    /// Joint pair law per [correlation bit][variance bit].
    chols: [[PairChol; 2]; 2],
    /// Complex mean contribution per mean bit.
    mean: [Complex64; 2],
}

impl RhoHatSampler {
    fn uplink(powers: &DerivedPowers, ch: &ChannelRealization) -> Self {
        let rho = [powers.rho_l, powers.rho_h];
        let chols = rho.map(|r| {
            [powers.sigma2l_sq, powers.sigma2h_sq].map(|s2| {
                PairChol::new(
                    ch.h1.re * ch.h1.re * powers.sigma1_sq
                        + ch.h2.re * ch.h2.re * s2
                        + powers.sigmaw_sq / 2.0,
                    ch.h1.im * ch.h1.im * powers.sigma1_sq
                        + ch.h2.im * ch.h2.im * s2
                        + powers.sigmaw_sq / 2.0,
                    ch.h1.re * ch.h1.im * powers.sigma1_sq + ch.h2.re * ch.h2.im * s2,
                    ch.h3,
                    powers.sigma3_sq,
                    r,
                )
            })
        });
        RhoHatSampler {
            chols,
            mean: [
                ch.h1 * powers.m1l + ch.h3 * powers.m3,
                ch.h1 * powers.m1h + ch.h3 * powers.m3,
            ],
        }
    }

    fn downlink(powers: &DerivedPowers, ch: &ChannelRealization, model: DlModel) -> Self {
        let h3 = ch.h3;
        let rho = [powers.rho_l, powers.rho_h];
        let chols = rho.map(|r| {
            [powers.sigma2l_sq, powers.sigma2h_sq].map(|s2| match model {
                // superposed: i.i.d. variance noise rides alongside the
                // correlated component of power (1 - psi) P
                DlModel::Superposed => PairChol::new(
                    h3.re * h3.re * s2 + powers.sigmaw_sq / 2.0,
                    h3.im * h3.im * s2 + powers.sigmaw_sq / 2.0,
                    h3.re * h3.im * s2,
                    h3,
                    powers.sigma3_sq,
                    r,
                ),
                // joint: the correlated pairs themselves carry
                // sigma_{2,k}^2; only AWGN remains as independent residue
                DlModel::Joint => PairChol::new(
                    powers.sigmaw_sq / 2.0,
                    powers.sigmaw_sq / 2.0,
                    0.0,
                    h3,
                    s2,
                    r,
                ),
            })
        });
        RhoHatSampler {
            chols,
            mean: [h3 * powers.m1l, h3 * powers.m1h],
        }
    }

    /// One draw of the cross-covariance statistic conditioned on the
    /// correlation bit `b3` and the interfering variance bit `b2`, with a
    /// uniformly random mean bit. `ya`/`yb` are scratch buffers of length
    /// `n/2`.
    fn draw<R: Rng>(
        &self,
        n: usize,
        b3: u8,
        b2: usize,
        ya: &mut [Complex64],
        yb: &mut [Complex64],
        rng: &mut R,
    ) -> f64 {
        let half = n / 2;
        let b1 = rng.random_range(0..2usize);
        let chol = self.chols[b3 as usize][b2];
        let mean = self.mean[b1];

        let mut sum_a = Complex64::new(0.0, 0.0);
        let mut sum_b = Complex64::new(0.0, 0.0);
        for i in 0..half {
            let (za, zb) = chol.sample(rng);
            let a = mean + za;
            let b = mean + zb;
            sum_a += a;
            sum_b += b;
            ya[i] = a;
            yb[i] = b;
        }
        let ma = sum_a / half as f64;
        let mb = sum_b / half as f64;
        let mut acc = 0.0;
        for i in 0..half {
            acc += ((ya[i] - ma) * (yb[i] - mb).conj()).re;
        }
        2.0 * acc / n as f64
    }
}

fn bep_correlation_detector(
    sampler: &RhoHatSampler,
    powers: &DerivedPowers,
    ch: &ChannelRealization,
    n: usize,
    inner_draws: usize,
    rng: &mut ChaCha8Rng,
) -> f64 {
    assert!(inner_draws >= 1_000, "inner_draws must be >= 1e3");
    let scale = ch.h3.norm_sqr() * match powers.link {
        Link::Uplink => powers.sigma3_sq,
        Link::Downlink => (1.0 - powers.psi) * powers.p,
    };
    let r_l = powers.rho_l * scale;
    let r_h = powers.rho_h * scale;
    if r_l == r_h {
        return 0.5;
    }
    let mut ya = vec![Complex64::new(0.0, 0.0); n / 2];
    let mut yb = vec![Complex64::new(0.0, 0.0); n / 2];
    // condition on the (correlation, variance) bit pair: the statistic's
    // spread differs strongly across the variance hypotheses, and averaging
    // the error probabilities keeps the heavy mixture tail that a pooled
    // variance would hide
    let mid = 0.5 * (r_l + r_h);
    let mut bep = 0.0;
    for b3 in 0..2u8 {
        for b2 in 0..2usize {
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            let mut sum_cu = 0.0;
            for _ in 0..inner_draws {
                let r = sampler.draw(n, b3, b2, &mut ya, &mut yb, rng);
                sum += r;
                sum_sq += r * r;
                sum_cu += r * r * r;
            }
            let jf = inner_draws as f64;
            let m = sum / jf;
            let m2 = (sum_sq / jf - m * m).max(0.0);
            if m2 == 0.0 {
                continue;
            }
            let m3 = sum_cu / jf - 3.0 * m * (sum_sq / jf) + 2.0 * m * m * m;
            let sigma = m2.sqrt();
            let skew = m3 / (m2 * sigma);
            // Edgeworth one-term expansion: P(X <= x) ~ Phi(u) - phi(u)
            // (u^2 - 1) skew / 6. The statistic is a sum of ~n/2 pair
            // products, close enough to Gaussian for the first correction
            // to capture the tail asymmetry.
            let u = (mid - m) / sigma;
            let phi = (-0.5 * u * u).exp() / (2.0 * std::f64::consts::PI).sqrt();
            let cdf_at_mid = (1.0 - q_function(u)) - phi * (u * u - 1.0) * skew / 6.0;
            let p_err = if (b3 == 0) == (r_l < r_h) {
                // sent the lower reference: error when the statistic lands
                // above the midpoint
                1.0 - cdf_at_mid
            } else {
                cdf_at_mid
            };
            bep += 0.25 * p_err.clamp(0.0, 1.0);
        }
    }
    bep.min(0.5)
}

/// Uplink correlation-user conditional BEP. The variance of the correlation
/// statistic has no printed closed form; it is estimated as the empirical
/// variance of the statistic over `inner_draws` synthetic frames at the
/// fixed channel.
pub fn bep_u3_ul(
    powers: &DerivedPowers,
    ch: &ChannelRealization,
    n: usize,
    inner_draws: usize,
    rng: &mut ChaCha8Rng,
) -> f64 {
    let sampler = RhoHatSampler::uplink(powers, ch);
    bep_correlation_detector(&sampler, powers, ch, n, inner_draws, rng)
}

/// Downlink correlation-user conditional BEP under the given frame model.
pub fn bep_u3_dl(
    powers: &DerivedPowers,
    ch: &ChannelRealization,
    n: usize,
    inner_draws: usize,
    model: DlModel,
    rng: &mut ChaCha8Rng,
) -> f64 {
    let sampler = RhoHatSampler::downlink(powers, ch, model);
    bep_correlation_detector(&sampler, powers, ch, n, inner_draws, rng)
}

const AVG_BATCH: usize = 512;

fn normal_logpdf(x: f64, mean: f64, var: f64) -> f64 {
    let d = x - mean;
    -0.5 * (d * d / var) - 0.5 * (2.0 * std::f64::consts::PI * var).ln()
}

/// Averages a conditional BEP over the Rician fading distribution with `j`
/// channel draws: `(1/J) sum g/z` with `g = P_b * f`.
///
/// Work is partitioned into fixed-size batches with independent sub-streams;
/// the reduction folds batch sums in index order, so the result is
/// deterministic for a given seed regardless of thread count. The closure
/// receives a per-batch RNG for any inner Monte Carlo it needs.
pub fn average_over_fading<F>(
    conditional: F,
    k: f64,
    j: usize,
    proposal: Proposal,
    master_seed: u64,
    point: u64,
) -> BepEstimate
where
    F: Fn(&ChannelRealization, &mut ChaCha8Rng) -> f64 + Sync,
{
    assert!(j >= 1);
    let mu = rician_component_mean(k);
    let var = rician_component_var(k);
    let n_batches = j.div_ceil(AVG_BATCH);

    let batch_stats: Vec<(f64, f64, f64, f64)> = (0..n_batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = SeedSpec::new(master_seed, point, b as u64, StreamRole::TheoryChannel).rng();
            let mut inner =
                SeedSpec::new(master_seed, point, b as u64, StreamRole::TheoryInner).rng();
            let count = AVG_BATCH.min(j - b * AVG_BATCH);
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for _ in 0..count {
                let (prop_mu, log_w_fixed) = match proposal {
                    Proposal::Matched => (mu, true),
                    Proposal::MeanShifted { shift } => (mu + shift, false),
                };
                let sd = var.sqrt();
                let mut comps = [0.0f64; 6];
                for c in comps.iter_mut() {
                    *c = prop_mu + sd * rng.sample::<f64, _>(StandardNormal);
                }
                let ch = ChannelRealization {
                    h1: Complex64::new(comps[0], comps[1]),
                    h2: Complex64::new(comps[2], comps[3]),
                    h3: Complex64::new(comps[4], comps[5]),
                };
                let w = if log_w_fixed {
                    1.0
                } else {
                    let mut log_w = 0.0;
                    for c in comps {
                        log_w += normal_logpdf(c, mu, var) - normal_logpdf(c, prop_mu, var);
                    }
                    log_w.exp()
                };
                let t = conditional(&ch, &mut inner) * w;
                sum += t;
                sum_sq += t * t;
                lo = lo.min(t);
                hi = hi.max(t);
            }
            (sum, sum_sq, lo, hi)
        })
        .collect();

    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (s, s2, l, h) in batch_stats {
        sum += s;
        sum_sq += s2;
        lo = lo.min(l);
        hi = hi.max(h);
    }
    let jf = j as f64;
    let value = sum / jf;
    let std_error = if j < 2 || lo == hi {
        // a constant integrand has exactly zero spread; avoid the rounding
        // noise of the sum-of-squares form
        0.0
    } else {
        let var_sample = ((sum_sq - sum * sum / jf) / (jf - 1.0)).max(0.0);
        (var_sample / jf).sqrt()
    };
    BepEstimate {
        value,
        std_error,
        j_used: j,
    }
}

/// Plain Monte Carlo channel averaging: draws from the true density, no
/// weighting machinery. Kept as an independent route for regression-testing
/// the importance-sampling path.
pub fn average_plain<F>(conditional: F, k: f64, j: usize, master_seed: u64, point: u64) -> BepEstimate
where
    F: Fn(&ChannelRealization, &mut ChaCha8Rng) -> f64 + Sync,
{
    assert!(j >= 1);
    let n_batches = j.div_ceil(AVG_BATCH);
    let batch_stats: Vec<(f64, f64, f64, f64)> = (0..n_batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = SeedSpec::new(master_seed, point, b as u64, StreamRole::TheoryChannel).rng();
            let mut inner =
                SeedSpec::new(master_seed, point, b as u64, StreamRole::TheoryInner).rng();
            let count = AVG_BATCH.min(j - b * AVG_BATCH);
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for _ in 0..count {
                let ch = crate::noise::rician_channel(k, &mut rng).expect("valid K");
                let t = conditional(&ch, &mut inner);
                sum += t;
                sum_sq += t * t;
                lo = lo.min(t);
                hi = hi.max(t);
            }
            (sum, sum_sq, lo, hi)
        })
        .collect();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (s, s2, l, h) in batch_stats {
        sum += s;
        sum_sq += s2;
        lo = lo.min(l);
        hi = hi.max(h);
    }
    let jf = j as f64;
    let value = sum / jf;
    let std_error = if j < 2 || lo == hi {
        0.0
    } else {
        let var_sample = ((sum_sq - sum * sum / jf) / (jf - 1.0)).max(0.0);
        (var_sample / jf).sqrt()
    };
    BepEstimate {
        value,
        std_error,
        j_used: j,
    }
}
