//! Parameter engine: converts user-facing configuration (dB values,
//! allocation ratios) into the resolved power/statistics quantities used by
//! the waveform generators, detectors, and theory formulas.
//!
//! All stored values are in linear units; dB enters only through the
//! constructors.

use crate::error::{Error, Result};

/// Which end of the link a derived-power set describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Link {
    Uplink,
    Downlink,
}

impl Link {
    pub fn as_str(&self) -> &'static str {
        match self {
            Link::Uplink => "uplink",
            Link::Downlink => "downlink",
        }
    }
}

impl std::str::FromStr for Link {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uplink" | "ul" => Ok(Link::Uplink),
            "downlink" | "dl" => Ok(Link::Downlink),
            other => Err(Error::param("link", format!("unknown link `{other}`"))),
        }
    }
}

/// Scalar system configuration in linear units.
///
/// `P` is the average transmit power in watts, `K` the linear Rician factor,
/// `delta` the normalized low-variance level sigma_{2,l}^2 / sigma_w^2, and
/// `alpha` the high-to-low variance ratio of the variance-modulated user.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub p: f64,
    pub k: f64,
    pub n: usize,
    pub alpha: f64,
    pub delta: f64,
    pub beta: f64,
    pub psi: f64,
    pub rho_l: f64,
    pub rho_h: f64,
    pub m3: f64,
    pub j: usize,
}

impl SystemParams {
    /// Builds linear-unit parameters from the dB-domain configuration.
    ///
    /// `p_dbm` is referenced to one milliwatt; the result is stored in watts.
    /// `m3` may be `None`, in which case it defaults to `0.1 * sqrt(P)`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_db(
        p_dbm: f64,
        k_db: f64,
        delta_db: f64,
        n: usize,
        alpha: f64,
        beta: f64,
        psi: f64,
        rho_l: f64,
        rho_h: f64,
        m3: Option<f64>,
        j: usize,
    ) -> Result<Self> {
        for (name, v) in [
            ("p_dbm", p_dbm),
            ("k_db", k_db),
            ("delta_db", delta_db),
            ("alpha", alpha),
            ("beta", beta),
            ("psi", psi),
            ("rho_l", rho_l),
            ("rho_h", rho_h),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite(name));
            }
        }
        if let Some(m3) = m3 {
            if !m3.is_finite() {
                return Err(Error::NonFinite("m3"));
            }
        }
        let p = 10f64.powf(p_dbm / 10.0) * 1e-3;
        let params = SystemParams {
            p,
            k: 10f64.powf(k_db / 10.0),
            n,
            alpha,
            delta: 10f64.powf(delta_db / 10.0),
            beta,
            psi,
            rho_l,
            rho_h,
            m3: m3.unwrap_or(0.1 * p.sqrt()),
            j,
        };
        params.validate()?;
        Ok(params)
    }

    /// Checks every invariant; every constructor path funnels through here.
    pub fn validate(&self) -> Result<()> {
        if !(self.p > 0.0) {
            return Err(Error::param("p", format!("must be > 0, got {}", self.p)));
        }
        if !(self.k >= 0.0) {
            return Err(Error::param("k", format!("must be >= 0, got {}", self.k)));
        }
        if self.n < 4 || self.n % 2 != 0 {
            return Err(Error::param(
                "n",
                format!("must be even and >= 4, got {}", self.n),
            ));
        }
        if !(self.alpha > 1.0) {
            return Err(Error::param(
                "alpha",
                format!("variance levels indistinguishable unless alpha > 1, got {}", self.alpha),
            ));
        }
        if !(self.delta > 0.0) {
            return Err(Error::param("delta", format!("must be > 0, got {}", self.delta)));
        }
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return Err(Error::param("beta", format!("must be in (0,1), got {}", self.beta)));
        }
        if !(self.psi > 0.0 && self.psi < 1.0) {
            return Err(Error::param("psi", format!("must be in (0,1), got {}", self.psi)));
        }
        if !(-1.0 <= self.rho_l && self.rho_l < self.rho_h && self.rho_h <= 1.0) {
            return Err(Error::param(
                "rho",
                format!("need -1 <= rho_l < rho_h <= 1, got ({}, {})", self.rho_l, self.rho_h),
            ));
        }
        if !self.m3.is_finite() {
            return Err(Error::NonFinite("m3"));
        }
        if self.j < 1 {
            return Err(Error::param("j", "must be >= 1"));
        }
        Ok(())
    }

    pub fn p_dbm(&self) -> f64 {
        10.0 * (self.p * 1e3).log10()
    }

    pub fn k_db(&self) -> f64 {
        10.0 * self.k.log10()
    }

    pub fn delta_db(&self) -> f64 {
        10.0 * self.delta.log10()
    }
}

/// Per-link resolved power and statistics quantities.
///
/// Carries the originating configuration alongside the derived values so
/// that detectors and theory formulas need only this one object.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedPowers {
    pub link: Link,
    /// Average transmit power, watts.
    pub p: f64,
    /// Bit-0 mean (negative by convention).
    pub m1l: f64,
    /// Bit-1 mean, `m1h = -m1l`.
    pub m1h: f64,
    /// Mean-user variance (zero on the downlink, where the broadcast frame
    /// has no separate mean-user noise component).
    pub sigma1_sq: f64,
    pub sigma2l_sq: f64,
    pub sigma2h_sq: f64,
    /// Marginal variance of the correlation-modulated component:
    /// `eta * P` uplink, `(1 - psi) * P` downlink.
    pub sigma3_sq: f64,
    pub sigmaw_sq: f64,
    /// Normalized mean-user variance, `(1 + alpha) * delta * beta / 2`.
    pub eta: f64,
    /// Normalized correlation-component power, `sigma3_sq / sigmaw_sq`.
    pub epsilon: f64,
    /// Correlation-user mean offset (uplink only; zero downlink).
    pub m3: f64,
    pub rho_l: f64,
    pub rho_h: f64,
    pub psi: f64,
    pub beta: f64,
}

/// Resolves the uplink power chain.
///
/// Bit-1 maps to the positive mean: `m1h = +sqrt((1 - beta) P)`.
pub fn derive_uplink(params: &SystemParams) -> Result<DerivedPowers> {
    params.validate()?;
    let p = params.p;
    let sigma1_sq = params.beta * p;
    let m1h = ((1.0 - params.beta) * p).sqrt();
    let sigma2l_sq = 2.0 * p / (1.0 + params.alpha);
    let sigma2h_sq = params.alpha * sigma2l_sq;
    let sigmaw_sq = sigma2l_sq / params.delta;
    let eta = (1.0 + params.alpha) * params.delta * params.beta / 2.0;
    let sigma3_sq = eta * p;
    Ok(DerivedPowers {
        link: Link::Uplink,
        p,
        m1l: -m1h,
        m1h,
        sigma1_sq,
        sigma2l_sq,
        sigma2h_sq,
        sigma3_sq,
        sigmaw_sq,
        eta,
        epsilon: eta * p / sigmaw_sq,
        m3: params.m3,
        rho_l: params.rho_l,
        rho_h: params.rho_h,
        psi: params.psi,
        beta: params.beta,
    })
}

/// Resolves the downlink power chain.
///
/// The mean (DC) component carries `psi * P`; the AC component, shared by the
/// variance and correlation dimensions, carries `(1 - psi) * P`.
pub fn derive_downlink(params: &SystemParams) -> Result<DerivedPowers> {
    params.validate()?;
    let p = params.p;
    let m1h = (params.psi * p).sqrt();
    let ac = (1.0 - params.psi) * p;
    let sigma2l_sq = 2.0 * ac / (1.0 + params.alpha);
    if sigma2l_sq <= 0.0 {
        return Err(Error::param("psi", "degenerate: AC power is zero"));
    }
    let sigma2h_sq = params.alpha * sigma2l_sq;
    let sigmaw_sq = sigma2l_sq / params.delta;
    let sigma3_sq = ac;
    Ok(DerivedPowers {
        link: Link::Downlink,
        p,
        m1l: -m1h,
        m1h,
        sigma1_sq: 0.0,
        sigma2l_sq,
        sigma2h_sq,
        sigma3_sq,
        sigmaw_sq,
        eta: ac / p,
        epsilon: sigma3_sq / sigmaw_sq,
        m3: 0.0,
        rho_l: params.rho_l,
        rho_h: params.rho_h,
        psi: params.psi,
        beta: params.beta,
    })
}

impl DerivedPowers {
    /// Bit-dependent variance of the variance-modulated user.
    pub fn sigma2_sq(&self, bit: u8) -> f64 {
        if bit == 0 {
            self.sigma2l_sq
        } else {
            self.sigma2h_sq
        }
    }

    /// Bit-dependent mean of the mean-modulated user.
    pub fn m1(&self, bit: u8) -> f64 {
        if bit == 0 {
            self.m1l
        } else {
            self.m1h
        }
    }

    /// Bit-dependent pair correlation of the correlation-modulated user.
    pub fn rho(&self, bit: u8) -> f64 {
        if bit == 0 {
            self.rho_l
        } else {
            self.rho_h
        }
    }
}
