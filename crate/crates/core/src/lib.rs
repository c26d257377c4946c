//! Core library for a three-user noise-domain multiple-access link:
//! parameter derivation, frame synthesis, block-fading channel, detectors,
//! analytical error-probability routines, and sweep orchestration.

pub mod channel;
pub mod detect;
pub mod error;
pub mod noise;
pub mod params;
pub mod sweep;
pub mod theory;
pub mod waveform;

pub use channel::ReceivedFrame;
pub use error::{Error, Result};
pub use noise::{ChannelRealization, SeedSpec, StreamRole};
pub use params::{DerivedPowers, Link, SystemParams};
pub use sweep::{BaseConfig, BerPoint, CellCoord, SweepGrid};
pub use theory::{BepEstimate, Proposal};
pub use waveform::{BitTriple, DlModel, Frame};
