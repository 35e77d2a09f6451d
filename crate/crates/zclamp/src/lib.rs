//! In-circuit impedance measurement through clamp-on inductive probes.
//!
//! A signal tone is injected into a live conductor through an injecting
//! inductive probe (IIP) and sensed through a receiving inductive probe
//! (RIP). Both probes, together with the series impedance between them,
//! form a cascade of ABCD two-port networks, so the complex voltage ratio
//! V1/V2 seen at the acquisition channels determines the in-circuit
//! impedance of the system under test. The crate covers the full chain:
//!
//! - [`twoport`] — ABCD algebra, the forward transfer ratio of the probe
//!   chain and its direct (uncalibrated) inversion;
//! - [`calibration`] — open-short-load and two-point calibration, which
//!   remove the probe characterisation and the probe-to-probe coupling
//!   path from the measurement;
//! - [`dsp`] — single-bin tone extraction from sampled channel waveforms
//!   (complex amplitude, SNR estimate, injection-frequency scan);
//! - [`sim`] — a forward simulator of the measurement chain: synthetic
//!   probes, RLC and motor-winding impedance models, coupling vs. probe
//!   distance, and noisy waveform synthesis;
//! - [`monitor`] — baseline comparison and fault classification from the
//!   relative change of the measured impedance magnitude;
//! - [`io`] + [`cli`] — text file formats (probe tables, waveforms,
//!   session documents) and the `zclamp` command-line front end.
//!
//! Start with the `examples/` directory: each file is a runnable
//! walkthrough of one capability.

pub mod calibration;
pub mod cli;
pub mod complex;
pub mod dsp;
pub mod fixtures;
pub mod io;
pub mod monitor;
pub mod sim;
pub mod twoport;

pub use calibration::{CalibrationCoefficients, CalibrationError, CalibrationSet};
pub use complex::Complex;
pub use dsp::{DspError, ToneEstimate, Waveform};
pub use monitor::{BaselineRecord, Classification, FaultVerdict, MonitorError, OperatingPoint};
pub use sim::{MotorWindingModel, NoiseModel, PpcModel, RlcNetwork, SimError, SutModel, Tone};
pub use twoport::{TerminationConfig, TwoPortAbcd, TwoPortError};
