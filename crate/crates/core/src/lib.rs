//! Core library for 2-D touch sensing on a dual-chip spiral RFID tag.
//!
//! A finger touching the tag surface detunes the two spiral arms by
//! different amounts depending on where it lands, which shows up as a
//! per-chip backscatter phase offset. The phase *difference* between the
//! two chips cancels most of the common-mode interference (multipath,
//! reader offsets, hand blocking) and retains the touch-dependent part,
//! so touch points can be classified from phase-difference features.
//!
//! The crate is organised as a pipeline:
//!
//! - [`tag`] — analytic model of the double-spiral tag: touch point to
//!   per-chip phase offset.
//! - [`channel`] — reader/tag link simulation: propagation, common-mode
//!   interference, differential residuals, hand blocking, thermal noise
//!   and reader quantization, producing wrapped phase reads.
//! - [`features`] — phase wrapping, chip pairing and per-channel circular
//!   averaging into classification feature vectors, plus the oblique
//!   plane diagnostic.
//! - [`learn`] — fine-KNN, random-subspace KNN ensembles, and kernel SVM
//!   trained by SMO, with one-vs-one multiclass and evaluation helpers.
//! - [`experiment`] — calibration layouts, dataset generation, stratified
//!   folds and end-to-end experiment runs.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature to use it in that mode. All randomness flows from
//! explicit 64-bit seeds through counter-mode generators, so identical
//! inputs reproduce identical outputs bit for bit.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub(crate) mod math;

pub mod channel;
pub mod experiment;
pub mod features;
pub mod learn;
pub mod tag;

pub use experiment::{Clock, NullClock};
