//! Structured measurement extraction from chest X-ray segmentation masks,
//! quality control, threshold-based labeling, multi-stage benchmark
//! generation, and an evaluation harness with Wilson-adjusted metrics.

pub mod benchgen;
pub mod fixtures;
pub mod geometry;
pub mod harness;
pub mod labeling;
pub mod manifest;
pub mod measure;
pub mod metrics;
pub mod pipeline;
pub mod qc;
pub mod render;
pub mod tasks;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
