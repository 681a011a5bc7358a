//! File formats, instance generation and command implementations for the
//! `structio` tool. The algorithms live in [`structio_core`].

pub mod commands;
pub mod dot;
pub mod gen;
pub mod instance;
pub mod report;

pub use instance::{FileCost, Instance, InstanceError};
pub use report::{AnalysisReport, Diagnostics, ProblemKind, Report, Status};
