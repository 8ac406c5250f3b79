//! Scenario files, presets and comparison experiments behind the
//! `source-wave` command.

pub mod experiments;
pub mod presets;
pub mod report;
pub mod run;
pub mod scenario;
