//! Job parsing, command dispatch and report rendering for the
//! `chow-obstruct` binary.

mod job;
mod render;
mod run;

pub use job::{parse_job, JobError, JobSpec, Options};
pub use render::{error_json, render_json, render_text};
pub use run::{run, CliError, Command, Outcome, Report};

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const INTERNAL: u8 = 3;
}
