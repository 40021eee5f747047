use chow_obstruct::invariants::{
    obstruction_report, verify_ehrhart, InvariantReport, Verification,
};
use chow_obstruct::localization::{
    make_sample_plan, resolve_lambda, tangent_weights, FixedPointData, Lambda, SamplePlan,
};
use chow_obstruct::toric_fan::Fan;
use chow_obstruct::Error;
use thiserror::Error;

use crate::exit;
use crate::job::{JobError, JobSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Maximal cones and smoothness.
    Fan,
    /// Tangent and line weights at every fixed point.
    Weights,
    /// a_ℓ, b_ℓ, F_ℓ and the built-in verifications.
    Invariants,
    /// bl1, proportionality, lift-shift and Ehrhart checks.
    Verify,
    /// Everything above.
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Fan => "fan",
            Command::Weights => "weights",
            Command::Invariants => "invariants",
            Command::Verify => "verify",
            Command::All => "all",
        }
    }

    fn wants_weights(self) -> bool {
        matches!(self, Command::Weights | Command::All)
    }

    fn wants_report(self) -> bool {
        matches!(self, Command::Invariants | Command::Verify | Command::All)
    }

    fn wants_ehrhart(self) -> bool {
        matches!(self, Command::Verify | Command::All)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => exit::INPUT,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<JobError> for CliError {
    fn from(e: JobError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Everything one command computed.
#[derive(Debug)]
pub struct Report {
    pub command: Command,
    pub job: JobSpec,
    pub fan: Fan,
    pub lambda: Option<Lambda>,
    pub fixed_points: Vec<FixedPointData>,
    pub plan: Option<SamplePlan>,
    pub invariants: Option<InvariantReport>,
    pub verifications: Vec<Verification>,
}

impl Report {
    pub fn verified(&self) -> bool {
        self.verifications.iter().all(|v| v.passed)
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: u8,
}

pub fn run(job: JobSpec, command: Command) -> Result<Outcome, CliError> {
    let fan = Fan::new(job.polytope.clone())?;
    let mut report = Report {
        command,
        fan,
        lambda: None,
        fixed_points: Vec::new(),
        plan: None,
        invariants: None,
        verifications: Vec::new(),
        job,
    };
    if command != Command::Fan {
        let mut lambda = resolve_lambda(&report.job.ops, &report.fan)?;
        if report.job.options.flip_sign {
            lambda = lambda.negated();
        }
        report.fixed_points = tangent_weights(&report.fan, &lambda)?;
        report.lambda = Some(lambda);
    }
    if command.wants_report() {
        let lambda = report.lambda.as_ref().expect("resolved above");
        let plan = make_sample_plan(
            &report.fixed_points,
            lambda.params(),
            report.job.sample_count(),
            report.job.options.seed,
        )?;
        let inv = obstruction_report(&report.fan, lambda, plan.clone())?;
        report.verifications = inv.verifications.clone();
        if command.wants_ehrhart() {
            report.verifications.push(verify_ehrhart(
                &report.fan,
                &inv.a,
                report.job.options.ehrhart_kmax,
            )?);
        }
        report.plan = Some(plan);
        report.invariants = Some(inv);
    }
    if !command.wants_weights() && !command.wants_report() {
        report.fixed_points.clear();
    }
    let exit_code = if report.verified() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    };
    Ok(Outcome { report, exit_code })
}
