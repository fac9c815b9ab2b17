//! Scenario-by-scenario verification of Koszulness and regularity claims for diagonal
//! subalgebras of Rees algebras, with deterministic JSON reports and a command-line front end.

pub mod cli;
pub mod config;
pub mod params;
pub mod report;
pub mod scenarios;

pub use cli::run;
pub use config::{load_config, JobConfig};
pub use params::{Params, VerifyError};
pub use report::{emit_report, Check, CheckStatus, Report, Verdict};
pub use scenarios::run_scenario;
