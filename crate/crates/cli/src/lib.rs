//! File formats, instance generators and the command driver for
//! [`bipareto_core`].

pub mod bench;
pub mod config;
pub mod error;
pub mod formats;
pub mod gen;
pub mod output;
pub mod run;

pub use config::RunConfig;
pub use error::CliError;
pub use run::run;
