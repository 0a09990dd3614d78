use std::path::PathBuf;

use ncomp::Tolerances;
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Version of the CSV layout; bumped whenever columns change.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Emit {
    pub csv: bool,
    pub svg: bool,
}

impl Emit {
    pub fn parse(s: &str) -> CliResult<Self> {
        let mut out = Emit { csv: false, svg: false };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "csv" => out.csv = true,
                "svg" => out.svg = true,
                other => return Err(CliError::Usage(format!("unknown --emit format {other:?}"))),
            }
        }
        Ok(out)
    }
}

/// Everything that determines a run's output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub input: String,
    pub seed: u64,
    pub n_samples: Option<usize>,
    pub n_theta: Option<usize>,
    pub tol: f64,
    pub tolerances: Tolerances,
    pub out: PathBuf,
    pub emit: Emit,
}

impl RunConfig {
    /// Comment lines echoed at the top of every CSV file.
    pub fn header(&self) -> Vec<String> {
        vec![
            format!("schema_version: {SCHEMA_VERSION}"),
            format!("command: {}", self.command),
            format!("input: {}", self.input),
            format!("seed: {}", self.seed),
            format!("samples: {}", opt(self.n_samples)),
            format!("theta_steps: {}", opt(self.n_theta)),
            format!("tol: {:e}", self.tol),
            format!(
                "tolerances: {}",
                serde_json::to_string(&self.tolerances).expect("tolerances serialise")
            ),
        ]
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}
