use std::fmt;
use std::str::FromStr;

use patience_core::{Guard, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Dot,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "dot" => Ok(OutputFormat::Dot),
            other => Err(format!("unknown format `{other}` (expected text, json, csv or dot)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Dot => "dot",
        })
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub variant: Option<Variant>,
    pub guard: Guard,
    pub conj_bound: Option<usize>,
    pub format: OutputFormat,
    pub parallelism: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { variant: None, guard: Guard::DEFAULT, conj_bound: None, format: OutputFormat::Text, parallelism: 1 }
    }
}

impl RunConfig {
    pub fn variant(&self) -> anyhow::Result<Variant> {
        self.variant.ok_or_else(|| anyhow::anyhow!("this command needs --variant left|right"))
    }

    /// Conjugator length bound for an operand of length `len`.
    pub fn bound_for(&self, len: usize) -> usize {
        self.conj_bound.unwrap_or(len + 4)
    }
}
