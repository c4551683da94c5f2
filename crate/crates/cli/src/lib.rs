//! Library side of the pfkit binary: the JSON envelope every command
//! emits, the named verification suites, and the enumeration cap
//! shared between commands.

#![forbid(unsafe_code)]

pub mod suites;

use serde::{Deserialize, Serialize};

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_VAR: &str = "PFKIT_ENUM_CAP";

/// The cap on enumeration work, from the environment or the built-in
/// default. Commands that would stream or tally more objects than this
/// stop with a resource error instead.
pub fn enum_cap() -> u128 {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .unwrap_or(enumerators::DEFAULT_ENUM_CAP),
        Err(_) => enumerators::DEFAULT_ENUM_CAP,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

impl Tool {
    pub fn current() -> Self {
        Tool {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Everything needed to rerun a command: the subcommand name, its
/// parameters, and the knobs that affect output. Caps are decimal
/// strings because they may exceed what a JSON number can carry
/// faithfully.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JobConfig {
    pub command: String,
    pub parameters: serde_json::Map<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    pub cap: String,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl JobConfig {
    pub fn new(command: &str, format: &str) -> Self {
        JobConfig {
            command: command.to_string(),
            parameters: serde_json::Map::new(),
            seed: None,
            trials: None,
            cap: enum_cap().to_string(),
            format: format.to_string(),
            out: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }
}

/// The common wrapper around every JSON result, so downstream tooling
/// can check provenance and reproduce the run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub tool: Tool,
    pub config: JobConfig,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(config: JobConfig, result: T) -> Self {
        Envelope { tool: Tool::current(), config, result }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}
