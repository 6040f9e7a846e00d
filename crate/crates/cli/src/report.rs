use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{Outcome, Params};

pub const SCHEMA: &str = "lindef/1";

/// The top-level JSON document written by every command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub engine: String,
    pub parameters: Value,
    pub outcome: Outcome,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, params: &Params, outcome: Outcome, results: Value, wall: Option<Duration>) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            engine: format!("lindef {}", env!("CARGO_PKG_VERSION")),
            parameters: json!({
                "p": params.prime,
                "order": params.order,
                "h": params.steps,
                "s_max": params.smax,
                "seed": params.seed,
            }),
            outcome,
            results,
            wall_time_ms: wall.map(|d| d.as_millis()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
