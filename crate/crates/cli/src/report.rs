use serde::Serialize;
use serde_json::Value;

use diagmin::graph::Graph;

pub const SCHEMA: u32 = 1;

/// Top-level JSON document. Field order here is the output order.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Document<'a> {
    pub schema: u32,
    pub tool_version: &'static str,
    pub command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<&'a Graph>,
    pub passed: bool,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    pub total_ms: f64,
}

/// What a command produced: a text rendering, a JSON payload and whether
/// every assertion it made held.
pub struct Outcome {
    pub command: &'static str,
    pub graph: Option<Graph>,
    pub passed: bool,
    pub text: String,
    pub results: Value,
}

impl Outcome {
    pub fn to_json(&self, timings: Option<Timings>) -> String {
        let doc = Document {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            graph: self.graph.as_ref(),
            passed: self.passed,
            results: self.results.clone(),
            timings,
        };
        serde_json::to_string(&doc).expect("reports serialize")
    }
}
