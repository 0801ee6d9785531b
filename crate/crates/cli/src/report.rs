use serde::Serialize;
use serde_json::Value;

/// The single JSON document printed on stdout for every run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    /// Present for decision commands; the exit code is 0 iff this is true.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub wall_time_ms: u64,
}

/// What a subcommand hands back before timing is attached.
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub decision: Option<bool>,
    pub seed: Option<u64>,
}

impl Outcome {
    pub fn plain(inputs: Value, result: impl Serialize) -> Self {
        Outcome {
            inputs,
            result: to_value(result),
            decision: None,
            seed: None,
        }
    }

    pub fn decided(inputs: Value, decision: bool, result: impl Serialize) -> Self {
        Outcome {
            decision: Some(decision),
            ..Self::plain(inputs, result)
        }
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

pub fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}
