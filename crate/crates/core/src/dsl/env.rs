use std::collections::BTreeMap;

use serde::Deserialize;

use crate::logic::{Evidence, LogicError, PBit, TruthPair};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Crisp(PBit),
    Pair(TruthPair),
    Counts(Evidence),
}

#[derive(Debug, thiserror::Error)]
pub enum EnvError {
    #[error("environment is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("binding `{name}`: {source}")]
    Invalid { name: String, source: LogicError },
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawValue {
    Symbol(String),
    Pair { pair: [f64; 2] },
    Counts { counts: [u64; 3] },
}

/// Atom bindings, read from JSON such as
/// `{"a": {"pair": [0.7, 0.2]}, "b": {"counts": [8, 1, 10]}, "c": "B"}`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Environment {
    bindings: BTreeMap<String, Value>,
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: &str, value: Value) -> &mut Self {
        self.bindings.insert(name.to_string(), value);
        self
    }

    pub fn with(mut self, name: &str, value: Value) -> Self {
        self.bind(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    pub fn from_json(text: &str) -> Result<Self, EnvError> {
        let raw: BTreeMap<String, RawValue> = serde_json::from_str(text)?;
        let mut env = Environment::new();
        for (name, v) in raw {
            let value = match v {
                RawValue::Symbol(s) => s.parse().map(Value::Crisp),
                RawValue::Pair { pair: [p, m] } => TruthPair::new(p, m).map(Value::Pair),
                RawValue::Counts { counts: [p, m, n] } => Evidence::new(p, m, n).map(Value::Counts),
            }
            .map_err(|source| EnvError::Invalid { name: name.clone(), source })?;
            env.bind(&name, value);
        }
        Ok(env)
    }
}
