//! Flat key-value reports with a plain-text and a JSON rendering.

use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Count(usize),
    Flag(bool),
    Text(String),
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Count(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Flag(v)
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Critical = 2,
}

#[derive(Debug, Clone)]
pub struct Report {
    entries: Vec<(String, Field)>,
    status: Status,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report {
            entries: Vec::new(),
            status: Status::Ok,
        };
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl Into<Field>) {
        let key = key.into();
        let value = value.into();
        match self.entries.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((key, value)),
        }
    }

    #[cfg(test)]
    pub fn get(&self, key: &str) -> Option<&Field> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Raises the exit status; never lowers it.
    pub fn escalate(&mut self, status: Status) {
        self.status = self.status.max(status);
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("schema".into(), Value::from(SCHEMA));
        for (k, v) in &self.entries {
            let value = match v {
                Field::Count(n) => Value::from(*n),
                Field::Flag(b) => Value::from(*b),
                Field::Text(s) => Value::from(s.as_str()),
            };
            map.insert(k.clone(), value);
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("string keys");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.entries {
            let shown = match v {
                Field::Count(n) => n.to_string(),
                Field::Flag(true) => "✓".into(),
                Field::Flag(false) => "✗".into(),
                Field::Text(s) => s.clone(),
            };
            writeln!(out, "{k:<width$}  {shown}").unwrap();
        }
        out
    }
}
