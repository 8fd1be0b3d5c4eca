use std::fmt::Write;

use serde_json::{Map, Value};

/// Ordered key/value report rendered as indented text or JSON.
pub struct Report {
    command: &'static str,
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &'static str, gamma: &str) -> Self {
        Report {
            command,
            fields: vec![("gamma".into(), Value::String(gamma.into()))],
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn json(&self) -> String {
        let mut m = Map::new();
        m.insert("schema".into(), Value::from(1));
        m.insert("command".into(), Value::from(self.command));
        for (k, v) in &self.fields {
            m.insert(k.clone(), v.clone());
        }
        serde_json::to_string_pretty(&Value::Object(m)).expect("serializable")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        for (k, v) in &self.fields {
            render(&mut out, k, v, 1);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::Number(_) | Value::Bool(_))) =>
        {
            Some(
                a.iter()
                    .map(|x| scalar(x).unwrap())
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        }
        _ => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        writeln!(out, "{pad}{key}: {s}").unwrap();
        return;
    }
    writeln!(out, "{pad}{key}:").unwrap();
    match v {
        Value::Array(items) => {
            for (n, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}  {s}").unwrap(),
                    None => render(out, &format!("[{}]", n + 1), item, depth + 1),
                }
            }
        }
        Value::Object(m) => {
            for (k, x) in m {
                render(out, k, x, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}
