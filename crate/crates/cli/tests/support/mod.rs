//! Helpers shared by the CLI integration tests.
#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

pub const BIN: &str = env!("CARGO_BIN_EXE_hybridcipher");
pub const FOREST: &str = "IN THE FOREST THERE ARE MANY TREES WITH THE SAME HEIGHT";
pub const CIPHER1: &str = "HRTEMTSHSHHTNFSERNEIHMITIEEHAARWTAETTOTREYETEEGT";
pub const FINAL: &str = "PEMLQYGYWZAMUJJIREIUHZGMZIIZWIKDMHILTAXYIGKAX";

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Runs the binary with `stdin` piped in and `env` added to its environment.
pub fn exec_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args)
        .env_remove("HYBRIDCIPHER_ENGLISH_TABLE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn hybridcipher");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn exec(args: &[&str], stdin: &str) -> Output {
    exec_env(args, stdin, &[])
}

/// Runs and requires exit 0.
pub fn ok(args: &[&str], stdin: &str) -> String {
    let out = exec(args, stdin);
    assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
    out.stdout
}

pub fn schema() -> Value {
    serde_json::from_str(&std::fs::read_to_string(data_file("report.schema.json")).unwrap()).unwrap()
}

/// Checks `value` against the JSON Schema keywords our schema uses (type,
/// required, properties, additionalProperties, items, enum, minimum, maximum,
/// minItems, maxItems, minProperties, maxProperties, pattern, propertyNames).
/// Patterns are limited to `^[A-Z]$`, `^[A-Z]+$` and `^[A-Z]*$`.
pub fn validate(value: &Value, schema: &Value, path: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{path}: {what}"));
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().map(|x| x.as_str().unwrap()).collect(),
            _ => unreachable!(),
        };
        let matches = types.iter().any(|&t| match t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_u64() || value.is_i64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            _ => unreachable!("type {t}"),
        });
        if !matches {
            return fail(&format!("expected {types:?}, got {value}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return fail("not in enum");
        }
    }
    if let Some(x) = value.as_f64() {
        if schema.get("minimum").and_then(Value::as_f64).is_some_and(|m| x < m) {
            return fail("below minimum");
        }
        if schema.get("maximum").and_then(Value::as_f64).is_some_and(|m| x > m) {
            return fail("above maximum");
        }
    }
    if let (Some(s), Some(p)) = (value.as_str(), schema.get("pattern").and_then(Value::as_str)) {
        check_pattern(s, p).or_else(|e| fail(&e))?;
    }
    if let Some(a) = value.as_array() {
        if schema.get("minItems").and_then(Value::as_u64).is_some_and(|m| (a.len() as u64) < m)
            || schema.get("maxItems").and_then(Value::as_u64).is_some_and(|m| a.len() as u64 > m)
        {
            return fail("item count out of range");
        }
        if let Some(items) = schema.get("items") {
            for (i, v) in a.iter().enumerate() {
                validate(v, items, &format!("{path}[{i}]"))?;
            }
        }
    }
    if let Some(o) = value.as_object() {
        for r in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !o.contains_key(r.as_str().unwrap()) {
                return fail(&format!("missing {r}"));
            }
        }
        if schema.get("minProperties").and_then(Value::as_u64).is_some_and(|m| (o.len() as u64) < m)
            || schema.get("maxProperties").and_then(Value::as_u64).is_some_and(|m| o.len() as u64 > m)
        {
            return fail("property count out of range");
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (k, v) in o {
            if let Some(p) = schema.get("propertyNames").and_then(|n| n.get("pattern")).and_then(Value::as_str) {
                check_pattern(k, p).or_else(|e| fail(&e))?;
            }
            match props.and_then(|p| p.get(k)) {
                Some(sub) => validate(v, sub, &format!("{path}.{k}"))?,
                None => {
                    if let Some(extra) = schema.get("additionalProperties") {
                        validate(v, extra, &format!("{path}.{k}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_pattern(s: &str, pattern: &str) -> Result<(), String> {
    let upper = s.bytes().all(|b| b.is_ascii_uppercase());
    let ok = match pattern {
        "^[A-Z]$" => s.len() == 1 && upper,
        "^[A-Z]+$" => !s.is_empty() && upper,
        "^[A-Z]*$" => upper,
        _ => panic!("unsupported pattern {pattern}"),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{s:?} does not match {pattern}"))
    }
}

pub fn validate_def(value: &Value, def: &str) -> Result<(), String> {
    let s = schema();
    let sub = match def {
        "report" => &s,
        _ => &s["$defs"][def],
    };
    validate(value, sub, def)
}
