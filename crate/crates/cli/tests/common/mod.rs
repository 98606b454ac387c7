#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use induced_free::Graph;
use serde_json::Value;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_feasible"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn feasible")
}

pub fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn feasible");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Run, require exit 0 and parse stdout as JSON.
pub fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

pub fn schema_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schema")
        .join(format!("{name}.schema.json"))
}

pub fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Checker for the draft-07 keywords the shipped schemas use. Unknown
/// keywords are reported as errors so a schema edit cannot be silently skipped.
pub fn validate(schema: &Value, instance: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    check(schema, schema, instance, "$", &mut errors);
    errors
}

fn check(root: &Value, schema: &Value, x: &Value, at: &str, errors: &mut Vec<String>) {
    let obj = schema.as_object().expect("schema is an object");
    for (key, want) in obj {
        match key.as_str() {
            "$schema" | "title" | "description" | "definitions" => {}
            "$ref" => {
                let name = want
                    .as_str()
                    .and_then(|r| r.strip_prefix("#/definitions/"))
                    .unwrap_or_else(|| panic!("unsupported $ref {want}"));
                check(root, &root["definitions"][name], x, at, errors);
            }
            "type" => {
                let types: Vec<&str> = match want {
                    Value::String(s) => vec![s.as_str()],
                    Value::Array(a) => a.iter().map(|t| t.as_str().unwrap()).collect(),
                    _ => panic!("bad type keyword"),
                };
                if !types.iter().any(|t| has_type(x, t)) {
                    errors.push(format!("{at}: expected {types:?}, found {x}"));
                }
            }
            "enum" => {
                if !want.as_array().unwrap().contains(x) {
                    errors.push(format!("{at}: {x} not in {want}"));
                }
            }
            "required" => {
                if let Some(o) = x.as_object() {
                    for k in want.as_array().unwrap() {
                        if !o.contains_key(k.as_str().unwrap()) {
                            errors.push(format!("{at}: missing {k}"));
                        }
                    }
                }
            }
            "properties" => {
                if let Some(o) = x.as_object() {
                    for (k, sub) in want.as_object().unwrap() {
                        if let Some(v) = o.get(k) {
                            check(root, sub, v, &format!("{at}.{k}"), errors);
                        }
                    }
                }
            }
            "additionalProperties" => {
                assert_eq!(want, &Value::Bool(false), "only false is supported");
                if let Some(o) = x.as_object() {
                    let props = obj.get("properties").and_then(Value::as_object);
                    for k in o.keys() {
                        if !props.is_some_and(|p| p.contains_key(k)) {
                            errors.push(format!("{at}: unexpected property {k}"));
                        }
                    }
                }
            }
            "items" => {
                if let Some(a) = x.as_array() {
                    for (i, v) in a.iter().enumerate() {
                        check(root, want, v, &format!("{at}[{i}]"), errors);
                    }
                }
            }
            "minItems" | "maxItems" => {
                if let Some(a) = x.as_array() {
                    let bound = want.as_u64().unwrap() as usize;
                    let ok = if key == "minItems" {
                        a.len() >= bound
                    } else {
                        a.len() <= bound
                    };
                    if !ok {
                        errors.push(format!(
                            "{at}: {key} {bound} violated by length {}",
                            a.len()
                        ));
                    }
                }
            }
            "minimum" | "maximum" => {
                if let Some(v) = x.as_f64() {
                    let bound = want.as_f64().unwrap();
                    let ok = if key == "minimum" {
                        v >= bound
                    } else {
                        v <= bound
                    };
                    if !ok {
                        errors.push(format!("{at}: {key} {bound} violated by {v}"));
                    }
                }
            }
            "pattern" => {
                if let Some(s) = x.as_str() {
                    let re = regex::Regex::new(want.as_str().unwrap()).unwrap();
                    if !re.is_match(s) {
                        errors.push(format!("{at}: {s:?} does not match {want}"));
                    }
                }
            }
            "oneOf" => {
                let passing = want
                    .as_array()
                    .unwrap()
                    .iter()
                    .filter(|sub| {
                        let mut e = Vec::new();
                        check(root, sub, x, at, &mut e);
                        e.is_empty()
                    })
                    .count();
                if passing != 1 {
                    errors.push(format!("{at}: {passing} oneOf branches match"));
                }
            }
            other => panic!("schema keyword {other} is not supported by the test checker"),
        }
    }
}

fn has_type(x: &Value, t: &str) -> bool {
    match t {
        "null" => x.is_null(),
        "boolean" => x.is_boolean(),
        "object" => x.is_object(),
        "array" => x.is_array(),
        "string" => x.is_string(),
        "number" => x.is_number(),
        "integer" => x.is_u64() || x.is_i64(),
        other => panic!("unknown type {other}"),
    }
}

/// Induced containment by scanning every ordered vertex tuple.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        if i == pattern.order() {
            return true;
        }
        for h in 0..host.order() {
            if chosen.contains(&h) {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(h, chosen[j])) {
                chosen.push(h);
                if go(host, pattern, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(host, pattern, &mut Vec::new())
}

/// Feasible edge counts at `n` vertices by scanning all labeled graphs.
pub fn brute_pairs(forbidden: &[Graph], n: usize) -> Vec<bool> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut feasible = vec![false; pairs.len() + 1];
    for code in 0u64..1 << pairs.len() {
        let m = code.count_ones() as usize;
        if feasible[m] {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| code >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if forbidden.iter().all(|f| !brute_contains(&g, f)) {
            feasible[m] = true;
        }
    }
    feasible
}
