use std::fmt::Write as _;

use atomlat::{format_scalar, FinSuppVector, LexVector, Operator, PermDiag, Scalar};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Process exit codes. Stable; documented in the README.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Parse = 1,
    NotRankOne = 2,
    NotPositive = 3,
    NotAtomColumn = 4,
    NotInjective = 5,
    InconsistentScaling = 6,
    NotMultiplicative = 7,
    NotInvertible = 8,
    Other = 9,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(name: &str, bytes: &[u8]) -> Self {
        InputDigest {
            name: name.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug)]
pub enum Payload {
    Scalar(Scalar),
    Vector(FinSuppVector),
    Operator(Operator),
    PermDiag(PermDiag),
    Positivity(bool),
    SameInner(bool),
    LexDual {
        dual_image: Option<Scalar>,
        first_unbounded: Option<usize>,
        witness: Option<LexVector>,
    },
}

#[derive(Debug)]
pub struct Diagnostic {
    pub kind: String,
    pub indices: Vec<String>,
    pub message: String,
    pub exit: Exit,
}

impl Diagnostic {
    pub fn new(kind: &str, message: impl ToString, exit: Exit) -> Self {
        Diagnostic {
            kind: kind.to_string(),
            indices: Vec::new(),
            message: message.to_string(),
            exit,
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub outcome: Result<Payload, Diagnostic>,
}

impl Report {
    pub fn exit(&self) -> Exit {
        match &self.outcome {
            Ok(_) => Exit::Success,
            Err(d) => d.exit,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for input in &self.inputs {
            writeln!(out, "input: {} sha256:{}", input.name, input.sha256).unwrap();
        }
        match &self.outcome {
            Ok(payload) => {
                writeln!(out, "status: ok").unwrap();
                writeln!(out, "result: {}", payload_text(payload)).unwrap();
            }
            Err(d) => {
                writeln!(out, "status: error").unwrap();
                writeln!(out, "error: {}", d.kind).unwrap();
                if !d.indices.is_empty() {
                    writeln!(out, "indices: {}", d.indices.join(" ")).unwrap();
                }
                writeln!(out, "message: {}", d.message).unwrap();
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        let mut obj = json!({
            "command": self.command,
            "inputs": self.inputs,
        });
        match &self.outcome {
            Ok(payload) => {
                obj["status"] = json!("ok");
                obj["result"] = payload_json(payload);
            }
            Err(d) => {
                obj["status"] = json!("error");
                obj["error"] = json!({
                    "kind": d.kind,
                    "indices": d.indices,
                    "message": d.message,
                    "exit_code": d.exit as i32,
                });
            }
        }
        obj
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("json")
}

fn payload_text(payload: &Payload) -> String {
    match payload {
        Payload::Scalar(x) => format_scalar(x),
        Payload::Vector(v) => compact(v),
        Payload::Operator(t) => compact(t),
        Payload::PermDiag(pd) => compact(pd),
        Payload::Positivity(true) => "positive".to_string(),
        Payload::Positivity(false) => "not positive".to_string(),
        Payload::SameInner(true) => "same inner automorphism".to_string(),
        Payload::SameInner(false) => "different inner automorphisms".to_string(),
        Payload::LexDual {
            dual_image: Some(x),
            ..
        } => format!("order-bounded; dual image {}", format_scalar(x)),
        Payload::LexDual {
            first_unbounded,
            witness,
            ..
        } => {
            let mut s = format!(
                "not order-bounded; nonzero coefficient at e_{}",
                first_unbounded.unwrap_or_default()
            );
            if let Some(w) = witness {
                write!(s, "; witness {}", compact(w)).unwrap();
            }
            s
        }
    }
}

fn payload_json(payload: &Payload) -> Value {
    match payload {
        Payload::Scalar(x) => json!(format_scalar(x)),
        Payload::Vector(v) => json!(v),
        Payload::Operator(t) => json!(t),
        Payload::PermDiag(pd) => json!(pd),
        Payload::Positivity(p) => json!({ "positive": p }),
        Payload::SameInner(p) => json!({ "same_inner": p }),
        Payload::LexDual {
            dual_image,
            first_unbounded,
            witness,
        } => {
            let mut obj = json!({ "order_bounded": dual_image.is_some() });
            if let Some(x) = dual_image {
                obj["dual_image"] = json!(format_scalar(x));
            }
            if let Some(k) = first_unbounded {
                obj["first_unbounded_index"] = json!(k);
            }
            if let Some(w) = witness {
                obj["witness"] = json!(w);
            }
            obj
        }
    }
}
