//! The record every invocation produces, printed either as plain text or as
//! one JSON object.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERDICT_FALSE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const CAP: u8 = 3;
}

/// Result of one command before rendering.
#[derive(Debug, Default)]
pub struct Outcome {
    /// Plain-text body, newline-terminated.
    pub text: String,
    pub result: Value,
    pub violations: Vec<Value>,
    pub notes: Vec<String>,
    pub status: u8,
}

impl Outcome {
    pub fn new(text: impl Into<String>, result: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Outcome { text, result, ..Default::default() }
    }

    /// `true` prints as-is with exit 0, `false` exits 1.
    pub fn verdict(text: impl Into<String>, result: Value, ok: bool) -> Self {
        let mut o = Outcome::new(text, result);
        o.status = if ok { exit::OK } else { exit::VERDICT_FALSE };
        o
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Digest of the command line and every input file it read, so identical
/// inputs give identical reports.
#[derive(Debug, Default)]
pub struct InputDigest {
    hasher: Sha256,
}

impl InputDigest {
    pub fn new(args: &[String]) -> Self {
        let mut d = InputDigest::default();
        for a in args {
            d.absorb(a.as_bytes());
        }
        d
    }

    pub fn absorb(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn hex(&self) -> String {
        self.hasher.clone().finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub struct RunReport<'a> {
    pub command: &'a [String],
    pub digest: String,
    pub outcome: &'a Outcome,
    pub error: Option<String>,
}

impl RunReport<'_> {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_digest": self.digest,
            "result": self.outcome.result,
            "violations": self.outcome.violations,
            "notes": self.outcome.notes,
            "error": self.error,
            "exit_status": self.outcome.status,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for note in &self.outcome.notes {
            out.push_str("# note: ");
            out.push_str(note);
            out.push('\n');
        }
        out.push_str(&self.outcome.text);
        out
    }
}
