use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use strata_lab::pbw::Presentation;
use strata_lab::strat::HPrime;

use crate::Outcome;

pub const HSPEC_CITATION: &str =
    "finitely many torus-invariant primes; for a quantum affine space they are the ideals generated by sets of variables";

pub const STRATUM_CITATIONS: [&str; 2] = [
    "each stratum localizes to a graded-simple ring whose center is a Laurent polynomial ring",
    "the center has r or fewer indeterminates",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }

    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

/// The JSON envelope every command prints.
#[derive(Clone, Debug)]
pub struct Report {
    command: String,
    digest: String,
    algebra: Option<Value>,
    results: Value,
    citations: Vec<String>,
    pub status: Status,
}

impl Report {
    /// The digest covers the command, the algebra source and every option.
    pub fn new(command: &str, source: &str, inputs: &[String]) -> Self {
        let mut h = Sha256::new();
        h.update(command.as_bytes());
        h.update([0]);
        h.update(source.as_bytes());
        for i in inputs {
            h.update([0]);
            h.update(i.as_bytes());
        }
        Report {
            command: command.to_string(),
            digest: hex::encode(h.finalize()),
            algebra: None,
            results: Value::Null,
            citations: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn set_algebra(&mut self, p: &Presentation) {
        self.algebra = Some(json!({
            "name": p.name(),
            "generators": p.generators(),
            "parameters": p.context().symbols(),
        }));
    }

    pub fn cite(&mut self, c: &str) {
        if !self.citations.iter().any(|x| x == c) {
            self.citations.push(c.to_string());
        }
    }

    pub fn fail(&mut self) {
        self.status = Status::Failed;
    }

    pub fn results(&mut self, v: Value) {
        self.results = v;
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_digest": self.digest,
            "algebra": self.algebra,
            "results": self.results,
            "citations": self.citations,
            "status": self.status.as_str(),
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn finish(&self) -> Outcome {
        let mut stdout = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        stdout.push('\n');
        Outcome { stdout, stderr: String::new(), code: self.status.code() }
    }

    /// Reports `msg` with exit code 1 (a failed computation) or 2 (bad input).
    pub fn error(&mut self, msg: &str, code: i32) -> Outcome {
        self.status = if code == 2 { Status::Error } else { Status::Failed };
        self.results = json!({ "error": msg });
        let mut out = self.finish();
        out.stderr = format!("error: {msg}\n");
        out.code = code;
        out
    }
}

/// Hasse diagram of the H-prime poset, nodes labelled by subset and center rank.
pub fn emit_dot(primes: &[HPrime], ranks: &[usize], edges: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph hspec {\n  rankdir=BT;\n  node [shape=box];\n");
    for (k, (h, r)) in primes.iter().zip(ranks).enumerate() {
        out.push_str(&format!("  n{k} [label=\"{h}\\nrank {r}\"];\n"));
    }
    for (a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_lab::strat::subsets;

    #[test]
    fn dot_shapes() {
        let one = emit_dot(&subsets(1), &[1, 0], &[(0, 1)]);
        assert_eq!(one.matches("[label=").count(), 2);
        assert_eq!(one.matches("->").count(), 1);
        let zero = emit_dot(&subsets(0), &[0], &[]);
        assert_eq!(zero.matches("[label=").count(), 1);
        assert!(!zero.contains("->"));
    }

    #[test]
    fn digest_depends_on_inputs() {
        let a = Report::new("nf", "use quantum_affine(n=2)", &["expr=x2*x1".into()]);
        let b = Report::new("nf", "use quantum_affine(n=2)", &["expr=x1*x2".into()]);
        assert_ne!(a.digest, b.digest);
        assert_eq!(a.digest.len(), 64);
    }
}
