use std::fs;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

/// One verified statement: an expectation from a closed formula or a
/// certificate, and the value the run actually produced.
#[derive(Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

/// The single structured document a run writes to standard output. The
/// overall verdict holds exactly when every claim passes; `timing_ms` is
/// the only field allowed to differ between identical invocations.
#[derive(Serialize)]
pub struct Report {
    pub problem: String,
    pub params: Value,
    pub claims: Vec<Claim>,
    pub artifacts: Value,
    pub blocks_path: Option<String>,
    pub pass: bool,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(problem: &str, params: Value) -> Report {
        Report {
            problem: problem.to_string(),
            params,
            claims: Vec::new(),
            artifacts: Value::Object(Map::new()),
            blocks_path: None,
            pass: false,
            timing_ms: 0,
        }
    }

    /// Records a claim that passes exactly when expected == observed.
    pub fn claim_eq(&mut self, name: &str, expected: Value, observed: Value) {
        let pass = expected == observed;
        self.claims.push(Claim {
            name: name.to_string(),
            expected,
            observed,
            pass,
        });
    }

    /// Records a claim whose verdict the caller computed separately (for
    /// observations that explain rather than mirror the expectation).
    pub fn claim_check(&mut self, name: &str, expected: Value, observed: Value, pass: bool) {
        self.claims.push(Claim {
            name: name.to_string(),
            expected,
            observed,
            pass,
        });
    }

    pub fn artifact(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.artifacts {
            map.insert(key.to_string(), value);
        }
    }

    /// Seals the overall verdict and the elapsed time.
    pub fn seal(mut self, started: Instant) -> Report {
        self.pass = self.claims.iter().all(|c| c.pass);
        self.timing_ms = started.elapsed().as_millis() as u64;
        self
    }
}

/// Writes one block per line: space-separated decimal indices, ascending
/// within a line, lines in ascending numeric-tuple order, LF endings.
pub fn write_blocks(path: &str, blocks: &[Vec<u16>]) -> std::io::Result<()> {
    let mut out = String::new();
    for block in blocks {
        let line: Vec<String> = block.iter().map(u16::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    fs::write(path, out)
}

/// Reads a blocks file back: decimal indices, one block per line, each line
/// strictly increasing. Rejects CR line endings, empty lines, malformed
/// tokens, and duplicate blocks, so a verifier verdict always refers to a
/// well-formed block list.
pub fn read_blocks(path: &str) -> Result<Vec<Vec<u16>>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    if text.contains('\r') {
        return Err(format!("{path}: CR line endings (the format is LF-only)"));
    }
    let mut blocks: Vec<Vec<u16>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let row = lineno + 1;
        if line.is_empty() {
            return Err(format!("{path}:{row}: empty line"));
        }
        let mut block: Vec<u16> = Vec::new();
        for token in line.split(' ') {
            let index: u16 = token
                .parse()
                .map_err(|_| format!("{path}:{row}: token {token:?} is not a point index"))?;
            if block.last().is_some_and(|&prev| prev >= index) {
                return Err(format!(
                    "{path}:{row}: indices must be strictly increasing within a block"
                ));
            }
            block.push(index);
        }
        if blocks.contains(&block) {
            return Err(format!("{path}:{row}: duplicate block"));
        }
        blocks.push(block);
    }
    if blocks.is_empty() {
        return Err(format!("{path}: no blocks"));
    }
    Ok(blocks)
}
