//! Command reports. Everything except the final `timing` section depends
//! only on the inputs.

use std::fmt::Write as _;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Serialized structures produced by the command.
    pub output: Option<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Vec<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
        passed
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Exit code: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, timing: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "bicat {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "command: {}", self.command);
        if !self.notes.is_empty() {
            s.push_str("facts:\n");
            for n in &self.notes {
                let _ = writeln!(s, "  {n}");
            }
        }
        s.push_str("checks:\n");
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            for d in &c.detail {
                let _ = writeln!(s, "      {d}");
            }
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "pass" } else { "fail" });
        if let Some(out) = &self.output {
            s.push_str("output:\n");
            for line in out.lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
        if timing {
            s.push_str("timing:\n");
            let _ = writeln!(s, "  elapsed-ms: {}", self.elapsed.as_millis());
        }
        s
    }
}
