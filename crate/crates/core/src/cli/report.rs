use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::kernel::Group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// One checked claim. Field order is the serialized schema.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub millis: u64,
}

/// What a check found.
pub struct Outcome {
    pub computed: String,
    pub pass: bool,
    pub witness: Option<Vec<String>>,
}

impl Outcome {
    pub fn new(computed: impl Into<String>, pass: bool) -> Self {
        Outcome {
            computed: computed.into(),
            pass,
            witness: None,
        }
    }

    pub fn with_witness(mut self, g: &Group) -> Self {
        self.witness = Some(generators_of(g));
        self
    }
}

pub fn generators_of(g: &Group) -> Vec<String> {
    g.generators().iter().map(ToString::to_string).collect()
}

impl Report {
    /// Runs `check`, timing it. Budget errors become SKIPPED, other errors
    /// FAIL.
    pub fn run(
        claim: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        check: impl FnOnce() -> Result<Outcome>,
    ) -> Report {
        let start = Instant::now();
        let result = check();
        let millis = start.elapsed().as_millis() as u64;
        let (computed, verdict, witness) = match result {
            Ok(o) => (
                o.computed,
                if o.pass { Verdict::Pass } else { Verdict::Fail },
                o.witness,
            ),
            Err(e) if e.is_budget() => (e.to_string(), Verdict::Skipped, None),
            Err(e) => (format!("error: {e}"), Verdict::Fail, None),
        };
        Report {
            claim: claim.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            computed,
            verdict,
            witness,
            millis,
        }
    }

    pub fn skipped(
        claim: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        reason: &str,
    ) -> Report {
        Report {
            claim: claim.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            computed: reason.into(),
            verdict: Verdict::Skipped,
            witness: None,
            millis: 0,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<7} {:<34} {}: expected {}, computed {} ({} ms)",
            self.verdict, self.claim, self.inputs, self.expected, self.computed, self.millis
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n        witness: {}", w.join(" "))?;
        }
        Ok(())
    }
}
