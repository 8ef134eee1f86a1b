//! Library backing the `koethe` command-line tool: job parsing, oracle
//! reports, the worked-example demo, and the oracle/theorem agreement
//! corpus.

pub mod corpus;
pub mod demo;
pub mod oracle;

use serde::{Deserialize, Serialize};

use koethe::classify::{Assumptions, Caps};
use koethe::{GroupDescriptor, RingDescriptor};

/// A full classification job, as accepted on stdin or via `--job`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JobSpec {
    /// Schema version; only 1 is defined.
    #[serde(default = "default_version")]
    pub v: u32,
    pub ring: RingDescriptor,
    pub group: GroupDescriptor,
    pub question: Question,
    #[serde(default)]
    pub assumptions: Assumptions,
}

fn default_version() -> u32 {
    1
}

impl JobSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.v != 1 {
            return Err(format!("unsupported schema version {}", self.v));
        }
        if self.assumptions.caps.ring_size == 0 || self.assumptions.caps.ideal_lattice == 0 {
            return Err("caps must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Question {
    Kothe,
    Pss,
}

/// Caps with environment-variable overrides applied:
/// KOETHE_RING_CAP, KOETHE_IDEAL_CAP, KOETHE_SCAN_CAP.
pub fn caps_from_env() -> Caps {
    let mut caps = Caps::default();
    let read =
        |name: &str| -> Option<usize> { std::env::var(name).ok().and_then(|v| v.parse().ok()) };
    if let Some(v) = read("KOETHE_RING_CAP") {
        caps.ring_size = v;
    }
    if let Some(v) = read("KOETHE_IDEAL_CAP") {
        caps.ideal_lattice = v;
    }
    if let Some(v) = read("KOETHE_SCAN_CAP") {
        caps.scan_quotient_size = v;
    }
    caps
}

/// Runs a job against the classifier.
pub fn run_job(job: &JobSpec) -> koethe::Result<koethe::classify::Verdict> {
    match job.question {
        Question::Kothe => {
            koethe::classify::classify_kothe(&job.ring, &job.group, &job.assumptions)
        }
        Question::Pss => {
            koethe::classify::classify_pure_semisimple(&job.ring, &job.group, &job.assumptions)
        }
    }
}

/// Renders a verdict as numbered human-readable trace lines.
pub fn render_verdict_text(v: &koethe::classify::Verdict) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let answer = match v.answer {
        koethe::classify::Answer::Yes => "yes",
        koethe::classify::Answer::No => "no",
        koethe::classify::Answer::Unknown => "unknown",
    };
    writeln!(out, "answer: {answer}").unwrap();
    if let Some(reason) = &v.unknown_reason {
        writeln!(out, "blocked: {reason}").unwrap();
    }
    writeln!(out, "trace:").unwrap();
    for (i, rule) in v.trace.iter().enumerate() {
        let fired = if rule.decisive { "fired" } else { "tried" };
        let citations: Vec<&str> = rule.citations.iter().map(|c| c.label.as_str()).collect();
        writeln!(
            out,
            "  {}. [{}] {} -> {} -> {}",
            i + 1,
            rule.rule_id,
            fired,
            citations.join(", "),
            rule.conclusion
        )
        .unwrap();
        for h in &rule.hypotheses {
            let status = match h.status {
                koethe::classify::HypothesisStatus::Computed => "computed",
                koethe::classify::HypothesisStatus::Assumed => "assumed",
            };
            writeln!(
                out,
                "       - {} [{}: {}]",
                h.statement,
                status,
                if h.holds { "holds" } else { "fails" }
            )
            .unwrap();
        }
        for n in &rule.notes {
            writeln!(out, "       note: {n}").unwrap();
        }
    }
    if !v.assumptions.is_empty() {
        writeln!(out, "assumptions: {}", v.assumptions.join(", ")).unwrap();
    }
    writeln!(
        out,
        "caps: ring_size={} ideal_lattice={} scan_quotient_size={}",
        v.caps.ring_size, v.caps.ideal_lattice, v.caps.scan_quotient_size
    )
    .unwrap();
    out
}
