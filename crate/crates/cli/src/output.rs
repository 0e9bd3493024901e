//! Report rendering: aligned human-readable text by default, JSON on
//! request. Serialization is deterministic (struct field order, stable
//! iteration) so identical inputs produce byte-identical reports.

use serde::Serialize;

use coadq_core::checks::CheckRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A single computed value (normal-form, star, cochain lines).
#[derive(Serialize)]
pub struct ValueReport {
    pub command: String,
    pub algebra: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
}

impl ValueReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut out = String::new();
                for (_, value) in &self.results {
                    out.push_str(value);
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Check-suite report: one record per property plus a pass/fail summary.
#[derive(Serialize)]
pub struct SuiteReport {
    pub command: String,
    pub algebra: String,
    pub records: Vec<CheckRecord>,
    pub witnesses: Vec<WitnessReport>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub ordering: String,
    pub max_degree: u32,
    pub found: bool,
    pub a: Option<String>,
    pub invariant_index: Option<usize>,
    pub remainder: Option<String>,
}

#[derive(Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut out = String::new();
                for r in &self.records {
                    let ordering = r.ordering.as_deref().unwrap_or("-");
                    out.push_str(&format!(
                        "{}  {:<24} {:<6} {:<5} deg<={}\n",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.property,
                        r.algebra,
                        ordering,
                        r.degree_bound
                    ));
                    if let Some(ce) = &r.counterexample {
                        out.push_str(&format!("      counterexample: {ce}\n"));
                    }
                }
                for w in &self.witnesses {
                    if w.found {
                        out.push_str(&format!(
                            "WITNESS ({}, deg<={}): a = {}, invariant {}, remainder = {}\n",
                            w.ordering,
                            w.max_degree,
                            w.a.as_deref().unwrap_or("?"),
                            w.invariant_index.map_or(0, |i| i + 1),
                            w.remainder.as_deref().unwrap_or("?")
                        ));
                    } else {
                        out.push_str(&format!(
                            "WITNESS ({}, deg<={}): none found\n",
                            w.ordering, w.max_degree
                        ));
                    }
                }
                out.push_str(&format!(
                    "summary: {} passed, {} failed\n",
                    self.summary.passed, self.summary.failed
                ));
                out
            }
        }
    }
}

/// Quantized-algebra report: rules, canonical basis per degree, Hilbert
/// table.
#[derive(Serialize)]
pub struct QuantizeReport {
    pub command: String,
    pub algebra: String,
    /// Invariants actually used; fewer than the rank means a truncated
    /// ideal (e.g. the quadratic-only sl3 sample orbit).
    pub invariants_used: usize,
    pub rank: usize,
    pub constants: Vec<String>,
    pub shifts: Vec<String>,
    pub rules: Vec<String>,
    pub basis_by_degree: Vec<(u32, Vec<String>)>,
    pub hilbert: Vec<HilbertRow>,
    pub hilbert_pass: bool,
}

#[derive(Serialize)]
pub struct HilbertRow {
    pub degree: u32,
    pub quotient_dim: usize,
    pub classical_dim: usize,
}

impl QuantizeReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut out = String::new();
                out.push_str(&format!("algebra: {}\n", self.algebra));
                if self.invariants_used < self.rank {
                    out.push_str(&format!(
                        "note: truncated ideal ({} of {} invariants)\n",
                        self.invariants_used, self.rank
                    ));
                }
                out.push_str(&format!("constants: {}\n", self.constants.join(", ")));
                out.push_str(&format!("shifts: {}\n", self.shifts.join(", ")));
                out.push_str("rules:\n");
                for r in &self.rules {
                    out.push_str(&format!("  {r}\n"));
                }
                out.push_str("canonical basis by degree:\n");
                for (d, words) in &self.basis_by_degree {
                    out.push_str(&format!("  deg {d}: {}\n", words.join(", ")));
                }
                out.push_str("hilbert table (degree, quotient, classical):\n");
                for row in &self.hilbert {
                    out.push_str(&format!(
                        "  {:>3}  {:>6}  {:>6}\n",
                        row.degree, row.quotient_dim, row.classical_dim
                    ));
                }
                out.push_str(&format!(
                    "hilbert check: {}\n",
                    if self.hilbert_pass { "PASS" } else { "FAIL" }
                ));
                out
            }
        }
    }
}

/// Rep-check report: Casimir eigenvalue, kernel and span facts.
#[derive(Serialize)]
pub struct RepReport {
    pub command: String,
    pub m: usize,
    pub hbar: String,
    pub shift: String,
    pub c_expected: String,
    pub c_computed: String,
    pub casimir: &'static str,
    pub kernel: &'static str,
    pub span_dims: Vec<SpanRow>,
    pub span: &'static str,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct SpanRow {
    pub degree: u32,
    pub dim: usize,
    pub expected: usize,
}

impl RepReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut out = String::new();
                out.push_str(&format!(
                    "m = {}, hbar = {}, C(h) = {}\n",
                    self.m, self.hbar, self.shift
                ));
                out.push_str(&format!(
                    "casimir eigenvalue: computed {} expected {} -> {}\n",
                    self.c_computed, self.c_expected, self.casimir
                ));
                out.push_str(&format!("kernel: {}\n", self.kernel));
                out.push_str("span dimensions (degree, dim, expected):\n");
                for row in &self.span_dims {
                    out.push_str(&format!(
                        "  {:>3}  {:>4}  {:>4}\n",
                        row.degree, row.dim, row.expected
                    ));
                }
                out.push_str(&format!("span: {}\n", self.span));
                out.push_str(&format!(
                    "rep-check: {}\n",
                    if self.passed { "PASS" } else { "FAIL" }
                ));
                out
            }
        }
    }
}

pub fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization is infallible");
    s.push('\n');
    s
}
