//! Verification suites: named groups of checks run concurrently, with a
//! text report and a JSON summary.

pub mod criteria;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::coxeter::{Budget, Family};
use crate::error::{Error, Result};
use criteria::Outcome;

/// A named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Fully commutative elements of `W(D_4)` against the fixture list.
    AppendixA,
    /// Listed families of `W^c(B~_4)`.
    AppendixB,
    /// Listed families of `W^c(D~_4)`.
    AppendixC,
    /// Commuting squares, group homomorphisms, Temperley-Lieb relations.
    Relations,
    /// The two reducedness tests agree.
    ReducedWords,
    /// Length laws, injections `I` and `J`, centralizer of `t`.
    Towers,
    /// Leading terms of `Q_n` on the Hecke algebra.
    HeckeLeading,
    /// Temperley-Lieb images of generators and top strata.
    TlExpansions,
    /// Truncated faithfulness.
    Independence,
    /// Normal-form bijectivity.
    NormalForms,
    /// Every suite above.
    All,
}

impl Suite {
    /// Every suite except `All`, in report order.
    pub const EACH: [Suite; 10] = [
        Suite::AppendixA,
        Suite::AppendixB,
        Suite::AppendixC,
        Suite::Relations,
        Suite::ReducedWords,
        Suite::Towers,
        Suite::HeckeLeading,
        Suite::TlExpansions,
        Suite::Independence,
        Suite::NormalForms,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::AppendixC => "appendixC",
            Suite::Relations => "relations",
            Suite::ReducedWords => "reduced-words",
            Suite::Towers => "towers",
            Suite::HeckeLeading => "hecke-leading",
            Suite::TlExpansions => "tl-expansions",
            Suite::Independence => "independence",
            Suite::NormalForms => "normal-forms",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides of the default instance of each check.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    /// Subscript of the main family of the suite.
    pub rank: Option<usize>,
    /// Length bound.
    pub max_length: Option<usize>,
    /// Enumeration ceiling.
    pub budget: Budget,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            rank: None,
            max_length: None,
            budget: Budget::from_env(),
        }
    }
}

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Check name.
    pub name: String,
    /// Cases and failures.
    pub outcome: Outcome,
    /// Wall-clock time.
    pub seconds: f64,
}

impl CheckResult {
    /// True when nothing failed.
    pub fn passed(&self) -> bool {
        self.outcome.passed()
    }

    /// The first failing case, if any.
    pub fn first_counterexample(&self) -> Option<&str> {
        self.outcome.report.failures.first().map(String::as_str)
    }

    /// JSON summary.
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed(),
            "checked": self.outcome.report.checked,
            "failed": self.outcome.report.failures.len(),
            "summary": self.outcome.summary,
            "first_counterexample": self.first_counterexample(),
            "seconds": (self.seconds * 1000.0).round() / 1000.0,
        })
    }
}

/// Results of a suite, in a fixed order.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Suite that was run.
    pub suite: Suite,
    /// One entry per check.
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// JSON summary.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        })
    }

    /// Human-readable report: one line per check, plus the first
    /// counterexample of each failing check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {}: {} ({:.2} s)\n", c.name, c.outcome.summary, c.seconds));
            if let Some(x) = c.first_counterexample() {
                out.push_str(&format!("  first counterexample: {x}\n"));
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} suite {}\n", self.suite));
        out
    }
}

type Job = Box<dyn FnOnce() -> Result<Outcome> + Send>;

fn jobs(suite: Suite, p: Params) -> Vec<(String, Job)> {
    let b = p.budget;
    let rank = p.rank;
    let len = p.max_length;
    let job = |name: &str, f: Job| (name.to_string(), f);
    match suite {
        Suite::AppendixA => vec![job("appendixA", Box::new(criteria::appendix_a))],
        Suite::AppendixB => vec![job("appendixB", Box::new(|| criteria::appendix_families(Family::Btilde)))],
        Suite::AppendixC => vec![job("appendixC", Box::new(|| criteria::appendix_families(Family::Dtilde)))],
        Suite::Relations => {
            let ns: Vec<usize> = rank.map_or(vec![3, 4], |r| vec![r]);
            vec![
                job("squares", Box::new(move || criteria::squares(&ns))),
                job("tl-relations", Box::new(move || criteria::tl_relations(rank.unwrap_or(4)))),
            ]
        }
        Suite::ReducedWords => vec![job(
            "reduced-words",
            Box::new(move || criteria::reduced_words(rank.unwrap_or(4), len.unwrap_or(8))),
        )],
        Suite::Towers => {
            let ks: Vec<usize> = rank.map_or(vec![3, 4], |r| vec![r]);
            vec![
                job("length-laws", Box::new(move || criteria::length_laws(&ks, &ks, len.unwrap_or(8), b))),
                job(
                    "injections",
                    Box::new(move || criteria::injections(rank.unwrap_or(4), len.unwrap_or(10), b)),
                ),
                job(
                    "centralizer",
                    Box::new(move || criteria::centralizer(rank.unwrap_or(4), len.unwrap_or(8), 200, 13, b)),
                ),
            ]
        }
        Suite::HeckeLeading => vec![job(
            "hecke-leading",
            Box::new(move || criteria::hecke_leading(rank.unwrap_or(3), len.unwrap_or(6), b)),
        )],
        Suite::TlExpansions => vec![
            job("basic-expansions", Box::new(move || criteria::basic_expansions(rank.unwrap_or(4)))),
            job(
                "tl-lemmas",
                Box::new(move || criteria::tl_lemmas(rank.unwrap_or(4), len.unwrap_or(10), 3, b)),
            ),
        ],
        Suite::Independence => {
            let kb = rank.unwrap_or(3);
            vec![job(
                "independence",
                Box::new(move || criteria::faithfulness(kb, kb + 1, len.unwrap_or(8), b)),
            )]
        }
        Suite::NormalForms => vec![
            job(
                "normal-forms B~",
                Box::new(move || criteria::normal_forms(Family::Btilde, rank.unwrap_or(4), len.unwrap_or(10), b)),
            ),
            job(
                "normal-forms D~",
                Box::new(move || criteria::normal_forms(Family::Dtilde, rank.unwrap_or(4), len.unwrap_or(10), b)),
            ),
        ],
        Suite::All => Suite::EACH.into_iter().flat_map(|s| jobs(s, p)).collect(),
    }
}

/// Runs the checks of a suite on separate threads. The first error, in
/// check order, is returned.
pub fn run_suite(suite: Suite, params: Params) -> Result<SuiteReport> {
    let jobs = jobs(suite, params);
    let results: Vec<(String, Result<Outcome>, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(name, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let out = f();
                    (name, out, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    let mut checks = Vec::with_capacity(results.len());
    for (name, out, seconds) in results {
        checks.push(CheckResult {
            name,
            outcome: out?,
            seconds,
        });
    }
    Ok(SuiteReport { suite, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn appendix_a_suite() {
        let r = run_suite(Suite::AppendixA, Params::default()).unwrap();
        assert!(r.passed());
        assert!(r.to_text().contains("PASS appendixA: 48/48 matched"));
        assert_eq!(r.to_json()["checks"][0]["checked"], 48 * 2 + 48 * 2 + 1);
    }

    #[test]
    fn failing_suite_reports_counterexample() {
        let r = run_suite(Suite::AppendixC, Params::default()).unwrap();
        assert!(!r.passed());
        let j = r.to_json();
        assert!(j["checks"][0]["first_counterexample"].as_str().unwrap().starts_with("[a6]"));
        assert!(r.to_text().contains("first counterexample: [a6]"));
    }

    #[test]
    fn small_overrides() {
        let p = Params {
            rank: Some(4),
            max_length: Some(4),
            budget: Budget::new(1_000_000),
        };
        for s in [Suite::ReducedWords, Suite::NormalForms, Suite::Relations] {
            let r = run_suite(s, p).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }
}
