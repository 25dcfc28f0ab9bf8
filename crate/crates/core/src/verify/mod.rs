//! Self-contained reproduction suites. Each suite embeds its posets and
//! reports one [`Assertion`] per checked statement.

mod descent;
mod equivalence;
mod integrality;

use serde::Serialize;

use crate::error::{Error, Result};

pub use descent::{chain_argmax, descent_max, fibonacci_family, volume_example};
pub use equivalence::{chain_equiv, facet_bounds, forbidden_x, new_type, zigzag_equiv};
pub use integrality::{integrality_acyclic, minimal_partition};

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub description: String,
    /// The mathematical statement being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

impl SuiteReport {
    fn new(suite: &str, assertions: Vec<Assertion>) -> Self {
        let passed = assertions.iter().all(|a| a.passed);
        SuiteReport { suite: suite.to_string(), passed, assertions }
    }

    fn merge(suite: &str, parts: Vec<SuiteReport>) -> Self {
        SuiteReport::new(suite, parts.into_iter().flat_map(|r| r.assertions).collect())
    }
}

/// Runs `check`; an error counts as a failure with the error as detail.
pub(crate) fn check(description: &str, claim: &str, check: impl FnOnce() -> Result<(bool, String)>) -> Assertion {
    let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    Assertion { description: description.to_string(), claim: claim.to_string(), passed, detail }
}

pub const SUITES: [&str; 11] = [
    "integrality-acyclic",
    "minimal-partition",
    "chain-equiv",
    "zigzag-equiv",
    "forbidden-x",
    "facet-bounds",
    "new-type",
    "volume-example",
    "fibonacci-family",
    "descent-max",
    "chain-argmax",
];

pub fn run_suite(slug: &str) -> Result<SuiteReport> {
    let assertions = match slug {
        "integrality-acyclic" => integrality_acyclic(),
        "minimal-partition" => minimal_partition(),
        "chain-equiv" => chain_equiv(),
        "zigzag-equiv" => zigzag_equiv(),
        "forbidden-x" => forbidden_x(),
        "facet-bounds" => facet_bounds(),
        "new-type" => new_type(),
        "volume-example" => volume_example(),
        "fibonacci-family" => fibonacci_family(),
        "descent-max" => descent_max(),
        "chain-argmax" => chain_argmax(),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport::new(slug, assertions))
}

/// Integrality: the forest criterion, the diamond witnesses and the
/// minimal-element partitions.
pub fn suite_integrality_acyclic() -> SuiteReport {
    SuiteReport::merge(
        "integrality",
        vec![run_suite("integrality-acyclic").expect("known"), run_suite("minimal-partition").expect("known")],
    )
}

/// Unimodular equivalences, non-equivalences and facet bounds.
pub fn suite_equivalence() -> SuiteReport {
    let slugs = ["chain-equiv", "zigzag-equiv", "forbidden-x", "facet-bounds", "new-type"];
    SuiteReport::merge("equivalence", slugs.iter().map(|s| run_suite(s).expect("known")).collect())
}

/// Volumes and descent statistics.
pub fn suite_volume_descent() -> SuiteReport {
    let slugs = ["volume-example", "fibonacci-family", "descent-max", "chain-argmax"];
    SuiteReport::merge("volume-descent", slugs.iter().map(|s| run_suite(s).expect("known")).collect())
}
