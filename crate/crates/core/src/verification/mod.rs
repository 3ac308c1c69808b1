//! Named verification suites over parameter grids, the homomorphism
//! shadows for two-column shapes, and the three-column census.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub mod census;
pub mod section5;
mod suites;

pub use census::{census_tableaux, counterexample_census, CensusReport};
pub use section5::{
    chain_starts, exact_sequence_chain, in_q_r, kernel_image_dims, q_r_partition, t_lambda_e,
    ExactChain, KerIm, Pairing, QrPartition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Degrees,
    Bijections,
    Characters,
    Decomp,
    Adjustment,
    Section5,
    Counterexample,
    Inequality,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Degrees,
        Suite::Bijections,
        Suite::Characters,
        Suite::Decomp,
        Suite::Adjustment,
        Suite::Section5,
        Suite::Counterexample,
        Suite::Inequality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Degrees => "degrees",
            Suite::Bijections => "bijections",
            Suite::Characters => "characters",
            Suite::Decomp => "decomp",
            Suite::Adjustment => "adjustment",
            Suite::Section5 => "section5",
            Suite::Counterexample => "counterexample",
            Suite::Inequality => "inequality",
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
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidParameter(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// The `(e, p)` pairs of the standard grid.
pub const STANDARD_PAIRS: [(usize, usize); 8] =
    [(2, 0), (3, 0), (2, 2), (3, 3), (3, 2), (2, 3), (4, 3), (5, 2)];

/// Sizes `0..=max_n`; `e_values` drive the `p`-independent suites and
/// `pairs` the `(e, p)` ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub max_n: usize,
    pub e_values: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

impl Grid {
    pub fn standard(max_n: usize) -> Self {
        Self {
            max_n,
            e_values: (2..=6).collect(),
            pairs: STANDARD_PAIRS.to_vec(),
        }
    }

    /// `e_values × p_values`.
    pub fn product(max_n: usize, e_values: &[usize], p_values: &[usize]) -> Self {
        Self {
            max_n,
            e_values: e_values.to_vec(),
            pairs: e_values
                .iter()
                .flat_map(|&e| p_values.iter().map(move |&p| (e, p)))
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        for &e in self.e_values.iter().chain(self.pairs.iter().map(|(e, _)| e)) {
            crate::error::check_e(e)?;
        }
        for &(_, p) in &self.pairs {
            crate::error::check_p(p)?;
        }
        Ok(())
    }
}

/// One grid point of a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    /// Number of objects examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CaseResult {
    pub(crate) fn new(case: String) -> Self {
        Self {
            case,
            passed: true,
            checked: 0,
            counterexample: None,
        }
    }

    /// Records a failure, keeping only the first payload.
    pub(crate) fn fail(&mut self, payload: Value) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(payload);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub grid: Grid,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Value>,
    /// Non-gating cases, reported but ignored by `passed`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exploratory: Vec<CaseResult>,
    /// Grid points refused by a hypothesis gate.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl SuiteReport {
    pub fn checked(&self) -> usize {
        self.cases.iter().map(|c| c.checked).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

type CaseFn = Box<dyn Fn() -> Result<CaseResult> + Send + Sync>;

pub(crate) struct Plan {
    gating: Vec<CaseFn>,
    exploratory: Vec<CaseFn>,
    skipped: Vec<String>,
}

impl Plan {
    pub(crate) fn new() -> Self {
        Self {
            gating: Vec::new(),
            exploratory: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub(crate) fn case(&mut self, f: impl Fn() -> Result<CaseResult> + Send + Sync + 'static) {
        self.gating.push(Box::new(f));
    }

    pub(crate) fn exploratory(&mut self, f: impl Fn() -> Result<CaseResult> + Send + Sync + 'static) {
        self.exploratory.push(Box::new(f));
    }

    pub(crate) fn skip(&mut self, why: String) {
        self.skipped.push(why);
    }
}

fn run_all(cases: &[CaseFn]) -> Result<Vec<CaseResult>> {
    cases.par_iter().map(|f| f()).collect()
}

/// Runs a suite on the current rayon pool. Cases are evaluated in parallel
/// and reported in grid order.
pub fn run_suite(suite: Suite, grid: &Grid) -> Result<SuiteReport> {
    grid.validate()?;
    let plan = suites::plan(suite, grid);
    let cases = run_all(&plan.gating)?;
    let exploratory = run_all(&plan.exploratory)?;
    let first_counterexample = cases
        .iter()
        .find_map(|c| c.counterexample.as_ref().map(|p| serde_json::json!({"case": c.case, "payload": p})));
    Ok(SuiteReport {
        suite,
        grid: grid.clone(),
        passed: cases.iter().all(|c| c.passed),
        cases,
        first_counterexample,
        exploratory,
        skipped: plan.skipped,
    })
}

pub use suites::{
    adjustment_case, bar_invariance_case, bijection_case, characters_case, decomp_case, degree_case,
    inequality_case, reg_prime_case, section5_case,
};
