//! Seeded verification campaigns.
//!
//! Each suite draws its random instances from [`crate::sampling`], measures
//! the worst case of every property it checks and compares it with a named
//! tolerance. Tolerances can be overridden by name.

mod action;
mod conservation;
mod cycle;
mod geometry;
mod lambert;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::record::Record;

pub use action::action_suite;
pub use conservation::conservation_suite;
pub use cycle::cycle_suite;
pub use geometry::geometry_suite;
pub use lambert::lambert_suite;

/// Named tolerances with their defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    entries: Vec<(&'static str, f64)>,
}

const DEFAULTS: [(&str, f64); 15] = [
    ("tof_invariance", 1e-9),
    ("geometric_invariance", 1e-12),
    ("sine_scaling", 1e-10),
    ("oracle_position", 1e-8),
    ("oracle_integrator", 1e-13),
    ("euler", 1e-12),
    ("lambert_residual", 1e-10),
    ("gauss_residual", 1e-12),
    ("hmin_location", 1e-12),
    ("hamilton_residual", 1e-6),
    ("action_constancy", 1e-10),
    ("action_identity", 1e-12),
    ("progression", 1e-12),
    ("bisector", 1e-10),
    ("closure", 1e-10),
];

const RECTILINEAR: (&str, f64) = ("rectilinear", 1e-12);

impl Default for Tolerances {
    fn default() -> Self {
        let mut entries: Vec<(&'static str, f64)> = DEFAULTS.to_vec();
        entries.push(RECTILINEAR);
        Tolerances { entries }
    }
}

impl Tolerances {
    pub fn get(&self, name: &str) -> f64 {
        self.entries
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("unknown tolerance {name}"))
    }

    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance {name} must be positive")));
        }
        match self.entries.iter_mut().find(|(k, _)| *k == name) {
            Some(e) => {
                e.1 = value;
                Ok(())
            }
            None => Err(Error::InvalidInput(format!(
                "unknown tolerance {name}; known: {}",
                self.names().join(", ")
            ))),
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(k, _)| *k).collect()
    }

    /// Applies a `NAME=VALUE` override.
    pub fn apply(&mut self, setting: &str) -> Result<()> {
        let (k, v) = setting
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected NAME=VALUE, got {setting}")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad tolerance value in {setting}")))?;
        self.set(k.trim(), v)
    }
}

/// One checked property: the worst observed value against its limit.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub observed: f64,
    pub limit: f64,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    /// Passes when `observed < limit`.
    pub fn below(name: &str, observed: f64, limit: f64) -> Check {
        Check {
            name: name.into(),
            observed,
            limit,
            passed: observed < limit,
            detail: String::new(),
        }
    }

    /// Passes when `flag` holds; `observed` counts the failures.
    pub fn holds(name: &str, failures: usize, detail: String) -> Check {
        Check {
            name: name.into(),
            observed: failures as f64,
            limit: 0.0,
            passed: failures == 0,
            detail,
        }
    }

    pub fn with_detail(mut self, detail: String) -> Check {
        self.detail = detail;
        self
    }

    pub fn to_record(&self, suite: &str) -> Record {
        Record::new()
            .with("suite", suite)
            .with("check", self.name.as_str())
            .with("observed", self.observed)
            .with("limit", self.limit)
            .with("passed", self.passed)
            .with("detail", self.detail.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Extra per-trial rows (convergence tables and the like).
    pub table: Vec<Record>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn records(&self) -> Vec<Record> {
        let name = self.suite.to_string();
        let mut out: Vec<Record> = self.checks.iter().map(|c| c.to_record(&name)).collect();
        out.extend(self.table.iter().cloned());
        out.push(
            Record::new()
                .with("suite", name.as_str())
                .with("trials", self.trials)
                .with("seed", self.seed.to_string())
                .with("passed", self.passed()),
        );
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Conservation,
    Cycle,
    Lambert,
    Action,
    Geometry,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Conservation,
        Suite::Cycle,
        Suite::Lambert,
        Suite::Action,
        Suite::Geometry,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Conservation => "conservation",
            Suite::Cycle => "cycle",
            Suite::Lambert => "lambert",
            Suite::Action => "action",
            Suite::Geometry => "geometry",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s}")))
    }
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    match suite {
        Suite::Conservation => conservation_suite(trials, seed, tol),
        Suite::Cycle => cycle_suite(trials, seed, tol),
        Suite::Lambert => lambert_suite(trials, seed, tol),
        Suite::Action => action_suite(trials, seed, tol),
        Suite::Geometry => geometry_suite(trials, seed, tol),
    }
}

/// Failures of individual trials that kept a check from being evaluated.
#[derive(Debug, Default)]
pub(crate) struct TrialErrors {
    count: usize,
    first: Option<String>,
}

impl TrialErrors {
    pub(crate) fn record(&mut self, trial: usize, what: &str, e: impl fmt::Display) {
        self.count += 1;
        if self.first.is_none() {
            self.first = Some(format!("trial {trial}, {what}: {e}"));
        }
    }

    pub(crate) fn check(self) -> Check {
        Check::holds("trial_errors", self.count, self.first.unwrap_or_default())
    }
}

/// Largest of a running maximum and a new value, propagating NaN.
pub(crate) fn worst(acc: &mut f64, x: f64) {
    if x.is_nan() || x > *acc {
        *acc = x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.apply("closure=1e-9").unwrap();
        assert_eq!(t.get("closure"), 1e-9);
        assert!(t.apply("nope=1").is_err());
        assert!(t.apply("closure").is_err());
        assert!(t.apply("closure=-1").is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }
}
