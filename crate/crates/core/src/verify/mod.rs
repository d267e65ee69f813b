//! The verification suite: every acceptance group as a list of checks, and
//! the table linking published equations to check ids.

mod checks;
mod expected;
mod report;
mod trace;

use std::str::FromStr;

pub use checks::{lorentz_reps, SuiteOptions};
pub use report::{fmt17, Check, Status, VerificationReport};
pub use trace::{traceability_csv, traceability_json, Coverage, TraceRow, TRACEABILITY};

use crate::config::RunConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Recurrence,
    Quantization,
    Spectral,
    Norms,
    Generating,
    Reconstruction,
    SecondSolution,
    Lorentz,
    Scan,
    All,
}

impl Suite {
    pub const GROUPS: [Suite; 10] = [
        Suite::Tables,
        Suite::Recurrence,
        Suite::Quantization,
        Suite::Spectral,
        Suite::Norms,
        Suite::Generating,
        Suite::Reconstruction,
        Suite::SecondSolution,
        Suite::Lorentz,
        Suite::Scan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Recurrence => "recurrence",
            Suite::Quantization => "quantization",
            Suite::Spectral => "spectral",
            Suite::Norms => "norms",
            Suite::Generating => "generating",
            Suite::Reconstruction => "reconstruction",
            Suite::SecondSolution => "second-solution",
            Suite::Lorentz => "lorentz",
            Suite::Scan => "scan",
            Suite::All => "all",
        }
    }

    /// The acceptance criterion a group implements.
    pub fn criterion(self) -> Option<u8> {
        match self {
            Suite::Tables => Some(1),
            Suite::Recurrence => Some(2),
            Suite::Quantization => Some(3),
            Suite::Norms => Some(4),
            Suite::Generating => Some(5),
            Suite::Reconstruction => Some(6),
            Suite::SecondSolution => Some(7),
            Suite::Lorentz => Some(8),
            Suite::Scan => Some(9),
            Suite::Spectral | Suite::All => None,
        }
    }

    fn run_group(self, opts: &SuiteOptions) -> Vec<Check> {
        match self {
            Suite::Tables => checks::exact_tables(),
            Suite::Recurrence => checks::recurrence(),
            Suite::Quantization => checks::quantization(opts),
            Suite::Spectral => checks::spectral_consistency(),
            Suite::Norms => checks::norms(opts),
            Suite::Generating => checks::generating(),
            Suite::Reconstruction => checks::reconstruction(opts),
            Suite::SecondSolution => checks::second_solutions(),
            Suite::Lorentz => checks::lorentz(),
            Suite::Scan => checks::scan(),
            Suite::All => Vec::new(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(k) = s.parse::<u8>() {
            return Suite::GROUPS
                .into_iter()
                .find(|g| g.criterion() == Some(k))
                .ok_or_else(|| Error::Parse(format!("no criterion {k}")));
        }
        Suite::GROUPS
            .into_iter()
            .chain([Suite::All])
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl From<&RunConfig> for SuiteOptions {
    fn from(cfg: &RunConfig) -> Self {
        SuiteOptions::capped(cfg.quadrature, cfg.quad_check_tol, cfg.extended)
    }
}

/// Run `suite`. The groups of `Suite::All` run on separate threads; the
/// report lists them in the order of [`Suite::GROUPS`].
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> VerificationReport {
    let groups: Vec<Suite> = if suite == Suite::All { Suite::GROUPS.to_vec() } else { vec![suite] };
    let results: Vec<Vec<Check>> = std::thread::scope(|s| {
        let handles: Vec<_> = groups.iter().map(|g| s.spawn(move || g.run_group(opts))).collect();
        handles
            .into_iter()
            .zip(&groups)
            .map(|(h, g)| {
                h.join().unwrap_or_else(|_| vec![Check::errored(&format!("{}-panicked", g.name()), "derived: suite", g.criterion(), "panic")])
            })
            .collect()
    });
    VerificationReport { checks: results.into_iter().flatten().collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for g in Suite::GROUPS {
            assert_eq!(g.name().parse::<Suite>().unwrap(), g);
        }
        assert_eq!("3".parse::<Suite>().unwrap(), Suite::Quantization);
        assert!("10".parse::<Suite>().is_err());
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_threshold_flips_the_report() {
        let mut r = VerificationReport::default();
        r.checks.push(Check::at_most("x", "(1)", Some(1), 0.5, 1.0, ""));
        assert!(r.passed());
        r.checks.push(Check::at_most("y", "(1)", Some(1), 0.5, 0.1, ""));
        assert!(!r.passed());
        assert_eq!(r.criterion_passed(1), Some(false));
        r.checks.pop();
        r.checks.push(Check::at_most("nan", "(1)", Some(1), f64::NAN, 1.0, ""));
        assert!(!r.passed());
    }

    #[test]
    fn traceability_ids_exist() {
        let opts = SuiteOptions::default();
        let ids: std::collections::HashSet<String> = [
            Suite::Tables,
            Suite::Recurrence,
            Suite::Spectral,
            Suite::Generating,
            Suite::SecondSolution,
            Suite::Lorentz,
        ]
        .into_iter()
        .flat_map(|g| run_suite(g, &opts).checks)
        .map(|c| c.id)
        .collect();
        // the quadrature-heavy groups are listed by name to keep this test fast
        let slow = [
            "eigen-quantization",
            "eigen-perturbed",
            "norm-a",
            "orthogonality-a",
            "norm-a-n0",
            "norm-a-printed-detector",
            "norm-b",
            "orthogonality-b",
            "coeff-c0",
            "reconstruction-drop-a",
            "reconstruction-monotone-a",
            "reconstruction-drop-b",
            "reconstruction-monotone-b",
            "dual-route-a",
            "dual-route-a-printed-detector",
            "dual-route-b",
            "dual-route-b-printed-detector",
            "scan-recovery",
            "scan-residual",
        ];
        for row in TRACEABILITY {
            if let Coverage::Checked(list) = row.coverage {
                assert!(!list.is_empty(), "row {} has no checks", row.equation);
                for id in list {
                    assert!(ids.contains(*id) || slow.contains(id), "row {} names unknown check {id}", row.equation);
                }
            }
        }
    }

    #[test]
    fn every_in_scope_equation_has_a_row() {
        let mut wanted: Vec<String> = vec!["3".into()];
        wanted.extend((6..=59).map(|k| k.to_string()));
        wanted.extend(["A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4", "B5"].map(String::from));
        for eq in wanted {
            assert!(TRACEABILITY.iter().any(|r| r.equation == eq), "equation {eq} missing");
        }
    }
}
