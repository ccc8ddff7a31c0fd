use serde::{Deserialize, Serialize};

/// Relative pass tolerance: a verified inequality `lhs <= rhs` is accepted when
/// the slack `rhs - lhs` is no more negative than `-REL_TOL * |rhs|`.
pub const REL_TOL: f64 = 1e-12;

/// One verified inequality: parameters, both sides, slack and a pass flag.
///
/// `condition_met` records whether the hypothesis of the underlying statement
/// holds for these parameters; reports with `condition_met = false` are
/// informational and never gate a verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub condition_met: bool,
    pub pass: bool,
}

impl BoundReport {
    /// Report for the inequality `lhs <= rhs`.
    pub fn check(name: impl Into<String>, params: impl Into<String>, lhs: f64, rhs: f64, condition_met: bool) -> Self {
        let slack = rhs - lhs;
        let pass = lhs.is_finite() && rhs.is_finite() && slack >= -REL_TOL * rhs.abs();
        BoundReport {
            name: name.into(),
            params: params.into(),
            lhs,
            rhs,
            slack,
            condition_met,
            pass,
        }
    }

    /// Report for `|lhs - rhs| <= tol`, stored with the deviation as slack.
    pub fn check_close(name: impl Into<String>, params: impl Into<String>, lhs: f64, rhs: f64, tol: f64, condition_met: bool) -> Self {
        let dev = (lhs - rhs).abs();
        BoundReport {
            name: name.into(),
            params: params.into(),
            lhs,
            rhs,
            slack: tol - dev,
            condition_met,
            pass: lhs.is_finite() && rhs.is_finite() && dev <= tol,
        }
    }

    /// True when this report should gate a verification run and failed.
    pub fn gating_failure(&self) -> bool {
        self.condition_met && !self.pass
    }
}

/// Summarize a report list: (passed, failed, skipped).
pub fn tally(reports: &[BoundReport]) -> (usize, usize, usize) {
    let mut pass = 0;
    let mut fail = 0;
    let mut skip = 0;
    for r in reports {
        if !r.condition_met {
            skip += 1;
        } else if r.pass {
            pass += 1;
        } else {
            fail += 1;
        }
    }
    (pass, fail, skip)
}
