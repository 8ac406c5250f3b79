use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    AtMost,
    GreaterThan,
    Within,
}

/// One metric compared against its tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub check: String,
    pub metric: String,
    pub value: f64,
    pub comparison: Comparison,
    /// bound for `AtMost`/`GreaterThan`; half-width for `Within`
    pub tolerance: f64,
    /// target for `Within`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    pub pass: bool,
    /// not counted towards the exit status
    pub informational: bool,
    pub runtime_s: f64,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Row {
    fn build(check: &str, metric: &str, value: f64, comparison: Comparison, tolerance: f64, target: Option<f64>) -> Self {
        let pass = value.is_finite()
            && match comparison {
                Comparison::AtMost => value <= tolerance,
                Comparison::GreaterThan => value > tolerance,
                Comparison::Within => (value - target.unwrap_or(0.0)).abs() <= tolerance,
            };
        Row {
            check: check.into(),
            metric: metric.into(),
            value,
            comparison,
            tolerance,
            target,
            pass,
            informational: false,
            runtime_s: 0.0,
            detail: String::new(),
        }
    }

    pub fn at_most(check: &str, metric: &str, value: f64, tolerance: f64) -> Self {
        Self::build(check, metric, value, Comparison::AtMost, tolerance, None)
    }

    pub fn greater_than(check: &str, metric: &str, value: f64, bound: f64) -> Self {
        Self::build(check, metric, value, Comparison::GreaterThan, bound, None)
    }

    pub fn within(check: &str, metric: &str, value: f64, target: f64, tolerance: f64) -> Self {
        Self::build(check, metric, value, Comparison::Within, tolerance, Some(target))
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn runtime(mut self, seconds: f64) -> Self {
        self.runtime_s = seconds;
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn line(&self) -> String {
        let status = match (self.informational, self.pass) {
            (true, _) => "INFO",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        };
        let cmp = match self.comparison {
            Comparison::AtMost => format!("<= {:e}", self.tolerance),
            Comparison::GreaterThan => format!("> {:e}", self.tolerance),
            Comparison::Within => format!("= {} +- {:e}", self.target.unwrap_or(0.0), self.tolerance),
        };
        let mut s = format!("{status} [{}] {} = {:.6e} ({cmp})", self.check, self.metric, self.value);
        if self.runtime_s > 0.0 {
            let _ = write!(s, " in {:.1} s", self.runtime_s);
        }
        if !self.detail.is_empty() {
            let _ = write!(s, " -- {}", self.detail);
        }
        s
    }
}

/// All rows of one scenario run.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub scenario: String,
    pub rows: Vec<Row>,
    pub runtime_s: f64,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.informational || r.pass)
    }

    pub fn summary(&self) -> String {
        let mut s = format!("scenario {} ({:.1} s)\n", self.scenario, self.runtime_s);
        for r in &self.rows {
            let _ = writeln!(s, "  {}", r.line());
        }
        let _ = writeln!(s, "  => {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}
