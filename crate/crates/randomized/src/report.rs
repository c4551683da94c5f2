//! Self-describing results for every Monte Carlo check: the full
//! configuration rides along with the data, so a verdict can be
//! recomputed from the report alone, and the same seed always rebuilds
//! the same report.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportConfig {
    pub cars: usize,
    pub spots: usize,
    pub trials: u64,
    pub seed: u64,
}

/// One labeled comparison row: an observed quantity, its reference
/// value, and the discrepancy in standard-error units where that makes
/// sense (zero when it does not).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportRow {
    pub label: String,
    pub observed: f64,
    pub expected: f64,
    pub z: f64,
}

/// A named pass/fail decision with the achieved statistic, so a failed
/// run still reports how far off it was.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SampleReport {
    pub check: String,
    pub config: ReportConfig,
    pub statistics: Vec<(String, f64)>,
    pub table: Vec<ReportRow>,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

impl SampleReport {
    pub fn new(check: &str, config: ReportConfig) -> Self {
        SampleReport {
            check: check.to_string(),
            config,
            statistics: Vec::new(),
            table: Vec::new(),
            verdicts: Vec::new(),
            pass: true,
        }
    }

    pub fn stat(&mut self, name: &str, value: f64) {
        self.statistics.push((name.to_string(), value));
    }

    pub fn row(&mut self, label: String, observed: f64, expected: f64, z: f64) {
        self.table.push(ReportRow { label, observed, expected, z });
    }

    /// Records a verdict and folds it into the overall pass flag.
    pub fn verdict(&mut self, name: &str, statistic: f64, threshold: f64, pass: bool) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            statistic,
            threshold,
            pass,
        });
        self.pass &= pass;
    }

    /// Empirical rows as CSV with a header, for plotting.
    pub fn table_csv(&self) -> String {
        let mut out = String::from("label,observed,expected,z\n");
        for r in &self.table {
            out.push_str(&format!("{},{},{},{}\n", r.label, r.observed, r.expected, r.z));
        }
        out
    }
}
