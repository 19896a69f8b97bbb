use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    CapacityExceeded,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        use crate::error::exit;
        match self {
            Verdict::Pass => exit::PASS,
            Verdict::Fail => exit::FAIL,
            Verdict::CapacityExceeded => exit::CAPACITY,
        }
    }

    /// Failures dominate capacity misses, which dominate passes.
    pub fn combine(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::CapacityExceeded, _) | (_, Verdict::CapacityExceeded) => {
                Verdict::CapacityExceeded
            }
            _ => Verdict::Pass,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::CapacityExceeded => "capacity_exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub ell: u32,
    pub mode: String,
    pub weight: Option<Vec<i64>>,
    pub bound: Option<i64>,
    pub format: Format,
    pub max_kl_length: u32,
    pub jobs: usize,
    pub module: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheReport {
    /// Columns held after the run.
    pub columns_total: usize,
    /// Columns read from the cache file.
    pub columns_loaded: usize,
    /// Columns computed during this run.
    pub columns_computed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportOutput {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub ell: u32,
    pub mode: String,
    pub module: String,
    pub weight: Vec<i64>,
    pub weight_reduced: Vec<i64>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub conjugator_word: Vec<usize>,
    pub orbit: String,
    pub dimension: usize,
    pub phi_lambda_size: usize,
    #[serde(rename = "conditional_on_LCF")]
    pub conditional_on_lcf: bool,
}

/// Everything checked for one weight of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub weight: Vec<i64>,
    pub verdict: Verdict,
    pub lambda_minus: Option<Vec<i64>>,
    pub w_length: Option<u32>,
    pub a_count: Option<usize>,
    pub s: Option<usize>,
    /// `D_lambda^(s)(zeta)`.
    pub derivative_at_zeta: Option<String>,
    pub closed_form: Option<String>,
    pub psi_multiplicity_d: Option<u32>,
    pub character: Option<String>,
    pub psi_multiplicity_f: Option<u32>,
    pub f_derivative_at_zeta: Option<String>,
    pub borel_bound: Option<usize>,
    pub full_bound: Option<usize>,
    pub error: Option<String>,
}

impl WeightReport {
    pub fn new(weight: Vec<i64>) -> WeightReport {
        WeightReport {
            weight,
            verdict: Verdict::Pass,
            lambda_minus: None,
            w_length: None,
            a_count: None,
            s: None,
            derivative_at_zeta: None,
            closed_form: None,
            psi_multiplicity_d: None,
            character: None,
            psi_multiplicity_f: None,
            f_derivative_at_zeta: None,
            borel_bound: None,
            full_bound: None,
            error: None,
        }
    }

    pub fn mark(&mut self, verdict: Verdict, message: impl Into<String>) {
        self.verdict = self.verdict.combine(verdict);
        if self.error.is_none() {
            self.error = Some(message.into());
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub capacity_exceeded: usize,
    /// False when some weight could not be decided within the KL capacity.
    pub complete: bool,
}

impl Summary {
    pub fn of(reports: &[WeightReport]) -> Summary {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count();
        let capacity_exceeded = count(Verdict::CapacityExceeded);
        Summary {
            total: reports.len(),
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            capacity_exceeded,
            complete: capacity_exceeded == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub summary: Summary,
    pub weights: Vec<WeightReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlOutput {
    pub y_word: Vec<usize>,
    pub w_word: Vec<usize>,
    pub y_length: u32,
    pub w_length: u32,
    pub parabolic: Option<Vec<usize>>,
    pub bruhat_leq: bool,
    /// Coefficients of `q^0, q^1, ...`; absent when the capacity was exceeded.
    pub coefficients: Option<Vec<i64>>,
    pub value_at_one: Option<i64>,
    pub polynomial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outputs {
    Support(SupportOutput),
    Verify(VerifyOutput),
    Kl(KlOutput),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub command: Vec<String>,
    pub subcommand: String,
    pub inputs: Inputs,
    pub outputs: Outputs,
    pub verdict: Verdict,
    pub version: String,
    pub cache: CacheReport,
    pub timing_ms: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_combine() {
        use Verdict::*;
        assert_eq!(Pass.combine(CapacityExceeded), CapacityExceeded);
        assert_eq!(CapacityExceeded.combine(Fail), Fail);
        assert_eq!(Pass.combine(Pass), Pass);
        assert_eq!(
            serde_json::to_string(&CapacityExceeded).unwrap(),
            "\"capacity_exceeded\""
        );
    }

    #[test]
    fn summary_counts() {
        let mut a = WeightReport::new(vec![0]);
        let mut b = WeightReport::new(vec![1]);
        b.mark(Verdict::CapacityExceeded, "cap");
        a.mark(Verdict::Pass, "unused");
        let s = Summary::of(&[a, b]);
        assert_eq!(
            (s.total, s.passed, s.failed, s.capacity_exceeded, s.complete),
            (2, 1, 0, 1, false)
        );
    }
}
