//! Machine-readable reports. The JSON layout is versioned and deterministic:
//! wall-clock timings are printed on the text side only when requested, and
//! never enter the JSON, so reports are byte-identical across reruns with
//! identical inputs.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct GroebnerStats {
    pub basis_size: usize,
    pub max_degree: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerStats>,
    #[serde(skip)]
    pub millis: u128,
}

impl CheckResult {
    pub fn new(id: &str, status: Status) -> Self {
        CheckResult {
            id: id.to_string(),
            status,
            detail: None,
            witness: None,
            counterexample: None,
            groebner: None,
            millis: 0,
        }
    }

    pub fn from_verdict(id: &str, v: &hopfgen::form::Verdict) -> Self {
        use hopfgen::form::Verdict;
        match v {
            Verdict::Holds => CheckResult::new(id, Status::Pass),
            Verdict::Fails { location, lhs, rhs } => {
                let mut r = CheckResult::new(id, Status::Fail);
                r.counterexample = Some(Counterexample {
                    location: location.clone(),
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                });
                r
            }
            Verdict::Skipped(reason) => {
                let mut r = CheckResult::new(id, Status::Skipped);
                r.detail = Some(reason.clone());
                r
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<InputDigest>,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub inputs: Inputs,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(inputs: Inputs, budget_pairs: Option<usize>, degree_bound: Option<u32>) -> Self {
        Report {
            schema: 1,
            inputs,
            budget_pairs,
            degree_bound,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, result: CheckResult) {
        match result.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
            Status::Inconclusive => self.summary.inconclusive += 1,
        }
        self.checks.push(result);
    }

    pub fn render_text(&self, with_timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass        ",
                Status::Fail => "FAIL        ",
                Status::Skipped => "skipped     ",
                Status::Inconclusive => "inconclusive",
            };
            out.push_str(status);
            out.push_str("  ");
            out.push_str(&c.id);
            if with_timings {
                out.push_str(&format!("  ({} ms)", c.millis));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  [{d}]"));
            }
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!(
                    "\n              at {}: {} != {}",
                    ce.location, ce.lhs, ce.rhs
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} skipped, {} inconclusive\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.inconclusive
        ));
        out
    }
}
