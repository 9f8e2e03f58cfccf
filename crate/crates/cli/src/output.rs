//! The report printed by every command, as JSON or text.

use serde::Serialize;

use hcc_core::cup::BbCocycle;
use hcc_core::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeGroup {
    pub dim: usize,
    pub representatives: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyRow {
    pub degree: usize,
    pub cochains: usize,
    pub hochschild: DegreeGroup,
    pub cyclic: DegreeGroup,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyTable {
    pub construction: String,
    pub max_degree: usize,
    pub degrees: Vec<CohomologyRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorValue {
    pub tensor: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CupSummary {
    pub variant: String,
    pub left: String,
    pub right: String,
    pub p: usize,
    pub q: usize,
    pub degree: usize,
    /// Basis of the coefficient space: `1` for scalar cups, `L(N, M)` otherwise.
    pub values: Vec<String>,
    pub cocycle: BbCocycle,
    pub completion: BbCocycle,
    /// Nonzero entries of the top component by basis tensor.
    pub top_values: Vec<TensorValue>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Output {
    pub command: String,
    pub status: Status,
    pub cap: usize,
    pub sections: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cup: Option<CupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Output {
    pub fn new(command: &str, cap: usize, sections: Vec<Report>) -> Self {
        let status = if sections.iter().all(Report::all_passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Output {
            command: command.to_string(),
            status,
            cap,
            sections,
            cohomology: None,
            cup: None,
            error: None,
        }
    }

    pub fn error(command: &str, cap: usize, message: String) -> Self {
        Output {
            command: command.to_string(),
            status: Status::Error,
            cap,
            sections: Vec::new(),
            cohomology: None,
            cup: None,
            error: Some(message),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let mut out = format!("{}: {status} (cap {})\n", self.command, self.cap);
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        for r in &self.sections {
            out.push_str(&r.render_text());
        }
        if let Some(t) = &self.cohomology {
            out.push_str(&format!("cohomology of {}\n", t.construction));
            out.push_str("  degree  cochains  HH  HC\n");
            for row in &t.degrees {
                out.push_str(&format!(
                    "  {:>6}  {:>8}  {:>2}  {:>2}\n",
                    row.degree, row.cochains, row.hochschild.dim, row.cyclic.dim
                ));
            }
        }
        if let Some(c) = &self.cup {
            out.push_str(&format!(
                "cup {} of {} (degree {}) and {} (degree {}) in degree {}\n",
                c.variant,
                c.left,
                if c.variant.starts_with("aa") { c.q } else { c.p },
                c.right,
                if c.variant.starts_with("aa") { c.p } else { c.q },
                c.degree
            ));
            for (k, y) in c.cocycle.components.iter().enumerate() {
                let text: Vec<String> = y.iter().map(hcc_core::linear::rational::format_rational).collect();
                out.push_str(&format!("  y_{k} (degree {}): [{}]\n", c.degree - 2 * k, text.join(", ")));
            }
            for tv in &c.top_values {
                out.push_str(&format!("  {} -> {}\n", tv.tensor, tv.value));
            }
        }
        out
    }
}
