use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// A computed value with nothing to compare against.
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub values: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraInfo {
    pub source: String,
    pub scheme: String,
    pub lambda: String,
    pub omega: String,
    pub gamma: String,
    /// Constant term first.
    pub f: Vec<String>,
    pub weights: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraInfo>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, algebra: Option<AlgebraInfo>) -> Report {
        Report { schema: 1, command: command.to_string(), algebra, checks: Vec::new(), notes: Vec::new(), ok: true }
    }

    pub fn push(&mut self, name: &str, status: Status, detail: impl Into<String>, values: Value) {
        if status == Status::Fail {
            self.ok = false;
        }
        self.checks.push(Check { name: name.to_string(), status, detail: detail.into(), values });
    }

    pub fn check(&mut self, name: &str, holds: bool, detail: impl Into<String>, values: Value) {
        self.push(name, if holds { Status::Pass } else { Status::Fail }, detail, values);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("gdu {}\n", self.command);
        if let Some(a) = &self.algebra {
            out.push_str(&format!(
                "algebra  {} [{}]  λ={} ω={} γ={} f=[{}]\n",
                a.source,
                a.scheme,
                a.lambda,
                a.omega,
                a.gamma,
                a.f.join(", ")
            ));
        }
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            out.push_str(&format!("{}{}  {}  {}\n", c.name, " ".repeat(pad), c.status.label(), c.detail));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(if self.ok { "result: all checks passed\n" } else { "result: some checks failed\n" });
        out
    }

    pub fn render_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
