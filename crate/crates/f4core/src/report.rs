//! Check results shared by all verification suites.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    ExpectedException,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedException => "expected-exception",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_exception: usize,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { suite: suite.to_string(), checks: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), status, detail: detail.into() });
    }

    /// Pass if `ok`, fail otherwise.
    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(id, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ExpectedException => s.expected_exception += 1,
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
