//! Pass/fail bookkeeping shared by the verification suites.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub input: String,
    pub pass: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
}

/// Named checks, each aggregated over many cases and keeping the first counterexample.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    fn entry(&mut self, check: &str) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.check == check) {
            return &mut self.checks[i];
        }
        self.checks.push(Check {
            check: check.to_string(),
            input: String::new(),
            pass: true,
            cases: 0,
            lhs: None,
            rhs: None,
        });
        self.checks.last_mut().unwrap()
    }

    /// Set the input summary shown while a check passes.
    pub fn describe(&mut self, check: &str, input: impl Into<String>) {
        let e = self.entry(check);
        if e.pass {
            e.input = input.into();
        }
    }

    pub fn expect_eq<T: PartialEq + Display>(
        &mut self,
        check: &str,
        input: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let ok = lhs == rhs;
        let e = self.entry(check);
        e.cases += 1;
        if !ok && e.pass {
            e.pass = false;
            e.input = input();
            e.lhs = Some(lhs.to_string());
            e.rhs = Some(rhs.to_string());
        }
        ok
    }

    pub fn expect(&mut self, check: &str, input: impl FnOnce() -> String, ok: bool) -> bool {
        let e = self.entry(check);
        e.cases += 1;
        if !ok && e.pass {
            e.pass = false;
            e.input = input();
        }
        ok
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            let name = c.check.clone();
            let e = self.entry(&name);
            e.cases += c.cases;
            if e.pass && !c.pass {
                *e = Check { cases: e.cases, ..c };
            } else if e.input.is_empty() {
                e.input = c.input;
            }
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, check: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn sorted(mut self) -> Report {
        self.checks.sort_by(|a, b| a.check.cmp(&b.check));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_first_counterexample() {
        let mut r = Report::new();
        r.describe("eq", "all");
        assert!(r.expect_eq("eq", || "a".into(), &1, &1));
        assert!(!r.expect_eq("eq", || "b".into(), &1, &2));
        assert!(!r.expect_eq("eq", || "c".into(), &3, &4));
        let c = r.get("eq").unwrap();
        assert!(!c.pass);
        assert_eq!(c.cases, 3);
        assert_eq!(c.input, "b");
        assert_eq!(c.rhs.as_deref(), Some("2"));
        assert!(!r.pass());
    }

    #[test]
    fn merge_and_sort() {
        let mut a = Report::new();
        a.expect("z", String::new, true);
        let mut b = Report::new();
        b.expect("a", || "x".into(), false);
        b.expect("z", String::new, true);
        a.merge(b);
        let a = a.sorted();
        assert_eq!(a.checks[0].check, "a");
        assert_eq!(a.get("z").unwrap().cases, 2);
        assert_eq!(a.first_failure().unwrap().input, "x");
    }
}
