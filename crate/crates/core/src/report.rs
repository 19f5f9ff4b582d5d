//! Named pass/fail checks shared by the verification suites.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, detail: String::new() }
    }

    pub fn with(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    /// Expected and actual rendered as strings.
    pub fn eq<T: PartialEq + fmt::Display>(name: impl Into<String>, got: &T, want: &T) -> Self {
        let pass = got == want;
        let detail = if pass { got.to_string() } else { format!("got {got}, want {want}") };
        Check { name: name.into(), pass, detail }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    !checks.is_empty() && checks.iter().all(|c| c.pass)
}

pub fn failures(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| !c.pass).collect()
}
