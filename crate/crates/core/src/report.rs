use std::fmt;

/// Outcome of an axiom check: either a pass or a list of named failures.
///
/// Checks never abort on the first violation; they collect every failing
/// axiom instance so that a bad multiplication table can be diagnosed in
/// one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// What was being checked, e.g. `"algebra axioms"`.
    pub context: String,
    /// One line per violated axiom instance; empty means pass.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(context: impl Into<String>) -> Self {
        CheckReport {
            context: context.into(),
            failures: Vec::new(),
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Merge another report into this one, prefixing its failures.
    pub fn absorb(&mut self, other: CheckReport) {
        for f in other.failures {
            self.failures.push(format!("{}: {}", other.context, f));
        }
    }

    pub fn into_result(self) -> Result<(), crate::Error> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(crate::Error::ValidationFailed {
                context: self.context.clone(),
                details: self.failures.join("\n"),
            })
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            write!(f, "{}: pass", self.context)
        } else {
            writeln!(f, "{}: {} failure(s)", self.context, self.failures.len())?;
            for failure in &self.failures {
                writeln!(f, "  - {}", failure)?;
            }
            Ok(())
        }
    }
}
