//! Check records shared by every verification routine.

use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity instance. A failure always carries a witness.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub anchor: &'static str,
    pub status: Status,
    pub witness: Option<String>,
    /// A measured quantity reported alongside the outcome.
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl Check {
    /// Runs `f` and records its outcome; `Err` carries the witness.
    pub fn run(
        id: impl Into<String>,
        anchor: &'static str,
        f: impl FnOnce() -> Result<(), String>,
    ) -> Check {
        let start = Instant::now();
        let res = f();
        let elapsed = start.elapsed();
        let (status, witness) = match res {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Check {
            id: id.into(),
            anchor,
            status,
            witness,
            note: None,
            elapsed,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Fails with the given witness unless `cond` holds.
pub fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed())
}
