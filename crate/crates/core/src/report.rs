//! Structured pass/fail reporting for identity checks, plus the shared
//! symbolic/numeric substitution plumbing.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::GradedMatrix;
use crate::scalar::{sqrt_rational, Laurent, Rational};

/// How the scalars of a check are treated: exact symbolic Laurent arithmetic,
/// or exact rational arithmetic after substituting a numeric `q`.
#[derive(Clone, PartialEq, Debug)]
pub enum Mode {
    Symbolic,
    NumericQ(Rational),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symbolic => write!(f, "symbolic"),
            Mode::NumericQ(q) => write!(f, "numeric q={q}"),
        }
    }
}

/// Where scalars get substituted for a given run: nowhere (symbolic), at a
/// rational `s`, or at a rational `q` when only integer powers of `q` occur.
#[derive(Clone, Debug, Default)]
pub struct SubstPoint {
    pub s: Option<Rational>,
    pub q: Option<Rational>,
}

impl SubstPoint {
    pub fn symbolic() -> Self {
        SubstPoint::default()
    }

    pub fn scalar(&self, v: &Laurent) -> Result<Laurent, Error> {
        match (&self.s, &self.q) {
            (Some(s), _) => Ok(Laurent::from_rational(v.eval_s(s)?)),
            (None, Some(q)) => Ok(Laurent::from_rational(v.eval_q(q)?)),
            (None, None) => Ok(v.clone()),
        }
    }

    pub fn matrix(&self, m: &GradedMatrix) -> Result<GradedMatrix, Error> {
        match (&self.s, &self.q) {
            (Some(s), _) => m.eval_s(s),
            (None, Some(q)) => m.eval_q(q),
            (None, None) => Ok(m.clone()),
        }
    }
}

/// Resolves a mode into a substitution point.
///
/// Checks that involve half powers of `q` ask for `needs_s`; in that case the
/// numeric value must be a perfect rational square. Integer-power checks
/// substitute `q` directly and accept any rational outside `{0, 1, -1}`.
pub fn resolve_mode(mode: &Mode, needs_s: bool) -> Result<SubstPoint, Error> {
    match mode {
        Mode::Symbolic => Ok(SubstPoint::symbolic()),
        Mode::NumericQ(q) => {
            if q.is_zero() || q.is_one() || (-q).is_one() {
                return Err(Error::DegenerateQ(q.clone()));
            }
            if needs_s {
                let s = sqrt_rational(q).ok_or_else(|| Error::QNotSquare(q.clone()))?;
                Ok(SubstPoint {
                    s: Some(s),
                    q: None,
                })
            } else {
                Ok(SubstPoint {
                    s: None,
                    q: Some(q.clone()),
                })
            }
        }
    }
}

/// Location and value of the first nonzero residual entry of a failed identity.
#[derive(Clone, Debug)]
pub struct Failure {
    pub identity: String,
    pub row: usize,
    pub col: usize,
    pub residual: Laurent,
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub mode: Mode,
    /// False when the check has nothing to say for this `n` (reported as
    /// "not applicable" and not counted as a failure).
    pub applicable: bool,
    /// Identity instances actually verified.
    pub checked: usize,
    /// Instances with empty index ranges, reported but not verified.
    pub skipped: usize,
    pub failure: Option<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if !self.applicable {
            "not applicable".to_string()
        } else if self.passed() {
            "pass".to_string()
        } else {
            "FAIL".to_string()
        };
        write!(
            f,
            "check={:<16} n={:<2} mode={:<14} status={:<14} checked={:<4} skipped={:<3} time={:.3}s",
            self.check,
            self.n,
            self.mode.to_string(),
            status,
            self.checked,
            self.skipped,
            self.elapsed.as_secs_f64(),
        )?;
        if let Some(fail) = &self.failure {
            write!(
                f,
                "\n  first failure: {} at ({}, {}) residual {}",
                fail.identity, fail.row, fail.col, fail.residual
            )?;
        }
        Ok(())
    }
}

/// Accumulator for a check in progress. Records the first failing identity
/// with the lexicographically first nonzero residual entry.
pub struct CheckRun {
    check: String,
    n: usize,
    mode: Mode,
    applicable: bool,
    checked: usize,
    skipped: usize,
    failure: Option<Failure>,
    start: Instant,
}

impl CheckRun {
    pub fn new(check: &str, n: usize, mode: Mode) -> Self {
        CheckRun {
            check: check.to_string(),
            n,
            mode,
            applicable: true,
            checked: 0,
            skipped: 0,
            failure: None,
            start: Instant::now(),
        }
    }

    pub fn not_applicable(mut self) -> VerificationReport {
        self.applicable = false;
        self.finish()
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Asserts that `residual` is the zero matrix.
    pub fn expect_zero(&mut self, identity: &str, residual: &GradedMatrix) {
        self.checked += 1;
        if self.failure.is_none() {
            if let Some((row, col, v)) = residual.first_entry() {
                self.failure = Some(Failure {
                    identity: identity.to_string(),
                    row,
                    col,
                    residual: v.clone(),
                });
            }
        }
    }

    /// Asserts that `lhs == rhs` entrywise.
    pub fn expect_eq(&mut self, identity: &str, lhs: &GradedMatrix, rhs: &GradedMatrix) {
        self.expect_zero(identity, &lhs.sub(rhs));
    }

    /// Records a failure that is not tied to a residual matrix.
    pub fn fail(&mut self, identity: &str) {
        self.checked += 1;
        if self.failure.is_none() {
            self.failure = Some(Failure {
                identity: identity.to_string(),
                row: 0,
                col: 0,
                residual: Laurent::zero(),
            });
        }
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check,
            n: self.n,
            mode: self.mode,
            applicable: self.applicable,
            checked: self.checked,
            skipped: self.skipped,
            failure: self.failure,
            elapsed: self.start.elapsed(),
        }
    }
}
