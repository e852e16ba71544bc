use std::fmt;

use num_rational::BigRational;

use crate::classical::SexticCalibration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

/// Outcome of one evidence check. A failed report names the input that broke
/// it in `counterexample`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvidenceReport {
    pub check: String,
    pub status: Status,
    pub samples: usize,
    pub details: Vec<String>,
    /// Fitted or observed constants, exact.
    pub constants: Vec<(String, BigRational)>,
    pub counterexample: Option<String>,
}

impl EvidenceReport {
    pub(crate) fn new(check: &str) -> EvidenceReport {
        EvidenceReport {
            check: check.into(),
            status: Status::Verified,
            samples: 0,
            details: Vec::new(),
            constants: Vec::new(),
            counterexample: None,
        }
    }

    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    pub(crate) fn constant(&mut self, name: &str, v: BigRational) {
        self.constants.push((name.into(), v));
    }

    /// Marks the report failed; the first failure's input is kept.
    pub(crate) fn fail(&mut self, input: impl Into<String>, why: impl Into<String>) {
        let input = input.into();
        self.details
            .push(format!("FAILED at {input}: {}", why.into()));
        self.status = Status::Failed;
        self.counterexample.get_or_insert(input);
    }

    /// `fail` unless `ok`.
    pub(crate) fn require(&mut self, ok: bool, input: impl Into<String>, why: impl Into<String>) {
        if !ok {
            self.fail(input, why);
        }
    }

    /// Folds another report into this one, prefixing its details.
    pub(crate) fn absorb(&mut self, other: EvidenceReport) {
        self.samples += other.samples;
        for d in other.details {
            self.details.push(format!("{}: {d}", other.check));
        }
        self.constants.extend(other.constants);
        if other.status == Status::Failed {
            self.status = Status::Failed;
            if self.counterexample.is_none() {
                self.counterexample = other.counterexample;
            }
        }
    }
}

impl fmt::Display for EvidenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
        };
        writeln!(f, "{}: {status} ({} samples)", self.check, self.samples)?;
        for (name, v) in &self.constants {
            writeln!(f, "  {name} = {v}")?;
        }
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Frozen sextic constants plus the evidence that they are right.
#[derive(Clone, Debug, PartialEq)]
pub struct CalibrationResult {
    pub calibration: SexticCalibration,
    /// Rank of the degree-10 system; columns beyond it are fixed to zero.
    pub rank: usize,
    pub fit_points: Vec<(BigRational, BigRational)>,
    pub held_out: Vec<(BigRational, BigRational)>,
    /// `(𝐣, 𝐤, 𝐥)` differences from the displayed closed forms at each
    /// held-out point. All zero for an accepted calibration.
    pub residuals: Vec<[BigRational; 3]>,
}

impl CalibrationResult {
    pub fn constants(&self) -> Vec<(String, BigRational)> {
        let c = &self.calibration;
        let mut out = vec![
            ("alpha".to_string(), c.alpha.clone()),
            ("beta".to_string(), c.beta.clone()),
        ];
        out.extend(
            c.gamma
                .iter()
                .enumerate()
                .map(|(k, g)| (format!("gamma{k}"), g.clone())),
        );
        out
    }

    /// The calibration as an evidence report: constants, rank and residuals.
    pub fn report(&self) -> EvidenceReport {
        let mut r = EvidenceReport::new("sextic calibration");
        r.samples = self.fit_points.len() + self.held_out.len();
        for (name, v) in self.constants() {
            r.constant(&name, v);
        }
        r.note(format!(
            "degree-10 system rank {} of 6; free columns set to 0",
            self.rank
        ));
        r.note(format!(
            "{} fit points, {} held-out points",
            self.fit_points.len(),
            self.held_out.len()
        ));
        for (p, res) in self.held_out.iter().zip(&self.residuals) {
            let ok = res
                .iter()
                .all(|x| x == &BigRational::from_integer(0.into()));
            r.require(
                ok,
                format!("(s, t) = ({}, {})", p.0, p.1),
                "nonzero residual",
            );
        }
        r
    }
}
