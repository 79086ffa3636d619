//! Integer dimension ladders attached to a gap sequence.
//!
//! For the family of single-point divisors of degree n = 0..2g, two
//! integer sequences track the function-space dimension h0(n) and the
//! index of speciality i(n). The gap sequence determines both: h0 starts
//! at 1 and steps up exactly at the non-gaps, and i is pinned by the
//! identity h0(n) - i(n) = 1 - g + n. Six laws characterize the ladders
//! that arise this way; [`DimensionLadder::verify`] reports each one
//! separately so a hand-built ladder can be diagnosed law by law.

use std::fmt;

use crate::sequence::{validate, GapSequence, ValidationError};

/// Paired sequences h0 and i, both indexed n = 0..=2g. Beyond 2g no
/// information remains (i is 0 and h0 grows by 1 each step), so the
/// window ends there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionLadder {
    genus: u32,
    h0: Vec<i64>,
    i: Vec<i64>,
}

/// The laws a well-formed ladder satisfies, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderLaw {
    /// h0[n] - i[n] == 1 - g + n at every index.
    RiemannRochIdentity,
    /// i[0] == g: at degree zero only constants exist, so the correction
    /// term carries the whole genus.
    InitialSpeciality,
    /// i[n] == 0 for every n >= 2g-1 (from 0 on when g == 0).
    SpecialityVanishing,
    /// h0 moves by 0 or +1 per step; i moves by 0 or -1.
    StepDiscipline,
    /// i decreases at exactly g indices within [1, 2g-1].
    TotalSpecialityDrop,
    /// h0[0] == 1: the degree-zero space holds exactly the constants.
    BaseDimension,
}

impl LadderLaw {
    pub const ALL: [LadderLaw; 6] = [
        LadderLaw::RiemannRochIdentity,
        LadderLaw::InitialSpeciality,
        LadderLaw::SpecialityVanishing,
        LadderLaw::StepDiscipline,
        LadderLaw::TotalSpecialityDrop,
        LadderLaw::BaseDimension,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LadderLaw::RiemannRochIdentity => "riemann-roch-identity",
            LadderLaw::InitialSpeciality => "initial-speciality",
            LadderLaw::SpecialityVanishing => "speciality-vanishing",
            LadderLaw::StepDiscipline => "step-discipline",
            LadderLaw::TotalSpecialityDrop => "total-speciality-drop",
            LadderLaw::BaseDimension => "base-dimension",
        }
    }
}

impl fmt::Display for LadderLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of one law: pass, or fail at the first offending index.
/// Aggregate laws (the total drop count) carry no single index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: LadderLaw,
    pub pass: bool,
    pub first_offending_index: Option<usize>,
}

/// All six law checks, in the fixed order of [`LadderLaw::ALL`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderReport {
    pub checks: Vec<LawCheck>,
}

impl LadderReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn check(&self, law: LadderLaw) -> &LawCheck {
        self.checks
            .iter()
            .find(|c| c.law == law)
            .expect("every law is checked")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LadderError {
    /// A sequence of the wrong length for the stated genus (need 2g+1).
    WrongLength {
        field: &'static str,
        expected: usize,
        actual: usize,
    },
    /// The ladder breaks one of the six laws.
    LawViolation {
        law: LadderLaw,
        index: Option<usize>,
    },
    /// The ladder obeys all six laws but its plateau set is not a valid
    /// gap sequence (the laws pin down counts and ranges, not closure).
    InvalidGaps(ValidationError),
}

impl fmt::Display for LadderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LadderError::WrongLength {
                field,
                expected,
                actual,
            } => {
                write!(
                    f,
                    "{field} has {actual} entries, need {expected} (indices 0..=2g)"
                )
            }
            LadderError::LawViolation {
                law,
                index: Some(n),
            } => {
                write!(f, "ladder law {law} violated first at index {n}")
            }
            LadderError::LawViolation { law, index: None } => {
                write!(f, "ladder law {law} violated")
            }
            LadderError::InvalidGaps(err) => {
                write!(f, "ladder plateaus do not form a valid gap sequence: {err}")
            }
        }
    }
}

impl std::error::Error for LadderError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            LadderError::InvalidGaps(err) => Some(err),
            _ => None,
        }
    }
}

impl DimensionLadder {
    /// Build the ladder a gap sequence induces: h0[0] = 1, h0 steps up
    /// exactly at non-gaps, and i fills in via the degree identity.
    pub fn from_gaps(seq: &GapSequence) -> DimensionLadder {
        let g = seq.genus();
        let top = (2 * g) as usize;
        let mut h0: Vec<i64> = Vec::with_capacity(top + 1);
        h0.push(1);
        for n in 1..=top {
            let step = if seq.contains_gap(n as u32) { 0 } else { 1 };
            h0.push(h0[n - 1] + step);
        }
        let i = (0..=top)
            .map(|n| h0[n] - (1 - g as i64 + n as i64))
            .collect();
        DimensionLadder { genus: g, h0, i }
    }

    /// Wrap explicit sequences. Only the shape (2g+1 entries each) is
    /// enforced here; use [`DimensionLadder::verify`] for the laws.
    pub fn from_parts(
        genus: u32,
        h0: Vec<i64>,
        i: Vec<i64>,
    ) -> Result<DimensionLadder, LadderError> {
        let expected = (2 * genus + 1) as usize;
        if h0.len() != expected {
            return Err(LadderError::WrongLength {
                field: "h0",
                expected,
                actual: h0.len(),
            });
        }
        if i.len() != expected {
            return Err(LadderError::WrongLength {
                field: "i",
                expected,
                actual: i.len(),
            });
        }
        Ok(DimensionLadder { genus, h0, i })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Function-space dimensions, indices 0..=2g.
    pub fn h0(&self) -> &[i64] {
        &self.h0
    }

    /// Speciality indices, 0..=2g.
    pub fn i(&self) -> &[i64] {
        &self.i
    }

    /// Check all six laws in order; failures are reported, never thrown.
    pub fn verify(&self) -> LadderReport {
        let g = self.genus as i64;
        let top = self.h0.len() - 1;
        let mut checks = Vec::with_capacity(LadderLaw::ALL.len());

        let idx = (0..=top).find(|&n| self.h0[n] - self.i[n] != 1 - g + n as i64);
        checks.push(LawCheck {
            law: LadderLaw::RiemannRochIdentity,
            pass: idx.is_none(),
            first_offending_index: idx,
        });

        let initial_ok = self.i[0] == g;
        checks.push(LawCheck {
            law: LadderLaw::InitialSpeciality,
            pass: initial_ok,
            first_offending_index: if initial_ok { None } else { Some(0) },
        });

        let vanish_from = (2 * self.genus).saturating_sub(1) as usize;
        let idx = (vanish_from..=top).find(|&n| self.i[n] != 0);
        checks.push(LawCheck {
            law: LadderLaw::SpecialityVanishing,
            pass: idx.is_none(),
            first_offending_index: idx,
        });

        let idx = (1..=top).find(|&n| {
            let dh = self.h0[n] - self.h0[n - 1];
            let di = self.i[n] - self.i[n - 1];
            !(dh == 0 || dh == 1) || !(di == 0 || di == -1)
        });
        checks.push(LawCheck {
            law: LadderLaw::StepDiscipline,
            pass: idx.is_none(),
            first_offending_index: idx,
        });

        let drop_window = top.min((2 * self.genus).saturating_sub(1) as usize);
        let drops = (1..=drop_window)
            .filter(|&n| self.i[n] < self.i[n - 1])
            .count() as i64;
        checks.push(LawCheck {
            law: LadderLaw::TotalSpecialityDrop,
            pass: drops == g,
            first_offending_index: None,
        });

        let base_ok = self.h0[0] == 1;
        checks.push(LawCheck {
            law: LadderLaw::BaseDimension,
            pass: base_ok,
            first_offending_index: if base_ok { None } else { Some(0) },
        });

        LadderReport { checks }
    }

    /// Recover the gap sequence as the plateau set {n : h0[n] == h0[n-1]}.
    /// Rejects ladders that break a law, and ladders whose plateau set
    /// passes the six laws yet fails gap-sequence validation (the laws fix
    /// the plateau count and range but not additive closure).
    pub fn gap_sequence(&self) -> Result<GapSequence, LadderError> {
        if let Some(fail) = self.verify().first_failure() {
            return Err(LadderError::LawViolation {
                law: fail.law,
                index: fail.first_offending_index,
            });
        }
        let plateaus: Vec<u32> = (1..self.h0.len())
            .filter(|&n| self.h0[n] == self.h0[n - 1])
            .map(|n| n as u32)
            .collect();
        validate(self.genus, &plateaus).map_err(LadderError::InvalidGaps)
    }
}
