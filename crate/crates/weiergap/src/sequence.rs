//! Gap sequences and non-gap (numerical semigroup) sets.
//!
//! A gap sequence of genus `g` is a strictly increasing set of `g` integers
//! `{1 = n_1 < n_2 < … < n_g ≤ 2g−1}` whose complement in the non-negative
//! integers is closed under addition. Equivalently, the complement is a
//! numerical semigroup of genus `g`. [`validate`] checks both the structural
//! shape and the closure condition, reporting the first failure in a fixed
//! order so diagnostics are deterministic.

use std::fmt;

use crate::bitset::BitVector;

/// A validated Weierstrass gap sequence: `genus` gaps, sorted ascending,
/// starting at 1 (when the genus is positive) and bounded by `2·genus − 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapSequence {
    genus: u32,
    gaps: Vec<u32>,
}

/// The complement structure of a [`GapSequence`]: the non-gaps in
/// `{2, …, 2g}` together with a membership bitmap over `[0, 2g]`
/// (bit 0 is always set; zero belongs to every numerical semigroup).
#[derive(Clone, PartialEq, Eq)]
pub struct NonGapSet {
    genus: u32,
    non_gaps: Vec<u32>,
    membership: BitVector,
}

/// Why a candidate gap list was rejected. Checks run in the declaration
/// order of [`ValidationErrorKind`], so the reported error is always the
/// first kind that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    /// The candidate does not contain exactly `genus` entries.
    WrongLength { expected: u32, actual: usize },
    /// Genus is positive but 1 is not among the gaps.
    MissingOne,
    /// A candidate gap lies outside `[1, 2·genus − 1]`.
    GapOutOfRange { gap: u32, max: u32 },
    /// The candidate list is not strictly increasing at `index`.
    NotSorted { index: usize },
    /// A gap is the sum of two non-gaps: `a + b == gap`. Sums of three or
    /// more non-gaps always flatten to such a binary witness over
    /// already-established members, so this single shape covers every
    /// "combination" of non-gaps.
    ClosureViolation { gap: u32, a: u32, b: u32 },
}

/// Discriminant of [`ValidationError`], in check order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ValidationErrorKind {
    WrongLength,
    MissingOne,
    GapOutOfRange,
    NotSorted,
    ClosureViolation,
}

impl ValidationError {
    pub fn kind(&self) -> ValidationErrorKind {
        match self {
            ValidationError::WrongLength { .. } => ValidationErrorKind::WrongLength,
            ValidationError::MissingOne => ValidationErrorKind::MissingOne,
            ValidationError::GapOutOfRange { .. } => ValidationErrorKind::GapOutOfRange,
            ValidationError::NotSorted { .. } => ValidationErrorKind::NotSorted,
            ValidationError::ClosureViolation { .. } => ValidationErrorKind::ClosureViolation,
        }
    }

    /// The `(gap, a, b)` decomposition for closure violations.
    pub fn witness(&self) -> Option<(u32, u32, u32)> {
        match *self {
            ValidationError::ClosureViolation { gap, a, b } => Some((gap, a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for ValidationErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ValidationErrorKind::WrongLength => "wrong-length",
            ValidationErrorKind::MissingOne => "missing-one",
            ValidationErrorKind::GapOutOfRange => "gap-out-of-range",
            ValidationErrorKind::NotSorted => "not-sorted",
            ValidationErrorKind::ClosureViolation => "closure-violation",
        };
        f.write_str(name)
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ValidationError::WrongLength { expected, actual } => {
                write!(f, "expected {expected} gaps, got {actual}")
            }
            ValidationError::MissingOne => write!(f, "1 must be a gap when the genus is positive"),
            ValidationError::GapOutOfRange { gap, max } => {
                write!(f, "gap {gap} outside the allowed range 1..={max}")
            }
            ValidationError::NotSorted { index } => {
                write!(
                    f,
                    "gaps must be strictly increasing (violated at index {index})"
                )
            }
            ValidationError::ClosureViolation { gap, a, b } => {
                write!(f, "gap {gap} is the sum of non-gaps {a} + {b}")
            }
        }
    }
}

impl std::error::Error for ValidationError {}

/// Validate a candidate gap list for the given genus.
///
/// Structural checks (length, presence of 1, range, sortedness) run before
/// the closure check, and the first failure wins. A candidate passes the
/// closure check iff no gap is a sum of non-gaps; sums with repetition
/// reduce to binary sums by induction, so only pairs are examined.
pub fn validate(genus: u32, candidate: &[u32]) -> Result<GapSequence, ValidationError> {
    if candidate.len() != genus as usize {
        return Err(ValidationError::WrongLength {
            expected: genus,
            actual: candidate.len(),
        });
    }
    if genus == 0 {
        return Ok(GapSequence {
            genus,
            gaps: Vec::new(),
        });
    }
    if !candidate.contains(&1) {
        return Err(ValidationError::MissingOne);
    }
    let max_gap = 2 * genus - 1;
    if let Some(&bad) = candidate.iter().find(|&&v| v < 1 || v > max_gap) {
        return Err(ValidationError::GapOutOfRange {
            gap: bad,
            max: max_gap,
        });
    }
    if let Some(index) = (1..candidate.len()).find(|&i| candidate[i] <= candidate[i - 1]) {
        return Err(ValidationError::NotSorted { index });
    }

    let width = (2 * genus + 1) as usize;
    let mut gap_bits = BitVector::zero(width);
    for &gap in candidate {
        gap_bits.set(gap as usize);
    }
    let mut member_bits = BitVector::zero(width);
    for n in 1..width {
        if !gap_bits.test(n) {
            member_bits.set(n);
        }
    }
    if let Some((gap, a, b)) = closure_witness(&member_bits, &gap_bits) {
        return Err(ValidationError::ClosureViolation { gap, a, b });
    }

    Ok(GapSequence {
        genus,
        gaps: candidate.to_vec(),
    })
}

/// Smallest element of `targets` expressible as a sum of two positive
/// members, with the lexicographically least decomposition `(a, b)`,
/// `a ≤ b`. `members` must not contain bit 0.
fn closure_witness(members: &BitVector, targets: &BitVector) -> Option<(u32, u32, u32)> {
    let width = members.width();
    let mut sums = BitVector::zero(width);
    for a in members.iter_ones() {
        if a + a >= width {
            break;
        }
        sums.or_shifted(members, a);
    }
    let gap = sums.intersect(targets).first_one()?;
    for a in members.iter_ones() {
        if 2 * a > gap {
            break;
        }
        if members.test(gap - a) {
            return Some((gap as u32, a as u32, (gap - a) as u32));
        }
    }
    unreachable!("sum bitmap marked {gap} without a pair decomposition");
}

impl GapSequence {
    /// Construct without re-running validation. Callers must guarantee the
    /// list is a valid sorted gap sequence for `genus`.
    pub(crate) fn from_sorted_unchecked(genus: u32, gaps: Vec<u32>) -> Self {
        debug_assert_eq!(gaps.len(), genus as usize);
        GapSequence { genus, gaps }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The gaps, ascending.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Largest gap (the Frobenius number of the complement semigroup), or
    /// `None` at genus zero.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    pub fn contains_gap(&self, n: u32) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    /// Smallest non-gap (the multiplicity of the complement semigroup).
    /// Always in `[2, genus + 1]`; undefined at genus zero, where every
    /// positive order is already achieved.
    pub fn first_non_gap(&self) -> Option<u32> {
        if self.genus == 0 {
            return None;
        }
        let mut expected = 1;
        for &gap in &self.gaps {
            if gap != expected {
                break;
            }
            expected += 1;
        }
        Some(expected)
    }

    /// Complement structure over `{2, …, 2g}` plus the membership bitmap.
    pub fn non_gaps(&self) -> NonGapSet {
        let width = (2 * self.genus + 1) as usize;
        let mut membership = BitVector::zero(width);
        membership.set(0);
        let mut non_gaps = Vec::with_capacity(self.genus as usize);
        for n in 1..width {
            if !self.contains_gap(n as u32) {
                membership.set(n);
                non_gaps.push(n as u32);
            }
        }
        NonGapSet {
            genus: self.genus,
            non_gaps,
            membership,
        }
    }
}

impl fmt::Debug for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GapSequence(g={}, {:?})", self.genus, self.gaps)
    }
}

impl NonGapSet {
    /// Build a non-gap set directly from a member list, skipping the
    /// semigroup invariants. Members must be strictly increasing and lie in
    /// `[2, 2·genus]`. This exists so hypothetical complements can be probed
    /// with [`NonGapSet::is_closed_under_addition`]; sets produced by
    /// [`GapSequence::non_gaps`] always satisfy the full invariants.
    pub fn from_members(genus: u32, members: &[u32]) -> Result<NonGapSet, ValidationError> {
        let width = (2 * genus + 1) as usize;
        let mut membership = BitVector::zero(width);
        membership.set(0);
        let mut prev = 0u32;
        for (index, &m) in members.iter().enumerate() {
            if m < 2 || m > 2 * genus {
                return Err(ValidationError::GapOutOfRange {
                    gap: m,
                    max: 2 * genus,
                });
            }
            if m <= prev {
                return Err(ValidationError::NotSorted { index });
            }
            membership.set(m as usize);
            prev = m;
        }
        Ok(NonGapSet {
            genus,
            non_gaps: members.to_vec(),
            membership,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The non-gaps in `{2, …, 2g}`, ascending.
    pub fn members(&self) -> &[u32] {
        &self.non_gaps
    }

    /// Membership in the window `[0, 2g]`; true for 0 and every non-gap.
    pub fn contains(&self, n: u32) -> bool {
        self.membership.test(n as usize)
    }

    /// True iff sums of members stay inside the set wherever the window can
    /// see them: for all members `s`, `t` with `s + t ≤ 2g`, the sum is a
    /// member. Sums beyond `2g` exceed every gap and need no check.
    pub fn is_closed_under_addition(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// First witness that the set is not closed: the smallest sum of two
    /// members that lands inside `[0, 2g]` without being a member, returned
    /// as `(sum, a, b)`.
    pub fn closure_violation(&self) -> Option<(u32, u32, u32)> {
        let mut positive = self.membership.clone();
        positive.clear(0);
        let holes = BitVector::all_set(self.membership.width()).and_not(&self.membership);
        closure_witness(&positive, &holes)
    }
}

impl fmt::Debug for NonGapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NonGapSet(g={}, {:?})", self.genus, self.non_gaps)
    }
}
