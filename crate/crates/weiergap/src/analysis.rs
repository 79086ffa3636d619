//! Weights and classification labels, together with the point-count
//! formulas they feed.
//!
//! The weight of a gap sequence measures how far it sits from the ordinary
//! sequence {1, ..., g}; positive weight marks a Weierstrass point. Two
//! special shapes get names: the hyperelliptic sequence {1, 3, ..., 2g-1}
//! (weight g(g-1)/2) and the exceptional sequence {1, ..., g-1, g+1}
//! (weight 1). The formula operations stay in exact integer arithmetic and
//! cap the genus so cubes fit in 64 bits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::sequence::GapSequence;

/// Largest genus accepted by the formula operations; keeps g^3 within u64.
pub const MAX_FORMULA_GENUS: u32 = 1 << 20;

/// Shape label for a gap sequence. Exactly one label applies; the genus-2
/// sequence {1,3} matches both the hyperelliptic and exceptional shapes and
/// is labeled hyperelliptic, with the overlap surfaced separately in
/// [`WeightReport::also_exceptional`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Genus 0: no gaps at all.
    Rational,
    /// Weight 0 at positive genus: gaps are exactly {1, ..., g}.
    Ordinary,
    /// Gaps are {1, 3, ..., 2g-1} with g >= 2; first non-gap is 2.
    Hyperelliptic,
    /// Gaps are {1, ..., g-1, g+1} with g >= 2; weight is 1.
    Exceptional,
    /// Positive weight without one of the named shapes.
    GenericWeierstrass,
}

impl Classification {
    pub const ALL: [Classification; 5] = [
        Classification::Rational,
        Classification::Ordinary,
        Classification::Hyperelliptic,
        Classification::Exceptional,
        Classification::GenericWeierstrass,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Classification::Rational => "rational",
            Classification::Ordinary => "ordinary",
            Classification::Hyperelliptic => "hyperelliptic",
            Classification::Exceptional => "exceptional",
            Classification::GenericWeierstrass => "generic-weierstrass",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Classification {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Classification::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| AnalysisError::UnknownClassification {
                label: s.to_string(),
            })
    }
}

/// Weight and shape summary for one gap sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub weight: u64,
    /// True iff weight > 0; the defining property of a Weierstrass point.
    pub is_weierstrass: bool,
    pub classification: Classification,
    /// Smallest non-gap; `None` at genus 0.
    pub first_non_gap: Option<u32>,
    /// True when the sequence also matches the exceptional shape but was
    /// labeled hyperelliptic (happens only at genus 2, where {1,3} is both).
    pub also_exceptional: bool,
}

/// Bounds on how many positive-weight points a surface of this genus can
/// carry, plus the total weight budget they share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointCountBounds {
    pub genus: u32,
    /// 2g + 2.
    pub lower: u64,
    /// g^3 - g, same as the total weight.
    pub upper: u64,
    /// (g-1) g (g+1), distributed across all positive-weight points.
    pub total_weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    GenusTooSmall {
        genus: u32,
        min: u32,
    },
    GenusTooLarge {
        genus: u32,
        max: u32,
    },
    /// The forced-gap criterion requires coprime pole orders.
    NotCoprime {
        h: u32,
        k: u32,
    },
    /// A pole order below its admissible minimum (h and k must be >= 2).
    OrderTooSmall {
        name: &'static str,
        value: u32,
        min: u32,
    },
    UnknownClassification {
        label: String,
    },
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::GenusTooSmall { genus, min } => {
                write!(
                    f,
                    "genus {genus} below the minimum {min} for this operation"
                )
            }
            AnalysisError::GenusTooLarge { genus, max } => {
                write!(f, "genus {genus} above the supported maximum {max}")
            }
            AnalysisError::NotCoprime { h, k } => {
                write!(f, "pole orders {h} and {k} must be coprime")
            }
            AnalysisError::OrderTooSmall { name, value, min } => {
                write!(f, "{name} = {value} must be at least {min}")
            }
            AnalysisError::UnknownClassification { label } => {
                write!(f, "unknown classification label {label:?}")
            }
        }
    }
}

impl std::error::Error for AnalysisError {}

/// Sum of (n_i - i) over the gaps, 1-indexed: the distance from the
/// ordinary sequence {1, ..., g}. Zero iff the point is not a Weierstrass
/// point; at most g(g-1)/2, attained exactly by the hyperelliptic shape.
pub fn weight(seq: &GapSequence) -> u64 {
    seq.gaps()
        .iter()
        .enumerate()
        .map(|(i, &gap)| gap as u64 - (i as u64 + 1))
        .sum()
}

/// True iff the gaps are exactly {1, 3, ..., 2g-1} with g >= 2.
fn is_hyperelliptic_shape(seq: &GapSequence) -> bool {
    seq.genus() >= 2
        && seq
            .gaps()
            .iter()
            .enumerate()
            .all(|(i, &gap)| gap == 2 * i as u32 + 1)
}

/// True iff the gaps are exactly {1, ..., g-1, g+1} with g >= 2.
fn is_exceptional_shape(seq: &GapSequence) -> bool {
    let g = seq.genus();
    if g < 2 {
        return false;
    }
    let gaps = seq.gaps();
    gaps[..(g - 1) as usize]
        .iter()
        .enumerate()
        .all(|(i, &gap)| gap == i as u32 + 1)
        && gaps[(g - 1) as usize] == g + 1
}

/// Weight, Weierstrass flag, shape label, and first non-gap in one report.
pub fn classify(seq: &GapSequence) -> WeightReport {
    let w = weight(seq);
    let first_non_gap = seq.first_non_gap();
    let hyper = is_hyperelliptic_shape(seq);
    let exceptional = is_exceptional_shape(seq);
    let classification = if seq.genus() == 0 {
        Classification::Rational
    } else if w == 0 {
        Classification::Ordinary
    } else if hyper {
        Classification::Hyperelliptic
    } else if exceptional {
        Classification::Exceptional
    } else {
        Classification::GenericWeierstrass
    };
    WeightReport {
        weight: w,
        is_weierstrass: w > 0,
        classification,
        first_non_gap,
        also_exceptional: hyper && exceptional,
    }
}

fn check_formula_genus(genus: u32, min: u32) -> Result<(), AnalysisError> {
    if genus < min {
        return Err(AnalysisError::GenusTooSmall { genus, min });
    }
    if genus > MAX_FORMULA_GENUS {
        return Err(AnalysisError::GenusTooLarge {
            genus,
            max: MAX_FORMULA_GENUS,
        });
    }
    Ok(())
}

/// The gap sequence {1, 3, ..., 2g-1}: first non-gap 2, weight g(g-1)/2.
pub fn hyperelliptic_sequence(genus: u32) -> Result<GapSequence, AnalysisError> {
    check_formula_genus(genus, 2)?;
    let gaps = (0..genus).map(|i| 2 * i + 1).collect();
    Ok(GapSequence::from_sorted_unchecked(genus, gaps))
}

/// The gap sequence {1, ..., g-1, g+1}: weight exactly 1, the smallest
/// positive weight a genus-g sequence can have.
pub fn exceptional_sequence(genus: u32) -> Result<GapSequence, AnalysisError> {
    check_formula_genus(genus, 2)?;
    let mut gaps: Vec<u32> = (1..genus).collect();
    gaps.push(genus + 1);
    Ok(GapSequence::from_sorted_unchecked(genus, gaps))
}

/// The point count of a genus-g surface sits between 2g+2 and g^3-g; the
/// same g^3-g is the total weight budget shared by all positive-weight
/// points.
pub fn point_count_bounds(genus: u32) -> Result<PointCountBounds, AnalysisError> {
    check_formula_genus(genus, 2)?;
    let g = genus as u64;
    let total = (g - 1) * g * (g + 1);
    Ok(PointCountBounds {
        genus,
        lower: 2 * g + 2,
        upper: total,
        total_weight: total,
    })
}

/// Total weight divided by the per-point hyperelliptic weight g(g-1)/2.
/// The quotient is exact and equals 2g+2, the lower point-count bound.
pub fn implied_hyperelliptic_point_count(genus: u32) -> Result<u64, AnalysisError> {
    check_formula_genus(genus, 2)?;
    let g = genus as u64;
    let total = (g - 1) * g * (g + 1);
    let per_point = g * (g - 1) / 2;
    assert_eq!(total % per_point, 0, "weight budget must split evenly");
    Ok(total / per_point)
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Forced-gap criterion: with coprime pole orders h >= 2 and k >= 2, if
/// 2g > (h-1)(k-1) then every genus-g sequence whose first non-gap is h
/// must have k as a gap. Evaluated in the doubled integer form to avoid
/// fractions.
pub fn jenkins_forced_gap(h: u32, k: u32, genus: u32) -> Result<bool, AnalysisError> {
    if h < 2 {
        return Err(AnalysisError::OrderTooSmall {
            name: "h",
            value: h,
            min: 2,
        });
    }
    if k < 2 {
        return Err(AnalysisError::OrderTooSmall {
            name: "k",
            value: k,
            min: 2,
        });
    }
    if gcd(h, k) != 1 {
        return Err(AnalysisError::NotCoprime { h, k });
    }
    if genus < 1 {
        return Err(AnalysisError::GenusTooSmall { genus, min: 1 });
    }
    Ok(2 * genus as u64 > (h as u64 - 1) * (k as u64 - 1))
}
