//! Flat serialization shape for enumerated sequences.
//!
//! A record joins a gap sequence with its derived analysis so one line of
//! output is self-contained. Field order is part of the contract: JSON
//! lines keep (genus, gaps, nonGaps, weight, classification, firstNonGap)
//! in that order so serial runs diff byte-for-byte.

use serde::{Deserialize, Serialize};

use crate::analysis::{classify, Classification};
use crate::sequence::GapSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceRecord {
    pub genus: u32,
    pub gaps: Vec<u32>,
    pub non_gaps: Vec<u32>,
    pub weight: u64,
    pub classification: Classification,
    /// `None` (serialized as null) at genus 0.
    pub first_non_gap: Option<u32>,
}

impl SequenceRecord {
    pub fn from_sequence(seq: &GapSequence) -> SequenceRecord {
        let report = classify(seq);
        SequenceRecord {
            genus: seq.genus(),
            gaps: seq.gaps().to_vec(),
            non_gaps: seq.non_gaps().members().to_vec(),
            weight: report.weight,
            classification: report.classification,
            first_non_gap: report.first_non_gap,
        }
    }

    /// One JSON object, no trailing newline.
    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    pub fn csv_header() -> &'static str {
        "genus,gaps,nonGaps,weight,classification,firstNonGap"
    }

    /// One CSV row; list cells are space-separated so no quoting is needed,
    /// and an absent first non-gap leaves its cell empty.
    pub fn csv_row(&self) -> String {
        let first = self
            .first_non_gap
            .map(|h| h.to_string())
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.genus,
            join_spaced(&self.gaps),
            join_spaced(&self.non_gaps),
            self.weight,
            self.classification,
            first
        )
    }

    /// One human-oriented line.
    pub fn plain_line(&self) -> String {
        let first = self
            .first_non_gap
            .map(|h| h.to_string())
            .unwrap_or_else(|| "-".to_string());
        format!(
            "g={} gaps=[{}] nonGaps=[{}] weight={} classification={} firstNonGap={}",
            self.genus,
            join_commas(&self.gaps),
            join_commas(&self.non_gaps),
            self.weight,
            self.classification,
            first
        )
    }
}

fn join_spaced(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_commas(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::validate;

    fn record(genus: u32, gaps: &[u32]) -> SequenceRecord {
        SequenceRecord::from_sequence(&validate(genus, gaps).unwrap())
    }

    #[test]
    fn json_field_order_is_frozen() {
        assert_eq!(
            record(3, &[1, 3, 5]).json_line(),
            r#"{"genus":3,"gaps":[1,3,5],"nonGaps":[2,4,6],"weight":3,"classification":"hyperelliptic","firstNonGap":2}"#
        );
        assert_eq!(
            record(0, &[]).json_line(),
            r#"{"genus":0,"gaps":[],"nonGaps":[],"weight":0,"classification":"rational","firstNonGap":null}"#
        );
    }

    #[test]
    fn csv_rendering() {
        assert_eq!(
            SequenceRecord::csv_header(),
            "genus,gaps,nonGaps,weight,classification,firstNonGap"
        );
        assert_eq!(
            record(3, &[1, 3, 5]).csv_row(),
            "3,1 3 5,2 4 6,3,hyperelliptic,2"
        );
        assert_eq!(record(0, &[]).csv_row(), "0,,,0,rational,");
    }

    #[test]
    fn plain_rendering() {
        assert_eq!(
            record(3, &[1, 2, 5]).plain_line(),
            "g=3 gaps=[1,2,5] nonGaps=[3,4,6] weight=2 classification=generic-weierstrass firstNonGap=3"
        );
        assert_eq!(
            record(0, &[]).plain_line(),
            "g=0 gaps=[] nonGaps=[] weight=0 classification=rational firstNonGap=-"
        );
    }

    #[test]
    fn json_round_trips() {
        for (genus, gaps) in [(0u32, vec![]), (1, vec![1]), (4, vec![1, 2, 3, 5])] {
            let rec = record(genus, &gaps);
            let back: SequenceRecord = serde_json::from_str(&rec.json_line()).unwrap();
            assert_eq!(back, rec);
        }
    }
}
