//! Enumeration and counting of all gap sequences of a genus.
//!
//! Two independent engines answer the same question. The brute-force
//! oracle tries every candidate subset of {2, ..., 2g-1} and keeps the
//! valid ones; its cost is choose(2g-2, g-1) validations, so it refuses to
//! run above a configurable genus cap. The tree search walks the tree of
//! numerical semigroups instead: the root is the genus-0 semigroup, and a
//! child removes one effective generator (a minimal generator above the
//! Frobenius number) from its parent, raising the genus by one. Each
//! semigroup has a unique parent (re-adjoin its largest gap), so the walk
//! visits every gap sequence exactly once, and visiting children in
//! ascending generator order yields lexicographic emission. The two
//! engines must agree wherever the oracle can reach; tests enforce that.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::analysis::{classify, weight, Classification};
use crate::bitset::BitVector;
use crate::sequence::{validate, GapSequence};

/// Default genus cap for the brute-force oracle; choose(26, 13) candidate
/// validations is the most it will attempt without explicit override.
pub const DEFAULT_BRUTE_FORCE_LIMIT: u32 = 14;

/// Count plus optionally the sequences themselves, in lexicographic order
/// on the ascending gap lists.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub genus: u32,
    pub count: u64,
    /// Present when the caller asked for the sequences, not just the count.
    pub sequences: Option<Vec<GapSequence>>,
}

/// One row of a count table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusCount {
    pub genus: u32,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationError {
    /// The brute-force oracle is exponential by design and refuses to run
    /// past its configured genus cap.
    OracleRefused {
        genus: u32,
        limit: u32,
    },
    /// Filtered enumeration needs at least genus 1.
    FilterRequiresPositiveGenus,
    UnknownFilterKey {
        key: String,
    },
    /// A filter that is not of the form KEY=VALUE.
    MalformedFilter {
        raw: String,
    },
    BadFilterValue {
        key: &'static str,
        value: String,
    },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::OracleRefused { genus, limit } => write!(
                f,
                "brute-force oracle refuses genus {genus}: above the limit {limit} \
                 (cost grows as choose(2g-2, g-1))"
            ),
            EnumerationError::FilterRequiresPositiveGenus => {
                write!(f, "filtered enumeration requires genus >= 1")
            }
            EnumerationError::UnknownFilterKey { key } => write!(
                f,
                "unknown filter key {key:?}; expected firstNonGap, weight, or classification"
            ),
            EnumerationError::MalformedFilter { raw } => {
                write!(f, "filter {raw:?} is not of the form KEY=VALUE")
            }
            EnumerationError::BadFilterValue { key, value } => {
                write!(f, "bad value {value:?} for filter key {key}")
            }
        }
    }
}

impl std::error::Error for EnumerationError {}

/// A node of the semigroup tree: a genus-k semigroup reached by removing
/// generators one at a time from the genus-0 root. `horizon` is the
/// deepest genus this node's membership window can support; expanding
/// past it is a caller bug.
#[derive(Clone)]
pub struct TreeNode {
    genus: u32,
    /// Largest gap; 0 at the root, which has no gaps.
    frobenius: u32,
    /// Gaps in the order they were removed, which is ascending.
    gaps: Vec<u32>,
    /// Bit n set iff n is a member, over the window [0, 2 * horizon].
    members: BitVector,
    horizon: u32,
}

impl TreeNode {
    /// The genus-0 semigroup (every non-negative integer is a member),
    /// with a membership window wide enough to walk down to `horizon`.
    pub fn root(horizon: u32) -> TreeNode {
        let width = (2 * horizon + 1) as usize;
        TreeNode {
            genus: 0,
            frobenius: 0,
            gaps: Vec::new(),
            members: BitVector::all_set(width),
            horizon,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Largest gap, or `None` at the root.
    pub fn frobenius(&self) -> Option<u32> {
        if self.genus == 0 {
            None
        } else {
            Some(self.frobenius)
        }
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn gap_sequence(&self) -> GapSequence {
        GapSequence::from_sorted_unchecked(self.genus, self.gaps.clone())
    }

    /// True iff `m` cannot be written as a sum of two smaller positive
    /// members. Only meaningful for members; callers pass m > frobenius,
    /// where every integer is a member.
    fn is_minimal_generator(&self, m: u32) -> bool {
        for a in 1..=m / 2 {
            if self.members.test(a as usize) && self.members.test((m - a) as usize) {
                return false;
            }
        }
        true
    }

    /// Minimal generators above the Frobenius number, ascending. These are
    /// exactly the members whose removal leaves a semigroup of genus one
    /// higher; they never exceed 2 * genus + 1, because any m >= 2g + 2
    /// splits as a + (m - a) with both parts members (at most g - 1 of the
    /// floor(m/2) - 1 candidate splits can touch a gap other than 1).
    pub fn effective_generators(&self) -> Vec<u32> {
        let hi = 2 * self.genus + 1;
        (self.frobenius + 1..=hi)
            .filter(|&m| self.is_minimal_generator(m))
            .collect()
    }

    /// Child nodes in ascending order of the generator removed. Each child
    /// appends its removed generator to the gap list, so gap lists of
    /// descendants extend this node's list as a prefix.
    pub fn children(&self) -> Vec<TreeNode> {
        assert!(
            self.genus < self.horizon,
            "tree node at genus {} expanded past its horizon {}",
            self.genus,
            self.horizon
        );
        self.effective_generators()
            .into_iter()
            .map(|e| {
                let mut members = self.members.clone();
                members.clear(e as usize);
                let mut gaps = self.gaps.clone();
                gaps.push(e);
                TreeNode {
                    genus: self.genus + 1,
                    frobenius: e,
                    gaps,
                    members,
                    horizon: self.horizon,
                }
            })
            .collect()
    }
}

impl fmt::Debug for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeNode(g={}, gaps={:?})", self.genus, self.gaps)
    }
}

/// Depth-first stream of all gap sequences of the target genus, in
/// lexicographic order. Nothing above the current path is retained, so
/// memory stays proportional to genus times the branching factor.
pub struct TreeWalk {
    target: u32,
    stack: Vec<TreeNode>,
}

/// Serial streaming enumeration of one genus in lexicographic order.
pub fn tree_walk(genus: u32) -> TreeWalk {
    TreeWalk {
        target: genus,
        stack: vec![TreeNode::root(genus)],
    }
}

impl Iterator for TreeWalk {
    type Item = GapSequence;

    fn next(&mut self) -> Option<GapSequence> {
        while let Some(node) = self.stack.pop() {
            if node.genus == self.target {
                return Some(node.gap_sequence());
            }
            let mut kids = node.children();
            kids.reverse();
            self.stack.append(&mut kids);
        }
        None
    }
}

/// Materialized tree enumeration (count plus sequences, lexicographic).
pub fn tree_enumerate(genus: u32) -> EnumerationResult {
    let sequences: Vec<GapSequence> = tree_walk(genus).collect();
    EnumerationResult {
        genus,
        count: sequences.len() as u64,
        sequences: Some(sequences),
    }
}

fn tally_subtree(node: &TreeNode, max_genus: u32, tally: &mut [u64]) {
    tally[node.genus() as usize] += 1;
    if node.genus() < max_genus {
        for child in node.children() {
            tally_subtree(&child, max_genus, tally);
        }
    }
}

/// Counts for every genus 0..=max_genus in one tree pass. With more than
/// one worker the top levels are peeled off breadth-first until the
/// frontier is wide enough to split, then each frontier subtree is counted
/// independently; per-level sums of unsigned counts make the result
/// identical for every worker configuration.
pub fn count_by_genus(max_genus: u32, workers: usize) -> Vec<GenusCount> {
    let workers = workers.max(1);
    let mut tally = vec![0u64; max_genus as usize + 1];
    if workers == 1 {
        tally_subtree(&TreeNode::root(max_genus), max_genus, &mut tally);
    } else {
        let mut frontier = vec![TreeNode::root(max_genus)];
        let mut depth = 0u32;
        while depth < max_genus && frontier.len() < workers * 8 {
            tally[depth as usize] += frontier.len() as u64;
            frontier = frontier.iter().flat_map(TreeNode::children).collect();
            depth += 1;
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("building a thread pool for counting");
        let partials: Vec<Vec<u64>> = pool.install(|| {
            frontier
                .par_iter()
                .map(|node| {
                    let mut t = vec![0u64; max_genus as usize + 1];
                    tally_subtree(node, max_genus, &mut t);
                    t
                })
                .collect()
        });
        for part in partials {
            for (acc, v) in tally.iter_mut().zip(part) {
                *acc += v;
            }
        }
    }
    tally
        .into_iter()
        .enumerate()
        .map(|(g, count)| GenusCount {
            genus: g as u32,
            count,
        })
        .collect()
}

/// Number of gap sequences of one genus, via the tree search.
pub fn tree_count(genus: u32, workers: usize) -> u64 {
    count_by_genus(genus, workers)
        .last()
        .expect("count table has a row per genus")
        .count
}

/// Exhaustive oracle: validate every subset {1} ∪ S with S drawn from
/// {2, ..., 2g-1}, |S| = g-1, in lexicographic order. Single-threaded on
/// purpose; this is the reference the tree search is checked against.
pub fn brute_force_enumerate(
    genus: u32,
    limit: u32,
) -> Result<EnumerationResult, EnumerationError> {
    if genus > limit {
        return Err(EnumerationError::OracleRefused { genus, limit });
    }
    let mut sequences = Vec::new();
    if genus == 0 {
        sequences.push(validate(0, &[]).expect("the empty gap sequence is valid"));
    } else {
        let mut candidate = Vec::with_capacity(genus as usize);
        for combo in (2..=2 * genus - 1).combinations(genus as usize - 1) {
            candidate.clear();
            candidate.push(1);
            candidate.extend_from_slice(&combo);
            if let Ok(seq) = validate(genus, &candidate) {
                sequences.push(seq);
            }
        }
    }
    Ok(EnumerationResult {
        genus,
        count: sequences.len() as u64,
        sequences: Some(sequences),
    })
}

/// Count-only form of the oracle.
pub fn brute_force_count(genus: u32, limit: u32) -> Result<u64, EnumerationError> {
    Ok(brute_force_enumerate(genus, limit)?.count)
}

/// Predicate restricting an enumeration to sequences with a given first
/// non-gap, total weight, or classification label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFilter {
    FirstNonGap(u32),
    Weight(u64),
    Classification(Classification),
}

impl SequenceFilter {
    /// Parse a KEY=VALUE filter; keys are firstNonGap, weight, and
    /// classification.
    pub fn parse(raw: &str) -> Result<SequenceFilter, EnumerationError> {
        let (key, value) =
            raw.split_once('=')
                .ok_or_else(|| EnumerationError::MalformedFilter {
                    raw: raw.to_string(),
                })?;
        match key {
            "firstNonGap" => value
                .parse::<u32>()
                .map(SequenceFilter::FirstNonGap)
                .map_err(|_| EnumerationError::BadFilterValue {
                    key: "firstNonGap",
                    value: value.to_string(),
                }),
            "weight" => value
                .parse::<u64>()
                .map(SequenceFilter::Weight)
                .map_err(|_| EnumerationError::BadFilterValue {
                    key: "weight",
                    value: value.to_string(),
                }),
            "classification" => value
                .parse::<Classification>()
                .map(SequenceFilter::Classification)
                .map_err(|_| EnumerationError::BadFilterValue {
                    key: "classification",
                    value: value.to_string(),
                }),
            _ => Err(EnumerationError::UnknownFilterKey {
                key: key.to_string(),
            }),
        }
    }

    pub fn matches(&self, seq: &GapSequence) -> bool {
        match *self {
            SequenceFilter::FirstNonGap(h) => seq.first_non_gap() == Some(h),
            SequenceFilter::Weight(w) => weight(seq) == w,
            SequenceFilter::Classification(c) => classify(seq).classification == c,
        }
    }
}

/// Enumerate one genus keeping only the sequences the filter accepts.
/// Equivalent to filtering the full enumeration after the fact.
pub fn filter_enumerate(
    genus: u32,
    filter: &SequenceFilter,
) -> Result<EnumerationResult, EnumerationError> {
    if genus < 1 {
        return Err(EnumerationError::FilterRequiresPositiveGenus);
    }
    let sequences: Vec<GapSequence> = tree_walk(genus).filter(|s| filter.matches(s)).collect();
    Ok(EnumerationResult {
        genus,
        count: sequences.len() as u64,
        sequences: Some(sequences),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::hyperelliptic_sequence;

    fn gap_lists(result: &EnumerationResult) -> Vec<Vec<u32>> {
        result
            .sequences
            .as_ref()
            .expect("sequences requested")
            .iter()
            .map(|s| s.gaps().to_vec())
            .collect()
    }

    #[test]
    fn brute_force_small_genus_catalogs() {
        let g3 = brute_force_enumerate(3, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(g3.count, 4);
        assert_eq!(
            gap_lists(&g3),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 5]]
        );

        let g0 = brute_force_enumerate(0, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(g0.count, 1);
        assert_eq!(gap_lists(&g0), vec![Vec::<u32>::new()]);

        let g2 = brute_force_enumerate(2, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(gap_lists(&g2), vec![vec![1, 2], vec![1, 3]]);

        let g1 = brute_force_enumerate(1, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
        assert_eq!(gap_lists(&g1), vec![vec![1]]);
    }

    #[test]
    fn oracle_refuses_above_limit() {
        assert_eq!(
            brute_force_enumerate(15, 14).unwrap_err(),
            EnumerationError::OracleRefused {
                genus: 15,
                limit: 14
            }
        );
        assert!(brute_force_count(9, 8).is_err());
    }

    #[test]
    fn root_and_first_level() {
        let root = TreeNode::root(4);
        assert_eq!(root.genus(), 0);
        assert_eq!(root.frobenius(), None);
        assert_eq!(root.effective_generators(), vec![1]);

        let level1 = root.children();
        assert_eq!(level1.len(), 1);
        let node = &level1[0];
        assert_eq!(node.gaps(), &[1]);
        assert_eq!(node.frobenius(), Some(1));
        assert_eq!(node.effective_generators(), vec![2, 3]);
    }

    #[test]
    fn tree_agrees_with_oracle_small_genus() {
        for genus in 0..=8 {
            let tree = tree_enumerate(genus);
            let oracle = brute_force_enumerate(genus, DEFAULT_BRUTE_FORCE_LIMIT).unwrap();
            assert_eq!(tree.count, oracle.count, "count at genus {genus}");
            assert_eq!(
                gap_lists(&tree),
                gap_lists(&oracle),
                "sequences at genus {genus}"
            );
        }
    }

    #[test]
    fn walk_emits_lexicographically() {
        let lists = gap_lists(&tree_enumerate(6));
        for pair in lists.windows(2) {
            assert!(pair[0] < pair[1], "{:?} !< {:?}", pair[0], pair[1]);
        }
    }

    #[test]
    fn count_table_anchors() {
        let rows = count_by_genus(5, 1);
        let expected = [(0, 1), (1, 1), (2, 2), (3, 4), (4, 7), (5, 12)];
        assert_eq!(rows.len(), expected.len());
        for (row, (genus, count)) in rows.iter().zip(expected) {
            assert_eq!((row.genus, row.count), (genus, count));
        }
        assert_eq!(tree_count(3, 1), 4);
        assert_eq!(tree_count(0, 1), 1);
    }

    #[test]
    fn worker_count_does_not_change_counts() {
        let serial = count_by_genus(9, 1);
        for workers in [2, 4, 8] {
            assert_eq!(count_by_genus(9, workers), serial, "workers = {workers}");
        }
        assert_eq!(tree_count(9, 3), serial.last().unwrap().count);
    }

    #[test]
    fn removing_the_largest_gap_gives_the_parent() {
        for genus in 1..=7u32 {
            for seq in tree_walk(genus) {
                let parent_gaps = &seq.gaps()[..(genus - 1) as usize];
                assert!(
                    validate(genus - 1, parent_gaps).is_ok(),
                    "parent of {:?} invalid",
                    seq.gaps()
                );
            }
        }
    }

    #[test]
    fn one_all_odd_sequence_per_genus() {
        for genus in 2..=8 {
            let hits = filter_enumerate(genus, &SequenceFilter::FirstNonGap(2)).unwrap();
            assert_eq!(hits.count, 1, "genus {genus}");
            assert_eq!(
                hits.sequences.unwrap()[0].gaps(),
                hyperelliptic_sequence(genus).unwrap().gaps()
            );
        }
    }

    #[test]
    fn filter_examples() {
        let h2 = filter_enumerate(3, &SequenceFilter::FirstNonGap(2)).unwrap();
        assert_eq!(gap_lists(&h2), vec![vec![1, 3, 5]]);

        let w0 = filter_enumerate(3, &SequenceFilter::Weight(0)).unwrap();
        assert_eq!(gap_lists(&w0), vec![vec![1, 2, 3]]);

        let exc = filter_enumerate(
            4,
            &SequenceFilter::Classification(Classification::Exceptional),
        )
        .unwrap();
        assert_eq!(gap_lists(&exc), vec![vec![1, 2, 3, 5]]);
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(
            SequenceFilter::parse("firstNonGap=2").unwrap(),
            SequenceFilter::FirstNonGap(2)
        );
        assert_eq!(
            SequenceFilter::parse("weight=3").unwrap(),
            SequenceFilter::Weight(3)
        );
        assert_eq!(
            SequenceFilter::parse("classification=hyperelliptic").unwrap(),
            SequenceFilter::Classification(Classification::Hyperelliptic)
        );
        assert!(matches!(
            SequenceFilter::parse("colour=red").unwrap_err(),
            EnumerationError::UnknownFilterKey { .. }
        ));
        assert!(matches!(
            SequenceFilter::parse("weight").unwrap_err(),
            EnumerationError::MalformedFilter { .. }
        ));
        assert!(matches!(
            SequenceFilter::parse("weight=banana").unwrap_err(),
            EnumerationError::BadFilterValue { .. }
        ));
        assert_eq!(
            filter_enumerate(0, &SequenceFilter::Weight(0)).unwrap_err(),
            EnumerationError::FilterRequiresPositiveGenus
        );
    }

    #[test]
    fn filtered_counts_match_post_hoc_filtering() {
        for genus in 1..=6u32 {
            let all = tree_enumerate(genus);
            for filter in [
                SequenceFilter::FirstNonGap(2),
                SequenceFilter::Weight(1),
                SequenceFilter::Classification(Classification::GenericWeierstrass),
            ] {
                let filtered = filter_enumerate(genus, &filter).unwrap();
                let expected: Vec<Vec<u32>> = all
                    .sequences
                    .as_ref()
                    .unwrap()
                    .iter()
                    .filter(|s| filter.matches(s))
                    .map(|s| s.gaps().to_vec())
                    .collect();
                assert_eq!(gap_lists(&filtered), expected);
                assert_eq!(filtered.count as usize, expected.len());
            }
        }
    }
}
