//! Divide-and-conquer anchor alignment.
//!
//! The aligner extracts every multi sub-word from the suffix tree, then
//! repeatedly: picks an anchor (one occurrence of a common sub-word per
//! sequence), drops occurrences that fully overlap it, trims those that
//! partially overlap it, and splits the remaining collection into the parts
//! lying entirely left and entirely right of the anchor. Each part is
//! aligned independently until no common sub-word remains.
//!
//! The result is an [`AnchorChain`]; [`render`] turns it into gapped rows and
//! [`regex_skeleton`] into a message prototype.

mod overlap;
mod render;
mod skeleton;
mod strategy;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use overlap::{remove_full_overlaps, restrict, trim_partial_overlaps};
pub use render::{render, render_rows, Alignment};
pub use skeleton::{compile_skeleton, regex_skeleton};
pub use strategy::select_anchor;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::gst::{display_bytes, Gst, MultiSubWord};

/// Per-sequence half-open index intervals `[lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    bounds: Vec<(usize, usize)>,
}

impl Segment {
    pub fn new(bounds: Vec<(usize, usize)>) -> Self {
        debug_assert!(bounds.iter().all(|&(lo, hi)| lo <= hi));
        Segment { bounds }
    }

    /// Every index of every sequence.
    pub fn whole(corpus: &Corpus) -> Self {
        Segment {
            bounds: corpus.iter().map(|s| (0, s.len())).collect(),
        }
    }

    pub fn bounds(&self, seq: usize) -> (usize, usize) {
        self.bounds[seq]
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// True when `[start, start + len)` lies inside this segment for `seq`.
    pub fn contains(&self, seq: usize, start: usize, len: usize) -> bool {
        let (lo, hi) = self.bounds[seq];
        lo <= start && start + len <= hi
    }

    /// The parts strictly left and strictly right of `anchor`.
    pub fn split(&self, anchor: &Anchor) -> (Segment, Segment) {
        let (left, right) = self
            .bounds
            .iter()
            .enumerate()
            .map(|(k, &(lo, hi))| ((lo, anchor.starts[k]), (anchor.end(k), hi)))
            .unzip();
        (Segment { bounds: left }, Segment { bounds: right })
    }
}

/// One common sub-sequence: a value and exactly one start per sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Anchor {
    pub value: Vec<u8>,
    pub starts: Vec<usize>,
}

impl Anchor {
    pub fn new(value: impl Into<Vec<u8>>, starts: Vec<usize>) -> Self {
        Anchor {
            value: value.into(),
            starts,
        }
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    /// Exclusive end of the anchor in sequence `seq`.
    pub fn end(&self, seq: usize) -> usize {
        self.starts[seq] + self.value.len()
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{{", display_bytes(&self.value))?;
        for (k, s) in self.starts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}@{s}")?;
        }
        f.write_str("}")
    }
}

/// Anchors ordered left to right; the skeleton of an alignment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnchorChain {
    pub anchors: Vec<Anchor>,
}

impl AnchorChain {
    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Anchor> {
        self.anchors.iter()
    }

    /// Checks that every anchor spells its value in every sequence and that
    /// anchors are disjoint and identically ordered in each sequence.
    pub fn validate(&self, corpus: &Corpus) -> Result<()> {
        let n = corpus.len();
        let mut prev_end = vec![0usize; n];
        for (i, a) in self.anchors.iter().enumerate() {
            if a.value.is_empty() {
                return Err(Error::InvalidChain(format!("anchor {i} is empty")));
            }
            if a.starts.len() != n {
                return Err(Error::InvalidChain(format!(
                    "anchor {i} has {} starts for {n} sequences",
                    a.starts.len()
                )));
            }
            for (k, seq) in corpus.iter().enumerate() {
                let s = a.starts[k];
                if s < prev_end[k] {
                    return Err(Error::InvalidChain(format!(
                        "anchor {i} overlaps or precedes its predecessor in sequence {k}"
                    )));
                }
                if seq.bytes().get(s..a.end(k)) != Some(a.value.as_slice()) {
                    return Err(Error::InvalidChain(format!(
                        "anchor {i} does not match sequence {k} at {s}"
                    )));
                }
                prev_end[k] = a.end(k);
            }
        }
        Ok(())
    }

    /// Total length of all anchor values.
    pub fn overlap_chars(&self) -> usize {
        self.anchors.iter().map(Anchor::len).sum()
    }
}

impl<'a> IntoIterator for &'a AnchorChain {
    type Item = &'a Anchor;
    type IntoIter = std::slice::Iter<'a, Anchor>;

    fn into_iter(self) -> Self::IntoIter {
        self.anchors.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct AnchorJson {
    value: String,
    starts: Vec<usize>,
}

impl Serialize for AnchorChain {
    /// A list of `{value: <hex>, starts: [..]}` objects.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.anchors.iter().map(|a| AnchorJson {
            value: hex::encode(&a.value),
            starts: a.starts.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for AnchorChain {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<AnchorJson>::deserialize(deserializer)?;
        let anchors = raw
            .into_iter()
            .map(|a| {
                hex::decode(&a.value)
                    .map(|value| Anchor::new(value, a.starts))
                    .map_err(serde::de::Error::custom)
            })
            .collect::<Result<_, _>>()?;
        Ok(AnchorChain { anchors })
    }
}

/// Anchor selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    /// Longest multi sub-word, left-most occurrence in each sequence.
    #[value(name = "biggest_left_most")]
    BiggestLeftMost,
    /// Among the n longest multi sub-words, the occurrence combination with
    /// the most consistent relative start positions.
    #[value(name = "min_variance")]
    MinVariance,
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyKind::BiggestLeftMost => "biggest_left_most",
            StrategyKind::MinVariance => "min_variance",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyConfig {
    pub kind: StrategyKind,
    /// Candidate pool size for `MinVariance`.
    pub n_largest: usize,
    /// Shorter values are never chosen as anchors.
    pub min_anchor_len: usize,
    /// `MinVariance` skips any candidate with more occurrence combinations.
    pub combination_cap: u64,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        StrategyConfig {
            kind: StrategyKind::BiggestLeftMost,
            n_largest: 9,
            min_anchor_len: 1,
            combination_cap: 10_000,
        }
    }
}

impl StrategyConfig {
    pub fn min_variance(n_largest: usize) -> Self {
        StrategyConfig {
            kind: StrategyKind::MinVariance,
            n_largest,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_largest == 0 {
            return Err(Error::InvalidConfig("n_largest must be at least 1".into()));
        }
        if self.min_anchor_len == 0 {
            return Err(Error::InvalidConfig(
                "min_anchor_len must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Counters collected during one alignment.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AlignStats {
    /// Multi sub-words extracted from the suffix tree.
    pub msw_count: usize,
    /// Sub-problems visited, including ones that found no anchor.
    pub subproblems: usize,
}

enum Task {
    Solve(Segment, Vec<MultiSubWord>),
    Emit(Anchor),
}

/// Aligns every sequence of `corpus`.
pub fn align(corpus: &Corpus, cfg: &StrategyConfig) -> Result<AnchorChain> {
    align_with_stats(corpus, cfg).map(|(chain, _)| chain)
}

pub fn align_with_stats(
    corpus: &Corpus,
    cfg: &StrategyConfig,
) -> Result<(AnchorChain, AlignStats)> {
    corpus.require(2)?;
    cfg.validate()?;
    let msws = Gst::build(corpus)?.extract_msws();
    let lens: Vec<usize> = corpus.iter().map(|s| s.len()).collect();

    let mut stats = AlignStats {
        msw_count: msws.len(),
        subproblems: 0,
    };
    let mut chain = AnchorChain::default();
    // Explicit stack; left sub-problems are pushed last so anchors come out
    // in left-to-right order.
    let mut tasks = vec![Task::Solve(Segment::whole(corpus), msws)];
    while let Some(task) = tasks.pop() {
        let (segment, msws) = match task {
            Task::Emit(anchor) => {
                chain.anchors.push(anchor);
                continue;
            }
            Task::Solve(segment, msws) => (segment, msws),
        };
        stats.subproblems += 1;
        let Some(anchor) = select_anchor(&msws, &segment, cfg, &lens) else {
            continue;
        };
        let msws = remove_full_overlaps(msws, &anchor);
        let msws = trim_partial_overlaps(msws, &anchor);
        let (left, right) = segment.split(&anchor);
        let left_msws = restrict(msws.clone(), &left);
        let right_msws = restrict(msws, &right);
        tasks.push(Task::Solve(right, right_msws));
        tasks.push(Task::Emit(anchor));
        tasks.push(Task::Solve(left, left_msws));
    }
    debug_assert!(chain.validate(corpus).is_ok());
    Ok((chain, stats))
}
