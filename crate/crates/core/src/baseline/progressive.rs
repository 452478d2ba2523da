use super::pairwise::{global_dp, Scoring, Step};
use super::GuideTree;
use crate::corpus::Corpus;
use crate::error::{Error, Result};

/// Rows of a partial alignment plus per-column symbol counts.
struct Profile {
    /// (sequence id, gapped row)
    rows: Vec<(usize, Vec<Option<u8>>)>,
    columns: Vec<Column>,
}

/// Sparse symbol counts of one column, sorted by symbol.
struct Column {
    counts: Vec<(u8, i64)>,
    residues: i64,
}

impl Column {
    fn of(rows: &[(usize, Vec<Option<u8>>)], c: usize) -> Self {
        let mut counts: Vec<(u8, i64)> = Vec::new();
        for (_, r) in rows {
            if let Some(b) = r[c] {
                match counts.binary_search_by_key(&b, |&(s, _)| s) {
                    Ok(i) => counts[i].1 += 1,
                    Err(i) => counts.insert(i, (b, 1)),
                }
            }
        }
        let residues = counts.iter().map(|&(_, k)| k).sum();
        Column { counts, residues }
    }

    /// Number of residue pairs with equal symbols across two columns.
    fn matching_pairs(&self, other: &Column) -> i64 {
        let (mut i, mut j, mut total) = (0, 0, 0);
        while i < self.counts.len() && j < other.counts.len() {
            let (a, x) = self.counts[i];
            let (b, y) = other.counts[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    total += x * y;
                    i += 1;
                    j += 1;
                }
            }
        }
        total
    }
}

impl Profile {
    fn leaf(id: usize, bytes: &[u8]) -> Self {
        Profile::new(vec![(id, bytes.iter().map(|&b| Some(b)).collect())])
    }

    fn new(rows: Vec<(usize, Vec<Option<u8>>)>) -> Self {
        let width = rows[0].1.len();
        let columns = (0..width).map(|c| Column::of(&rows, c)).collect();
        Profile { rows, columns }
    }

    fn depth(&self) -> i64 {
        self.rows.len() as i64
    }
}

/// Aligns two profiles with Needleman-Wunsch over columns. Two columns
/// score the sum over all residue pairs across them: substitution for
/// residue/residue, `gap` for residue/gap, zero for gap/gap. That is the
/// expected pairwise score scaled by the (constant) number of row pairs,
/// so it ranks alignments identically while staying integral. Existing gaps
/// are kept ("once a gap, always a gap").
fn merge(a: Profile, b: Profile, s: &Scoring) -> Profile {
    let (da, db) = (a.depth(), b.depth());
    let sub = |i: usize, j: usize| {
        let (x, y) = (&a.columns[i], &b.columns[j]);
        let same = x.matching_pairs(y);
        let pairs = x.residues * y.residues;
        s.match_score * same
            + s.mismatch * (pairs - same)
            + s.gap * (x.residues * (db - y.residues) + (da - x.residues) * y.residues)
    };
    let gap_a = |i: usize| s.gap * a.columns[i].residues * db;
    let gap_b = |j: usize| s.gap * b.columns[j].residues * da;
    let (_, steps) = global_dp(a.columns.len(), b.columns.len(), sub, gap_a, gap_b);

    let width = steps.len();
    let mut rows: Vec<(usize, Vec<Option<u8>>)> = a
        .rows
        .iter()
        .chain(&b.rows)
        .map(|(id, _)| (*id, Vec::with_capacity(width)))
        .collect();
    let split = a.rows.len();
    let (mut i, mut j) = (0, 0);
    for step in steps {
        let (take_a, take_b) = match step {
            Step::Diagonal => (true, true),
            Step::Up => (true, false),
            Step::Left => (false, true),
        };
        for (k, (_, src)) in a.rows.iter().enumerate() {
            rows[k].1.push(if take_a { src[i] } else { None });
        }
        for (k, (_, src)) in b.rows.iter().enumerate() {
            rows[split + k].1.push(if take_b { src[j] } else { None });
        }
        i += usize::from(take_a);
        j += usize::from(take_b);
    }
    Profile::new(rows)
}

/// Merges profiles from the leaves to the root of `tree`. Rows come back in
/// corpus order.
pub fn progressive_align(
    corpus: &Corpus,
    tree: &GuideTree,
    scoring: &Scoring,
) -> Result<Vec<Vec<Option<u8>>>> {
    if tree.leaves != corpus.len() || tree.joins.len() + 1 != tree.leaves {
        return Err(Error::InvalidTree(format!(
            "tree has {} leaves and {} joins for {} sequences",
            tree.leaves,
            tree.joins.len(),
            corpus.len()
        )));
    }
    let mut nodes: Vec<Option<Profile>> = corpus
        .iter()
        .enumerate()
        .map(|(i, s)| Some(Profile::leaf(i, s.bytes())))
        .collect();
    for (k, join) in tree.joins.iter().enumerate() {
        let mut take = |x: usize| {
            if x >= tree.leaves + k {
                return Err(Error::InvalidTree(format!(
                    "join {k} refers to later node {x}"
                )));
            }
            nodes[x]
                .take()
                .ok_or_else(|| Error::InvalidTree(format!("node {x} used twice")))
        };
        let left = take(join.left)?;
        let right = take(join.right)?;
        nodes.push(Some(merge(left, right, scoring)));
    }
    let root = nodes.pop().flatten().expect("root profile");
    let mut rows = root.rows;
    rows.sort_by_key(|(id, _)| *id);
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}
