//! Classical comparison aligners.
//!
//! [`clustalw_lite`] follows the three ClustalW stages with simplified
//! scoring: all-pairs edit distances, a neighbour-joining guide tree, and
//! progressive profile alignment along the tree. There are no substitution
//! matrices, affine gaps or sequence weights. Its cost is dominated by the
//! n(n-1)/2 pairwise distances.

mod guide_tree;
mod pairwise;
mod progressive;

pub use guide_tree::{
    build_guide_tree, similarity_matrix, similarity_matrix_with, DistanceMatrix, GuideTree, Join,
};
pub use pairwise::{levenshtein, needleman_wunsch, PairwiseAlignment, Scoring};
pub use progressive::progressive_align;

use crate::corpus::Corpus;
use crate::error::Result;
use crate::msalign::Alignment;

/// Distance matrix, guide tree, progressive alignment.
pub fn clustalw_lite(corpus: &Corpus, scoring: &Scoring) -> Result<Alignment> {
    let matrix = similarity_matrix(corpus)?;
    let tree = build_guide_tree(&matrix)?;
    Ok(Alignment::from_rows(progressive_align(
        corpus, &tree, scoring,
    )?))
}

/// Progressive alignment along a caterpillar tree in input order: the
/// second sequence is aligned to the first, the third to that profile, and
/// so on. No distance matrix is computed, so the cost is linear in the
/// number of sequences.
pub fn nw_pairwise(corpus: &Corpus, scoring: &Scoring) -> Result<Alignment> {
    corpus.require(2)?;
    let n = corpus.len();
    let joins = (1..n)
        .map(|k| Join {
            left: if k == 1 { 0 } else { n + k - 2 },
            right: k,
            left_len: 0.0,
            right_len: 0.0,
        })
        .collect();
    let tree = GuideTree { leaves: n, joins };
    Ok(Alignment::from_rows(progressive_align(
        corpus, &tree, scoring,
    )?))
}
