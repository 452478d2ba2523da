//! Generalized suffix tree with colour sets, and multi sub-word extraction.
//!
//! Node model: every suffix ends at a branching node, and the suffix itself
//! is represented by a label-only leaf hanging off that node. A branching
//! node therefore has at least one leaf or at least two branching children.
//! The tree for `Banana` has the root, six further branching nodes
//! (`a`, `ana`, `anana`, `na`, `nana`, `Banana`) and six leaves.
//!
//! Branching node ids are assigned in depth-first pre-order with children
//! visited by ascending first byte. That order is the canonical collection
//! order of multi sub-words.

mod colour;
#[cfg(test)]
pub(crate) mod naive;
mod ukkonen;

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

pub use colour::ColourSet;

use crate::corpus::Corpus;
use crate::error::Result;

/// Index of a branching node. The root is `NodeId(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);
}

/// A suffix: sequence colour plus start index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LeafLabel {
    pub seq: usize,
    pub start: usize,
}

/// An edge label as a reference into the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeLabel {
    pub seq: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone)]
pub struct Node {
    label: EdgeLabel,
    depth: usize,
    children: Vec<(u8, NodeId)>,
    leaves: Vec<LeafLabel>,
    colours: ColourSet,
    /// One occurrence of the path label, used to spell it.
    witness: LeafLabel,
    /// Exclusive end of this node's subtree in pre-order id space.
    subtree_end: usize,
}

impl Node {
    pub fn label(&self) -> EdgeLabel {
        self.label
    }

    /// Length of the path label.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Branching children keyed by the first byte of their edge label, ascending.
    pub fn children(&self) -> &[(u8, NodeId)] {
        &self.children
    }

    /// Suffixes ending exactly at this node.
    pub fn leaves(&self) -> &[LeafLabel] {
        &self.leaves
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn child(&self, first: u8) -> Option<NodeId> {
        self.children
            .binary_search_by_key(&first, |&(b, _)| b)
            .ok()
            .map(|i| self.children[i].1)
    }
}

/// Generalized suffix tree over every sequence of a corpus.
#[derive(Debug)]
pub struct Gst<'c> {
    corpus: &'c Corpus,
    nodes: Vec<Node>,
    leaf_count: usize,
}

impl<'c> Gst<'c> {
    /// Builds the tree in time linear in the total corpus length.
    pub fn build(corpus: &'c Corpus) -> Result<Self> {
        corpus.require(1)?;
        let n_seq = corpus.len();
        let total = corpus.total_len();

        let mut text = Vec::with_capacity(total + n_seq);
        let mut seq_of = Vec::with_capacity(total + n_seq);
        let mut offsets = Vec::with_capacity(n_seq);
        for (i, s) in corpus.iter().enumerate() {
            offsets.push(text.len());
            text.extend(s.bytes().iter().map(|&b| b as u32));
            text.push(256 + i as u32);
            seq_of.extend(std::iter::repeat_n(i as u32, s.len() + 1));
        }
        let raw = ukkonen::build(&text);

        let to_label = |pos: usize, len: usize| {
            let seq = seq_of[pos] as usize;
            EdgeLabel {
                seq,
                start: pos - offsets[seq],
                len,
            }
        };

        let mut nodes: Vec<Node> = Vec::with_capacity(raw.nodes.len());
        let new_node = |nodes: &mut Vec<Node>, label: EdgeLabel, depth: usize| {
            nodes.push(Node {
                label,
                depth,
                children: Vec::new(),
                leaves: Vec::new(),
                colours: ColourSet::empty(n_seq),
                witness: LeafLabel { seq: 0, start: 0 },
                subtree_end: 0,
            });
            NodeId(nodes.len() - 1)
        };
        new_node(
            &mut nodes,
            EdgeLabel {
                seq: 0,
                start: 0,
                len: 0,
            },
            0,
        );

        let mut leaf_count = 0;
        // (raw node, new parent)
        let mut stack: Vec<(usize, NodeId)> = raw.nodes[ukkonen::ROOT]
            .children
            .iter()
            .rev()
            .map(|&(_, c)| (c, NodeId::ROOT))
            .collect();
        while let Some((raw_id, parent)) = stack.pop() {
            let rn = &raw.nodes[raw_id];
            let parent_depth = nodes[parent.0].depth;
            if !rn.is_leaf() {
                let len = raw.end(raw_id) - rn.start;
                let id = new_node(&mut nodes, to_label(rn.start, len), parent_depth + len);
                nodes[parent.0].children.push((text[rn.start] as u8, id));
                stack.extend(rn.children.iter().rev().map(|&(_, c)| (c, id)));
                continue;
            }

            let suffix_pos = rn.start - parent_depth;
            if text[suffix_pos] >= 256 {
                // the empty suffix of some sequence
                continue;
            }
            let seq = seq_of[suffix_pos] as usize;
            let leaf = LeafLabel {
                seq,
                start: suffix_pos - offsets[seq],
            };
            leaf_count += 1;
            let sentinel = offsets[seq] + corpus.sequences()[seq].len();
            if rn.start == sentinel {
                nodes[parent.0].leaves.push(leaf);
            } else {
                let len = sentinel - rn.start;
                let id = new_node(&mut nodes, to_label(rn.start, len), parent_depth + len);
                nodes[parent.0].children.push((text[rn.start] as u8, id));
                nodes[id.0].leaves.push(leaf);
            }
        }

        // Children always carry larger pre-order ids than their parent.
        for id in (0..nodes.len()).rev() {
            let (head, tail) = nodes.split_at_mut(id + 1);
            let node = &mut head[id];
            let mut end = id + 1;
            let mut witness = node.leaves.first().copied();
            for leaf in &node.leaves {
                node.colours.insert(leaf.seq);
            }
            for &(_, child) in &node.children {
                let child = &tail[child.0 - id - 1];
                node.colours.union_with(&child.colours);
                end = end.max(child.subtree_end);
                witness.get_or_insert(child.witness);
            }
            node.subtree_end = end;
            node.witness = witness.expect("branching node without leaves below");
        }

        Ok(Gst {
            corpus,
            nodes,
            leaf_count,
        })
    }

    pub fn corpus(&self) -> &'c Corpus {
        self.corpus
    }

    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    /// All branching nodes in pre-order, root first.
    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> {
        self.nodes.iter().enumerate().map(|(i, n)| (NodeId(i), n))
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    /// Number of branching nodes, not counting the root.
    pub fn branching_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn edge_label(&self, id: NodeId) -> &'c [u8] {
        let l = self.nodes[id.0].label;
        &self.corpus.sequences()[l.seq].bytes()[l.start..l.start + l.len]
    }

    /// The concatenated edge labels from the root to `id`.
    pub fn path_label(&self, id: NodeId) -> &'c [u8] {
        let n = &self.nodes[id.0];
        let w = n.witness;
        &self.corpus.sequences()[w.seq].bytes()[w.start..w.start + n.depth]
    }

    /// A node is fully coloured when its colour set equals the root's.
    pub fn is_fully_coloured(&self, id: NodeId) -> bool {
        self.nodes[id.0].colours == self.nodes[0].colours
    }

    /// The branching node whose path label is exactly `word`, if any.
    pub fn find_node(&self, word: &[u8]) -> Option<NodeId> {
        let mut node = NodeId::ROOT;
        let mut pos = 0;
        while pos < word.len() {
            let child = self.nodes[node.0].child(word[pos])?;
            let edge = self.edge_label(child);
            if word.len() - pos < edge.len() || word[pos..pos + edge.len()] != *edge {
                return None;
            }
            pos += edge.len();
            node = child;
        }
        Some(node)
    }

    /// All suffixes in the subtree rooted at `id`.
    pub fn subtree_leaves(&self, id: NodeId) -> impl Iterator<Item = LeafLabel> + '_ {
        self.nodes[id.0..self.nodes[id.0].subtree_end]
            .iter()
            .flat_map(|n| n.leaves.iter().copied())
    }

    fn fully_coloured_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (1..self.nodes.len())
            .map(NodeId)
            .filter(|&id| self.is_fully_coloured(id))
    }

    /// Path labels of every fully coloured non-root branching node, in
    /// collection order.
    pub fn fully_coloured_values(&self) -> Vec<&'c [u8]> {
        self.fully_coloured_ids()
            .map(|id| self.path_label(id))
            .collect()
    }

    /// One multi sub-word per fully coloured branching node, in pre-order.
    pub fn extract_msws(&self) -> Vec<MultiSubWord> {
        let n_seq = self.corpus.len();
        self.fully_coloured_ids()
            .map(|id| {
                let mut occurrences = vec![Vec::new(); n_seq];
                for leaf in self.subtree_leaves(id) {
                    occurrences[leaf.seq].push(leaf.start);
                }
                for occ in &mut occurrences {
                    occ.sort_unstable();
                }
                MultiSubWord {
                    value: self.path_label(id).to_vec(),
                    occurrences,
                }
            })
            .collect()
    }

    /// Summary used by the `gst` debug command.
    pub fn report(&self) -> GstReport {
        let msws = self.extract_msws();
        GstReport {
            sequences: self.corpus.len(),
            total_length: self.corpus.total_len(),
            leaf_count: self.leaf_count,
            branching_count: self.branching_count(),
            fully_coloured: self
                .fully_coloured_values()
                .iter()
                .map(|v| display_bytes(v))
                .collect(),
            combinations: count_combinations(&msws).to_string(),
            msws: msws
                .iter()
                .map(|m| MswEntry {
                    value: display_bytes(&m.value),
                    value_hex: hex::encode(&m.value),
                    occurrences: m.occurrences.clone(),
                    listing: m.to_string(),
                })
                .collect(),
        }
    }
}

/// A common sub-word together with all of its start indices in every
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSubWord {
    pub(crate) value: Vec<u8>,
    /// Indexed by sequence colour; each list strictly increasing.
    pub(crate) occurrences: Vec<Vec<usize>>,
}

impl MultiSubWord {
    /// Builds a multi sub-word, sorting and deduplicating each occurrence list.
    pub fn new(value: Vec<u8>, mut occurrences: Vec<Vec<usize>>) -> Self {
        for occ in &mut occurrences {
            occ.sort_unstable();
            occ.dedup();
        }
        MultiSubWord { value, occurrences }
    }

    pub fn value(&self) -> &[u8] {
        &self.value
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    pub fn occurrences(&self, seq: usize) -> &[usize] {
        &self.occurrences[seq]
    }

    pub fn all_occurrences(&self) -> &[Vec<usize>] {
        &self.occurrences
    }

    /// True when every sequence has at least one occurrence.
    pub fn is_common(&self) -> bool {
        self.occurrences.iter().all(|o| !o.is_empty())
    }

    /// Number of ways to pick one occurrence per sequence.
    pub fn combinations(&self) -> BigUint {
        self.occurrences
            .iter()
            .map(|o| BigUint::from(o.len()))
            .product()
    }
}

impl fmt::Display for MultiSubWord {
    /// Bracket notation, e.g. `[a – {0@1 0@3 1@3}]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} – {{", display_bytes(&self.value))?;
        let mut first = true;
        for (seq, occ) in self.occurrences.iter().enumerate() {
            for start in occ {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{seq}@{start}")?;
            }
        }
        f.write_str("}]")
    }
}

/// Total number of common sub-sequences spanned by a collection: the sum
/// over multi sub-words of the product of per-sequence occurrence counts.
pub fn count_combinations(msws: &[MultiSubWord]) -> BigUint {
    msws.iter().map(MultiSubWord::combinations).sum()
}

/// Printable ASCII verbatim, everything else as `\xHH`.
pub fn display_bytes(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len());
    for &b in bytes {
        if (0x20..0x7f).contains(&b) && b != b'\\' {
            s.push(b as char);
        } else {
            s.push_str(&format!("\\x{b:02x}"));
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct MswEntry {
    pub value: String,
    pub value_hex: String,
    pub occurrences: Vec<Vec<usize>>,
    pub listing: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GstReport {
    pub sequences: usize,
    pub total_length: usize,
    pub leaf_count: usize,
    pub branching_count: usize,
    pub fully_coloured: Vec<String>,
    pub msws: Vec<MswEntry>,
    /// Decimal string; the count routinely exceeds 64 bits.
    pub combinations: String,
}

impl fmt::Display for GstReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "sequences: {}  total length: {}",
            self.sequences, self.total_length
        )?;
        writeln!(
            f,
            "leaves: {}  branching nodes (excluding root): {}",
            self.leaf_count, self.branching_count
        )?;
        writeln!(f, "fully coloured values: {}", self.fully_coloured.len())?;
        for v in &self.fully_coloured {
            writeln!(f, "  {v}")?;
        }
        writeln!(f, "multi sub-words: {}", self.msws.len())?;
        for m in &self.msws {
            writeln!(f, "  {}", m.listing)?;
        }
        writeln!(f, "combinations: {}", self.combinations)
    }
}
