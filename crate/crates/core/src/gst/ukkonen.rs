//! Ukkonen's online suffix tree construction over a `u32` alphabet.
//!
//! The generalized tree is built over the concatenation `s0 $0 s1 $1 ...`
//! where every `$i` is a distinct symbol above the byte range. Because each
//! sentinel occurs exactly once, no internal node's path label contains one,
//! so the internal nodes are exactly those of the generalized tree; leaf
//! edges are cut at their first sentinel by the caller.

pub(crate) const ROOT: usize = 0;
const NONE: usize = usize::MAX;
/// Marks a leaf edge whose end follows the growing text.
const OPEN: usize = usize::MAX;

#[derive(Debug)]
pub(crate) struct RawNode {
    pub start: usize,
    end: usize,
    link: usize,
    /// Sorted by symbol.
    pub children: Vec<(u32, usize)>,
}

impl RawNode {
    fn new(start: usize, end: usize) -> Self {
        RawNode {
            start,
            end,
            link: ROOT,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    fn child(&self, sym: u32) -> Option<usize> {
        self.children
            .binary_search_by_key(&sym, |&(s, _)| s)
            .ok()
            .map(|i| self.children[i].1)
    }

    fn set_child(&mut self, sym: u32, node: usize) {
        match self.children.binary_search_by_key(&sym, |&(s, _)| s) {
            Ok(i) => self.children[i].1 = node,
            Err(i) => self.children.insert(i, (sym, node)),
        }
    }
}

pub(crate) struct RawTree {
    pub nodes: Vec<RawNode>,
    pub text_len: usize,
}

impl RawTree {
    /// Exclusive end of a node's incoming edge.
    pub fn end(&self, node: usize) -> usize {
        match self.nodes[node].end {
            OPEN => self.text_len,
            e => e,
        }
    }
}

/// Builds the suffix tree of `text`. The last symbol must be unique in the
/// text so that every suffix ends at a leaf.
pub(crate) fn build(text: &[u32]) -> RawTree {
    let mut nodes = Vec::with_capacity(2 * text.len() + 1);
    nodes.push(RawNode::new(0, 0));

    let mut active_node = ROOT;
    let mut active_edge = 0usize;
    let mut active_len = 0usize;
    let mut remainder = 0usize;

    for pos in 0..text.len() {
        remainder += 1;
        let mut pending_link = NONE;
        let sym = text[pos];

        while remainder > 0 {
            if active_len == 0 {
                active_edge = pos;
            }
            let edge_sym = text[active_edge];
            match nodes[active_node].child(edge_sym) {
                None => {
                    let leaf = nodes.len();
                    nodes.push(RawNode::new(pos, OPEN));
                    nodes[active_node].set_child(edge_sym, leaf);
                    if pending_link != NONE {
                        nodes[pending_link].link = active_node;
                        pending_link = NONE;
                    }
                }
                Some(next) => {
                    let next_start = nodes[next].start;
                    let next_end = match nodes[next].end {
                        OPEN => pos + 1,
                        e => e,
                    };
                    let edge_len = next_end - next_start;
                    if active_len >= edge_len {
                        // walk down
                        active_edge += edge_len;
                        active_len -= edge_len;
                        active_node = next;
                        continue;
                    }
                    if text[next_start + active_len] == sym {
                        if pending_link != NONE && active_node != ROOT {
                            nodes[pending_link].link = active_node;
                        }
                        active_len += 1;
                        break;
                    }
                    let split = nodes.len();
                    nodes.push(RawNode::new(next_start, next_start + active_len));
                    nodes[active_node].set_child(edge_sym, split);
                    let leaf = nodes.len();
                    nodes.push(RawNode::new(pos, OPEN));
                    nodes[split].set_child(sym, leaf);
                    nodes[next].start += active_len;
                    let moved_sym = text[nodes[next].start];
                    nodes[split].set_child(moved_sym, next);
                    if pending_link != NONE {
                        nodes[pending_link].link = split;
                    }
                    pending_link = split;
                }
            }
            remainder -= 1;
            if active_node == ROOT && active_len > 0 {
                active_len -= 1;
                active_edge = pos + 1 - remainder;
            } else if active_node != ROOT {
                active_node = nodes[active_node].link;
            }
        }
    }

    RawTree {
        nodes,
        text_len: text.len(),
    }
}
