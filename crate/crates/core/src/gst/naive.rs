//! Quadratic suffix-by-suffix insertion builder. Correctness oracle for the
//! linear-time construction; test builds only.

use std::collections::BTreeMap;

use crate::corpus::Corpus;

struct NaiveNode {
    /// (seq, start, len) into the corpus
    label: (usize, usize, usize),
    children: BTreeMap<u8, usize>,
    leaves: Vec<(usize, usize)>,
}

/// Per branching node: path label -> (leaves ending there, first bytes of children).
pub(crate) type Canonical = BTreeMap<Vec<u8>, (Vec<(usize, usize)>, Vec<u8>)>;

pub(crate) fn build_canonical(corpus: &Corpus) -> Canonical {
    let seqs: Vec<&[u8]> = corpus.iter().map(|s| s.bytes()).collect();
    let mut nodes = vec![NaiveNode {
        label: (0, 0, 0),
        children: BTreeMap::new(),
        leaves: Vec::new(),
    }];

    for (k, s) in seqs.iter().enumerate() {
        for i in 0..s.len() {
            let mut node = 0;
            let mut pos = i;
            loop {
                if pos == s.len() {
                    nodes[node].leaves.push((k, i));
                    break;
                }
                let Some(&child) = nodes[node].children.get(&s[pos]) else {
                    nodes.push(NaiveNode {
                        label: (k, pos, s.len() - pos),
                        children: BTreeMap::new(),
                        leaves: vec![(k, i)],
                    });
                    let id = nodes.len() - 1;
                    nodes[node].children.insert(s[pos], id);
                    break;
                };
                let (ls, lstart, llen) = nodes[child].label;
                let edge = &seqs[ls][lstart..lstart + llen];
                let common = edge
                    .iter()
                    .zip(&s[pos..])
                    .take_while(|(a, b)| a == b)
                    .count();
                if common == llen {
                    node = child;
                    pos += common;
                    continue;
                }
                nodes.push(NaiveNode {
                    label: (ls, lstart, common),
                    children: BTreeMap::new(),
                    leaves: Vec::new(),
                });
                let mid = nodes.len() - 1;
                nodes[child].label = (ls, lstart + common, llen - common);
                nodes[mid].children.insert(edge[common], child);
                nodes[node].children.insert(s[pos], mid);
                node = mid;
                pos += common;
            }
        }
    }

    let mut out = Canonical::new();
    let mut stack = vec![(0usize, Vec::new())];
    while let Some((id, mut path)) = stack.pop() {
        let n = &nodes[id];
        let (ls, lstart, llen) = n.label;
        path.extend_from_slice(&seqs[ls][lstart..lstart + llen]);
        let mut leaves = n.leaves.clone();
        leaves.sort_unstable();
        out.insert(path.clone(), (leaves, n.children.keys().copied().collect()));
        for &c in n.children.values() {
            stack.push((c, path.clone()));
        }
    }
    out
}
