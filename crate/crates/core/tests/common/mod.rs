//! Independent oracles shared by the integration tests. Everything here is
//! deliberately brute force and shares no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gstalign::corpus::Corpus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` sequences with lengths in `lens`, drawn from `alphabet`.
pub fn random_corpus(
    rng: &mut ChaCha8Rng,
    count: usize,
    lens: std::ops::RangeInclusive<usize>,
    alphabet: &[u8],
) -> Corpus {
    let seqs: Vec<Vec<u8>> = (0..count)
        .map(|_| {
            let len = rng.random_range(lens.clone());
            (0..len)
                .map(|_| alphabet[rng.random_range(0..alphabet.len())])
                .collect()
        })
        .collect();
    Corpus::from_bytes(seqs, "random").unwrap()
}

pub fn occurrences(hay: &[u8], needle: &[u8]) -> Vec<usize> {
    if needle.len() > hay.len() {
        return Vec::new();
    }
    (0..=hay.len() - needle.len())
        .filter(|&i| &hay[i..i + needle.len()] == needle)
        .collect()
}

/// Every non-empty substring occurring in all sequences.
pub fn common_substrings(c: &Corpus) -> BTreeSet<Vec<u8>> {
    let first = c.sequences()[0].bytes();
    let mut out = BTreeSet::new();
    for i in 0..first.len() {
        for j in i + 1..=first.len() {
            let v = &first[i..j];
            if c.iter().all(|s| !occurrences(s.bytes(), v).is_empty()) {
                out.insert(v.to_vec());
            }
        }
    }
    out
}

/// What follows an occurrence: a byte, or the end of sequence `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Next {
    Byte(u8),
    End(usize),
}

/// Common substrings that label a node of the suffix tree: those that are
/// a suffix of some sequence or are followed by at least two different
/// continuations. Maps each to its occurrences per sequence.
pub fn branching_common(c: &Corpus) -> BTreeMap<Vec<u8>, Vec<Vec<usize>>> {
    let mut out = BTreeMap::new();
    for v in common_substrings(c) {
        let occ: Vec<Vec<usize>> = c.iter().map(|s| occurrences(s.bytes(), &v)).collect();
        let mut next = BTreeSet::new();
        for (k, s) in c.iter().enumerate() {
            for &i in &occ[k] {
                next.insert(match s.bytes().get(i + v.len()) {
                    Some(&b) => Next::Byte(b),
                    None => Next::End(k),
                });
            }
        }
        if next.len() >= 2 || next.iter().any(|n| matches!(n, Next::End(_))) {
            out.insert(v, occ);
        }
    }
    out
}

/// Walks the full cartesian product of one occurrence per sequence.
pub fn enumerate_combinations(occ: &[Vec<usize>]) -> u64 {
    fn go(occ: &[Vec<usize>], k: usize) -> u64 {
        if k == occ.len() {
            return 1;
        }
        occ[k].iter().map(|_| go(occ, k + 1)).sum()
    }
    go(occ, 0)
}

/// Edit distance from the full dynamic-programming table.
pub fn levenshtein_table(a: &[u8], b: &[u8]) -> usize {
    let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = d[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]);
            d[i][j] = sub.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    d[a.len()][b.len()]
}

/// Best global alignment score by exploring every alignment path. Paths
/// that provably cannot beat the best found so far are cut off (the bound
/// assumes every remaining pair matches), which keeps the search exact.
pub fn exhaustive_alignment_score(a: &[u8], b: &[u8], m: i64, x: i64, g: i64) -> i64 {
    assert!(
        m >= x && m >= 2 * g,
        "bound assumes matching is the best move"
    );
    fn bound(ra: usize, rb: usize, m: i64, g: i64) -> i64 {
        let (lo, hi) = (ra.min(rb) as i64, ra.max(rb) as i64);
        lo * m + (hi - lo) * g
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &[u8],
        b: &[u8],
        i: usize,
        j: usize,
        acc: i64,
        m: i64,
        x: i64,
        g: i64,
        best: &mut i64,
    ) {
        if i == a.len() && j == b.len() {
            *best = (*best).max(acc);
            return;
        }
        if acc + bound(a.len() - i, b.len() - j, m, g) <= *best {
            return;
        }
        if i < a.len() && j < b.len() {
            let s = if a[i] == b[j] { m } else { x };
            go(a, b, i + 1, j + 1, acc + s, m, x, g, best);
        }
        if i < a.len() {
            go(a, b, i + 1, j, acc + g, m, x, g, best);
        }
        if j < b.len() {
            go(a, b, i, j + 1, acc + g, m, x, g, best);
        }
    }
    // any concrete alignment is a valid starting lower bound
    let mut best = (a.len() + b.len()) as i64 * g;
    go(a, b, 0, 0, 0, m, x, g, &mut best);
    best
}

/// Unpruned enumeration of every alignment; only for very short inputs.
pub fn enumerate_alignment_score(a: &[u8], b: &[u8], m: i64, x: i64, g: i64) -> i64 {
    fn go(a: &[u8], b: &[u8], m: i64, x: i64, g: i64) -> i64 {
        match (a.split_first(), b.split_first()) {
            (None, None) => 0,
            (Some((_, ra)), None) => g + go(ra, b, m, x, g),
            (None, Some((_, rb))) => g + go(a, rb, m, x, g),
            (Some((&p, ra)), Some((&q, rb))) => {
                let d = (if p == q { m } else { x }) + go(ra, rb, m, x, g);
                d.max(g + go(ra, b, m, x, g)).max(g + go(a, rb, m, x, g))
            }
        }
    }
    go(a, b, m, x, g)
}

/// Gapped rows with gaps removed must give back the corpus; rows must be
/// equally long.
pub fn reconstructs(rows: &[Vec<Option<u8>>], c: &Corpus) -> bool {
    let width = rows.first().map_or(0, Vec::len);
    rows.len() == c.len()
        && rows.iter().zip(c.iter()).all(|(r, s)| {
            r.len() == width && r.iter().flatten().copied().collect::<Vec<_>>() == s.bytes()
        })
}
