use serde::Serialize;

use super::levenshtein;
use crate::corpus::Corpus;
use crate::error::{Error, Result};

/// Symmetric pairwise distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds a matrix from a full row-major table, checking symmetry.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 0.0 {
                return Err(Error::InvalidConfig(format!("non-zero diagonal at {i}")));
            }
            for (j, &v) in row.iter().enumerate().take(i) {
                if v != rows[j][i] {
                    return Err(Error::InvalidConfig(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(DistanceMatrix {
            n,
            d: rows.into_iter().flatten().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }
}

/// Normalised edit distances `lev(i, j) / max(len_i, len_j)` over every
/// unordered pair.
pub fn similarity_matrix(corpus: &Corpus) -> Result<DistanceMatrix> {
    similarity_matrix_with(corpus, levenshtein)
}

/// [`similarity_matrix`] with a caller-supplied edit distance. It is called
/// exactly once per unordered pair, which makes it usable as a counter.
pub fn similarity_matrix_with(
    corpus: &Corpus,
    mut distance: impl FnMut(&[u8], &[u8]) -> usize,
) -> Result<DistanceMatrix> {
    corpus.require(2)?;
    let n = corpus.len();
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..i {
            let (a, b) = (corpus.sequences()[i].bytes(), corpus.sequences()[j].bytes());
            let v = distance(a, b) as f64 / a.len().max(b.len()) as f64;
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// One agglomeration: nodes `left` and `right` become node `n + index`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Join {
    pub left: usize,
    pub right: usize,
    pub left_len: f64,
    pub right_len: f64,
}

/// Unrooted neighbour-joining tree, rooted at its final join. Node ids
/// `0..leaves` are sequences; join `k` creates node `leaves + k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GuideTree {
    pub leaves: usize,
    pub joins: Vec<Join>,
}

impl GuideTree {
    pub fn root(&self) -> usize {
        self.leaves + self.joins.len() - 1
    }

    /// Leaf ids below `node`, left subtree first.
    pub fn members(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            if x < self.leaves {
                out.push(x);
            } else {
                let j = &self.joins[x - self.leaves];
                stack.push(j.right);
                stack.push(j.left);
            }
        }
        out
    }

    /// Nested-parentheses form, e.g. `((0,1),(2,3))`.
    pub fn newick(&self) -> String {
        fn go(t: &GuideTree, x: usize, out: &mut String) {
            if x < t.leaves {
                out.push_str(&x.to_string());
            } else {
                let j = &t.joins[x - t.leaves];
                out.push('(');
                go(t, j.left, out);
                out.push(',');
                go(t, j.right, out);
                out.push(')');
            }
        }
        let mut s = String::new();
        go(self, self.root(), &mut s);
        s
    }
}

const EPS: f64 = 1e-12;

/// Saitou-Nei neighbour joining.
///
/// Among pairs with equal Q values the closer pair wins, then the pair with
/// the smallest node ids. With three clusters Q is the same for every pair,
/// so the distance tie-break is what joins identical sequences first.
pub fn build_guide_tree(matrix: &DistanceMatrix) -> Result<GuideTree> {
    let n = matrix.len();
    if n < 2 {
        return Err(Error::TooFewSequences {
            required: 2,
            actual: n,
        });
    }
    // distances between active clusters, indexed by node id
    let total = 2 * n - 1;
    let mut d = vec![0.0f64; total * total];
    for i in 0..n {
        for j in 0..n {
            d[i * total + j] = matrix.get(i, j);
        }
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut joins = Vec::with_capacity(n - 1);

    while active.len() > 2 {
        let r = active.len();
        let sums: Vec<f64> = active
            .iter()
            .map(|&i| active.iter().map(|&k| d[i * total + k]).sum())
            .collect();

        let mut best: Option<(f64, f64, usize, usize)> = None;
        for a in 0..r {
            for b in a + 1..r {
                let (i, j) = (active[a], active[b]);
                let dij = d[i * total + j];
                let q = (r as f64 - 2.0) * dij - sums[a] - sums[b];
                let better = match best {
                    None => true,
                    Some((bq, bd, _, _)) => q < bq - EPS || (q <= bq + EPS && dij < bd - EPS),
                };
                if better {
                    best = Some((q, dij, a, b));
                }
            }
        }
        let (_, dij, a, b) = best.expect("at least three active clusters");
        let (i, j) = (active[a], active[b]);
        let left_len = dij / 2.0 + (sums[a] - sums[b]) / (2.0 * (r as f64 - 2.0));
        let u = n + joins.len();
        joins.push(Join {
            left: i,
            right: j,
            left_len,
            right_len: dij - left_len,
        });
        for &k in &active {
            if k != i && k != j {
                let v = (d[i * total + k] + d[j * total + k] - dij) / 2.0;
                d[u * total + k] = v;
                d[k * total + u] = v;
            }
        }
        active.remove(b);
        active.remove(a);
        active.push(u);
    }

    let (i, j) = (active[0], active[1]);
    let dij = d[i * total + j];
    joins.push(Join {
        left: i,
        right: j,
        left_len: dij / 2.0,
        right_len: dij / 2.0,
    });
    Ok(GuideTree { leaves: n, joins })
}
