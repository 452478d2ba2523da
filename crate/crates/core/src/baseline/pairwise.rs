use serde::{Deserialize, Serialize};

/// Linear-gap scoring for global alignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scoring {
    pub match_score: i64,
    pub mismatch: i64,
    pub gap: i64,
}

impl Scoring {
    pub const fn new(match_score: i64, mismatch: i64, gap: i64) -> Self {
        Scoring {
            match_score,
            mismatch,
            gap,
        }
    }

    /// Unit costs: the negated optimal score is the Levenshtein distance.
    pub const DISTANCE: Scoring = Scoring::new(0, -1, -1);

    pub fn substitution(&self, a: u8, b: u8) -> i64 {
        if a == b {
            self.match_score
        } else {
            self.mismatch
        }
    }
}

impl Default for Scoring {
    fn default() -> Self {
        Scoring::new(1, -1, -2)
    }
}

/// Unit-cost edit distance.
pub fn levenshtein(a: &[u8], b: &[u8]) -> usize {
    let (a, b) = if a.len() < b.len() { (b, a) } else { (a, b) };
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for (i, &x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Two gapped rows of equal length; `None` is a gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseAlignment {
    pub a: Vec<Option<u8>>,
    pub b: Vec<Option<u8>>,
    pub score: i64,
}

impl PairwiseAlignment {
    pub fn rows(&self, gap: u8) -> (Vec<u8>, Vec<u8>) {
        let show = |r: &[Option<u8>]| r.iter().map(|c| c.unwrap_or(gap)).collect();
        (show(&self.a), show(&self.b))
    }
}

/// One traceback move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    /// Consume one column of each side.
    Diagonal,
    /// Consume a column of `a` against a gap.
    Up,
    /// Consume a column of `b` against a gap.
    Left,
}

/// Global alignment of `m` columns against `n` columns with linear gaps.
///
/// `sub(i, j)` scores column `i` of `a` against column `j` of `b`;
/// `gap_a(i)` scores column `i` of `a` against a gap and `gap_b(j)` likewise.
/// Ties in the traceback prefer diagonal, then up, then left. Returns the
/// optimal score and the moves from start to end.
pub(crate) fn global_dp(
    m: usize,
    n: usize,
    sub: impl Fn(usize, usize) -> i64,
    gap_a: impl Fn(usize) -> i64,
    gap_b: impl Fn(usize) -> i64,
) -> (i64, Vec<Step>) {
    let w = n + 1;
    let mut h = vec![0i64; (m + 1) * w];
    for j in 1..=n {
        h[j] = h[j - 1] + gap_b(j - 1);
    }
    for i in 1..=m {
        let ga = gap_a(i - 1);
        h[i * w] = h[(i - 1) * w] + ga;
        for j in 1..=n {
            let diag = h[(i - 1) * w + j - 1] + sub(i - 1, j - 1);
            let up = h[(i - 1) * w + j] + ga;
            let left = h[i * w + j - 1] + gap_b(j - 1);
            h[i * w + j] = diag.max(up).max(left);
        }
    }

    let mut steps = Vec::with_capacity(m + n);
    let (mut i, mut j) = (m, n);
    while i > 0 || j > 0 {
        let here = h[i * w + j];
        let step = if i > 0 && j > 0 && here == h[(i - 1) * w + j - 1] + sub(i - 1, j - 1) {
            Step::Diagonal
        } else if i > 0 && here == h[(i - 1) * w + j] + gap_a(i - 1) {
            Step::Up
        } else {
            Step::Left
        };
        match step {
            Step::Diagonal => {
                i -= 1;
                j -= 1;
            }
            Step::Up => i -= 1,
            Step::Left => j -= 1,
        }
        steps.push(step);
    }
    steps.reverse();
    (h[m * w + n], steps)
}

/// Global alignment maximising the additive score.
pub fn needleman_wunsch(a: &[u8], b: &[u8], scoring: &Scoring) -> PairwiseAlignment {
    let (score, steps) = global_dp(
        a.len(),
        b.len(),
        |i, j| scoring.substitution(a[i], b[j]),
        |_| scoring.gap,
        |_| scoring.gap,
    );
    let mut out = PairwiseAlignment {
        a: Vec::with_capacity(steps.len()),
        b: Vec::with_capacity(steps.len()),
        score,
    };
    let (mut i, mut j) = (0, 0);
    for step in steps {
        let (x, y) = match step {
            Step::Diagonal => (Some(a[i]), Some(b[j])),
            Step::Up => (Some(a[i]), None),
            Step::Left => (None, Some(b[j])),
        };
        i += usize::from(x.is_some());
        j += usize::from(y.is_some());
        out.a.push(x);
        out.b.push(y);
    }
    out
}
