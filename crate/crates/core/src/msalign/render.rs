use std::ops::Range;

use super::AnchorChain;
use crate::corpus::Corpus;
use crate::error::Result;

/// A gapped alignment: one row per sequence, `None` marking a gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    rows: Vec<Vec<Option<u8>>>,
    /// Column ranges occupied by anchors, left to right.
    anchor_columns: Vec<Range<usize>>,
}

impl Alignment {
    /// Wraps pre-built rows (e.g. from a baseline aligner); no anchor columns.
    pub fn from_rows(rows: Vec<Vec<Option<u8>>>) -> Self {
        Alignment {
            rows,
            anchor_columns: Vec::new(),
        }
    }

    pub fn rows(&self) -> &[Vec<Option<u8>>] {
        &self.rows
    }

    pub fn anchor_columns(&self) -> &[Range<usize>] {
        &self.anchor_columns
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Byte rows with `gap` in place of every gap.
    pub fn to_rows(&self, gap: u8) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.unwrap_or(gap)).collect())
            .collect()
    }

    /// Row `i` with its gaps removed.
    pub fn ungapped(&self, i: usize) -> Vec<u8> {
        self.rows[i].iter().flatten().copied().collect()
    }
}

/// Lays the corpus out around the chain. Anchor columns line up; each
/// residue between anchors is left-justified and padded with gaps to the
/// widest residue of that region.
pub fn render(corpus: &Corpus, chain: &AnchorChain) -> Result<Alignment> {
    chain.validate(corpus)?;
    let n = corpus.len();
    let mut rows: Vec<Vec<Option<u8>>> = vec![Vec::new(); n];
    let mut anchor_columns = Vec::with_capacity(chain.len());
    let mut cursor = vec![0usize; n];

    let place_region = |rows: &mut Vec<Vec<Option<u8>>>, cursor: &[usize], ends: &[usize]| {
        let width = (0..n).map(|k| ends[k] - cursor[k]).max().unwrap_or(0);
        for (k, seq) in corpus.iter().enumerate() {
            let residue = &seq.bytes()[cursor[k]..ends[k]];
            rows[k].extend(residue.iter().map(|&b| Some(b)));
            rows[k].extend(std::iter::repeat_n(None, width - residue.len()));
        }
    };

    for anchor in chain {
        place_region(&mut rows, &cursor, &anchor.starts);
        let col = rows[0].len();
        for row in rows.iter_mut() {
            row.extend(anchor.value.iter().map(|&b| Some(b)));
        }
        anchor_columns.push(col..col + anchor.len());
        for (k, c) in cursor.iter_mut().enumerate() {
            *c = anchor.end(k);
        }
    }
    let ends: Vec<usize> = corpus.iter().map(|s| s.len()).collect();
    place_region(&mut rows, &cursor, &ends);

    Ok(Alignment {
        rows,
        anchor_columns,
    })
}

/// [`render`] followed by [`Alignment::to_rows`].
pub fn render_rows(corpus: &Corpus, chain: &AnchorChain, gap: u8) -> Result<Vec<Vec<u8>>> {
    Ok(render(corpus, chain)?.to_rows(gap))
}
