use std::collections::HashMap;

use super::{Anchor, Segment};
use crate::gst::MultiSubWord;

/// Keeps only occurrences lying wholly inside `segment`; drops multi
/// sub-words that no longer occur in every sequence. Occurrences on
/// opposite sides of an earlier anchor ("crossing over") end up in
/// different segments and are eliminated here.
pub fn restrict(msws: Vec<MultiSubWord>, segment: &Segment) -> Vec<MultiSubWord> {
    msws.into_iter()
        .filter_map(|mut m| {
            let len = m.value.len();
            for (k, occ) in m.occurrences.iter_mut().enumerate() {
                occ.retain(|&s| segment.contains(k, s, len));
                if occ.is_empty() {
                    return None;
                }
            }
            Some(m)
        })
        .collect()
}

/// How an occurrence `[start, start + len)` relates to the anchor in its
/// sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Overlap {
    Disjoint,
    /// Contained in, equal to, or containing the anchor span.
    Full,
    /// Sticks out on the left only; keep `[start, anchor_start)`.
    Left,
    /// Sticks out on the right only; keep `[anchor_end, end)`.
    Right,
}

fn classify(start: usize, len: usize, anchor_start: usize, anchor_end: usize) -> Overlap {
    let end = start + len;
    if end <= anchor_start || start >= anchor_end {
        return Overlap::Disjoint;
    }
    match (start < anchor_start, end > anchor_end) {
        (true, false) => Overlap::Left,
        (false, true) => Overlap::Right,
        _ => Overlap::Full,
    }
}

/// Removes every occurrence that overlaps the anchor without sticking out
/// on exactly one side.
pub fn remove_full_overlaps(msws: Vec<MultiSubWord>, anchor: &Anchor) -> Vec<MultiSubWord> {
    msws.into_iter()
        .filter_map(|mut m| {
            let len = m.value.len();
            for (k, occ) in m.occurrences.iter_mut().enumerate() {
                let (a, ae) = (anchor.starts[k], anchor.end(k));
                occ.retain(|&s| classify(s, len, a, ae) != Overlap::Full);
                if occ.is_empty() {
                    return None;
                }
            }
            Some(m)
        })
        .collect()
}

/// Shortens occurrences that partially overlap the anchor to their part
/// outside it. A trimmed occurrence moves to the multi sub-word whose value
/// equals the trimmed value, which is created (appended to the collection)
/// if absent. Occurrences sticking out on both sides keep the longer
/// protrusion, the left one on a tie.
///
/// Multi sub-words left without an occurrence in some sequence are dropped.
pub fn trim_partial_overlaps(mut msws: Vec<MultiSubWord>, anchor: &Anchor) -> Vec<MultiSubWord> {
    let n_seq = anchor.starts.len();
    // (value, seq, start)
    let mut moved: Vec<(Vec<u8>, usize, usize)> = Vec::new();

    for m in &mut msws {
        let len = m.value.len();
        for (k, occ) in m.occurrences.iter_mut().enumerate() {
            let (a, ae) = (anchor.starts[k], anchor.end(k));
            occ.retain(|&s| {
                let end = s + len;
                let (lo, hi) = match classify(s, len, a, ae) {
                    Overlap::Disjoint => return true,
                    Overlap::Left => (s, a),
                    Overlap::Right => (ae, end),
                    Overlap::Full if s < a && end > ae => {
                        if a - s >= end - ae {
                            (s, a)
                        } else {
                            (ae, end)
                        }
                    }
                    // fully covered; nothing survives a trim
                    Overlap::Full => return false,
                };
                moved.push((m.value[lo - s..hi - s].to_vec(), k, lo));
                false
            });
        }
    }

    if !moved.is_empty() {
        let mut index: HashMap<Vec<u8>, usize> = msws
            .iter()
            .enumerate()
            .map(|(i, m)| (m.value.clone(), i))
            .collect();
        for (value, k, start) in moved {
            let i = *index.entry(value).or_insert_with_key(|v| {
                msws.push(MultiSubWord {
                    value: v.clone(),
                    occurrences: vec![Vec::new(); n_seq],
                });
                msws.len() - 1
            });
            let occ = &mut msws[i].occurrences[k];
            if let Err(pos) = occ.binary_search(&start) {
                occ.insert(pos, start);
            }
        }
    }

    msws.retain(MultiSubWord::is_common);
    msws
}
