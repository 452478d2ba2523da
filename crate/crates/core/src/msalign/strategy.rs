use std::cmp::Ordering;

use log::warn;

use super::{Anchor, Segment, StrategyConfig, StrategyKind};
use crate::gst::MultiSubWord;

/// Chooses the next anchor from a collection already restricted to
/// `segment`. Returns `None` when no value of at least `min_anchor_len`
/// symbols occurs in every sequence of the segment.
///
/// `seq_lens` are the full sequence lengths, used by the min-variance
/// strategy to compute relative start positions.
pub fn select_anchor(
    msws: &[MultiSubWord],
    segment: &Segment,
    cfg: &StrategyConfig,
    seq_lens: &[usize],
) -> Option<Anchor> {
    let candidates: Vec<(&MultiSubWord, Vec<Vec<usize>>)> = msws
        .iter()
        .filter(|m| m.len() >= cfg.min_anchor_len)
        .filter_map(|m| {
            let inside: Vec<Vec<usize>> = m
                .occurrences
                .iter()
                .enumerate()
                .map(|(k, occ)| {
                    occ.iter()
                        .copied()
                        .filter(|&s| segment.contains(k, s, m.len()))
                        .collect::<Vec<_>>()
                })
                .collect();
            inside.iter().all(|o| !o.is_empty()).then_some((m, inside))
        })
        .collect();
    if candidates.is_empty() {
        return None;
    }

    match cfg.kind {
        StrategyKind::BiggestLeftMost => Some(biggest_left_most(&candidates)),
        StrategyKind::MinVariance => min_variance(&candidates, cfg, seq_lens)
            .or_else(|| Some(biggest_left_most(&candidates))),
    }
}

fn biggest_left_most(candidates: &[(&MultiSubWord, Vec<Vec<usize>>)]) -> Anchor {
    // first of the longest
    let mut best = &candidates[0];
    for c in &candidates[1..] {
        if c.0.len() > best.0.len() {
            best = c;
        }
    }
    let starts = best.1.iter().map(|occ| occ[0]).collect();
    Anchor::new(best.0.value.clone(), starts)
}

fn min_variance(
    candidates: &[(&MultiSubWord, Vec<Vec<usize>>)],
    cfg: &StrategyConfig,
    seq_lens: &[usize],
) -> Option<Anchor> {
    let mut pool: Vec<&(&MultiSubWord, Vec<Vec<usize>>)> = candidates.iter().collect();
    pool.sort_by_key(|c| std::cmp::Reverse(c.0.len()));
    pool.truncate(cfg.n_largest);

    let mut best: Option<(f64, &MultiSubWord, Vec<usize>)> = None;
    for (msw, occ) in pool {
        let combos = occ
            .iter()
            .try_fold(1u64, |acc, o| acc.checked_mul(o.len() as u64));
        match combos {
            Some(c) if c <= cfg.combination_cap => {}
            _ => {
                warn!(
                    "skipping multi sub-word of length {}: more than {} occurrence combinations",
                    msw.len(),
                    cfg.combination_cap
                );
                continue;
            }
        }

        let len = msw.len() as f64;
        let mut choice = vec![0usize; occ.len()];
        let mut starts: Vec<usize> = occ.iter().map(|o| o[0]).collect();
        loop {
            let score = relative_variance(&starts, seq_lens) / len;
            let better = match &best {
                None => true,
                Some((best_score, best_msw, _)) => match score.total_cmp(best_score) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        msw.len() > best_msw.len()
                            || (msw.len() == best_msw.len() && msw.value < best_msw.value)
                    }
                },
            };
            if better {
                best = Some((score, msw, starts.clone()));
            }
            // odometer over one occurrence per sequence
            let mut k = occ.len();
            let advanced = loop {
                if k == 0 {
                    break false;
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < occ[k].len() {
                    starts[k] = occ[k][choice[k]];
                    break true;
                }
                choice[k] = 0;
                starts[k] = occ[k][0];
            };
            if !advanced {
                break;
            }
        }
    }
    best.map(|(_, msw, starts)| Anchor::new(msw.value.clone(), starts))
}

/// Population variance of `start / sequence length` across sequences.
fn relative_variance(starts: &[usize], seq_lens: &[usize]) -> f64 {
    let n = starts.len() as f64;
    let rel: Vec<f64> = starts
        .iter()
        .zip(seq_lens)
        .map(|(&s, &l)| s as f64 / l as f64)
        .collect();
    let mean = rel.iter().sum::<f64>() / n;
    rel.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / n
}
