use std::fmt::Write;

use regex::bytes::{Regex, RegexBuilder};

use super::{Anchor, AnchorChain, StrategyConfig};
use crate::corpus::Corpus;
use crate::error::{Error, Result};

/// Turns an anchor chain into a message prototype: anchor values become
/// literal constants, and `.*` stands in for every region where at least
/// one sequence has bytes between two constants (or before the first, or
/// after the last).
///
/// Anchors shorter than `cfg.min_anchor_len` are dropped first, unless they
/// are pinned to a message boundary (start at 0 in every sequence, or end
/// at the last byte of every sequence). Such an anchor is a fixed prefix or
/// suffix, e.g. a closing delimiter, and costs nothing to keep.
///
/// The pattern is meant to be matched against whole messages with
/// [`compile_skeleton`].
pub fn regex_skeleton(chain: &AnchorChain, corpus: &Corpus, cfg: &StrategyConfig) -> String {
    let n = corpus.len();
    let lens: Vec<usize> = corpus.iter().map(|s| s.len()).collect();
    let pinned =
        |a: &Anchor| a.starts.iter().all(|&s| s == 0) || (0..n).all(|k| a.end(k) == lens[k]);

    let mut pattern = String::new();
    let mut cursor = vec![0usize; n];
    for a in chain
        .iter()
        .filter(|a| a.len() >= cfg.min_anchor_len || pinned(a))
    {
        if (0..n).any(|k| a.starts[k] > cursor[k]) {
            pattern.push_str(".*");
        }
        escape_into(&mut pattern, &a.value);
        for (k, c) in cursor.iter_mut().enumerate() {
            *c = a.end(k);
        }
    }
    if (0..n).any(|k| lens[k] > cursor[k]) {
        pattern.push_str(".*");
    }
    pattern
}

fn escape_into(out: &mut String, bytes: &[u8]) {
    for &b in bytes {
        if b.is_ascii_graphic() || b == b' ' {
            out.push_str(&regex::escape(std::str::from_utf8(&[b]).expect("ascii")));
        } else {
            write!(out, "\\x{b:02X}").expect("write to String");
        }
    }
}

/// Compiles a skeleton so that it must match a whole message. Matching is
/// byte-oriented and `.` also matches newlines.
pub fn compile_skeleton(pattern: &str) -> Result<Regex> {
    RegexBuilder::new(&format!("^(?:{pattern})$"))
        .unicode(false)
        .dot_matches_new_line(true)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("bad skeleton pattern: {e}")))
}
