//! Multiple alignment of many short byte sequences.
//!
//! The crate builds a generalized suffix tree (GST) over a set of messages,
//! reads every sub-word common to all of them off the fully coloured
//! branching nodes ("multi sub-words"), and aligns the messages by
//! recursively pinning the best common sub-sequence as an anchor and
//! splitting the problem to its left and right.
//!
//! ```
//! use gstalign::{align, corpus::Corpus, msalign::StrategyConfig};
//!
//! let corpus = Corpus::from_strs(&["ADCxzDCxBAx", "DCxAzDCxpxBA"]).unwrap();
//! let chain = align(&corpus, &StrategyConfig::default()).unwrap();
//! let rows = gstalign::msalign::render(&corpus, &chain).unwrap().to_rows(b'*');
//! assert_eq!(rows[0], b"ADCx*zDCx**BAx");
//! assert_eq!(rows[1], b"*DCxAzDCxpxBA*");
//! ```
//!
//! Alongside the anchor aligner the crate ships classical baselines
//! (Levenshtein, Needleman-Wunsch, a ClustalW-style progressive aligner),
//! alignment quality metrics and a benchmark driver used by the `gstalign`
//! binary.

pub mod baseline;
pub mod cli;
pub mod corpus;
mod error;
pub mod gst;
pub mod metrics;
pub mod msalign;

pub use corpus::{Corpus, Sequence};
pub use error::{Error, Result};
pub use gst::{Gst, MultiSubWord};
pub use msalign::{align, Alignment, Anchor, AnchorChain, StrategyConfig, StrategyKind};
