//! Aligns the records of a FASTA file, optionally truncated to a fixed
//! length.
//!
//! ```text
//! cargo run --example fasta_align [FILE] [TRUNCATE]
//! ```

use std::path::PathBuf;

use gstalign::corpus::load_fasta;
use gstalign::metrics::sp_edit_distance;
use gstalign::msalign::render;
use gstalign::{align, StrategyConfig};

fn main() -> gstalign::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/sample.fa"));
    let truncate = args.next().and_then(|a| a.parse().ok());

    let corpus = load_fasta(&path, truncate)?;
    let cfg = StrategyConfig {
        min_anchor_len: 2,
        ..StrategyConfig::default()
    };
    let chain = align(&corpus, &cfg)?;
    let rows = render(&corpus, &chain)?.to_rows(b'-');
    for r in &rows {
        println!("{}", String::from_utf8_lossy(r));
    }
    println!(
        "{} anchors, sum-of-pairs distance {}",
        chain.len(),
        sp_edit_distance(&rows, b'-')?
    );
    Ok(())
}
