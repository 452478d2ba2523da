//! Compares anchor selection strategies on messages where a long shared
//! word sits at inconsistent offsets and a shorter one at a stable offset.
//!
//! ```text
//! cargo run --example strategies
//! ```

use gstalign::msalign::render;
use gstalign::{align, Corpus, StrategyConfig};

fn main() -> gstalign::Result<()> {
    let corpus = Corpus::from_strs(&[
        "QWERTYaaaaKEYbbbbbbbbbbbbbbbb",
        "ccccccccccccccccKEYddddQWERTY",
        "eeeeeeeeKEYffffffffQWERTYffff",
    ])?;
    for (name, cfg) in [
        ("biggest_left_most", StrategyConfig::default()),
        ("min_variance", StrategyConfig::min_variance(9)),
    ] {
        let chain = align(&corpus, &cfg)?;
        let aln = render(&corpus, &chain)?;
        println!("{name}: first anchor {}", chain.anchors[0]);
        println!(
            "  width {} columns, {} aligned characters",
            aln.width(),
            chain.overlap_chars()
        );
        for row in aln.to_rows(b'-') {
            println!("  {}", String::from_utf8_lossy(&row));
        }
    }
    Ok(())
}
