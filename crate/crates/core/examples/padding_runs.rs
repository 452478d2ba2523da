//! Fixed-width records: the anchor aligner pins the longest shared run of
//! padding, while the progressive baseline spreads gaps to minimise
//! mismatches.
//!
//! ```text
//! cargo run --example padding_runs [COUNT] [SEED]
//! ```

use gstalign::baseline::{clustalw_lite, Scoring};
use gstalign::corpus::{generate_synthetic, Template};
use gstalign::metrics::sp_edit_distance;
use gstalign::msalign::{align, render};
use gstalign::StrategyConfig;

fn main() -> gstalign::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(8);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let corpus = generate_synthetic(Template::FixedWidth, n, seed)?;

    let chain = align(&corpus, &StrategyConfig::default())?;
    println!("anchors:");
    for a in &chain {
        println!("  {}", a.to_string().replace(' ', "␣"));
    }
    let ms = render(&corpus, &chain)?.to_rows(b'*');
    let cw = clustalw_lite(&corpus, &Scoring::default())?.to_rows(b'*');
    for (name, rows) in [("anchor alignment", &ms), ("clustalw_lite", &cw)] {
        println!(
            "\n{name} (sum-of-pairs distance {}):",
            sp_edit_distance(rows, b'*')?
        );
        for r in rows {
            println!("  {}", String::from_utf8_lossy(r).replace(' ', "␣"));
        }
    }
    Ok(())
}
