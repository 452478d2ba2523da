//! Derives a regular expression that matches a cluster of protocol
//! messages, then checks it against the full file.
//!
//! ```text
//! cargo run --example search_prototype [FILE] [MIN_ANCHOR_LEN]
//! ```

use std::path::PathBuf;

use gstalign::corpus::{load_lines, LineMode};
use gstalign::msalign::{compile_skeleton, regex_skeleton};
use gstalign::{align, StrategyConfig};

fn main() -> gstalign::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/search.txt"));
    let min_len = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);

    let corpus = load_lines(&path, LineMode::Raw)?;
    let cfg = StrategyConfig::default();
    let chain = align(&corpus, &cfg)?;
    let strict = StrategyConfig {
        min_anchor_len: min_len,
        ..cfg
    };
    let pattern = regex_skeleton(&chain, &corpus, &strict);
    println!("{pattern}");

    let re = compile_skeleton(&pattern)?;
    for (i, s) in corpus.iter().enumerate() {
        let ok = if re.is_match(s.bytes()) {
            "match"
        } else {
            "MISS"
        };
        println!(
            "{ok:>5}  line {}  {}",
            corpus.line_of(i).unwrap_or(i + 1),
            String::from_utf8_lossy(s.bytes())
        );
    }
    let alien = b"{cn:admin,op:D}";
    println!(
        "{:>5}  {}",
        if re.is_match(alien) { "match" } else { "MISS" },
        String::from_utf8_lossy(alien)
    );
    Ok(())
}
