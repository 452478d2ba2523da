//! Step-by-step alignment of two short messages: the multi sub-words, the
//! anchor chain and the gapped rows.
//!
//! ```text
//! cargo run --example worked_example [SEQ ...]
//! ```

use gstalign::msalign::render;
use gstalign::{align, Corpus, Gst, StrategyConfig};

fn main() -> gstalign::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<&str> = if args.len() >= 2 {
        args.iter().map(String::as_str).collect()
    } else {
        vec!["ADCxzDCxBAx", "DCxAzDCxpxBA"]
    };
    let corpus = Corpus::from_strs(&words)?;

    let gst = Gst::build(&corpus)?;
    println!("multi sub-words:");
    for m in gst.extract_msws() {
        println!("  {m}");
    }

    let chain = align(&corpus, &StrategyConfig::default())?;
    println!("\nanchors, left to right:");
    for a in &chain {
        println!("  {a}");
    }

    println!("\nalignment:");
    for row in render(&corpus, &chain)?.to_rows(b'*') {
        println!("  {}", String::from_utf8_lossy(&row));
    }
    Ok(())
}
