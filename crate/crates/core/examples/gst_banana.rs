//! Inspects a generalized suffix tree: node counts, the fully coloured
//! nodes and how many occurrence combinations each multi sub-word allows.
//!
//! ```text
//! cargo run --example gst_banana [SEQ ...]
//! ```

use gstalign::gst::count_combinations;
use gstalign::{Corpus, Gst};

fn main() -> gstalign::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<&str> = if args.is_empty() {
        vec!["Banana", "Bonanza"]
    } else {
        args.iter().map(String::as_str).collect()
    };
    let corpus = Corpus::from_strs(&words)?;
    let gst = Gst::build(&corpus)?;

    println!(
        "{} suffixes, {} nodes below the root",
        gst.leaf_count(),
        gst.branching_count()
    );
    for (id, node) in gst.nodes() {
        let depth = node.depth();
        let label = String::from_utf8_lossy(gst.path_label(id));
        let colours: Vec<usize> = node.colours().iter().collect();
        println!(
            "{:indent$}{label:?} colours {colours:?}",
            "",
            indent = depth.min(20) * 2
        );
    }

    let msws = gst.extract_msws();
    println!();
    for m in &msws {
        println!("{m}  combinations {}", m.combinations());
    }
    println!("total combinations {}", count_combinations(&msws));
    Ok(())
}
