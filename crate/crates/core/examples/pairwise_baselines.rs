//! The classical building blocks: edit distance, Needleman-Wunsch, the
//! neighbour-joining guide tree and the progressive aligner.
//!
//! ```text
//! cargo run --example pairwise_baselines
//! ```

use gstalign::baseline::{
    build_guide_tree, clustalw_lite, levenshtein, needleman_wunsch, similarity_matrix, Scoring,
};
use gstalign::metrics::sp_edit_distance;
use gstalign::Corpus;

fn main() -> gstalign::Result<()> {
    let (a, b) = (b"kitten".as_slice(), b"sitting".as_slice());
    println!("levenshtein(kitten, sitting) = {}", levenshtein(a, b));
    let nw = needleman_wunsch(a, b, &Scoring::default());
    let (ra, rb) = nw.rows(b'-');
    println!("needleman-wunsch score {}", nw.score);
    println!(
        "  {}\n  {}",
        String::from_utf8_lossy(&ra),
        String::from_utf8_lossy(&rb)
    );

    let corpus =
        Corpus::from_strs(&["{id:1,op:S}", "{id:12,op:S}", "{id:7,op:M}", "{uid:7,op:M}"])?;
    let tree = build_guide_tree(&similarity_matrix(&corpus)?)?;
    println!("\nguide tree {}", tree.newick());
    let rows = clustalw_lite(&corpus, &Scoring::default())?.to_rows(b'-');
    for r in &rows {
        println!("  {}", String::from_utf8_lossy(r));
    }
    println!("sum-of-pairs distance {}", sp_edit_distance(&rows, b'-')?);
    Ok(())
}
