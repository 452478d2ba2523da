//! Times the anchor aligner against the progressive baseline on growing
//! prefixes of a synthetic corpus and fits the growth curves.
//!
//! ```text
//! cargo run --release --example scaling_bench [MAX_N] [REPEATS]
//! ```

use gstalign::baseline::Scoring;
use gstalign::cli::bench::{run_bench, Algorithm, BenchPlan, DEFAULT_COUNTS};
use gstalign::corpus::{generate_synthetic, Template};
use gstalign::StrategyConfig;

fn main() -> gstalign::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let repeats = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);

    let corpus = generate_synthetic(Template::LdapLike, max_n, 2012)?;
    let mut counts: Vec<usize> = DEFAULT_COUNTS.into_iter().filter(|&n| n < max_n).collect();
    counts.push(max_n);
    let plan = BenchPlan {
        counts,
        repeats,
        algorithms: vec![Algorithm::Ms, Algorithm::ClustalwLite],
        strategy: StrategyConfig::default(),
        scoring: Scoring::default(),
    };
    let summary = run_bench(&corpus, &plan, |r, _| {
        eprint!("\r{} n={:<4}", r.algorithm, r.rows)
    })?;
    eprintln!();
    print!("{summary}");
    Ok(())
}
