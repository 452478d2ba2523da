//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any failed.

// `!(x >= t)` is intended: NaN must fail a criterion
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gstalign::baseline::{clustalw_lite, levenshtein, needleman_wunsch, Scoring};
use gstalign::cli::bench::{run_bench, Algorithm, BenchPlan, DEFAULT_COUNTS};
use gstalign::corpus::{generate_synthetic, Corpus, Template};
use gstalign::gst::{count_combinations, Gst, NodeId};
use gstalign::metrics::FitModel;
use gstalign::msalign::{
    align, compile_skeleton, regex_skeleton, render, select_anchor, Anchor, Segment, StrategyConfig,
};
use num_bigint::BigUint;
use rand::Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn strs(words: &[&str]) -> Corpus {
    Corpus::from_strs(words).unwrap()
}

fn worked_example() -> Verdict {
    let t = Instant::now();
    let c = strs(&["ADCxzDCxBAx", "DCxAzDCxpxBA"]);
    let listing: Vec<String> = Gst::build(&c)
        .unwrap()
        .extract_msws()
        .iter()
        .map(|m| m.to_string())
        .collect();
    let expected = [
        "[A – {0@0 0@9 1@3 1@11}]",
        "[BA – {0@8 1@10}]",
        "[Cx – {0@2 0@6 1@1 1@6}]",
        "[DCx – {0@1 0@5 1@0 1@5}]",
        "[x – {0@3 0@7 0@10 1@2 1@7 1@9}]",
        "[xBA – {0@7 1@9}]",
        "[zDCx – {0@4 1@4}]",
    ];
    ensure!(listing == expected, "multi sub-words {listing:?}");

    let chain = align(&c, &StrategyConfig::default()).unwrap();
    let want = [
        Anchor::new("DCx", vec![1, 0]),
        Anchor::new("zDCx", vec![4, 4]),
        Anchor::new("BA", vec![8, 10]),
    ];
    ensure!(chain.anchors == want, "anchors {:?}", chain.anchors);
    let rows = render(&c, &chain).unwrap().to_rows(b'*');
    ensure!(
        rows == [b"ADCx*zDCx**BAx".to_vec(), b"*DCxAzDCxpxBA*".to_vec()],
        "rows {rows:?}"
    );
    let elapsed = t.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "7 multi sub-words, 3 anchors, rows match, {elapsed:?}"
    ))
}

fn gst_structure() -> Verdict {
    let banana = strs(&["Banana"]);
    let g = Gst::build(&banana).unwrap();
    ensure!(
        g.leaf_count() == 6 && g.branching_count() == 6,
        "Banana: {} leaves, {} branching",
        g.leaf_count(),
        g.branching_count()
    );
    let c = strs(&["Banana", "Bonanza"]);
    let g = Gst::build(&c).unwrap();
    let values: BTreeSet<&[u8]> = g.fully_coloured_values().into_iter().collect();
    let want: BTreeSet<&[u8]> = [&b"B"[..], b"n", b"na", b"nan", b"a", b"an"].into();
    ensure!(
        g.leaf_count() == 13,
        "Banana/Bonanza leaves {}",
        g.leaf_count()
    );
    ensure!(values == want, "fully coloured values {values:?}");
    Ok("Banana 6/6; Banana+Bonanza 13 leaves, {B,n,na,nan,a,an}".into())
}

fn combinations() -> Verdict {
    let c = strs(&["Banana", "Bonanza"]);
    let msws = Gst::build(&c).unwrap().extract_msws();
    let a = msws.iter().find(|m| m.value() == b"a").unwrap();
    ensure!(
        a.combinations() == BigUint::from(6u32),
        "'a' gives {}",
        a.combinations()
    );

    let mut rng = common::rng(3);
    let runs = 150;
    for run in 0..runs {
        let k = rng.random_range(2..=4);
        let alphabet: &[u8] = if run % 2 == 0 { b"ab" } else { b"abc" };
        let c = common::random_corpus(&mut rng, k, 1..=20, alphabet);
        let got = count_combinations(&Gst::build(&c).unwrap().extract_msws());
        let want: u64 = common::branching_common(&c)
            .values()
            .map(|occ| common::enumerate_combinations(occ))
            .sum();
        ensure!(
            got == BigUint::from(want),
            "run {run}: {got} vs oracle {want} on {c:?}"
        );
    }
    Ok(format!("'a' = 6; {runs} random corpora match enumeration"))
}

/// Every word spelled on a root path into a fully coloured node.
fn gst_common_words(g: &Gst) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for (id, node) in g.nodes() {
        if id == NodeId::ROOT || !node.colours().is_full() {
            continue;
        }
        let label = g.path_label(id);
        let parent_depth = node.depth() - g.edge_label(id).len();
        for k in parent_depth + 1..=label.len() {
            out.insert(label[..k].to_vec());
        }
    }
    out
}

fn oracle_equivalence() -> Verdict {
    let mut rng = common::rng(4);
    let runs = 250;
    for run in 0..runs {
        let k = rng.random_range(1..=5);
        let max_len = 200 / k;
        let alphabet = &b"abcd"[..rng.random_range(2..=4)];
        let c = common::random_corpus(&mut rng, k, 1..=max_len.min(40), alphabet);
        let g = Gst::build(&c).unwrap();
        let words = gst_common_words(&g);
        let want = common::common_substrings(&c);
        ensure!(words == want, "run {run}: common sub-words differ on {c:?}");

        let msws: BTreeMap<Vec<u8>, Vec<Vec<usize>>> = g
            .extract_msws()
            .into_iter()
            .map(|m| (m.value().to_vec(), m.all_occurrences().to_vec()))
            .collect();
        ensure!(
            msws == common::branching_common(&c),
            "run {run}: multi sub-words differ on {c:?}"
        );
    }
    Ok(format!(
        "{runs} random corpora: sub-word sets and multi sub-words agree"
    ))
}

fn soundness() -> Verdict {
    let mut rng = common::rng(5);
    let pool: &[u8] = b"abAB01.*+?()[]{}|^$\\ \n\x00\xff";
    let runs = 520;
    for run in 0..runs {
        let k = rng.random_range(2..=20);
        let size = rng.random_range(2..=8);
        let start = rng.random_range(0..=pool.len() - size);
        let alphabet = &pool[start..start + size];
        let c = common::random_corpus(&mut rng, k, 5..=120, alphabet);
        let mut cfg = if run % 5 == 0 {
            StrategyConfig::min_variance(9)
        } else {
            StrategyConfig::default()
        };
        cfg.min_anchor_len = rng.random_range(1..=3);

        let chain = align(&c, &cfg).unwrap();
        ensure!(chain.validate(&c).is_ok(), "run {run}: invalid chain");
        let aln = render(&c, &chain).unwrap();
        ensure!(
            common::reconstructs(aln.rows(), &c),
            "run {run}: rows do not reconstruct"
        );
        for cols in aln.anchor_columns() {
            for col in cols.clone() {
                let b = aln.rows()[0][col];
                ensure!(
                    b.is_some() && aln.rows().iter().all(|r| r[col] == b),
                    "run {run}: anchor column {col} not aligned"
                );
            }
        }
        let pattern = regex_skeleton(&chain, &c, &cfg);
        let re = compile_skeleton(&pattern).unwrap();
        ensure!(
            c.iter().all(|s| re.is_match(s.bytes())),
            "run {run}: skeleton {pattern} misses a sequence"
        );
    }
    Ok(format!("{runs} random corpora, zero violations"))
}

fn baseline_correctness() -> Verdict {
    let mut rng = common::rng(6);
    let word = |rng: &mut rand_chacha::ChaCha8Rng, max: usize, alphabet: &[u8]| -> Vec<u8> {
        let len = rng.random_range(0..=max);
        (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect()
    };
    let pairs = 1000;
    for i in 0..pairs {
        let a = word(&mut rng, 40, b"acgt");
        let b = word(&mut rng, 40, b"acgt");
        let d = common::levenshtein_table(&a, &b);
        let nw = -needleman_wunsch(&a, &b, &Scoring::DISTANCE).score;
        ensure!(
            nw == d as i64 && levenshtein(&a, &b) == d,
            "pair {i}: nw {nw}, oracle {d}"
        );
    }

    // sanity of the pruned search against plain enumeration
    for _ in 0..100 {
        let a = word(&mut rng, 5, b"ab");
        let b = word(&mut rng, 5, b"ab");
        let x = common::exhaustive_alignment_score(&a, &b, 1, -1, -2);
        let y = common::enumerate_alignment_score(&a, &b, 1, -1, -2);
        ensure!(x == y, "oracles disagree on {a:?} {b:?}");
    }

    let exhaustive = 300;
    for i in 0..exhaustive {
        let a = word(&mut rng, 12, b"abc");
        let b = word(&mut rng, 12, b"abc");
        for s in [
            Scoring::default(),
            Scoring::DISTANCE,
            Scoring::new(2, -1, -1),
        ] {
            let nw = needleman_wunsch(&a, &b, &s).score;
            let ex = common::exhaustive_alignment_score(&a, &b, s.match_score, s.mismatch, s.gap);
            ensure!(nw == ex, "pair {i} {s:?}: nw {nw}, exhaustive {ex}");
        }
    }
    Ok(format!(
        "{pairs} pairs equal Levenshtein; {exhaustive} pairs x 3 scorings equal exhaustive search"
    ))
}

fn scaling_trend() -> Verdict {
    let t = Instant::now();
    let corpus = generate_synthetic(Template::LdapLike, 200, 2012).unwrap();
    let mut lens: Vec<usize> = corpus.iter().map(|s| s.len()).collect();
    lens.sort_unstable();
    let median_len = lens[lens.len() / 2];
    ensure!(
        (225..=275).contains(&median_len),
        "median length {median_len}"
    );

    let plan = BenchPlan {
        counts: DEFAULT_COUNTS.to_vec(),
        repeats: 5,
        algorithms: vec![Algorithm::Ms, Algorithm::ClustalwLite],
        strategy: StrategyConfig::default(),
        scoring: Scoring::default(),
    };
    let s = run_bench(&corpus, &plan, |_, _| {}).unwrap();
    let fit = s.fit(Algorithm::ClustalwLite, FitModel::Quadratic).unwrap();
    let ms200 = s.median(Algorithm::Ms, 200).unwrap();
    let cw200 = s.median(Algorithm::ClustalwLite, 200).unwrap();
    let up2 = s.speed_up(Algorithm::ClustalwLite, 2).unwrap();
    let up200 = s.speed_up(Algorithm::ClustalwLite, 200).unwrap();
    let elapsed = t.elapsed();
    let detail = format!(
        "median len {median_len}; clustalw_lite quadratic R2 {:.4}; n=200 ms {:.1} ms vs {:.1} ms \
         (x{up200:.1}); speed-up at n=2 x{up2:.2}; {:.0} s",
        fit.r_squared,
        ms200.as_secs_f64() * 1e3,
        cw200.as_secs_f64() * 1e3,
        elapsed.as_secs_f64()
    );
    ensure!(fit.r_squared >= 0.97, "(a) failed: {detail}");
    ensure!(cw200 >= ms200 * 5, "(b) failed: {detail}");
    ensure!(up200 > up2, "(c) failed: {detail}");
    ensure!(elapsed <= Duration::from_secs(600), "over budget: {detail}");
    Ok(detail)
}

fn strategy_behaviour() -> Verdict {
    // length 100; QWERTY at 5 and 90, ABCDE at 50 in both; the fillers
    // share no byte with each other or with the planted words
    let fill = |alphabet: &[u8], n: usize, off: usize| -> String {
        (0..n)
            .map(|i| char::from(alphabet[(i * 7 + off) % alphabet.len()]))
            .collect()
    };
    let f0 = |n, off| fill(b"abcdefghij", n, off);
    let f1 = |n, off| fill(b"klmnopqrst", n, off);
    let s0 = format!("{}QWERTY{}ABCDE{}", f0(5, 0), f0(39, 1), f0(45, 2));
    let s1 = format!("{}ABCDE{}QWERTY{}", f1(50, 0), f1(35, 1), f1(4, 2));
    ensure!(
        s0.len() == 100 && s1.len() == 100,
        "lengths {} {}",
        s0.len(),
        s1.len()
    );
    let c = strs(&[&s0, &s1]);
    let msws = Gst::build(&c).unwrap().extract_msws();
    let lens = [100, 100];
    let seg = Segment::whole(&c);

    let blm = select_anchor(&msws, &seg, &StrategyConfig::default(), &lens).unwrap();
    ensure!(
        blm == Anchor::new("QWERTY", vec![5, 90]),
        "biggest_left_most chose {blm}"
    );
    for n in [2, 9] {
        let mv = select_anchor(&msws, &seg, &StrategyConfig::min_variance(n), &lens).unwrap();
        ensure!(
            mv == Anchor::new("ABCDE", vec![50, 50]),
            "min_variance({n}) chose {mv}"
        );
    }
    Ok("biggest_left_most -> QWERTY@{5,90}; min_variance(2|9) -> ABCDE@{50,50}".into())
}

fn padding_runs() -> Verdict {
    let c = generate_synthetic(Template::FixedWidth, 30, 9).unwrap();
    let chain = align(&c, &StrategyConfig::default()).unwrap();
    let ms = render(&c, &chain).unwrap();
    ensure!(
        common::reconstructs(ms.rows(), &c),
        "ms rows do not reconstruct"
    );
    let cw = clustalw_lite(&c, &Scoring::default()).unwrap();
    ensure!(
        common::reconstructs(cw.rows(), &c),
        "clustalw_lite rows do not reconstruct"
    );

    let longest = chain.iter().map(Anchor::len).max().unwrap_or(0);
    ensure!(longest > 0, "no anchors");
    for a in chain.iter().filter(|a| a.len() == longest) {
        ensure!(
            a.value.iter().all(|&b| b == b' '),
            "longest anchor {a} is not padding"
        );
    }
    Ok(format!(
        "both reconstruct; longest anchor is {longest} spaces"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example", worked_example),
        ("suffix tree structure", gst_structure),
        ("combination counting", combinations),
        ("oracle equivalence", oracle_equivalence),
        ("alignment soundness", soundness),
        ("baseline correctness", baseline_correctness),
        ("scaling trend", scaling_trend),
        ("strategy behaviour", strategy_behaviour),
        ("fixed-width padding", padding_runs),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match verdict {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
