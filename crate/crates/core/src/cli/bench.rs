//! Timing harness: aligns growing prefixes of a corpus with each algorithm
//! and summarises wall-clock medians, quality metrics and scaling fits.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::baseline::{clustalw_lite, nw_pairwise, Scoring};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::metrics::{
    fit_scaling, median, overlap_chars_matrix, sp_edit_distance, AlignmentReport, FitModel,
    FitResult,
};
use crate::msalign::{align_with_stats, render, StrategyConfig};

const GAP: u8 = b'*';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Suffix-tree anchor alignment.
    #[value(name = "ms")]
    Ms,
    /// Distance matrix, neighbour joining, progressive alignment.
    #[value(name = "clustalw_lite")]
    ClustalwLite,
    /// Progressive alignment in input order, no distance matrix.
    #[value(name = "nw_pairwise")]
    NwPairwise,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Ms => "ms",
            Algorithm::ClustalwLite => "clustalw_lite",
            Algorithm::NwPairwise => "nw_pairwise",
        })
    }
}

/// Default sequence-count schedule.
pub const DEFAULT_COUNTS: [usize; 9] = [2, 5, 10, 15, 20, 25, 50, 100, 200];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchPlan {
    /// Strictly increasing prefix sizes, each at least 2.
    pub counts: Vec<usize>,
    pub repeats: usize,
    pub algorithms: Vec<Algorithm>,
    pub strategy: StrategyConfig,
    pub scoring: Scoring,
}

impl BenchPlan {
    pub fn validate(&self, corpus: &Corpus) -> Result<()> {
        if self.counts.is_empty() {
            return Err(Error::InvalidConfig("no sequence counts".into()));
        }
        if self.counts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "sequence counts must be strictly increasing".into(),
            ));
        }
        if self.counts[0] < 2 {
            return Err(Error::InvalidConfig(
                "sequence counts must be at least 2".into(),
            ));
        }
        if self.repeats == 0 {
            return Err(Error::InvalidConfig("repeats must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected".into()));
        }
        self.strategy.validate()?;
        corpus.require(*self.counts.last().expect("non-empty"))
    }
}

/// All runs of one algorithm on one prefix size.
#[derive(Debug, Clone, Serialize)]
pub struct BenchCell {
    pub algorithm: Algorithm,
    pub n: usize,
    #[serde(serialize_with = "nanos_list")]
    pub times: Vec<Duration>,
    /// Metrics of the last run; every run produces the same alignment.
    pub report: AlignmentReport,
}

fn nanos_list<S: serde::Serializer>(v: &[Duration], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Duration::as_nanos))
}

impl BenchCell {
    pub fn median(&self) -> Duration {
        median(&self.times).expect("at least one repeat")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchSummary {
    pub cells: Vec<BenchCell>,
}

impl BenchSummary {
    pub fn cell(&self, algorithm: Algorithm, n: usize) -> Option<&BenchCell> {
        self.cells
            .iter()
            .find(|c| c.algorithm == algorithm && c.n == n)
    }

    pub fn median(&self, algorithm: Algorithm, n: usize) -> Option<Duration> {
        self.cell(algorithm, n).map(BenchCell::median)
    }

    /// Median `baseline` time over median `ms` time at `n`.
    pub fn speed_up(&self, baseline: Algorithm, n: usize) -> Option<f64> {
        let b = self.median(baseline, n)?.as_secs_f64();
        let m = self.median(Algorithm::Ms, n)?.as_secs_f64();
        (m > 0.0).then(|| b / m)
    }

    /// Least-squares fit of median seconds against n.
    pub fn fit(&self, algorithm: Algorithm, model: FitModel) -> Result<FitResult> {
        let points: Vec<(f64, f64)> = self
            .cells
            .iter()
            .filter(|c| c.algorithm == algorithm)
            .map(|c| (c.n as f64, c.median().as_secs_f64()))
            .collect();
        fit_scaling(&points, model)
    }
}

/// Aligns `corpus` once with `algorithm` and measures it. Only the
/// alignment itself is timed, not metric computation.
pub fn run_once(
    corpus: &Corpus,
    algorithm: Algorithm,
    strategy: &StrategyConfig,
    scoring: &Scoring,
) -> Result<AlignmentReport> {
    let (aln, anchors, msws, elapsed) = match algorithm {
        Algorithm::Ms => {
            let t = Instant::now();
            let (chain, stats) = align_with_stats(corpus, strategy)?;
            let elapsed = t.elapsed();
            (
                render(corpus, &chain)?,
                chain.len(),
                stats.msw_count,
                elapsed,
            )
        }
        Algorithm::ClustalwLite | Algorithm::NwPairwise => {
            let t = Instant::now();
            let aln = match algorithm {
                Algorithm::ClustalwLite => clustalw_lite(corpus, scoring)?,
                _ => nw_pairwise(corpus, scoring)?,
            };
            (aln, 0, 0, t.elapsed())
        }
    };
    let rows = aln.to_rows(GAP);
    let overlap = match algorithm {
        Algorithm::Ms => aln.anchor_columns().iter().map(|r| r.len()).sum(),
        _ => overlap_chars_matrix(&rows, GAP)?,
    };
    Ok(AlignmentReport {
        algorithm: algorithm.to_string(),
        rows: rows.len(),
        columns: aln.width(),
        sp_edit_distance: sp_edit_distance(&rows, GAP)?,
        overlap_chars: overlap,
        anchor_count: anchors,
        msw_count: msws,
        elapsed,
    })
}

/// Runs the whole plan. `on_run` sees every individual measurement with
/// its repeat index, e.g. to stream CSV rows.
pub fn run_bench(
    corpus: &Corpus,
    plan: &BenchPlan,
    mut on_run: impl FnMut(&AlignmentReport, usize),
) -> Result<BenchSummary> {
    plan.validate(corpus)?;
    let mut cells = Vec::new();
    for &algorithm in &plan.algorithms {
        for &n in &plan.counts {
            let prefix = corpus.take_prefix(n)?;
            let mut times = Vec::with_capacity(plan.repeats);
            let mut last = None;
            for repeat in 0..plan.repeats {
                let report = run_once(&prefix, algorithm, &plan.strategy, &plan.scoring)?;
                on_run(&report, repeat);
                times.push(report.elapsed);
                last = Some(report);
            }
            cells.push(BenchCell {
                algorithm,
                n,
                times,
                report: last.expect("repeats >= 1"),
            });
        }
    }
    Ok(BenchSummary { cells })
}

impl fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<14}{:>6}{:>14}{:>12}{:>10}{:>9}{:>7}",
            "algorithm", "n", "median_ms", "sp_edit", "overlap", "anchors", "msws"
        )?;
        for c in &self.cells {
            writeln!(
                f,
                "{:<14}{:>6}{:>14.3}{:>12}{:>10}{:>9}{:>7}",
                c.algorithm.to_string(),
                c.n,
                c.median().as_secs_f64() * 1e3,
                c.report.sp_edit_distance,
                c.report.overlap_chars,
                c.report.anchor_count,
                c.report.msw_count
            )?;
        }

        let mut algorithms: Vec<Algorithm> = Vec::new();
        for c in &self.cells {
            if !algorithms.contains(&c.algorithm) {
                algorithms.push(c.algorithm);
            }
        }
        let baselines: Vec<Algorithm> = algorithms
            .iter()
            .copied()
            .filter(|&a| a != Algorithm::Ms)
            .collect();
        if algorithms.contains(&Algorithm::Ms) && !baselines.is_empty() {
            writeln!(f, "\nspeed-up (baseline median / ms median)")?;
            write!(f, "{:>6}", "n")?;
            for b in &baselines {
                write!(f, "{:>16}", b.to_string())?;
            }
            writeln!(f)?;
            for c in self.cells.iter().filter(|c| c.algorithm == Algorithm::Ms) {
                write!(f, "{:>6}", c.n)?;
                for &b in &baselines {
                    match self.speed_up(b, c.n) {
                        Some(s) => write!(f, "{s:>16.2}")?,
                        None => write!(f, "{:>16}", "-")?,
                    }
                }
                writeln!(f)?;
            }
        }

        writeln!(f, "\nscaling fit of median time against n")?;
        writeln!(
            f,
            "{:<14}{:>12}{:>14}",
            "algorithm", "linear_r2", "quadratic_r2"
        )?;
        for &a in &algorithms {
            let show = |m| match self.fit(a, m) {
                Ok(r) => format!("{:.4}", r.r_squared),
                Err(_) => "n/a".to_string(),
            };
            writeln!(
                f,
                "{:<14}{:>12}{:>14}",
                a.to_string(),
                show(FitModel::Linear),
                show(FitModel::Quadratic)
            )?;
        }
        Ok(())
    }
}
