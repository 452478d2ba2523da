//! Alignment quality and scaling statistics.
//!
//! Quality is measured as unit-cost sum-of-pairs (SP) distance over the
//! columns of an alignment and as the number of columns on which every row
//! agrees. Scaling curves are fitted by ordinary least squares.

use std::time::Duration;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::msalign::AnchorChain;

fn check_rows(rows: &[Vec<u8>]) -> Result<usize> {
    let width = rows.first().map_or(0, Vec::len);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::RaggedRows {
                row: i,
                len: r.len(),
                expected: width,
            });
        }
    }
    Ok(width)
}

/// Sum over unordered row pairs of the columns where the two rows differ.
/// Gap against gap costs nothing; gap against a symbol costs one.
pub fn sp_edit_distance(rows: &[Vec<u8>], gap: u8) -> Result<u64> {
    let width = check_rows(rows)?;
    // gap/gap is equal and gap/symbol unequal, so no special case is needed
    let _ = gap;
    let n = rows.len() as u64;
    let mut counts = [0u64; 256];
    let mut total = 0;
    for c in 0..width {
        for r in rows {
            counts[r[c] as usize] += 1;
        }
        let same: u64 = rows
            .iter()
            .map(|r| std::mem::take(&mut counts[r[c] as usize]))
            .map(|k| k * k.saturating_sub(1) / 2)
            .sum();
        total += n * (n - 1) / 2 - same;
    }
    Ok(total)
}

/// Total anchor length of a chain.
pub fn overlap_chars(chain: &AnchorChain) -> usize {
    chain.overlap_chars()
}

/// Columns where every row carries the same non-gap symbol.
pub fn overlap_chars_matrix(rows: &[Vec<u8>], gap: u8) -> Result<usize> {
    let width = check_rows(rows)?;
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    Ok((0..width)
        .filter(|&c| first[c] != gap && rows.iter().all(|r| r[c] == first[c]))
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// `t = c0 + c1 n`
    Linear,
    /// `t = c0 + c1 n + c2 n^2`
    Quadratic,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub model: FitModel,
    /// Ascending powers of n, intercept first.
    pub coefficients: Vec<f64>,
    pub r_squared: f64,
}

impl FitResult {
    pub fn predict(&self, n: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * n + c)
    }
}

/// Least-squares fit of `t` against `n`. Needs at least one more distinct
/// `n` than the model has coefficients minus one, i.e. the design matrix must
/// have full column rank.
pub fn fit_scaling(points: &[(f64, f64)], model: FitModel) -> Result<FitResult> {
    let degree = match model {
        FitModel::Linear => 1,
        FitModel::Quadratic => 2,
    };
    if points.len() < 3 {
        return Err(Error::DegenerateFit(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    let cols = degree + 1;
    let x = DMatrix::from_fn(points.len(), cols, |r, c| points[r].0.powi(c as i32));
    let y = DVector::from_iterator(points.len(), points.iter().map(|p| p.1));

    // scale columns so n^2 does not swamp the rank test
    let norms: Vec<f64> = (0..cols).map(|c| x.column(c).norm()).collect();
    if norms.contains(&0.0) {
        return Err(Error::DegenerateFit("all-zero design column".into()));
    }
    let scaled = DMatrix::from_fn(points.len(), cols, |r, c| x[(r, c)] / norms[c]);
    let svd = scaled.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if smin <= smax * 1e-10 {
        return Err(Error::DegenerateFit(
            "design matrix is rank deficient (too few distinct n)".into(),
        ));
    }
    let beta = svd
        .solve(&y, 0.0)
        .map_err(|e| Error::DegenerateFit(e.to_string()))?;
    let coefficients: Vec<f64> = (0..cols).map(|c| beta[c] / norms[c]).collect();

    let mean = y.mean();
    let fitted = &x * DVector::from_column_slice(&coefficients);
    let ss_res = (&y - fitted).norm_squared();
    let ss_tot: f64 = y.iter().map(|v| (v - mean) * (v - mean)).sum();
    let r_squared = if ss_tot == 0.0 {
        if ss_res <= f64::EPSILON {
            1.0
        } else {
            0.0
        }
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(FitResult {
        model,
        coefficients,
        r_squared,
    })
}

/// Median of the samples; the mean of the middle two for even counts.
pub fn median(samples: &[Duration]) -> Option<Duration> {
    let mut v = samples.to_vec();
    v.sort_unstable();
    let n = v.len();
    match n {
        0 => None,
        _ if n % 2 == 1 => Some(v[n / 2]),
        _ => Some((v[n / 2 - 1] + v[n / 2]) / 2),
    }
}

/// Summary of one alignment run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignmentReport {
    pub algorithm: String,
    pub rows: usize,
    pub columns: usize,
    pub sp_edit_distance: u64,
    pub overlap_chars: usize,
    pub anchor_count: usize,
    pub msw_count: usize,
    #[serde(serialize_with = "as_nanos")]
    pub elapsed: Duration,
}

fn as_nanos<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_nanos())
}

impl AlignmentReport {
    pub const CSV_HEADER: &'static str =
        "algorithm,n,repeat,elapsed_ns,sp_edit_distance,overlap_chars,anchor_count,msw_count";

    /// One data row matching [`Self::CSV_HEADER`].
    pub fn csv_row(&self, repeat: usize) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.algorithm,
            self.rows,
            repeat,
            self.elapsed.as_nanos(),
            self.sp_edit_distance,
            self.overlap_chars,
            self.anchor_count,
            self.msw_count
        )
    }
}
