//! Observed and resampled statistic curves on a shared argument grid.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Direction of extremeness for a test statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternative {
    /// Both tails are extreme.
    TwoSided,
    /// Small values are extreme.
    LessExtreme,
    /// Large values are extreme.
    GreaterExtreme,
}

/// Scalar depth measure used to order resampled curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    /// Minimum pointwise rank.
    ExtremeRank,
    /// Extreme rank length: lexical rank of the sorted pointwise-rank vector.
    Erl,
    /// Minimum pointwise continuous rank, scaled by the number of resamples.
    Continuous,
    /// Extreme rank refined by the average continuous-rank deficit.
    Area,
}

/// An observed statistic vector together with `s` resampled vectors drawn
/// under the complete null hypothesis, all evaluated on the same grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSet {
    args: Vec<f64>,
    observed: Vec<f64>,
    resamples: Matrix,
}

impl CurveSet {
    /// Validate and assemble a curve set.
    ///
    /// Requires at least two resamples, a non-empty strictly increasing
    /// argument grid, matching lengths and all-finite values.
    pub fn new(args: Vec<f64>, observed: Vec<f64>, resamples: Matrix) -> Result<Self> {
        let m = args.len();
        if m == 0 {
            return Err(Error::InvalidInput("argument grid is empty".into()));
        }
        if observed.len() != m {
            return Err(Error::InvalidInput(format!(
                "observed curve has {} points, grid has {m}",
                observed.len()
            )));
        }
        if resamples.ncols() != m {
            return Err(Error::InvalidInput(format!(
                "resamples have {} columns, grid has {m}",
                resamples.ncols()
            )));
        }
        if resamples.nrows() < 2 {
            return Err(Error::InvalidInput(
                "need at least 2 resamples".into(),
            ));
        }
        for (k, w) in args.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::InvalidInput(format!(
                    "argument grid not strictly increasing at index {}",
                    k + 1
                )));
            }
        }
        for (k, v) in args.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!("argument {k} is not finite")));
            }
        }
        for (k, v) in observed.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { row: 0, column: k });
            }
        }
        resamples.check_finite()?;
        Ok(Self {
            args,
            observed,
            resamples,
        })
    }

    /// Number of domain points.
    pub fn m(&self) -> usize {
        self.args.len()
    }

    /// Number of resamples.
    pub fn s(&self) -> usize {
        self.resamples.nrows()
    }

    pub fn args(&self) -> &[f64] {
        &self.args
    }

    pub fn observed(&self) -> &[f64] {
        &self.observed
    }

    pub fn resamples(&self) -> &Matrix {
        &self.resamples
    }

    pub fn resample(&self, i: usize) -> &[f64] {
        self.resamples.row(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: usize) -> Vec<f64> {
        (0..m).map(|k| k as f64).collect()
    }

    #[test]
    fn accepts_minimal_valid_set() {
        let resamples = Matrix::from_rows(vec![vec![1.0], vec![2.0]]).unwrap();
        let cs = CurveSet::new(vec![0.5], vec![0.0], resamples).unwrap();
        assert_eq!(cs.s(), 2);
        assert_eq!(cs.m(), 1);
    }

    #[test]
    fn rejects_single_resample() {
        let resamples = Matrix::from_rows(vec![vec![1.0, 2.0]]).unwrap();
        assert!(CurveSet::new(grid(2), vec![0.0, 0.0], resamples).is_err());
    }

    #[test]
    fn rejects_non_increasing_grid() {
        let resamples = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let err = CurveSet::new(vec![1.0, 1.0], vec![0.0, 0.0], resamples).unwrap_err();
        assert!(err.to_string().contains("strictly increasing"));
    }

    #[test]
    fn rejects_nan_resample_with_location() {
        let resamples = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, f64::NAN]]).unwrap();
        match CurveSet::new(grid(2), vec![0.0, 0.0], resamples).unwrap_err() {
            Error::NonFinite { row, column } => assert_eq!((row, column), (1, 1)),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
