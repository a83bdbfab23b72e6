//! Pairwise similarity and distance computation between points.
//!
//! Dense n×n matrices; sparsification happens in the graph module.

use ndarray::Array2;

use crate::data::PointSet;
use crate::error::{Error, Result};

/// Symmetric non-negative similarity matrix with unit diagonal for
/// kernel similarities.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    values: Array2<f64>,
}

impl SimilarityMatrix {
    pub fn new(values: Array2<f64>) -> Result<Self> {
        check_square_symmetric(&values, "similarity")?;
        if values.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidInput(
                "similarity matrix has negative entries".into(),
            ));
        }
        Ok(SimilarityMatrix { values })
    }

    pub fn len(&self) -> usize {
        self.values.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.values.nrows() == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[[i, j]]
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }
}

/// Symmetric distance matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    values: Array2<f64>,
}

impl DistanceMatrix {
    pub fn new(values: Array2<f64>) -> Result<Self> {
        check_square_symmetric(&values, "distance")?;
        for i in 0..values.nrows() {
            if values[[i, i]] != 0.0 {
                return Err(Error::InvalidInput(format!(
                    "distance matrix has nonzero diagonal at {i}"
                )));
            }
        }
        if values.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidInput(
                "distance matrix has negative entries".into(),
            ));
        }
        Ok(DistanceMatrix { values })
    }

    pub fn len(&self) -> usize {
        self.values.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.values.nrows() == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[[i, j]]
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }
}

fn check_square_symmetric(values: &Array2<f64>, what: &str) -> Result<()> {
    if values.nrows() != values.ncols() {
        return Err(Error::DimensionMismatch {
            expected: values.nrows(),
            actual: values.ncols(),
        });
    }
    for i in 0..values.nrows() {
        for j in (i + 1)..values.ncols() {
            let (a, b) = (values[[i, j]], values[[j, i]]);
            if !a.is_finite() || !b.is_finite() || a != b {
                return Err(Error::InvalidInput(format!(
                    "{what} matrix not symmetric/finite at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Gaussian similarity s_ij = exp(−‖x_i − x_j‖² / (2σ²)). The diagonal
/// is exactly 1 and each pair is computed once, so the result is exactly
/// symmetric.
pub fn gaussian_similarity(points: &PointSet, sigma: f64) -> Result<SimilarityMatrix> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "sigma must be positive and finite, got {sigma}"
        )));
    }
    let n = points.len();
    let denom = 2.0 * sigma * sigma;
    let mut values = Array2::zeros((n, n));
    for i in 0..n {
        values[[i, i]] = 1.0;
        for j in (i + 1)..n {
            let s = (-squared_distance(points, i, j) / denom).exp();
            values[[i, j]] = s;
            values[[j, i]] = s;
        }
    }
    Ok(SimilarityMatrix { values })
}

/// Euclidean distance matrix, each pair computed once.
pub fn euclidean_distances(points: &PointSet) -> DistanceMatrix {
    let n = points.len();
    let mut values = Array2::zeros((n, n));
    for i in 0..n {
        for j in (i + 1)..n {
            let d = squared_distance(points, i, j).sqrt();
            values[[i, j]] = d;
            values[[j, i]] = d;
        }
    }
    DistanceMatrix { values }
}

fn squared_distance(points: &PointSet, i: usize, j: usize) -> f64 {
    let (a, b) = (points.coords().row(i), points.coords().row(j));
    a.iter().zip(b.iter()).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Kernel names available to [`build_similarity`]. The registry is the
/// extension point for similarity functions beyond the Gaussian.
pub fn kernel_names() -> &'static [&'static str] {
    &["gaussian"]
}

/// Build a similarity matrix by kernel name. `scale` is the kernel's
/// width parameter (σ for the Gaussian).
pub fn build_similarity(kernel: &str, points: &PointSet, scale: f64) -> Result<SimilarityMatrix> {
    match kernel {
        "gaussian" => gaussian_similarity(points, scale),
        other => Err(Error::InvalidParameter(format!(
            "unknown kernel {other:?}; available: {}",
            kernel_names().join(", ")
        ))),
    }
}
