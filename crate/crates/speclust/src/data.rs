//! Toy dataset generators and CSV ingestion.
//!
//! All generators are deterministic: the same seed and parameters yield
//! bit-identical output.

use std::path::Path;

use ndarray::Array2;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::graph::SimilarityGraph;

/// n points in d-dimensional real space.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    coords: Array2<f64>,
}

impl PointSet {
    pub fn new(coords: Array2<f64>) -> Result<Self> {
        if coords.nrows() == 0 || coords.ncols() == 0 {
            return Err(Error::InvalidInput(
                "point set must have n >= 1 and d >= 1".into(),
            ));
        }
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "point set has non-finite coordinates".into(),
            ));
        }
        Ok(PointSet { coords })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        let flat: Vec<f64> = rows.into_iter().flatten().collect();
        if flat.len() != n * d {
            return Err(Error::InvalidInput("ragged point rows".into()));
        }
        let coords =
            Array2::from_shape_vec((n, d), flat).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Self::new(coords)
    }

    pub fn len(&self) -> usize {
        self.coords.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.nrows() == 0
    }

    pub fn dim(&self) -> usize {
        self.coords.ncols()
    }

    pub fn coords(&self) -> &Array2<f64> {
        &self.coords
    }
}

/// A point set together with the generative component id (1-based) of
/// each point; the ground truth used by clustering tests.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    pub points: PointSet,
    pub labels: Vec<usize>,
}

impl LabeledSample {
    pub fn component_count(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// Sample n points from a 1-D Gaussian mixture. Components are chosen
/// uniformly at random, then each point is drawn normal around its
/// component mean with the shared standard deviation.
pub fn gen_gaussian_mixture_1d(
    n: usize,
    means: &[f64],
    std: f64,
    seed: u64,
) -> Result<LabeledSample> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if means.is_empty() {
        return Err(Error::InvalidParameter("means must be nonempty".into()));
    }
    if !std.is_finite() || std <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "std must be positive and finite, got {std}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, std).expect("validated std");
    let mut coords = Array2::zeros((n, 1));
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let component = rng.gen_range(0..means.len());
        coords[[i, 0]] = means[component] + normal.sample(&mut rng);
        labels.push(component + 1);
    }
    Ok(LabeledSample {
        points: PointSet::new(coords)?,
        labels,
    })
}

/// Fixed plane geometry for the moons-plus-Gaussian sample. The half
/// circles have unit radius; the second is offset by (1, 0.5) and
/// flipped, interleaving the two. The blob sits away from both.
const MOON_OFFSET: (f64, f64) = (1.0, 0.5);
const BLOB_CENTER: (f64, f64) = (2.5, 2.0);
/// The blob is drawn wider than the moon jitter so it reads as a diffuse
/// cluster next to the dense arcs (and is sparser in an ε-graph).
const BLOB_SPREAD_FACTOR: f64 = 6.0;

/// Two interleaved half-circle clusters plus one isotropic Gaussian blob
/// in the plane. Component 1 is the top moon, 2 the bottom moon, 3 the
/// blob; the bottom moon is denser whenever its count is larger. With
/// `noise = 0` every point lands exactly on its template position.
pub fn gen_moons_and_gaussian(
    n_per_cluster: (usize, usize, usize),
    noise: f64,
    seed: u64,
) -> Result<LabeledSample> {
    let (n_top, n_bottom, n_blob) = n_per_cluster;
    if n_top == 0 || n_bottom == 0 || n_blob == 0 {
        return Err(Error::InvalidParameter(
            "all three cluster sizes must be >= 1".into(),
        ));
    }
    if noise < 0.0 || !noise.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "noise must be >= 0, got {noise}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jitter = Normal::new(0.0, noise.max(f64::MIN_POSITIVE)).expect("validated noise");
    let blob = Normal::new(0.0, (BLOB_SPREAD_FACTOR * noise).max(f64::MIN_POSITIVE))
        .expect("validated noise");
    let n = n_top + n_bottom + n_blob;
    let mut coords = Array2::zeros((n, 2));
    let mut labels = Vec::with_capacity(n);
    let mut row = 0usize;

    // template angles at arc midpoints so a single point is well placed
    let mut push = |rng: &mut ChaCha8Rng,
                    coords: &mut Array2<f64>,
                    xy: (f64, f64),
                    dist: &Normal<f64>,
                    label: usize| {
        let dx = if noise > 0.0 { dist.sample(rng) } else { 0.0 };
        let dy = if noise > 0.0 { dist.sample(rng) } else { 0.0 };
        coords[[row, 0]] = xy.0 + dx;
        coords[[row, 1]] = xy.1 + dy;
        labels.push(label);
        row += 1;
    };
    for i in 0..n_top {
        let t = std::f64::consts::PI * (i as f64 + 0.5) / n_top as f64;
        push(&mut rng, &mut coords, (t.cos(), t.sin()), &jitter, 1);
    }
    for i in 0..n_bottom {
        let t = std::f64::consts::PI * (i as f64 + 0.5) / n_bottom as f64;
        push(
            &mut rng,
            &mut coords,
            (MOON_OFFSET.0 - t.cos(), MOON_OFFSET.1 - t.sin()),
            &jitter,
            2,
        );
    }
    for _ in 0..n_blob {
        push(&mut rng, &mut coords, BLOB_CENTER, &blob, 3);
    }
    Ok(LabeledSample {
        points: PointSet::new(coords)?,
        labels,
    })
}

/// Ladder-like graph on 4k vertices with the left rungs removed: two
/// horizontal unit-weight paths v_1..v_2k and v_2k+1..v_4k, plus unit
/// rungs joining v_k+i to v_3k+i for i = 1..k. The vertical bipartition
/// (left halves of both paths against the rest) cuts exactly 2 edges,
/// the horizontal one (path against path) cuts exactly k.
pub fn gen_cockroach_graph(k: usize) -> Result<SimilarityGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("cockroach k must be >= 1".into()));
    }
    let n = 4 * k;
    let mut edges = Vec::with_capacity(4 * k - 2 + k);
    for i in 0..(2 * k - 1) {
        edges.push((i, i + 1, 1.0)); // top path
        edges.push((2 * k + i, 2 * k + i + 1, 1.0)); // bottom path
    }
    for i in 0..k {
        edges.push((k + i, 3 * k + i, 1.0)); // rung
    }
    SimilarityGraph::from_edges(n, &edges)
}

/// Read a point set from CSV: one point per row, comma-separated
/// coordinates, '.' decimals, no quoting. A non-numeric first row is
/// treated as a header and skipped.
pub fn read_points_csv(path: &Path) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)?;
    parse_points_csv(&text)
}

pub fn parse_points_csv(text: &str) -> Result<PointSet> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;
    let mut header_seen = false;
    for (lineno, line) in text.lines().enumerate() {
        let row = lineno + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> =
            cells.iter().map(|c| c.parse::<f64>()).collect();
        match parsed {
            Ok(values) => {
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::Parse {
                        row,
                        message: "non-finite coordinate".into(),
                    });
                }
                match width {
                    None => width = Some(values.len()),
                    Some(w) if w != values.len() => {
                        return Err(Error::Parse {
                            row,
                            message: format!("expected {w} columns, found {}", values.len()),
                        })
                    }
                    _ => {}
                }
                rows.push(values);
            }
            Err(_) => {
                // only the first row may be non-numeric (a header)
                if rows.is_empty() && width.is_none() && !header_seen {
                    header_seen = true;
                    continue;
                }
                let bad = cells
                    .iter()
                    .find(|c| c.parse::<f64>().is_err())
                    .unwrap_or(&"");
                return Err(Error::Parse {
                    row,
                    message: format!("non-numeric cell {bad:?}"),
                });
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            row: 1,
            message: "no data rows".into(),
        });
    }
    PointSet::from_rows(rows)
}

/// Write a point set as CSV, one row per point.
pub fn points_to_csv(points: &PointSet) -> String {
    let mut out = String::new();
    for row in points.coords().rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
