//! Seeded k-means over embedding rows.
//!
//! Careful seeding (first center uniform, the rest sampled proportional
//! to squared distance from the chosen centers), Lloyd iterations until
//! the assignment stabilizes, deterministic per seed. Restart r uses the
//! derived seed `seed + r`; the best-distortion restart wins, ties going
//! to the lowest restart index.

use ndarray::Array2;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::eigen::Embedding;
use crate::error::{Error, Result};
use crate::spectral::Partition;

#[derive(Debug, Clone)]
pub struct KMeansResult {
    pub partition: Partition,
    pub centers: Array2<f64>,
    /// Sum of squared distances to the assigned centers.
    pub distortion: f64,
    /// Lloyd iterations of the winning restart.
    pub iterations: usize,
}

pub fn kmeans(
    rows: &Embedding,
    k: usize,
    seed: u64,
    restarts: usize,
    max_iters: usize,
) -> Result<KMeansResult> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty embedding".into()));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n (n={n}), got {k}"
        )));
    }
    if restarts == 0 || max_iters == 0 {
        return Err(Error::InvalidParameter(
            "restarts and max_iters must be >= 1".into(),
        ));
    }

    let mut best: Option<KMeansResult> = None;
    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart as u64));
        let run = lloyd(rows, k, max_iters, &mut rng);
        let replace = match &best {
            None => true,
            Some(b) => run.distortion < b.distortion,
        };
        if replace {
            best = Some(run);
        }
    }
    Ok(best.expect("restarts >= 1"))
}

fn lloyd(rows: &Embedding, k: usize, max_iters: usize, rng: &mut ChaCha8Rng) -> KMeansResult {
    let n = rows.len();
    let dim = rows.dim();
    let mut centers = seed_centers(rows, k, rng);
    let mut assignment = vec![usize::MAX; n];
    let mut iterations = 0usize;

    for _ in 0..max_iters {
        iterations += 1;
        let next = assign(rows, &centers, k);
        if next == assignment {
            break;
        }
        assignment = next;
        repair_empty_clusters(rows, &centers, &mut assignment, k);
        update_centers(rows, &assignment, &mut centers, k, dim);
    }

    let distortion: f64 = (0..n)
        .map(|i| squared_distance(rows, i, &centers, assignment[i]))
        .sum();
    let labels: Vec<usize> = assignment.iter().map(|&c| c + 1).collect();
    let partition = relabel_dense(labels, k);
    KMeansResult {
        partition,
        centers,
        distortion,
        iterations,
    }
}

/// Distance-squared-proportional seeding. If every remaining point has
/// zero distance to a chosen center (duplicate points), remaining centers
/// fall back to points in index order.
fn seed_centers(rows: &Embedding, k: usize, rng: &mut ChaCha8Rng) -> Array2<f64> {
    let n = rows.len();
    let dim = rows.dim();
    let mut centers = Array2::zeros((k, dim));
    let mut chosen = vec![false; n];

    let first = rng.gen_range(0..n);
    centers.row_mut(0).assign(&rows.row(first));
    chosen[first] = true;

    let mut d2: Vec<f64> = (0..n).map(|i| row_sq_dist(rows, i, &centers, 0)).collect();
    for c in 1..k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.gen::<f64>() * total;
            let mut pick = n - 1;
            for (i, &w) in d2.iter().enumerate() {
                if w <= 0.0 {
                    continue;
                }
                target -= w;
                if target <= 0.0 {
                    pick = i;
                    break;
                }
            }
            pick
        } else {
            // all mass collapsed: take the lowest unchosen index
            (0..n).find(|&i| !chosen[i]).unwrap_or(c % n)
        };
        chosen[pick] = true;
        centers.row_mut(c).assign(&rows.row(pick));
        for i in 0..n {
            d2[i] = d2[i].min(row_sq_dist(rows, i, &centers, c));
        }
    }
    centers
}

/// Nearest-center assignment, ties broken toward the lowest center index.
fn assign(rows: &Embedding, centers: &Array2<f64>, k: usize) -> Vec<usize> {
    (0..rows.len())
        .map(|i| {
            let mut best = 0usize;
            let mut best_d = row_sq_dist(rows, i, centers, 0);
            for c in 1..k {
                let d = row_sq_dist(rows, i, centers, c);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            best
        })
        .collect()
}

/// Give each empty cluster the point currently farthest from its center,
/// drawn from clusters that can spare one.
fn repair_empty_clusters(
    rows: &Embedding,
    centers: &Array2<f64>,
    assignment: &mut [usize],
    k: usize,
) {
    let n = assignment.len();
    loop {
        let mut counts = vec![0usize; k];
        for &c in assignment.iter() {
            counts[c] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return;
        };
        let mut donor: Option<(usize, f64)> = None;
        for i in 0..n {
            if counts[assignment[i]] <= 1 {
                continue;
            }
            let d = row_sq_dist(rows, i, centers, assignment[i]);
            let better = match donor {
                None => true,
                Some((_, best)) => d > best,
            };
            if better {
                donor = Some((i, d));
            }
        }
        match donor {
            Some((i, _)) => assignment[i] = empty,
            None => return, // fewer points than clusters; cannot happen for k <= n
        }
    }
}

fn update_centers(
    rows: &Embedding,
    assignment: &[usize],
    centers: &mut Array2<f64>,
    k: usize,
    dim: usize,
) {
    let mut sums = Array2::<f64>::zeros((k, dim));
    let mut counts = vec![0usize; k];
    for (i, &c) in assignment.iter().enumerate() {
        counts[c] += 1;
        for (d, &value) in rows.row(i).iter().enumerate() {
            sums[[c, d]] += value;
        }
    }
    for c in 0..k {
        if counts[c] > 0 {
            for d in 0..dim {
                centers[[c, d]] = sums[[c, d]] / counts[c] as f64;
            }
        }
    }
}

fn row_sq_dist(rows: &Embedding, i: usize, centers: &Array2<f64>, c: usize) -> f64 {
    rows.row(i)
        .iter()
        .zip(centers.row(c).iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum()
}

fn squared_distance(rows: &Embedding, i: usize, centers: &Array2<f64>, c: usize) -> f64 {
    row_sq_dist(rows, i, centers, c)
}

/// All k clusters are nonempty after repair, so labels 1..=k all occur.
fn relabel_dense(labels: Vec<usize>, k: usize) -> Partition {
    Partition::new(labels, k).expect("k-means labels form a valid partition")
}
