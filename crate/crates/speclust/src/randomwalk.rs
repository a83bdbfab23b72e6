//! Random-walk view of the similarity graph: transition matrix,
//! stationary distribution, Ncut as transition probabilities, and the
//! commute distance through the Laplacian pseudo-inverse.

use ndarray::{Array1, Array2};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::eigen::{eig_symmetric, Embedding, SpectralDecomposition, ZERO_EIGENVALUE_RTOL};
use crate::error::{Error, Result};
use crate::graph::{component_count, cut_weight, set_measures, SimilarityGraph, VertexSet};
use crate::laplacian::{build_laplacian, LaplacianKind};

/// Row-stochastic transition matrix P = D^{-1} W with its stationary
/// distribution π_i = d_i / vol(V).
#[derive(Debug, Clone, PartialEq)]
pub struct WalkModel {
    pub transition: Array2<f64>,
    pub stationary: Array1<f64>,
}

pub fn build_walk(g: &SimilarityGraph) -> Result<WalkModel> {
    let n = g.vertex_count();
    if let Some(i) = g.degrees().iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex(i + 1));
    }
    let volume = g.total_volume();
    let mut transition = Array2::zeros((n, n));
    for i in 0..n {
        for &(j, w) in g.neighbors(i) {
            transition[[i, j]] = w / g.degree(i);
        }
    }
    let stationary = Array1::from_iter(g.degrees().iter().map(|d| d / volume));
    Ok(WalkModel {
        transition,
        stationary,
    })
}

/// Ncut(A, Ā) computed as P(Ā|A) + P(A|Ā) for a stationary walk:
/// W(A,Ā)/vol(A) + W(Ā,A)/vol(Ā).
pub fn ncut_via_walk(g: &SimilarityGraph, a: &VertexSet) -> Result<f64> {
    let complement = a.complement();
    if a.is_empty() || complement.is_empty() {
        return Err(Error::InvalidPartition(
            "both sides of the bipartition must be nonempty".into(),
        ));
    }
    let (_, vol_a) = set_measures(g, a);
    let (_, vol_b) = set_measures(g, &complement);
    for (side, vol) in [(1usize, vol_a), (2, vol_b)] {
        if vol <= 0.0 {
            return Err(Error::UndefinedObjective {
                cluster: side,
                reason: "zero volume".into(),
            });
        }
    }
    Ok(cut_weight(g, a, &complement) / vol_a + cut_weight(g, &complement, a) / vol_b)
}

/// The Laplacian pseudo-inverse L† = U Λ† U' together with the graph
/// volume; enough to evaluate commute distances.
#[derive(Debug, Clone, PartialEq)]
pub struct CommuteKernel {
    pseudo_inverse: Array2<f64>,
    volume: f64,
}

impl CommuteKernel {
    pub fn len(&self) -> usize {
        self.pseudo_inverse.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.pseudo_inverse.nrows() == 0
    }

    pub fn pseudo_inverse(&self) -> &Array2<f64> {
        &self.pseudo_inverse
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }
}

/// Assemble L† from the eigendecomposition of the unnormalized
/// Laplacian, inverting eigenvalues above the zero threshold
/// (λ < 1e-8·λ_max counts as zero). Requires a connected graph.
pub fn commute_kernel(g: &SimilarityGraph) -> Result<CommuteKernel> {
    if component_count(g) != 1 {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let lap = build_laplacian(g, LaplacianKind::Unnormalized)?;
    let dec = eig_symmetric(lap.values())?;
    let tol = ZERO_EIGENVALUE_RTOL * dec.eigenvalue(n - 1).max(0.0);
    let mut pseudo_inverse = Array2::zeros((n, n));
    let u = dec.eigenvectors();
    for k in 0..n {
        let lambda = dec.eigenvalue(k);
        if lambda <= tol {
            continue;
        }
        let inv = 1.0 / lambda;
        for i in 0..n {
            for j in i..n {
                let v = inv * u[[i, k]] * u[[j, k]];
                pseudo_inverse[[i, j]] += v;
                if i != j {
                    pseudo_inverse[[j, i]] += v;
                }
            }
        }
    }
    Ok(CommuteKernel {
        pseudo_inverse,
        volume: g.total_volume(),
    })
}

/// Commute distance c_ij = vol(V) (l†_ii − 2 l†_ij + l†_jj): the expected
/// round-trip time of the random walk between the two vertices.
pub fn commute_distance(kernel: &CommuteKernel, i: usize, j: usize) -> Result<f64> {
    let n = kernel.len();
    if i >= n || j >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex index out of range: ({i}, {j}) with n={n}"
        )));
    }
    let l = &kernel.pseudo_inverse;
    Ok(kernel.volume * (l[[i, i]] - 2.0 * l[[i, j]] + l[[j, j]]))
}

/// Commute-time embedding Z = U (Λ†)^{1/2}: n×n rows z_i with
/// vol(V)·‖z_i − z_j‖² = c_ij. Columns of zero eigenvalues contribute
/// nothing.
pub fn commute_embedding(
    kernel: &CommuteKernel,
    decomp: &SpectralDecomposition,
) -> Result<Embedding> {
    let n = kernel.len();
    if decomp.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: decomp.len(),
        });
    }
    let tol = ZERO_EIGENVALUE_RTOL * decomp.eigenvalue(n - 1).max(0.0);
    let mut coords = Array2::zeros((n, n));
    for k in 0..n {
        let lambda = decomp.eigenvalue(k);
        if lambda <= tol {
            continue;
        }
        let scale = 1.0 / lambda.sqrt();
        for i in 0..n {
            coords[[i, k]] = decomp.eigenvectors()[[i, k]] * scale;
        }
    }
    Ok(Embedding::new(coords))
}

/// Empirical mean round-trip time i → j → i over seeded random-walk
/// simulations. Trial t uses the derived seed `seed + t`, so trials are
/// independent and the estimate is reproducible.
pub fn walk_simulate_commute(
    g: &SimilarityGraph,
    i: usize,
    j: usize,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    let n = g.vertex_count();
    if i >= n || j >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex index out of range: ({i}, {j}) with n={n}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    if component_count(g) != 1 {
        return Err(Error::Disconnected);
    }
    if i == j {
        return Ok(0.0);
    }
    let mut total_steps = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        let mut position = i;
        let mut target = j;
        loop {
            position = step(g, position, &mut rng);
            total_steps += 1;
            if position == target {
                if target == i {
                    break;
                }
                target = i;
            }
        }
    }
    Ok(total_steps as f64 / trials as f64)
}

/// One walk step by inverse-CDF sampling over the sorted neighbor list.
fn step(g: &SimilarityGraph, v: usize, rng: &mut ChaCha8Rng) -> usize {
    let neighbors = g.neighbors(v);
    let mut target = rng.gen::<f64>() * g.degree(v);
    for &(u, w) in neighbors {
        target -= w;
        if target <= 0.0 {
            return u;
        }
    }
    neighbors.last().expect("positive degree").0
}
