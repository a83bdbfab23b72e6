//! Model selection and reliability diagnostics: the eigengap heuristic
//! for choosing k, the min-degree condition for unnormalized clustering,
//! eigenspace distance for perturbation checks, and the usual parameter
//! rules of thumb (MST-based ε, σ from neighbor distances, k ~ log n).

use ndarray::Array2;
use serde::Serialize;

use crate::eigen::eig_symmetric;
use crate::error::{Error, Result};
use crate::laplacian::LaplacianKind;
use crate::similarity::DistanceMatrix;

/// Eigenvalues at or above this fraction of the minimum degree are
/// flagged as unreliable for unnormalized spectral clustering.
pub const RELIABILITY_RATIO: f64 = 0.9;

const ORTHONORMAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsReport {
    pub suggested_k: usize,
    /// γ_k = λ_{k+1} − λ_k for every k, length n−1.
    pub eigengaps: Vec<f64>,
    /// 1-based indices of eigenvalues failing the min-degree condition;
    /// meaningful (and populated) for the unnormalized Laplacian only.
    pub unreliable_eigenvalue_indices: Vec<usize>,
    pub min_degree: f64,
}

/// The k in 1..=k_max with the largest eigengap λ_{k+1} − λ_k, ties
/// resolved toward the smallest k.
pub fn choose_k_eigengap(eigenvalues: &[f64], k_max: usize) -> Result<usize> {
    let n = eigenvalues.len();
    if k_max < 2 || k_max + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "k_max must satisfy 2 <= k_max <= n-1 (n={n}), got {k_max}"
        )));
    }
    let mut best_k = 1usize;
    let mut best_gap = eigenvalues[1] - eigenvalues[0];
    for k in 2..=k_max {
        let gap = eigenvalues[k] - eigenvalues[k - 1];
        if gap > best_gap {
            best_gap = gap;
            best_k = k;
        }
    }
    Ok(best_k)
}

/// 1-based indices i <= k with λ_i ≥ RELIABILITY_RATIO · min_j d_j. An
/// empty result means every eigenvalue in use sits safely below the
/// minimum degree.
pub fn check_unnormalized_reliability(
    eigenvalues: &[f64],
    degrees: &[f64],
    k: usize,
) -> Vec<usize> {
    let min_degree = degrees.iter().copied().fold(f64::INFINITY, f64::min);
    let threshold = RELIABILITY_RATIO * min_degree;
    eigenvalues
        .iter()
        .take(k)
        .enumerate()
        .filter_map(|(i, &l)| (l >= threshold).then_some(i + 1))
        .collect()
}

/// Frobenius norm of sin Θ between the column spans of two orthonormal
/// n×p matrices: √(Σ_i (1 − σ_i²)) with σ_i the singular values of
/// V₁'V₂, clamped to [0, 1].
pub fn subspace_distance(v1: &Array2<f64>, v2: &Array2<f64>) -> Result<f64> {
    if v1.dim() != v2.dim() {
        return Err(Error::DimensionMismatch {
            expected: v1.ncols(),
            actual: v2.ncols(),
        });
    }
    for (name, v) in [("first", v1), ("second", v2)] {
        let gram = v.t().dot(v);
        for r in 0..gram.nrows() {
            for c in 0..gram.ncols() {
                let expect = if r == c { 1.0 } else { 0.0 };
                if (gram[[r, c]] - expect).abs() > ORTHONORMAL_TOL {
                    return Err(Error::InvalidInput(format!(
                        "{name} matrix is not column-orthonormal"
                    )));
                }
            }
        }
    }
    let m = v1.t().dot(v2);
    let gram = m.t().dot(&m);
    let dec = eig_symmetric(&gram)?;
    let mut sum = 0.0;
    for k in 0..dec.len() {
        let sigma_sq = dec.eigenvalue(k).clamp(0.0, 1.0);
        sum += 1.0 - sigma_sq;
    }
    Ok(sum.max(0.0).sqrt())
}

/// Smallest ε making the strict-inequality ε-graph connected: the
/// longest edge of a minimum spanning tree of the complete distance
/// graph, nudged up by one representable step.
pub fn suggest_epsilon_mst(distances: &DistanceMatrix) -> Result<f64> {
    let n = distances.len();
    if n < 2 {
        return Err(Error::InvalidInput(
            "epsilon suggestion needs at least two points".into(),
        ));
    }
    // Prim's algorithm on the dense matrix
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    in_tree[0] = true;
    for j in 1..n {
        best[j] = distances.get(0, j);
    }
    let mut longest: f64 = 0.0;
    for _ in 1..n {
        let mut next = usize::MAX;
        let mut next_d = f64::INFINITY;
        for j in 0..n {
            if !in_tree[j] && best[j] < next_d {
                next_d = best[j];
                next = j;
            }
        }
        in_tree[next] = true;
        longest = longest.max(next_d);
        for j in 0..n {
            if !in_tree[j] {
                best[j] = best[j].min(distances.get(next, j));
            }
        }
    }
    Ok(longest.next_up())
}

/// σ rule of thumb: the mean distance of a point to its m-th nearest
/// neighbor with m = ⌈ln(n) + 1⌉, capped at n−1.
pub fn suggest_sigma(distances: &DistanceMatrix) -> Result<f64> {
    let n = distances.len();
    if n < 2 {
        return Err(Error::InvalidInput(
            "sigma suggestion needs at least two points".into(),
        ));
    }
    let m = (((n as f64).ln() + 1.0).ceil() as usize).clamp(1, n - 1);
    let mut total = 0.0;
    for i in 0..n {
        let mut row: Vec<f64> = (0..n)
            .filter(|&j| j != i)
            .map(|j| distances.get(i, j))
            .collect();
        row.sort_by(|a, b| a.partial_cmp(b).unwrap());
        total += row[m - 1];
    }
    Ok(total / n as f64)
}

/// k ~ log(n) rule for neighborhood graphs: ⌈ln n⌉ clamped to [1, n−1].
pub fn suggest_knn_k(n: usize) -> usize {
    if n < 2 {
        return 1;
    }
    ((n as f64).ln().ceil() as usize).clamp(1, n - 1)
}

/// Assemble the diagnostics for a computed spectrum. Reliability flags
/// are populated for the unnormalized Laplacian only.
pub fn build_report(
    eigenvalues: &[f64],
    degrees: &[f64],
    kind: LaplacianKind,
    k_max: usize,
) -> Result<DiagnosticsReport> {
    let n = eigenvalues.len();
    let suggested_k = if n >= 3 {
        choose_k_eigengap(eigenvalues, k_max.min(n - 1).max(2))?
    } else {
        1
    };
    let eigengaps = (1..n)
        .map(|i| eigenvalues[i] - eigenvalues[i - 1])
        .collect();
    let min_degree = degrees.iter().copied().fold(f64::INFINITY, f64::min);
    let unreliable = if kind == LaplacianKind::Unnormalized {
        check_unnormalized_reliability(eigenvalues, degrees, n)
    } else {
        Vec::new()
    };
    Ok(DiagnosticsReport {
        suggested_k,
        eigengaps,
        unreliable_eigenvalue_indices: unreliable,
        min_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::PointSet;
    use crate::eigen::first_k;
    use crate::graph::{build_eps_graph, component_count, SimilarityGraph};
    use crate::laplacian::build_laplacian;
    use crate::similarity::euclidean_distances;
    use ndarray::arr2;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eigengap_heuristic_spots_four_clusters() {
        let spectrum = [0.0, 0.0, 0.0, 0.0, 0.3, 0.35, 0.4, 0.42];
        assert_eq!(choose_k_eigengap(&spectrum, 7).unwrap(), 4);
    }

    #[test]
    fn eigengap_heuristic_on_two_component_spectrum() {
        let g = SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        let vals: Vec<f64> = dec.eigenvalues().to_vec();
        assert_eq!(choose_k_eigengap(&vals, 3).unwrap(), 2);
    }

    #[test]
    fn eigengap_heuristic_ties_go_to_smallest_k() {
        // exactly representable spacing so every gap is bit-identical
        let spectrum = [0.0, 0.25, 0.5, 0.75, 1.0];
        assert_eq!(choose_k_eigengap(&spectrum, 4).unwrap(), 1);
    }

    #[test]
    fn eigengap_heuristic_validates_k_max() {
        let spectrum = [0.0, 0.1, 0.2];
        assert!(choose_k_eigengap(&spectrum, 1).is_err());
        assert!(choose_k_eigengap(&spectrum, 3).is_err());
        assert!(choose_k_eigengap(&spectrum, 2).is_ok());
    }

    #[test]
    fn eigengap_heuristic_on_block_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..50 {
            let blocks = rng.gen_range(2..6usize);
            let mut edges = Vec::new();
            let mut base = 0usize;
            for _ in 0..blocks {
                let size = rng.gen_range(3..6usize);
                // dense blocks so the within-block connectivity is strong
                for i in 0..size {
                    for j in (i + 1)..size {
                        edges.push((base + i, base + j, rng.gen_range(0.8..1.2)));
                    }
                }
                base += size;
            }
            let g = SimilarityGraph::from_edges(base, &edges).unwrap();
            let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
            let dec = eig_symmetric(lap.values()).unwrap();
            let vals: Vec<f64> = dec.eigenvalues().to_vec();
            let chosen = choose_k_eigengap(&vals, base - 1).unwrap();
            assert_eq!(chosen, blocks);
        }
    }

    #[test]
    fn reliability_ideal_case_has_no_flags() {
        let eigenvalues = [0.0, 0.0, 0.0, 2.5];
        let degrees = [2.0, 2.0, 3.0, 3.0];
        assert!(check_unnormalized_reliability(&eigenvalues, &degrees, 3).is_empty());
    }

    #[test]
    fn reliability_flags_everything_above_min_degree() {
        let eigenvalues = [5.0, 6.0, 7.0];
        let degrees = [2.0, 2.0, 2.0];
        assert_eq!(
            check_unnormalized_reliability(&eigenvalues, &degrees, 3),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn reliability_flags_partial_spectrum() {
        // only the first two eigenvalues sit below 0.9 * min degree
        let eigenvalues = [0.0, 0.5, 1.9, 2.2, 3.0];
        let degrees = [2.0, 2.1, 2.5];
        assert_eq!(
            check_unnormalized_reliability(&eigenvalues, &degrees, 5),
            vec![3, 4, 5]
        );
    }

    #[test]
    fn subspace_distance_of_identical_spans_is_zero() {
        let v = arr2(&[[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]);
        assert!(subspace_distance(&v, &v).unwrap() < 1e-12);
    }

    #[test]
    fn subspace_distance_of_orthogonal_lines_is_one() {
        let e1 = arr2(&[[1.0], [0.0]]);
        let e2 = arr2(&[[0.0], [1.0]]);
        assert!((subspace_distance(&e1, &e2).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn subspace_distance_rejects_non_orthonormal_input() {
        let v = arr2(&[[1.0, 1.0], [0.0, 1.0], [0.0, 0.0]]);
        let w = arr2(&[[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]);
        assert!(subspace_distance(&v, &w).is_err());
    }

    #[test]
    fn subspace_distance_is_rotation_invariant() {
        // the span matters, not the basis
        let v = arr2(&[[1.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.0, 0.0]]);
        let angle: f64 = 0.7;
        let rotated = arr2(&[
            [angle.cos(), -angle.sin()],
            [angle.sin(), angle.cos()],
            [0.0, 0.0],
            [0.0, 0.0],
        ]);
        assert!(subspace_distance(&v, &rotated).unwrap() < 1e-10);
    }

    #[test]
    fn davis_kahan_bound_holds_on_perturbed_block_laplacians() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let blocks = rng.gen_range(2..4usize);
            let mut edges = Vec::new();
            let mut base = 0usize;
            let mut sizes = Vec::new();
            for _ in 0..blocks {
                let size = rng.gen_range(3..5usize);
                for i in 0..size {
                    for j in (i + 1)..size {
                        edges.push((base + i, base + j, 1.0));
                    }
                }
                sizes.push(size);
                base += size;
            }
            let n = base;
            let ideal = SimilarityGraph::from_edges(n, &edges).unwrap();
            let ideal_lap = build_laplacian(&ideal, LaplacianKind::Unnormalized).unwrap();
            let ideal_dec = eig_symmetric(ideal_lap.values()).unwrap();
            let delta = ideal_dec.eigenvalue(blocks) - ideal_dec.eigenvalue(blocks - 1);

            // small inter-block noise, rescaled to keep ‖H‖_F/δ < 1
            let mut noisy = edges.clone();
            let eps = 0.002;
            let mut boundary_starts = vec![0usize];
            for s in &sizes {
                boundary_starts.push(boundary_starts.last().unwrap() + s);
            }
            for b in 1..blocks {
                noisy.push((
                    rng.gen_range(0..boundary_starts[1]),
                    rng.gen_range(boundary_starts[b]..boundary_starts[b + 1]),
                    eps * rng.gen_range(0.5..1.0),
                ));
            }
            let perturbed = SimilarityGraph::from_edges(n, &noisy).unwrap();
            let pert_lap = build_laplacian(&perturbed, LaplacianKind::Unnormalized).unwrap();
            let h = pert_lap.values() - ideal_lap.values();
            let h_fro: f64 = h.iter().map(|v| v * v).sum::<f64>().sqrt();
            let bound = h_fro / delta;
            assert!(bound < 1.0, "perturbation too large for the bound");

            let pert_dec = eig_symmetric(pert_lap.values()).unwrap();
            let v1 = first_k(&ideal_dec, blocks).unwrap();
            let v2 = first_k(&pert_dec, blocks).unwrap();
            let d = subspace_distance(v1.coords(), v2.coords()).unwrap();
            assert!(d <= bound + 1e-8, "distance {d} exceeds bound {bound}");
        }
    }

    fn points_1d(xs: &[f64]) -> PointSet {
        PointSet::new(ndarray::Array2::from_shape_vec((xs.len(), 1), xs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn epsilon_suggestion_examples() {
        let d = euclidean_distances(&points_1d(&[0.0, 1.0, 5.0]));
        let eps = suggest_epsilon_mst(&d).unwrap();
        assert!(eps > 4.0 && eps < 4.0 + 1e-12);

        let d = euclidean_distances(&points_1d(&[0.0, 2.0]));
        let eps = suggest_epsilon_mst(&d).unwrap();
        assert!(eps > 2.0 && eps < 2.0 + 1e-12);

        let d = euclidean_distances(&points_1d(&[0.0]));
        assert!(suggest_epsilon_mst(&d).is_err());
    }

    #[test]
    fn suggested_epsilon_yields_connected_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(2..20usize);
            let xs: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let pts = PointSet::new(ndarray::Array2::from_shape_vec((n, 2), xs).unwrap()).unwrap();
            let d = euclidean_distances(&pts);
            let eps = suggest_epsilon_mst(&d).unwrap();
            let g = build_eps_graph(&d, eps).unwrap();
            assert_eq!(component_count(&g), 1);
        }
    }

    #[test]
    fn sigma_suggestion_examples() {
        let d = euclidean_distances(&points_1d(&[0.0, 2.0]));
        assert_eq!(suggest_sigma(&d).unwrap(), 2.0);

        // uniform grid: the mean neighbor distance stays within the
        // pairwise min/max
        let grid: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let d = euclidean_distances(&points_1d(&grid));
        let sigma = suggest_sigma(&d).unwrap();
        assert!((1.0..=9.0).contains(&sigma));
    }

    #[test]
    fn sigma_suggestion_sits_at_the_within_cluster_scale() {
        // neighbor distances live inside the clusters (std 0.5), far
        // below the between-cluster spacing of 4
        let sample =
            crate::data::gen_gaussian_mixture_1d(200, &[0.0, 4.0, 8.0, 12.0], 0.5, 1).unwrap();
        let d = euclidean_distances(&sample.points);
        let sigma = suggest_sigma(&d).unwrap();
        assert!(sigma > 0.02 && sigma < 1.0, "sigma {sigma}");
    }

    #[test]
    fn knn_k_rule() {
        assert_eq!(suggest_knn_k(200), 6);
        assert_eq!(suggest_knn_k(2), 1);
        assert_eq!(suggest_knn_k(1_000_000), 14);
        assert_eq!(suggest_knn_k(1), 1);
    }

    #[test]
    fn toy_full_graph_sigma5_keeps_two_reliable_eigenvalues() {
        // with a wide kernel on the four-Gaussian sample only the first
        // two eigenvalues stay below the minimum degree; everything from
        // the third up gets flagged
        let sample =
            crate::data::gen_gaussian_mixture_1d(200, &[0.0, 4.0, 8.0, 12.0], 0.5, 1).unwrap();
        let s = crate::similarity::gaussian_similarity(&sample.points, 5.0).unwrap();
        let full = crate::graph::build_full_graph(&s).unwrap();
        let lap = build_laplacian(&full, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        let vals: Vec<f64> = dec.eigenvalues().to_vec();
        let flagged = check_unnormalized_reliability(&vals, full.degrees(), 200);
        assert_eq!(flagged.len(), 198);
        assert_eq!(flagged[0], 3);
        assert_eq!(*flagged.last().unwrap(), 200);
    }

    #[test]
    fn report_assembles_all_fields() {
        let g = SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        let vals: Vec<f64> = dec.eigenvalues().to_vec();
        let report = build_report(&vals, g.degrees(), LaplacianKind::Unnormalized, 3).unwrap();
        assert_eq!(report.suggested_k, 2);
        assert_eq!(report.eigengaps.len(), 3);
        assert_eq!(report.min_degree, 1.0);
        // zero eigenvalues sit below the degree threshold, the rest above
        assert_eq!(report.unreliable_eigenvalue_indices, vec![3, 4]);
    }
}
