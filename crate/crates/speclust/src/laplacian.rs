//! The three graph Laplacians and their quadratic forms.
//!
//! L = D − W (unnormalized), L_sym = D^{-1/2} L D^{-1/2} and
//! L_rw = D^{-1} L. The normalized variants require every degree to be
//! positive; L_rw is eigen-solved through its symmetric equivalent.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::graph::SimilarityGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplacianKind {
    Unnormalized,
    SymNormalized,
    RandomWalk,
}

impl LaplacianKind {
    /// Canonical token, matching the CLI flag vocabulary.
    pub fn name(&self) -> &'static str {
        match self {
            LaplacianKind::Unnormalized => "un",
            LaplacianKind::SymNormalized => "sym",
            LaplacianKind::RandomWalk => "rw",
        }
    }
}

impl std::str::FromStr for LaplacianKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "un" | "unnormalized" => Ok(LaplacianKind::Unnormalized),
            "sym" => Ok(LaplacianKind::SymNormalized),
            "rw" => Ok(LaplacianKind::RandomWalk),
            other => Err(Error::InvalidParameter(format!(
                "unknown laplacian kind {other:?} (expected un, sym or rw)"
            ))),
        }
    }
}

/// A realized Laplacian together with the degrees of its source graph
/// (needed to back-transform eigenvectors of the symmetric equivalent).
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix {
    kind: LaplacianKind,
    values: Array2<f64>,
    degrees: Vec<f64>,
}

impl LaplacianMatrix {
    pub fn kind(&self) -> LaplacianKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.values.nrows() == 0
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }
}

/// Assemble the requested Laplacian. The normalized kinds reject graphs
/// with an isolated (zero-degree) vertex, naming the vertex (1-based).
pub fn build_laplacian(g: &SimilarityGraph, kind: LaplacianKind) -> Result<LaplacianMatrix> {
    let n = g.vertex_count();
    let degrees = g.degrees().to_vec();
    if kind != LaplacianKind::Unnormalized {
        if let Some(i) = degrees.iter().position(|&d| d <= 0.0) {
            return Err(Error::IsolatedVertex(i + 1));
        }
    }
    let mut values = Array2::zeros((n, n));
    match kind {
        LaplacianKind::Unnormalized => {
            for i in 0..n {
                values[[i, i]] = degrees[i];
                for &(j, w) in g.neighbors(i) {
                    values[[i, j]] = -w;
                }
            }
        }
        LaplacianKind::SymNormalized => {
            let inv_sqrt: Vec<f64> = degrees.iter().map(|d| 1.0 / d.sqrt()).collect();
            for i in 0..n {
                values[[i, i]] = 1.0;
                for &(j, w) in g.neighbors(i) {
                    values[[i, j]] = -w * inv_sqrt[i] * inv_sqrt[j];
                }
            }
        }
        LaplacianKind::RandomWalk => {
            for i in 0..n {
                values[[i, i]] = 1.0;
                for &(j, w) in g.neighbors(i) {
                    values[[i, j]] = -w / degrees[i];
                }
            }
        }
    }
    Ok(LaplacianMatrix {
        kind,
        values,
        degrees,
    })
}

/// f' M f for the symmetric kinds. For the unnormalized Laplacian this
/// equals ½ Σ w_ij (f_i − f_j)²; for the symmetric normalized one it is
/// the same sum with f_i/√d_i in place of f_i.
pub fn quadratic_form(lap: &LaplacianMatrix, f: &[f64]) -> Result<f64> {
    if lap.kind == LaplacianKind::RandomWalk {
        return Err(Error::InvalidInput(
            "quadratic form is defined for the symmetric Laplacian kinds".into(),
        ));
    }
    let n = lap.len();
    if f.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: f.len(),
        });
    }
    let mut total = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += lap.values[[i, j]] * f[j];
        }
        total += f[i] * row;
    }
    Ok(total)
}

/// The symmetric equivalent of a random-walk Laplacian:
/// L_sym = D^{1/2} L_rw D^{-1/2}, sharing eigenvalues with L_rw.
/// Eigenvectors transform back as u = D^{-1/2} w (the degrees travel
/// with the returned matrix).
pub fn to_sym_equivalent(lap: &LaplacianMatrix) -> Result<LaplacianMatrix> {
    if lap.kind != LaplacianKind::RandomWalk {
        return Err(Error::InvalidInput(
            "symmetric equivalent is defined for the random-walk Laplacian".into(),
        ));
    }
    let n = lap.len();
    let mut values = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            values[[i, j]] = lap.degrees[i].sqrt() * lap.values[[i, j]] / lap.degrees[j].sqrt();
        }
    }
    // symmetrize exactly; the transform is symmetric up to rounding
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (values[[i, j]] + values[[j, i]]);
            values[[i, j]] = avg;
            values[[j, i]] = avg;
        }
    }
    Ok(LaplacianMatrix {
        kind: LaplacianKind::SymNormalized,
        values,
        degrees: lap.degrees.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::eig_symmetric;
    use crate::graph::{connected_components, SimilarityGraph};
    use ndarray::arr2;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single_edge() -> SimilarityGraph {
        SimilarityGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap()
    }

    fn unit_triangle() -> SimilarityGraph {
        SimilarityGraph::from_edges(3, &[(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]).unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SimilarityGraph {
        let mut edges = Vec::new();
        for i in 1..n {
            let parent = rng.gen_range(0..i);
            edges.push((parent, i, rng.gen_range(0.1..2.0)));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(0.3) {
                    edges.push((i, j, rng.gen_range(0.1..2.0)));
                }
            }
        }
        SimilarityGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_unnormalized_and_rw_coincide() {
        let g = single_edge();
        let expect = arr2(&[[1.0, -1.0], [-1.0, 1.0]]);
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        assert_eq!(l.values(), &expect);
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        assert_eq!(lrw.values(), &expect);
    }

    #[test]
    fn triangle_sym_normalized_entries() {
        let g = unit_triangle();
        let l = build_laplacian(&g, LaplacianKind::SymNormalized).unwrap();
        for i in 0..3 {
            assert!((l.values()[[i, i]] - 1.0).abs() < 1e-15);
            for j in 0..3 {
                if i != j {
                    assert!((l.values()[[i, j]] + 0.5).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn normalized_kinds_reject_isolated_vertices() {
        let g = SimilarityGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        for kind in [LaplacianKind::SymNormalized, LaplacianKind::RandomWalk] {
            match build_laplacian(&g, kind) {
                Err(Error::IsolatedVertex(v)) => assert_eq!(v, 3),
                other => panic!("expected isolated-vertex error, got {other:?}"),
            }
        }
        // the unnormalized Laplacian accepts isolated vertices
        assert!(build_laplacian(&g, LaplacianKind::Unnormalized).is_ok());
    }

    #[test]
    fn single_vertex_graph() {
        let g = SimilarityGraph::from_edges(1, &[]).unwrap();
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        assert_eq!(l.values()[[0, 0]], 0.0);
        assert!(build_laplacian(&g, LaplacianKind::RandomWalk).is_err());
    }

    #[test]
    fn quadratic_form_on_constant_vector_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_graph(&mut rng, 7);
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let q = quadratic_form(&l, &[1.0; 7]).unwrap();
        assert!(q.abs() < 1e-12);
    }

    #[test]
    fn quadratic_form_single_edge() {
        let g = SimilarityGraph::from_edges(2, &[(0, 1, 0.75)]).unwrap();
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        assert!((quadratic_form(&l, &[1.0, 0.0]).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn quadratic_form_matches_edge_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let n = rng.gen_range(2..10);
            let g = random_graph(&mut rng, n);
            let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
            let f: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let q = quadratic_form(&l, &f).unwrap();
            let edge_sum: f64 = g
                .edges()
                .iter()
                .map(|&(i, j, w)| w * (f[i] - f[j]).powi(2))
                .sum();
            assert!((q - edge_sum).abs() < 1e-10);
        }
    }

    #[test]
    fn quadratic_form_validates() {
        let g = single_edge();
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        assert!(quadratic_form(&lrw, &[1.0, 0.0]).is_err());
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        assert!(matches!(
            quadratic_form(&l, &[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quadratic_form_is_positive_semidefinite() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = random_graph(&mut rng, 8);
        let l = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        for _ in 0..1000 {
            let f: Vec<f64> = (0..8).map(|_| rng.gen_range(-3.0..3.0)).collect();
            assert!(quadratic_form(&l, &f).unwrap() >= -1e-12);
        }
    }

    #[test]
    fn self_loops_do_not_change_the_laplacian() {
        let edges = [(0usize, 1usize, 1.0f64), (1, 2, 0.5)];
        let mut with_loops = edges.to_vec();
        with_loops.push((0, 0, 3.0));
        with_loops.push((2, 2, 1.0));
        let g = SimilarityGraph::from_edges(3, &edges).unwrap();
        let h = SimilarityGraph::from_edges(3, &with_loops).unwrap();
        for kind in [
            LaplacianKind::Unnormalized,
            LaplacianKind::SymNormalized,
            LaplacianKind::RandomWalk,
        ] {
            let a = build_laplacian(&g, kind).unwrap();
            let b = build_laplacian(&h, kind).unwrap();
            assert_eq!(a.values(), b.values());
        }
    }

    #[test]
    fn row_sums_vanish_where_required() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let g = random_graph(&mut rng, 9);
        for kind in [LaplacianKind::Unnormalized, LaplacianKind::RandomWalk] {
            let l = build_laplacian(&g, kind).unwrap();
            for i in 0..9 {
                let s: f64 = l.values().row(i).sum();
                assert!(s.abs() < 1e-12, "{kind:?} row {i} sums to {s}");
            }
        }
    }

    #[test]
    fn zero_eigenvalue_multiplicity_counts_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let parts = rng.gen_range(1..4usize);
            let mut edges = Vec::new();
            let mut base = 0usize;
            for _ in 0..parts {
                let size = rng.gen_range(2..5usize);
                for i in 1..size {
                    edges.push((
                        base + rng.gen_range(0..i),
                        base + i,
                        rng.gen_range(0.2..2.0),
                    ));
                }
                base += size;
            }
            let g = SimilarityGraph::from_edges(base, &edges).unwrap();
            let m = connected_components(&g).cluster_count();
            assert_eq!(m, parts);
            for kind in [
                LaplacianKind::Unnormalized,
                LaplacianKind::SymNormalized,
                LaplacianKind::RandomWalk,
            ] {
                let lap = build_laplacian(&g, kind).unwrap();
                let sym = if kind == LaplacianKind::RandomWalk {
                    to_sym_equivalent(&lap).unwrap()
                } else {
                    lap
                };
                let dec = eig_symmetric(sym.values()).unwrap();
                assert_eq!(dec.zero_eigenvalue_count(), m, "{kind:?}");
            }
        }
    }

    #[test]
    fn sym_equivalent_on_regular_graph_equals_rw() {
        // 4-cycle is 2-regular: D is a multiple of I, so L_sym = L_rw
        let g =
            SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
                .unwrap();
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        let sym = to_sym_equivalent(&lrw).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((sym.values()[[i, j]] - lrw.values()[[i, j]]).abs() < 1e-14);
            }
        }
        let direct = build_laplacian(&g, LaplacianKind::SymNormalized).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((sym.values()[[i, j]] - direct.values()[[i, j]]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn sym_equivalent_single_edge_is_identical() {
        let g = single_edge();
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        let sym = to_sym_equivalent(&lrw).unwrap();
        assert_eq!(sym.values(), lrw.values());
    }

    #[test]
    fn star_graph_rw_and_sym_share_eigenvalues() {
        let g = SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        let via_transform = to_sym_equivalent(&lrw).unwrap();
        let direct = build_laplacian(&g, LaplacianKind::SymNormalized).unwrap();
        let a = eig_symmetric(via_transform.values()).unwrap();
        let b = eig_symmetric(direct.values()).unwrap();
        for j in 0..4 {
            assert!((a.eigenvalue(j) - b.eigenvalue(j)).abs() < 1e-10);
        }
    }

    #[test]
    fn rw_and_sym_eigenvalue_multisets_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let g = random_graph(&mut rng, 8);
        let lrw = build_laplacian(&g, LaplacianKind::RandomWalk).unwrap();
        let lsym = build_laplacian(&g, LaplacianKind::SymNormalized).unwrap();
        let a = eig_symmetric(to_sym_equivalent(&lrw).unwrap().values()).unwrap();
        let b = eig_symmetric(lsym.values()).unwrap();
        for j in 0..8 {
            assert!((a.eigenvalue(j) - b.eigenvalue(j)).abs() < 1e-8);
        }
    }
}
