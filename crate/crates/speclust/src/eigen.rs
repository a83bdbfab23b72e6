//! Dense symmetric eigendecomposition and spectral embeddings.
//!
//! The solver is the classic two-stage dense route: Householder reduction
//! to tridiagonal form followed by the implicitly shifted QL iteration,
//! with the orthogonal transformations accumulated into the eigenvector
//! matrix. It is self-contained (no external linear algebra backend) and
//! sized for desk-scale matrices (n up to a few thousand).

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::laplacian::{LaplacianKind, LaplacianMatrix};

/// Relative threshold below which a Laplacian eigenvalue counts as zero.
pub const ZERO_EIGENVALUE_RTOL: f64 = 1e-8;

/// Ascending eigenvalues with matched eigenvectors (column j pairs with
/// eigenvalue j). Columns are orthonormal; each eigenvector's
/// largest-magnitude entry is positive, ties resolved toward the lowest
/// index, which makes repeated decompositions bit-identical.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<f64>,
}

impl SpectralDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eigenvalues
    }

    /// Eigenvector matrix with column j paired to eigenvalue j.
    pub fn eigenvectors(&self) -> &Array2<f64> {
        &self.eigenvectors
    }

    pub fn eigenvalue(&self, j: usize) -> f64 {
        self.eigenvalues[j]
    }

    /// Count of eigenvalues below `ZERO_EIGENVALUE_RTOL`·λ_max.
    pub fn zero_eigenvalue_count(&self) -> usize {
        let lambda_max = self.eigenvalues[self.eigenvalues.len() - 1].max(0.0);
        let tol = ZERO_EIGENVALUE_RTOL * lambda_max;
        self.eigenvalues.iter().filter(|&&l| l < tol).count()
    }
}

/// Spectral representation: an n×k matrix whose rows are the embedded
/// points y_i.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    coords: Array2<f64>,
}

impl Embedding {
    pub fn new(coords: Array2<f64>) -> Self {
        Embedding { coords }
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

    pub fn row(&self, i: usize) -> ndarray::ArrayView1<'_, f64> {
        self.coords.row(i)
    }
}

/// Full eigendecomposition of a symmetric matrix.
///
/// Symmetry is required up to 1e-10 (relative to the largest entry);
/// the symmetrized average (a_ij + a_ji)/2 is what gets decomposed.
pub fn eig_symmetric(m: &Array2<f64>) -> Result<SpectralDecomposition> {
    let n = m.nrows();
    if n == 0 || m.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n.max(1),
            actual: m.ncols(),
        });
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[[i, j]] - m[[j, i]]).abs() > 1e-10 * scale {
                return Err(Error::InvalidInput(format!(
                    "matrix not symmetric at ({i}, {j}): {} vs {}",
                    m[[i, j]],
                    m[[j, i]]
                )));
            }
        }
    }

    let mut v = Array2::zeros((n, n));
    for i in 0..n {
        v[[i, i]] = m[[i, i]];
        for j in (i + 1)..n {
            let avg = 0.5 * (m[[i, j]] + m[[j, i]]);
            v[[i, j]] = avg;
            v[[j, i]] = avg;
        }
    }
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;

    // stable ascending sort, preserving solver order on ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let eigenvalues = Array1::from_iter(order.iter().map(|&j| d[j]));
    let mut eigenvectors = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        // sign convention: largest-magnitude entry positive, ties by
        // lowest index
        let mut best = 0usize;
        for i in 1..n {
            if v[[i, src]].abs() > v[[best, src]].abs() {
                best = i;
            }
        }
        let flip = if v[[best, src]] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            eigenvectors[[i, dst]] = flip * v[[i, src]];
        }
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// The k smallest-eigenvalue eigenvectors as columns; row i is the
/// spectral representation y_i of vertex i.
pub fn first_k(decomp: &SpectralDecomposition, k: usize) -> Result<Embedding> {
    let n = decomp.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n (n={n}), got {k}"
        )));
    }
    let coords = decomp.eigenvectors.slice(ndarray::s![.., 0..k]).to_owned();
    Ok(Embedding::new(coords))
}

/// First k generalized eigenpairs of L u = λ D u, solved through the
/// symmetric equivalent L_sym = D^{-1/2} L D^{-1/2} and back-transformed
/// with u = D^{-1/2} w. The eigenvalues are those of L_rw.
pub fn generalized_eig(lap: &LaplacianMatrix, k: usize) -> Result<(Array1<f64>, Embedding)> {
    if lap.kind() != LaplacianKind::Unnormalized {
        return Err(Error::InvalidInput(
            "generalized eigenproblem expects the unnormalized Laplacian".into(),
        ));
    }
    let n = lap.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n (n={n}), got {k}"
        )));
    }
    let degrees = lap.degrees();
    if let Some(i) = degrees.iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex(i + 1));
    }
    let inv_sqrt: Vec<f64> = degrees.iter().map(|d| 1.0 / d.sqrt()).collect();
    let mut sym = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            sym[[i, j]] = inv_sqrt[i] * lap.values()[[i, j]] * inv_sqrt[j];
        }
    }
    let decomp = eig_symmetric(&sym)?;
    let mut coords = Array2::zeros((n, k));
    for j in 0..k {
        for i in 0..n {
            coords[[i, j]] = inv_sqrt[i] * decomp.eigenvectors[[i, j]];
        }
    }
    let eigenvalues = decomp.eigenvalues.slice(ndarray::s![0..k]).to_owned();
    Ok((eigenvalues, Embedding::new(coords)))
}

/// Eigengap γ_k = λ_{k+1} − λ_k for 1-based k.
pub fn eigengap(eigenvalues: &[f64], k: usize) -> Result<f64> {
    let n = eigenvalues.len();
    if k == 0 || k + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n-1 (n={n}), got {k}"
        )));
    }
    Ok(eigenvalues[k] - eigenvalues[k - 1])
}

/// Householder reduction of a symmetric matrix (stored in `v`) to
/// tridiagonal form; diagonal ends up in `d`, subdiagonal in `e`, and `v`
/// accumulates the orthogonal transformation. Port of the EISPACK/Jama
/// routine tred2 (public domain).
fn tred2(v: &mut Array2<f64>, d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v[[n - 1, j]];
    }

    for i in (1..n).rev() {
        // scale to avoid under/overflow
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[[i - 1, j]];
                v[[i, j]] = 0.0;
                v[[j, i]] = 0.0;
            }
        } else {
            // generate Householder vector
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }

            // apply similarity transformation to remaining columns
            for j in 0..i {
                f = d[j];
                v[[j, i]] = f;
                g = e[j] + v[[j, j]] * f;
                for k in (j + 1)..i {
                    g += v[[k, j]] * d[k];
                    e[k] += v[[k, j]] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[[k, j]] -= f * e[k] + g * d[k];
                }
                d[j] = v[[i - 1, j]];
                v[[i, j]] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n.saturating_sub(1) {
        v[[n - 1, i]] = v[[i, i]];
        v[[i, i]] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[[k, i + 1]] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[[k, i + 1]] * v[[k, j]];
                }
                for k in 0..=i {
                    v[[k, j]] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[[k, i + 1]] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[[n - 1, j]];
        v[[n - 1, j]] = 0.0;
    }
    v[[n - 1, n - 1]] = 1.0;
    e[0] = 0.0;
}

/// Implicitly shifted QL iteration on a symmetric tridiagonal matrix,
/// rotations accumulated into `v`. Port of the EISPACK/Jama routine tql2
/// (public domain), with an iteration cap added.
fn tql2(v: &mut Array2<f64>, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        // find a negligible subdiagonal element
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 100 {
                    return Err(Error::InvalidInput("eigensolver failed to converge".into()));
                }

                // implicit shift
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // implicit QL sweep
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    for k in 0..n {
                        h = v[[k, i + 1]];
                        v[[k, i + 1]] = s * v[[k, i]] + c * h;
                        v[[k, i]] = c * v[[k, i]] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimilarityGraph;
    use crate::laplacian::build_laplacian;
    use ndarray::arr2;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Array2<f64> {
        let mut m = Array2::zeros((n, n));
        for i in 0..n {
            m[[i, i]] = rng.gen_range(-5.0..5.0);
            for j in (i + 1)..n {
                let v = rng.gen_range(-5.0..5.0);
                m[[i, j]] = v;
                m[[j, i]] = v;
            }
        }
        m
    }

    fn reconstruction_error(m: &Array2<f64>, dec: &SpectralDecomposition) -> f64 {
        let n = m.nrows();
        let u = dec.eigenvectors();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for k in 0..n {
                    s += u[[i, k]] * dec.eigenvalue(k) * u[[j, k]];
                }
                worst = worst.max((s - m[[i, j]]).abs());
            }
        }
        worst
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let dec = eig_symmetric(&Array2::eye(3)).unwrap();
        for j in 0..3 {
            assert!((dec.eigenvalue(j) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn single_edge_laplacian_spectrum() {
        let m = arr2(&[[1.0, -1.0], [-1.0, 1.0]]);
        let dec = eig_symmetric(&m).unwrap();
        assert!(dec.eigenvalue(0).abs() < 1e-14);
        assert!((dec.eigenvalue(1) - 2.0).abs() < 1e-14);
        // first eigenvector proportional to the constant one vector
        let u = dec.eigenvectors().column(0);
        assert!((u[0] - u[1]).abs() < 1e-14);
        assert!(u[0] > 0.0);
    }

    #[test]
    fn random_matrices_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [1usize, 2, 3, 5, 8, 13, 30] {
            for _ in 0..8 {
                let m = random_symmetric(n, &mut rng);
                let dec = eig_symmetric(&m).unwrap();
                assert!(
                    reconstruction_error(&m, &dec) < 1e-8,
                    "reconstruction failed for n={n}"
                );
                // orthonormal columns
                let u = dec.eigenvectors();
                for a in 0..n {
                    for b in 0..n {
                        let dot: f64 = (0..n).map(|i| u[[i, a]] * u[[i, b]]).sum();
                        let expect = if a == b { 1.0 } else { 0.0 };
                        assert!((dot - expect).abs() < 1e-10);
                    }
                }
                // ascending order
                for j in 1..n {
                    assert!(dec.eigenvalue(j - 1) <= dec.eigenvalue(j));
                }
            }
        }
    }

    #[test]
    fn path_graph_spectrum_matches_closed_form() {
        // eigenvalues of the path Laplacian: 4 sin²(π k / (2n)), k = 0..n-1
        let n = 9;
        let edges: Vec<(usize, usize, f64)> = (0..n - 1).map(|i| (i, i + 1, 1.0)).collect();
        let g = SimilarityGraph::from_edges(n, &edges).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        for k in 0..n {
            let expect = 4.0
                * (std::f64::consts::PI * k as f64 / (2.0 * n as f64))
                    .sin()
                    .powi(2);
            assert!(
                (dec.eigenvalue(k) - expect).abs() < 1e-10,
                "k={k}: {} vs {expect}",
                dec.eigenvalue(k)
            );
        }
    }

    #[test]
    fn residuals_are_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_symmetric(12, &mut rng);
        let dec = eig_symmetric(&m).unwrap();
        let fro = m.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
        for j in 0..12 {
            let v = dec.eigenvectors().column(j);
            let mv = m.dot(&v);
            let resid: f64 = mv
                .iter()
                .zip(v.iter())
                .map(|(a, b)| (a - dec.eigenvalue(j) * b).powi(2))
                .sum::<f64>()
                .sqrt();
            assert!(resid / fro <= 1e-8);
        }
    }

    #[test]
    fn decomposition_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_symmetric(10, &mut rng);
        let a = eig_symmetric(&m).unwrap();
        let b = eig_symmetric(&m).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = arr2(&[[1.0, 0.5], [0.2, 1.0]]);
        assert!(matches!(eig_symmetric(&m), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn first_k_shapes_and_bounds() {
        let m = Array2::eye(4);
        let dec = eig_symmetric(&m).unwrap();
        let full = first_k(&dec, 4).unwrap();
        assert_eq!(full.dim(), 4);
        assert!(first_k(&dec, 0).is_err());
        assert!(first_k(&dec, 5).is_err());
    }

    #[test]
    fn first_eigenvector_of_connected_laplacian_is_constant() {
        let g =
            SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (1, 2, 2.0), (2, 3, 0.5), (0, 3, 1.5)])
                .unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        assert!(dec.eigenvalue(0).abs() < 1e-10);
        let e = first_k(&dec, 1).unwrap();
        let first = e.coords()[[0, 0]];
        assert!(e.coords().iter().all(|&v| (v - first).abs() < 1e-10));
    }

    #[test]
    fn four_component_rows_are_indicator_like() {
        // 4 disjoint edges: rows of the 4-dim embedding are constant
        // within components and orthogonal across them
        let g =
            SimilarityGraph::from_edges(8, &[(0, 1, 1.0), (2, 3, 1.0), (4, 5, 1.0), (6, 7, 1.0)])
                .unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        assert_eq!(dec.zero_eigenvalue_count(), 4);
        let emb = first_k(&dec, 4).unwrap();
        for pair in 0..4 {
            let (a, b) = (2 * pair, 2 * pair + 1);
            for j in 0..4 {
                assert!((emb.coords()[[a, j]] - emb.coords()[[b, j]]).abs() < 1e-10);
            }
            let norm: f64 = (0..4).map(|j| emb.coords()[[a, j]].powi(2)).sum();
            assert!(norm > 1e-6);
            for other in (pair + 1)..4 {
                let dot: f64 = (0..4)
                    .map(|j| emb.coords()[[a, j]] * emb.coords()[[2 * other, j]])
                    .sum();
                assert!(dot.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn generalized_eig_matches_plain_on_regular_graph() {
        // 4-cycle: every degree 2, so generalized eigenvectors equal the
        // plain ones up to a global 1/sqrt(2) scale
        let g =
            SimilarityGraph::from_edges(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
                .unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let (vals, emb) = generalized_eig(&lap, 4).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        let plain = first_k(&dec, 4).unwrap();
        let scale = (2.0f64).sqrt();
        for j in 0..4 {
            assert!((vals[j] - dec.eigenvalue(j) / 2.0).abs() < 1e-10);
            for i in 0..4 {
                assert!((emb.coords()[[i, j]] * scale - plain.coords()[[i, j]]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn generalized_eig_constant_vector_on_connected_graph() {
        let g = SimilarityGraph::from_edges(3, &[(0, 1, 2.0), (1, 2, 0.5)]).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let (vals, emb) = generalized_eig(&lap, 1).unwrap();
        assert!(vals[0].abs() < 1e-10);
        let first = emb.coords()[[0, 0]];
        assert!(emb.coords().iter().all(|&v| (v - first).abs() < 1e-10));
    }

    #[test]
    fn generalized_eig_rejects_isolated_vertex() {
        let g = SimilarityGraph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        match generalized_eig(&lap, 1) {
            Err(Error::IsolatedVertex(v)) => assert_eq!(v, 3),
            other => panic!("expected isolated-vertex error, got {other:?}"),
        }
    }

    #[test]
    fn laplacian_eigenvalues_are_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(2..10);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((i, j, rng.gen_range(0.1..2.0)));
                    }
                }
            }
            let g = SimilarityGraph::from_edges(n, &edges).unwrap();
            let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
            let dec = eig_symmetric(lap.values()).unwrap();
            assert!(dec.eigenvalue(0) > -1e-10);
            assert!(dec.eigenvalue(0).abs() < 1e-10);
        }
    }

    #[test]
    fn eigengap_examples() {
        assert_eq!(eigengap(&[0.0, 0.0, 1.0, 1.1], 2).unwrap(), 1.0);
        let flat = [0.5; 6];
        for k in 1..=5 {
            assert_eq!(eigengap(&flat, k).unwrap(), 0.0);
        }
        assert!(eigengap(&[0.0, 1.0], 0).is_err());
        assert!(eigengap(&[0.0, 1.0], 2).is_err());
    }

    #[test]
    fn eigengap_of_four_block_graph_opens_at_four() {
        let mut edges = Vec::new();
        for b in 0..4usize {
            let base = b * 3;
            edges.extend_from_slice(&[
                (base, base + 1, 1.0),
                (base + 1, base + 2, 1.0),
                (base, base + 2, 1.0),
            ]);
        }
        let g = SimilarityGraph::from_edges(12, &edges).unwrap();
        let lap = build_laplacian(&g, LaplacianKind::Unnormalized).unwrap();
        let dec = eig_symmetric(lap.values()).unwrap();
        let vals: Vec<f64> = dec.eigenvalues().to_vec();
        for k in 1..4 {
            assert!(eigengap(&vals, k).unwrap() < 1e-8);
        }
        assert!(eigengap(&vals, 4).unwrap() > 0.1);
    }
}
