//! The three spectral clustering algorithms, wired end to end from a
//! similarity graph to a partition.
//!
//! All three share the same skeleton: build a Laplacian, take the first
//! k eigenvectors, treat the rows as points in R^k and run k-means. They
//! differ only in the Laplacian (L, the generalized problem Lu = λDu,
//! or L_sym with row normalization).

use crate::eigen::{eig_symmetric, first_k, generalized_eig, Embedding};
use crate::error::{Error, Result};
use crate::graph::{SimilarityGraph, VertexSet};
use crate::kmeans::kmeans;
use crate::laplacian::{build_laplacian, LaplacianKind};

/// Assignment of n vertices to k nonempty clusters; labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<usize>,
    k: usize,
}

impl Partition {
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        if k == 0 {
            return Err(Error::InvalidPartition("k must be >= 1".into()));
        }
        let mut seen = vec![false; k];
        for &l in &labels {
            if l == 0 || l > k {
                return Err(Error::InvalidPartition(format!(
                    "label {l} outside 1..={k}"
                )));
            }
            seen[l - 1] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "cluster {} is empty",
                missing + 1
            )));
        }
        Ok(Partition { labels, k })
    }

    /// Build from labels, taking k as the largest label present.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(0);
        Self::new(labels, k)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn cluster_count(&self) -> usize {
        self.k
    }

    /// 1-based label of vertex i (0-based index).
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// 0-based members of the 1-based cluster c, ascending.
    pub fn cluster_members(&self, c: usize) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(i, &l)| (l == c).then_some(i))
            .collect()
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &l in &self.labels {
            sizes[l - 1] += 1;
        }
        sizes
    }

    /// One indicator set per cluster, in label order.
    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        (1..=self.k)
            .map(|c| VertexSet::from_mask(self.labels.iter().map(|&l| l == c).collect()))
            .collect()
    }

    /// Whether two partitions group the vertices identically, ignoring
    /// how clusters are numbered.
    pub fn same_grouping(&self, other: &Partition) -> bool {
        if self.len() != other.len() || self.k != other.k {
            return false;
        }
        let mut map = vec![0usize; self.k + 1];
        for (&a, &b) in self.labels.iter().zip(other.labels.iter()) {
            if map[a] == 0 {
                map[a] = b;
            } else if map[a] != b {
                return false;
            }
        }
        let mut hit = vec![false; self.k + 1];
        for &m in &map[1..] {
            if m == 0 || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        true
    }

    /// Serialize as CSV "index,label" with a header, 1-based on both
    /// sides.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,label\n");
        for (i, &l) in self.labels.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, l));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let row = lineno + 1;
            let line = line.trim();
            if line.is_empty() || (row == 1 && line.starts_with("index")) {
                continue;
            }
            let mut cells = line.split(',');
            let index: usize =
                cells
                    .next()
                    .and_then(|c| c.trim().parse().ok())
                    .ok_or(Error::Parse {
                        row,
                        message: "bad index".into(),
                    })?;
            let label: usize =
                cells
                    .next()
                    .and_then(|c| c.trim().parse().ok())
                    .ok_or(Error::Parse {
                        row,
                        message: "bad label".into(),
                    })?;
            if index != labels.len() + 1 {
                return Err(Error::Parse {
                    row,
                    message: format!("expected index {}, found {index}", labels.len() + 1),
                });
            }
            labels.push(label);
        }
        Self::from_labels(labels)
    }
}

/// Configuration shared by the three algorithms.
#[derive(Debug, Clone, Copy)]
pub struct SpectralConfig {
    pub laplacian: LaplacianKind,
    pub k: usize,
    pub seed: u64,
    pub restarts: usize,
    pub max_iters: usize,
}

impl SpectralConfig {
    pub fn new(laplacian: LaplacianKind, k: usize, seed: u64) -> Self {
        SpectralConfig {
            laplacian,
            k,
            seed,
            restarts: 10,
            max_iters: 300,
        }
    }
}

/// The n×k spectral embedding used by the algorithm for `kind`, before
/// k-means: plain first-k eigenvectors for the unnormalized Laplacian,
/// generalized eigenvectors for the random-walk one, and row-normalized
/// eigenvectors of L_sym for the symmetric one.
pub fn embed(g: &SimilarityGraph, kind: LaplacianKind, k: usize) -> Result<Embedding> {
    match kind {
        LaplacianKind::Unnormalized => {
            let lap = build_laplacian(g, kind)?;
            let dec = eig_symmetric(lap.values())?;
            first_k(&dec, k)
        }
        LaplacianKind::RandomWalk => {
            let lap = build_laplacian(g, LaplacianKind::Unnormalized)?;
            ensure_positive_degrees(g)?;
            let (_, emb) = generalized_eig(&lap, k)?;
            Ok(emb)
        }
        LaplacianKind::SymNormalized => {
            let lap = build_laplacian(g, kind)?;
            let dec = eig_symmetric(lap.values())?;
            let emb = first_k(&dec, k)?;
            normalize_rows(emb)
        }
    }
}

fn ensure_positive_degrees(g: &SimilarityGraph) -> Result<()> {
    if let Some(i) = g.degrees().iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex(i + 1));
    }
    Ok(())
}

/// Scale each row to unit norm, failing loudly on near-zero rows rather
/// than silently normalizing noise.
fn normalize_rows(emb: Embedding) -> Result<Embedding> {
    let mut coords = emb.coords().clone();
    for (i, mut row) in coords.rows_mut().into_iter().enumerate() {
        let norm: f64 = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::ZeroEmbeddingRow(i + 1));
        }
        row.mapv_inplace(|v| v / norm);
    }
    Ok(Embedding::new(coords))
}

fn run_kmeans(emb: &Embedding, cfg: &SpectralConfig) -> Result<Partition> {
    Ok(kmeans(emb, cfg.k, cfg.seed, cfg.restarts, cfg.max_iters)?.partition)
}

fn expect_kind(cfg: &SpectralConfig, kind: LaplacianKind) -> Result<()> {
    if cfg.laplacian != kind {
        return Err(Error::InvalidParameter(format!(
            "config selects the {} Laplacian, algorithm uses {}",
            cfg.laplacian.name(),
            kind.name()
        )));
    }
    Ok(())
}

/// Unnormalized spectral clustering: first k eigenvectors of L.
pub fn cluster_unnormalized(g: &SimilarityGraph, cfg: &SpectralConfig) -> Result<Partition> {
    expect_kind(cfg, LaplacianKind::Unnormalized)?;
    let emb = embed(g, LaplacianKind::Unnormalized, cfg.k)?;
    run_kmeans(&emb, cfg)
}

/// Normalized spectral clustering on the generalized eigenproblem
/// Lu = λDu, i.e. on eigenvectors of L_rw.
pub fn cluster_shi_malik(g: &SimilarityGraph, cfg: &SpectralConfig) -> Result<Partition> {
    expect_kind(cfg, LaplacianKind::RandomWalk)?;
    let emb = embed(g, LaplacianKind::RandomWalk, cfg.k)?;
    run_kmeans(&emb, cfg)
}

/// Normalized spectral clustering on L_sym with row normalization.
pub fn cluster_ng_jordan_weiss(g: &SimilarityGraph, cfg: &SpectralConfig) -> Result<Partition> {
    expect_kind(cfg, LaplacianKind::SymNormalized)?;
    let emb = embed(g, LaplacianKind::SymNormalized, cfg.k)?;
    run_kmeans(&emb, cfg)
}

/// Dispatch on the configured Laplacian kind.
pub fn cluster(g: &SimilarityGraph, cfg: &SpectralConfig) -> Result<Partition> {
    match cfg.laplacian {
        LaplacianKind::Unnormalized => cluster_unnormalized(g, cfg),
        LaplacianKind::RandomWalk => cluster_shi_malik(g, cfg),
        LaplacianKind::SymNormalized => cluster_ng_jordan_weiss(g, cfg),
    }
}
