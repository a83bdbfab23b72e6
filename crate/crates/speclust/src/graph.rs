//! Similarity graphs: construction from distance/similarity matrices,
//! degrees, set volumes, cut weights and connected components.
//!
//! Graphs are undirected with non-negative weights, stored as sorted
//! per-vertex neighbor lists. Self-loops are never stored (they do not
//! change any graph Laplacian) and zero weights are dropped.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::similarity::{DistanceMatrix, SimilarityMatrix};
use crate::spectral::Partition;

/// Sparse symmetric weighted adjacency with cached degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityGraph {
    n: usize,
    /// `neighbors[i]` is sorted by neighbor index; every edge appears in
    /// both endpoint lists with the same weight.
    neighbors: Vec<Vec<(usize, f64)>>,
    degrees: Vec<f64>,
}

impl SimilarityGraph {
    /// Build a graph from an edge list with 0-based endpoints. Self-loops
    /// are dropped, duplicate edges accumulate their weights, zero-weight
    /// edges are not stored.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for &(i, j, w) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) out of range for n={n}"
                )));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) has invalid weight {w}"
                )));
            }
            if i == j || w == 0.0 {
                continue;
            }
            adj[i].push((j, w));
            adj[j].push((i, w));
        }
        let mut neighbors: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n);
        for list in adj {
            let mut merged: Vec<(usize, f64)> = Vec::with_capacity(list.len());
            let mut sorted = list;
            sorted.sort_by_key(|&(j, _)| j);
            for (j, w) in sorted {
                match merged.last_mut() {
                    Some(last) if last.0 == j => last.1 += w,
                    _ => merged.push((j, w)),
                }
            }
            neighbors.push(merged);
        }
        let degrees = neighbors
            .iter()
            .map(|list| list.iter().map(|&(_, w)| w).sum())
            .collect();
        Ok(SimilarityGraph {
            n,
            neighbors,
            degrees,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of `i`, sorted by vertex index.
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> f64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// vol(V) = Σ_i d_i.
    pub fn total_volume(&self) -> f64 {
        self.degrees.iter().sum()
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.neighbors[i]
            .binary_search_by(|&(v, _)| v.cmp(&j))
            .map(|pos| self.neighbors[i][pos].1)
            .unwrap_or(0.0)
    }

    /// Edges as (i, j, w) with i < j, ordered by (i, j).
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for &(j, w) in &self.neighbors[i] {
                if i < j {
                    out.push((i, j, w));
                }
            }
        }
        out
    }

    /// Multiply every edge weight by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive and finite, got {c}"
            )));
        }
        let neighbors = self
            .neighbors
            .iter()
            .map(|list| list.iter().map(|&(j, w)| (j, w * c)).collect())
            .collect();
        let degrees = self.degrees.iter().map(|d| d * c).collect();
        Ok(SimilarityGraph {
            n: self.n,
            neighbors,
            degrees,
        })
    }

    /// Serialize as edge-list text: one line "i j w" per edge, 1-based
    /// indices, i < j, ordered by (i, j).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, j, w) in self.edges() {
            writeln!(out, "{} {} {}", i + 1, j + 1, w).unwrap();
        }
        out
    }

    /// Parse the edge-list text format. Vertex count is the largest index
    /// seen unless `n` is given explicitly.
    pub fn from_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_index = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let row = lineno + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut field = |name: &str| {
                parts.next().ok_or(Error::Parse {
                    row,
                    message: format!("missing {name}"),
                })
            };
            let i: usize = parse_field(field("source index")?, row)?;
            let j: usize = parse_field(field("target index")?, row)?;
            let w: f64 = parse_field(field("weight")?, row)?;
            if i == 0 || j == 0 {
                return Err(Error::Parse {
                    row,
                    message: "vertex indices are 1-based".into(),
                });
            }
            max_index = max_index.max(i).max(j);
            edges.push((i - 1, j - 1, w));
        }
        let n = n.unwrap_or(max_index);
        if n == 0 {
            return Err(Error::InvalidInput("empty edge list".into()));
        }
        Self::from_edges(n, &edges)
    }

    pub fn save_edge_list(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_edge_list())?;
        Ok(())
    }

    pub fn load_edge_list(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_edge_list(&text, None)
    }
}

fn parse_field<T: std::str::FromStr>(s: &str, row: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        row,
        message: format!("cannot parse {s:?}"),
    })
}

/// Subset of vertices as an indicator mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            mask: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            mask: vec![true; n],
        }
    }

    /// Build from 0-based member indices.
    pub fn from_indices(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &i in members {
            if i >= n {
                return Err(Error::InvalidInput(format!(
                    "vertex {i} out of range for n={n}"
                )));
            }
            mask[i] = true;
        }
        Ok(VertexSet { mask })
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        VertexSet { mask }
    }

    pub fn universe_len(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            mask: self.mask.iter().map(|&b| !b).collect(),
        }
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }
}

/// ε-neighborhood graph: connect pairs with d_ij strictly below ε, all
/// edges unweighted (weight 1).
pub fn build_eps_graph(distances: &DistanceMatrix, eps: f64) -> Result<SimilarityGraph> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "eps must be positive, got {eps}"
        )));
    }
    let n = distances.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if distances.get(i, j) < eps {
                edges.push((i, j, 1.0));
            }
        }
    }
    SimilarityGraph::from_edges(n, &edges)
}

/// k-nearest-neighbor graph. With `mutual = false` an edge appears when
/// either endpoint lists the other among its k nearest (union); with
/// `mutual = true` both must (intersection). Edges are weighted by the
/// similarity of their endpoints. Distance ties break toward the smaller
/// vertex index.
pub fn build_knn_graph(
    distances: &DistanceMatrix,
    similarities: &SimilarityMatrix,
    k: usize,
    mutual: bool,
) -> Result<SimilarityGraph> {
    let n = distances.len();
    if similarities.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: similarities.len(),
        });
    }
    if k == 0 || k > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "knn k must satisfy 1 <= k <= n-1 (n={n}), got {k}"
        )));
    }
    // neighbor_of[i][j] = true iff j is among i's k nearest
    let mut neighbor_of = vec![vec![false; n]; n];
    for i in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        order.sort_by(|&a, &b| {
            distances
                .get(i, a)
                .partial_cmp(&distances.get(i, b))
                .unwrap()
                .then(a.cmp(&b))
        });
        for &j in order.iter().take(k) {
            neighbor_of[i][j] = true;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let keep = if mutual {
                neighbor_of[i][j] && neighbor_of[j][i]
            } else {
                neighbor_of[i][j] || neighbor_of[j][i]
            };
            if keep {
                edges.push((i, j, similarities.get(i, j)));
            }
        }
    }
    SimilarityGraph::from_edges(n, &edges)
}

/// Fully connected graph: every pair with positive similarity.
pub fn build_full_graph(similarities: &SimilarityMatrix) -> Result<SimilarityGraph> {
    let n = similarities.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let s = similarities.get(i, j);
            if s > 0.0 {
                edges.push((i, j, s));
            }
        }
    }
    SimilarityGraph::from_edges(n, &edges)
}

/// Label vertices by connected component. Components are numbered 1, 2, …
/// in order of their smallest member index.
pub fn connected_components(g: &SimilarityGraph) -> Partition {
    let n = g.vertex_count();
    let mut labels = vec![0usize; n];
    let mut next = 0usize;
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if labels[start] != 0 {
            continue;
        }
        next += 1;
        labels[start] = next;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &(u, _) in g.neighbors(v) {
                if labels[u] == 0 {
                    labels[u] = next;
                    queue.push_back(u);
                }
            }
        }
    }
    Partition::new(labels, next).expect("component labeling is a valid partition")
}

pub fn component_count(g: &SimilarityGraph) -> usize {
    connected_components(g).cluster_count()
}

/// (|A|, vol(A)).
pub fn set_measures(g: &SimilarityGraph, a: &VertexSet) -> (usize, f64) {
    let mut size = 0usize;
    let mut volume = 0.0;
    for i in 0..g.vertex_count() {
        if a.contains(i) {
            size += 1;
            volume += g.degree(i);
        }
    }
    (size, volume)
}

/// W(A, B) = Σ_{i ∈ A, j ∈ B} w_ij. A and B need not be disjoint; with
/// B = Ā this is the total weight crossing the bipartition.
pub fn cut_weight(g: &SimilarityGraph, a: &VertexSet, b: &VertexSet) -> f64 {
    let mut total = 0.0;
    for i in 0..g.vertex_count() {
        if !a.contains(i) {
            continue;
        }
        for &(j, w) in g.neighbors(i) {
            if b.contains(j) {
                total += w;
            }
        }
    }
    total
}
