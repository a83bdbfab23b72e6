//! Graph-cut objectives and exact small-instance oracles.
//!
//! Conventions: for a k-way partition, Cut = ½ Σ_i W(A_i, Ā_i) (each
//! crossing edge counted once overall), while RatioCut, Ncut and
//! MinMaxCut sum the per-cluster terms W(A_i, Ā_i)/|A_i|,
//! W(A_i, Ā_i)/vol(A_i) and W(A_i, Ā_i)/W(A_i, A_i) without the ½. These
//! are the values satisfying f'Lf = |V|·RatioCut for the bipartition
//! indicator vector and Tr(H'LH) = RatioCut for the indicator matrix.

use ndarray::{Array1, Array2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimilarityGraph, VertexSet};
use crate::spectral::{cluster, Partition, SpectralConfig};

/// Largest instance the exhaustive bipartition oracle accepts.
pub const ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutObjective {
    Cut,
    RatioCut,
    Ncut,
}

impl CutObjective {
    pub fn name(&self) -> &'static str {
        match self {
            CutObjective::Cut => "cut",
            CutObjective::RatioCut => "ratiocut",
            CutObjective::Ncut => "ncut",
        }
    }
}

impl std::str::FromStr for CutObjective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cut" => Ok(CutObjective::Cut),
            "ratiocut" => Ok(CutObjective::RatioCut),
            "ncut" => Ok(CutObjective::Ncut),
            other => Err(Error::InvalidParameter(format!(
                "unknown objective {other:?} (expected cut, ratiocut or ncut)"
            ))),
        }
    }
}

/// Per-cluster quantities feeding the objectives.
#[derive(Debug, Clone, Serialize)]
pub struct ClusterCutTerms {
    /// W(A_i, Ā_i): weight leaving the cluster.
    pub boundary: f64,
    pub size: usize,
    pub volume: f64,
    /// W(A_i, A_i): within-cluster weight (ordered pairs, so twice the
    /// internal edge weight).
    pub within: f64,
    pub ratiocut_term: f64,
    pub ncut_term: f64,
    /// None when the cluster has no internal weight.
    pub minmaxcut_term: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CutReport {
    pub cut: f64,
    pub ratiocut: f64,
    pub ncut: f64,
    /// None when some cluster has no internal weight.
    pub minmaxcut: Option<f64>,
    pub clusters: Vec<ClusterCutTerms>,
}

fn cluster_sums(g: &SimilarityGraph, p: &Partition) -> Result<Vec<(f64, usize, f64, f64)>> {
    let n = g.vertex_count();
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: p.len(),
        });
    }
    let k = p.cluster_count();
    // (boundary, size, volume, within) per cluster
    let mut sums = vec![(0.0, 0usize, 0.0, 0.0); k];
    for i in 0..n {
        let c = p.label(i) - 1;
        sums[c].1 += 1;
        sums[c].2 += g.degree(i);
        for &(j, w) in g.neighbors(i) {
            if p.label(j) - 1 == c {
                sums[c].3 += w;
            } else {
                sums[c].0 += w;
            }
        }
    }
    Ok(sums)
}

/// All four objectives for a partition. Errors when some cluster has
/// zero volume (Ncut undefined there); reports `minmaxcut` as None when
/// a cluster has no within weight.
pub fn evaluate_cuts(g: &SimilarityGraph, p: &Partition) -> Result<CutReport> {
    let sums = cluster_sums(g, p)?;
    let mut clusters = Vec::with_capacity(sums.len());
    let mut cut = 0.0;
    let mut ratiocut = 0.0;
    let mut ncut = 0.0;
    let mut minmaxcut = Some(0.0);
    for (c, &(boundary, size, volume, within)) in sums.iter().enumerate() {
        if volume <= 0.0 {
            return Err(Error::UndefinedObjective {
                cluster: c + 1,
                reason: "zero volume".into(),
            });
        }
        let ratiocut_term = boundary / size as f64;
        let ncut_term = boundary / volume;
        let minmaxcut_term = (within > 0.0).then(|| boundary / within);
        cut += 0.5 * boundary;
        ratiocut += ratiocut_term;
        ncut += ncut_term;
        minmaxcut = match (minmaxcut, minmaxcut_term) {
            (Some(acc), Some(t)) => Some(acc + t),
            _ => None,
        };
        clusters.push(ClusterCutTerms {
            boundary,
            size,
            volume,
            within,
            ratiocut_term,
            ncut_term,
            minmaxcut_term,
        });
    }
    Ok(CutReport {
        cut,
        ratiocut,
        ncut,
        minmaxcut,
        clusters,
    })
}

/// A single objective for a partition, without requiring the others to
/// be defined.
pub fn objective_value(g: &SimilarityGraph, p: &Partition, obj: CutObjective) -> Result<f64> {
    let sums = cluster_sums(g, p)?;
    let mut total = 0.0;
    for (c, &(boundary, size, volume, _)) in sums.iter().enumerate() {
        total += match obj {
            CutObjective::Cut => 0.5 * boundary,
            CutObjective::RatioCut => boundary / size as f64,
            CutObjective::Ncut => {
                if volume <= 0.0 {
                    return Err(Error::UndefinedObjective {
                        cluster: c + 1,
                        reason: "zero volume".into(),
                    });
                }
                boundary / volume
            }
        };
    }
    Ok(total)
}

/// Exhaustive minimum over all nonempty bipartitions, enumerated in
/// Gray-code order with incremental cut maintenance. Vertex 1 is pinned
/// to the reported side, which makes it the lexicographically smaller
/// one; exact value ties then prefer the lexicographically smallest
/// member set.
pub fn exact_min_bipartition(
    g: &SimilarityGraph,
    objective: CutObjective,
) -> Result<(VertexSet, f64)> {
    let n = g.vertex_count();
    if n > ENUMERATION_CAP {
        return Err(Error::InstanceTooLarge {
            n,
            max: ENUMERATION_CAP,
        });
    }
    if n < 2 {
        return Err(Error::InvalidInput(
            "bipartition needs at least two vertices".into(),
        ));
    }
    let total_volume = g.total_volume();

    let mut in_a = vec![false; n];
    in_a[0] = true;
    let mut size_a = 1usize;
    let mut vol_a = g.degree(0);
    let mut cut: f64 = g.neighbors(0).iter().map(|&(_, w)| w).sum();

    let mut best: Option<(f64, Vec<bool>)> = None;
    let mut consider = |cut: f64, size_a: usize, vol_a: f64, in_a: &[bool]| {
        if size_a == 0 || size_a == n {
            return;
        }
        let value = match objective {
            CutObjective::Cut => cut,
            CutObjective::RatioCut => cut * (1.0 / size_a as f64 + 1.0 / (n - size_a) as f64),
            CutObjective::Ncut => {
                let vol_b = total_volume - vol_a;
                if vol_a <= 0.0 || vol_b <= 0.0 {
                    return;
                }
                cut * (1.0 / vol_a + 1.0 / vol_b)
            }
        };
        let replace = match &best {
            None => true,
            Some((bv, bm)) => value < *bv || (value == *bv && lex_smaller(in_a, bm)),
        };
        if replace {
            best = Some((value, in_a.to_vec()));
        }
    };

    consider(cut, size_a, vol_a, &in_a);
    // Gray-code walk over vertices 1..n-1; one membership flip per step
    let steps: u64 = 1u64 << (n - 1);
    for step in 1..steps {
        let v = step.trailing_zeros() as usize + 1;
        let entering = !in_a[v];
        in_a[v] = entering;
        for &(u, w) in g.neighbors(v) {
            if in_a[u] != in_a[v] {
                cut += w;
            } else {
                cut -= w;
            }
        }
        if entering {
            size_a += 1;
            vol_a += g.degree(v);
        } else {
            size_a -= 1;
            vol_a -= g.degree(v);
        }
        consider(cut, size_a, vol_a, &in_a);
    }

    match best {
        Some((value, mask)) => Ok((VertexSet::from_mask(mask), value)),
        None => Err(Error::UndefinedObjective {
            cluster: 1,
            reason: "objective undefined on every bipartition".into(),
        }),
    }
}

/// Whether a's sorted member list precedes b's lexicographically
/// (a strict prefix precedes its extensions).
fn lex_smaller(a: &[bool], b: &[bool]) -> bool {
    for p in 0..a.len() {
        if a[p] == b[p] {
            continue;
        }
        // at the first differing position, the holder's next member is p;
        // the other side's next member (if any) is larger
        let holder_is_a = a[p];
        let other = if holder_is_a { b } else { a };
        let other_has_later = other[p + 1..].iter().any(|&x| x);
        return if other_has_later {
            holder_is_a
        } else {
            !holder_is_a
        };
    }
    false
}

/// The bipartition relaxation vectors: f as in the RatioCut (or, with
/// `normalized`, the Ncut) relaxation, and the n×2 indicator matrix H
/// with H'H = I (or H'DH = I).
#[derive(Debug, Clone)]
pub struct RelaxationVectors {
    pub f: Array1<f64>,
    pub h: Array2<f64>,
}

pub fn build_relaxation_vector(
    g: &SimilarityGraph,
    a: &VertexSet,
    normalized: bool,
) -> Result<RelaxationVectors> {
    let n = g.vertex_count();
    if a.universe_len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: a.universe_len(),
        });
    }
    let complement = a.complement();
    let (size_a, vol_a) = crate::graph::set_measures(g, a);
    let (size_b, vol_b) = crate::graph::set_measures(g, &complement);
    if size_a == 0 || size_b == 0 {
        return Err(Error::InvalidPartition(
            "both sides of the bipartition must be nonempty".into(),
        ));
    }
    let (wa, wb) = if normalized {
        if vol_a <= 0.0 || vol_b <= 0.0 {
            return Err(Error::InvalidPartition(
                "normalized relaxation needs positive volumes on both sides".into(),
            ));
        }
        (vol_a, vol_b)
    } else {
        (size_a as f64, size_b as f64)
    };

    let pos = (wb / wa).sqrt();
    let neg = -(wa / wb).sqrt();
    let f = Array1::from_iter((0..n).map(|i| if a.contains(i) { pos } else { neg }));
    let mut h = Array2::zeros((n, 2));
    for i in 0..n {
        if a.contains(i) {
            h[[i, 0]] = 1.0 / wa.sqrt();
        } else {
            h[[i, 1]] = 1.0 / wb.sqrt();
        }
    }
    Ok(RelaxationVectors { f, h })
}

/// The n×k indicator matrix H for a k-way partition: column j holds
/// 1/√|A_j| (or 1/√vol(A_j) when `normalized`) on the members of A_j.
pub fn indicator_matrix(
    g: &SimilarityGraph,
    p: &Partition,
    normalized: bool,
) -> Result<Array2<f64>> {
    let n = g.vertex_count();
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: p.len(),
        });
    }
    let k = p.cluster_count();
    let mut weights = vec![0.0f64; k];
    for i in 0..n {
        weights[p.label(i) - 1] += if normalized { g.degree(i) } else { 1.0 };
    }
    for (c, &w) in weights.iter().enumerate() {
        if w <= 0.0 {
            return Err(Error::UndefinedObjective {
                cluster: c + 1,
                reason: "zero volume".into(),
            });
        }
    }
    let mut h = Array2::zeros((n, k));
    for i in 0..n {
        let c = p.label(i) - 1;
        h[[i, c]] = 1.0 / weights[c].sqrt();
    }
    Ok(h)
}

/// Spectral-versus-exact comparison of a relaxed objective.
#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub objective: String,
    pub spectral_value: f64,
    pub exact_value: f64,
    /// spectral / exact; reported as 1 when both are 0.
    pub ratio: f64,
}

/// Run the spectral algorithm matching `cfg.laplacian` with two clusters,
/// evaluate its relaxed objective (RatioCut for the unnormalized
/// Laplacian, Ncut for the normalized ones), and compare against the
/// exhaustive bipartition optimum.
pub fn relaxation_gap_report(g: &SimilarityGraph, cfg: &SpectralConfig) -> Result<GapReport> {
    let objective = match cfg.laplacian {
        crate::laplacian::LaplacianKind::Unnormalized => CutObjective::RatioCut,
        _ => CutObjective::Ncut,
    };
    let mut cfg2 = *cfg;
    cfg2.k = 2;
    let partition = cluster(g, &cfg2)?;
    let spectral_value = objective_value(g, &partition, objective)?;
    let (_, exact_value) = exact_min_bipartition(g, objective)?;
    let ratio = if exact_value == 0.0 {
        if spectral_value == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        spectral_value / exact_value
    };
    Ok(GapReport {
        objective: objective.name().to_string(),
        spectral_value,
        exact_value,
        ratio,
    })
}

/// Tr(H' M H) for a Laplacian M and an indicator-style matrix H.
pub fn trace_quadratic(lap: &crate::laplacian::LaplacianMatrix, h: &Array2<f64>) -> f64 {
    // Tr(H' M H) = Σ_j h_j' M h_j
    let m = lap.values();
    let (n, k) = (h.nrows(), h.ncols());
    let mut total = 0.0;
    for j in 0..k {
        for r in 0..n {
            let mut row = 0.0;
            for c in 0..n {
                row += m[[r, c]] * h[[c, j]];
            }
            total += h[[r, j]] * row;
        }
    }
    total
}
