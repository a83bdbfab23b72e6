//! # speclust
//!
//! A self-contained spectral clustering toolkit.
//!
//! The pipeline goes: points → pairwise similarities → similarity graph →
//! graph Laplacian → eigenvectors → k-means on the embedding rows →
//! partition. Every stage is exposed on its own so the intermediate
//! objects (Laplacian spectra, cut objectives, random-walk quantities,
//! commute distances) can be inspected and cross-checked.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`data`] | toy dataset generators, cockroach graphs, CSV ingestion |
//! | [`similarity`] | Gaussian kernel, Euclidean distance matrices |
//! | [`graph`] | ε-, kNN- and fully connected similarity graphs; degrees, volumes, cuts |
//! | [`laplacian`] | the three graph Laplacians `L`, `L_sym`, `L_rw` |
//! | [`eigen`] | dense symmetric eigensolver, generalized eigenproblem, eigengaps |
//! | [`kmeans`] | seeded k-means with careful (distance-proportional) initialization |
//! | [`spectral`] | the three spectral clustering algorithms, end to end |
//! | [`cuts`] | Cut/RatioCut/Ncut/MinMaxCut evaluation and exact small-instance oracles |
//! | [`randomwalk`] | transition matrix, Ncut via transition probabilities, commute distance |
//! | [`diagnostics`] | eigengap model selection, reliability checks, parameter heuristics |
//! | [`cli`] | the `speclust` command-line front end |
//!
//! Everything is deterministic: generators, k-means and simulations take
//! explicit seeds, and repeated runs produce bit-identical results.

pub mod cli;
pub mod cuts;
pub mod data;
pub mod diagnostics;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod kmeans;
pub mod laplacian;
pub mod randomwalk;
pub mod similarity;
pub mod spectral;

pub use error::{Error, Result};
