//! Distribution element tree (DET) density estimation.
//!
//! A DET recursively bisects the axis-aligned bounding box of a sample
//! ensemble. At every node, per-dimension goodness-of-fit tests and pairwise
//! independence tests decide whether the local piecewise constant or linear
//! product density already describes the data; if any test rejects, the node
//! is split and the children are processed recursively. Leaves ("distribution
//! elements") carry a sample weight and one marginal model per dimension, so
//! the estimate integrates to one by construction, a point query is a single
//! root-to-leaf descent, and the number of elements grows sublinearly in the
//! sample count.
//!
//! The crate also ships the statistical machinery the builder needs
//! (chi-squared, Kolmogorov-Smirnov and Kendall tau tests plus their special
//! functions), a catalogue of synthetic reference distributions, a
//! normal-reference-rule histogram baseline, and MISE/Hellinger/total
//! variation benchmark drivers.

pub mod det_tree;
pub mod elements;
pub mod ensemble;
pub mod error;
pub mod metrics;
pub mod refdist;
pub mod stat_tests;

pub use det_tree::{build, build_whitened, BuildConfig, DetNode, DetTree, Order, TreeStats};
pub use elements::{Cuboid, DistributionElement, MarginalModel, SplitMode};
pub use ensemble::{DomainBounds, SampleEnsemble, WhitenTransform};
pub use error::{Error, Result};
pub use stat_tests::{GofStatistic, IndepStatistic, SignificanceConfig, TestOutcome};
