//! Proper sample compression schemes for families of balls in graphs.
//!
//! The crate covers trees, cycles and cacti, cube-free median graphs,
//! interval graphs, split graphs, radius-one balls of planar graphs, and an
//! approximate scheme for Gromov-hyperbolic graphs. Every scheme implements
//! [`Scheme`] and can be checked against the brute-force oracles in
//! [`ball`] with [`verify_scheme`].

pub mod ball;
pub mod cactus;
pub mod cfmedian;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod hyperbolic;
pub mod interval;
pub mod planar;
pub mod sample;
pub mod split;
pub mod tree;
pub mod verify;

pub use ball::{Ball, Center};
pub use cactus::{CactusScheme, CycleScheme};
pub use cfmedian::CfMedianScheme;
pub use error::{Error, Result};
pub use generators::{generate, GenSpec, GraphClass};
pub use graph::{BlockTree, DistanceMatrix, Graph, SphereOrder};
pub use hyperbolic::{hyperbolicity, HyperbolicScheme, Hyperbolicity};
pub use interval::{IntervalMode, IntervalRepresentation, IntervalScheme};
pub use planar::{PlanarUnitScheme, RotationSystem};
pub use sample::{CompressedSample, HalfInt, Sample, Sign};
pub use split::{split_partition, SplitPartition, SplitScheme};
pub use tree::{TreeFixedRadius, TreeFixedRadiusSets, TreeLscs, TreeUscs};
pub use verify::{verify_scheme, ApproxParams, Scheme, VerificationReport, VerifyOptions};
