//! Cayley graphs on finite groups, exact automorphism groups of coloured graphs,
//! and checkers for the stability of Cayley graphs under the canonical bipartite
//! double cover.

pub mod cayley;
pub mod chao;
pub mod cli;
mod decimal;
pub mod error;
pub mod graph;
pub mod group;
pub mod perm;
pub mod products;
pub mod stability;
pub mod walks;

pub use cayley::{verify_scaling_lemma, ConnectionSet, ScalingLemmaReport};
pub use chao::{chao_check, ChaoReport};
pub use error::{Error, Result};
pub use graph::{graph6_read, graph6_write, Bipartition, ColoredGraph, JsonGraph};
pub use group::{FiniteGroup, GroupElement, GroupKind, GroupSpec};
pub use perm::{automorphism_group, automorphism_group_with_colors, PermGroup, Permutation};
pub use products::{
    bip_product_check, cartesian_product, direct_product, dorfler_check, double_cover, FactorClaim,
    ProductReport,
};
pub use stability::{
    reproduce_example_21, stability_check, theorem_sweep, StabilityReport, SweepOptions,
    SweepSummary,
};
pub use walks::{walk_count, walk_count_mod_check, WalkModReport};
