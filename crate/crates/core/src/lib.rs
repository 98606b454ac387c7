//! Witness constructions and verification oracles for families of graphs
//! that avoid a fixed induced subgraph.
//!
//! A family is *feasible* when it has a member with `n` vertices and `m`
//! edges for every `n >= 1` and `0 <= m <= C(n,2)`. The family of graphs with
//! no induced copy of `G` is feasible exactly when `G` is not one of `K_k`,
//! `K_k` minus an edge, or their complements (`k >= 2`). This crate builds
//! the witness graphs, checks them with an independent embedding oracle, and
//! enumerates small graphs exhaustively to tabulate feasible pairs.

pub mod classifier;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;

pub use classifier::{
    classify, feasibility_verdict, recognize_h, recognize_tnf, tnf_infeasible_region, witness,
    Construction, ForbiddenClass, TnfKind, TnfRegion, Verdict, WitnessCertificate,
};
pub use constructions::{HParams, QParams, SplitParams};
pub use enumeration::{enumerate_nonisomorphic, feasible_pairs, FamilySpec, PairTable};
pub use error::{Error, Result};
pub use graph::{choose2, Graph, MAX_ORDER};
pub use graph6::{decode_graph6, decode_graph6_lines, encode_graph6, encode_graph6_lines};
pub use iso::{canonical_form, contains_induced, is_isomorphic, Embedding};
