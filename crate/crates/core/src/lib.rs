//! Exact partition combinatorics for composition factors of tensor products of
//! truncated symmetric powers.
//!
//! The crate is `no_std` with `alloc`. Everything is a pure function over
//! immutable values:
//!
//! - [`partition`]: partitions, nodes, dominance, regularity, restricted splits
//! - [`hooks`]: rim hooks and `l`-cores
//! - [`edge`], [`mullineux`]: the `l`-edge, Mullineux components, symbol and involution
//! - [`special`]: distinguished partitions, `Phi_m`, the `m`-special and `m`-good classifiers
//! - [`character`]: Schur expansions, Kostka numbers, Pieri rules, truncated tensor characters
//! - [`laurent`], [`llt`]: Fock-space canonical basis and decomposition numbers

#![no_std]

extern crate alloc;

pub mod character;
pub mod edge;
pub mod enumerate;
pub mod error;
pub mod hooks;
pub mod laurent;
pub mod llt;
pub mod mullineux;
pub mod partition;
pub mod special;

pub use edge::{
    e_l_from_components, edge_length, is_edge_l_connected, l_edge, mullineux_components, remove_l_edge, rim,
    LEdge,
};
pub use enumerate::{partitions_of, partitions_up_to, PartitionsOf};
pub use error::{Error, Result};
pub use hooks::{l_core, l_core_by, remove_rim_hook, rim_hooks};
pub use laurent::LaurentPoly;
pub use llt::{decomposition_matrix, nabla_multiplicity, DecompositionMatrix, FockVector};
pub use mullineux::{
    add_l_edge, find_co_suitable_node, find_suitable_node_nonrestricted, mullineux, mullineux_length,
    mullineux_symbol, MullineuxSymbol,
};
pub use partition::{ModularParams, Node, NodeSets, Partition, Regularity};
pub use special::{
    distinguished_decomposition, enumerate_special, is_distinguished, is_m_good, is_m_special, m_special,
    phi_contains, verify_decomposition, GoodStatus, GoodVerdict, SpecialRule, SpecialVerdict,
};
