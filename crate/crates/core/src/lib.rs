//! Abacus combinatorics for blocks of Ariki-Koike algebras.
//!
//! A charged multipartition is stored as a [`MultiAbacus`]; blocks are
//! generated by bead moves and compared through residue multisets. The
//! [`uglov`] module fuses r-tuples of abaci into one, and [`rouquier`] and
//! [`scopes`] test Rouquier conditions and build explicit equivalences
//! between blocks.

pub mod abacus;
pub mod beta;
pub mod blocks;
pub mod error;
pub mod io;
pub mod partition;
pub mod rouquier;
pub mod scopes;
pub mod uglov;
pub mod verify;

pub use abacus::{
    abacus_to_partition, beta_set, e_core_and_weight, eta, eta_inverse, move_bead,
    parse_components, AbacusConfig, EtaDecomposition, MultiAbacus,
};
pub use beta::BetaSet;
pub use blocks::{
    all_blocks, base_tuple, block_hk, block_oracle, equivalent, generate_block, hook_weight,
    is_core_block, is_staircase_block, move1_neighbors, move2_neighbors, r_circle,
    recharged_base_tuple, residue_multiset, same_block, Block, ResidueMultiset,
    DEFAULT_ORACLE_LIMIT,
};
pub use error::{Error, Result};
pub use partition::{multipartition_count, multipartitions, Partition};
pub use rouquier::{
    ggr_stretch_vector, is_r_rouquier_block, is_r_rouquier_partition, is_rouquier_block,
    is_rouquier_block_exhaustive, is_rouquier_multipartition, is_rouquier_partition, stretch,
    Charged,
};
pub use scopes::{
    is_normalized, l22_holds, m_vector, reduce_to_staircase, rouquier_normalize, scopes_move_valid,
    scopes_related, upsilon_shift, upsilon_swap, EquivalenceChain, Step,
};
pub use uglov::{fuse, level_rank, phi_block_decomposition, psi_k, split};
