//! Hardness reductions, usable as instance generators.

pub mod cnf;
pub mod eth;
pub mod lift;
pub mod nae;
pub mod setcover;

pub use cnf::{CnfFormula, Lit};
pub use eth::{
    eth_assignment_from_labeling, eth_labeling_from_assignment, reduce_3sat_eth, EthLayout,
};
pub use lift::{lift_color, lift_labeling, LiftLayout};
pub use nae::{isolated_clause_gadget, nae_labeling_from_assignment, reduce_nae3sat, NaeLayout};
pub use setcover::{
    reduce_is_to_setcover, reduce_setcover, setcover_labeling_from_cover, SetCover,
    SetCoverLayout,
};
