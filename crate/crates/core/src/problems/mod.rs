//! Membership checkers for the problem languages `P`.
//!
//! Every checker is a pure function of its input and safe to call from
//! several search workers at once.

mod machine;
mod pcp;
mod strings;
mod tiling;

use thiserror::Error;

pub use machine::{
    member_machine_language, parse_machine_word, run_stats, simulate, MachineMode, MachineWord,
    Move, RunLimits, RunStats, TmJson, TmSpec, TmTransition, DEFAULT_CONFIGURATION_CAP,
};
pub use pcp::{
    check_bpcp, member_bpcp, parse_bpcp_word, BpcpSolution, PcpInstance, PcpJson,
    ITEM_SEPARATOR, LIST_SEPARATOR,
};
pub use strings::{
    deinterleave, erase_pad, interleave, member_sequential_string_eq, member_shuffled_regex_eq,
    member_shuffled_string_eq, pad_to_common_length,
};
pub use tiling::{
    member_bounded_tiling, member_corridor_tiling, parse_tiling_word, solve_bounded_tiling,
    solve_corridor_tiling, solve_corridor_tiling_with_cap, Tile, TileJson, TileSet, TilesJson,
    Tiling, TilingInstance, TilingInstanceJson, TilingVariant, COLOR_SEPARATOR,
    DEFAULT_CORRIDOR_NODE_CAP, ENTRY_SEPARATOR, TILE_SEPARATOR,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProblemError {
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
