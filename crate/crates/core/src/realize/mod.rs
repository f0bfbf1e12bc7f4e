//! Witnesses, constructions, search, the non-realizability table and the
//! classifier built from them.

pub mod classify;
pub mod concat;
pub mod db;
pub mod search;
pub mod series;
pub mod witness;

pub use classify::{
    check_degree, classify, classify_combo, classify_with, combo_seed, realize_combo, summarize,
    ClassifyOptions, ComboStatus, Method, Status, WitnessBook, MAX_CLASSIFY_DEGREE,
};
pub use concat::{
    block_plan, concatenate, realize_by_blocks, realize_by_splitting, realize_plan, BaseBlock,
};
pub use db::{db_lookup, sigma_k_rule, Database, NonrealizableEntry, EMBEDDED_DATABASE};
pub use search::{random_search, random_search_with, SearchConfig, DEFAULT_BUDGET};
pub use series::{
    lemma_derivative_check, realize_series_pair, realize_series_single, DerivativeCheckRow,
};
pub use witness::{transport_poly, verify_witness, Witness};
