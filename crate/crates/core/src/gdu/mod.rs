//! The generalized down-up family: parameters, weight schemes, certified
//! construction, presets, PBW counting and the solvable commutation table.

mod algebra;
mod params;
mod presets;

pub use algebra::{
    defining_relations, free_to_pbw, gdu_order, pbw_count_exact, pbw_count_up_to, pbw_to_free, relation_text, GduAlgebra, PbwCheck,
    PBW_POSITIONS, X1, X2, X3,
};
pub use params::{GduParams, WeightScheme};
pub use presets::{preset, Preset, PRESET_NAMES};
