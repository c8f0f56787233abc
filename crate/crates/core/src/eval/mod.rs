//! The functor F_A on tangle expressions, the invariants F_A(H) and v_A(H),
//! and the property checks built on them.

mod checks;
mod engine;
mod invariant;
mod map;

pub use checks::{
    check_mirror, check_scaling, opposite_bundle, verify_relations, verify_relations_with, ScalingCheck,
};
pub use engine::{evaluate, generator_map, Evaluator, PreparedTangle};
pub use invariant::{
    cap_cup_counts, check_horn_independence, horn_sweep, invariant_f, invariant_v, invariant_v_at, EvalError,
    HornSweep, InvariantResult,
};
pub use map::{digits, from_digits, radix_len, reverse_index, SparseMap};
