//! Dynamics of `n -> s(n)`: trajectories and their model sequences, fixed
//! points, unboundedness witnesses and the average excess.

mod average;
mod fixed;
mod trajectory;
mod witness;

pub use average::{mean_excess, MEAN_EXCESS_MAX};
pub use fixed::{
    excluded_fixed_quarters, fixed_methods_disagree, fixed_points, is_fixed,
    is_fixed_by_progressions, is_fixed_word, FixedMethod, QrProgression, FIXED_LIMIT_MAX,
};
pub use trajectory::{
    first_divergence, model_t1, model_t2, step, t2_divergence_bound, trajectory, word_trajectory,
    Divergence, DivergenceReport, Trajectory, TrajectoryIter, DEFAULT_COMPARE_LIMIT, EPSILON,
    TRAJECTORY_MAX,
};
pub use witness::{
    check_witness, inverse_mod_pow2, unbounded_witness, Witness, WITNESS_MAX_BITS, WITNESS_MAX_M,
};
