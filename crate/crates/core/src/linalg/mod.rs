//! Exact matrices over the integer polynomial ring: determinants, maximal
//! minors, and rank and kernel computations over the rationals.

mod det;
mod matrix;
mod minors;
mod rational;

pub use det::{
    bareiss_determinant, det_integer, determinant, expansion_determinant, indices_to_mask, leibniz_determinant,
    mask_to_indices, maximal_minors_by_expansion,
};
pub use matrix::{random_point, ExactMatrix};
pub use minors::{for_each_subset, gcd_of_maximal_minors, specialized_rank, RANK_CHECK_BOUND, RANK_CHECK_SEED};
pub use rational::{kernel_basis_over_q, rank_exact, rank_integer, rank_over_q, rref, QMatrix};
