//! Subresultants of the generic square system.
//!
//! For forms `P_1..P_n` of degrees `d_1..d_n` in `x1..xn` with one
//! coefficient variable per monomial, `I_nu` is the image of the degree-`nu`
//! Macaulay map `(q_i) -> sum q_i P_i`. A set `S` of `H(nu)` monomials of
//! degree `nu` selects rows to *delete*; the subresultant `Delta_S^nu` is the
//! gcd of the maximal minors of what remains, normalized so that its grevlex
//! leading coefficient is positive. It is nonzero at a specialization
//! exactly when `I_nu + span(S)` is the whole degree-`nu` space.
//!
//! When the row-deleted map is square this is one determinant. Otherwise
//! the kernel of the map is spanned by the Koszul relations
//! `m P_j e_i - m P_i e_j`, and the gcd is computed as a single maximal
//! minor divided by the complementary minor of the relation matrix, which
//! avoids enumerating every minor. Degrees where products of three forms
//! already fit in degree `nu` are rejected as unsupported.

mod delta;
mod macaulay;
mod sets;
mod system;
mod universal;

pub use delta::{
    check_multidegree, delta_of_system, delta_of_specialization, position, relation_minor_gcd, subresultant, subresultant_by_minors, Method,
    Position, SubresultantResult, PROBE_SEEDS,
};
pub use macaulay::{build_macaulay_map, has_second_syzygies, koszul_rank, koszul_syzygies, MacaulayMap};
pub use sets::{enumerate_s, validate_s, MonomialSet};
pub use system::{build_generic_system, coefficient_name, x_universe, GenericSystem, PolySystem, X_GROUP};
pub use universal::{evaluate_at, specialization_assignment, universal_property_check};
