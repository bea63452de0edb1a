//! Exact integer linear algebra: matrices, rational vectors, normal forms,
//! lattices and finite abelian quotients.

mod lattice;
mod matrix;
mod normal;
mod ratvec;

pub use lattice::{
    coset_canonical_rep, lattice_quotient_invariants, Lattice, QuotientGroup, RatLattice,
};
pub use matrix::IntMatrix;
pub use normal::{hermite_rows, integer_kernel, integer_solve, smith_normal_form, Smith};
pub use ratvec::{format_rational, parse_rational, RatVector};
