//! Real Galois cohomology through the finite model `F(ζ)`.
//!
//! A strong real form with central invariant `exp(2πiζ)` is represented by
//! `u = ½ζ + ½q`, `q ∈ X₊^{τ₀}`, modulo `½(1+τ₀)X₊`; the imaginary Weyl
//! group acts linearly on these cosets.

mod central;
mod strong;
mod tate;

pub use central::{
    central_invariant_classgroup, CentralClass, CentralInvariantGroup, InvariantCocharacter,
};
pub use strong::{
    h1_count, h1_count_capped, h1_via_mf, srf_profile, strong_class_set, strong_class_set_capped,
    weyl_orbit_partition, GeneratorSet, H1Result, ProfileEntry, StrongClassSet, DEFAULT_CAP,
};
pub use tate::{torus_tate_h0, TwoGroup};
