//! Determinantal ideals of module maps, their generic models in symmetric
//! algebras, and dimension bounds for degeneracy loci.

mod bound;
mod determinantal;
mod pfaffian;
mod specialize;

#[cfg(test)]
mod tests;

pub use bound::{verify_dimension_bound, BoundReport, DegeneracySpec, Diagnostics, MapData, Verdict};
pub use determinantal::{
    bilinear_determinantal_ideal, bilinear_ideal, determinantal_ideal, evaluation_matrix,
    generic_determinantal_ideal, order_ideal, BilinearMap, Flavor, GenericDeterminantal,
};
pub use pfaffian::{pfaffian, pfaffian_ideal};
pub use specialize::{lift_phi, phi_specialize, psi_homogenize, y_degree, Homogenized, LiftedPhi};
