//! Finitely presented graded modules and the constructions built on them.

mod fpmodule;
mod functors;
mod hom;
mod submodule;
mod symalg;
pub mod vector;

pub use fpmodule::{FPModule, ModuleMap};
pub use functors::{
    exterior_power, exterior_power_map, fitting_ideal, generic_rank, isolated_singularity_check,
    symmetric_basis, symmetric_power, symmetric_power_map, symmetric_product, tensor, tensor_maps,
    wedge_basis, wedge_product,
};
pub use hom::{double_dual, dual, hom_module, DoubleDual, HomModule};
pub use submodule::{syzygies, Submodule};
pub use symalg::{symmetric_algebra, SymAlgebra};
pub use vector::Vector;
