//! Exact polynomial arithmetic, Gröbner bases and ideal operations.

mod coeff;
pub(crate) mod groebner;
mod ideal;
mod matrix;
mod monomial;
mod parse;
mod poly;
pub(crate) mod terms;

pub use coeff::{Coeff, Field};
pub use ideal::{is_groebner_basis, normal_form, Ideal};
pub use matrix::PolyMatrix;
pub use monomial::{ModuleOrder, Monomial, MonomialOrder, TermOrder};
pub use poly::{same_ring, PolyRing, Polynomial, DEFAULT_MAX_DEGREE};
pub use terms::Term;

pub(crate) use matrix::subsets as subsets_of;
pub(crate) use poly::check_ring;
#[allow(unused_imports)]
pub(crate) use poly::format_monomial;
