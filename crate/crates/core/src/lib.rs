//! Exact commutative algebra over prime fields: polynomials, Gröbner bases,
//! graded linear algebra over quotient rings, truncated minimal free resolutions,
//! and Rees algebra / diagonal subalgebra constructions.

pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod resolution;
pub mod ring;

pub use error::{AlgebraError, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{Monomial, MonomialOrder, Multidegree, PolyRing, RingDescriptor, RingRef, Variable};
pub use groebner::{
    colon_ideal, elimination_ideal, groebner_basis, ideal_intersection, ideal_membership, ideals_equal,
    is_regular_sequence, is_regular_sequence_mod, minimal_generator_degrees, subalgebra_presentation, GroebnerBasis,
    Ideal, RingMapKernelProblem,
};
