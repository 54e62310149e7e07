//! Computational kernel for real and complex Clifford algebras `Cl(p, q)`.
//!
//! Blades are bitmasks over generator indices and their products carry an exact
//! integer sign. Everything else (dense multivectors, product tables, matrix
//! representation checks) is layered on top of [`blade::blade_product`].
//!
//! The crate also carries the quaternion and octonion division algebras, dense
//! matrices over `ℝ`, `ℂ`, `ℍ` and `ℂ ⊗ ℍ`, a catalog of explicit generator
//! matrices with automated verification, and the mod-8 classification of the
//! real algebras.

pub mod blade;
pub mod classification;
pub mod division;
pub mod document;
mod error;
pub mod matrix;
pub mod multivector;
pub mod ordering;
pub mod representation;
pub mod ring;
pub mod scalar;

pub use blade::{
    blade_product, index_codec, make_signature, mask_from_indices, star, Blade, Sign, Signature, SignedBlade,
};
pub use classification::{classify, AlgebraDescriptor, BaseRing};
pub use division::{AxisAngle, Octonion, Quaternion};
pub use document::{AnyMultivector, MultivectorDocument};
pub use error::{CliffordError, Result};
pub use matrix::{diag2_embed, real_rank, Diag2Pair, Matrix};
pub use multivector::{grade_space, product_table, Multivector, ProductTable, SignedIndex, DEFAULT_TABLE_CAP};
pub use ordering::{
    grade_lex_orientation, grade_lex_permutation, permutation_orientation, Convention, OrderingConvention,
};
pub use representation::{
    builtin, check_identity_products, pauli_quaternion_subalgebra, AnyRepresentation, BuiltinName, Representation,
    SignatureMatch, Verdict, VerificationReport,
};
pub use ring::{ComplexQuaternion, Ring, RingKind};
pub use scalar::{Field, Scalar};
