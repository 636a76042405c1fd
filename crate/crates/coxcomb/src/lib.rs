//! Exact combinatorics of bunched rings.
//!
//! A bunched ring presentation consists of a lattice-graded polynomial ring
//! (the degrees of the generators), a list of homogeneous relations, and a
//! collection of cones in the grading lattice (the bunch). From these data
//! the library computes, in exact arithmetic, the combinatorial invariants of
//! the associated variety: relevant faces and the covering collection, the
//! Picard group, the effective/moving/semiample/ample/Mori cones, per-stratum
//! singularity type, the canonical class with Gorenstein and Fano tests, and
//! the minimal ambient toric fan obtained by Gale duality.
//!
//! The crate is organized along the data it manipulates:
//!
//! - [`matrix`] — arbitrary-precision integer matrices, Hermite and Smith
//!   normal forms, kernels and sublattices,
//! - [`cone`] — rational polyhedral cones with dual (generator + facet)
//!   descriptions computed by the double description method,
//! - [`fan`] — fans of strictly convex cones, stellar subdivision, complete
//!   polytopal fans with prescribed rays,
//! - [`ring`] — graded ring presentations and their F-faces,
//! - [`bunch`] — F-bunch validation, relevant faces, Gale duality and the
//!   minimal ambient fan,
//! - [`invariants`] — the divisor-theoretic invariants and the intrinsic
//!   quadric constructions,
//! - [`cli`] — the document format and deterministic reports used by the
//!   `coxcomb` binary.
//!
//! All core algorithms are generic over an exact integer scalar implementing
//! [`Scalar`]; the crate-level aliases fix [`num_bigint::BigInt`] as the
//! shipped instantiation. No floating point is used anywhere.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

pub mod bunch;
pub mod cli;
pub mod cone;
mod error;
pub mod fan;
pub mod invariants;
pub mod matrix;
pub mod ring;

pub use error::{Error, Result};

/// Exact integer scalar for all lattice and cone arithmetic.
///
/// Implemented by any signed arbitrary- or fixed-width integer from the
/// `num` family. Lattice indices grow multiplicatively under composition,
/// so the shipped aliases use `BigInt`; fixed-width types are only suitable
/// for tests on tiny inputs.
pub trait Scalar:
    Integer + Signed + FromPrimitive + Clone + Hash + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + Clone + Hash + fmt::Debug + fmt::Display + 'static
{
}

/// The integer type used by the shipped tools.
pub type Int = num_bigint::BigInt;
/// Exact rational built on [`Int`].
pub type Rat = num_rational::Ratio<Int>;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = matrix::Matrix<Int>;
/// Sublattice of `Z^k` in canonical column Hermite form.
pub type Sublattice = matrix::Sublattice<Int>;
/// Rational polyhedral cone with generator and facet representations.
pub type RatCone = cone::Cone<Int>;
/// Fan of strictly convex rational cones.
pub type Fan = fan::Fan<Int>;
/// Graded ring presentation (degrees plus homogeneous relations).
pub type RingPresentation = ring::Presentation<Int>;
/// Homogeneous relation given by its terms.
pub type Relation = ring::Relation<Int>;
/// Validated F-bunch.
pub type FBunch = bunch::Bunch<Int>;
/// Gale data (the dual projected cone).
pub type GaleData = bunch::GaleData<Int>;

pub use cone::FaceIndexSet;
