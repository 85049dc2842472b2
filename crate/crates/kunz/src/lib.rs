//! Numerical semigroups represented by Kunz-coordinates vectors.
//!
//! A *numerical semigroup* is a subset of the natural numbers that contains 0,
//! is closed under addition, and has finite complement. Fixing the
//! multiplicity `m` (the smallest nonzero element), every such semigroup is
//! described by its Kunz coordinates `(x_1, …, x_{m-1})`, where
//! `w_i = m·x_i + i` is the smallest element congruent to `i` modulo `m`. The
//! coordinates characterise the semigroup completely: membership, Frobenius
//! number, genus, gaps and intersections all reduce to componentwise
//! arithmetic on the vector.
//!
//! On top of that representation the crate computes the *special gaps* of a
//! semigroup (the gaps whose adjunction keeps the set a semigroup), decides
//! irreducibility and `m`-irreducibility, and decomposes a semigroup into a
//! minimal intersection of `m`-irreducible oversemigroups:
//!
//! * [`semigroup`] — core types ([`GeneratorSet`], [`KunzVector`],
//!   [`Semigroup`]) and their arithmetic.
//! * [`engine`] — the generic machinery for any multiplicity: validation,
//!   special gaps, classification, candidate families, minimal
//!   decompositions, parity-constrained decomposability, enumeration.
//! * [`mult3`], [`mult4`] — exact closed-form fast paths for multiplicities 3
//!   and 4, equal to the engine on every input.
//! * [`gas`] — semigroups generated by generalized arithmetic sequences
//!   `⟨m, mh+d, …, mh+kd⟩` with closed-form Kunz vectors.
//! * [`oracle`] — deliberately naive brute-force reference implementations
//!   used as ground truth by the test suites.
//! * [`verify`] — corpus sweeps that cross-validate the closed forms, the
//!   engine and the oracle against each other.
//!
//! ```
//! use kunz::{GeneratorSet, Semigroup};
//!
//! let s = Semigroup::from_generators(&GeneratorSet::new(vec![3, 10, 14]).unwrap()).unwrap();
//! assert_eq!(s.kunz().coords(), &[3, 4]);
//! assert_eq!(s.frobenius(), 11);
//! let special = kunz::engine::special_gaps(s.kunz());
//! assert_eq!(special.values(), vec![7, 11]);
//! ```

pub mod engine;
pub mod error;
pub mod gas;
pub mod mult3;
pub mod mult4;
pub mod oracle;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use semigroup::{GeneratorSet, KunzVector, Semigroup};
