//! Exact character tables of the finite unitary groups `U(n, F_{q^2})`.
//!
//! Class functions of all `U_n` are identified with symmetric functions in
//! variables indexed by Frobenius orbits. Irreducible characters come from
//! Schur functions, class indicators from Hall-Littlewood products, and the
//! translation between the two runs through Green polynomials evaluated at
//! `-q`. All arithmetic is exact: big rationals, Laurent polynomials over the
//! rationals and cyclotomic fields.
//!
//! A small matrix-group enumerator in [`bruteforce`] serves as an independent
//! oracle for the tiniest groups.

pub mod bruteforce;
pub mod charmap;
pub mod error;
pub mod exactnum;
pub mod multipartitions;
pub mod orbits;
pub mod partitions;
pub mod reptables;
pub mod symfunc;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, QPoly, Rational};
pub use multipartitions::MultiPartition;
pub use orbits::{OrbitId, OrbitKind};
pub use partitions::Partition;
