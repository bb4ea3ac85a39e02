//! A workbench for finite-dimensional quotients of path algebras over small
//! binary fields.
//!
//! The crate builds basic algebras `kQ/I` from quivers with relations via
//! truncated noncommutative Groebner bases, analyzes them (radical and socle
//! series, Cartan matrices, symmetric forms), constructs modules as quiver
//! representations (projective covers, uniserial string modules, exact
//! uniserial-existence searches), and checks algebra homomorphisms given on
//! generators. A built-in catalog provides the dihedral- and quaternion-type
//! families with two simple modules, together with a pipeline that verifies
//! each computational step forcing the dihedral parameter to zero, and a
//! small matrix-group component covers the `PGL_2` corollaries.
//!
//! Core arithmetic is generic over the [`field::Field`] scalar trait; the
//! concrete GF(2^m) instances are the aliases below.

pub mod algebra;
pub mod catalog;
pub mod modrep;
pub mod groups;
pub mod morphism;
pub mod report;
pub mod field;
pub mod gbasis;
pub mod linalg;
pub mod quiver;

pub use field::{Field, Gf};

/// GF(2): the prime field.
pub type F2 = Gf<1>;
/// GF(4), modulus x^2 + x + 1.
pub type F4 = Gf<2>;
/// GF(8), modulus x^3 + x + 1.
pub type F8 = Gf<3>;
/// GF(16), modulus x^4 + x + 1.
pub type F16 = Gf<4>;
/// GF(32), modulus x^5 + x^2 + 1.
pub type F32 = Gf<5>;
/// GF(64), modulus x^6 + x^4 + x^3 + x + 1.
pub type F64 = Gf<6>;
/// GF(128), modulus x^7 + x + 1.
pub type F128 = Gf<7>;
/// GF(256), modulus x^8 + x^4 + x^3 + x^2 + 1.
pub type F256 = Gf<8>;
