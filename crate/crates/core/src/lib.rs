//! Exact computation of connection coefficients for two commutative
//! subalgebras of the group algebra of the symmetric group — the class
//! algebra of S_n and the double coset algebra of the hyperoctahedral group
//! B_n in S_2n — together with the monomial expansions of their generating
//! series and of zonal polynomials indexed by near hooks (a, b, 1^c).
//!
//! All arithmetic is arbitrary-precision and exact. Every closed form is
//! paired with an independent route — brute-force group enumeration,
//! character sums, or skew tableau factors — and the test suites hold the
//! pairs equal.

pub mod arith;
pub mod characters;
pub mod class_algebra;
pub mod double_coset;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod verify;
pub mod zonal;

pub use error::{Error, Result};
pub use partitions::{NearHook, Partition};
