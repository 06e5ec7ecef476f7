//! Coordinate rings `K[S] = GF(q)[x_1..x_n] / I(S)` of finite point sets
//! `S ⊆ GF(q)^n`.
//!
//! Elements of `K[S]` are identified with their evaluation vectors on `S`,
//! which makes every ideal radical and principal. On top of that the crate
//! provides ideal membership with explicit certificates, the ideal algebra
//! (sum, product, intersection, quotient), the Rabinowitsch lift, and a
//! family of exhaustive verifiers used by the acceptance suite.

pub mod cli;
pub mod error;
pub mod gf;
pub mod ideal;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use ideal::{BezoutWitness, Ideal, MembershipCertificate};
pub use poly::{Monomial, Polynomial};
pub use ring::{Point, PointSet, RingElement, SubsetOfS};
