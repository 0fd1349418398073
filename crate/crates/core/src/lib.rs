//! Exact arithmetic for hybrid numbers and generalized hybrid
//! Fibonacci/Lucas/Horadam sequences.
//!
//! The hybrid ring `K` has basis `1, i, ε, h` with `i² = -1`, `ε² = 0`,
//! `h² = 1` and `ih = -hi = ε + i`. Sequences are evaluated two ways: by
//! the recurrence and in closed form over `Q[s]/(s² - D)`. The
//! [`identities`] module checks the classical identities for these
//! sequences by evaluating both sides along independent code paths.

pub mod binet;
pub mod cli;
pub mod error;
pub mod genfunc;
pub mod hybrid;
pub mod identities;
pub mod quadext;
pub mod rational;
pub mod ring;
pub mod sequences;

pub use binet::{make_context, BinetContext, BinetError};
pub use error::{ArithError, ParamError};
pub use hybrid::{BasisTable, HybridNumber, Norm, NormClass, Unit};
pub use quadext::{roots, QuadExt};
pub use rational::{Rational, RationalOp};
pub use ring::CoeffRing;
pub use sequences::{HoradamParams, SeqCache, SeqKind};
