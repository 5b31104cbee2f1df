//! Good polynomials over finite fields and the locally recoverable codes
//! built from them.
//!
//! - [`field`]: exact arithmetic in F_{p^m}.
//! - [`poly`]: univariate polynomials, root counting, factorization shapes,
//!   discriminants.
//! - [`good`]: minimal monodromy orders G_n(q), witness polynomials, totally
//!   split places and their bounds.
//! - [`monodromy`]: cycle-type census and statistical group identification.
//! - [`lrc`]: code construction, encoding, local repair, minimum distance.
//! - [`report`]: reproducible run reports and the split-place tables.

pub mod arith;
pub mod error;
pub mod field;
pub mod good;
pub mod lrc;
pub mod monodromy;
pub mod poly;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{make_field, parse_field, Field, FieldCtx, FieldElement};
pub use poly::{FactorShape, Poly};
