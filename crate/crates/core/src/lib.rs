//! Additive codes over the mixed alphabet F2^alpha x F4^beta: generator
//! reduction, code types, duality under the mixed inner product, the
//! complementary-dual (ACD) test and its sufficient conditions, the binary
//! image map W, minimum distance and code search.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod duality;
pub mod error;
pub mod field;
pub mod metrics;
pub mod wmap;

pub use code::{compute_type, AdditiveCode, CodeType, StandardForm};
pub use duality::{is_acd, AcdCertificate, Condition, Verdict};
pub use error::{Error, Result};
pub use field::{BinaryMatrix, BitVector, F4Matrix, MixedWord, F4};
