//! Chen iterated integrals of weight-2 modular 1-forms on Γ₀(11) and the
//! higher-order automorphic forms built from them.

pub mod chen;
pub mod error;
pub mod group_algebra;
pub mod higher_order;
pub mod hodge;
pub mod modular_letters;
pub mod path;
pub mod report;

pub use error::{Error, Result};
