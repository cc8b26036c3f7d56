//! Exact ordinary and Brauer character theory for small solvable
//! permutation groups, with verification of lift-counting criteria for
//! blocks with abelian defect group.

pub mod blocks;
pub mod brauer;
pub mod chartab;
pub mod cyclo;
pub mod error;
pub mod fong;
pub mod glauberman;
pub mod modp;
pub mod perm;
pub mod session;
pub mod verify;

pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
pub use session::Session;
