//! Exact K-type combinatorics for theta lifts and cohomologically induced
//! modules of orthogonal groups.

pub mod cohomology;
pub mod error;
pub mod ktype;
pub mod orth;
pub mod partition;
pub mod report;
pub mod tensor;
pub mod theta;
pub mod verify;
pub mod weight;
pub mod zuckerman;

pub use error::{Error, Result};
pub use ktype::{KType, KTypeSum, Truncation};
pub use orth::OLabel;
pub use partition::Partition;
pub use weight::{canonical_infchar, is_regular, rho, HalfIntVec, InfChar, RootType};
