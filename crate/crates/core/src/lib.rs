pub mod arith;
pub mod arrangement;
pub mod engine;
pub mod error;
pub mod families;
pub mod io;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod perm;

pub use error::{Error, Result};
