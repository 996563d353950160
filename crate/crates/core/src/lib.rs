pub mod catalog;
pub mod diamond;
pub mod error;
pub mod exterior;
pub mod hodge;
pub mod parser;
mod linalg;
pub mod random;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
