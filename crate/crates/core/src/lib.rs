pub mod algebra;
pub mod constructions;
pub mod curves;
pub mod error;
pub mod twists;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
