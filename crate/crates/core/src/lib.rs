pub mod approx_type;
pub mod balls;
pub mod error;
pub mod expr;
pub mod extension;
pub mod kaplansky;
pub mod notation;
pub mod ordered_group;
pub mod pcs;
pub mod polynomial;
pub mod valued_field;

pub use error::{Error, Result};
