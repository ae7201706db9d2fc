pub mod algebra;
pub mod error;
pub mod homdim;
pub mod linalg;
pub mod modcat;
pub mod preproj;
pub mod weyl;

pub use error::{Error, Result};
