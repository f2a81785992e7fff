pub mod error;
pub mod hilbert;
pub mod irred;
pub mod linalg;
pub mod par;
pub mod polyring;
pub mod report;
pub mod residual;
pub mod subres;
pub mod sweep;

pub use error::{Error, Result};
