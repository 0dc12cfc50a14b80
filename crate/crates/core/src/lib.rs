pub mod error;
pub mod exact;
pub mod identities;
pub mod modular;
pub mod numerics;
pub mod polyroots;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};
