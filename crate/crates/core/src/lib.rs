pub mod config;
pub mod error;
pub mod expand;
pub mod lorentz;
pub mod numcore;
pub mod spectral;
pub mod verify;
pub mod wilson;

pub use error::{Error, Result};
