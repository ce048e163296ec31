pub mod braid;
pub mod charbnsr;
pub mod complexes;
pub mod diagram;
pub mod error;
pub mod forest;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
