pub mod category;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod localization;
pub mod operads;
pub mod presheaves;
pub mod suite;
pub mod targets;
pub mod trees;

pub use error::{Error, Result};
