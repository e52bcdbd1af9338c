pub mod algebra;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod exactmath;
pub mod format;
pub mod jordan;
pub mod suite;
