//! The Carlitz module over A = GF(q)[T], its torsion, and class-field
//! cardinality and genus calculators.

use thiserror::Error;

pub mod classfield;
pub mod torsion;
pub mod twisted;

pub use classfield::{
    class_field_genus, cyclic_extension_parameters, cyclic_extension_parameters_with_r,
    epsilon_choice, narrow_ray_check, narrow_ray_class_order, CyclicExtensionParameters,
    EpsilonChoice, NarrowRayReport,
};
pub use torsion::{torsion_polynomial, torsion_report, TorsionModule, TorsionReport};
pub use twisted::{CarlitzModule, TwistedPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CarlitzError {
    #[error("Q must be monic")]
    NotMonic,
    #[error("deg Q = {degree} exceeds the torsion cap {cap}")]
    SplittingFieldTooLarge { degree: usize, cap: usize },
    #[error("genus formula gives odd 2g - 2 = {twice_g_minus_two}")]
    NonIntegerGenus { twice_g_minus_two: i128 },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl CarlitzError {
    pub fn is_tripwire(&self) -> bool {
        matches!(self, CarlitzError::NonIntegerGenus { .. })
    }
}
