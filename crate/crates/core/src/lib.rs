//! Exact combinatorics of the level-1 standard modules of C_n^(1).
//!
//! The crate materialises the level-1 perfect crystal of type C_n^(1)
//! with two equivalent energy functions, four partition models whose
//! colour-tracked generating functions all equal the normalised character
//! e^{-Λ_i} ch L(Λ_i), the explicit bijections connecting the models, and
//! the principal specialisation with its q-Pochhammer product sides,
//! including verification of the CMPP identity at level 1.
//!
//! Everything is exact integer arithmetic on truncated series; there are
//! no floating-point tolerances anywhere.

pub mod alphabet;
pub mod cli;
pub mod colour;
pub mod crystal;
pub mod deletion;
pub mod error;
pub mod classify;
pub mod grounded;
pub mod series;

pub use alphabet::{primary_ge, primary_gt, Alphabet, Letter, PrimaryInt};
pub use colour::{colour_monomial, Colour, ColourMonomial, ColouredInt, SecondaryInt};
pub use crystal::{Crystal, Vertex};
pub use error::{Error, Result};
pub use series::{inverse_euler, pochhammer, pochhammer_inverse, TruncatedSeries};
