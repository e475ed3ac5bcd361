//! Benzels and their stones-and-bones tilings.
//!
//! The library is organized around two grids:
//!
//! * the hexagonal grid, in exact Eisenstein-integer coordinates
//!   ([`hexgrid`]), where benzels and the five trihex prototiles live;
//! * the square grid of diamond-oriented boxes ([`transfer`]), reached by
//!   deleting the vertical strips of the hexagonal grid, where Young
//!   diagrams and ribbon tilings live ([`young`], [`ribbons`]).
//!
//! [`tiler`] enumerates and counts tilings of arbitrary regions in either
//! grid by exact-cover backtracking, and [`verify`] packages the counting
//! theorems and the product-formula conjecture as executable checks.

pub mod error;
pub mod hexgrid;
pub mod render;
pub mod ribbons;
pub mod tiler;
pub mod transfer;
pub mod verify;
pub mod young;

pub use error::Error;

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
