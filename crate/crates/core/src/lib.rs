//! Exact computation of Jack derangement sums.
//!
//! The sum of the Jack characters of a shape over the fixed-point-free
//! conjugacy classes is a polynomial in the Jack parameter. At parameter 1
//! and 2 these numbers are the eigenvalues of the permutation and
//! perfect-matching derangement graphs. The crate evaluates them through
//! several independent formulas and checks the formulas against each other,
//! against brute-force enumeration and against explicit graph spectra.

pub mod colored;
mod error;
pub mod exactalg;
pub mod graphcheck;
pub mod hooks;
pub mod jack_oracle;
pub mod partitions;
pub mod spectra;
pub mod transversals;

pub use colored::DerangementProfile;
pub use error::{Error, Result};
pub use exactalg::{AlphaPoly, Rational, XPoly};
pub use graphcheck::{DenseGraph, SpectrumReport};
pub use jack_oracle::{Basis, CharacterTable, SymFuncExpansion};
pub use partitions::{Cell, FrobeniusCoords, Partition};
pub use spectra::{AlphaSpec, EtaValue, Method, SpectrumRow, SpectrumTable};
