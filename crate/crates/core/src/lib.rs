//! Quasisymmetric functions, the peak algebra, and flag enumeration of
//! Eulerian posets, in exact rational arithmetic.
//!
//! Flag f-vectors of graded posets become quasisymmetric functions
//! ([`GradedPoset::qsym`]); the Eulerian ones land in the peak algebra, where
//! the cd-index, the map `ϑ(F_S) = Θ_{Λ(S)}` and the toric `g`-polynomial can
//! all be computed on the `Θ_w` basis.
//!
//! ```
//! use peakqsym::{peak, GradedPoset};
//!
//! let b4 = GradedPoset::boolean(4).unwrap();
//! let psi = peak::cd_index(&b4.qsym()).unwrap();
//! assert_eq!(psi.to_string(), "ccc + 2·cd + 2·dc");
//! ```

pub mod combinat;
pub mod error;
pub mod format;
pub mod linalg;
pub mod oracle;
pub mod peak;
pub mod poset;
pub mod qsym;
pub mod selftest;
pub mod stembridge;
pub mod toricg;

pub use combinat::{CdWord, Composition, IntervalFamily, Letter, Subset};
pub use error::{Error, ErrorKind, Result};
pub use peak::CdPolynomial;
pub use poset::{Family, GradedPoset};
pub use qsym::{Basis, FlagVector, Monomial, QSym};
pub use toricg::PolynomialX;

/// Exact rationals; every coefficient in the crate is one of these.
pub type Rational = num::BigRational;
