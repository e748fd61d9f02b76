//! Quasi-quadratic modules over the pseudo-valuation domain
//! `A = R + X·C[[X]]`, and over a characteristic-two analogue built from
//! dyadic-exponent series over `F4`.
//!
//! Modules are represented by finite normal forms: a minimum level `m`
//! together with the cones of pseudo-angular components at levels `m` and
//! `m + 1`. Everything is exact; there is no floating point anywhere.

pub mod char2_hahn;
pub mod char2_modules;
pub mod error;
pub mod gauss_series;
pub mod oracle;
pub mod plane_cones;
pub mod qq_modules;

pub use char2_hahn::{Descriptor, Dyadic, DyadicSeries, F4};
pub use char2_modules::{Char2Module, Classifier, F4Submodule, FinalSegment};
pub use error::{Condition, Error, Result};
pub use gauss_series::{GaussRat, Series, Valuation};
pub use plane_cones::{Cone, Direction};
pub use qq_modules::{LevelFamily, PsiClass, QQModule};
