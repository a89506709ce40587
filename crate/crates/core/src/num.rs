//! Small numerical toolbox shared by the solvers.
//!
//! Everything here is deliberately plain: composite/adaptive Simpson rules,
//! safeguarded bisection, banded LU for grid operators, tiny least-squares
//! fits, additive low-discrepancy sequences, and interpolation helpers. The
//! grid solvers are the performance-critical parts of the crate and they only
//! need these primitives.

pub mod band;
pub mod interp;
pub mod linfit;
pub mod quad;
pub mod roots;
pub mod seq;
