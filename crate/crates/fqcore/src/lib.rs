//! Finite-dimensional representatives of FQ operations on pairs `(A1, A2)`.
//!
//! The crate evaluates the operations on dense complex matrices, extracts
//! their expansion coefficients around Clifford systems in the mixed base,
//! and checks hyperscaling identities on the extracted coefficients.

pub mod clifford;
pub mod error;
pub mod exec;
pub mod fqops;
pub mod hyperscaling;
pub mod mat;
pub mod matfun;
pub mod mixedbase;
pub mod statements;
pub mod tol;

pub use clifford::{BaseKind, CliffordBase, Pair};
pub use error::{FqError, Result};
pub use exec::Exec;
pub use fqops::{FqOp, Kind, Value};
pub use mat::{Mat, C64};
pub use mixedbase::{Component, ExpansionRow, SectorAssignment};
pub use tol::Tolerances;
