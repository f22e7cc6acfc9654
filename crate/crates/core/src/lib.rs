//! Sandwiched and generalized Reed–Muller codes over GF(q).
//!
//! The crate builds the codes C_q(r,I,n) and R_q(r,n) as (extended) cyclic
//! codes from their defining sets, and checks their structure: dimensions,
//! duals, affine invariance, minimum distances and minimum vectors.
//!
//! ```
//! use sandwich_rm::codes::CodeSpec;
//!
//! let code = CodeSpec::sandwich(3, 4, 5, &[1]).build().unwrap();
//! assert_eq!((code.length(), code.dimension()), (81, 62));
//! ```

pub mod analysis;
pub mod codes;
pub mod error;
pub mod exponents;
pub mod field;
pub mod linalg;
pub mod tables;
pub mod verify;

pub use codes::{Code, CodeSpec, Codeword, Family, Kind};
pub use error::{Error, Result};
pub use exponents::{ExponentSet, ExponentSpace, ParitySelector};
pub use field::{Elt, FieldCtx};
