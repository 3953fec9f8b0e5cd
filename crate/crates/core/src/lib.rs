//! Exact generalized inverses in dagger categories.
//!
//! Drazin, group, dagger-Drazin, dagger-group and Moore-Penrose inverses of
//! matrices over ℚ, ℚ(i) and complex doubles, partial injections, and
//! opposing pairs, each paired with an axiom checker that certifies it.
//!
//! Composition is diagrammatic throughout: `fg` means "first `f`, then `g`",
//! and a map `n → m` is an `n × m` matrix, so `fg` is the matrix product
//! `F·G`.
//!
//! ```
//! use gidkit::{dagger_drazin, DaggerMode, Matrix, Rational};
//!
//! let f = Matrix::<Rational>::from_i64(&[&[1, 1], &[0, 0]]);
//! let r = dagger_drazin(&f, DaggerMode::Transpose).unwrap();
//! assert_eq!(r.index, 1);
//! assert_eq!(r.inverse.to_string(), "2x2 [1/2, 0; 1/2, 0]");
//! ```

pub mod category;
pub mod dagger_inverse;
pub mod drazin;
pub mod error;
pub mod json;
pub mod matrix;
pub mod opposing;
pub mod pinj;
pub mod scalar;
pub mod verifier;

pub use category::{Category, DaggerCategory, DrazinCategory, MatrixCategory};
pub use dagger_inverse::{
    dagger_drazin, dagger_drazin_in, dagger_group_inverse, moore_penrose, self_adjoint_bridge,
    DaggerDrazin, DaggerDrazinResult, MoorePenroseResult, SelfAdjointBridge,
};
pub use drazin::{drazin_index, drazin_inverse, group_inverse, DrazinResult};
pub use error::{Error, Result};
pub use json::{DynMatrix, JsonScalar};
pub use matrix::{ascent, descent, DaggerMode, Matrix, FLOAT_EQ_TOL, FLOAT_RANK_RTOL};
pub use opposing::{
    cofree_equivalence, opposing_drazin, pair_compose, pair_dagger, verify_opposing,
    CofreeCategory, OpposingDrazinResult, OpposingPair,
};
pub use pinj::{dagger_drazin_pinj, drazin_endo_pinj, PartialInjection, PinjCategory};
pub use scalar::{Field, FieldKind, GaussianRational, Involution, Rational, Scalar, C64};
pub use verifier::{
    verify_dagger_drazin, verify_dagger_group, verify_dagger_side, verify_drazin, verify_group,
    verify_mp, AxiomOutcome, Family, VerificationReport,
};
