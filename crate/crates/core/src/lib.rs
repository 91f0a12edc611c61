//! Power decoding of Generalised Reed–Solomon codes with multiplicities.
//!
//! The decoder linearises a family of powered key equations, solves them by
//! bringing a polynomial matrix to shifted weak Popov form, and reads the
//! message off the minimal row. Alongside the plain ("Gao") formulation
//! there are re-encoding and syndrome variants, a seeded failure-rate
//! simulator and a small CLI.
//!
//! ```
//! use powerdec::{decode, DecoderParams, FieldCtx, GrsCode, Poly};
//!
//! let f = FieldCtx::prime(23).unwrap();
//! let code = GrsCode::with_first_points(&f, 23, 7).unwrap();
//! let msg = Poly::from_values(&f, &[1, 2, 3]).unwrap();
//! let mut r = code.encode(&msg).unwrap();
//! for i in [0, 4, 9, 13, 17, 20, 21, 22, 11] {
//!     r[i] = f.add(r[i], f.elem(5).unwrap());
//! }
//! let out = decode(&code, &DecoderParams::new(2, 3), &r).unwrap();
//! assert_eq!(out.message(), Some(&msg));
//! ```

pub mod cli;
pub mod config;
pub mod decoder;
pub mod field;
pub mod grs;
pub mod matrix;
pub mod poly;
pub mod sim;
pub mod variants;

pub use decoder::{
    decode, failure_bound_23, tau_gs, tau_pow, DecodeOutcome, DecodeResult, DecoderParams,
    FailureReason,
};
pub use field::{Field, FieldCtx, FieldElement};
pub use grs::GrsCode;
pub use matrix::ShiftedPolyMatrix;
pub use poly::Poly;
pub use variants::Variant;

/// Exact decoding radius for machine-sized parameters.
pub type Radius = num_rational::Ratio<i64>;

/// Exact decoding radius for arbitrarily large parameters.
pub type BigRadius = num_rational::Ratio<num_bigint::BigInt>;
