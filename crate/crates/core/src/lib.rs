//! Exact construction and verification of alternating-run, peak, left-peak,
//! signed-run and derivative polynomials, together with the central
//! factorial number triangles that give them explicit forms.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: big integers and rationals, dense polynomials, truncated
//!   power series with polynomial coefficients, and the cot/csc ring.
//! - [`triangles`]: `U(n,k)`, `V(n,k)`, Stirling numbers, binomials and
//!   the set-partition counts behind `U` and `V`.
//! - [`perms`]: exhaustive statistics over `S_n` and `B_n`.
//! - [`families`]: `R_n`, `P_n`, `P̂_n`, `R̂_n`, `Q_n`, `Q̂_n`, Euler and
//!   Springer numbers.
//! - [`closed_form`]: the central-factorial closed forms of those families.
//! - [`identities`] and [`gf`]: exact checks of every identity and
//!   generating function, with [`report::VerificationReport`] verdicts.
//! - [`cli`]: the batch front end used by the `altrun` binary.
//!
//! ```
//! use altrun::families::{family_poly, FamilyId};
//! use altrun::identities::{verify_identity, IdentityId};
//!
//! let r5 = family_poly(FamilyId::R, 5).unwrap();
//! assert_eq!(r5.to_string(), "2x + 28x^2 + 58x^3 + 32x^4");
//! assert!(verify_identity(IdentityId::Thm1Odd, 3).unwrap().passed());
//! ```

pub mod algebra;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod families;
pub mod gf;
pub mod identities;
mod memo;
pub mod perms;
pub mod report;
pub mod triangles;

pub use error::{Error, Result};
