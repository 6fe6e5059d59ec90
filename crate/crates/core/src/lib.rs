//! Exact arithmetic for the generalized Kostka polynomials K_{λ;R}(q)
//! attached to a partition λ and a sequence R of rectangular partitions.
//!
//! The same polynomial is computed by four independent routes:
//!
//! - [`kostka::k_poly_symmetrizer`] — coefficient extraction from the
//!   antisymmetrized generating function;
//! - [`kostka::k_poly_recurrence`] — the Morris-style recurrence over
//!   minimal coset representatives;
//! - [`riggedconf`] — the cocharge generating function over rigged
//!   configurations (equivalently the fermionic q-binomial product), which
//!   matches the mirror image of K;
//! - [`catabolism`] / [`lrtab`] — charge generating functions over
//!   catabolizable tableaux and over Littlewood-Richardson tableaux.
//!
//! Every bijection relating these sets (rectangle switching, evacuation,
//! duality, the LR and RC transposes, the monotonicity embeddings and ζ) is
//! implemented, and [`verify`] sweeps exhaustive desk-scale instance
//! families checking the identities the routes are expected to satisfy,
//! reporting any counterexample as a serialized witness.
//!
//! Enumeration-heavy kernels are data-parallel via rayon behind the
//! `parallel` feature (on by default); disabling the feature gives a fully
//! sequential build with identical output.

pub mod catabolism;
pub mod error;
pub mod kostka;
pub mod lrtab;
pub mod par;
pub mod partition;
pub mod qpoly;
pub mod rect;
pub mod riggedconf;
pub mod tableau;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use par::ExecMode;
pub use partition::{dominates, Partition, Weight};
pub use qpoly::{mirror, q_binomial, QPolynomial};
pub use rect::{Rect, RectangleSequence};
pub use tableau::{Shape, Tableau};
pub use word::Word;
