//! An exact engine for finite 2-dimensional category theory: bicategories,
//! (braided) monoidal categories, lax diagrams of bicategories and their
//! Grothendieck constructions, rectification, nerves, cocycle categories, and
//! integer simplicial homology.
//!
//! Everything is dimension-wise finite and fully enumerated; all equalities
//! are table lookups and every stated law has an exhaustive checker. There is
//! no randomness anywhere: identical inputs produce identical reports.

pub mod braided;
pub mod bicat;
pub mod cat;
pub mod cli;
pub mod coherence;
pub mod groth;
pub mod group;
pub mod json;
pub mod laxdiag;
pub mod monoidal;
pub mod nerves;
pub mod rectify;
pub mod report;
pub mod snf;
pub mod sset;

pub use report::{Error, Report, Result, Witness, SCHEMA_VERSION};
