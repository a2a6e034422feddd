//! Exact structure-constant presentations of finite-dimensional Hopf
//! algebras, their axiom checks, duals, changes of basis, and the
//! ı-algebras built from symmetric self-dualities.
//!
//! Basis indices are 0-based throughout the API and 1-based in files and
//! reports.

pub mod axioms;
pub mod base_change;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod format;
pub mod ihopf;
pub mod linalg;
pub mod presentation;
pub mod scalar;
pub mod table;

pub use axioms::{verify_all, AxiomReport, Violation};
pub use base_change::{GramFactorization, Normalized, TransitionData};
pub use duality::DualityWitness;
pub use error::{Error, Result};
pub use format::PresentationFile;
pub use ihopf::{Construction, IAlgebra};
pub use linalg::Matrix;
pub use presentation::{BialgebraPresentation, Element, StructureTensor};
pub use scalar::{Field, FieldSpec, Scalar};
