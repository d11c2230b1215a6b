//! Soft sets over a fixed finite universe, and the category they form.
//!
//! A soft set assigns each parameter in a finite parameter list a subset of
//! a fixed universe; a soft morphism between two of them is a parameter map
//! under which every image is contained in the image of its target
//! parameter. With composition of parameter maps and identity maps these
//! form a category, and this crate makes its structure decidable at desk
//! scale:
//!
//! - [`Universe`], [`Subset`], [`SoftSet`], [`SoftMorphism`]: validated
//!   domain types with identity and composition.
//! - [`enumerate_hom`], [`hom_count`], [`generate_object_family`]:
//!   exhaustive enumeration of morphisms and of all soft sets up to a
//!   parameter bound — the quantification domains for brute-force checks.
//! - Object classification ([`classify_object`]): initial, terminal, zero,
//!   separator, co-separator, each decided by a direct characterization and
//!   double-checked by a definitional oracle over a family.
//! - Morphism classification ([`classify_morphism`]): epi, mono, bimorphism,
//!   iso, plus two-sided inverses, constructed cancellation counterexamples,
//!   and separator/co-separator witnesses.
//! - [`Workspace`]: a line-oriented text format for universes, soft sets and
//!   morphisms with canonical printing; the CLI in the companion crate is a
//!   thin shell over it.
//!
//! Everything is immutable after construction and freely shareable across
//! threads.

mod error;
mod hom;
mod morphism;
mod morphisms;
mod objects;
mod soft_set;
mod universe;
mod workspace;

pub use error::{Error, IsoObstruction, Result};
pub use hom::{enumerate_hom, generate_object_family, hom_count, ObjectFamily};
pub use morphism::SoftMorphism;
pub use morphisms::{
    classify_morphism, coseparator_witness, epi_counterexample, mono_counterexample, oracle_is_epi,
    oracle_is_mono, separator_witness, CancellationCounterexample, MorphismClassification,
    AUXILIARY_NAME,
};
pub use objects::{
    classify_object, oracle_is_coseparator, oracle_is_initial, oracle_is_separator,
    oracle_is_terminal, ObjectClassification,
};
pub use soft_set::SoftSet;
pub use universe::{Subset, Universe};
pub use workspace::{ParseError, Workspace, WorkspaceError};
