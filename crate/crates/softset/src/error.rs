//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building or combining soft sets and
/// soft morphisms.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A universe was declared with the same element twice.
    #[error("duplicate universe element `{0}`")]
    DuplicateElement(String),
    /// Universes are backed by 64-bit masks; larger ones are not supported.
    #[error("universe has {0} elements, the maximum supported is 64")]
    UniverseTooLarge(usize),
    /// A soft set was declared with the same parameter twice.
    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),
    /// An image subset mentions an element outside the universe.
    #[error("element `{0}` is not in the universe")]
    ElementNotInUniverse(String),
    /// Two values that must live over the same universe do not.
    #[error("universe mismatch")]
    UniverseMismatch,
    /// A parameter map is missing an entry for a source parameter.
    #[error("map is not total: no image for source parameter `{0}`")]
    MapNotTotal(String),
    /// A parameter map has an entry whose left side is not a source parameter.
    #[error("map entry `{0}` is not a parameter of the source")]
    MapDomainInvalid(String),
    /// A parameter map sends a parameter to something outside the target.
    #[error("map sends `{param}` to `{value}`, which is not a parameter of the target")]
    MapRangeInvalid { param: String, value: String },
    /// A parameter map lists the same source parameter twice.
    #[error("duplicate map entry for parameter `{0}`")]
    DuplicateMapEntry(String),
    /// The defining inclusion of a soft morphism fails at this parameter.
    #[error("soft condition violated at parameter `{0}`: image is not contained in the target's")]
    SoftConditionViolated(String),
    /// Composition was attempted on morphisms that do not meet end to end.
    #[error(
        "composition mismatch: target of the first morphism differs from source of the second"
    )]
    CompositionMismatch,
    /// Inversion was attempted on a morphism that is not an isomorphism.
    #[error("not an isomorphism: {0}")]
    NotAnIsomorphism(IsoObstruction),
    /// An epi counterexample was requested for a surjective parameter map.
    #[error("morphism is already an epimorphism: its parameter map is surjective")]
    AlreadyEpi,
    /// A mono counterexample was requested for an injective parameter map.
    #[error("morphism is already a monomorphism: its parameter map is injective")]
    AlreadyMono,
    /// A separator witness was requested from an object that is not one.
    #[error("object is not a separator")]
    NotASeparator,
    /// A co-separator witness was requested from an object that is not one.
    #[error("object is not a co-separator")]
    NotACoseparator,
    /// A witness was requested for a pair of equal morphisms.
    #[error("the two morphisms are equal; there is nothing to distinguish")]
    MorphismsEqual,
    /// A witness was requested for morphisms that are not parallel.
    #[error("morphisms do not form a parallel pair: sources or targets differ")]
    IncompatiblePair,
}

/// Why a morphism fails to be an isomorphism.
///
/// Checked in a fixed order: injectivity, then surjectivity, then image
/// equality at each source parameter in declared order.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IsoObstruction {
    #[error("parameter map is not injective: `{first}` and `{second}` share an image")]
    NotInjective { first: String, second: String },
    #[error("parameter map is not surjective: `{missed}` is not hit")]
    NotSurjective { missed: String },
    #[error("images differ at parameter `{param}`: inclusion is strict")]
    ImageMismatch { param: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
