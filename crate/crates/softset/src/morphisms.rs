//! Classification of soft morphisms, with constructed counterexamples.
//!
//! Epi and mono are properties of the parameter map alone: a soft morphism
//! is an epimorphism exactly when its map is surjective and a monomorphism
//! exactly when it is injective. Isomorphisms additionally need image
//! equality (not mere inclusion) at every parameter, which is why bijective
//! soft morphisms — the bimorphisms — need not be isomorphisms.
//!
//! When a morphism fails to be epi or mono, the failure is constructive:
//! [`epi_counterexample`] and [`mono_counterexample`] build a pair of
//! distinct morphisms that compose equally through it, over a small
//! auxiliary soft set. Dually, [`separator_witness`] and
//! [`coseparator_witness`] build the morphism a (co-)separator promises for
//! any distinct parallel pair. Cancellability itself is checkable by brute
//! force over a family via [`oracle_is_epi`] and [`oracle_is_mono`].

use crate::error::{Error, IsoObstruction, Result};
use crate::hom::{enumerate_hom, ObjectFamily};
use crate::morphism::SoftMorphism;
use crate::soft_set::SoftSet;

impl SoftMorphism {
    /// Epimorphism test: the parameter map is surjective.
    pub fn is_epi(&self) -> bool {
        let mut hit = vec![false; self.target().param_count()];
        for &j in self.map_indices() {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Monomorphism test: the parameter map is injective.
    pub fn is_mono(&self) -> bool {
        let mut seen = vec![false; self.target().param_count()];
        for &j in self.map_indices() {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        true
    }

    /// Bimorphism test: epi and mono at once, i.e. a bijective map.
    pub fn is_bimorphism(&self) -> bool {
        self.is_epi() && self.is_mono()
    }

    /// Isomorphism test: bijective map with equal (not merely included)
    /// images at every parameter.
    pub fn is_iso(&self) -> bool {
        self.iso_obstruction().is_none()
    }

    /// Why this morphism is not an isomorphism, or `None` if it is one.
    /// Injectivity is checked before surjectivity, then image equality in
    /// the source's declaration order.
    pub fn iso_obstruction(&self) -> Option<IsoObstruction> {
        let map = self.map_indices();
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if map[i] == map[j] {
                    return Some(IsoObstruction::NotInjective {
                        first: self.source().params()[i].clone(),
                        second: self.source().params()[j].clone(),
                    });
                }
            }
        }
        let mut hit = vec![false; self.target().param_count()];
        for &j in map {
            hit[j] = true;
        }
        if let Some(missed) = hit.iter().position(|&h| !h) {
            return Some(IsoObstruction::NotSurjective {
                missed: self.target().params()[missed].clone(),
            });
        }
        for (i, &j) in map.iter().enumerate() {
            if self.source().image_at(i) != self.target().image_at(j) {
                return Some(IsoObstruction::ImageMismatch {
                    param: self.source().params()[i].clone(),
                });
            }
        }
        None
    }

    /// The two-sided inverse of an isomorphism.
    ///
    /// Composing either way round gives the identity; the inverse is itself
    /// a valid soft morphism because the images are equal.
    pub fn invert(&self) -> Result<SoftMorphism> {
        if let Some(reason) = self.iso_obstruction() {
            return Err(Error::NotAnIsomorphism(reason));
        }
        let mut inverse = vec![0usize; self.target().param_count()];
        for (i, &j) in self.map_indices().iter().enumerate() {
            inverse[j] = i;
        }
        SoftMorphism::from_indices(self.target().clone(), inverse, self.source().clone())
    }
}

/// The outcome of classifying one soft morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismClassification {
    pub subject: SoftMorphism,
    pub is_epi: bool,
    pub is_mono: bool,
    pub is_bimorphism: bool,
    pub is_iso: bool,
}

/// Runs every morphism-level decision procedure on one soft morphism.
pub fn classify_morphism(subject: &SoftMorphism) -> MorphismClassification {
    MorphismClassification {
        subject: subject.clone(),
        is_epi: subject.is_epi(),
        is_mono: subject.is_mono(),
        is_bimorphism: subject.is_bimorphism(),
        is_iso: subject.is_iso(),
    }
}

/// A distinct pair of morphisms that a non-epi or non-mono morphism cannot
/// cancel, together with the auxiliary soft set they pass through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationCounterexample {
    pub left: SoftMorphism,
    pub right: SoftMorphism,
    pub auxiliary: SoftSet,
}

/// Name given to constructed auxiliary soft sets. They are fresh values,
/// never registered anywhere, so clashes with user names are harmless.
pub const AUXILIARY_NAME: &str = "aux";

/// For a morphism whose map misses part of the target: two distinct
/// morphisms out of the target that agree after pre-composing it.
///
/// The auxiliary object is the absolute soft set over parameters `0` and
/// `1`; `left` sends everything to `0` while `right` sends exactly the
/// map's image to `0` and the missed parameters to `1`.
pub fn epi_counterexample(m: &SoftMorphism) -> Result<CancellationCounterexample> {
    if m.is_epi() {
        return Err(Error::AlreadyEpi);
    }
    let auxiliary = SoftSet::absolute(m.source().universe(), AUXILIARY_NAME, ["0", "1"])
        .expect("two fresh parameters");
    let mut in_image = vec![false; m.target().param_count()];
    for &j in m.map_indices() {
        in_image[j] = true;
    }
    let constant = vec![0usize; m.target().param_count()];
    let splitter = in_image.iter().map(|&hit| usize::from(!hit)).collect();
    // Everything maps into an absolute target, so both validate.
    let left = SoftMorphism::from_indices(m.target().clone(), constant, auxiliary.clone())?;
    let right = SoftMorphism::from_indices(m.target().clone(), splitter, auxiliary.clone())?;
    debug_assert_ne!(left, right);
    debug_assert_eq!(left.compose(m), right.compose(m));
    Ok(CancellationCounterexample {
        left,
        right,
        auxiliary,
    })
}

/// For a morphism whose map identifies two parameters: two distinct
/// morphisms into the source that agree after post-composing it.
///
/// The auxiliary object is the null soft set over the single parameter `c`,
/// sent by `left` and `right` to the first two parameters (in declaration
/// order) that share an image under the map.
pub fn mono_counterexample(m: &SoftMorphism) -> Result<CancellationCounterexample> {
    let map = m.map_indices();
    let mut collision = None;
    'outer: for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] {
                collision = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((first, second)) = collision else {
        return Err(Error::AlreadyMono);
    };
    let auxiliary =
        SoftSet::null(m.source().universe(), AUXILIARY_NAME, ["c"]).expect("one fresh parameter");
    // A null source maps anywhere, so both validate.
    let left = SoftMorphism::from_indices(auxiliary.clone(), vec![first], m.source().clone())?;
    let right = SoftMorphism::from_indices(auxiliary.clone(), vec![second], m.source().clone())?;
    debug_assert_ne!(left, right);
    debug_assert_eq!(m.compose(&left), m.compose(&right));
    Ok(CancellationCounterexample {
        left,
        right,
        auxiliary,
    })
}

fn require_distinct_parallel(alpha: &SoftMorphism, beta: &SoftMorphism) -> Result<usize> {
    if alpha.source() != beta.source() || alpha.target() != beta.target() {
        return Err(Error::IncompatiblePair);
    }
    alpha
        .map_indices()
        .iter()
        .zip(beta.map_indices())
        .position(|(a, b)| a != b)
        .ok_or(Error::MorphismsEqual)
}

/// The morphism out of a separator that tells a distinct parallel pair
/// apart: the constant map onto the first source parameter where the pair
/// disagrees. Pre-composing it preserves the disagreement.
pub fn separator_witness(
    separator: &SoftSet,
    alpha: &SoftMorphism,
    beta: &SoftMorphism,
) -> Result<SoftMorphism> {
    if !separator.is_separator() {
        return Err(Error::NotASeparator);
    }
    if separator.universe() != alpha.source().universe() {
        return Err(Error::UniverseMismatch);
    }
    let differs_at = require_distinct_parallel(alpha, beta)?;
    let map = vec![differs_at; separator.param_count()];
    let witness = SoftMorphism::from_indices(separator.clone(), map, alpha.source().clone())?;
    debug_assert_ne!(alpha.compose(&witness), beta.compose(&witness));
    Ok(witness)
}

/// The morphism into a co-separator that tells a distinct parallel pair
/// apart: it sends the value `alpha` takes at the first disagreeing
/// parameter to the witness parameter `c1` and everything else to `c2`.
/// Post-composing it preserves the disagreement.
pub fn coseparator_witness(
    coseparator: &SoftSet,
    alpha: &SoftMorphism,
    beta: &SoftMorphism,
) -> Result<SoftMorphism> {
    let Some((c1, c2)) = coseparator.coseparator_witness_params() else {
        return Err(Error::NotACoseparator);
    };
    if coseparator.universe() != alpha.source().universe() {
        return Err(Error::UniverseMismatch);
    }
    let (c1, c2) = (
        coseparator
            .param_index(c1)
            .expect("witness parameter exists"),
        coseparator
            .param_index(c2)
            .expect("witness parameter exists"),
    );
    let differs_at = require_distinct_parallel(alpha, beta)?;
    let hit = alpha.map_indices()[differs_at];
    let map = (0..alpha.target().param_count())
        .map(|j| if j == hit { c1 } else { c2 })
        .collect();
    // Both witness images are the whole universe, so anything maps in.
    let witness = SoftMorphism::from_indices(alpha.target().clone(), map, coseparator.clone())?;
    debug_assert_ne!(witness.compose(alpha), witness.compose(beta));
    Ok(witness)
}

/// Definitional epimorphism check: right cancellability against every pair
/// of morphisms from the subject's target into a family member.
pub fn oracle_is_epi(m: &SoftMorphism, family: &ObjectFamily) -> Result<bool> {
    if m.source().universe() != family.universe() {
        return Err(Error::UniverseMismatch);
    }
    for h in family {
        let outgoing = enumerate_hom(m.target(), h)?;
        for (i, beta) in outgoing.iter().enumerate() {
            for gamma in &outgoing[i + 1..] {
                // beta != gamma by enumeration; equal composites break epi.
                if beta.compose(m)? == gamma.compose(m)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Definitional monomorphism check: left cancellability against every pair
/// of morphisms from a family member into the subject's source.
pub fn oracle_is_mono(m: &SoftMorphism, family: &ObjectFamily) -> Result<bool> {
    if m.source().universe() != family.universe() {
        return Err(Error::UniverseMismatch);
    }
    for h in family {
        let incoming = enumerate_hom(h, m.source())?;
        for (i, beta) in incoming.iter().enumerate() {
            for gamma in &incoming[i + 1..] {
                if m.compose(beta)? == m.compose(gamma)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
