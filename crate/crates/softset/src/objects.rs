//! Classification of soft sets as special objects of the category.
//!
//! Each property has two routes: a characterization that inspects the soft
//! set directly, and a definitional oracle that checks the categorical
//! definition by brute force over an [`ObjectFamily`]. The characterizations
//! are:
//!
//! - initial: the parameter set is empty;
//! - terminal: absolute with exactly one parameter;
//! - zero: initial and terminal at once — impossible, since the two
//!   characterizations demand different parameter counts;
//! - separator: null with a nonempty parameter set;
//! - co-separator: two distinct parameters whose images are the whole
//!   universe.
//!
//! The oracles quantify over a finite family rather than the class of all
//! soft sets; a family containing the null, absolute, and two-parameter
//! members (any family with `max_params >= 2`) is enough for the two routes
//! to agree, because every failure of a characterization is witnessed by an
//! object of that shape.

use crate::error::{Error, Result};
use crate::hom::{enumerate_hom, hom_count, ObjectFamily};
use crate::soft_set::SoftSet;

impl SoftSet {
    /// Initial object test: exactly one morphism out, to every object.
    /// Holds precisely for the empty parameter set.
    pub fn is_initial(&self) -> bool {
        self.param_count() == 0
    }

    /// Terminal object test: exactly one morphism in, from every object.
    /// Holds precisely for absolute soft sets with one parameter.
    pub fn is_terminal(&self) -> bool {
        self.param_count() == 1 && self.is_absolute()
    }

    /// Zero object test: initial and terminal at once. Never true, since
    /// initial forces zero parameters and terminal forces one.
    pub fn is_zero(&self) -> bool {
        self.is_initial() && self.is_terminal()
    }

    /// Separator test: distinct parallel morphisms can always be told apart
    /// by pre-composing some morphism out of this object. Holds precisely
    /// for null soft sets with a nonempty parameter set.
    pub fn is_separator(&self) -> bool {
        self.param_count() > 0 && self.is_null()
    }

    /// Co-separator test: distinct parallel morphisms can always be told
    /// apart by post-composing some morphism into this object. Holds
    /// precisely when two distinct parameters both have the whole universe
    /// as image; see [`SoftSet::coseparator_witness_params`] for the pair.
    pub fn is_coseparator(&self) -> bool {
        self.coseparator_witness_params().is_some()
    }

    /// The first two parameters (in declaration order) whose images are the
    /// whole universe, when they exist.
    pub fn coseparator_witness_params(&self) -> Option<(&str, &str)> {
        let mut full = self
            .assignments()
            .filter(|(_, image)| image.is_full())
            .map(|(param, _)| param);
        match (full.next(), full.next()) {
            (Some(c1), Some(c2)) => Some((c1, c2)),
            _ => None,
        }
    }
}

/// The outcome of classifying one soft set, with the co-separator witness
/// pair when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectClassification {
    pub subject: SoftSet,
    pub is_initial: bool,
    pub is_terminal: bool,
    pub is_zero: bool,
    pub is_separator: bool,
    pub is_coseparator: bool,
    pub coseparator_witness_params: Option<(String, String)>,
}

/// Runs every object-level decision procedure on one soft set.
pub fn classify_object(subject: &SoftSet) -> ObjectClassification {
    ObjectClassification {
        subject: subject.clone(),
        is_initial: subject.is_initial(),
        is_terminal: subject.is_terminal(),
        is_zero: subject.is_zero(),
        is_separator: subject.is_separator(),
        is_coseparator: subject.is_coseparator(),
        coseparator_witness_params: subject
            .coseparator_witness_params()
            .map(|(c1, c2)| (c1.to_string(), c2.to_string())),
    }
}

fn require_same_universe(subject: &SoftSet, family: &ObjectFamily) -> Result<()> {
    if subject.universe() != family.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

/// Definitional initial-object check: `|hom(subject, G)| = 1` for every `G`
/// in the family.
pub fn oracle_is_initial(subject: &SoftSet, family: &ObjectFamily) -> Result<bool> {
    require_same_universe(subject, family)?;
    for target in family {
        if hom_count(subject, target)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definitional terminal-object check: `|hom(G, subject)| = 1` for every `G`
/// in the family.
pub fn oracle_is_terminal(subject: &SoftSet, family: &ObjectFamily) -> Result<bool> {
    require_same_universe(subject, family)?;
    for source in family {
        if hom_count(source, subject)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definitional separator check: for every distinct parallel pair
/// `α, β: F -> G` drawn from the family's hom-sets, some `h: subject -> F`
/// satisfies `α∘h ≠ β∘h`.
pub fn oracle_is_separator(subject: &SoftSet, family: &ObjectFamily) -> Result<bool> {
    require_same_universe(subject, family)?;
    for f in family {
        let probes = enumerate_hom(subject, f)?;
        for g in family {
            let parallel = enumerate_hom(f, g)?;
            for (i, alpha) in parallel.iter().enumerate() {
                for beta in &parallel[i + 1..] {
                    let distinguished = probes.iter().any(|h| {
                        let left = alpha.compose(h).expect("h lands in alpha's source");
                        let right = beta.compose(h).expect("h lands in beta's source");
                        left != right
                    });
                    if !distinguished {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Definitional co-separator check: for every distinct parallel pair
/// `α, β: F -> G` drawn from the family's hom-sets, some `k: G -> subject`
/// satisfies `k∘α ≠ k∘β`.
pub fn oracle_is_coseparator(subject: &SoftSet, family: &ObjectFamily) -> Result<bool> {
    require_same_universe(subject, family)?;
    for g in family {
        let probes = enumerate_hom(g, subject)?;
        for f in family {
            let parallel = enumerate_hom(f, g)?;
            for (i, alpha) in parallel.iter().enumerate() {
                for beta in &parallel[i + 1..] {
                    let distinguished = probes.iter().any(|k| {
                        let left = k.compose(alpha).expect("k departs from alpha's target");
                        let right = k.compose(beta).expect("k departs from beta's target");
                        left != right
                    });
                    if !distinguished {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
