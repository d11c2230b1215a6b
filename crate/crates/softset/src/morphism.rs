//! Soft morphisms: parameter maps whose images respect inclusion.
//!
//! A soft morphism from `F` to `G` is a total function on parameters such
//! that the image of every source parameter is contained in the image of the
//! parameter it is sent to. Morphisms are identified with the whole triple
//! (source, map, target): the same parameter map between different soft sets
//! gives different morphisms, so hom-sets are pairwise disjoint.

use std::fmt;

use crate::error::{Error, Result};
use crate::soft_set::SoftSet;

/// A validated soft morphism.
///
/// The map is stored positionally: entry `i` is the index (in the target's
/// declaration order) that source parameter `i` is sent to. Every value of
/// this type satisfies the defining inclusion; [`SoftMorphism::check`]
/// re-verifies it on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftMorphism {
    source: SoftSet,
    map: Vec<usize>,
    target: SoftSet,
}

impl SoftMorphism {
    /// Builds a morphism from `(source parameter, target parameter)` pairs.
    ///
    /// The pairs must cover every source parameter exactly once, and each
    /// named target parameter must exist. Validation reports the first
    /// offending parameter in the source's declaration order.
    pub fn new<S1, S2>(
        source: &SoftSet,
        pairs: impl IntoIterator<Item = (S1, S2)>,
        target: &SoftSet,
    ) -> Result<Self>
    where
        S1: AsRef<str>,
        S2: AsRef<str>,
    {
        if source.universe() != target.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut map: Vec<Option<usize>> = vec![None; source.param_count()];
        for (from, to) in pairs {
            let from = from.as_ref();
            let to = to.as_ref();
            let i = source
                .param_index(from)
                .ok_or_else(|| Error::MapDomainInvalid(from.to_string()))?;
            let j = target
                .param_index(to)
                .ok_or_else(|| Error::MapRangeInvalid {
                    param: from.to_string(),
                    value: to.to_string(),
                })?;
            if map[i].is_some() {
                return Err(Error::DuplicateMapEntry(from.to_string()));
            }
            map[i] = Some(j);
        }
        let mut complete = Vec::with_capacity(map.len());
        for (i, entry) in map.into_iter().enumerate() {
            match entry {
                Some(j) => complete.push(j),
                None => return Err(Error::MapNotTotal(source.params()[i].clone())),
            }
        }
        SoftMorphism::from_indices(source.clone(), complete, target.clone())
    }

    /// Builds a morphism from a positional map: `map[i]` is the target
    /// parameter index for source parameter `i`.
    pub fn from_indices(source: SoftSet, map: Vec<usize>, target: SoftSet) -> Result<Self> {
        if source.universe() != target.universe() {
            return Err(Error::UniverseMismatch);
        }
        if map.len() < source.param_count() {
            return Err(Error::MapNotTotal(source.params()[map.len()].clone()));
        }
        if map.len() > source.param_count() {
            return Err(Error::MapDomainInvalid(format!("#{}", map.len() - 1)));
        }
        for (i, &j) in map.iter().enumerate() {
            if j >= target.param_count() {
                return Err(Error::MapRangeInvalid {
                    param: source.params()[i].clone(),
                    value: format!("#{j}"),
                });
            }
        }
        let morphism = SoftMorphism {
            source,
            map,
            target,
        };
        morphism.check()?;
        Ok(morphism)
    }

    /// The identity morphism on a soft set. Always valid, since every image
    /// contains itself.
    pub fn identity(s: &SoftSet) -> Self {
        SoftMorphism {
            source: s.clone(),
            map: (0..s.param_count()).collect(),
            target: s.clone(),
        }
    }

    /// Composition `self ∘ earlier`: apply `earlier` first, then `self`.
    ///
    /// Requires the earlier morphism's target to equal this morphism's
    /// source (including the name). The result is revalidated even though
    /// the inclusion holds by transitivity.
    pub fn compose(&self, earlier: &SoftMorphism) -> Result<SoftMorphism> {
        if earlier.target != self.source {
            return Err(Error::CompositionMismatch);
        }
        let map = earlier.map.iter().map(|&i| self.map[i]).collect();
        SoftMorphism::from_indices(earlier.source.clone(), map, self.target.clone())
    }

    /// Re-verifies the defining inclusion at every source parameter,
    /// reporting the first violation in declaration order.
    pub fn check(&self) -> Result<()> {
        for (i, &j) in self.map.iter().enumerate() {
            if !self
                .source
                .image_at(i)
                .is_subset_of(self.target.image_at(j))
            {
                return Err(Error::SoftConditionViolated(
                    self.source.params()[i].clone(),
                ));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SoftSet {
        &self.source
    }

    pub fn target(&self) -> &SoftSet {
        &self.target
    }

    /// The positional parameter map.
    pub fn map_indices(&self) -> &[usize] {
        &self.map
    }

    /// Where a source parameter is sent, by name.
    pub fn map_param(&self, param: &str) -> Option<&str> {
        self.source
            .param_index(param)
            .map(|i| self.target.params()[self.map[i]].as_str())
    }

    /// `(source parameter, target parameter)` pairs in declaration order.
    pub fn map_pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map.iter().enumerate().map(|(i, &j)| {
            (
                self.source.params()[i].as_str(),
                self.target.params()[j].as_str(),
            )
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for SoftMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [", self.source.name(), self.target.name())?;
        let mut first = true;
        for (a, b) in self.map_pairs() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{a}->{b}")?;
            first = false;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    fn universe() -> Universe {
        Universe::new(["u1", "u2"]).unwrap()
    }

    #[test]
    fn null_source_maps_anywhere() {
        let u = universe();
        let f = SoftSet::null(&u, "F", ["a1"]).unwrap();
        let g = SoftSet::from_table(&u, "G", &[("b1", &["u1"])]).unwrap();
        let m = SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap();
        assert_eq!(m.map_param("a1"), Some("b1"));
    }

    #[test]
    fn inclusion_violation_reports_first_parameter() {
        let u = universe();
        let f = SoftSet::from_table(&u, "F", &[("a1", &["u1", "u2"])]).unwrap();
        let g = SoftSet::from_table(&u, "G", &[("b1", &["u1"])]).unwrap();
        assert_eq!(
            SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap_err(),
            Error::SoftConditionViolated("a1".into())
        );
    }

    #[test]
    fn proper_inclusion_is_accepted() {
        let u = universe();
        let f = SoftSet::from_table(&u, "F", &[("a1", &["u1"])]).unwrap();
        let g = SoftSet::from_table(&u, "G", &[("b1", &["u1", "u2"])]).unwrap();
        assert!(SoftMorphism::new(&f, [("a1", "b1")], &g).is_ok());
    }

    #[test]
    fn map_must_be_total_and_in_range() {
        let u = universe();
        let f = SoftSet::null(&u, "F", ["a1", "a2"]).unwrap();
        let g = SoftSet::null(&u, "G", ["b1"]).unwrap();
        assert_eq!(
            SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap_err(),
            Error::MapNotTotal("a2".into())
        );
        assert_eq!(
            SoftMorphism::new(&f, [("a1", "b1"), ("a2", "bogus")], &g).unwrap_err(),
            Error::MapRangeInvalid {
                param: "a2".into(),
                value: "bogus".into()
            }
        );
        assert_eq!(
            SoftMorphism::new(&f, [("bogus", "b1")], &g).unwrap_err(),
            Error::MapDomainInvalid("bogus".into())
        );
        assert_eq!(
            SoftMorphism::new(&f, [("a1", "b1"), ("a1", "b1"), ("a2", "b1")], &g).unwrap_err(),
            Error::DuplicateMapEntry("a1".into())
        );
    }

    #[test]
    fn universes_must_match() {
        let u = universe();
        let v = Universe::new(["v1"]).unwrap();
        let f = SoftSet::null(&u, "F", ["a1"]).unwrap();
        let g = SoftSet::null(&v, "G", ["b1"]).unwrap();
        assert_eq!(
            SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn identity_on_empty_soft_set() {
        let u = universe();
        let s = SoftSet::from_table(&u, "F", &[]).unwrap();
        let id = SoftMorphism::identity(&s);
        assert!(id.map_indices().is_empty());
        assert!(id.is_identity());
        assert!(id.check().is_ok());
    }

    #[test]
    fn identity_laws() {
        let u = universe();
        let f = SoftSet::from_table(&u, "F", &[("a1", &["u1"])]).unwrap();
        let g = SoftSet::from_table(&u, "G", &[("b1", &["u1", "u2"])]).unwrap();
        let m = SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap();
        assert_eq!(SoftMorphism::identity(&g).compose(&m).unwrap(), m);
        assert_eq!(m.compose(&SoftMorphism::identity(&f)).unwrap(), m);
    }

    #[test]
    fn composition_mismatch_detected() {
        let u = universe();
        let f = SoftSet::null(&u, "F", ["a1"]).unwrap();
        let g = SoftSet::null(&u, "G", ["b1"]).unwrap();
        let m = SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap();
        // m's target is G, not F, so m cannot follow itself.
        assert_eq!(m.compose(&m).unwrap_err(), Error::CompositionMismatch);
    }

    #[test]
    fn concrete_associativity() {
        let u = universe();
        let a = SoftSet::null(&u, "A", ["a1", "a2"]).unwrap();
        let b = SoftSet::from_table(&u, "B", &[("b1", &["u1"]), ("b2", &[])]).unwrap();
        let c = SoftSet::from_table(&u, "C", &[("c1", &["u1", "u2"]), ("c2", &["u2"])]).unwrap();
        let d = SoftSet::absolute(&u, "D", ["d1"]).unwrap();
        let f = SoftMorphism::new(&a, [("a1", "b1"), ("a2", "b2")], &b).unwrap();
        let g = SoftMorphism::new(&b, [("b1", "c1"), ("b2", "c2")], &c).unwrap();
        let h = SoftMorphism::new(&c, [("c1", "d1"), ("c2", "d1")], &d).unwrap();
        let left = h.compose(&g.compose(&f).unwrap()).unwrap();
        let right = h.compose(&g).unwrap().compose(&f).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn equality_is_triple_equality() {
        let u = universe();
        let f = SoftSet::null(&u, "F", ["a1"]).unwrap();
        let g = SoftSet::null(&u, "G", ["b1", "b2"]).unwrap();
        let m1 = SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap();
        let m2 = SoftMorphism::new(&f, [("a1", "b2")], &g).unwrap();
        assert_eq!(m1, m1.clone());
        assert_ne!(m1, m2);
        // Same map, different target object: hom-sets are disjoint.
        let g2 = g.renamed("G2");
        let m3 = SoftMorphism::new(&f, [("a1", "b1")], &g2).unwrap();
        assert_ne!(m1, m3);
    }

    #[test]
    fn positional_map_must_fit_the_source() {
        let u = universe();
        let f = SoftSet::null(&u, "F", ["a1", "a2"]).unwrap();
        let g = SoftSet::null(&u, "G", ["b1"]).unwrap();
        assert_eq!(
            SoftMorphism::from_indices(f.clone(), vec![0], g.clone()).unwrap_err(),
            Error::MapNotTotal("a2".into())
        );
        assert_eq!(
            SoftMorphism::from_indices(f.clone(), vec![0, 0, 0], g.clone()).unwrap_err(),
            Error::MapDomainInvalid("#2".into())
        );
        assert_eq!(
            SoftMorphism::from_indices(f, vec![0, 7], g).unwrap_err(),
            Error::MapRangeInvalid {
                param: "a2".into(),
                value: "#7".into()
            }
        );
    }

    #[test]
    fn rebuilding_from_parts_reproduces_the_morphism() {
        let u = universe();
        let f = SoftSet::from_table(&u, "F", &[("a1", &["u1"])]).unwrap();
        let g = SoftSet::from_table(&u, "G", &[("b1", &["u1", "u2"])]).unwrap();
        let m = SoftMorphism::new(&f, [("a1", "b1")], &g).unwrap();
        let rebuilt = SoftMorphism::from_indices(
            m.source().clone(),
            m.map_indices().to_vec(),
            m.target().clone(),
        )
        .unwrap();
        assert_eq!(m, rebuilt);
    }
}
