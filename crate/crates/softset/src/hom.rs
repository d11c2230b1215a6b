//! Exhaustive hom-set enumeration and bounded object families.
//!
//! These are the quantification domains behind every definitional oracle in
//! the crate: enumerating all soft morphisms between two soft sets, counting
//! them without materializing, and generating every soft set with up to a
//! given number of parameters over a universe.

use crate::error::{Error, Result};
use crate::morphism::SoftMorphism;
use crate::soft_set::SoftSet;
use crate::universe::Universe;

/// For each source parameter, the target parameter indices its image fits
/// into, ascending. A soft morphism is exactly one choice per parameter.
fn allowed_targets(source: &SoftSet, target: &SoftSet) -> Result<Vec<Vec<usize>>> {
    if source.universe() != target.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok((0..source.param_count())
        .map(|i| {
            (0..target.param_count())
                .filter(|&j| source.image_at(i).is_subset_of(target.image_at(j)))
                .collect()
        })
        .collect())
}

/// Every soft morphism from `source` to `target`.
///
/// Morphisms are ordered lexicographically by their value tuples under the
/// target's declared parameter order, with the first source parameter most
/// significant. An empty source yields exactly the one empty-map morphism;
/// repeated calls yield the identical sequence.
pub fn enumerate_hom(source: &SoftSet, target: &SoftSet) -> Result<Vec<SoftMorphism>> {
    let allowed = allowed_targets(source, target)?;
    if allowed.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut result = Vec::new();
    // Odometer over one choice index per parameter, last position fastest.
    let mut choice = vec![0usize; allowed.len()];
    loop {
        let map: Vec<usize> = choice
            .iter()
            .zip(&allowed)
            .map(|(&c, opts)| opts[c])
            .collect();
        result.push(
            SoftMorphism::from_indices(source.clone(), map, target.clone())
                .expect("enumerated map satisfies the inclusion by construction"),
        );
        let mut pos = allowed.len();
        loop {
            if pos == 0 {
                return Ok(result);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < allowed[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Number of soft morphisms from `source` to `target`, without enumerating.
///
/// The defining inclusion constrains each parameter independently, so the
/// count is the product over source parameters of how many target images
/// contain theirs. Saturates at `u128::MAX`, far beyond anything that could
/// ever be enumerated.
pub fn hom_count(source: &SoftSet, target: &SoftSet) -> Result<u128> {
    let allowed = allowed_targets(source, target)?;
    Ok(allowed
        .iter()
        .fold(1u128, |acc, opts| acc.saturating_mul(opts.len() as u128)))
}

/// Every soft set over a universe with at most `max_params` parameters,
/// exactly once, in a canonical order.
///
/// Members are grouped by parameter count `k = 0..=max_params`; within a
/// group they are ordered lexicographically by their image tuples, each
/// image encoded as a mask against the universe's element order. Parameters
/// are canonically named `p1..pk` and members `S<k>_<rank>`, so families are
/// reproducible across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectFamily {
    universe: Universe,
    max_params: usize,
    members: Vec<SoftSet>,
}

impl ObjectFamily {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn max_params(&self) -> usize {
        self.max_params
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SoftSet> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a ObjectFamily {
    type Item = &'a SoftSet;
    type IntoIter = std::slice::Iter<'a, SoftSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Generates the exhaustive family of soft sets with `0..=max_params`
/// parameters over the universe.
///
/// The family has `Σ_{k=0..=max_params} (2^|U|)^k` members. Sizes grow
/// steeply; anything beyond a handful of elements and parameters is
/// unusable, which is fine for the desk-scale verification this supports.
pub fn generate_object_family(universe: &Universe, max_params: usize) -> ObjectFamily {
    let subset_count = 1u128 << universe.len();
    let mut members = Vec::new();
    for k in 0..=max_params {
        let params: Vec<String> = (1..=k).map(|i| format!("p{i}")).collect();
        // Count k-digit numbers in base `subset_count`; the first parameter
        // is the most significant digit, giving lexicographic tuple order.
        let mut digits = vec![0u128; k];
        let mut rank = 0usize;
        loop {
            let assignments: Vec<(String, _)> = params
                .iter()
                .cloned()
                .zip(digits.iter().map(|&d| universe.subset_from_bits(d as u64)))
                .collect();
            let name = format!("S{k}_{rank}");
            members.push(
                SoftSet::new(universe, name, assignments)
                    .expect("canonical parameters are distinct and images are in range"),
            );
            rank += 1;
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < subset_count {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    ObjectFamily {
        universe: universe.clone(),
        max_params,
        members,
    }
}
