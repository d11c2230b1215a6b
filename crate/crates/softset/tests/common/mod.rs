//! Shared helpers for the integration suites: an independent brute-force
//! hom enumerator, and proptest generators that build valid values without
//! rejection sampling.

#![allow(dead_code)]

use proptest::prelude::*;
use softset::{enumerate_hom, SoftMorphism, SoftSet, Subset, Universe, Workspace};

pub fn u2() -> Universe {
    Universe::new(["u1", "u2"]).unwrap()
}

pub fn soft(u: &Universe, name: &str, rows: &[(&str, &[&str])]) -> SoftSet {
    SoftSet::from_table(u, name, rows).unwrap()
}

/// Definitional brute force, independent of the library's enumeration
/// strategy: walk every total parameter map in lexicographic order and keep
/// the ones the validating constructor accepts.
pub fn naive_hom(source: &SoftSet, target: &SoftSet) -> Vec<SoftMorphism> {
    let arity = source.param_count();
    let size = target.param_count();
    if arity == 0 {
        return vec![
            SoftMorphism::from_indices(source.clone(), Vec::new(), target.clone())
                .expect("empty map is always valid"),
        ];
    }
    if size == 0 {
        return Vec::new();
    }
    let mut result = Vec::new();
    let mut map = vec![0usize; arity];
    loop {
        if let Ok(m) = SoftMorphism::from_indices(source.clone(), map.clone(), target.clone()) {
            result.push(m);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return result;
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < size {
                break;
            }
            map[pos] = 0;
        }
    }
}

/// Universes with 0..=3 elements named `u1..`.
pub fn arb_universe() -> impl Strategy<Value = Universe> {
    (0usize..=3).prop_map(|n| Universe::new((1..=n).map(|i| format!("u{i}"))).unwrap())
}

/// Soft sets with 0..=3 parameters named `a1..` and arbitrary images.
pub fn arb_soft_set_over(u: Universe, name: &'static str) -> impl Strategy<Value = SoftSet> {
    let subset_count = 1usize << u.len();
    (0usize..=3).prop_flat_map(move |arity| {
        let u = u.clone();
        proptest::collection::vec(0..subset_count, arity).prop_map(move |masks| {
            let subsets: Vec<Subset> = u.powerset().collect();
            let assignments: Vec<(String, Subset)> = masks
                .iter()
                .enumerate()
                .map(|(i, &m)| (format!("a{}", i + 1), subsets[m].clone()))
                .collect();
            SoftSet::new(&u, name, assignments).unwrap()
        })
    })
}

pub fn arb_soft_set(name: &'static str) -> impl Strategy<Value = SoftSet> {
    arb_universe().prop_flat_map(move |u| arb_soft_set_over(u, name))
}

/// A valid morphism into the given target: pick where each source parameter
/// goes, then carve its image out of the chosen target image, so the
/// defining inclusion holds by construction.
pub fn arb_morphism_into(
    target: SoftSet,
    source_name: &'static str,
) -> impl Strategy<Value = SoftMorphism> {
    let max_arity = if target.param_count() == 0 { 0 } else { 3 };
    (0usize..=max_arity).prop_flat_map(move |arity| {
        let target = target.clone();
        let choices = target.param_count().max(1);
        (
            proptest::collection::vec(0usize..choices, arity),
            proptest::collection::vec(any::<u64>(), arity),
        )
            .prop_map(move |(map, picks)| {
                let u = target.universe().clone();
                let assignments: Vec<(String, Subset)> = map
                    .iter()
                    .zip(&picks)
                    .enumerate()
                    .map(|(i, (&j, &pick))| {
                        let members: Vec<String> = target
                            .image_at(j)
                            .members()
                            .enumerate()
                            .filter(|(bit, _)| pick & (1 << bit) != 0)
                            .map(|(_, name)| name.to_string())
                            .collect();
                        (format!("a{}", i + 1), u.subset(members).unwrap())
                    })
                    .collect();
                let source = SoftSet::new(&u, source_name, assignments).unwrap();
                SoftMorphism::from_indices(source, map.clone(), target.clone()).unwrap()
            })
    })
}

/// A valid morphism out of the given source: pick where each parameter goes,
/// then grow each target image as the union of what lands on it plus noise.
pub fn arb_morphism_from(
    source: SoftSet,
    target_name: &'static str,
) -> impl Strategy<Value = SoftMorphism> {
    let arity = source.param_count();
    let min_size = usize::from(arity > 0);
    (min_size..=3usize).prop_flat_map(move |size| {
        let source = source.clone();
        (
            proptest::collection::vec(0usize..size.max(1), arity),
            proptest::collection::vec(any::<u64>(), size),
        )
            .prop_map(move |(map, extras)| {
                let u = source.universe().clone();
                let assignments: Vec<(String, Subset)> = (0..size)
                    .map(|j| {
                        let mut members: Vec<String> = u
                            .elements()
                            .iter()
                            .enumerate()
                            .filter(|(bit, _)| extras[j] & (1 << bit) != 0)
                            .map(|(_, e)| e.clone())
                            .collect();
                        for (i, &to) in map.iter().enumerate() {
                            if to == j {
                                members.extend(source.image_at(i).members().map(str::to_string));
                            }
                        }
                        (format!("b{}", j + 1), u.subset(members).unwrap())
                    })
                    .collect();
                let target = SoftSet::new(&u, target_name, assignments).unwrap();
                SoftMorphism::from_indices(source.clone(), map.clone(), target).unwrap()
            })
    })
}

pub fn arb_morphism() -> impl Strategy<Value = SoftMorphism> {
    arb_soft_set("G").prop_flat_map(|target| arb_morphism_into(target, "F"))
}

/// Three composable morphisms `f: A -> B`, `g: B -> C`, `h: C -> D`.
pub fn arb_chain3() -> impl Strategy<Value = (SoftMorphism, SoftMorphism, SoftMorphism)> {
    arb_morphism().prop_flat_map(|f| {
        arb_morphism_from(f.target().clone(), "H").prop_flat_map(move |g| {
            let f = f.clone();
            arb_morphism_from(g.target().clone(), "I").prop_map(move |h| (f.clone(), g.clone(), h))
        })
    })
}

/// An isomorphism by construction: permute the parameters and carry the
/// images along unchanged.
pub fn arb_iso() -> impl Strategy<Value = SoftMorphism> {
    arb_soft_set("F").prop_flat_map(|source| {
        let arity = source.param_count();
        Just((0..arity).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |perm| {
                let u = source.universe().clone();
                let mut images: Vec<Option<Subset>> = vec![None; arity];
                for (i, &j) in perm.iter().enumerate() {
                    images[j] = Some(source.image_at(i).clone());
                }
                let assignments: Vec<(String, Subset)> = images
                    .into_iter()
                    .enumerate()
                    .map(|(j, img)| (format!("b{}", j + 1), img.unwrap()))
                    .collect();
                let target = SoftSet::new(&u, "G", assignments).unwrap();
                SoftMorphism::from_indices(source.clone(), perm.clone(), target).unwrap()
            })
    })
}

/// Workspaces with a few soft sets and a sprinkling of morphisms between
/// them, for round-trip checks.
pub fn arb_workspace() -> impl Strategy<Value = Workspace> {
    arb_universe().prop_flat_map(|u| {
        let sets = proptest::collection::vec(arb_soft_set_over(u.clone(), "X"), 0..=3);
        (Just(u), sets, any::<u32>()).prop_map(|(u, sets, pick)| {
            let mut w = Workspace::new(u);
            for (i, s) in sets.into_iter().enumerate() {
                w.add_soft_set(s.renamed(format!("F{}", i + 1))).unwrap();
            }
            let registered = w.soft_sets().to_vec();
            let mut bit = 0u32;
            for (i, a) in registered.iter().enumerate() {
                for (j, b) in registered.iter().enumerate() {
                    let wanted = pick & (1 << bit) != 0;
                    bit += 1;
                    if wanted {
                        if let Some(m) = enumerate_hom(a, b).unwrap().into_iter().next() {
                            w.add_morphism(format!("m{i}_{j}"), m).unwrap();
                        }
                    }
                }
            }
            w
        })
    })
}
