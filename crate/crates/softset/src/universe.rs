//! The fixed finite universe and its subsets.
//!
//! Every soft set in this crate is built over one [`Universe`]: an ordered
//! list of distinct element names. The declaration order is fixed at
//! construction and used everywhere a canonical form is needed — subset
//! printing, powerset enumeration, golden output. Subsets are stored as bit
//! masks against that order, which caps a universe at 64 elements; exhaustive
//! enumeration is hopeless long before that bound bites.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct UniverseInner {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of distinct element names, shared by reference.
///
/// Cloning is cheap; equality compares the element lists, not the allocation.
#[derive(Debug, Clone)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    /// Builds a universe from element names in the given order.
    pub fn new<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.len() > 64 {
            return Err(Error::UniverseTooLarge(elements.len()));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Universe(Arc::new(UniverseInner { elements, index })))
    }

    /// Element names in declaration order.
    pub fn elements(&self) -> &[String] {
        &self.0.elements
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    /// Position of an element in the declaration order.
    pub fn index_of(&self, element: &str) -> Option<usize> {
        self.0.index.get(element).copied()
    }

    pub fn contains(&self, element: &str) -> bool {
        self.0.index.contains_key(element)
    }

    /// Builds the subset holding exactly the named members.
    ///
    /// Order and repetition in the input are irrelevant; the result is
    /// canonical. Unknown names are rejected.
    pub fn subset<I, S>(&self, members: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for member in members {
            let name = member.as_ref();
            match self.index_of(name) {
                Some(i) => bits |= 1 << i,
                None => return Err(Error::ElementNotInUniverse(name.to_string())),
            }
        }
        Ok(Subset {
            universe: self.clone(),
            bits,
        })
    }

    /// The empty subset of this universe.
    pub fn empty_subset(&self) -> Subset {
        Subset {
            universe: self.clone(),
            bits: 0,
        }
    }

    /// The subset equal to the whole universe.
    pub fn full_subset(&self) -> Subset {
        Subset {
            universe: self.clone(),
            bits: self.full_mask(),
        }
    }

    /// All subsets, ordered by their mask value against the element order.
    ///
    /// The empty subset comes first and the full universe last.
    pub fn powerset(&self) -> impl Iterator<Item = Subset> + '_ {
        // u128 counter so a 64-element universe does not overflow the bound.
        let count = 1u128 << self.len();
        (0..count).map(move |bits| Subset {
            universe: self.clone(),
            bits: bits as u64,
        })
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.len())
        }
    }

    pub(crate) fn subset_from_bits(&self, bits: u64) -> Subset {
        debug_assert_eq!(bits & !self.full_mask(), 0);
        Subset {
            universe: self.clone(),
            bits,
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.elements == other.0.elements
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.elements.hash(state);
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements().join(" "))
    }
}

/// A subset of one universe, canonical against its element order.
///
/// Equality is extensional: two subsets of equal universes with the same
/// members are equal, however they were built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: Universe,
    bits: u64,
}

impl Subset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, element: &str) -> bool {
        match self.universe.index_of(element) {
            Some(i) => self.bits & (1 << i) != 0,
            None => false,
        }
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Whether this subset is the whole universe.
    pub fn is_full(&self) -> bool {
        self.bits == self.universe.full_mask()
    }

    /// Member names in universe order.
    pub fn members(&self) -> impl Iterator<Item = &str> {
        let bits = self.bits;
        self.universe
            .elements()
            .iter()
            .enumerate()
            .filter(move |(i, _)| bits & (1 << i) != 0)
            .map(|(_, name)| name.as_str())
    }

    /// Inclusion test. Both subsets must live over the same universe.
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(
            self.universe, other.universe,
            "subset inclusion across universes is undefined"
        );
        self.bits & !other.bits == 0
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for member in self.members() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{member}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
