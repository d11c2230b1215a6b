//! Soft sets: a parameter list plus one subset of the universe per parameter.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// A named soft set over a fixed universe.
///
/// A soft set assigns every parameter in its ordered parameter list a subset
/// of the universe. The parameter list may be empty. Equality compares name,
/// universe, parameters and images, so two structurally identical soft sets
/// with different names are distinct objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftSet {
    name: String,
    universe: Universe,
    params: Vec<String>,
    images: Vec<Subset>,
}

impl SoftSet {
    /// Builds a soft set from `(parameter, image)` assignments, kept in the
    /// given order.
    pub fn new<S>(
        universe: &Universe,
        name: impl Into<String>,
        assignments: impl IntoIterator<Item = (S, Subset)>,
    ) -> Result<Self>
    where
        S: Into<String>,
    {
        let mut params = Vec::new();
        let mut images = Vec::new();
        for (param, image) in assignments {
            let param = param.into();
            if params.contains(&param) {
                return Err(Error::DuplicateParameter(param));
            }
            if image.universe() != universe {
                return Err(Error::UniverseMismatch);
            }
            params.push(param);
            images.push(image);
        }
        Ok(SoftSet {
            name: name.into(),
            universe: universe.clone(),
            params,
            images,
        })
    }

    /// Convenience constructor from element names, handy in tests and small
    /// programs: each row is a parameter with the listed members as image.
    pub fn from_table(universe: &Universe, name: &str, rows: &[(&str, &[&str])]) -> Result<Self> {
        let mut assignments = Vec::with_capacity(rows.len());
        for (param, members) in rows {
            assignments.push((*param, universe.subset(members.iter().copied())?));
        }
        SoftSet::new(universe, name, assignments)
    }

    /// The soft set sending every listed parameter to the empty subset.
    pub fn null<I, S>(universe: &Universe, name: impl Into<String>, params: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let assignments = params
            .into_iter()
            .map(|p| (p, universe.empty_subset()))
            .collect::<Vec<_>>();
        SoftSet::new(universe, name, assignments)
    }

    /// The soft set sending every listed parameter to the whole universe.
    pub fn absolute<I, S>(universe: &Universe, name: impl Into<String>, params: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let assignments = params
            .into_iter()
            .map(|p| (p, universe.full_subset()))
            .collect::<Vec<_>>();
        SoftSet::new(universe, name, assignments)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Parameter names in declaration order.
    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    pub fn param_index(&self, param: &str) -> Option<usize> {
        self.params.iter().position(|p| p == param)
    }

    /// Image of a parameter, by name.
    pub fn image(&self, param: &str) -> Option<&Subset> {
        self.param_index(param).map(|i| &self.images[i])
    }

    /// Image of the parameter at a position in declaration order.
    pub fn image_at(&self, index: usize) -> &Subset {
        &self.images[index]
    }

    /// `(parameter, image)` pairs in declaration order.
    pub fn assignments(&self) -> impl Iterator<Item = (&str, &Subset)> {
        self.params
            .iter()
            .map(String::as_str)
            .zip(self.images.iter())
    }

    /// True when every image is empty; vacuously true without parameters.
    pub fn is_null(&self) -> bool {
        self.images.iter().all(Subset::is_empty)
    }

    /// True when every image is the whole universe; vacuously true without
    /// parameters.
    pub fn is_absolute(&self) -> bool {
        self.images.iter().all(Subset::is_full)
    }

    /// Same soft set under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        SoftSet {
            name: name.into(),
            ..self.clone()
        }
    }
}

impl fmt::Display for SoftSet {
    /// Workspace block form, without a trailing newline. This is the
    /// canonical shape used by workspace printing: parameters in declaration
    /// order, image members in universe order, an empty image printed as a
    /// bare `=`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "softset {}", self.name)?;
        for (param, image) in self.assignments() {
            write!(f, "param {param} =")?;
            for member in image.members() {
                write!(f, " {member}")?;
            }
            writeln!(f)?;
        }
        write!(f, "end")
    }
}
