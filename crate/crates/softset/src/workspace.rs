//! The line-oriented workspace format.
//!
//! A workspace document is UTF-8 text: `#` starts a comment, blank lines are
//! ignored, and tokens are separated by whitespace. The first significant
//! line declares the universe; soft sets and morphisms follow in blocks that
//! may reference earlier definitions:
//!
//! ```text
//! universe u1 u2
//!
//! softset F
//! param a1 = u1
//! param a2 =
//! end
//!
//! softset G
//! param b1 = u1 u2
//! end
//!
//! morphism f : F -> G
//! map a1 -> b1
//! map a2 -> b1
//! end
//! ```
//!
//! Printing is canonical: universe line first, soft sets then morphisms in
//! definition order, parameters in declared order, subset members in
//! universe order, one blank line between blocks. Parsing what was printed
//! reproduces the workspace exactly.

use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::morphism::SoftMorphism;
use crate::soft_set::SoftSet;
use crate::universe::{Subset, Universe};

/// A named collection of soft sets and morphisms over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workspace {
    universe: Universe,
    soft_sets: Vec<SoftSet>,
    morphisms: Vec<(String, SoftMorphism)>,
}

/// What went wrong while building or parsing a workspace.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WorkspaceError {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown reference `{0}`")]
    UnknownReference(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// A [`WorkspaceError`] located at a source line.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: WorkspaceError,
}

fn at(line: usize, kind: impl Into<WorkspaceError>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

impl Workspace {
    pub fn new(universe: Universe) -> Self {
        Workspace {
            universe,
            soft_sets: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Soft sets in definition order.
    pub fn soft_sets(&self) -> &[SoftSet] {
        &self.soft_sets
    }

    /// Named morphisms in definition order.
    pub fn morphisms(&self) -> &[(String, SoftMorphism)] {
        &self.morphisms
    }

    pub fn soft_set(&self, name: &str) -> Option<&SoftSet> {
        self.soft_sets.iter().find(|s| s.name() == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&SoftMorphism> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
    }

    /// Registers a soft set. Names must be unique and the universe must be
    /// the workspace's.
    pub fn add_soft_set(&mut self, s: SoftSet) -> Result<(), WorkspaceError> {
        if s.universe() != &self.universe {
            return Err(Error::UniverseMismatch.into());
        }
        if self.soft_set(s.name()).is_some() {
            return Err(WorkspaceError::DuplicateName(s.name().to_string()));
        }
        self.soft_sets.push(s);
        Ok(())
    }

    /// Registers a morphism under a name. Its source and target must already
    /// be registered soft sets (same name, same content), so that printing
    /// stays parseable.
    pub fn add_morphism(
        &mut self,
        name: impl Into<String>,
        m: SoftMorphism,
    ) -> Result<(), WorkspaceError> {
        let name = name.into();
        if self.morphism(&name).is_some() {
            return Err(WorkspaceError::DuplicateName(name));
        }
        for end in [m.source(), m.target()] {
            match self.soft_set(end.name()) {
                Some(registered) if registered == end => {}
                _ => return Err(WorkspaceError::UnknownReference(end.name().to_string())),
            }
        }
        self.morphisms.push((name, m));
        Ok(())
    }

    /// Parses a workspace document. See the module documentation for the
    /// format. Errors carry the 1-based line they were detected at.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::default().run(text)
    }

    /// Renders the canonical document form.
    pub fn print(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "universe")?;
        for element in self.universe.elements() {
            write!(f, " {element}")?;
        }
        writeln!(f)?;
        for s in &self.soft_sets {
            writeln!(f)?;
            writeln!(f, "{s}")?;
        }
        for (name, m) in &self.morphisms {
            writeln!(f)?;
            writeln!(
                f,
                "morphism {name} : {} -> {}",
                m.source().name(),
                m.target().name()
            )?;
            for (a, b) in m.map_pairs() {
                writeln!(f, "map {a} -> {b}")?;
            }
            writeln!(f, "end")?;
        }
        Ok(())
    }
}

/// One in-progress block while parsing.
enum Block {
    SoftSet {
        opened_at: usize,
        name: String,
        rows: Vec<(String, Subset)>,
    },
    Morphism {
        opened_at: usize,
        name: String,
        source: SoftSet,
        target: SoftSet,
        // (source param, target param, line) per `map` line
        pairs: Vec<(String, String, usize)>,
    },
}

#[derive(Default)]
struct Parser {
    workspace: Option<Workspace>,
    block: Option<Block>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<Workspace, ParseError> {
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let significant = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let tokens: Vec<&str> = significant.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            self.line(line, &tokens)?;
        }
        if let Some(block) = &self.block {
            let (opened_at, what) = match block {
                Block::SoftSet { opened_at, .. } => (*opened_at, "softset"),
                Block::Morphism { opened_at, .. } => (*opened_at, "morphism"),
            };
            return Err(at(
                opened_at,
                WorkspaceError::Syntax(format!("{what} block is missing its `end`")),
            ));
        }
        self.workspace.ok_or_else(|| {
            at(
                last_line.max(1),
                WorkspaceError::Syntax("document must declare a universe".to_string()),
            )
        })
    }

    fn line(&mut self, line: usize, tokens: &[&str]) -> Result<(), ParseError> {
        match (tokens[0], &mut self.block) {
            ("universe", None) => {
                if self.workspace.is_some() {
                    return Err(at(
                        line,
                        WorkspaceError::Syntax("universe is already declared".to_string()),
                    ));
                }
                let universe =
                    Universe::new(tokens[1..].iter().copied()).map_err(|e| at(line, e))?;
                self.workspace = Some(Workspace::new(universe));
                Ok(())
            }
            (_, _) if self.workspace.is_none() => Err(at(
                line,
                WorkspaceError::Syntax("expected `universe <elem> ...` first".to_string()),
            )),
            ("softset", None) => {
                if tokens.len() != 2 {
                    return Err(at(
                        line,
                        WorkspaceError::Syntax("expected `softset <name>`".to_string()),
                    ));
                }
                self.block = Some(Block::SoftSet {
                    opened_at: line,
                    name: tokens[1].to_string(),
                    rows: Vec::new(),
                });
                Ok(())
            }
            ("param", Some(Block::SoftSet { rows, .. })) => {
                if tokens.len() < 3 || tokens[2] != "=" {
                    return Err(at(
                        line,
                        WorkspaceError::Syntax(
                            "expected `param <name> = [<elem> ...]`".to_string(),
                        ),
                    ));
                }
                let param = tokens[1].to_string();
                if rows.iter().any(|(p, _)| *p == param) {
                    return Err(at(line, Error::DuplicateParameter(param)));
                }
                let universe = self.workspace.as_ref().expect("checked above").universe();
                let image = universe
                    .subset(tokens[3..].iter().copied())
                    .map_err(|e| at(line, e))?;
                rows.push((param, image));
                Ok(())
            }
            ("morphism", None) => {
                if tokens.len() != 6 || tokens[2] != ":" || tokens[4] != "->" {
                    return Err(at(
                        line,
                        WorkspaceError::Syntax(
                            "expected `morphism <name> : <source> -> <target>`".to_string(),
                        ),
                    ));
                }
                let workspace = self.workspace.as_ref().expect("checked above");
                let source = workspace
                    .soft_set(tokens[3])
                    .ok_or_else(|| {
                        at(
                            line,
                            WorkspaceError::UnknownReference(tokens[3].to_string()),
                        )
                    })?
                    .clone();
                let target = workspace
                    .soft_set(tokens[5])
                    .ok_or_else(|| {
                        at(
                            line,
                            WorkspaceError::UnknownReference(tokens[5].to_string()),
                        )
                    })?
                    .clone();
                self.block = Some(Block::Morphism {
                    opened_at: line,
                    name: tokens[1].to_string(),
                    source,
                    target,
                    pairs: Vec::new(),
                });
                Ok(())
            }
            ("map", Some(Block::Morphism { pairs, .. })) => {
                if tokens.len() != 4 || tokens[2] != "->" {
                    return Err(at(
                        line,
                        WorkspaceError::Syntax("expected `map <param> -> <param>`".to_string()),
                    ));
                }
                pairs.push((tokens[1].to_string(), tokens[3].to_string(), line));
                Ok(())
            }
            ("end", Some(_)) => {
                let block = self.block.take().expect("matched above");
                let workspace = self.workspace.as_mut().expect("checked above");
                match block {
                    Block::SoftSet {
                        opened_at,
                        name,
                        rows,
                    } => {
                        let s = SoftSet::new(workspace.universe(), name, rows)
                            .map_err(|e| at(opened_at, e))?;
                        workspace.add_soft_set(s).map_err(|e| at(opened_at, e))
                    }
                    Block::Morphism {
                        opened_at,
                        name,
                        source,
                        target,
                        pairs,
                    } => {
                        let m = SoftMorphism::new(
                            &source,
                            pairs.iter().map(|(a, b, _)| (a.as_str(), b.as_str())),
                            &target,
                        )
                        .map_err(|e| at(map_error_line(&e, &pairs, opened_at), e))?;
                        workspace
                            .add_morphism(name, m)
                            .map_err(|e| at(opened_at, e))
                    }
                }
            }
            (directive, _) => Err(at(
                line,
                WorkspaceError::Syntax(format!("unexpected `{directive}` here")),
            )),
        }
    }
}

/// Pins a morphism validation error to the `map` line it concerns, falling
/// back to the block header for errors without one (a missing entry, say).
fn map_error_line(e: &Error, pairs: &[(String, String, usize)], opened_at: usize) -> usize {
    let occurrence_of = |param: &str, nth: usize| {
        pairs
            .iter()
            .filter(|(a, _, _)| a == param)
            .nth(nth)
            .map(|(_, _, line)| *line)
    };
    match e {
        Error::SoftConditionViolated(p)
        | Error::MapDomainInvalid(p)
        | Error::MapRangeInvalid { param: p, .. } => occurrence_of(p, 0),
        Error::DuplicateMapEntry(p) => occurrence_of(p, 1),
        _ => None,
    }
    .unwrap_or(opened_at)
}
