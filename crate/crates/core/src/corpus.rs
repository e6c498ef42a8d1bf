//! The checked library under `stdlib/` and its manifest.
//!
//! Manifest lines read `path tier axioms`, where `tier` is `definitions` or
//! `theorems` and `axioms` is a comma-separated list (or `-` for none) of
//! the axioms the file's declarations may depend on. `#` starts a comment.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use crate::session::{LoadError, Options, Session};
use crate::syntax::Name;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Definitions,
    Theorems,
}

#[derive(Clone, Debug)]
pub struct ManifestEntry {
    pub path: String,
    pub tier: Tier,
    pub axioms: BTreeSet<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, String> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [path, tier, axioms] = fields[..] else {
                return Err(format!("line {}: expected `path tier axioms`", n + 1));
            };
            let tier = match tier {
                "definitions" => Tier::Definitions,
                "theorems" => Tier::Theorems,
                other => return Err(format!("line {}: unknown tier `{other}`", n + 1)),
            };
            let axioms = if axioms == "-" {
                BTreeSet::new()
            } else {
                axioms.split(',').map(str::to_string).collect()
            };
            entries.push(ManifestEntry {
                path: path.to_string(),
                tier,
                axioms,
            });
        }
        Ok(Manifest { entries })
    }
}

/// Axiom use of one corpus declaration.
#[derive(Clone, Debug)]
pub struct AxiomUse {
    pub name: Name,
    pub axioms: BTreeSet<Name>,
    /// Axioms used but not allowed by the manifest entry.
    pub unexpected: BTreeSet<Name>,
}

#[derive(Debug)]
pub struct CorpusReport {
    pub files: Vec<(ManifestEntry, Vec<AxiomUse>)>,
    pub elapsed: Duration,
}

impl CorpusReport {
    pub fn violations(&self) -> impl Iterator<Item = &AxiomUse> {
        self.files
            .iter()
            .flat_map(|(_, uses)| uses.iter())
            .filter(|u| !u.unexpected.is_empty())
    }

    /// Axiom use of every declaration of the file with the given stem.
    pub fn file(&self, stem: &str) -> Option<&[AxiomUse]> {
        self.files
            .iter()
            .find(|(e, _)| Path::new(&e.path).file_stem().is_some_and(|s| s == stem))
            .map(|(_, u)| u.as_slice())
    }
}

/// Check every manifest file in order with a fresh session.
pub fn check_corpus(dir: &Path) -> Result<(Session, CorpusReport), LoadError> {
    let mut session = Session::new(Options::default())?;
    let report = check_corpus_in(&mut session, dir)?;
    Ok((session, report))
}

/// Check every manifest file in order and audit its axiom use.
pub fn check_corpus_in(session: &mut Session, dir: &Path) -> Result<CorpusReport, LoadError> {
    let start = Instant::now();
    let manifest_path = dir.join(crate::session::MANIFEST);
    let text = std::fs::read_to_string(&manifest_path).map_err(|e| LoadError::Io {
        path: manifest_path.display().to_string(),
        message: e.to_string(),
    })?;
    let manifest = Manifest::parse(&text).map_err(|message| LoadError::Io {
        path: manifest_path.display().to_string(),
        message,
    })?;
    let mut files = Vec::new();
    for entry in &manifest.entries {
        let path = dir.join(&entry.path);
        session.load_file(&path)?;
        let names = session.file_names(&path).unwrap_or(&[]).to_vec();
        let uses = names
            .into_iter()
            .map(|name| {
                let axioms = session.used_axioms(&name).unwrap_or_default();
                let unexpected = axioms
                    .iter()
                    .filter(|a| !entry.axioms.contains(&***a))
                    .cloned()
                    .collect();
                AxiomUse {
                    name,
                    axioms,
                    unexpected,
                }
            })
            .collect();
        files.push((entry.clone(), uses));
    }
    Ok(CorpusReport {
        files,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lines() {
        let m = Manifest::parse("# c\nequiv.smltt definitions funext\nps.smltt theorems -\n").unwrap();
        assert_eq!(m.entries.len(), 2);
        assert!(m.entries[1].axioms.is_empty());
        assert!(Manifest::parse("x.smltt bogus -").is_err());
    }
}
