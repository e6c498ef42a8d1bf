//! Loading the prelude and source files into a kernel.
//!
//! Globals from a file `dir/stem.smltt` are registered as `stem.name`. Inside
//! a file, a bare identifier resolves to a local binder, then to the file's
//! own declarations, then to its imports in order, then to the prelude.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::frontend::surface::Decl;
use crate::frontend::{parse_expr, parse_file, Elab, ElabError, Mode, Pos, SyntaxError};
use crate::kernel::prelude::{PRELUDE_ENV, PRELUDE_SOURCE};
use crate::kernel::{Kernel, Origin, TypeError};
use crate::syntax::{Name, Term, TopLevelDecl};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{file}: {error}")]
    Syntax { file: String, error: SyntaxError },
    #[error("{file}: in `{decl}`: {error}")]
    Elab {
        file: String,
        decl: String,
        pos: Pos,
        error: ElabError,
    },
    #[error("{file}: in `{decl}`: {error}")]
    Type {
        file: String,
        decl: String,
        pos: Pos,
        error: TypeError,
    },
    #[error("{file}: import cycle through {through}")]
    ImportCycle { file: String, through: String },
}

impl LoadError {
    /// Stable error kind for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            LoadError::Io { .. } => "IoError",
            LoadError::Syntax { .. } => "SyntaxError",
            LoadError::Elab {
                error: ElabError::UnboundIdentifier { .. },
                ..
            } => "UnboundIdentifier",
            LoadError::Elab { .. } => "ElaborationAmbiguity",
            LoadError::Type { error, .. } => error.kind(),
            LoadError::ImportCycle { .. } => "ImportCycle",
        }
    }

    pub fn file(&self) -> &str {
        match self {
            LoadError::Io { path, .. } => path,
            LoadError::Syntax { file, .. }
            | LoadError::Elab { file, .. }
            | LoadError::Type { file, .. }
            | LoadError::ImportCycle { file, .. } => file,
        }
    }

    pub fn decl(&self) -> Option<&str> {
        match self {
            LoadError::Elab { decl, .. } | LoadError::Type { decl, .. } => Some(decl),
            _ => None,
        }
    }

    pub fn span(&self) -> Option<Pos> {
        match self {
            LoadError::Syntax { error, .. } => Some(Pos {
                line: error.line,
                col: error.col,
            }),
            LoadError::Elab { pos, .. } | LoadError::Type { pos, .. } => Some(*pos),
            _ => None,
        }
    }

    /// Process exit code: 1 for checking errors, 2 for syntax errors,
    /// 3 for I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            LoadError::Io { .. } => 3,
            LoadError::Syntax { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeclReport {
    pub file: String,
    pub name: Name,
    pub axiom: bool,
    pub elapsed: Duration,
}

/// Outcome of checking a set of files.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub decls: Vec<DeclReport>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub allow_axioms: bool,
}

struct FileScope {
    stem: String,
    names: Vec<Name>,
}

pub struct Session {
    pub kernel: Kernel,
    options: Options,
    prelude: HashSet<Name>,
    files: HashMap<PathBuf, FileScope>,
    loading: Vec<PathBuf>,
    /// Files in load order.
    pub order: Vec<PathBuf>,
    pub report: CheckReport,
}

impl std::fmt::Debug for Session {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Session({} globals)", self.kernel.globals.len())
    }
}

/// The prelude text: `$SIZETT_PRELUDE` if set, the built-in copy otherwise.
pub fn prelude_source() -> Result<(String, String), LoadError> {
    match std::env::var(PRELUDE_ENV) {
        Ok(path) => fs::read_to_string(&path)
            .map(|s| (path.clone(), s))
            .map_err(|e| LoadError::Io {
                path,
                message: e.to_string(),
            }),
        Err(_) => Ok(("<prelude>".into(), PRELUDE_SOURCE.to_string())),
    }
}

impl Session {
    /// A session with the prelude loaded.
    pub fn new(options: Options) -> Result<Self, LoadError> {
        let (name, src) = prelude_source()?;
        Self::with_prelude(options, &name, &src)
    }

    pub fn with_prelude(options: Options, file: &str, src: &str) -> Result<Self, LoadError> {
        let mut s = Session {
            kernel: Kernel::new(),
            options,
            prelude: HashSet::new(),
            files: HashMap::new(),
            loading: Vec::new(),
            order: Vec::new(),
            report: CheckReport::default(),
        };
        s.prelude = s.kernel.names().into_iter().collect();
        let decls = parse_file(src).map_err(|error| LoadError::Syntax {
            file: file.into(),
            error,
        })?;
        let start = Instant::now();
        for d in &decls {
            let Some(name) = d.name() else {
                return Err(LoadError::Syntax {
                    file: file.into(),
                    error: SyntaxError::new(d.pos(), "the prelude cannot import files"),
                });
            };
            let qualified: Name = name.into();
            let resolve = |n: &str| s.prelude.get(n).cloned();
            let core = elaborate(&resolve, d, file, name)?;
            s.add(file, d.pos(), qualified.clone(), core, Origin::Prelude)?;
            s.prelude.insert(qualified);
        }
        s.report.elapsed += start.elapsed();
        Ok(s)
    }

    fn add(
        &mut self,
        file: &str,
        pos: Pos,
        name: Name,
        (ty, body): (Term, Option<Term>),
        origin: Origin,
    ) -> Result<(), LoadError> {
        let start = Instant::now();
        let decl = TopLevelDecl {
            name: name.clone(),
            declared_type: ty,
            body,
        };
        self.kernel
            .check_decl(&decl, origin, self.options.allow_axioms)
            .map_err(|error| LoadError::Type {
                file: file.into(),
                decl: name.to_string(),
                pos,
                error,
            })?;
        self.report.decls.push(DeclReport {
            file: file.into(),
            name,
            axiom: decl.body.is_none(),
            elapsed: start.elapsed(),
        });
        Ok(())
    }

    /// Load a file, or every `.smltt` file under a directory (in manifest
    /// order if the directory has one).
    pub fn load_path(&mut self, path: &Path) -> Result<(), LoadError> {
        if path.is_dir() {
            for f in directory_files(path)? {
                self.load_file(&f)?;
            }
            Ok(())
        } else {
            self.load_file(path)
        }
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), LoadError> {
        let shown = path.display().to_string();
        let canon = path.canonicalize().map_err(|e| LoadError::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        if self.files.contains_key(&canon) {
            return Ok(());
        }
        if self.loading.contains(&canon) {
            return Err(LoadError::ImportCycle {
                file: shown,
                through: self
                    .loading
                    .iter()
                    .map(|p| p.display().to_string())
                    .collect::<Vec<_>>()
                    .join(" -> "),
            });
        }
        let src = fs::read_to_string(&canon).map_err(|e| LoadError::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        let decls = parse_file(&src).map_err(|error| LoadError::Syntax {
            file: shown.clone(),
            error,
        })?;
        let stem = canon
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();

        self.loading.push(canon.clone());
        let mut imports = Vec::new();
        for d in &decls {
            if let Decl::Import { path: rel, .. } = d {
                let target = canon.parent().unwrap_or(Path::new(".")).join(rel);
                let r = self.load_file(&target);
                if let Err(e) = r {
                    self.loading.pop();
                    return Err(e);
                }
                imports.push(target.canonicalize().expect("loaded file exists"));
            }
        }
        self.loading.pop();

        let start = Instant::now();
        let mut own: Vec<Name> = Vec::new();
        let mut result = Ok(());
        for d in &decls {
            let Some(name) = d.name() else { continue };
            let resolve = |n: &str| self.resolve(&stem, &own, &imports, n);
            let core = match elaborate(&resolve, d, &shown, name) {
                Ok(c) => c,
                Err(e) => {
                    result = Err(e);
                    break;
                }
            };
            let qualified: Name = format!("{stem}.{name}").into();
            if let Err(e) = self.add(&shown, d.pos(), qualified.clone(), core, Origin::File(shown.clone())) {
                result = Err(e);
                break;
            }
            own.push(qualified);
        }
        self.report.elapsed += start.elapsed();
        result?;
        self.files.insert(canon.clone(), FileScope { stem, names: own });
        self.order.push(canon);
        Ok(())
    }

    fn resolve(&self, stem: &str, own: &[Name], imports: &[PathBuf], n: &str) -> Option<Name> {
        let local = format!("{stem}.{n}");
        if let Some(q) = own.iter().find(|q| ***q == *local) {
            return Some(q.clone());
        }
        for imp in imports {
            let scope = &self.files[imp];
            let q = format!("{}.{n}", scope.stem);
            if let Some(q) = scope.names.iter().find(|x| ***x == *q) {
                return Some(q.clone());
            }
        }
        if let Some(p) = self.prelude.get(n) {
            return Some(p.clone());
        }
        // Fully qualified reference to anything already checked.
        self.kernel.lookup(n).map(|e| e.name.clone())
    }

    /// Resolve an identifier typed at the command line: prelude names,
    /// qualified names, and bare names declared in exactly one loaded file.
    pub fn resolve_global(&self, n: &str) -> Option<Name> {
        if let Some(e) = self.kernel.lookup(n) {
            return Some(e.name.clone());
        }
        let mut found = self
            .files
            .values()
            .filter_map(|f| {
                let q = format!("{}.{n}", f.stem);
                f.names.iter().find(|x| ***x == *q).cloned()
            });
        let first = found.next();
        match found.next() {
            Some(_) => None,
            None => first,
        }
    }

    /// Parse and elaborate a closed expression against every loaded global.
    pub fn expression(&self, src: &str) -> Result<Term, LoadError> {
        let e = parse_expr(src).map_err(|error| LoadError::Syntax {
            file: "<command line>".into(),
            error,
        })?;
        let resolve = |n: &str| self.resolve_global(n);
        Elab::new(&resolve)
            .elab(&e, Mode::Term)
            .map_err(|error| LoadError::Elab {
                file: "<command line>".into(),
                decl: src.into(),
                pos: Pos { line: 1, col: 1 },
                error,
            })
    }

    /// Names declared by a loaded file.
    pub fn file_names(&self, path: &Path) -> Option<&[Name]> {
        let canon = path.canonicalize().ok()?;
        self.files.get(&canon).map(|f| f.names.as_slice())
    }

    pub fn used_axioms(&self, name: &str) -> Result<BTreeSet<Name>, TypeError> {
        self.kernel.used_axioms(name)
    }
}

fn elaborate(
    resolve: &dyn Fn(&str) -> Option<Name>,
    d: &Decl,
    file: &str,
    name: &str,
) -> Result<(Term, Option<Term>), LoadError> {
    let (params, ty, body) = match d {
        Decl::Def {
            params, ty, body, ..
        } => (params, ty, Some(body)),
        Decl::Axiom { params, ty, .. } => (params, ty, None),
        Decl::Import { .. } => unreachable!("imports carry no name"),
    };
    Elab::new(&resolve)
        .decl(params, ty, body)
        .map_err(|error| LoadError::Elab {
            file: file.into(),
            decl: name.into(),
            pos: d.pos(),
            error,
        })
}

/// Manifest file name inside a corpus directory.
pub const MANIFEST: &str = "MANIFEST";

/// Files of a directory: manifest order if present, sorted otherwise.
pub fn directory_files(dir: &Path) -> Result<Vec<PathBuf>, LoadError> {
    let io = |e: std::io::Error| LoadError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let manifest = dir.join(MANIFEST);
    if manifest.is_file() {
        let text = fs::read_to_string(&manifest).map_err(io)?;
        let m = crate::corpus::Manifest::parse(&text).map_err(|message| LoadError::Io {
            path: manifest.display().to_string(),
            message,
        })?;
        return Ok(m.entries.iter().map(|e| dir.join(&e.path)).collect());
    }
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "smltt"))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prelude_checks() {
        let s = Session::with_prelude(Options::default(), "<prelude>", PRELUDE_SOURCE)
            .unwrap_or_else(|e| panic!("{e}"));
        for ax in crate::kernel::prelude::PARAMETRICITY_AXIOMS {
            assert!(s.kernel.lookup(ax).unwrap().is_axiom());
        }
        assert!(s.used_axioms("canExPi").unwrap().is_empty());
        assert_eq!(
            s.used_axioms("funextPi").unwrap().into_iter().collect::<Vec<_>>(),
            vec![Name::from("funext")]
        );
    }
}
