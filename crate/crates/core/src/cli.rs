//! The `sizett` command line.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::corpus;
use crate::frontend::print::restore_el;
use crate::frontend::{print_term, print_type};
use crate::kernel::TypeError;
use crate::model;
use crate::nbe::quote::{readback_with, Unfold};
use crate::nbe::{eval, Env};
use crate::session::{LoadError, Options, Session, MANIFEST};
use crate::syntax::Term;

/// Environment variable naming the directory searched for `stem.smltt`
/// when a query mentions `stem.name`.
pub const LIBRARY_ENV: &str = "SIZETT_LIBRARY";

#[derive(Debug, Parser)]
#[command(name = "sizett", version, about = "Type checker for type theory with sizes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Accept `axiom` declarations outside the prelude.
    #[arg(long, global = true)]
    pub allow_axioms: bool,
    /// Reduction fuel for the model oracle.
    #[arg(long, global = true, default_value_t = model::DEFAULT_FUEL)]
    pub fuel: u64,
    /// Emit diagnostics as JSON objects.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check files or directories.
    Check {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Print the type of a global or expression.
    Type(Query),
    /// Print the normal form of a global's body or of an expression.
    Normalize {
        #[command(flatten)]
        query: Query,
        /// Unfold definitions while normalizing.
        #[arg(long)]
        unfold: bool,
    },
    /// Print the axioms a global depends on.
    Axioms(Query),
    /// Run model-oracle test vectors (the built-in set by default).
    ModelTest { vectors: Option<PathBuf> },
}

#[derive(Debug, clap::Args)]
pub struct Query {
    /// Files or directories to load first.
    #[arg(short = 'L', long = "lib")]
    pub lib: Vec<PathBuf>,
    /// A global name or an expression.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    pub expr: Vec<String>,
}

struct Diag<'a> {
    json: bool,
    err: &'a mut dyn Write,
}

impl Diag<'_> {
    fn load(&mut self, e: &LoadError) -> i32 {
        if self.json {
            let span = e.span().map(|p| json!({"line": p.line, "col": p.col}));
            let v = json!({
                "file": e.file(),
                "decl": e.decl(),
                "kind": e.kind(),
                "message": e.to_string(),
                "span": span,
            });
            let _ = writeln!(self.err, "{v}");
        } else {
            let _ = writeln!(self.err, "error[{}]: {e}", e.kind());
        }
        e.exit_code()
    }

    fn ty(&mut self, e: &TypeError) -> i32 {
        if self.json {
            let v = json!({
                "file": "<command line>",
                "decl": null,
                "kind": e.kind(),
                "message": e.to_string(),
                "span": null,
            });
            let _ = writeln!(self.err, "{v}");
        } else {
            let _ = writeln!(self.err, "error[{}]: {e}", e.kind());
        }
        1
    }
}

/// Run a parsed command line, returning the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = Options {
        allow_axioms: cli.allow_axioms,
    };
    let mut diag = Diag {
        json: cli.json,
        err,
    };
    match cli.command {
        Command::Check { paths } => check(&paths, opts, out, &mut diag),
        Command::Type(q) => query(&q, opts, out, &mut diag, QueryKind::Type),
        Command::Normalize { query: q, unfold } => {
            query(&q, opts, out, &mut diag, QueryKind::Normalize(unfold))
        }
        Command::Axioms(q) => query(&q, opts, out, &mut diag, QueryKind::Axioms),
        Command::ModelTest { vectors } => model_test(vectors.as_deref(), cli.fuel, out, &mut diag),
    }
}

fn check(paths: &[PathBuf], opts: Options, out: &mut dyn Write, diag: &mut Diag) -> i32 {
    let mut session = match Session::new(opts.clone()) {
        Ok(s) => s,
        Err(e) => return diag.load(&e),
    };
    for p in paths {
        if p.is_dir() && p.join(MANIFEST).is_file() {
            let report = match corpus::check_corpus_in(&mut session, p) {
                Ok(r) => r,
                Err(e) => return diag.load(&e),
            };
            for (entry, uses) in &report.files {
                let _ = writeln!(out, "ok {} ({} declarations)", entry.path, uses.len());
            }
            let bad: Vec<_> = report.violations().collect();
            for v in &bad {
                let _ = writeln!(
                    diag.err,
                    "error[UnexpectedAxiom]: {} uses {}",
                    v.name,
                    join(&v.unexpected)
                );
            }
            if !bad.is_empty() {
                return 1;
            }
            continue;
        }
        let before = session.order.len();
        if let Err(e) = session.load_path(p) {
            return diag.load(&e);
        }
        for f in &session.order[before..] {
            let n = session.file_names(f).map_or(0, |n| n.len());
            let _ = writeln!(out, "ok {} ({n} declarations)", f.display());
        }
    }
    let _ = writeln!(
        out,
        "checked {} declarations in {:.2?}",
        session.report.decls.len(),
        session.report.elapsed
    );
    0
}

enum QueryKind {
    Type,
    Normalize(bool),
    Axioms,
}

fn query(q: &Query, opts: Options, out: &mut dyn Write, diag: &mut Diag, kind: QueryKind) -> i32 {
    let src = q.expr.join(" ");
    let mut session = match Session::new(opts) {
        Ok(s) => s,
        Err(e) => return diag.load(&e),
    };
    for p in &q.lib {
        if let Err(e) = session.load_path(p) {
            return diag.load(&e);
        }
    }
    if q.lib.is_empty() {
        if let Err(e) = autoload(&mut session, &src) {
            return diag.load(&e);
        }
    }
    let global = session
        .resolve_global(src.trim())
        .and_then(|n| session.kernel.lookup(&n).cloned());
    let k = &session.kernel;
    match kind {
        QueryKind::Axioms => {
            let Some(g) = global else {
                return diag.ty(&TypeError::UnknownName(src.trim().into()));
            };
            match k.used_axioms(&g.name) {
                Ok(set) => {
                    let _ = writeln!(out, "{{{}}}", join(&set));
                    0
                }
                Err(e) => diag.ty(&e),
            }
        }
        QueryKind::Type => {
            let ty = match &global {
                Some(g) => match &g.ty_term {
                    Some(t) => t.clone(),
                    None => {
                        let _ = writeln!(out, "{} is schematic: its type depends on its arguments", g.name);
                        return 0;
                    }
                },
                None => {
                    let t = match session.expression(&src) {
                        Ok(t) => t,
                        Err(e) => return diag.load(&e),
                    };
                    match k.infer_closed(&t) {
                        Ok(v) => readback_with(Unfold::Never, 0, &v),
                        Err(e) => return diag.ty(&e),
                    }
                }
            };
            let nf = readback_with(Unfold::Never, 0, &eval(&Env::new(), &ty));
            let _ = writeln!(out, "{}", print_type(&restore_el(&nf)));
            0
        }
        QueryKind::Normalize(unfold) => {
            let term: Term = match &global {
                Some(g) => match &g.body {
                    Some(b) => b.clone(),
                    None => {
                        let _ = writeln!(out, "{} is an axiom", g.name);
                        return 0;
                    }
                },
                None => match session.expression(&src) {
                    Ok(t) => {
                        if let Err(e) = k.infer_closed(&t) {
                            return diag.ty(&e);
                        }
                        t
                    }
                    Err(e) => return diag.load(&e),
                },
            };
            let v = eval(&Env::new(), &term);
            let mode = if unfold { Unfold::Always(&k.globals) } else { Unfold::Never };
            let _ = writeln!(out, "{}", print_term(&readback_with(mode, 0, &v)));
            0
        }
    }
}

/// Load `stem.smltt` from the library directory for every qualified name
/// `stem.x` mentioned in a query.
fn autoload(session: &mut Session, src: &str) -> Result<(), LoadError> {
    let dir = std::env::var(LIBRARY_ENV).unwrap_or_else(|_| "stdlib".into());
    let dir = Path::new(&dir);
    let stems: BTreeSet<&str> = src
        .split(|c: char| !(c.is_alphanumeric() || c == '.' || c == '-' || c == '_' || c == '\''))
        .filter_map(|w| w.split_once('.').map(|(s, _)| s))
        .filter(|s| !s.is_empty())
        .collect();
    for stem in stems {
        let f = dir.join(format!("{stem}.smltt"));
        if f.is_file() {
            session.load_file(&f)?;
        }
    }
    Ok(())
}

fn model_test(vectors: Option<&Path>, fuel: u64, out: &mut dyn Write, diag: &mut Diag) -> i32 {
    let text = match vectors {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => {
                return diag.load(&LoadError::Io {
                    path: p.display().to_string(),
                    message: e.to_string(),
                })
            }
        },
        None => model::vectors::DEFAULT_VECTORS.to_string(),
    };
    let file = vectors.map_or("<default vectors>".to_string(), |p| p.display().to_string());
    let parsed = match model::vectors::parse(&text) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(diag.err, "error[MalformedVectors]: {file}: {e}");
            return 2;
        }
    };
    let mut failed = 0;
    for (n, v) in parsed.iter().enumerate() {
        let r = model::vectors::run(v, fuel);
        let _ = writeln!(
            out,
            "{} vector {} ({}): {}",
            if r.pass { "pass" } else { "FAIL" },
            n + 1,
            v.kind(),
            r.detail
        );
        if !r.pass {
            failed += 1;
        }
    }
    let _ = writeln!(out, "{} of {} vectors passed", parsed.len() - failed, parsed.len());
    i32::from(failed > 0)
}

fn join<T: std::fmt::Display>(set: &BTreeSet<T>) -> String {
    set.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
}
