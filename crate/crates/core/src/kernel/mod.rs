//! The trusted kernel: bidirectional checking of core terms against a
//! signature of globals.

pub mod build;
pub mod check;
pub mod context;
pub mod error;
pub mod prelude;

use std::sync::Arc;

pub use check::{is_large_former, Checker, FUNEXT};
pub use context::{GlobalEntry, GlobalKind, Globals, Locals, Origin};
pub use error::TypeError;

use crate::nbe::{eval, Env, Val};
use crate::syntax::{Name, Term, TopLevelDecl};

/// A signature together with the rules for extending it.
#[derive(Clone)]
pub struct Kernel {
    pub globals: Globals,
}

impl Default for Kernel {
    fn default() -> Self {
        Self::new()
    }
}

impl Kernel {
    /// A kernel holding only the built-in constants. Their types are
    /// checked in the empty signature before registration.
    pub fn new() -> Self {
        let mut k = Kernel {
            globals: Globals::default(),
        };
        for (name, ty) in prelude::primitive_types() {
            Checker::new(&k.globals)
                .check_type(&Locals::new(), &ty)
                .expect("primitive signature is well formed");
            k.register(name.into(), ty, None, GlobalKind::Primitive, Origin::Builtin);
        }
        k.globals.insert(GlobalEntry {
            name: FUNEXT.into(),
            ty_term: None,
            ty: None,
            body: None,
            value: None,
            kind: GlobalKind::Axiom,
            origin: Origin::Builtin,
        });
        k
    }

    fn register(&mut self, name: Name, ty: Term, body: Option<Term>, kind: GlobalKind, origin: Origin) {
        let env = Env::new();
        self.globals.insert(GlobalEntry {
            name,
            ty: Some(eval(&env, &ty)),
            value: body.as_ref().map(|b| eval(&env, b)),
            ty_term: Some(ty),
            body,
            kind,
            origin,
        });
    }

    pub fn checker(&self) -> Checker<'_> {
        Checker::new(&self.globals)
    }

    /// Check a declaration and add it to the signature. Axioms are accepted
    /// only from the prelude unless `allow_axioms` is set.
    pub fn check_decl(
        &mut self,
        decl: &TopLevelDecl,
        origin: Origin,
        allow_axioms: bool,
    ) -> Result<(), TypeError> {
        if self.globals.contains(&decl.name) {
            return Err(TypeError::DuplicateName(decl.name.clone()));
        }
        if decl.is_axiom() && origin != Origin::Prelude && !allow_axioms {
            return Err(TypeError::AxiomOutsidePrelude(decl.name.clone()));
        }
        for t in std::iter::once(&decl.declared_type).chain(decl.body.as_ref()) {
            if !t.is_well_scoped(0) {
                return Err(TypeError::IllScoped(crate::frontend::print::print_term(t)));
            }
        }
        let ctx = Locals::new();
        let chk = self.checker();
        chk.check_type(&ctx, &decl.declared_type)?;
        if let Some(body) = &decl.body {
            let ty = eval(&Env::new(), &decl.declared_type);
            chk.check(&ctx, body, &ty)?;
        }
        let kind = if decl.is_axiom() {
            GlobalKind::Axiom
        } else {
            GlobalKind::Definition
        };
        self.register(
            decl.name.clone(),
            decl.declared_type.clone(),
            decl.body.clone(),
            kind,
            origin,
        );
        Ok(())
    }

    /// Infer the type of a closed term.
    pub fn infer_closed(&self, t: &Term) -> Result<Val, TypeError> {
        if !t.is_well_scoped(0) {
            return Err(TypeError::IllScoped(crate::frontend::print::print_term(t)));
        }
        self.checker().infer(&Locals::new(), t)
    }

    pub fn used_axioms(&self, name: &str) -> Result<std::collections::BTreeSet<Name>, TypeError> {
        self.globals.used_axioms(name)
    }

    pub fn lookup(&self, name: &str) -> Option<&GlobalEntry> {
        self.globals.get(name)
    }

    pub fn names(&self) -> Vec<Arc<str>> {
        self.globals.iter().map(|e| e.name.clone()).collect()
    }
}
