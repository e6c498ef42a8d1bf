//! Global and local typing contexts.

use std::collections::{BTreeSet, HashMap};

use super::TypeError;
use crate::nbe::{Definitions, Env, Level, Val, Value};
use crate::syntax::{Name, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalKind {
    /// Trusted constant with no computation that does not count as an axiom
    /// (the ≤-proof constants).
    Primitive,
    /// Trusted constant recorded by the axiom audit.
    Axiom,
    /// Checked definition; unfolds during conversion.
    Definition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Builtin,
    Prelude,
    File(String),
}

#[derive(Clone)]
pub struct GlobalEntry {
    pub name: Name,
    /// Declared type as a term. `None` only for schematic constants whose
    /// type is computed per use.
    pub ty_term: Option<Term>,
    pub ty: Option<Val>,
    pub body: Option<Term>,
    pub value: Option<Val>,
    pub kind: GlobalKind,
    pub origin: Origin,
}

impl GlobalEntry {
    pub fn is_axiom(&self) -> bool {
        self.kind == GlobalKind::Axiom
    }
}

/// The top-level signature: every global in declaration order.
#[derive(Clone, Default)]
pub struct Globals {
    entries: HashMap<Name, GlobalEntry>,
    order: Vec<Name>,
}

impl Globals {
    pub fn get(&self, name: &str) -> Option<&GlobalEntry> {
        self.entries.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub(crate) fn insert(&mut self, entry: GlobalEntry) {
        self.order.push(entry.name.clone());
        self.entries.insert(entry.name.clone(), entry);
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Globals in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = &GlobalEntry> {
        self.order.iter().map(move |n| &self.entries[n])
    }

    /// Axioms transitively referenced by the type or body of `name`.
    pub fn used_axioms(&self, name: &str) -> Result<BTreeSet<Name>, TypeError> {
        let root = self
            .get(name)
            .ok_or_else(|| TypeError::UnknownName(Name::from(name)))?;
        let mut seen = BTreeSet::new();
        let mut axioms = BTreeSet::new();
        let mut stack = vec![root.name.clone()];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            let Some(e) = self.get(&n) else { continue };
            if e.is_axiom() {
                axioms.insert(n.clone());
            }
            let mut refs = Vec::new();
            if let Some(t) = &e.ty_term {
                t.constants(&mut refs);
            }
            if let Some(b) = &e.body {
                b.constants(&mut refs);
            }
            stack.extend(refs);
        }
        Ok(axioms)
    }
}

impl Definitions for Globals {
    fn definition(&self, name: &str) -> Option<Val> {
        self.entries.get(name).and_then(|e| e.value.clone())
    }
}

/// Local context: the value of each bound variable (for evaluation) and
/// its type, indexed by level.
#[derive(Clone, Default)]
pub struct Locals {
    pub env: Env,
    pub types: Vec<Val>,
}

impl Locals {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&self) -> Level {
        self.types.len()
    }

    /// Extend with a fresh variable of type `ty`.
    pub fn bind(&self, ty: Val) -> Locals {
        let l = self.depth();
        let mut types = self.types.clone();
        types.push(ty);
        Locals {
            env: self.env.push(Value::var(l)),
            types,
        }
    }

    /// Extend with a bound variable standing for a known value.
    pub fn define(&self, value: Val, ty: Val) -> Locals {
        let mut types = self.types.clone();
        types.push(ty);
        Locals {
            env: self.env.push(value),
            types,
        }
    }

    /// The variable most recently bound, as a value.
    pub fn last_var(&self) -> Val {
        Value::var(self.depth() - 1)
    }

    pub fn lookup(&self, idx: usize) -> Option<&Val> {
        let d = self.depth();
        (idx < d).then(|| &self.types[d - 1 - idx])
    }
}
