//! Combinatory logic with pairing as a partial combinatory algebra.
//!
//! Application is weak: nothing reduces under a partial application.
//! "Defined" always means "reaches weak head normal form within the fuel".

use std::fmt;
use std::rc::Rc;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cl {
    S,
    K,
    Pr,
    Pr1,
    Pr2,
    /// An inert atom: a realiser token, or a variable awaiting abstraction.
    Atom(Rc<str>),
    App(Rc<Cl>, Rc<Cl>),
}

impl Cl {
    pub fn atom(name: &str) -> Cl {
        Cl::Atom(name.into())
    }

    pub fn app(f: Cl, a: Cl) -> Cl {
        Cl::App(Rc::new(f), Rc::new(a))
    }

    /// Left-nested application `f a1 a2 ...`.
    pub fn apps(f: Cl, args: impl IntoIterator<Item = Cl>) -> Cl {
        args.into_iter().fold(f, Cl::app)
    }

    /// `I = S K K`.
    pub fn id() -> Cl {
        Cl::apps(Cl::S, [Cl::K, Cl::K])
    }

    pub fn pair(a: Cl, b: Cl) -> Cl {
        Cl::apps(Cl::Pr, [a, b])
    }

    pub fn mentions(&self, x: &str) -> bool {
        match self {
            Cl::Atom(a) => &**a == x,
            Cl::App(f, a) => f.mentions(x) || a.mentions(x),
            _ => false,
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Cl::App(f, a) => 1 + f.size() + a.size(),
            _ => 1,
        }
    }

    /// Replace the atom `x` by `v`.
    pub fn subst(&self, x: &str, v: &Cl) -> Cl {
        match self {
            Cl::Atom(a) if &**a == x => v.clone(),
            Cl::App(f, a) => Cl::app(f.subst(x, v), a.subst(x, v)),
            t => t.clone(),
        }
    }

    /// Head and arguments of a left-nested application.
    pub fn spine(&self) -> (&Cl, Vec<&Cl>) {
        let mut args = Vec::new();
        let mut t = self;
        while let Cl::App(f, a) = t {
            args.push(&**a);
            t = f;
        }
        args.reverse();
        (t, args)
    }
}

impl fmt::Display for Cl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cl::S => write!(f, "S"),
            Cl::K => write!(f, "K"),
            Cl::Pr => write!(f, "Pr"),
            Cl::Pr1 => write!(f, "Pr1"),
            Cl::Pr2 => write!(f, "Pr2"),
            Cl::Atom(a) => write!(f, "{a}"),
            Cl::App(..) => {
                let (h, args) = self.spine();
                write!(f, "({h}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for Cl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of fuel-bounded reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Value(Cl),
    Diverged,
}

impl Outcome {
    pub fn value(self) -> Option<Cl> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Diverged => None,
        }
    }
}

/// Reduce to weak head normal form, spending one unit of fuel per rule.
pub fn reduce(t: &Cl, fuel: u64) -> Outcome {
    let mut fuel = fuel;
    whnf(t.clone(), &mut fuel)
}

fn whnf(t: Cl, fuel: &mut u64) -> Outcome {
    // Spine as a stack: the last element is the first argument.
    let mut head = t;
    let mut stack: Vec<Rc<Cl>> = Vec::new();
    loop {
        if let Cl::App(f, a) = head {
            stack.push(a);
            head = (*f).clone();
            continue;
        }
        let arity = match head {
            Cl::K => 2,
            Cl::S => 3,
            Cl::Pr => 3,
            Cl::Pr1 | Cl::Pr2 => 1,
            _ => usize::MAX,
        };
        if stack.len() < arity {
            let mut v = head;
            while let Some(a) = stack.pop() {
                v = Cl::App(Rc::new(v), a);
            }
            return Outcome::Value(v);
        }
        if *fuel == 0 {
            return Outcome::Diverged;
        }
        *fuel -= 1;
        match head {
            Cl::K => {
                let x = stack.pop().unwrap();
                stack.pop();
                head = (*x).clone();
            }
            Cl::S => {
                let x = stack.pop().unwrap();
                let y = stack.pop().unwrap();
                let z = stack.pop().unwrap();
                stack.push(Rc::new(Cl::App(y, z.clone())));
                stack.push(z);
                head = (*x).clone();
            }
            // Pr a b c = c a b, so pairs are also Church pairs.
            Cl::Pr => {
                let a = stack.pop().unwrap();
                let b = stack.pop().unwrap();
                let c = stack.pop().unwrap();
                stack.push(b);
                stack.push(a);
                head = (*c).clone();
            }
            Cl::Pr1 | Cl::Pr2 => {
                let p = stack.pop().unwrap();
                let first = matches!(head, Cl::Pr1);
                match whnf((*p).clone(), fuel) {
                    Outcome::Diverged => return Outcome::Diverged,
                    Outcome::Value(v) => {
                        let (h, args) = v.spine();
                        if *h == Cl::Pr && args.len() == 2 {
                            head = if first { args[0].clone() } else { args[1].clone() };
                        } else {
                            // Projection of a non-pair is stuck.
                            let mut w = Cl::app(if first { Cl::Pr1 } else { Cl::Pr2 }, v);
                            while let Some(a) = stack.pop() {
                                w = Cl::App(Rc::new(w), a);
                            }
                            return Outcome::Value(w);
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }
}

/// Depth to which [`kleene_eq`] compares weak head normal forms.
pub const COMPARE_DEPTH: usize = 24;

/// Kleene equality at the given fuel: both sides undefined, or both
/// defined with weak head normal forms that agree in head and arity and
/// whose arguments are again Kleene equal, down to [`COMPARE_DEPTH`].
pub fn kleene_eq(a: &Cl, b: &Cl, fuel: u64) -> bool {
    eq_at(a, b, fuel, COMPARE_DEPTH)
}

fn eq_at(a: &Cl, b: &Cl, fuel: u64, depth: usize) -> bool {
    if a == b || depth == 0 {
        return true;
    }
    match (reduce(a, fuel), reduce(b, fuel)) {
        (Outcome::Diverged, Outcome::Diverged) => true,
        (Outcome::Value(x), Outcome::Value(y)) => {
            if x == y {
                return true;
            }
            let (hx, ax) = x.spine();
            let (hy, ay) = y.spine();
            hx == hy
                && ax.len() == ay.len()
                && ax.iter().zip(&ay).all(|(p, q)| eq_at(p, q, fuel, depth - 1))
        }
        _ => false,
    }
}

/// Bracket abstraction `Λx. t` without η-contraction, so an abstraction
/// is always a value.
pub fn bracket(x: &str, t: &Cl) -> Cl {
    if !t.mentions(x) {
        return Cl::app(Cl::K, t.clone());
    }
    match t {
        Cl::Atom(_) => Cl::id(),
        Cl::App(f, a) => Cl::apps(Cl::S, [bracket(x, f), bracket(x, a)]),
        _ => unreachable!("constants mention no atom"),
    }
}

/// Nested abstraction `Λx1. ... Λxn. t`.
pub fn lambdas(xs: &[&str], t: &Cl) -> Cl {
    xs.iter().rev().fold(t.clone(), |acc, x| bracket(x, &acc))
}

fn at(x: &str) -> Cl {
    Cl::atom(x)
}

/// A fixpoint combinator: with `X := Λx.Λf.Λa. f (x x f) a`, `fix := X X`.
/// `fix f` is a value and `fix f a ≃ f (fix f) a`.
pub fn pca_fix() -> Cl {
    let body = Cl::apps(
        at("f"),
        [Cl::apps(at("x"), [at("x"), at("f")]), at("a")],
    );
    let x = lambdas(&["x", "f", "a"], &body);
    Cl::app(x.clone(), x)
}

/// Check `fix f a ≃ f (fix f) a` at the given fuel.
pub fn check_fix_law(f: &Cl, a: &Cl, fuel: u64) -> bool {
    let fix_f = Cl::app(pca_fix(), f.clone());
    let lhs = Cl::app(fix_f.clone(), a.clone());
    let rhs = Cl::apps(f.clone(), [fix_f, a.clone()]);
    kleene_eq(&lhs, &rhs, fuel)
}

/// `φ := Λf.Λe.Λk.Λn. e k n (Λm. f e k m)`.
pub fn phi_realiser() -> Cl {
    let inner = bracket("m", &Cl::apps(at("f"), [at("e"), at("k"), at("m")]));
    let body = Cl::apps(at("e"), [at("k"), at("n"), inner]);
    lambdas(&["f", "e", "k", "n"], &body)
}

/// The realiser of the size fixpoint, `fix φ`.
pub fn size_fix_realiser() -> Cl {
    Cl::app(pca_fix(), phi_realiser())
}

/// Check `F fr gr n ≃ fr gr n (Λm. F fr gr m)` for `F := fix φ`.
pub fn check_phi_law(fr: &Cl, gr: &Cl, n: &Cl, fuel: u64) -> bool {
    let f = size_fix_realiser();
    let lhs = Cl::apps(f.clone(), [fr.clone(), gr.clone(), n.clone()]);
    let rec = bracket("m'", &Cl::apps(f, [fr.clone(), gr.clone(), at("m'")]));
    let rhs = Cl::apps(fr.clone(), [gr.clone(), n.clone(), rec]);
    kleene_eq(&lhs, &rhs, fuel)
}
