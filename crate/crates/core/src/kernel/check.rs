//! Bidirectional type checking.
//!
//! `infer` synthesizes a type for eliminations, variables, constants and
//! annotated terms; `check` handles introduction forms against a known type
//! and falls back to inference plus conversion. Types are themselves checked
//! by `check_type`: the large formers plus `El` of a code.

use std::sync::Arc;

use super::build::Build;
use super::context::{Globals, Locals};
use super::TypeError;
use crate::frontend::print::print_term_in;
use crate::nbe::eval::{el, proj1};
use crate::nbe::{conv, convert, eval, force, readback, Closure, Val, Value};
use crate::syntax::{subst_top, tm, weaken, Term};

type Result<T> = std::result::Result<T, TypeError>;

/// Name of the schematic function-extensionality constant.
pub const FUNEXT: &str = "funext";

pub struct Checker<'g> {
    pub globals: &'g Globals,
}

/// Large type formers. None of these may stand where a code in `U` is
/// expected.
pub fn is_large_former(t: &Term) -> bool {
    match t {
        Term::U
        | Term::Size
        | Term::Pi(..)
        | Term::Sigma(..)
        | Term::Id(..)
        | Term::Bot
        | Term::Top
        | Term::Bool
        | Term::El(_) => true,
        Term::Ann(t, _) => is_large_former(t),
        _ => false,
    }
}

/// The code naming a large type term, if it has one.
pub fn to_code(t: &Term) -> Option<Term> {
    Some(match t {
        Term::Bot => Term::BotCode,
        Term::Top => Term::TopCode,
        Term::Bool => Term::BoolCode,
        Term::El(c) => (**c).clone(),
        Term::Pi(a, b) => Term::PiCode(tm(to_code(a)?), tm(to_code(b)?)),
        Term::Sigma(a, b) => Term::SigCode(tm(to_code(a)?), tm(to_code(b)?)),
        Term::Id(a, x, y) => Term::IdCode(tm(to_code(a)?), x.clone(), y.clone()),
        Term::LeqCode(..) | Term::ExistsCode(_) | Term::ForallCode(_) => t.clone(),
        _ => return None,
    })
}

/// Replace the bound variable of a level-form family with `s`.
fn instantiate(family: &Term, under: usize, s: &Term) -> Term {
    match family {
        Term::Var(i) if *i == under => s.clone(),
        Term::Var(_) => family.clone(),
        _ => family.map_children(|c, k| instantiate(c, under + k, s)),
    }
}

impl<'g> Checker<'g> {
    pub fn new(globals: &'g Globals) -> Self {
        Checker { globals }
    }

    fn force(&self, v: &Val) -> Val {
        force(self.globals, v)
    }

    fn conv(&self, ctx: &Locals, a: &Val, b: &Val) -> bool {
        conv(self.globals, ctx.depth(), a, b)
    }

    pub fn show(&self, ctx: &Locals, v: &Val) -> String {
        print_term_in(&readback(ctx.depth(), v), ctx.depth())
    }

    fn show_tm(&self, ctx: &Locals, t: &Term) -> String {
        print_term_in(t, ctx.depth())
    }

    fn mismatch(&self, ctx: &Locals, expected: &Val, found: &Val) -> TypeError {
        TypeError::TypeMismatch {
            expected: self.show(ctx, expected),
            found: self.show(ctx, found),
        }
    }

    fn expected(&self, ctx: &Locals, what: &str, found: &Val) -> TypeError {
        TypeError::TypeMismatch {
            expected: what.to_string(),
            found: self.show(ctx, found),
        }
    }

    fn size() -> Val {
        Arc::new(Value::Size)
    }

    fn universe() -> Val {
        Arc::new(Value::U)
    }

    /// Check that `t` is a code in `U`, reporting large types as smallness
    /// violations of the rule named by `rule`.
    pub fn check_small(&self, ctx: &Locals, t: &Term, rule: &str) -> Result<()> {
        if is_large_former(t) {
            return Err(TypeError::SmallnessViolation(format!(
                "{rule} must be a code in U, found the large type {}",
                self.show_tm(ctx, t)
            )));
        }
        self.check(ctx, t, &Self::universe())
    }

    pub fn check_type(&self, ctx: &Locals, t: &Term) -> Result<()> {
        match t {
            Term::U | Term::Size | Term::Bot | Term::Top | Term::Bool => Ok(()),
            Term::Pi(a, b) | Term::Sigma(a, b) => {
                self.check_type(ctx, a)?;
                let av = eval(&ctx.env, a);
                self.check_type(&ctx.bind(av), b)
            }
            Term::Id(a, x, y) => {
                self.check_type(ctx, a)?;
                let av = eval(&ctx.env, a);
                self.check(ctx, x, &av)?;
                self.check(ctx, y, &av)
            }
            Term::El(c) => self.check_small(ctx, c, "the argument of El"),
            // These codes decode to themselves.
            Term::LeqCode(..) | Term::ExistsCode(_) | Term::ForallCode(_) => {
                self.check(ctx, t, &Self::universe())
            }
            _ => {
                let ty = self.infer(ctx, t)?;
                Err(TypeError::TypeMismatch {
                    expected: "a type".into(),
                    found: format!(
                        "{} : {}",
                        self.show_tm(ctx, t),
                        self.show(ctx, &ty)
                    ),
                })
            }
        }
    }

    pub fn infer(&self, ctx: &Locals, t: &Term) -> Result<Val> {
        let d = ctx.depth();
        let ev = |t: &Term| eval(&ctx.env, t);
        let clo = |b: &Term| Closure::new(ctx.env.clone(), tm(b.clone()));
        match t {
            Term::Var(i) => ctx.lookup(*i).cloned().ok_or(TypeError::UnboundVariable(*i)),
            Term::Const(n) if &**n == FUNEXT => Err(TypeError::CannotInfer(
                "funext must be applied to a function type and two functions".into(),
            )),
            Term::Const(n) => self
                .globals
                .get(n)
                .and_then(|e| e.ty.clone())
                .ok_or_else(|| TypeError::UnknownName(n.clone())),

            Term::App(f, a) => {
                if let Term::Lam(body) = &**f {
                    let aty = self.infer(ctx, a)?;
                    return self.infer(&ctx.define(ev(a), aty), body);
                }
                if let Some((ty, f1, g1)) = funext_args(t) {
                    return self.funext(ctx, ty, f1, g1);
                }
                let fty = self.infer(ctx, f)?;
                match &*self.force(&fty) {
                    Value::Pi(dom, cod) => {
                        self.check(ctx, a, dom)?;
                        Ok(cod.apply(ev(a)))
                    }
                    _ => Err(TypeError::NotAFunction(format!(
                        "{} : {}",
                        self.show_tm(ctx, f),
                        self.show(ctx, &fty)
                    ))),
                }
            }

            Term::Pair(a, b) => {
                let aty = self.infer(ctx, a)?;
                let bty = self.infer(ctx, b)?;
                let bt = weaken(&readback(d, &bty), 0, 1);
                Ok(Arc::new(Value::Sigma(aty, clo(&bt))))
            }
            Term::Proj1(p) => {
                let pty = self.infer(ctx, p)?;
                match &*self.force(&pty) {
                    Value::Sigma(a, _) => Ok(a.clone()),
                    _ => Err(self.expected(ctx, "a Σ-type", &pty)),
                }
            }
            Term::Proj2(p) => {
                let pty = self.infer(ctx, p)?;
                match &*self.force(&pty) {
                    Value::Sigma(_, b) => Ok(b.apply(proj1(ev(p)))),
                    _ => Err(self.expected(ctx, "a Σ-type", &pty)),
                }
            }

            Term::Refl(x) => {
                let a = self.infer(ctx, x)?;
                let xv = ev(x);
                Ok(Arc::new(Value::Id(a, xv.clone(), xv)))
            }
            Term::J {
                motive,
                base,
                lhs,
                rhs,
                path,
            } => self.infer_j(ctx, motive, base, lhs, rhs, path),

            Term::BotInd { motive, scrut } => {
                self.check(ctx, scrut, &Arc::new(Value::Bot))?;
                self.check_type(&ctx.bind(Arc::new(Value::Bot)), motive)?;
                Ok(clo(motive).apply(ev(scrut)))
            }
            Term::Star => Ok(Arc::new(Value::Top)),
            Term::TopInd {
                motive,
                base,
                scrut,
            } => {
                self.check_type(&ctx.bind(Arc::new(Value::Top)), motive)?;
                self.check(ctx, base, &clo(motive).apply(Arc::new(Value::Star)))?;
                self.check(ctx, scrut, &Arc::new(Value::Top))?;
                Ok(clo(motive).apply(ev(scrut)))
            }
            Term::Tt | Term::Ff => Ok(Arc::new(Value::Bool)),
            Term::BoolInd {
                motive,
                on_tt,
                on_ff,
                scrut,
            } => {
                self.check_type(&ctx.bind(Arc::new(Value::Bool)), motive)?;
                self.check(ctx, on_tt, &clo(motive).apply(Arc::new(Value::Tt)))?;
                self.check(ctx, on_ff, &clo(motive).apply(Arc::new(Value::Ff)))?;
                self.check(ctx, scrut, &Arc::new(Value::Bool))?;
                Ok(clo(motive).apply(ev(scrut)))
            }

            Term::Sz0 => Ok(Self::size()),
            Term::SzSuc(s) => {
                self.check(ctx, s, &Self::size())?;
                Ok(Self::size())
            }
            Term::LeqCode(i, j) => {
                self.check(ctx, i, &Self::size())?;
                self.check(ctx, j, &Self::size())?;
                Ok(Self::universe())
            }

            Term::Fix(f) => {
                let c = self.fix_family(ctx, f)?;
                Ok(ev(&Term::Pi(tm(Term::Size), tm(c))))
            }
            Term::FixBeta(f) => {
                let c = self.fix_family(ctx, f)?;
                Ok(ev(&fixbeta_type(d, f, &c)))
            }

            Term::ExistsCode(b) | Term::ForallCode(b) => {
                let rule = if matches!(t, Term::ExistsCode(_)) {
                    "the body of ∃"
                } else {
                    "the body of ∀"
                };
                self.check_small(&ctx.bind(Self::size()), b, rule)?;
                Ok(Self::universe())
            }
            Term::ExPair(s, a) => {
                self.check(ctx, s, &Self::size())?;
                let aty = self.infer(ctx, a)?;
                let code = self.codify(ctx, &aty)?;
                Ok(Arc::new(Value::ExistsCode(clo(&weaken(&code, 0, 1)))))
            }
            Term::ExInd {
                motive,
                branch,
                scrut,
            } => {
                let sty = self.infer(ctx, scrut)?;
                let body = match &*self.force(&sty) {
                    Value::ExistsCode(body) => body.clone(),
                    _ => return Err(self.expected(ctx, "an ∃-type", &sty)),
                };
                let ex = Arc::new(Value::ExistsCode(body.clone()));
                self.check_small(&ctx.bind(ex), motive, "the motive of ∃-induction")?;
                let inner = ctx.bind(Self::size());
                let i = inner.last_var();
                let inner = inner.bind(el(body.apply(i.clone())));
                let x = inner.last_var();
                let pair = Arc::new(Value::ExPair(i, x));
                self.check(&inner, branch, &el(clo(motive).apply(pair)))?;
                Ok(el(clo(motive).apply(ev(scrut))))
            }
            Term::ForLam(b) => {
                let inner = ctx.bind(Self::size());
                let bty = self.infer(&inner, b)?;
                let code = self.codify(&inner, &bty)?;
                Ok(Arc::new(Value::ForallCode(clo(&code))))
            }
            Term::ForApp(f, s) => {
                let fty = self.infer(ctx, f)?;
                match &*self.force(&fty) {
                    Value::ForallCode(body) => {
                        self.check(ctx, s, &Self::size())?;
                        Ok(el(body.apply(ev(s))))
                    }
                    _ => Err(self.expected(ctx, "a ∀-type", &fty)),
                }
            }

            Term::BotCode | Term::TopCode | Term::BoolCode => Ok(Self::universe()),
            Term::PiCode(a, b) | Term::SigCode(a, b) => {
                self.check_small(ctx, a, "the domain of a code")?;
                let dom = el(ev(a));
                self.check_small(&ctx.bind(dom), b, "the codomain of a code")?;
                Ok(Self::universe())
            }
            Term::IdCode(a, x, y) => {
                self.check_small(ctx, a, "the type of an identity code")?;
                let av = el(ev(a));
                self.check(ctx, x, &av)?;
                self.check(ctx, y, &av)?;
                Ok(Self::universe())
            }

            Term::Ann(x, ty) => {
                self.check_type(ctx, ty)?;
                let tv = ev(ty);
                self.check(ctx, x, &tv)?;
                Ok(tv)
            }

            Term::Lam(_) => Err(TypeError::CannotInfer(self.show_tm(ctx, t))),
            Term::U
            | Term::El(_)
            | Term::Pi(..)
            | Term::Sigma(..)
            | Term::Id(..)
            | Term::Bot
            | Term::Top
            | Term::Bool
            | Term::Size => Err(TypeError::SmallnessViolation(format!(
                "the large type {} is used as a term",
                self.show_tm(ctx, t)
            ))),
        }
    }

    pub fn check(&self, ctx: &Locals, t: &Term, ty: &Val) -> Result<()> {
        let d = ctx.depth();
        let fty = self.force(ty);
        match (t, &*fty) {
            (Term::Lam(b), Value::Pi(a, cod)) => {
                let inner = ctx.bind(a.clone());
                self.check(&inner, b, &cod.apply(inner.last_var()))
            }
            (Term::Lam(_), _) => Err(self.expected(ctx, "a Π-type (for a λ)", ty)),
            (Term::ForLam(b), Value::ForallCode(body)) => {
                let inner = ctx.bind(Self::size());
                self.check(&inner, b, &el(body.apply(inner.last_var())))
            }
            (Term::ForLam(_), _) => Err(self.expected(ctx, "a ∀-type (for a ∀-λ)", ty)),
            (Term::Pair(a, b), Value::Sigma(aty, bty)) => {
                self.check(ctx, a, aty)?;
                self.check(ctx, b, &bty.apply(eval(&ctx.env, a)))
            }
            (Term::ExPair(s, a), Value::ExistsCode(body)) => {
                self.check(ctx, s, &Self::size())?;
                self.check(ctx, a, &el(body.apply(eval(&ctx.env, s))))
            }
            (Term::Refl(x), Value::Id(a, l, r)) => {
                self.check(ctx, x, a)?;
                let xv = eval(&ctx.env, x);
                for side in [l, r] {
                    if !convert(self.globals, d, &xv, side, a) {
                        return Err(TypeError::TypeMismatch {
                            expected: self.show(ctx, ty),
                            found: format!("refl {}", self.show(ctx, &xv)),
                        });
                    }
                }
                Ok(())
            }
            (Term::Fix(f), _) => {
                let c = self.fix_target(ctx, &fty)?;
                self.check(ctx, f, &eval(&ctx.env, &fix_functional_type(d, &c)))
            }
            (Term::FixBeta(f), _) => {
                let c = self.fixbeta_target(ctx, &fty)?;
                self.check(ctx, f, &eval(&ctx.env, &fix_functional_type(d, &c)))?;
                let want = eval(&ctx.env, &fixbeta_type(d, f, &c));
                if self.conv(ctx, &want, ty) {
                    Ok(())
                } else {
                    Err(self.mismatch(ctx, ty, &want))
                }
            }
            (Term::App(f, a), _) if matches!(&**f, Term::Lam(_)) => {
                let Term::Lam(body) = &**f else { unreachable!() };
                let aty = self.infer(ctx, a)?;
                self.check(&ctx.define(eval(&ctx.env, a), aty), body, ty)
            }
            (_, Value::U) if is_large_former(t) => Err(TypeError::SmallnessViolation(format!(
                "expected a code in U, found the large type {}",
                self.show_tm(ctx, t)
            ))),
            _ => {
                let found = self.infer(ctx, t)?;
                if self.conv(ctx, &found, ty) {
                    Ok(())
                } else {
                    Err(self.mismatch(ctx, ty, &found))
                }
            }
        }
    }

    fn infer_j(
        &self,
        ctx: &Locals,
        motive: &Term,
        base: &Term,
        lhs: &Term,
        rhs: &Term,
        path: &Term,
    ) -> Result<Val> {
        let ev = |t: &Term| eval(&ctx.env, t);
        let (lv, rv, pv) = (ev(lhs), ev(rhs), ev(path));
        let a = match self.infer(ctx, path) {
            Ok(pty) => match &*self.force(&pty) {
                Value::Id(a, x, y) => {
                    for (term, given, side) in [(lhs, &lv, x), (rhs, &rv, y)] {
                        self.check(ctx, term, a)?;
                        if !convert(self.globals, ctx.depth(), given, side, a) {
                            return Err(TypeError::TypeMismatch {
                                expected: format!("path endpoint {}", self.show(ctx, side)),
                                found: self.show(ctx, given),
                            });
                        }
                    }
                    a.clone()
                }
                _ => return Err(self.expected(ctx, "an identity type", &pty)),
            },
            Err(TypeError::CannotInfer(_)) => {
                let a = self.infer(ctx, lhs)?;
                self.check(ctx, rhs, &a)?;
                self.check(ctx, path, &Arc::new(Value::Id(a.clone(), lv.clone(), rv.clone())))?;
                a
            }
            Err(e) => return Err(e),
        };
        let mclo = Closure::new(ctx.env.clone(), tm(motive.clone()));
        let cx = ctx.bind(a.clone());
        let x = cx.last_var();
        let cxy = cx.bind(a.clone());
        let y = cxy.last_var();
        let cxyq = cxy.bind(Arc::new(Value::Id(a.clone(), x.clone(), y)));
        self.check_type(&cxyq, motive)?;
        let refl = Arc::new(Value::Refl(x.clone()));
        self.check(&cx, base, &mclo.apply3(x.clone(), x, refl))?;
        Ok(mclo.apply3(lv, rv, pv))
    }

    /// Read back a type as a code, for inferring `∃`/`∀` bodies.
    fn codify(&self, ctx: &Locals, ty: &Val) -> Result<Term> {
        let t = readback(ctx.depth(), ty);
        to_code(&t).ok_or_else(|| {
            TypeError::CannotInfer(format!(
                "a small body for the type {}; annotate the term",
                self.show_tm(ctx, &t)
            ))
        })
    }

    /// The family `C` (a term under one size binder) of a `fix` functional
    /// whose type can be inferred.
    fn fix_family(&self, ctx: &Locals, f: &Term) -> Result<Term> {
        let d = ctx.depth();
        let fty = self.infer(ctx, f)?;
        let shape = || TypeError::FixShapeMismatch(self.show(ctx, &fty));
        let Value::Pi(dom, cod) = &*self.force(&fty) else {
            return Err(shape());
        };
        if !matches!(&*self.force(dom), Value::Size) {
            return Err(shape());
        }
        let inner = cod.apply(Value::var(d));
        let Value::Pi(_, ret) = &*self.force(&inner) else {
            return Err(shape());
        };
        let c2 = readback(d + 2, &ret.apply(Value::var(d + 1)));
        if c2.mentions(0) {
            return Err(shape());
        }
        let c = subst_top(&c2, &Term::Star);
        self.check(ctx, f, &eval(&ctx.env, &fix_functional_type(d, &c)))?;
        Ok(c)
    }

    /// `C` from a `fix` target `Π i:Size. C i`.
    fn fix_target(&self, ctx: &Locals, ty: &Val) -> Result<Term> {
        let d = ctx.depth();
        match &*self.force(ty) {
            Value::Pi(dom, cod) if matches!(&*self.force(dom), Value::Size) => {
                Ok(readback(d + 1, &cod.apply(Value::var(d))))
            }
            _ => Err(TypeError::FixShapeMismatch(self.show(ctx, ty))),
        }
    }

    /// `C` from a `fixb` target `Π i:Size. Id(C i, _, _)`.
    fn fixbeta_target(&self, ctx: &Locals, ty: &Val) -> Result<Term> {
        let d = ctx.depth();
        if let Value::Pi(dom, cod) = &*self.force(ty) {
            if matches!(&*self.force(dom), Value::Size) {
                if let Value::Id(c, _, _) = &*self.force(&cod.apply(Value::var(d))) {
                    return Ok(readback(d + 1, c));
                }
            }
        }
        Err(TypeError::FixShapeMismatch(self.show(ctx, ty)))
    }

    /// Type of `funext T f g`: `isEquiv (happly f g)` at the function type
    /// `T`, which is either a Π-type or a ∀-code.
    fn funext(&self, ctx: &Locals, ty: &Term, f: &Term, g: &Term) -> Result<Val> {
        let d = ctx.depth();
        self.check_type(ctx, ty)?;
        let tv = eval(&ctx.env, ty);
        self.check(ctx, f, &tv)?;
        self.check(ctx, g, &tv)?;
        let b = Build::new(d);
        let (tyo, fo, go) = (b.outer(ty), b.outer(f), b.outer(g));
        let app = Term::app;
        let template = match &*self.force(&tv) {
            Value::Pi(dom, cod) => {
                let dom_t = b.outer(&readback(d, dom));
                let fam = to_level_family(&b, &readback(d + 1, &cod.apply(Value::var(d))));
                let pw = |x: &Term, y: &Term| {
                    b.pi(dom_t.clone(), |z| {
                        Term::id(
                            instantiate(&fam, 0, &z),
                            app(x.clone(), z.clone()),
                            app(y.clone(), z),
                        )
                    })
                };
                let happly = || b.lam(|p| {
                    b.j(
                        |x, y, _| pw(&x, &y),
                        |x| b.lam(|z| Term::Refl(tm(app(x, z)))),
                        fo.clone(),
                        go.clone(),
                        p,
                    )
                });
                is_equiv(&b, Term::id(tyo, fo.clone(), go.clone()), || pw(&fo, &go), happly)
            }
            Value::ForallCode(body) => {
                let fam = to_level_family(&b, &readback(d + 1, &body.apply(Value::var(d))));
                let pw = |x: &Term, y: &Term| {
                    Term::el(b.forall_code(|z| {
                        Term::IdCode(
                            tm(instantiate(&fam, 0, &z)),
                            tm(Term::ForApp(tm(x.clone()), tm(z.clone()))),
                            tm(Term::ForApp(tm(y.clone()), tm(z))),
                        )
                    }))
                };
                let happly = || b.lam(|p| {
                    b.j(
                        |x, y, _| pw(&x, &y),
                        |x| b.for_lam(|z| Term::Refl(tm(Term::ForApp(tm(x), tm(z))))),
                        fo.clone(),
                        go.clone(),
                        p,
                    )
                });
                is_equiv(&b, Term::id(tyo, fo.clone(), go.clone()), || pw(&fo, &go), happly)
            }
            _ => return Err(self.expected(ctx, "a Π-type or ∀-type for funext", &tv)),
        };
        Ok(eval(&ctx.env, &b.finish(template)))
    }
}

/// Recognize `funext T f g`.
fn funext_args(t: &Term) -> Option<(&Term, &Term, &Term)> {
    let Term::App(h, g) = t else { return None };
    let Term::App(h, f) = &**h else { return None };
    let Term::App(h, ty) = &**h else { return None };
    match &**h {
        Term::Const(n) if &**n == FUNEXT => Some((ty, f, g)),
        _ => None,
    }
}

/// Convert a family term (one binder over depth `base`) to level form,
/// keeping its own bound variable as index 0.
fn to_level_family(b: &Build, fam: &Term) -> Term {
    // Wrapping in a binder lets `outer` treat index 0 as bound.
    match b.outer(&Term::Lam(tm(fam.clone()))) {
        Term::Lam(body) => (*body).clone(),
        _ => unreachable!(),
    }
}

/// The large `isEquiv A B m`: quasi-inverse data plus the triangle coherence.
pub(crate) fn is_equiv(b: &Build, a: Term, bt: impl Fn() -> Term, m: impl Fn() -> Term) -> Term {
    let app = Term::app;
    b.sigma(b.arrow(bt(), a.clone()), |g| {
        b.sigma(
            b.pi(a.clone(), |x| {
                Term::id(a.clone(), app(g.clone(), app(m(), x.clone())), x)
            }),
            |eta| {
                b.sigma(
                    b.pi(bt(), |y| {
                        Term::id(bt(), app(m(), app(g.clone(), y.clone())), y)
                    }),
                    |eps| {
                        b.pi(a.clone(), |x| {
                            let mx = app(m(), x.clone());
                            let gmx = app(g.clone(), mx.clone());
                            let ap = b.j(
                                |u, v, _| {
                                    Term::id(bt(), app(m(), u), app(m(), v))
                                },
                                |u| Term::Refl(tm(app(m(), u))),
                                gmx.clone(),
                                x.clone(),
                                app(eta.clone(), x.clone()),
                            );
                            Term::id(
                                Term::id(bt(), app(m(), gmx), mx.clone()),
                                ap,
                                app(eps.clone(), mx),
                            )
                        })
                    },
                )
            },
        )
    })
}

/// `Π i:Size. (Π j:Size. El(↑j ≤ i) → C j) → C i`, for `C` under one binder
/// at depth `d`.
pub fn fix_functional_type(d: usize, c: &Term) -> Term {
    let b = Build::new(d);
    let fam = to_level_family(&b, c);
    let t = b.pi(Term::Size, |i| {
        let rec = b.pi(Term::Size, |j| {
            b.arrow(
                Term::el(Term::leq(Term::suc(j.clone()), i.clone())),
                instantiate(&fam, 0, &j),
            )
        });
        b.arrow(rec, instantiate(&fam, 0, &i))
    });
    b.finish(t)
}

/// `Π i:Size. Id(C i, fix f i, f i (λj p. fix f j))`.
pub fn fixbeta_type(d: usize, f: &Term, c: &Term) -> Term {
    let b = Build::new(d);
    let fam = to_level_family(&b, c);
    let fo = b.outer(f);
    let fix = Term::Fix(tm(fo.clone()));
    let t = b.pi(Term::Size, |i| {
        let rec = b.lam(|j| b.lam(|_| Term::app(fix.clone(), j.clone())));
        Term::id(
            instantiate(&fam, 0, &i),
            Term::app(fix.clone(), i.clone()),
            Term::apps(fo.clone(), [i.clone(), rec]),
        )
    });
    b.finish(t)
}
