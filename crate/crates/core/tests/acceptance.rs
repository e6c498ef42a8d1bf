//! One pass/FAIL line per acceptance criterion; exits nonzero on any failure.

mod cl;
mod common;
mod gen;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;

use gen::{Gen, Ty};
use sizett::corpus::{check_corpus, CorpusReport};
use sizett::frontend::{parse_expr, print_term, print_type, Elab, Mode};
use sizett::kernel::{Kernel, Locals};
use sizett::model::assembly::{check_universal_property, enumerate_assemblies, truncate_m};
use sizett::model::pca::{check_fix_law, check_phi_law};
use sizett::model::DEFAULT_FUEL;
use sizett::nbe::{convert, eval, readback, Env, Head, NoDefinitions, Value};
use sizett::session::Session;
use sizett::syntax::{alpha_eq, tm, weaken, Term};

type Outcome = Result<String, String>;

fn closed(t: &Term) -> Arc<Value> {
    eval(&Env::new(), t)
}

fn locals(ctx: &[Ty]) -> Locals {
    let mut l = Locals::new();
    for t in ctx {
        l = l.bind(eval(&l.env, &t.to_type()));
    }
    l
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn corpus_complete(report: &CorpusReport) -> Outcome {
    let n = report.files.len();
    ensure(n == 12, || format!("{n} manifest files checked"))?;
    let secs = report.elapsed.as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{n} files in {secs:.2}s"))
}

fn axiom_audit(s: &Session, report: &CorpusReport) -> Outcome {
    let within = |stem: &str, allowed: &[&str]| -> Result<usize, String> {
        let uses = report.file(stem).ok_or_else(|| format!("{stem} missing"))?;
        for u in uses {
            if let Some(a) = u.axioms.iter().find(|a| !allowed.iter().any(|x| a.to_string() == *x)) {
                return Err(format!("{} uses {a}", u.name));
            }
        }
        Ok(uses.len())
    };
    let a = within("prop-swap", &[])?;
    let b = within("initial-alg", &["axExistsPi", "axExistsLt", "funext"])?;
    let c = within("nu-box", &["axForallSigma", "axForallLt", "funext"])?;
    if let Some(v) = report.violations().next() {
        return Err(format!("{} uses unlisted {:?}", v.name, v.unexpected));
    }
    let ex = s.used_axioms("poly.polyExists").map_err(|e| e.to_string())?;
    ensure(ex.contains("axExistsPi"), || "poly.polyExists does not reach axExistsPi".into())?;
    Ok(format!("prop-swap {a}, initial-alg {b}, nu-box {c} declarations within bounds"))
}

fn definitional_equality() -> Outcome {
    let k = Kernel::new();
    for seed in 0..1000u64 {
        let mut g = Gen::new(seed);
        let (t, ty) = g.closed();
        let tyv = closed(&ty.to_type());
        k.checker()
            .check(&Locals::new(), &t, &tyv)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        let v = closed(&t);
        let nf = readback(0, &v);
        ensure(readback(0, &closed(&nf)) == nf, || format!("seed {seed}: readback not idempotent"))?;
        ensure(convert(&NoDefinitions, 0, &v, &v, &tyv), || format!("seed {seed}: not reflexive"))?;
        ensure(convert(&NoDefinitions, 0, &v, &closed(&nf), &tyv), || {
            format!("seed {seed}: term and normal form differ")
        })?;
        // symmetry and transitivity on open terms
        let ctx = [Ty::Bool, Ty::Size, ty.clone()];
        let l = locals(&ctx);
        let vs: Vec<_> = (0..3).map(|_| eval(&l.env, &g.term(&ctx, &ty, 3))).collect();
        let eq = |a: usize, b: usize| convert(&NoDefinitions, 3, &vs[a], &vs[b], &tyv);
        for a in 0..3 {
            for b in 0..3 {
                ensure(eq(a, b) == eq(b, a), || format!("seed {seed}: not symmetric"))?;
                for c in 0..3 {
                    ensure(!(eq(a, b) && eq(b, c)) || eq(a, c), || format!("seed {seed}: not transitive"))?;
                }
            }
        }
    }
    for shape in 0..3u8 {
        for seed in 0..100u64 {
            eta(seed, shape).map_err(|e| format!("η shape {shape} seed {seed}: {e}"))?;
        }
    }
    Ok("1000 terms; 100 η instances each for Π, Σ, ∀".into())
}

fn eta(seed: u64, shape: u8) -> Result<(), String> {
    let mut g = Gen::new(seed);
    let (a, b) = (g.small_ty(1), g.small_ty(1));
    let ty = match shape {
        0 => Ty::Arr(Box::new(a), Box::new(b)),
        1 => Ty::Prod(Box::new(a), Box::new(b)),
        _ => Ty::All(Box::new(a)),
    };
    let ctx = [ty.clone()];
    let l = locals(&ctx);
    let f = if g.rng.gen_bool(0.5) { Term::Var(0) } else { g.term(&ctx, &ty, 2) };
    let expanded = match shape {
        0 => Term::lam(Term::app(weaken(&f, 0, 1), Term::Var(0))),
        1 => Term::Pair(tm(Term::Proj1(tm(f.clone()))), tm(Term::Proj2(tm(f.clone())))),
        _ => Term::ForLam(tm(Term::ForApp(tm(weaken(&f, 0, 1)), tm(Term::Var(0))))),
    };
    let tyv = eval(&l.env, &ty.to_type());
    let (x, y) = (eval(&l.env, &expanded), eval(&l.env, &f));
    ensure(
        convert(&NoDefinitions, 1, &x, &y, &tyv) && convert(&NoDefinitions, 1, &y, &x, &tyv),
        || format!("{expanded:?} vs {f:?}"),
    )
}

fn fix_opacity(s: &Session) -> Outcome {
    for seed in 0..100u64 {
        let mut g = Gen::new(seed);
        let c = g.ty(1);
        let rec_ty = Ty::Arr(Box::new(Ty::Size), Box::new(c.clone()));
        let f = Term::lam(Term::lam(g.term(&[Ty::Size, rec_ty], &c, 2)));
        let t = Term::app(Term::Fix(tm(f)), g.term(&[], &Ty::Size, 3));
        let v = closed(&t);
        let at_head = matches!(readback(0, &v), Term::App(ref h, _) if matches!(**h, Term::Fix(_)));
        let neutral = matches!(&*v, Value::Neutral(Head::Fix(_), sp) if sp.len() == 1);
        ensure(at_head && neutral, || format!("seed {seed}: fix unfolded"))?;
    }
    let e = s.kernel.lookup("examples.natEq").ok_or("examples.natEq missing")?;
    let ty = print_type(e.ty_term.as_ref().unwrap());
    let want = "(x0 : Size) -> Id U (mu-diamond.Mu examples.NatF x0) \
                (examples.NatF (diamond-box.Dia (mu-diamond.Mu examples.NatF) x0))";
    ensure(ty == want, || format!("natEq : {ty}"))?;
    Ok("100 fix applications stay neutral; natEq checks".into())
}

fn smallness() -> Outcome {
    let k = Kernel::new();
    for t in gen::smallness_originals() {
        k.infer_closed(&t).map_err(|e| format!("original rejected: {e}"))?;
    }
    let mutants = gen::smallness_mutants();
    ensure(mutants.len() >= 50, || format!("only {} mutants", mutants.len()))?;
    for (what, t) in &mutants {
        match k.infer_closed(t) {
            Err(e) if e.kind() == "SmallnessViolation" => {}
            Err(e) => return Err(format!("{what}: {}", e.kind())),
            Ok(_) => return Err(format!("{what} accepted")),
        }
    }
    Ok(format!("{} mutants rejected", mutants.len()))
}

fn model_oracle() -> Outcome {
    let a = sizett::model::pca::Cl::atom("a");
    for seed in 0..100u64 {
        let f = cl::ClGen::new(seed).term(5, &["a"]);
        ensure(check_fix_law(&f, &a, DEFAULT_FUEL), || format!("fix law fails for {f}"))?;
    }
    let phis = cl::phi_vectors();
    for (fr, gr, n) in &phis {
        ensure(check_phi_law(fr, gr, n, DEFAULT_FUEL), || format!("φ law fails for {fr}"))?;
    }
    let r = check_universal_property(3, 3);
    if let Some(f) = r.failures.first() {
        return Err(f.clone());
    }
    let all = enumerate_assemblies(3, 3, false);
    ensure(all.iter().all(|x| truncate_m(x).assembly().is_modest()), || {
        "a truncation is not modest".into()
    })?;
    Ok(format!(
        "100 fix laws, {} φ vectors, {} assemblies and {} tracked morphisms factor uniquely",
        phis.len(),
        r.assemblies,
        r.morphisms
    ))
}

fn round_trip(s: &Session) -> Outcome {
    let resolve = |n: &str| s.kernel.lookup(n).map(|g| g.name.clone());
    let back = |src: &str, mode| -> Result<Term, String> {
        let e = parse_expr(src).map_err(|e| format!("{e}: {src}"))?;
        Elab::new(&resolve).elab(&e, mode).map_err(|e| format!("{e}: {src}"))
    };
    let mut n = 0;
    for e in s.kernel.globals.iter() {
        if let Some(ty) = &e.ty_term {
            ensure(alpha_eq(&back(&print_type(ty), Mode::Type)?, ty), || format!("type of {}", e.name))?;
            n += 1;
        }
        if let Some(body) = &e.body {
            ensure(alpha_eq(&back(&print_term(body), Mode::Term)?, body), || format!("body of {}", e.name))?;
            n += 1;
        }
    }
    let pairs = common::sugar_pairs();
    let t = common::load(&common::sugar_source(&pairs)).map_err(|e| e.to_string())?;
    for i in 0..pairs.len() {
        let (a, b) = (t.kernel.lookup(&format!("t.s{i}")), t.kernel.lookup(&format!("t.m{i}")));
        let (a, b) = (a.ok_or("missing")?, b.ok_or("missing")?);
        ensure(alpha_eq(a.body.as_ref().unwrap(), b.body.as_ref().unwrap()), || {
            format!("{:?}", pairs[i])
        })?;
    }
    Ok(format!("{n} types and bodies; {} sugar pairs", pairs.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = check_corpus(&common::stdlib());
    let results: Vec<(&str, Outcome)> = match &corpus {
        Ok((s, report)) => vec![
            ("corpus completeness", corpus_complete(report)),
            ("axiom audit", axiom_audit(s, report)),
            ("definitional equality", definitional_equality()),
            ("fix opacity", fix_opacity(s)),
            ("smallness", smallness()),
            ("model oracle", model_oracle()),
            ("frontend round-trip", round_trip(s)),
        ],
        Err(e) => {
            let msg = format!("corpus failed to load: {e}");
            vec![
                ("corpus completeness", Err(msg.clone())),
                ("axiom audit", Err(msg.clone())),
                ("definitional equality", definitional_equality()),
                ("fix opacity", Err(msg.clone())),
                ("smallness", smallness()),
                ("model oracle", model_oracle()),
                ("frontend round-trip", Err(msg)),
            ]
        }
    };
    let mut failed = false;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("pass {} {name}: {detail}", i + 1),
            Err(why) => {
                failed = true;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
