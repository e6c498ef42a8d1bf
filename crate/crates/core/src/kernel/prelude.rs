//! Built-in constants.
//!
//! The ≤-proof constants are primitives: they are trusted but carry no
//! logical strength beyond the order on sizes, so the axiom audit ignores
//! them. `funext` is schematic (its type depends on the function type it is
//! used at) and is an axiom. Everything else, including the parametricity
//! axioms, lives in the prelude source.

use super::build::Build;
use crate::syntax::Term;

/// Default prelude text.
pub const PRELUDE_SOURCE: &str = include_str!("../../prelude/prelude.smltt");

/// Environment variable overriding the prelude path.
pub const PRELUDE_ENV: &str = "SIZETT_PRELUDE";

pub const PRIMITIVES: [&str; 5] = ["le0", "lesuc", "lerefl", "letrans", "leeq"];

/// The parametricity axioms the prelude must declare.
pub const PARAMETRICITY_AXIOMS: [&str; 4] =
    ["axExistsPi", "axForallSigma", "axExistsLt", "axForallLt"];

fn leq(i: &Term, j: &Term) -> Term {
    Term::el(Term::leq(i.clone(), j.clone()))
}

/// Closed types of the ≤-primitives.
pub fn primitive_types() -> Vec<(&'static str, Term)> {
    let b = Build::new(0);
    let size = || Term::Size;
    let le0 = b.pi(size(), |i| leq(&Term::Sz0, &i));
    let lesuc = b.pi(size(), |i| leq(&i, &Term::suc(i.clone())));
    let lerefl = b.pi(size(), |i| leq(&i, &i));
    let letrans = b.pi(size(), |i| {
        b.pi(size(), |j| {
            b.pi(size(), |k| {
                b.arrow(leq(&i, &j), b.arrow(leq(&j, &k), leq(&i, &k)))
            })
        })
    });
    let leeq = b.pi(size(), |i| {
        b.pi(size(), |j| {
            b.pi(leq(&i, &j), |p| {
                b.pi(leq(&i, &j), |q| Term::id(leq(&i, &j), p.clone(), q))
            })
        })
    });
    vec![
        ("le0", b.finish(le0)),
        ("lesuc", b.finish(lesuc)),
        ("lerefl", b.finish(lerefl)),
        ("letrans", b.finish(letrans)),
        ("leeq", b.finish(leeq)),
    ]
}
