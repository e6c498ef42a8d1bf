//! Finite assemblies, PERs, tracked morphisms and the modest truncation M.
//!
//! Realisers are combinator terms; abstract tokens are atoms, which is all
//! the truncation needs since it never applies a realiser.

use std::collections::BTreeSet;

use super::pca::{bracket, kleene_eq, reduce, Cl, Outcome};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAssembly {
    /// Element tokens.
    pub carrier: Vec<String>,
    /// Pairs `(realiser, element index)`.
    pub realisers: Vec<(Cl, usize)>,
}

impl FiniteAssembly {
    pub fn new(carrier: Vec<String>, realisers: Vec<(Cl, usize)>) -> Result<Self, String> {
        let a = FiniteAssembly { carrier, realisers };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<(), String> {
        for (_, x) in &self.realisers {
            if *x >= self.carrier.len() {
                return Err(format!("realiser for element #{x} outside the carrier"));
            }
        }
        for (i, x) in self.carrier.iter().enumerate() {
            if !self.realisers.iter().any(|(_, y)| *y == i) {
                return Err(format!("element {x} has no realiser"));
            }
        }
        Ok(())
    }

    pub fn index(&self, element: &str) -> Option<usize> {
        self.carrier.iter().position(|x| x == element)
    }

    pub fn realisers_of(&self, x: usize) -> impl Iterator<Item = &Cl> {
        self.realisers.iter().filter(move |(_, y)| *y == x).map(|(r, _)| r)
    }

    /// No realiser realises two distinct elements.
    pub fn is_modest(&self) -> bool {
        self.realisers
            .iter()
            .all(|(r, x)| self.realisers.iter().all(|(s, y)| r != s || x == y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePer {
    pub classes: Vec<BTreeSet<Cl>>,
}

impl FinitePer {
    pub fn new(classes: Vec<BTreeSet<Cl>>) -> Result<Self, String> {
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(format!("class {i} is empty"));
            }
            for d in &classes[..i] {
                if !c.is_disjoint(d) {
                    return Err(format!("class {i} overlaps an earlier class"));
                }
            }
        }
        Ok(FinitePer { classes })
    }

    /// `n ~ m` iff both lie in one class.
    pub fn related(&self, n: &Cl, m: &Cl) -> bool {
        self.classes.iter().any(|c| c.contains(n) && c.contains(m))
    }

    /// The PER read as a modest assembly of its classes.
    pub fn to_assembly(&self) -> FiniteAssembly {
        FiniteAssembly {
            carrier: (0..self.classes.len()).map(|i| format!("[{i}]")).collect(),
            realisers: self
                .classes
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.iter().map(move |r| (r.clone(), i)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedMorphism {
    /// `table[x]` is the image of element `x`.
    pub table: Vec<usize>,
    pub tracker: Cl,
    pub fuel: u64,
}

/// Every realiser `r ⊩ x` is sent by the tracker to a realiser of the image.
pub fn check_tracking(a: &FiniteAssembly, b: &FiniteAssembly, m: &TrackedMorphism) -> bool {
    if m.table.len() != a.carrier.len() || m.table.iter().any(|&y| y >= b.carrier.len()) {
        return false;
    }
    a.realisers.iter().all(|(r, x)| {
        match reduce(&Cl::app(m.tracker.clone(), r.clone()), m.fuel) {
            Outcome::Diverged => false,
            Outcome::Value(v) => b.realisers_of(m.table[*x]).any(|s| kleene_eq(&v, s, m.fuel)),
        }
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut x = x;
    while parent[x] != root {
        let next = parent[x];
        parent[x] = root;
        x = next;
    }
    root
}

/// The modest reflection of an assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Elements of each class, in carrier order.
    pub classes: Vec<Vec<usize>>,
    /// Realisers of each class.
    pub per: FinitePer,
    /// `eta[x]` is the class of element `x`.
    pub eta: Vec<usize>,
}

impl Truncation {
    pub fn assembly(&self) -> FiniteAssembly {
        self.per.to_assembly()
    }

    /// η as a morphism, tracked by the identity.
    pub fn eta_morphism(&self, fuel: u64) -> TrackedMorphism {
        TrackedMorphism {
            table: self.eta.clone(),
            tracker: bracket("x", &Cl::atom("x")),
            fuel,
        }
    }
}

/// Merge elements sharing a realiser, transitively.
pub fn truncate_m(a: &FiniteAssembly) -> Truncation {
    let n = a.carrier.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, (r, x)) in a.realisers.iter().enumerate() {
        for (s, y) in &a.realisers[..i] {
            if r == s {
                let (rx, ry) = (find(&mut parent, *x), find(&mut parent, *y));
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut roots = Vec::new();
    let mut eta = vec![0; n];
    for (x, e) in eta.iter_mut().enumerate() {
        let root = find(&mut parent, x);
        *e = match roots.iter().position(|&r| r == root) {
            Some(i) => i,
            None => {
                roots.push(root);
                roots.len() - 1
            }
        };
    }
    let mut classes = vec![Vec::new(); roots.len()];
    let mut reals = vec![BTreeSet::new(); roots.len()];
    for (x, &c) in eta.iter().enumerate() {
        classes[c].push(x);
    }
    for (r, x) in &a.realisers {
        reals[eta[*x]].insert(r.clone());
    }
    Truncation {
        classes,
        per: FinitePer { classes: reals },
        eta,
    }
}

/// Pairing realises context extension: `⟨n, m⟩ ⊩ (γ, a)`.
pub fn extend(gamma: &FiniteAssembly, fibre: &[FiniteAssembly]) -> FiniteAssembly {
    let mut carrier = Vec::new();
    let mut realisers = Vec::new();
    for (g, name) in gamma.carrier.iter().enumerate() {
        for (x, a) in fibre[g].carrier.iter().enumerate() {
            let e = carrier.len();
            carrier.push(format!("({name},{a})"));
            for n in gamma.realisers_of(g) {
                for m in fibre[g].realisers_of(x) {
                    realisers.push((Cl::pair(n.clone(), m.clone()), e));
                }
            }
        }
    }
    FiniteAssembly { carrier, realisers }
}

/// The realiser `Λx. Pr (d x) (e x)` of a morphism into a context extension.
pub fn pair_tracker(d: &Cl, e: &Cl) -> Cl {
    let x = Cl::atom("x");
    bracket(
        "x",
        &Cl::pair(Cl::app(d.clone(), x.clone()), Cl::app(e.clone(), x)),
    )
}

/// Result of the exhaustive check of M's universal property.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniversalReport {
    pub assemblies: usize,
    pub morphisms: usize,
    pub failures: Vec<String>,
}

fn tokens(n: usize) -> Vec<Cl> {
    (1..=n).map(|i| Cl::atom(&i.to_string())).collect()
}

/// All assemblies on `0..=max_elems` elements whose realisers are drawn
/// from `max_tokens` tokens; `modest` keeps only the modest ones.
pub fn enumerate_assemblies(max_elems: usize, max_tokens: usize, modest: bool) -> Vec<FiniteAssembly> {
    let toks = tokens(max_tokens);
    let mut out = Vec::new();
    for k in 0..=max_elems {
        let cells = k * max_tokens;
        for bits in 0u64..(1 << cells) {
            let realisers: Vec<(Cl, usize)> = (0..cells)
                .filter(|b| bits >> b & 1 == 1)
                .map(|b| (toks[b % max_tokens].clone(), b / max_tokens))
                .collect();
            let a = FiniteAssembly {
                carrier: (0..k).map(|i| format!("x{i}")).collect(),
                realisers,
            };
            if a.validate().is_ok() && (!modest || a.is_modest()) {
                out.push(a);
            }
        }
    }
    out
}

fn functions(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dom {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..cod).map(move |y| {
                    let mut g = f.clone();
                    g.push(y);
                    g
                })
            })
            .collect();
    }
    out
}

/// A tracker on token realisers is a map of tokens; `sigma[t]` is the
/// image of token `t` (token names are `1..=n`).
fn token_tracked(a: &FiniteAssembly, b: &FiniteAssembly, table: &[usize], sigma: &[usize]) -> bool {
    a.realisers.iter().all(|(r, x)| {
        let Cl::Atom(t) = r else { return false };
        let t: usize = t.parse().unwrap_or(0);
        let image = Cl::atom(&(sigma[t - 1] + 1).to_string());
        b.realisers_of(table[*x]).any(|s| *s == image)
    })
}

/// For every assembly A and every tracked g : A → X into a modest X,
/// exactly one f : M A → X satisfies f ∘ η = g, and that f is tracked.
pub fn check_universal_property(max_elems: usize, max_tokens: usize) -> UniversalReport {
    let sources = enumerate_assemblies(max_elems, max_tokens, false);
    let targets = enumerate_assemblies(max_elems, max_tokens, true);
    let sigmas = functions(max_tokens, max_tokens);
    let mut report = UniversalReport {
        assemblies: sources.len(),
        ..Default::default()
    };
    for a in &sources {
        let m = truncate_m(a);
        let ma = m.assembly();
        if !ma.is_modest() {
            report.failures.push(format!("M of {a:?} is not modest"));
        }
        if !token_tracked(a, &ma, &m.eta, &(0..max_tokens).collect::<Vec<_>>()) {
            report.failures.push(format!("η of {a:?} is not tracked by the identity"));
        }
        for x in &targets {
            for g in functions(a.carrier.len(), x.carrier.len()) {
                let Some(sigma) = sigmas.iter().find(|s| token_tracked(a, x, &g, s)) else {
                    continue;
                };
                report.morphisms += 1;
                let factors: Vec<Vec<usize>> = functions(m.classes.len(), x.carrier.len())
                    .into_iter()
                    .filter(|f| (0..a.carrier.len()).all(|e| f[m.eta[e]] == g[e]))
                    .collect();
                match factors.as_slice() {
                    [f] if token_tracked(&ma, x, f, sigma) => {}
                    [_] => report.failures.push(format!("factor of {g:?} from {a:?} is untracked")),
                    fs => report
                        .failures
                        .push(format!("{} factorisations of {g:?} from {a:?}", fs.len())),
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tok(n: u32) -> Cl {
        Cl::atom(&n.to_string())
    }

    fn asm(k: usize, rel: &[(u32, usize)]) -> FiniteAssembly {
        FiniteAssembly::new(
            (0..k).map(|i| format!("x{i}")).collect(),
            rel.iter().map(|&(t, x)| (tok(t), x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn shared_realiser_merges() {
        assert_eq!(truncate_m(&asm(2, &[(1, 0), (1, 1)])).classes, vec![vec![0, 1]]);
        assert_eq!(truncate_m(&asm(2, &[(1, 0), (2, 1)])).classes.len(), 2);
        let t = truncate_m(&asm(3, &[(1, 0), (1, 1), (2, 1), (2, 2)]));
        assert_eq!(t.classes, vec![vec![0, 1, 2]]);
        assert!(t.assembly().is_modest());
    }

    #[test]
    fn eta_is_tracked_by_identity() {
        let a = asm(3, &[(1, 0), (1, 1), (3, 2)]);
        let t = truncate_m(&a);
        assert!(check_tracking(&a, &t.assembly(), &t.eta_morphism(100)));
    }

    #[test]
    fn unrealised_element_rejected() {
        assert!(FiniteAssembly::new(vec!["a".into()], vec![]).is_err());
        assert!(FinitePer::new(vec![[tok(1)].into(), [tok(1)].into()]).is_err());
    }

    #[test]
    fn tracking_examples() {
        let a = asm(2, &[(1, 0), (2, 1)]);
        let id = TrackedMorphism {
            table: vec![0, 1],
            tracker: Cl::id(),
            fuel: 100,
        };
        assert!(check_tracking(&a, &a, &id));
        let b = FiniteAssembly::new(vec!["k".into()], vec![(Cl::K, 0)]).unwrap();
        let konst = TrackedMorphism {
            table: vec![0, 0],
            tracker: bracket("x", &Cl::K),
            fuel: 100,
        };
        assert!(check_tracking(&a, &b, &konst));
        // Two elements sharing realiser 1 cannot be split by any tracker.
        let shared = asm(2, &[(1, 0), (1, 1)]);
        let split = TrackedMorphism {
            table: vec![0, 1],
            tracker: Cl::id(),
            fuel: 100,
        };
        assert!(!check_tracking(&shared, &a, &split));
    }

    #[test]
    fn universal_property_small() {
        let r = check_universal_property(2, 2);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        assert!(r.morphisms > 0);
    }

    #[test]
    fn pairing_tracks_extension() {
        // Δ = {δ0 ⊩ a, δ1 ⊩ b}, Γ = {γ ⊩ S}, fibre over γ = {x ⊩ K, y ⊩ Pr}.
        let delta = FiniteAssembly::new(
            vec!["d0".into(), "d1".into()],
            vec![(Cl::atom("a"), 0), (Cl::atom("b"), 1)],
        )
        .unwrap();
        let gamma = FiniteAssembly::new(vec!["g".into()], vec![(Cl::S, 0)]).unwrap();
        let fibre = FiniteAssembly::new(vec!["x".into(), "y".into()], vec![(Cl::K, 0), (Cl::Pr, 1)]).unwrap();
        let ext = extend(&gamma, std::slice::from_ref(&fibre));
        let d = bracket("z", &Cl::S);
        // d tracks Δ → Γ, e0 tracks the section picking x.
        let e0 = bracket("z", &Cl::K);
        let m = TrackedMorphism {
            table: vec![0, 0],
            tracker: pair_tracker(&d, &e0),
            fuel: 1000,
        };
        assert!(check_tracking(&delta, &ext, &m));
        let wrong = TrackedMorphism {
            table: vec![1, 1],
            ..m
        };
        assert!(!check_tracking(&delta, &ext, &wrong));
    }
}
