//! Random combinator terms for the model tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sizett::model::assembly::FiniteAssembly;
use sizett::model::pca::{lambdas, Cl};

pub struct ClGen {
    pub rng: StdRng,
}

impl ClGen {
    pub fn new(seed: u64) -> Self {
        ClGen { rng: StdRng::seed_from_u64(seed) }
    }

    /// A term of at most `size` nodes over the constants and `atoms`.
    pub fn term(&mut self, size: usize, atoms: &[&str]) -> Cl {
        if size < 3 || self.rng.gen_bool(0.25) {
            let n = 5 + atoms.len();
            return match self.rng.gen_range(0..n) {
                0 => Cl::S,
                1 => Cl::K,
                2 => Cl::Pr,
                3 => Cl::Pr1,
                4 => Cl::Pr2,
                i => Cl::atom(atoms[i - 5]),
            };
        }
        let left = self.rng.gen_range(1..=size - 2);
        let f = self.term(left, atoms);
        let a = self.term(size - 1 - left, atoms);
        Cl::app(f, a)
    }

    /// `fr := Λg.Λn.Λr. body` for a random body.
    pub fn phi_step(&mut self) -> Cl {
        let body = self.term(5, &["g", "n", "r"]);
        lambdas(&["g", "n", "r"], &body)
    }

    /// A random assembly on up to `elems` elements over `tokens` atom tokens.
    pub fn assembly(&mut self, elems: usize, tokens: usize) -> FiniteAssembly {
        let k = self.rng.gen_range(0..=elems);
        let mut realisers = Vec::new();
        for x in 0..k {
            let mut any = false;
            for t in 1..=tokens {
                if self.rng.gen_bool(0.4) {
                    realisers.push((Cl::atom(&t.to_string()), x));
                    any = true;
                }
            }
            if !any {
                let t = self.rng.gen_range(1..=tokens);
                realisers.push((Cl::atom(&t.to_string()), x));
            }
        }
        FiniteAssembly::new((0..k).map(|i| format!("x{i}")).collect(), realisers).unwrap()
    }
}

/// The twenty φ vectors: six hand-picked steps plus fourteen random ones.
pub fn phi_vectors() -> Vec<(Cl, Cl, Cl)> {
    let (g, n, r) = (Cl::atom("g"), Cl::atom("n"), Cl::atom("r"));
    let step = |body: Cl| lambdas(&["g", "n", "r"], &body);
    let mut out = vec![
        step(Cl::K),
        step(Cl::app(r.clone(), n.clone())),
        step(Cl::pair(g.clone(), n.clone())),
        step(Cl::pair(r.clone(), n.clone())),
        step(g.clone()),
        step(Cl::app(Cl::Pr1, Cl::pair(n.clone(), r.clone()))),
    ];
    let mut gen = ClGen::new(0x9e37);
    while out.len() < 20 {
        out.push(gen.phi_step());
    }
    out.into_iter()
        .map(|fr| (fr, Cl::atom("a"), Cl::atom("b")))
        .collect()
}
