//! Driver for the sl₂ property suite: every identity is checked against the
//! matrix model, either on all of sl₂(F_p) or on seeded random samples.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rdpcalc::ring::FpElement;
use rdpcalc::sl2::checks::{
    bracket_matches_matrices, discriminant_matches_wedge, jacobi_holds, p_map_matches_matrix_power,
    restricted, semilinear,
};
use rdpcalc::sl2::Sl2Vector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckLine {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampling {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sl2Summary {
    pub p: u32,
    pub sampling: Sampling,
    pub checks: Vec<CheckLine>,
}

impl Sl2Summary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

#[derive(Default, Clone, Copy)]
struct Tally {
    cases: u64,
    failures: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.cases += 1;
        self.failures += u64::from(!ok);
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            cases: self.cases + other.cases,
            failures: self.failures + other.failures,
        }
    }
}

const NAMES: [&str; 6] = [
    "jacobi",
    "bracket-vs-commutator",
    "p-map-vs-matrix-power",
    "semilinear",
    "restricted",
    "wedge-vs-discriminant",
];

type Tallies = [Tally; 6];

fn merge(a: Tallies, b: Tallies) -> Tallies {
    std::array::from_fn(|i| a[i].merge(b[i]))
}

/// Single-vector checks, plus semilinearity for every scalar.
fn check_one(x: &Sl2Vector, t: &mut Tallies) {
    let p = x.characteristic();
    t[2].record(p_map_matches_matrix_power(x));
    for c in 0..i64::from(p) {
        t[3].record(semilinear(x, FpElement::new(c, p)));
    }
    t[4].record(restricted(x));
}

fn check_two(x: &Sl2Vector, y: &Sl2Vector, t: &mut Tallies) {
    t[1].record(bracket_matches_matrices(x, y));
    if let Some(ok) = discriminant_matches_wedge(x, y) {
        t[5].record(ok);
    }
}

pub fn run(p: u32, sampling: Sampling) -> Sl2Summary {
    let tallies = match sampling {
        Sampling::Exhaustive => exhaustive(p),
        Sampling::Random { samples, seed } => random(p, samples, seed),
    };
    Sl2Summary {
        p,
        sampling,
        checks: NAMES
            .iter()
            .zip(tallies)
            .map(|(name, t)| CheckLine {
                name: (*name).to_string(),
                cases: t.cases,
                failures: t.failures,
            })
            .collect(),
    }
}

fn exhaustive(p: u32) -> Tallies {
    let all: Vec<Sl2Vector> = Sl2Vector::all(p).collect();
    let all = &all;
    all.par_iter()
        .map(|x| {
            let mut t = Tallies::default();
            check_one(x, &mut t);
            for y in all {
                check_two(x, y, &mut t);
                for z in all {
                    t[0].record(jacobi_holds(x, y, z));
                }
            }
            t
        })
        .reduce(Tallies::default, merge)
}

fn random(p: u32, samples: u64, seed: u64) -> Tallies {
    let mut rng = StdRng::seed_from_u64(seed);
    let q = i64::from(p);
    let mut draw = || {
        Sl2Vector::new(
            rng.gen_range(0..q),
            rng.gen_range(0..q),
            rng.gen_range(0..q),
            p,
        )
    };
    let triples: Vec<[Sl2Vector; 3]> = (0..samples).map(|_| [draw(), draw(), draw()]).collect();
    triples
        .par_iter()
        .map(|[x, y, z]| {
            let mut t = Tallies::default();
            check_one(x, &mut t);
            check_two(x, y, &mut t);
            t[0].record(jacobi_holds(x, y, z));
            t
        })
        .reduce(Tallies::default, merge)
}
