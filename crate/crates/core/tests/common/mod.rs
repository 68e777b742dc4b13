#![allow(dead_code)]

use fri_lab::fuzzy::TrapezoidSet;
use fri_lab::kh::{Observation, Rule};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TRIALS: usize = 1000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn set(p: [f64; 4]) -> TrapezoidSet {
    TrapezoidSet::from_points(p).unwrap()
}

/// Points starting at `start` with segment lengths `lens`.
pub fn chain(start: f64, lens: [f64; 3]) -> [f64; 4] {
    [start, start + lens[0], start + lens[0] + lens[1], start + lens[0] + lens[1] + lens[2]]
}

/// Places a set with `lens` so that `prev` strictly precedes it, the
/// smallest pointwise gap being `gap > 0`.
pub fn after(prev: [f64; 4], lens: [f64; 3], gap: f64) -> [f64; 4] {
    let shape = chain(0.0, lens);
    let start = (0..4).map(|j| prev[j] - shape[j]).fold(f64::NEG_INFINITY, f64::max) + gap;
    chain(start, lens)
}

#[derive(Debug, Clone)]
pub struct Config {
    pub a1: [f64; 4],
    pub a2: [f64; 4],
    pub b1: [f64; 4],
    pub b2: [f64; 4],
    pub x: [f64; 4],
}

impl Config {
    pub fn lower(&self) -> Rule {
        Rule::single(set(self.a1), set(self.b1))
    }

    pub fn upper(&self) -> Rule {
        Rule::single(set(self.a2), set(self.b2))
    }

    pub fn obs(&self) -> Observation {
        Observation::single(set(self.x))
    }

    pub fn rules(&self) -> (Rule, Rule, Observation) {
        (self.lower(), self.upper(), self.obs())
    }
}

/// Segment lengths shared by the configuration's sets.
#[derive(Debug, Clone, Copy)]
pub struct Lengths {
    pub a1: [f64; 3],
    pub a2: [f64; 3],
    pub b1: [f64; 3],
    pub b2: [f64; 3],
    pub x: [f64; 3],
}

pub fn lens3(rng: &mut impl Rng, lo: f64, hi: f64) -> [f64; 3] {
    [rng.gen_range(lo..hi), rng.gen_range(lo..hi), rng.gen_range(lo..hi)]
}

/// Flanked configuration with the given lengths and random placement.
pub fn place(rng: &mut impl Rng, l: Lengths) -> Config {
    let a1 = chain(rng.gen_range(-5.0..5.0), l.a1);
    let x = after(a1, l.x, rng.gen_range(0.05..4.0));
    let a2 = after(x, l.a2, rng.gen_range(0.05..4.0));
    let b1 = chain(rng.gen_range(-5.0..5.0), l.b1);
    let b2 = after(b1, l.b2, rng.gen_range(0.05..6.0));
    Config { a1, a2, b1, b2, x }
}

/// Any flanked configuration, lengths independent per set.
pub fn random_config(rng: &mut impl Rng) -> Config {
    let l = Lengths {
        a1: lens3(rng, 0.0, 3.0),
        a2: lens3(rng, 0.0, 3.0),
        b1: lens3(rng, 0.0, 3.0),
        b2: lens3(rng, 0.0, 3.0),
        x: lens3(rng, 0.0, 3.0),
    };
    place(rng, l)
}

/// Reference KH conclusion written as `b1 + (b2 − b1)·d1/(d1 + d2)`.
pub fn kh_oracle(c: &Config) -> [f64; 4] {
    let mut y = [0.0; 4];
    for j in 0..4 {
        let d1 = c.x[j] - c.a1[j];
        let d2 = c.a2[j] - c.x[j];
        y[j] = c.b1[j] + (c.b2[j] - c.b1[j]) * d1 / (d1 + d2);
    }
    y
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
