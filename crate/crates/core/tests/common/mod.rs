//! Random constructor-produced zetas shared by the property and acceptance suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use segre_zeta::staircase::{integral_closure_reduce, Placement};
use segre_zeta::{
    bootstrap_zeta, ci_zeta, linear_system_zeta, monomial2d_zeta, splayed_product, Exponent,
    IntPoly, LinearFactorProduct, MonomialIdeal2D, RationalSeries, SegreClassData, SegreZeta,
};

/// A zeta together with the generator degrees of the ideal it came from.
#[derive(Clone, Debug)]
pub struct Sample {
    pub label: &'static str,
    pub zeta: SegreZeta,
    pub degrees: Vec<u64>,
}

pub fn random_degrees<R: Rng>(rng: &mut R, max_len: usize, max_d: u64) -> Vec<u64> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(1..=max_d)).collect()
}

pub fn random_ideal<R: Rng>(rng: &mut R) -> MonomialIdeal2D {
    let count = rng.gen_range(1..=6);
    let mut gens: Vec<(u64, u64)> = (0..count)
        .map(|_| (rng.gen_range(0..=9), rng.gen_range(0..=9)))
        .filter(|&g| g != (0, 0))
        .collect();
    if rng.gen_bool(0.7) {
        gens.push((rng.gen_range(1..=9), 0));
    }
    if rng.gen_bool(0.7) {
        gens.push((0, rng.gen_range(1..=9)));
    }
    if gens.is_empty() {
        gens.push((1, 1));
    }
    MonomialIdeal2D::new(gens).expect("nonempty, no unit")
}

/// A point of the Newton region that is not already a generator.
pub fn random_interior_point<R: Rng>(rng: &mut R, ideal: &MonomialIdeal2D) -> Option<Exponent> {
    let boundary = integral_closure_reduce(ideal).boundary;
    for _ in 0..200 {
        let p = Exponent::new(rng.gen_range(0..=12), rng.gen_range(0..=12));
        if boundary.place(p) != Placement::Outside && !ideal.generators().contains(&p) {
            return Some(p);
        }
    }
    None
}

pub fn ideal_degrees(ideal: &MonomialIdeal2D) -> Vec<u64> {
    ideal.generators().iter().map(|g| g.degree()).collect()
}

fn ci_sample<R: Rng>(rng: &mut R) -> Sample {
    let degrees = random_degrees(rng, 4, 6);
    Sample {
        label: "ci",
        zeta: ci_zeta(&degrees).expect("positive degrees"),
        degrees,
    }
}

fn monomial_sample<R: Rng>(rng: &mut R) -> Sample {
    let ideal = random_ideal(rng);
    Sample {
        label: "monomial",
        zeta: monomial2d_zeta(&ideal),
        degrees: ideal_degrees(&ideal),
    }
}

fn linsys_sample<R: Rng>(rng: &mut R) -> Sample {
    let d = rng.gen_range(1..=4u64);
    let n = rng.gen_range(1..=5usize);
    let mut counts = vec![1u64];
    for i in 1..=n {
        counts.push(rng.gen_range(0..=d.pow(i as u32)));
    }
    Sample {
        label: "linsys",
        zeta: linear_system_zeta(d, n, &counts).expect("counts within Bezout bound"),
        degrees: vec![d; n + 1],
    }
}

fn product_sample<R: Rng>(rng: &mut R) -> Sample {
    let a = if rng.gen_bool(0.5) { ci_sample(rng) } else { monomial_sample(rng) };
    let b = if rng.gen_bool(0.5) { ci_sample(rng) } else { monomial_sample(rng) };
    let mut degrees = a.degrees.clone();
    degrees.extend(&b.degrees);
    Sample {
        label: "product",
        zeta: splayed_product(&a.zeta, &b.zeta),
        degrees,
    }
}

fn bootstrap_sample<R: Rng>(rng: &mut R) -> Sample {
    let source = match rng.gen_range(0..3) {
        0 => ci_sample(rng),
        1 => monomial_sample(rng),
        _ => linsys_sample(rng),
    };
    Sample {
        label: "bootstrap",
        zeta: bootstrap_from(&source).expect("constructor output is a Segre class"),
        degrees: source.degrees,
    }
}

/// Rebuilds a sample's zeta from its degrees and its expansion up to `t^r`,
/// `r = #degrees - 1`.
pub fn bootstrap_from(sample: &Sample) -> segre_zeta::Result<SegreZeta> {
    let r = sample.degrees.len() - 1;
    let coeffs = sample.zeta.expand(r).coeffs().to_vec();
    let mut padded = vec![BigInt::from(0); r + 1];
    for (slot, c) in padded.iter_mut().zip(coeffs) {
        *slot = c;
    }
    bootstrap_zeta(&sample.degrees, &SegreClassData::new(r, padded)?)
}

pub fn random_sample<R: Rng>(rng: &mut R) -> Sample {
    match rng.gen_range(0..5) {
        0 => ci_sample(rng),
        1 => monomial_sample(rng),
        2 => linsys_sample(rng),
        3 => product_sample(rng),
        _ => bootstrap_sample(rng),
    }
}

/// A random rational series, not necessarily reduced or a zeta.
pub fn random_series<R: Rng>(rng: &mut R) -> RationalSeries {
    let len = rng.gen_range(1..=6);
    let mut num: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
    if num.iter().all(|&c| c == 0) {
        num[0] = 1;
    }
    let mut den: Vec<u64> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(1..=9)).collect();
    den.shuffle(rng);
    RationalSeries::new(
        IntPoly::from_i64s(&num),
        LinearFactorProduct::new(den).expect("positive"),
    )
}

/// Power series of `1 / ∏ (1 - c_i t)` to order `n` by convolving geometric series.
pub fn geometric_product(cs: &[i64], n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(0); n + 1];
    acc[0] = BigInt::from(1);
    for &c in cs {
        let geo: Vec<BigInt> = (0..=n as u32).map(|j| BigInt::from(c).pow(j)).collect();
        let mut next = vec![BigInt::from(0); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += &acc[i] * &geo[j];
            }
        }
        acc = next;
    }
    acc
}
