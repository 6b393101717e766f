//! Seeded random inputs shared by the acceptance and integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use homocyl::cylinder::{genus_one_twist, FreeMap};
use homocyl::exterior::ExteriorPresentation;
use homocyl::laurent::{LaurentPoly, Variables};
use homocyl::matrix::{IntMatrix, Matrix};
use homocyl::seifert::SeifertMatrix;
use homocyl::word::{Generator, MonomialMap, Word};

pub fn gens(names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| Generator::new(*n).unwrap()).collect()
}

/// Random (not necessarily reduced) word with up to `max_len` syllables.
pub fn word<R: Rng>(rng: &mut R, gens: &[Generator], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::identity();
    for _ in 0..len {
        let g = gens.choose(rng).unwrap().clone();
        let mut e = rng.gen_range(-3..=3);
        if e == 0 {
            e = 1;
        }
        w = w.concat(&Word::generator(g).pow(e));
    }
    w
}

/// Random homomorphism to `Z^nvars` with exponents in `-2..=2`.
pub fn rho<R: Rng>(rng: &mut R, gens: &[Generator], nvars: usize) -> MonomialMap {
    let names: Vec<String> = (1..=nvars).map(|i| format!("t{i}")).collect();
    let mut m = MonomialMap::new(Variables::new(names));
    for g in gens {
        m.insert(g.clone(), (0..nvars).map(|_| rng.gen_range(-2..=2)).collect()).unwrap();
    }
    m
}

pub fn int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// Random Seifert matrix of size `1..=max_size` with nonzero determinant.
/// Odd sizes use `n = 2` boundary components; even sizes are knots.
pub fn invertible_seifert<R: Rng>(rng: &mut R, max_size: usize) -> SeifertMatrix {
    loop {
        let size = rng.gen_range(1..=max_size);
        let rows = int_matrix(rng, size, 3);
        let m = IntMatrix::from_i64(&rows).unwrap();
        if m.det() == BigInt::from(0) {
            continue;
        }
        let (g, n) = if size % 2 == 0 { (size / 2, 1) } else { (size / 2, 2) };
        return SeifertMatrix::new(g as u32, n as u32, m).unwrap();
    }
}

pub fn laurent<R: Rng>(rng: &mut R, vars: &Variables, max_terms: usize) -> LaurentPoly {
    let k = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        vars,
        (0..k).map(|_| {
            let e: Vec<i64> = (0..vars.len()).map(|_| rng.gen_range(-2..=2)).collect();
            (e, BigInt::from(rng.gen_range(-4..=4)))
        }),
    )
}

pub fn laurent_matrix<R: Rng>(rng: &mut R, vars: &Variables, n: usize) -> Matrix<LaurentPoly> {
    Matrix::from_fn(n, n, LaurentPoly::zero(vars), |_, _| Some(laurent(rng, vars, 3)))
}

/// A deficiency-one presentation in which every generator is conjugate to
/// `x0`: relators `w_i x_{j_i} w_i^-1 x_i^-1` for `i = 1..=k`, with `j_i < i`.
/// Every generator maps to `t`, so the representation is a homomorphism.
pub fn conjugation_presentation<R: Rng>(rng: &mut R, k: usize) -> ExteriorPresentation {
    let names: Vec<String> = (0..=k).map(|i| format!("x{i}")).collect();
    let gs: Vec<Generator> = names.iter().map(|n| Generator::new(n.as_str()).unwrap()).collect();
    let mut relators = Vec::new();
    for i in 1..=k {
        let j = rng.gen_range(0..i);
        let w = word(rng, &gs, 3);
        let r = w
            .concat(&Word::generator(gs[j].clone()))
            .concat(&w.invert())
            .concat(&Word::generator(gs[i].clone()).invert());
        relators.push(r);
    }
    let mut rho = MonomialMap::new(Variables::new(["t"]));
    for g in &gs {
        rho.insert(g.clone(), vec![1]).unwrap();
    }
    ExteriorPresentation::new_homomorphic(gs, relators, rho).unwrap()
}

/// Random product of Dehn twists `T_a^±1`, `T_b^±1` on the one-holed torus.
pub fn mapping_class<R: Rng>(rng: &mut R, len: usize) -> FreeMap {
    let (a, b) = (Generator::new("a").unwrap(), Generator::new("b").unwrap());
    let mut phi = FreeMap::identity(&[a.clone(), b.clone()]);
    for _ in 0..len {
        let which = *['a', 'b'].choose(rng).unwrap();
        let t = genus_one_twist(&a, &b, which, rng.gen_bool(0.5));
        phi = t.after(&phi);
    }
    phi
}
