//! Alexander data of odd pretzel knots and the homological-fiberedness census.
//!
//! For three strands the Alexander polynomial is
//! `((pq+qr+rp)(t²-2t+1) + t² + 2t + 1) / 4`, so the knot is homologically
//! fibered exactly when the leading coefficient `(pq+qr+rp+1)/4` is `±1`.
//! For five strands only the leading coefficient is used:
//! `(1 + e₂ + e₄)/16` in the elementary symmetric polynomials of the
//! parameters. The constant `1` matters: without it no parameter choice gives
//! an integer, and `P(1,1,1,1,1)` (the `(2,5)` torus knot) must come out monic.
//!
//! The five-strand scan never loops over the last parameter. The leading
//! coefficient is affine in each variable, so with the first four fixed the
//! equation `1 + e₂ + e₄ = ±16` is solved for `u` directly.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::{normalize_alexander, NormalizedAlexander, RatLaurentPoly, Variables};
use crate::par::{self, Strategy};

fn check_odd(xs: &[i64]) -> Result<()> {
    if xs.iter().any(|x| x % 2 == 0) {
        Err(Error::NotOdd(xs.to_vec()))
    } else {
        Ok(())
    }
}

fn fmt_type(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    write!(f, "{{{}}}", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pretzel3 {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl Pretzel3 {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        check_odd(&[p, q, r])?;
        Ok(Pretzel3 { p, q, r })
    }

    pub fn params(&self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    /// `pq + qr + rp`.
    pub fn pair_sum(&self) -> i64 {
        self.p * self.q + self.q * self.r + self.r * self.p
    }

    /// Leading coefficient `(pq+qr+rp+1)/4` of the Alexander polynomial.
    pub fn leading(&self) -> i64 {
        (self.pair_sum() + 1) / 4
    }
}

impl fmt::Display for Pretzel3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_type(f, &self.params())
    }
}

/// Normalized Alexander polynomial of `P(p, q, r)`.
pub fn alexander3(k: &Pretzel3) -> Result<NormalizedAlexander> {
    let vars = Variables::new(["t"]);
    let s = BigInt::from(k.pair_sum());
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let q = |c: BigInt| BigRational::from_integer(c) * &quarter;
    let poly = RatLaurentPoly::from_terms(
        &vars,
        [
            (vec![2], q(&s + 1)),
            (vec![1], q(-2 * &s + 2)),
            (vec![0], q(&s + 1)),
        ],
    );
    let integral = poly
        .to_integer()
        .ok_or_else(|| Error::Domain(format!("Alexander polynomial of {k} is not integral")))?;
    normalize_alexander(&integral)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pretzel5 {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
    pub u: i64,
}

impl Pretzel5 {
    pub fn new(p: i64, q: i64, r: i64, s: i64, u: i64) -> Result<Self> {
        check_odd(&[p, q, r, s, u])?;
        Ok(Pretzel5 { p, q, r, s, u })
    }

    pub fn params(&self) -> [i64; 5] {
        [self.p, self.q, self.r, self.s, self.u]
    }

    /// `16 ×` the leading coefficient, i.e. `1 + e₂ + e₄`.
    pub fn leading_times_16(&self) -> i128 {
        let x: Vec<i128> = self.params().iter().map(|&v| v as i128).collect();
        let mut e = [0i128; 6];
        e[0] = 1;
        for &v in &x {
            for k in (1..6).rev() {
                e[k] += e[k - 1] * v;
            }
        }
        1 + e[2] + e[4]
    }
}

impl fmt::Display for Pretzel5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_type(f, &self.params())
    }
}

/// Leading coefficient `(1 + e₂ + e₄)/16` of the Alexander polynomial of the
/// five-strand pretzel knot.
pub fn leading5(k: &Pretzel5) -> BigRational {
    BigRational::new(BigInt::from(k.leading_times_16()), BigInt::from(16))
}

/// Output order of a census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Ordering {
    /// Leading coefficient `+1` before `-1`; inside each group the negative
    /// parameters closest to zero come first, then positives ascending.
    #[default]
    Published,
    Lexicographic,
}

/// A census hit together with the sign of its leading coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hit<K> {
    pub knot: K,
    pub leading: i64,
}

/// Inclusive ranges for the three-strand scan: `p_min ≤ p ≤ p_max < 0`,
/// `qr_min ≤ q ≤ r ≤ qr_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range3 {
    pub p_min: i64,
    pub p_max: i64,
    pub qr_min: i64,
    pub qr_max: i64,
}

impl Range3 {
    /// `-100 < p ≤ -3`, `3 ≤ q ≤ r < 100`.
    pub const STANDARD: Range3 = Range3 {
        p_min: -99,
        p_max: -3,
        qr_min: 3,
        qr_max: 99,
    };
}

fn odd_values(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|x| x.rem_euclid(2) == 1).collect()
}

/// Three-strand pretzel knots in the range with `|(pq+qr+rp+1)/4| = 1`.
pub fn census3(range: Range3, ordering: Ordering, strategy: Strategy) -> Vec<Hit<Pretzel3>> {
    let ps = odd_values(range.p_min, range.p_max);
    let qs = odd_values(range.qr_min, range.qr_max);
    let mut hits = par::flat_map_ordered(ps, strategy, |p| {
        let mut out = Vec::new();
        for (i, &q) in qs.iter().enumerate() {
            for &r in &qs[i..] {
                let sum = p * q + q * r + r * p;
                if sum == 3 || sum == -5 {
                    out.push(Hit {
                        knot: Pretzel3 { p, q, r },
                        leading: (sum + 1) / 4,
                    });
                }
            }
        }
        out
    });
    sort_hits(&mut hits, ordering, |k| k.params().to_vec());
    hits
}

/// Ranges for a five-strand scan. The sorted parameters split into
/// `negatives` entries from `neg_min..=neg_max` followed by `5 - negatives`
/// entries from `pos_min..=pos_max`; the negative block is nondecreasing when
/// it has two entries, the positive block is always nondecreasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range5 {
    pub negatives: usize,
    pub neg_min: i64,
    pub neg_max: i64,
    pub pos_min: i64,
    pub pos_max: i64,
}

impl Range5 {
    /// `-500 < p ≤ -3`, `3 ≤ q ≤ r ≤ s ≤ u < 500`.
    pub const ONE_NEGATIVE: Range5 = Range5 {
        negatives: 1,
        neg_min: -499,
        neg_max: -3,
        pos_min: 3,
        pos_max: 499,
    };

    /// `-300 < p ≤ q ≤ -3`, `3 ≤ r ≤ s ≤ u < 300`.
    pub const TWO_NEGATIVE: Range5 = Range5 {
        negatives: 2,
        neg_min: -299,
        neg_max: -3,
        pos_min: 3,
        pos_max: 299,
    };
}

/// With the first three parameters fixed, runs `s` over `svals` and solves
/// for `u ≥ s`.
fn scan_last_two(prefix: [i64; 3], svals: &[i64], pos_max: i64, out: &mut Vec<Hit<Pretzel5>>) {
    let [a, b, c] = prefix.map(i128::from);
    let (e1, e2, e3) = (a + b + c, a * b + b * c + c * a, a * b * c);
    let mut us = Vec::new();
    for &s in svals {
        let sv = s as i128;
        // Symmetric functions of (a, b, c, s), then split off the terms in u.
        let (f1, f2, f3, f4) = (e1 + sv, e2 + sv * e1, e3 + sv * e2, sv * e3);
        for target in [16i128, -16] {
            us.clear();
            solve_last(1 + f2 + f4, f1 + f3, target, s, pos_max, &mut us);
            for &u in &us {
                out.push(Hit {
                    knot: Pretzel5 {
                        p: prefix[0],
                        q: prefix[1],
                        r: prefix[2],
                        s,
                        u,
                    },
                    leading: (target / 16) as i64,
                });
            }
        }
    }
}

/// Odd values `u` in `[lo, hi]` with `c0 + c1·u = target`.
fn solve_last(c0: i128, c1: i128, target: i128, lo: i64, hi: i64, out: &mut Vec<i64>) {
    if c1 == 0 {
        if c0 == target {
            out.extend(odd_values(lo, hi));
        }
        return;
    }
    let (mut num, mut c1) = (target - c0, c1);
    if c1 < 0 {
        num = -num;
        c1 = -c1;
    }
    // Range test first: it needs no division and rejects almost everything.
    if num < lo as i128 * c1 || num > hi as i128 * c1 || num % c1 != 0 {
        return;
    }
    let u = num / c1;
    if u.rem_euclid(2) == 1 {
        out.push(u as i64);
    }
}

/// Five-strand pretzel knots in the range with `|(1 + e₂ + e₄)/16| = 1`.
pub fn census5(range: Range5, ordering: Ordering, strategy: Strategy) -> Result<Vec<Hit<Pretzel5>>> {
    if !(1..=2).contains(&range.negatives) {
        return Err(Error::Domain(format!(
            "five-strand scans take one or two negative parameters, got {}",
            range.negatives
        )));
    }
    let negs = odd_values(range.neg_min, range.neg_max);
    let pos = odd_values(range.pos_min, range.pos_max);
    // Outer work items: the fixed prefix (p) or (p, q) for two negatives, plus
    // the first positive entry.
    let mut items: Vec<(i64, Option<i64>, usize)> = Vec::new();
    for (i, &p) in negs.iter().enumerate() {
        if range.negatives == 1 {
            for j in 0..pos.len() {
                items.push((p, None, j));
            }
        } else {
            for &q in &negs[i..] {
                for j in 0..pos.len() {
                    items.push((p, Some(q), j));
                }
            }
        }
    }
    let pos_max = range.pos_max;
    let mut hits = par::flat_map_ordered(items, strategy, |(p, q, j)| {
        let mut out = Vec::new();
        match q {
            None => {
                let q = pos[j];
                for (k, &r) in pos.iter().enumerate().skip(j) {
                    scan_last_two([p, q, r], &pos[k..], pos_max, &mut out);
                }
            }
            Some(q) => scan_last_two([p, q, pos[j]], &pos[j..], pos_max, &mut out),
        }
        out
    });
    sort_hits(&mut hits, ordering, |k| k.params().to_vec());
    Ok(hits)
}

fn sort_hits<K: Copy + Ord>(hits: &mut [Hit<K>], ordering: Ordering, params: impl Fn(&K) -> Vec<i64>) {
    match ordering {
        Ordering::Lexicographic => hits.sort_by_key(|h| h.knot),
        Ordering::Published => hits.sort_by_key(|h| {
            let xs = params(&h.knot);
            let mut negs: Vec<i64> = xs.iter().copied().filter(|x| *x < 0).map(|x| -x).collect();
            negs.reverse();
            let posv: Vec<i64> = xs.iter().copied().filter(|x| *x > 0).collect();
            (Reverse(h.leading), negs, posv)
        }),
    }
}
