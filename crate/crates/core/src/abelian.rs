//! Free abelianization of a finitely presented group.
//!
//! The relation matrix (relators × generators, entries = exponent sums) is
//! diagonalized by unimodular row and column operations, `U·M·V = D`. In the
//! coordinates `c·V` the relation lattice is spanned by the rows of `D`, so
//! the free part of `H₁` is spanned by the coordinates past the rank, and a
//! generator `x_i` maps to row `i` of `V` restricted to those columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::Variables;
use crate::word::{Generator, MonomialMap, Word};

/// Result of abelianizing: free rank, torsion coefficients and the map to `Z^rank`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors larger than one.
    pub torsion: Vec<BigInt>,
    pub map: MonomialMap,
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(gens: &[Generator], relators: &[Word]) -> Vec<Vec<BigInt>> {
    relators
        .iter()
        .map(|r| gens.iter().map(|g| BigInt::from(r.exponent_sum(g))).collect())
        .collect()
}

/// Diagonalizes `m` in place and returns the column transform `V`.
fn diagonalize(m: &mut [Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_op = |m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt| {
        for row in m.iter_mut() {
            let x = &row[src] * k;
            row[dst] -= x;
        }
        for row in v.iter_mut() {
            let x = &row[src] * k;
            row[dst] -= x;
        }
    };
    let col_swap = |m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        col_swap(m, &mut v, t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    let (top, rest) = m.split_at_mut(i);
                    for (x, y) in rest[0].iter_mut().zip(&top[t]) {
                        *x -= &q * y;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    col_op(m, &mut v, j, t, &q);
                    if !m[t][j].is_zero() {
                        col_swap(m, &mut v, t, j);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        t += 1;
    }
    v
}

/// Free abelianization of `⟨gens | relators⟩` with variables named by `names`
/// (one per free generator of `H₁`; extra names are an error).
pub fn abelianize(gens: &[Generator], relators: &[Word], names: &[&str]) -> Result<Abelianization> {
    let n = gens.len();
    let mut m = relation_matrix(gens, relators);
    let v = diagonalize(&mut m, n);
    let rank = (0..m.len().min(n)).take_while(|&i| !m[i][i].is_zero()).count();
    let torsion: Vec<BigInt> = (0..rank).map(|i| m[i][i].abs()).filter(|d| !d.is_one()).collect();
    let free_rank = n - rank;
    if names.len() != free_rank {
        return Err(Error::Dimension(format!(
            "abelianization has free rank {free_rank}, but {} variable names were supplied",
            names.len()
        )));
    }
    let vars = Variables::new(names.iter().copied());
    let mut map = MonomialMap::new(vars);
    for (i, g) in gens.iter().enumerate() {
        let exps: Vec<i64> = (rank..n)
            .map(|j| v[i][j].to_i64().ok_or_else(|| Error::Domain("abelianization exponent overflow".into())))
            .collect::<Result<_>>()?;
        map.insert(g.clone(), exps)?;
    }
    Ok(Abelianization { free_rank, torsion, map })
}

/// Free rank of `H₁` of `⟨gens | relators⟩`.
pub fn free_rank(gens: &[Generator], relators: &[Word]) -> usize {
    let n = gens.len();
    let mut m = relation_matrix(gens, relators);
    diagonalize(&mut m, n);
    n - (0..m.len().min(n)).take_while(|&i| !m[i][i].is_zero()).count()
}

/// Rank-one abelianization normalized so that `anchor ↦ var`.
pub fn abelianize_rank_one(gens: &[Generator], relators: &[Word], anchor: &Generator, var: &str) -> Result<MonomialMap> {
    let ab = abelianize(gens, relators, &[var])?;
    let e = ab
        .map
        .image(anchor)
        .ok_or_else(|| Error::UnknownGenerator(anchor.to_string()))?[0];
    if e.abs() != 1 {
        return Err(Error::Domain(format!(
            "`{anchor}` maps to {var}^{e} in the abelianization, not to a generator"
        )));
    }
    if e == 1 {
        return Ok(ab.map);
    }
    Ok(ab.map.compose_lattice(ab.map.vars(), &[vec![-1]]))
}
