//! Seifert-matrix invariants.
//!
//! For a Seifert matrix `S` of size `m = 2g + n - 1`:
//! the Alexander polynomial is `det(tS - Sᵀ)`, the surface is (rationally)
//! homologically fibered when `det S` is `±1` (nonzero), and the induced
//! monodromy on first homology is `σ = (Sᵀ)⁻¹ S`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{normalize_alexander, LaurentPoly, NormalizedAlexander, RatLaurentPoly, Variables};
use crate::matrix::{IntMatrix, Matrix, RatMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct SeifertMatrix {
    g: u32,
    n: u32,
    s: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(g: u32, n: u32, s: IntMatrix) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a Seifert surface needs at least one boundary component".into()));
        }
        let m = (2 * g + n - 1) as usize;
        if s.rows() != m || s.cols() != m {
            return Err(Error::Dimension(format!(
                "Seifert matrix for g={g}, n={n} must be {m}x{m}, got {}x{}",
                s.rows(),
                s.cols()
            )));
        }
        Ok(SeifertMatrix { g, n, s })
    }

    pub fn from_i64(g: u32, n: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let m = (2 * g + n.max(1) - 1) as usize;
        let s = if rows.is_empty() {
            IntMatrix::zeros(0, 0, BigInt::zero())
        } else {
            IntMatrix::from_i64(rows)?
        };
        if rows.is_empty() && m != 0 {
            return Err(Error::Dimension(format!("expected {m} rows, got none")));
        }
        Self::new(g, n, s)
    }

    /// A knot Seifert matrix (`n = 1`) of even size.
    pub fn knot(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() % 2 != 0 {
            return Err(Error::Dimension(format!("knot Seifert matrices have even size, got {}", rows.len())));
        }
        Self::from_i64((rows.len() / 2) as u32, 1, rows)
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn boundary_components(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.s.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.s
    }

    pub fn det(&self) -> BigInt {
        self.s.det()
    }

    /// `S - Sᵀ`, the intersection pairing on the chosen basis.
    pub fn pairing(&self) -> IntMatrix {
        self.s.sub(&self.s.transpose()).expect("square")
    }
}

/// `tS - Sᵀ` over `Z[t^±]`, a presentation matrix of the Alexander module.
pub fn alexander_module_matrix(s: &IntMatrix) -> Matrix<LaurentPoly> {
    let vars = Variables::new(["t"]);
    let st = s.transpose();
    Matrix::from_fn(s.rows(), s.cols(), LaurentPoly::zero(&vars), |i, j| {
        let p = LaurentPoly::from_terms(&vars, [(vec![1], s.get(i, j).clone()), (vec![0], -st.get(i, j))]);
        Some(p)
    })
}

/// Unnormalized `det(tS - Sᵀ)`.
pub fn alexander_raw(sm: &SeifertMatrix) -> LaurentPoly {
    alexander_module_matrix(&sm.s).det()
}

/// Normalized Alexander polynomial; [`Error::DegenerateAlexander`] when it vanishes.
pub fn alexander(sm: &SeifertMatrix) -> Result<NormalizedAlexander> {
    normalize_alexander(&alexander_raw(sm))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    HomologicallyFibered,
    RationallyHomologicallyFibered,
    Neither,
    Degenerate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::HomologicallyFibered => "HomologicallyFibered",
            Verdict::RationallyHomologicallyFibered => "RationallyHomologicallyFibered",
            Verdict::Neither => "Neither",
            Verdict::Degenerate => "Degenerate",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Verdict::HomologicallyFibered,
            Verdict::RationallyHomologicallyFibered,
            Verdict::Neither,
            Verdict::Degenerate,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberednessReport {
    /// `None` when the Alexander polynomial vanishes.
    pub alexander: Option<NormalizedAlexander>,
    /// Degree of Δ equals `2g + n - 1`.
    pub degree_ok: bool,
    /// `|Δ(0)| = 1` for the normalized polynomial.
    pub constant_unit: bool,
    pub det_s: BigInt,
    pub verdict: Verdict,
    /// Verdict from `(degree, Δ(0))`; always equal to `verdict` in practice.
    pub alexander_route: Verdict,
    /// The converse direction needs a minimal-genus surface, which is not checked.
    pub assumes_minimal_genus: bool,
}

impl FiberednessReport {
    pub fn routes_agree(&self) -> bool {
        self.verdict == self.alexander_route
    }
}

pub fn classify(sm: &SeifertMatrix) -> FiberednessReport {
    let det_s = sm.det();
    let delta = alexander(sm).ok();
    let m = sm.size() as u32;
    let degree_ok = delta.as_ref().is_some_and(|d| d.degree == m);
    let constant_unit = delta.as_ref().is_some_and(|d| d.at_zero().abs().is_one());
    let verdict = if det_s.abs().is_one() {
        Verdict::HomologicallyFibered
    } else if !det_s.is_zero() {
        Verdict::RationallyHomologicallyFibered
    } else if delta.is_some() {
        Verdict::Neither
    } else {
        Verdict::Degenerate
    };
    let alexander_route = match &delta {
        None => Verdict::Degenerate,
        Some(_) if degree_ok && constant_unit => Verdict::HomologicallyFibered,
        Some(_) if degree_ok => Verdict::RationallyHomologicallyFibered,
        Some(_) => Verdict::Neither,
    };
    FiberednessReport {
        alexander: delta,
        degree_ok,
        constant_unit,
        det_s,
        verdict,
        alexander_route,
        assumes_minimal_genus: true,
    }
}

/// `σ = (Sᵀ)⁻¹ S` over the rationals.
pub fn sigma(sm: &SeifertMatrix) -> Result<RatMatrix> {
    let st = sm.s.transpose().to_rational();
    let inv = st
        .inverse()
        .ok_or_else(|| Error::Singular("Seifert matrix is singular; the surface is not rationally homologically fibered".into()))?;
    inv.mul(&sm.s.to_rational())
}

/// `σ` as an integer matrix when `det S = ±1`.
pub fn sigma_integral(sm: &SeifertMatrix) -> Result<IntMatrix> {
    let m = sigma(sm)?;
    m.to_integer()
        .ok_or_else(|| Error::Domain(format!("sigma has non-integral entries (det S = {})", sm.det())))
}

/// Checks `σᵀ (S - Sᵀ) σ = S - Sᵀ`.
pub fn check_pairing_preserved(sm: &SeifertMatrix) -> Result<bool> {
    let m = sigma(sm)?;
    let j = sm.pairing().to_rational();
    Ok(m.transpose().mul(&j)?.mul(&m)? == j)
}

/// Both sides of `det(tS - Sᵀ) = det(Sᵀ)·det(tσ - I)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorSides {
    pub lhs: RatLaurentPoly,
    pub rhs: RatLaurentPoly,
}

impl FactorSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn factor_sides(sm: &SeifertMatrix) -> Result<FactorSides> {
    let m = sigma(sm)?;
    let vars = Variables::new(["t"]);
    let lhs = alexander_raw(sm).to_rational();
    let zero = RatLaurentPoly::zero(&vars);
    let n = m.rows();
    let t_sigma_minus_i = Matrix::from_fn(n, n, zero, |i, j| {
        let mut terms = vec![(vec![1], m.get(i, j).clone())];
        if i == j {
            terms.push((vec![0], -BigRational::one()));
        }
        Some(RatLaurentPoly::from_terms(&vars, terms))
    });
    let det_st = RatLaurentPoly::constant(&vars, BigRational::from_integer(sm.det()));
    let rhs = det_st.checked_mul(&t_sigma_minus_i.det())?;
    Ok(FactorSides { lhs, rhs })
}

pub fn factor_check(sm: &SeifertMatrix) -> Result<bool> {
    Ok(factor_sides(sm)?.holds())
}

/// Genus-one Seifert matrix of the odd pretzel knot `P(p, q, r)`:
/// `[[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]]`.
pub fn pretzel_genus_one(p: i64, q: i64, r: i64) -> Result<SeifertMatrix> {
    if [p, q, r].iter().any(|x| x % 2 == 0) {
        return Err(Error::NotOdd(vec![p, q, r]));
    }
    SeifertMatrix::knot(&[vec![(p + q) / 2, (q + 1) / 2], vec![(q - 1) / 2, (q + r) / 2]])
}
