//! The fraction field Q(t1, …, tk) of the Laurent ring, matrices over it, and
//! torsion values modulo units.
//!
//! Fractions are never reduced by a polynomial gcd. They are kept in a cheap
//! canonical shape (integer content removed, denominator shifted to start at
//! exponent zero with a positive lexicographically first coefficient, exact quotients taken
//! when the denominator divides the numerator) and compared by
//! cross-multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, Variables};
use crate::matrix::{Element, ExactDivision, Matrix};

#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.vars() != den.vars() {
            return Err(mismatch(num.vars(), den.vars()));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn zero(vars: &Variables) -> Self {
        Self::from_poly(LaurentPoly::zero(vars))
    }

    pub fn one(vars: &Variables) -> Self {
        Self::from_poly(LaurentPoly::one(vars))
    }

    pub fn from_integer(vars: &Variables, n: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(vars, BigInt::from(n)))
    }

    pub fn parse(text: &str, vars: &Variables) -> Result<Self> {
        match text.split_once('/') {
            Some((n, d)) if n.trim_end().ends_with(')') || d.trim_start().starts_with('(') => {
                let strip = |s: &str| s.trim().trim_start_matches('(').trim_end_matches(')').to_string();
                Self::new(LaurentPoly::parse(&strip(n), vars)?, LaurentPoly::parse(&strip(d), vars)?)
            }
            _ => Ok(Self::from_poly(LaurentPoly::parse(text, vars)?)),
        }
    }

    fn canonical(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            let vars = num.vars().clone();
            return RationalFunction {
                num,
                den: LaurentPoly::one(&vars),
            };
        }
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_coefficients(&g);
            den = den.div_coefficients(&g);
        }
        if let Some((lo, _)) = den.exponent_box() {
            if lo.iter().any(|&x| x != 0) {
                let back: Exponent = lo.iter().map(|x| -x).collect();
                num = num.shift(&back);
                den = den.shift(&back);
            }
        }
        if den.trailing_term().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        if !den.is_one() {
            if let Some(q) = num.exact_div(&den) {
                let vars = q.vars().clone();
                return RationalFunction {
                    num: q,
                    den: LaurentPoly::one(&vars),
                };
            }
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &Variables {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, when it is one.
    pub fn as_polynomial(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.exact_div(&self.den)
        }
    }

    pub fn rf_add(&self, rhs: &Self) -> Result<Self> {
        if self.vars() != rhs.vars() {
            return Err(mismatch(self.vars(), rhs.vars()));
        }
        if self.den == rhs.den {
            return Ok(Self::canonical(self.num.checked_add(&rhs.num)?, self.den.clone()));
        }
        let n = self.num.checked_mul(&rhs.den)?.checked_add(&rhs.num.checked_mul(&self.den)?)?;
        Ok(Self::canonical(n, self.den.checked_mul(&rhs.den)?))
    }

    pub fn rf_neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn rf_sub(&self, rhs: &Self) -> Result<Self> {
        self.rf_add(&rhs.rf_neg())
    }

    pub fn rf_mul(&self, rhs: &Self) -> Result<Self> {
        if self.vars() != rhs.vars() {
            return Err(mismatch(self.vars(), rhs.vars()));
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.vars()));
        }
        Ok(Self::canonical(self.num.checked_mul(&rhs.num)?, self.den.checked_mul(&rhs.den)?))
    }

    pub fn rf_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn rf_div(&self, rhs: &Self) -> Result<Self> {
        self.rf_mul(&rhs.rf_inv()?)
    }

    pub fn rf_eq(&self, rhs: &Self) -> bool {
        self.vars() == rhs.vars()
            && match (self.num.checked_mul(&rhs.den), rhs.num.checked_mul(&self.den)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
    }

    pub fn involute(&self) -> Self {
        Self::canonical(self.num.involute(), self.den.involute())
    }

    /// Value at a rational point; errors when the denominator vanishes there.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn substitute_monomials(&self, target: &Variables, images: &[Exponent]) -> Result<Self> {
        Self::new(
            self.num.substitute_monomials(target, images),
            self.den.substitute_monomials(target, images),
        )
    }

    /// True iff `self = ±t^e · other` for some exponent vector `e`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        if self.vars() != other.vars() {
            return false;
        }
        let (Ok(a), Ok(b)) = (self.num.checked_mul(&other.den), other.num.checked_mul(&self.den)) else {
            return false;
        };
        unit_ratio(&a, &b).is_some()
    }
}

/// The unit `u = ±t^e` with `a = u·b`, if one exists.
pub fn unit_ratio(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.is_zero() || b.is_zero() {
        return (a.is_zero() && b.is_zero()).then(|| LaurentPoly::one(a.vars()));
    }
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let (ea, ca) = a.leading_term()?;
    let (eb, cb) = b.leading_term()?;
    if ca.abs() != cb.abs() {
        return None;
    }
    let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x - y).collect();
    let sign = if ca == cb { BigInt::one() } else { -BigInt::one() };
    let u = LaurentPoly::monomial(a.vars(), e, sign);
    (u.checked_mul(b).ok()? == *a).then_some(u)
}

fn mismatch(a: &Variables, b: &Variables) -> Error {
    Error::VariableMismatch {
        left: a.to_string(),
        right: b.to_string(),
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.rf_eq(other)
    }
}

impl Element for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        Self::one(self.vars())
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.rf_add(rhs).expect("fraction sum across variable lists")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.rf_sub(rhs).expect("fraction difference across variable lists")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.rf_mul(rhs).expect("fraction product across variable lists")
    }
    fn negated(&self) -> Self {
        self.rf_neg()
    }
    fn weight(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }
}

impl ExactDivision for RationalFunction {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.rf_div(divisor).ok()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let n = if self.num.num_terms() > 1 {
                format!("({})", self.num)
            } else {
                self.num.to_string()
            };
            write!(f, "{n}/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

pub type FieldMatrix = Matrix<RationalFunction>;

/// Lifts a polynomial matrix into the fraction field.
pub fn to_field(m: &Matrix<LaurentPoly>) -> FieldMatrix {
    m.map(RationalFunction::from_poly(m.zero_element().clone()), |p| {
        RationalFunction::from_poly(p.clone())
    })
}

/// Multiplies each row by the product of its distinct denominators.
/// Returns the polynomial matrix and the per-row multipliers.
fn clear_rows(m: &FieldMatrix) -> (Matrix<LaurentPoly>, Vec<LaurentPoly>) {
    let vars = m.zero_element().vars().clone();
    let zero = LaurentPoly::zero(&vars);
    let mut multipliers = Vec::with_capacity(m.rows());
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut dens: Vec<&LaurentPoly> = Vec::new();
        for x in m.row(i) {
            if !x.den.is_one() && !dens.contains(&&x.den) {
                dens.push(&x.den);
            }
        }
        let l = dens
            .iter()
            .fold(LaurentPoly::one(&vars), |acc, d| acc.times(d));
        let row: Vec<LaurentPoly> = m
            .row(i)
            .iter()
            .map(|x| {
                if x.den.is_one() {
                    x.num.times(&l)
                } else {
                    x.num
                        .times(&l)
                        .exact_div(&x.den)
                        .expect("row multiplier is a multiple of every denominator")
                }
            })
            .collect();
        rows.push(row);
        multipliers.push(l);
    }
    let pm = Matrix::from_rows(rows, zero.clone()).unwrap_or_else(|_| Matrix::zeros(m.rows(), m.cols(), zero));
    (pm, multipliers)
}

impl FieldMatrix {
    /// Determinant: clear denominators row by row, take a fraction-free
    /// determinant over the Laurent ring, then divide by the multipliers.
    pub fn field_det(&self) -> Result<RationalFunction> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows(), self.cols())));
        }
        let vars = self.zero_element().vars().clone();
        let (pm, mult) = clear_rows(self);
        let d = pm.det();
        let l = mult.iter().fold(LaurentPoly::one(&vars), |acc, m| acc.times(m));
        RationalFunction::new(d, l)
    }

    /// Solves `self · X = rhs`; a singular system yields [`Error::Singular`].
    pub fn solve_right(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if !self.is_square() || rhs.rows() != self.rows() {
            return Err(Error::Dimension(format!(
                "solve with {}x{} system and {}x{} right-hand side",
                self.rows(),
                self.cols(),
                rhs.rows(),
                rhs.cols()
            )));
        }
        let n = self.cols();
        let aug = self.hstack(rhs)?;
        let (pm, _) = clear_rows(&aug);
        let all: Vec<usize> = (0..pm.rows()).collect();
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..n + rhs.cols()).collect();
        let a = pm.submatrix(&all, &left);
        let b = pm.submatrix(&all, &right);
        let (numer, d) = a
            .solve_fraction_free(&b)?
            .ok_or_else(|| Error::Singular(format!("{n}x{n} system over the fraction field")))?;
        numer.try_map(self.zero_element().clone(), |p| RationalFunction::new(p.clone(), d.clone()))
    }

    pub fn field_inverse(&self) -> Result<FieldMatrix> {
        let id = Matrix::identity(self.rows(), self.zero_element().clone());
        self.solve_right(&id)
    }

    /// Entrywise polynomial view, when every entry is a Laurent polynomial.
    pub fn as_polynomial_matrix(&self) -> Option<Matrix<LaurentPoly>> {
        let zero = LaurentPoly::zero(self.zero_element().vars());
        self.try_map(zero, |x| x.as_polynomial().ok_or(())).ok()
    }

    /// Entrywise evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<Matrix<BigRational>> {
        self.try_map(BigRational::zero(), |x| x.evaluate(point))
    }

    pub fn involute_entries(&self) -> FieldMatrix {
        self.map(self.zero_element().clone(), |x| x.involute())
    }
}

/// An element of Q(t)^× (or zero) considered up to multiplication by `±t^e`.
#[derive(Clone, Debug)]
pub struct TorsionClass {
    value: RationalFunction,
}

impl TorsionClass {
    /// Picks the representative whose numerator and denominator both start at
    /// exponent zero and whose numerator has a positive leading coefficient.
    pub fn new(value: RationalFunction) -> Self {
        let mut num = value.num.clone();
        let mut den = value.den.clone();
        if let Some((lo, _)) = num.exponent_box() {
            num = num.shift(&lo.iter().map(|x| -x).collect::<Vec<_>>());
        }
        if let Some((lo, _)) = den.exponent_box() {
            den = den.shift(&lo.iter().map(|x| -x).collect::<Vec<_>>());
        }
        if num.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
        }
        TorsionClass {
            value: RationalFunction::canonical(num, den),
        }
    }

    pub fn representative(&self) -> &RationalFunction {
        &self.value
    }

    pub fn is_trivial(&self) -> bool {
        self.value.eq_up_to_unit(&RationalFunction::one(self.value.vars()))
    }

    pub fn eq_up_to_unit(&self, other: &TorsionClass) -> bool {
        self.value.eq_up_to_unit(&other.value)
    }

    pub fn eq_value_up_to_unit(&self, other: &RationalFunction) -> bool {
        self.value.eq_up_to_unit(other)
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} up to ±monomial", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(names: &[&str]) -> Variables {
        Variables::new(names.iter().copied())
    }

    fn rf(text: &str, v: &Variables) -> RationalFunction {
        RationalFunction::parse(text, v).unwrap()
    }

    #[test]
    fn canonical_form_strips_units_and_content() {
        let t = vs(&["t"]);
        let a = RationalFunction::new(
            LaurentPoly::parse("2*t^3 - 2*t^2", &t).unwrap(),
            LaurentPoly::parse("-4*t^2 - 4*t^3", &t).unwrap(),
        )
        .unwrap();
        assert_eq!(a.denominator(), &LaurentPoly::parse("2*t + 2", &t).unwrap());
        assert_eq!(a.numerator(), &LaurentPoly::parse("-t + 1", &t).unwrap());
        let b = rf("(t^2 - 1)/(t - 1)", &t);
        assert!(b.denominator().is_one());
        assert_eq!(b.numerator(), &LaurentPoly::parse("t + 1", &t).unwrap());
    }

    #[test]
    fn arithmetic_and_equality() {
        let t = vs(&["t"]);
        let a = rf("1/(t - 1)", &t);
        let b = rf("t/(t - 1)", &t);
        assert_eq!(b.rf_sub(&a).unwrap(), RationalFunction::one(&t));
        let c = rf("(t + 1)/(t^2 - 1)", &t);
        assert_eq!(c, a);
        assert_eq!(a.rf_mul(&a.rf_inv().unwrap()).unwrap(), RationalFunction::one(&t));
        assert!(matches!(RationalFunction::zero(&t).rf_inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn unit_equivalence() {
        let t = vs(&["t1", "t2"]);
        let a = rf("t1 - t2", &t);
        let b = rf("t2^3 - t1*t2^2", &t);
        assert!(a.eq_up_to_unit(&b));
        assert!(!a.eq_up_to_unit(&rf("t1 + t2", &t)));
        assert!(!a.eq_up_to_unit(&rf("2*t1 - 2*t2", &t)));
    }

    #[test]
    fn field_determinant_and_solve() {
        let t = vs(&["t"]);
        let m = Matrix::from_rows(
            vec![
                vec![rf("1/(t - 1)", &t), rf("1", &t)],
                vec![rf("t", &t), rf("(t + 1)/(t - 1)", &t)],
            ],
            RationalFunction::zero(&t),
        )
        .unwrap();
        // (t+1)/(t-1)^2 - t
        let expected = rf("(t + 1)/(t - 1)", &t)
            .rf_mul(&rf("1/(t - 1)", &t))
            .unwrap()
            .rf_sub(&rf("t", &t))
            .unwrap();
        assert_eq!(m.field_det().unwrap(), expected);
        let inv = m.field_inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2, RationalFunction::zero(&t)));
    }

    #[test]
    fn singular_solve_reports_error() {
        let t = vs(&["t"]);
        let m = Matrix::from_rows(
            vec![vec![rf("t", &t), rf("1", &t)], vec![rf("t^2", &t), rf("t", &t)]],
            RationalFunction::zero(&t),
        )
        .unwrap();
        assert!(matches!(m.field_inverse(), Err(Error::Singular(_))));
    }

    #[test]
    fn torsion_class_display() {
        let t = vs(&["t"]);
        let c = TorsionClass::new(rf("-t^-2 + t^-1", &t));
        assert_eq!(c.to_string(), "t - 1 up to ±monomial");
        assert!(TorsionClass::new(rf("-t^5", &t)).is_trivial());
    }
}
