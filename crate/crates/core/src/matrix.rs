//! Dense matrices over exact commutative rings.
//!
//! The ring is abstracted by [`Element`]; elements know how to build their own
//! zero and one, so a matrix carries a `zero` prototype and empty matrices stay
//! well typed. Determinants and linear solves are fraction free: they only ever
//! divide by previous pivots, and those divisions are exact by Sylvester's
//! identity. A failed exact division therefore means an arithmetic bug and
//! aborts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::par;

/// A commutative ring element with value semantics.
pub trait Element: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// Rough size, used to pick cheap pivots.
    fn weight(&self) -> usize {
        1
    }
}

/// Rings where `a / b` can be computed whenever `b` divides `a`.
pub trait ExactDivision: Element {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Element for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        self.bits() as usize
    }
}

impl ExactDivision for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl Element for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl ExactDivision for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

impl<T: Element> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, zero: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, zero: T) -> Self {
        let one = zero.one_like();
        Self::from_fn(n, n, zero, |i, j| if i == j { Some(one.clone()) } else { None })
    }

    /// Builds a matrix entry by entry; `None` means zero.
    pub fn from_fn(rows: usize, cols: usize, zero: T, mut f: impl FnMut(usize, usize) -> Option<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j).unwrap_or_else(|| zero.clone()));
            }
        }
        Matrix { rows, cols, data, zero }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, zero: T) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            zero,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn zero_element(&self) -> &T {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let cols = self.cols.max(1);
        self.data.iter().enumerate().map(move |(k, v)| ((k / cols, k % cols), v))
    }

    pub fn map<U: Element>(&self, zero: U, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
            zero,
        }
    }

    pub fn try_map<U: Element, E>(&self, zero: U, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
            zero,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| Some(self.get(j, i).clone()))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), self.zero.clone(), |i, j| {
            Some(self.get(rows[i], cols[j]).clone())
        })
    }

    pub fn without_row(&self, drop: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != drop).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&keep, &cols)
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Self) -> Result<Self> {
        if self.cols != below.cols {
            return Err(Error::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
            zero: self.zero.clone(),
        })
    }

    /// Places `right` next to `self`.
    pub fn hstack(&self, right: &Self) -> Result<Self> {
        if self.rows != right.rows {
            return Err(Error::Dimension(format!("hstack of {} and {} rows", self.rows, right.rows)));
        }
        Ok(Self::from_fn(self.rows, self.cols + right.cols, self.zero.clone(), |i, j| {
            Some(if j < self.cols {
                self.get(i, j).clone()
            } else {
                right.get(i, j - self.cols).clone()
            })
        }))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.zero.clone());
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero_element() && !b.is_zero_element() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::minus)
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(self.zero.clone(), |x| x.times(factor))
    }

    pub fn neg(&self) -> Self {
        self.map(self.zero.clone(), T::negated)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
            zero: self.zero.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero_element)
    }
}

impl<T: ExactDivision> Matrix<T> {
    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Panics if the matrix is not square, or if an intermediate division is
    /// inexact (which cannot happen in an integral domain).
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a {}x{} matrix", self.rows, self.cols);
        let n = self.rows;
        let one = self.zero.one_like();
        if n == 0 {
            return one;
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = one;
        for k in 0..n {
            let Some(p) = pick_pivot(&a, n, k, k..n) else {
                return self.zero.clone();
            };
            if p != k {
                swap_rows(&mut a, n, p, k);
                negate = !negate;
            }
            if k + 1 == n {
                break;
            }
            let (head, tail) = a.split_at_mut((k + 1) * n);
            let pivot_row = &head[k * n..];
            let zero = &self.zero;
            let prev_ref = &prev;
            par::for_each_chunk_mut(tail, n, |row| {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let v = row[j].times(&pivot_row[k]).minus(&lead.times(&pivot_row[j]));
                    row[j] = v
                        .exact_div(prev_ref)
                        .unwrap_or_else(|| panic!("Bareiss elimination: inexact division by previous pivot"));
                }
                row[k] = zero.clone();
            });
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if negate {
            d.negated()
        } else {
            d
        }
    }

    /// Fraction-free Gauss-Jordan elimination on `[self | rhs]`.
    ///
    /// Returns `(numerators, d)` with `self * numerators = d * rhs` and
    /// `d = ±det(self)`, or `None` when `self` is singular.
    pub fn solve_fraction_free(&self, rhs: &Self) -> Result<Option<(Self, T)>> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::Dimension(format!(
                "solve with {}x{} system and {}x{} right-hand side",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = self.rows;
        let width = n + rhs.cols;
        let aug = self.hstack(rhs)?;
        let mut a = aug.data;
        let mut prev = self.zero.one_like();
        for k in 0..n {
            let Some(p) = pick_pivot(&a, width, k, k..n) else {
                return Ok(None);
            };
            if p != k {
                swap_rows(&mut a, width, p, k);
            }
            let pivot_row: Vec<T> = a[k * width..(k + 1) * width].to_vec();
            let zero = &self.zero;
            let prev_ref = &prev;
            par::for_each_chunk_mut_indexed(&mut a, width, |i, row| {
                if i == k {
                    return;
                }
                let lead = row[k].clone();
                for j in 0..width {
                    if j == k {
                        continue;
                    }
                    let v = row[j].times(&pivot_row[k]).minus(&lead.times(&pivot_row[j]));
                    row[j] = v
                        .exact_div(prev_ref)
                        .unwrap_or_else(|| panic!("Gauss-Jordan elimination: inexact division by previous pivot"));
                }
                row[k] = zero.clone();
            });
            prev = a[k * width + k].clone();
        }
        if n == 0 {
            return Ok(Some((rhs.clone(), prev)));
        }
        let numer = Matrix::from_fn(n, rhs.cols, self.zero.clone(), |i, j| Some(a[i * width + n + j].clone()));
        Ok(Some((numer, prev)))
    }
}

fn pick_pivot<T: Element>(a: &[T], width: usize, col: usize, rows: std::ops::Range<usize>) -> Option<usize> {
    rows.filter(|&r| !a[r * width + col].is_zero_element())
        .min_by_key(|&r| (a[r * width + col].weight(), r))
}

fn swap_rows<T>(a: &mut [T], width: usize, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    let (lo, hi) = (r1.min(r2), r1.max(r2));
    let (first, second) = a.split_at_mut(hi * width);
    first[lo * width..(lo + 1) * width].swap_with_slice(&mut second[..width]);
}

impl<T: Element + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        list.finish()
    }
}

/// Integer matrix helpers used by the Seifert and abelianization code.
pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            BigInt::zero(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(BigRational::zero(), |x| BigRational::from_integer(x.clone()))
    }
}

impl RatMatrix {
    /// Inverse over the rationals, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let id = Matrix::identity(self.rows, BigRational::zero());
        let (numer, d) = self.solve_fraction_free(&id).ok()??;
        Some(numer.map(BigRational::zero(), |x| x / &d))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Demotes to an integer matrix when every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.is_integral()
            .then(|| self.map(BigInt::zero(), |x| x.to_integer()))
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_i64(rows).map(|m| m.to_rational())
    }
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", x.numer().abs(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
