//! Multivariate Laurent polynomials with exact coefficients.
//!
//! A polynomial lives in `C[t1^±, …, tk^±]` for an ordered variable list.
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so the term order
//! is lexicographic on exponent vectors (first variable most significant).
//! Zero coefficients are never stored.
//!
//! The canonical text form lists terms from the lexicographically largest
//! exponent down, e.g. `t1 - t1*t2^-1 - t2^-2` or `2*t^2 - 5*t + 2`; `^1` and
//! unit coefficients are elided. [`LaurentPoly::parse`] reads it back.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Element, ExactDivision};

/// Exponent vector of a monomial.
pub type Exponent = Vec<i64>;

/// Exact coefficient ring: the integers or the rationals.
pub trait Coefficient: Clone + Eq + fmt::Debug + Send + Sync + Zero + One + Signed + 'static {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
    fn to_rational(&self) -> BigRational;
    /// Renders a nonnegative coefficient.
    fn render_magnitude(&self) -> String;
    fn parse_literal(numer: &str, denom: Option<&str>) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn render_magnitude(&self) -> String {
        self.abs().to_string()
    }
    fn parse_literal(numer: &str, denom: Option<&str>) -> Option<Self> {
        let n: BigInt = numer.parse().ok()?;
        match denom {
            None => Some(n),
            Some(d) => n.exact_quotient(&d.parse().ok()?),
        }
    }
}

impl Coefficient for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn render_magnitude(&self) -> String {
        let a = self.abs();
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse_literal(numer: &str, denom: Option<&str>) -> Option<Self> {
        let n: BigInt = numer.parse().ok()?;
        let d: BigInt = match denom {
            None => BigInt::one(),
            Some(d) => d.parse().ok()?,
        };
        (!d.is_zero()).then(|| BigRational::new(n, d))
    }
}

/// Ordered list of variable names shared by compatible polynomials.
#[derive(Clone, Eq)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Variables(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn empty() -> Self {
        Variables::new(Vec::<String>::new())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The same list with one variable removed.
    pub fn without(&self, index: usize) -> Variables {
        Variables::new(self.0.iter().enumerate().filter(|&(i, _)| i != index).map(|(_, v)| v.clone()))
    }
}

impl PartialEq for Variables {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for Variables {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(" "))
    }
}

impl fmt::Display for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

/// An element of `C[t1^±, …, tk^±]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = BigInt> {
    vars: Variables,
    terms: BTreeMap<Exponent, C>,
}

/// Laurent polynomial with rational coefficients.
pub type RatLaurentPoly = LaurentPoly<BigRational>;

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(vars: &Variables) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Variables) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: &Variables, c: C) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    /// `c * t^exps`.
    pub fn monomial(vars: &Variables, exps: Exponent, c: C) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable `name` itself.
    pub fn var(vars: &Variables, name: &str) -> Result<Self> {
        let idx = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, e, C::one()))
    }

    /// Sums the given terms, merging equal exponents.
    pub fn from_terms(vars: &Variables, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next()
    }

    pub fn coefficient(&self, exps: &[i64]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul_ref(c))).collect(),
        }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len(), "shift length");
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same variables");
        }
        acc
    }

    /// True iff the polynomial is `±t^e` for some exponent vector `e`.
    pub fn is_monomial_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Image under the involution `t ↦ t^-1` (every exponent negated).
    pub fn involute(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum and maximum exponents; `None` for zero.
    pub fn exponent_box(&self) -> Option<(Exponent, Exponent)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for k in 0..e.len() {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    ///
    /// Lexicographic order is a group order on exponents, so leading terms
    /// multiply. A genuine quotient also has its exponents inside the box
    /// `[lo(a) - lo(b), hi(a) - hi(b)]`; leaving that box proves
    /// non-divisibility and bounds the loop.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if self.vars != divisor.vars || divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.vars));
        }
        let (alo, ahi) = self.exponent_box()?;
        let (blo, bhi) = divisor.exponent_box()?;
        let qlo: Exponent = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let qhi: Exponent = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();
        if qlo.iter().zip(&qhi).any(|(l, h)| l > h) {
            return None;
        }
        let (be, bc) = divisor.leading_term()?;
        let (be, bc) = (be.clone(), bc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((re, rc)) = rem.leading_term() {
            let qe: Exponent = re.iter().zip(&be).map(|(a, b)| a - b).collect();
            if qe.iter().zip(qlo.iter().zip(&qhi)).any(|(x, (l, h))| x < l || x > h) {
                return None;
            }
            let qc = rc.exact_quotient(&bc)?;
            for (e, c) in &divisor.terms {
                let prod: Exponent = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(prod, -c.mul_ref(&qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Value at a point with every variable assigned a nonzero rational.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.to_rational();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if point[k].is_zero() {
                    if x < 0 {
                        return Err(Error::ZeroSubstitution(self.vars.names()[k].clone()));
                    }
                    v = BigRational::zero();
                    continue;
                }
                v *= num_traits::pow::Pow::pow(&point[k], x as i32);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Value at a point given by name.
    pub fn evaluate_named(&self, point: &[(&str, BigRational)]) -> Result<BigRational> {
        let mut values = vec![None; self.vars.len()];
        for (name, v) in point {
            let idx = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            values[idx] = Some(v.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| v.ok_or_else(|| Error::Domain(format!("no value for `{}`", self.vars.names()[k]))))
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&values)
    }

    /// Coefficient of `t^0`.
    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.vars.len()])
    }

    /// Sum of coefficients: the image under every `t_i ↦ 1`.
    pub fn augmentation(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc.add_ref(c))
    }

    /// Substitutes the monomial `t^value` (over the remaining variables) for
    /// `var`, dropping `var` from the variable list.
    pub fn specialize(&self, var: &str, value: &[i64]) -> Result<Self> {
        let idx = self.vars.index_of(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let vars = self.vars.without(idx);
        if value.len() != vars.len() {
            return Err(Error::Dimension(format!(
                "specialization monomial has {} exponents, expected {}",
                value.len(),
                vars.len()
            )));
        }
        let mut out = Self::zero(&vars);
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut ne: Exponent = e.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, &x)| x).collect();
            for (a, b) in ne.iter_mut().zip(value) {
                *a += k * b;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Maps the polynomial into a new variable list, sending each old variable
    /// to the given exponent vector over `target`.
    pub fn substitute_monomials(&self, target: &Variables, images: &[Exponent]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                for (a, b) in ne.iter_mut().zip(&images[k]) {
                    *a += x * b;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Degree in a single-variable polynomial (highest exponent).
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.first().copied().unwrap_or(0)).max()
    }

    /// Lowest exponent in a single-variable polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.first().copied().unwrap_or(0)).min()
    }

    pub fn to_rational(&self) -> RatLaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.to_rational())).collect(),
        }
    }

    /// Parses the canonical text form (terms in any order, whitespace free).
    pub fn parse(text: &str, vars: &Variables) -> Result<Self> {
        PolyParser::new(text, vars).parse()
    }

    /// Renders using a caller-supplied variable naming.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl RatLaurentPoly {
    /// Demotes to integer coefficients when all coefficients are integral.
    pub fn to_integer(&self) -> Option<LaurentPoly<BigInt>> {
        self.terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer())))
            .collect::<Option<BTreeMap<_, _>>>()
            .map(|terms| LaurentPoly {
                vars: self.vars.clone(),
                terms,
            })
    }
}

impl LaurentPoly<BigInt> {
    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_coefficients(&self, d: &BigInt) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.exact_quotient(d).expect("coefficient divisibility")))
                .collect(),
        }
    }
}

impl<C: Coefficient> Element for LaurentPoly<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.vars)
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("Laurent addition across variable lists")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("Laurent subtraction across variable lists")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("Laurent product across variable lists")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn weight(&self) -> usize {
        self.terms.len()
    }
}

impl<C: Coefficient> ExactDivision for LaurentPoly<C> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly::exact_div(self, divisor)
    }
}

impl<C: Coefficient> PartialOrd for LaurentPoly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coefficient> Ord for LaurentPoly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

fn render_monomial(vars: &Variables, e: &[i64]) -> String {
    e.iter()
        .enumerate()
        .filter(|&(_, &x)| x != 0)
        .map(|(k, &x)| {
            if x == 1 {
                vars.names()[k].clone()
            } else {
                format!("{}^{}", vars.names()[k], x)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = render_monomial(&self.vars, e);
            let mag = c.render_magnitude();
            if mono.is_empty() {
                f.write_str(&mag)?;
            } else if c.abs().is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({} in {:?})", self, self.vars)
    }
}

struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a Variables,
}

impl<'a> PolyParser<'a> {
    fn new(text: &str, vars: &'a Variables) -> Self {
        PolyParser {
            chars: text.chars().collect(),
            pos: 0,
            vars,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn parse<C: Coefficient>(mut self) -> Result<LaurentPoly<C>> {
        let mut out = LaurentPoly::zero(self.vars);
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
            };
            first = false;
            let (e, c) = self.term::<C>()?;
            out.add_term(e, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term<C: Coefficient>(&mut self) -> Result<(Exponent, C)> {
        let mut coeff = C::one();
        let mut exps = vec![0i64; self.vars.len()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let numer = self.digits();
                    let denom = if self.peek() == Some('/') {
                        self.pos += 1;
                        self.skip_ws();
                        let d = self.digits();
                        if d.is_empty() {
                            return Err(self.err("expected denominator"));
                        }
                        Some(d)
                    } else {
                        None
                    };
                    let lit = C::parse_literal(&numer, denom.as_deref())
                        .ok_or_else(|| self.err(format!("coefficient `{numer}` not representable")))?;
                    coeff = coeff.mul_ref(&lit);
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < self.chars.len()
                        && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                    {
                        self.pos += 1;
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let idx = self.vars.index_of(&name).ok_or_else(|| Error::Parse {
                        line: 1,
                        column: start + 1,
                        message: format!("unknown variable `{name}`"),
                    })?;
                    let mut power = 1i64;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let sign = match self.peek() {
                            Some('-') => {
                                self.pos += 1;
                                -1
                            }
                            Some('+') => {
                                self.pos += 1;
                                1
                            }
                            _ => 1,
                        };
                        self.skip_ws();
                        let d = self.digits();
                        power = sign * d.parse::<i64>().map_err(|_| self.err("expected exponent"))?;
                    }
                    exps[idx] += power;
                }
                Some(c) => return Err(self.err(format!("unexpected `{c}`"))),
                None => return Err(self.err("unexpected end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
                continue;
            }
            break;
        }
        Ok((exps, coeff))
    }
}

/// A one-variable Alexander polynomial shifted so its lowest term has degree
/// 0 and a positive coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedAlexander {
    pub poly: LaurentPoly,
    pub degree: u32,
}

impl NormalizedAlexander {
    /// `Δ(0)`, the constant term.
    pub fn at_zero(&self) -> BigInt {
        self.poly.constant_term()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.poly.coefficient(&[self.degree as i64])
    }
}

impl fmt::Display for NormalizedAlexander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self.poly, self.degree)
    }
}

/// Normalizes a one-variable polynomial: multiply by `±t^k` so that the
/// lowest degree is 0 and the constant term is positive.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<NormalizedAlexander> {
    if p.vars().len() != 1 {
        return Err(Error::Domain(format!(
            "Alexander polynomials are single-variable, got [{}]",
            p.vars()
        )));
    }
    let (low, c) = match p.trailing_term() {
        Some((e, c)) => (e[0], c.clone()),
        None => return Err(Error::DegenerateAlexander),
    };
    let mut q = p.shift(&[-low]);
    if c.is_negative() {
        q = q.neg();
    }
    let degree = q.degree().unwrap_or(0) as u32;
    Ok(NormalizedAlexander { poly: q, degree })
}
