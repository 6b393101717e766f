//! Free-group words and Fox calculus through an abelian representation.
//!
//! Words are run-length encoded: a list of `(generator, exponent)` letters with
//! nonzero exponents and no two adjacent letters on the same generator.
//! Fox derivatives are taken with the left convention
//! `∂(uv)/∂g = ∂u/∂g + u·∂v/∂g` and pushed straight into
//! `Z[t1^±, …, tk^±]` through a [`MonomialMap`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, Variables};

/// A generator name: nonempty, over `[A-Za-z0-9_]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(String);

impl Generator {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Domain(format!("invalid generator name `{name}`")));
        }
        Ok(Generator(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(Generator, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: Generator) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    /// Freely reduces a raw letter list. Zero exponents are dropped.
    pub fn reduce(raw: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut letters: Vec<(Generator, i64)> = Vec::new();
        for (g, e) in raw {
            if e == 0 {
                continue;
            }
            match letters.last_mut() {
                Some((last, k)) if *last == g => {
                    *k += e;
                    if *k == 0 {
                        letters.pop();
                    }
                }
                _ => letters.push((g, e)),
            }
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Syllable count.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn invert(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|(g, e)| (g.clone(), -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::reduce(self.letters.iter().chain(&other.letters).cloned())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &Word) -> Self {
        u.concat(self).concat(&u.invert())
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.letters.iter().map(|(g, _)| g)
    }

    /// Total exponent of `g` in the word.
    pub fn exponent_sum(&self, g: &Generator) -> i64 {
        self.letters.iter().filter(|(h, _)| h == g).map(|(_, e)| e).sum()
    }

    /// Replaces every generator by a word (a free-group homomorphism).
    pub fn substitute(&self, images: &BTreeMap<Generator, Word>) -> Result<Word> {
        let mut out = Word::identity();
        for (g, e) in &self.letters {
            let img = images.get(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            out = out.concat(&img.pow(*e));
        }
        Ok(out)
    }

    /// Parses whitespace-separated tokens `name` or `name^k`; a lone `1`
    /// (the rendering of the empty word) is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::new();
        let mut col = 1;
        for token in text.split(' ') {
            let here = col;
            col += token.chars().count() + 1;
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, k)) => {
                    let k: i64 = k.parse().map_err(|_| Error::Parse {
                        line: 1,
                        column: here + n.len() + 1,
                        message: format!("bad exponent `{k}`"),
                    })?;
                    if k == 0 {
                        return Err(Error::Parse {
                            line: 1,
                            column: here + n.len() + 1,
                            message: "exponent must be nonzero".into(),
                        });
                    }
                    (n, k)
                }
                None => (token, 1),
            };
            let g = Generator::new(name).map_err(|e| Error::Parse {
                line: 1,
                column: here,
                message: e.to_string(),
            })?;
            raw.push((g, exp));
        }
        Ok(Word::reduce(raw))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A homomorphism from a free group to the free abelian group on `vars`,
/// given by an exponent vector per generator.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialMap {
    vars: Variables,
    images: BTreeMap<Generator, Exponent>,
}

impl MonomialMap {
    pub fn new(vars: Variables) -> Self {
        MonomialMap {
            vars,
            images: BTreeMap::new(),
        }
    }

    /// The trivial map on the given generators (no variables).
    pub fn trivial<'a>(gens: impl IntoIterator<Item = &'a Generator>) -> Self {
        let mut m = MonomialMap::new(Variables::empty());
        for g in gens {
            m.images.insert(g.clone(), Vec::new());
        }
        m
    }

    pub fn insert(&mut self, g: Generator, exps: Exponent) -> Result<()> {
        if exps.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "image of `{g}` has {} exponents, expected {}",
                exps.len(),
                self.vars.len()
            )));
        }
        self.images.insert(g, exps);
        Ok(())
    }

    pub fn with(mut self, g: &str, exps: &[i64]) -> Result<Self> {
        self.insert(Generator::new(g)?, exps.to_vec())?;
        Ok(self)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn image(&self, g: &Generator) -> Option<&Exponent> {
        self.images.get(g)
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.images.contains_key(g)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.images.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Exponent)> {
        self.images.iter()
    }

    /// Exponent vector of `ρ(w)`.
    pub fn apply_exponent(&self, w: &Word) -> Result<Exponent> {
        let mut acc = vec![0; self.vars.len()];
        for (g, e) in w.letters() {
            let img = self.images.get(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            for (a, b) in acc.iter_mut().zip(img) {
                *a += e * b;
            }
        }
        Ok(acc)
    }

    /// `ρ(w)` as a monomial.
    pub fn apply(&self, w: &Word) -> Result<LaurentPoly> {
        Ok(LaurentPoly::monomial(&self.vars, self.apply_exponent(w)?, BigInt::one()))
    }

    pub fn image_poly(&self, g: &Generator) -> Result<LaurentPoly> {
        self.apply(&Word::generator(g.clone()))
    }

    /// Composes with a map of the target lattice: each variable of `self` is
    /// sent to the given exponent vector over `target`.
    pub fn compose_lattice(&self, target: &Variables, images: &[Exponent]) -> MonomialMap {
        let mut out = MonomialMap::new(target.clone());
        for (g, e) in &self.images {
            let mut ne = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                for (a, b) in ne.iter_mut().zip(&images[k]) {
                    *a += x * b;
                }
            }
            out.images.insert(g.clone(), ne);
        }
        out
    }
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (g, e) in &self.images {
            m.entry(g, &LaurentPoly::<BigInt>::monomial(&self.vars, e.clone(), BigInt::one()).to_string());
        }
        m.finish()
    }
}

/// `ρ(∂w/∂g)` in `Z[t^±]`, without the involution.
pub fn fox_derivative_abelianized(w: &Word, g: &Generator, rho: &MonomialMap) -> Result<LaurentPoly> {
    let k = rho.vars().len();
    let mut prefix = vec![0i64; k];
    let mut terms: Vec<(Exponent, BigInt)> = Vec::new();
    let gimg = rho.image(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?.clone();
    for (h, e) in w.letters() {
        let himg = rho.image(h).ok_or_else(|| Error::UnknownGenerator(h.to_string()))?;
        if h == g {
            // ∂h^e/∂h = 1 + h + … + h^(e-1) for e > 0, −(h^-1 + … + h^e) for e < 0
            let range: Box<dyn Iterator<Item = i64>> = if *e > 0 {
                Box::new(0..*e)
            } else {
                Box::new(*e..0)
            };
            let sign = if *e > 0 { 1 } else { -1 };
            for j in range {
                let exps: Exponent = prefix.iter().zip(&gimg).map(|(p, x)| p + j * x).collect();
                terms.push((exps, BigInt::from(sign)));
            }
        }
        for (p, x) in prefix.iter_mut().zip(himg) {
            *p += e * x;
        }
    }
    Ok(LaurentPoly::from_terms(rho.vars(), terms))
}

/// The involution `t ↦ t^-1` on Laurent polynomials.
pub fn involute(p: &LaurentPoly) -> LaurentPoly {
    p.involute()
}
