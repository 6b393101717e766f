//! Homology cylinders given by admissible presentations.
//!
//! An admissible presentation of `π₁(M)` for a cylinder over `Σ_{g,n}` lists
//! `m = 2g+n-1` generators for the bottom surface, `l` auxiliary generators,
//! `m` generators for the top surface, and `m + l` relators. With a monomial
//! representation `ρ` into `Z[t^±]`, the involuted Fox Jacobian splits into
//! three row blocks `A` (bottom), `B` (auxiliary) and `C` (top):
//!
//! * the torsion `τ⁺` is the class of `det (A; B)`;
//! * the Magnus matrix is `-C (A; B)⁻¹ (I; 0)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{FieldMatrix, RationalFunction, TorsionClass};
use crate::laurent::{LaurentPoly, Variables};
use crate::matrix::{IntMatrix, Matrix, RatMatrix};
use crate::word::{fox_derivative_abelianized, Generator, MonomialMap, Word};

pub type AbelianRho = MonomialMap;

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissiblePresentation {
    pub g: u32,
    pub n: u32,
    pub minus: Vec<Generator>,
    pub aux: Vec<Generator>,
    pub plus: Vec<Generator>,
    pub relators: Vec<Word>,
}

impl AdmissiblePresentation {
    /// `2g + n - 1`.
    pub fn rank(&self) -> usize {
        (2 * self.g + self.n).saturating_sub(1) as usize
    }

    /// All generators in block order (minus, aux, plus).
    pub fn generators(&self) -> Vec<Generator> {
        self.minus
            .iter()
            .chain(&self.aux)
            .chain(&self.plus)
            .cloned()
            .collect()
    }

    /// Structural and homomorphism checks. An empty list means valid.
    pub fn validate(&self, rho: &AbelianRho) -> Vec<String> {
        let mut issues = Vec::new();
        let m = self.rank();
        if self.n == 0 {
            issues.push("n must be at least 1".to_string());
        }
        if self.minus.len() != m {
            issues.push(format!("expected {m} minus generators, found {}", self.minus.len()));
        }
        if self.plus.len() != m {
            issues.push(format!("expected {m} plus generators, found {}", self.plus.len()));
        }
        let expected = m + self.aux.len();
        if self.relators.len() != expected {
            issues.push(format!(
                "deficiency mismatch: expected {expected} relators (2g+n-1 plus {} auxiliary), found {}",
                self.aux.len(),
                self.relators.len()
            ));
        }
        let mut seen = BTreeSet::new();
        for g in self.generators() {
            if !seen.insert(g.clone()) {
                issues.push(format!("generator `{g}` is declared more than once"));
            }
        }
        for (j, r) in self.relators.iter().enumerate() {
            for g in r.generators() {
                if !seen.contains(g) {
                    issues.push(format!("relator {} uses undeclared generator `{g}`", j + 1));
                }
            }
        }
        for g in &seen {
            if !rho.contains(g) {
                issues.push(format!("rho does not assign generator `{g}`"));
            }
        }
        if issues.is_empty() {
            for (j, r) in self.relators.iter().enumerate() {
                match rho.apply(r) {
                    Ok(img) if img.is_one() => {}
                    Ok(img) => issues.push(format!("rho(relator {}) = {img}, expected 1 (relator: {r})", j + 1)),
                    Err(e) => issues.push(format!("relator {}: {e}", j + 1)),
                }
            }
        }
        issues
    }

    pub fn check(&self, rho: &AbelianRho) -> Result<()> {
        let issues = self.validate(rho);
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// The trivial representation: every generator to the empty monomial.
    pub fn trivial_rho(&self) -> AbelianRho {
        MonomialMap::trivial(self.generators().iter())
    }
}

impl fmt::Display for AdmissiblePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |v: &[Generator]| v.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "[cylinder] g={} n={}", self.g, self.n)?;
        writeln!(f, "minus: {}", names(&self.minus))?;
        writeln!(f, "aux: {}", names(&self.aux))?;
        writeln!(f, "plus: {}", names(&self.plus))?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}

/// Involuted `ρ`-Fox matrix: rows are `gens`, columns are `relators`.
pub fn fox_matrix(gens: &[Generator], relators: &[Word], rho: &MonomialMap) -> Result<Matrix<LaurentPoly>> {
    let zero = LaurentPoly::zero(rho.vars());
    let mut rows = Vec::with_capacity(gens.len());
    for g in gens {
        let row = relators
            .iter()
            .map(|r| fox_derivative_abelianized(r, g, rho).map(|p| p.involute()))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if gens.is_empty() || relators.is_empty() {
        return Ok(Matrix::zeros(gens.len(), relators.len(), zero));
    }
    Matrix::from_rows(rows, zero)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Abc {
    pub a: Matrix<LaurentPoly>,
    pub b: Matrix<LaurentPoly>,
    pub c: Matrix<LaurentPoly>,
}

impl Abc {
    /// The square matrix `(A; B)`.
    pub fn stacked(&self) -> Matrix<LaurentPoly> {
        self.a.vstack(&self.b).expect("A and B have the same column count")
    }
}

pub fn abc_matrices(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<Abc> {
    p.check(rho)?;
    Ok(Abc {
        a: fox_matrix(&p.minus, &p.relators, rho)?,
        b: fox_matrix(&p.aux, &p.relators, rho)?,
        c: fox_matrix(&p.plus, &p.relators, rho)?,
    })
}

/// `det (A; B)`; zero means the data is not a rational homology cylinder.
pub fn torsion_determinant(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<LaurentPoly> {
    let d = abc_matrices(p, rho)?.stacked().det();
    if d.is_zero() {
        return Err(Error::NotRationalHomologyCylinder);
    }
    Ok(d)
}

pub fn torsion_plus(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<TorsionClass> {
    Ok(TorsionClass::new(RationalFunction::from_poly(torsion_determinant(p, rho)?)))
}

/// `-C (A;B)⁻¹ (I;0)` over the fraction field.
pub fn magnus(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<FieldMatrix> {
    let abc = abc_matrices(p, rho)?;
    magnus_from_blocks(&abc)
}

fn magnus_from_blocks(abc: &Abc) -> Result<FieldMatrix> {
    let stacked = abc.stacked();
    let zero = stacked.zero_element().clone();
    let m = abc.a.rows();
    let size = stacked.rows();
    let one = LaurentPoly::one(zero.vars());
    let rhs = Matrix::from_fn(size, m, zero.clone(), |i, j| (i == j).then(|| one.clone()));
    let (numer, d) = stacked
        .solve_fraction_free(&rhs)?
        .ok_or(Error::NotRationalHomologyCylinder)?;
    let prod = abc.c.mul(&numer)?.neg();
    let fzero = RationalFunction::zero(zero.vars());
    prod.try_map(fzero, |x| RationalFunction::new(x.clone(), d.clone()))
}

/// The Magnus matrix for the trivial representation, i.e. the action on
/// rational homology.
pub fn sigma_specialized(p: &AdmissiblePresentation) -> Result<RatMatrix> {
    let rho = p.trivial_rho();
    let r = magnus(p, &rho)?;
    r.try_map(BigRational::zero(), |x| x.evaluate(&[]))
}

/// `det (A; B)` under the trivial representation.
pub fn augmented_torsion(p: &AdmissiblePresentation) -> Result<BigInt> {
    let d = torsion_determinant(p, &p.trivial_rho())?;
    Ok(d.constant_term())
}

#[derive(Clone, Debug)]
pub struct CylinderInvariants {
    pub torsion: TorsionClass,
    pub torsion_det: LaurentPoly,
    pub magnus: FieldMatrix,
    pub sigma_specialized: RatMatrix,
}

pub fn invariants(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<CylinderInvariants> {
    let abc = abc_matrices(p, rho)?;
    let torsion_det = abc.stacked().det();
    if torsion_det.is_zero() {
        return Err(Error::NotRationalHomologyCylinder);
    }
    Ok(CylinderInvariants {
        torsion: TorsionClass::new(RationalFunction::from_poly(torsion_det.clone())),
        torsion_det,
        magnus: magnus_from_blocks(&abc)?,
        sigma_specialized: sigma_specialized(p)?,
    })
}

/// Fibering obstructions: a fibered cylinder has ±monomial torsion and a
/// Magnus matrix with Laurent-polynomial entries.
#[derive(Clone, Debug)]
pub struct FiberingReport {
    pub torsion: TorsionClass,
    pub torsion_trivial: bool,
    pub magnus_integral: bool,
    /// Positions `(row, column)` of entries that are not Laurent polynomials.
    pub non_laurent_entries: Vec<(usize, usize)>,
}

impl FiberingReport {
    pub fn obstructed(&self) -> bool {
        !self.torsion_trivial || !self.magnus_integral
    }

    /// One-line verdict.
    pub fn verdict(&self) -> String {
        match (self.torsion_trivial, self.magnus_integral) {
            (true, true) => "UNOBSTRUCTED: torsion trivial; Magnus matrix over Z[t^±]".into(),
            (false, _) => "OBSTRUCTED: torsion nontrivial; not fibered".into(),
            (true, false) => "OBSTRUCTED: Magnus matrix has non-Laurent entries; not fibered".into(),
        }
    }
}

pub fn fibering_report(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<FiberingReport> {
    let abc = abc_matrices(p, rho)?;
    let det = abc.stacked().det();
    if det.is_zero() {
        return Err(Error::NotRationalHomologyCylinder);
    }
    let magnus = magnus_from_blocks(&abc)?;
    let mut non_laurent = Vec::new();
    for ((i, j), x) in magnus.entries() {
        // Soundness: a quotient counts only if it multiplies back exactly.
        let ok = x
            .as_polynomial()
            .is_some_and(|q| q.checked_mul(x.denominator()).is_ok_and(|back| &back == x.numerator()));
        if !ok {
            non_laurent.push((i, j));
        }
    }
    Ok(FiberingReport {
        torsion_trivial: det.is_monomial_unit(),
        torsion: TorsionClass::new(RationalFunction::from_poly(det)),
        magnus_integral: non_laurent.is_empty(),
        non_laurent_entries: non_laurent,
    })
}

/// `σ` of a stacked cylinder `M · N` from the factors: `σ(M)·σ(N)`.
pub fn compose(first: &AdmissiblePresentation, second: &AdmissiblePresentation) -> Result<RatMatrix> {
    if (first.g, first.n) != (second.g, second.n) {
        return Err(Error::Dimension(format!(
            "cannot stack cylinders over Σ_{{{},{}}} and Σ_{{{},{}}}",
            first.g, first.n, second.g, second.n
        )));
    }
    sigma_specialized(first)?.mul(&sigma_specialized(second)?)
}

/// An endomorphism of the free group on `basis`, given by generator images.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeMap {
    basis: Vec<Generator>,
    images: BTreeMap<Generator, Word>,
}

impl FreeMap {
    pub fn identity(basis: &[Generator]) -> Self {
        FreeMap {
            basis: basis.to_vec(),
            images: basis.iter().map(|g| (g.clone(), Word::generator(g.clone()))).collect(),
        }
    }

    pub fn new(basis: &[Generator], images: Vec<Word>) -> Result<Self> {
        if images.len() != basis.len() {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), basis.len())));
        }
        for w in &images {
            if let Some(g) = w.generators().find(|g| !basis.contains(g)) {
                return Err(Error::UnknownGenerator(g.to_string()));
            }
        }
        Ok(FreeMap {
            basis: basis.to_vec(),
            images: basis.iter().cloned().zip(images).collect(),
        })
    }

    pub fn basis(&self) -> &[Generator] {
        &self.basis
    }

    pub fn image(&self, g: &Generator) -> &Word {
        &self.images[g]
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images).expect("word over the basis")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &FreeMap) -> FreeMap {
        FreeMap {
            basis: self.basis.clone(),
            images: other.images.iter().map(|(g, w)| (g.clone(), self.apply(w))).collect(),
        }
    }

    /// Action on `H₁`: column `j` holds the exponent sums of the image of generator `j`.
    pub fn homology_matrix(&self) -> IntMatrix {
        let n = self.basis.len();
        Matrix::from_fn(n, n, BigInt::zero(), |i, j| {
            Some(BigInt::from(self.images[&self.basis[j]].exponent_sum(&self.basis[i])))
        })
    }
}

/// Dehn twists generating the mapping class group of the one-holed torus with
/// free basis `a, b`: `T_a: b ↦ ba`, `T_b: a ↦ ab⁻¹`, and their inverses.
pub fn genus_one_twist(a: &Generator, b: &Generator, which: char, inverse: bool) -> FreeMap {
    let basis = [a.clone(), b.clone()];
    let wa = Word::generator(a.clone());
    let wb = Word::generator(b.clone());
    let images = match (which, inverse) {
        ('a', false) => vec![wa.clone(), wb.concat(&wa)],
        ('a', true) => vec![wa.clone(), wb.concat(&wa.invert())],
        ('b', false) => vec![wa.concat(&wb.invert()), wb.clone()],
        ('b', true) => vec![wa.concat(&wb), wb.clone()],
        _ => panic!("twist must be about `a` or `b`"),
    };
    FreeMap::new(&basis, images).expect("twist images use the basis")
}

/// The monodromy of the trefoil on the one-holed torus: `a ↦ b⁻¹`, `b ↦ ba`.
pub fn trefoil_monodromy(a: &Generator, b: &Generator) -> FreeMap {
    genus_one_twist(a, b, 'a', false).after(&genus_one_twist(a, b, 'b', false))
}

/// The mapping cylinder of `phi` on `Σ_{g,n}` with `π₁(Σ)` free on `phi.basis()`:
/// `⟨m_i, p_i | m_i · φ(γ_i)(p)⁻¹⟩`, with `ρ(p_i) = t_i` and
/// `ρ(m_i) = ρ(φ(γ_i))`.
pub fn mapping_cylinder(g: u32, n: u32, phi: &FreeMap) -> Result<(AdmissiblePresentation, AbelianRho)> {
    let m = phi.basis().len();
    if m != (2 * g + n).saturating_sub(1) as usize {
        return Err(Error::Dimension(format!(
            "Σ_{{{g},{n}}} has free rank {}, map has {m} generators",
            (2 * g + n).saturating_sub(1)
        )));
    }
    let minus: Vec<Generator> = phi
        .basis()
        .iter()
        .map(|g| Generator::new(format!("{g}_m")))
        .collect::<Result<_>>()?;
    let plus: Vec<Generator> = phi
        .basis()
        .iter()
        .map(|g| Generator::new(format!("{g}_p")))
        .collect::<Result<_>>()?;
    let to_plus: BTreeMap<Generator, Word> = phi
        .basis()
        .iter()
        .zip(&plus)
        .map(|(g, p)| (g.clone(), Word::generator(p.clone())))
        .collect();
    let names: Vec<String> = (1..=m).map(|i| format!("t{i}")).collect();
    let vars = Variables::new(names);
    let mut rho = MonomialMap::new(vars);
    for (i, p) in plus.iter().enumerate() {
        let mut e = vec![0; m];
        e[i] = 1;
        rho.insert(p.clone(), e)?;
    }
    let mut relators = Vec::with_capacity(m);
    for (gamma, mi) in phi.basis().iter().zip(&minus) {
        let image = phi.image(gamma).substitute(&to_plus)?;
        rho.insert(mi.clone(), rho.apply_exponent(&image)?)?;
        relators.push(Word::generator(mi.clone()).concat(&image.invert()));
    }
    let p = AdmissiblePresentation {
        g,
        n,
        minus,
        aux: Vec::new(),
        plus,
        relators,
    };
    p.check(&rho)?;
    Ok((p, rho))
}

/// The product cylinder `Σ × [0,1]`.
pub fn identity_cylinder(g: u32, n: u32) -> Result<(AdmissiblePresentation, AbelianRho)> {
    let m = (2 * g + n).saturating_sub(1) as usize;
    let basis: Vec<Generator> = (1..=m).map(|i| Generator::new(format!("c{i}"))).collect::<Result<_>>()?;
    mapping_cylinder(g, n, &FreeMap::identity(&basis))
}

/// Infers `ρ` on generators that occur exactly once (up to exponent sum ±1
/// times an integer) in a relator whose other generators are known, until
/// nothing changes. Known entries are left untouched; conflicts surface later
/// through [`AdmissiblePresentation::validate`].
pub fn infer_rho(relators: &[Word], rho: &mut MonomialMap) -> Result<()> {
    loop {
        let mut progress = false;
        for r in relators {
            let unknown: BTreeSet<&Generator> = r.generators().filter(|g| !rho.contains(g)).collect();
            if unknown.len() != 1 {
                continue;
            }
            let g = *unknown.iter().next().expect("one element");
            let e = r.exponent_sum(g);
            if e == 0 {
                continue;
            }
            let rest = Word::reduce(r.letters().iter().filter(|(h, _)| h != g).cloned());
            let others = rho.apply_exponent(&rest)?;
            if others.iter().any(|x| x % e != 0) {
                return Err(Error::Domain(format!(
                    "cannot infer rho(`{g}`): relator {r} forces a non-integral exponent"
                )));
            }
            rho.insert(g.clone(), others.iter().map(|x| -x / e).collect())?;
            progress = true;
        }
        if !progress {
            return Ok(());
        }
    }
}
