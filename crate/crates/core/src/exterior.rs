//! Link exteriors from deficiency-one presentations.
//!
//! For `⟨y₁, …, y_{k+1} | r₁, …, r_k⟩` and a monomial representation `ρ`, the
//! torsion is `det J_i / (1 - ρ(y_i)⁻¹)` where `J` is the involuted Fox matrix
//! (rows generators, columns relators) and `J_i` drops row `i`. Gluing a
//! cylinder's two ends with a meridian `μ` gives the presentation
//! `⟨cylinder gens, μ | r, m_j μ p_j⁻¹ μ⁻¹⟩`, whose `μ`-dropped Jacobian factors
//! as `(I - ρ(μ) r_Γ)·(A; B)` up to block structure.
//!
//! The module also holds the elementary-ideal machinery used for lower bounds
//! on the number of generators of an Alexander module.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::abelian;
use crate::cylinder::{self, AbelianRho, AdmissiblePresentation};
use crate::error::{Error, Result};
use crate::field::{RationalFunction, TorsionClass};
use crate::laurent::{normalize_alexander, LaurentPoly, NormalizedAlexander, Variables};
use crate::matrix::{Matrix, RatMatrix};
use crate::word::{Generator, MonomialMap, Word};

#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorPresentation {
    pub generators: Vec<Generator>,
    pub relators: Vec<Word>,
    pub rho: MonomialMap,
}

impl ExteriorPresentation {
    /// Checks deficiency one, coverage of `ρ` and that some generator has
    /// nontrivial image. Whether `ρ` kills the relators is reported separately
    /// by [`Self::relator_defects`].
    pub fn new(generators: Vec<Generator>, relators: Vec<Word>, rho: MonomialMap) -> Result<Self> {
        let mut issues = Vec::new();
        if generators.len() != relators.len() + 1 {
            issues.push(format!(
                "deficiency must be 1: {} generators, {} relators",
                generators.len(),
                relators.len()
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                issues.push(format!("generator `{g}` is declared more than once"));
            }
            if !rho.contains(g) {
                issues.push(format!("rho does not assign generator `{g}`"));
            }
        }
        for (j, r) in relators.iter().enumerate() {
            if let Some(g) = r.generators().find(|g| !generators.contains(g)) {
                issues.push(format!("relator {} uses undeclared generator `{g}`", j + 1));
            }
        }
        if issues.is_empty() && generators.iter().all(|g| rho.image(g).is_some_and(|e| e.iter().all(|&x| x == 0))) {
            issues.push("rho is trivial on every generator".into());
        }
        if !issues.is_empty() {
            return Err(Error::Validation(issues));
        }
        Ok(ExteriorPresentation {
            generators,
            relators,
            rho,
        })
    }

    /// Like [`Self::new`], additionally requiring `ρ(r) = 1` for every relator.
    pub fn new_homomorphic(generators: Vec<Generator>, relators: Vec<Word>, rho: MonomialMap) -> Result<Self> {
        let q = Self::new(generators, relators, rho)?;
        let defects = q.relator_defects();
        if defects.is_empty() {
            Ok(q)
        } else {
            Err(Error::Validation(defects))
        }
    }

    /// Relators whose image under `ρ` is not 1.
    pub fn relator_defects(&self) -> Vec<String> {
        self.relators
            .iter()
            .enumerate()
            .filter_map(|(j, r)| match self.rho.apply(r) {
                Ok(img) if img.is_one() => None,
                Ok(img) => Some(format!("rho(relator {}) = {img}, expected 1 (relator: {r})", j + 1)),
                Err(e) => Some(format!("relator {}: {e}", j + 1)),
            })
            .collect()
    }

    pub fn is_homomorphism(&self) -> bool {
        self.relator_defects().is_empty()
    }

    pub fn index_of(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    /// Indices `i` with `ρ(y_i) ≠ 1`.
    pub fn valid_drops(&self) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&i| {
                self.rho
                    .image(&self.generators[i])
                    .is_some_and(|e| e.iter().any(|&x| x != 0))
            })
            .collect()
    }

    pub fn fox_matrix(&self) -> Result<Matrix<LaurentPoly>> {
        cylinder::fox_matrix(&self.generators, &self.relators, &self.rho)
    }

    /// The same presentation with `ρ` replaced by the free abelianization
    /// (rank one, normalized so that `anchor ↦ var`).
    pub fn with_abelianized_rho(&self, anchor: &Generator, var: &str) -> Result<Self> {
        let rho = abelian::abelianize_rank_one(&self.generators, &self.relators, anchor, var)?;
        Self::new_homomorphic(self.generators.clone(), self.relators.clone(), rho)
    }
}

/// `det J_i / (1 - ρ(y_i)⁻¹)` as a field element.
pub fn torsion_exterior_value(q: &ExteriorPresentation, drop: usize) -> Result<RationalFunction> {
    if drop >= q.generators.len() {
        return Err(Error::InvalidDrop {
            index: drop,
            reason: format!("only {} generators", q.generators.len()),
        });
    }
    let y = &q.generators[drop];
    let img = q.rho.image_poly(y)?;
    if img.is_one() {
        return Err(Error::InvalidDrop {
            index: drop,
            reason: format!("rho(`{y}`) = 1"),
        });
    }
    let j = q.fox_matrix()?;
    let det = j.without_row(drop).det();
    if det.is_zero() {
        return Err(Error::NonAcyclic);
    }
    let vars = q.rho.vars();
    let den = LaurentPoly::one(vars).checked_sub(&img.involute())?;
    RationalFunction::new(det, den)
}

pub fn torsion_exterior(q: &ExteriorPresentation, drop: usize) -> Result<TorsionClass> {
    Ok(TorsionClass::new(torsion_exterior_value(q, drop)?))
}

/// A meridian generator and its image under the extended representation.
#[derive(Clone, Debug, PartialEq)]
pub struct MeridianDatum {
    pub mu: Generator,
    /// Name of a fresh variable for `ρ(μ)`.
    pub var: String,
}

impl MeridianDatum {
    pub fn new(mu: &str, var: &str) -> Result<Self> {
        Ok(MeridianDatum {
            mu: Generator::new(mu)?,
            var: var.to_string(),
        })
    }
}

/// Appends `var` to the variables of `rho` (existing images get exponent 0).
fn extend_rho(rho: &AbelianRho, var: &str) -> Result<MonomialMap> {
    if rho.vars().index_of(var).is_some() {
        return Err(Error::Domain(format!("meridian variable `{var}` already used by rho")));
    }
    let mut names: Vec<String> = rho.vars().names().to_vec();
    names.push(var.to_string());
    let k = rho.vars().len();
    let images: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..=k).map(|j| i64::from(i == j)).collect())
        .collect();
    Ok(rho.compose_lattice(&Variables::new(names), &images))
}

/// Pushes `ρ` down to the largest free abelian quotient in which
/// `ρ(m_j) = ρ(p_j)` for every pair, which is where the glued presentation
/// admits a representation extending it. When the pairs already agree, `ρ` is
/// returned unchanged; otherwise the quotient variables are named `u1, u2, …`.
pub fn descend_rho(p: &AdmissiblePresentation, rho: &AbelianRho) -> Result<AbelianRho> {
    p.check(rho)?;
    let k = rho.vars().len();
    let mut diffs = Vec::new();
    for (m, pl) in p.minus.iter().zip(&p.plus) {
        let a = rho.image(m).ok_or_else(|| Error::UnknownGenerator(m.to_string()))?;
        let b = rho.image(pl).ok_or_else(|| Error::UnknownGenerator(pl.to_string()))?;
        let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        if d.iter().any(|&x| x != 0) {
            diffs.push(d);
        }
    }
    if diffs.is_empty() {
        return Ok(rho.clone());
    }
    let lattice: Vec<Generator> = (1..=k)
        .map(|i| Generator::new(format!("e{i}")))
        .collect::<Result<_>>()?;
    let relations: Vec<Word> = diffs
        .iter()
        .map(|d| {
            lattice
                .iter()
                .zip(d)
                .fold(Word::identity(), |w, (g, &e)| w.concat(&Word::generator(g.clone()).pow(e)))
        })
        .collect();
    let rank = abelian::free_rank(&lattice, &relations);
    let names: Vec<String> = (1..=rank).map(|i| format!("u{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ab = abelian::abelianize(&lattice, &relations, &refs)?;
    let images: Vec<Vec<i64>> = lattice
        .iter()
        .map(|g| ab.map.image(g).expect("lattice generator").clone())
        .collect();
    Ok(rho.compose_lattice(ab.map.vars(), &images))
}

/// Glues the two ends of the cylinder along `μ`, keeping `ρ` on the cylinder
/// generators and sending `μ` to the fresh variable.
pub fn build_exterior_presentation(
    p: &AdmissiblePresentation,
    rho: &AbelianRho,
    mu: &MeridianDatum,
) -> Result<ExteriorPresentation> {
    p.check(rho)?;
    let mut gens = p.generators();
    if gens.contains(&mu.mu) {
        return Err(Error::Domain(format!("meridian `{}` clashes with a cylinder generator", mu.mu)));
    }
    gens.push(mu.mu.clone());
    let mut relators = p.relators.clone();
    let wmu = Word::generator(mu.mu.clone());
    for (m, pl) in p.minus.iter().zip(&p.plus) {
        let r = Word::generator(m.clone())
            .concat(&wmu)
            .concat(&Word::generator(pl.clone()).invert())
            .concat(&wmu.invert());
        relators.push(r);
    }
    let mut ext = extend_rho(rho, &mu.var)?;
    let mut e = vec![0; ext.vars().len()];
    *e.last_mut().expect("at least one variable") = 1;
    ext.insert(mu.mu.clone(), e)?;
    ExteriorPresentation::new(gens, relators, ext)
}

/// Both sides of the torsion factorization.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    /// Exterior torsion with `μ` dropped.
    pub exterior: TorsionClass,
    /// `det τ⁺ · det(I - ρ(μ) r_Γ) / (1 - ρ(μ))`.
    pub predicted: TorsionClass,
    pub holds: bool,
    /// Whether `ρ` kills every exterior relator (needed for drop independence).
    pub homomorphic: bool,
    /// When `homomorphic`, whether every valid drop index gives the same class.
    pub drop_independent: Option<bool>,
}

/// `det τ⁺ · det(I - ρ(μ) r_Γ) / (1 - ρ(μ))` over the extended variables.
pub fn predicted_exterior_torsion(
    p: &AdmissiblePresentation,
    rho: &AbelianRho,
    mu: &MeridianDatum,
) -> Result<RationalFunction> {
    let ext = extend_rho(rho, &mu.var)?;
    let vars = ext.vars().clone();
    let k = rho.vars().len();
    let lift: Vec<Vec<i64>> = (0..k).map(|i| (0..=k).map(|j| i64::from(i == j)).collect()).collect();
    let inv = cylinder::invariants(p, rho)?;
    let tau = RationalFunction::from_poly(inv.torsion_det.substitute_monomials(&vars, &lift));
    let s = RationalFunction::from_poly(LaurentPoly::var(&vars, &mu.var)?);
    let m = inv.magnus.rows();
    let one = RationalFunction::one(&vars);
    let lifted = inv
        .magnus
        .try_map(RationalFunction::zero(&vars), |x| x.substitute_monomials(&vars, &lift))?;
    let id_minus = Matrix::from_fn(m, m, RationalFunction::zero(&vars), |i, j| {
        let d = if i == j { one.clone() } else { RationalFunction::zero(&vars) };
        Some(d.rf_sub(&s.rf_mul(lifted.get(i, j)).expect("same variables")).expect("same variables"))
    });
    let det = id_minus.field_det()?;
    tau.rf_mul(&det)?.rf_div(&one.rf_sub(&s)?)
}

/// Compares the exterior torsion of `q` (dropping `μ`) with the prediction
/// from the cylinder `p`. With `q` built from `p` this is the factorization
/// theorem; with `q` built from a modified presentation it is a control.
pub fn verify_factorization_against(
    q: &ExteriorPresentation,
    p: &AdmissiblePresentation,
    rho: &AbelianRho,
    mu: &MeridianDatum,
) -> Result<FactorizationReport> {
    let drop = q
        .index_of(&mu.mu)
        .ok_or_else(|| Error::UnknownGenerator(mu.mu.to_string()))?;
    let exterior = torsion_exterior(q, drop)?;
    let predicted = TorsionClass::new(predicted_exterior_torsion(p, rho, mu)?);
    let holds = exterior.eq_up_to_unit(&predicted);
    let homomorphic = q.is_homomorphism();
    let drop_independent = if homomorphic {
        let mut all = true;
        for i in q.valid_drops() {
            match torsion_exterior(q, i) {
                Ok(c) => all &= c.eq_up_to_unit(&exterior),
                Err(_) => all = false,
            }
        }
        Some(all)
    } else {
        None
    };
    Ok(FactorizationReport {
        exterior,
        predicted,
        holds,
        homomorphic,
        drop_independent,
    })
}

/// The factorization theorem for `p`: `ρ` is first pushed down with
/// [`descend_rho`] so that it extends over the glued presentation.
pub fn verify_factorization(
    p: &AdmissiblePresentation,
    rho: &AbelianRho,
    mu: &MeridianDatum,
) -> Result<FactorizationReport> {
    let rho = descend_rho(p, rho)?;
    let q = build_exterior_presentation(p, &rho, mu)?;
    verify_factorization_against(&q, p, &rho, mu)
}

/// Normalized `(1 - t)·τ` for a one-variable exterior presentation; the
/// torsion is taken with the first generator of nontrivial image dropped.
pub fn milnor_alexander(q: &ExteriorPresentation) -> Result<NormalizedAlexander> {
    if q.rho.vars().len() != 1 {
        return Err(Error::Domain(format!(
            "the Milnor formula needs a one-variable representation, got [{}]",
            q.rho.vars()
        )));
    }
    if !q.is_homomorphism() {
        return Err(Error::Validation(q.relator_defects()));
    }
    let drop = *q
        .valid_drops()
        .first()
        .ok_or_else(|| Error::Domain("rho is trivial".into()))?;
    let vars = q.rho.vars().clone();
    let tau = match torsion_exterior_value(q, drop) {
        Ok(v) => v,
        Err(Error::NonAcyclic) => return Err(Error::DegenerateAlexander),
        Err(e) => return Err(e),
    };
    let one_minus_t = RationalFunction::from_poly(LaurentPoly::from_terms(
        &vars,
        [(vec![0], BigInt::one()), (vec![1], -BigInt::one())],
    ));
    let delta = tau.rf_mul(&one_minus_t)?;
    let poly = delta.as_polynomial().ok_or_else(|| {
        Error::Domain(format!("(1 - t)·torsion = {delta} is not a Laurent polynomial; is the meridian image t?"))
    })?;
    normalize_alexander(&poly)
}

/// `det(τ⁺ at t = 1) · det(I - tσ)`, the cylinder side of the Milnor formula.
pub fn cylinder_route_alexander(p: &AdmissiblePresentation) -> Result<LaurentPoly> {
    let aug = cylinder::augmented_torsion(p)?;
    let sigma = cylinder::sigma_specialized(p)?;
    Ok(alexander_from_sigma(&sigma)?.scale(&aug))
}

/// `det(I - tσ)` for a rational matrix σ, demoted to integer coefficients.
pub fn alexander_from_sigma(sigma: &RatMatrix) -> Result<LaurentPoly> {
    let vars = Variables::new(["t"]);
    let zero = LaurentPoly::<BigRational>::zero(&vars);
    let n = sigma.rows();
    let m = Matrix::from_fn(n, n, zero, |i, j| {
        let mut terms = vec![(vec![1], -sigma.get(i, j).clone())];
        if i == j {
            terms.push((vec![0], BigRational::one()));
        }
        Some(LaurentPoly::from_terms(&vars, terms))
    });
    m.det()
        .to_integer()
        .ok_or_else(|| Error::Domain("det(I - tσ) has non-integral coefficients".into()))
}

/// All `k × k` minors of `m`, in lexicographic order of (rows, columns).
pub fn elementary_minors(m: &Matrix<LaurentPoly>, k: usize) -> Vec<LaurentPoly> {
    let vars = m.zero_element().vars().clone();
    if k == 0 {
        return vec![LaurentPoly::one(&vars)];
    }
    if k > m.rows().min(m.cols()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in (0..m.rows()).combinations(k) {
        for cols in (0..m.cols()).combinations(k) {
            out.push(m.submatrix(&rows, &cols).det());
        }
    }
    out
}

/// Evidence gathered at one elementary-ideal level.
#[derive(Clone, Debug, PartialEq)]
pub enum LevelEvidence {
    /// A minor is `±monomial`, so the ideal is the unit ideal.
    Unit { minor: LaurentPoly },
    /// Evaluation at `point` leaves a gcd that is not a unit of `Z[1/point]`.
    Refuted { point: Vec<i64>, gcd: BigInt },
    /// Neither a unit minor nor a refuting point was found.
    Undecided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBound {
    /// Every ideal `E_0, …, E_{bound-1}` was shown to be proper, so at least
    /// `bound` generators are needed.
    pub bound: usize,
    /// True when the level `bound` ideal was shown to be the unit ideal, so the
    /// elementary ideals cannot give a better bound.
    pub certified: bool,
    pub levels: Vec<LevelEvidence>,
}

/// Default evaluation points: `±1, ±2, …, ±6` in every variable.
pub fn default_points(nvars: usize) -> Vec<Vec<i64>> {
    let values: Vec<i64> = (1..=6).flat_map(|a| [a, -a]).collect();
    if nvars == 0 {
        return vec![Vec::new()];
    }
    (0..nvars)
        .map(|_| values.iter().copied())
        .multi_cartesian_product()
        .take(400)
        .collect()
}

/// Removes from `n` every prime factor shared with some coordinate of `point`.
fn strip_point_primes(mut n: BigInt, point: &[i64]) -> BigInt {
    for &a in point {
        let a = BigInt::from(a).abs();
        if a <= BigInt::one() {
            continue;
        }
        loop {
            let g = n.gcd(&a);
            if g.is_one() || n.is_zero() {
                break;
            }
            n /= g;
        }
    }
    n
}

fn refute_unit(minors: &[LaurentPoly], points: &[Vec<i64>]) -> Option<(Vec<i64>, BigInt)> {
    for point in points {
        let pt: Vec<BigRational> = point.iter().map(|&a| BigRational::from_integer(a.into())).collect();
        let mut g = BigInt::zero();
        for m in minors {
            // Clearing the monomial denominators only multiplies by powers of
            // the point's coordinates, which are stripped below anyway.
            let Ok(v) = m.evaluate(&pt) else { continue };
            let scaled = v.numer().clone();
            g = g.gcd(&scaled);
        }
        let g = strip_point_primes(g, point);
        if !g.is_one() {
            return Some((point.clone(), g));
        }
    }
    None
}

/// Lower bound on the minimal number of generators of the module presented
/// by `m` (rows are generators, columns relations), from its elementary ideals.
pub fn generator_lower_bound(m: &Matrix<LaurentPoly>, points: Option<&[Vec<i64>]>) -> LowerBound {
    let r = m.rows();
    let nvars = m.zero_element().vars().len();
    let defaults;
    let points = match points {
        Some(p) => p,
        None => {
            defaults = default_points(nvars);
            &defaults
        }
    };
    let mut levels = Vec::new();
    for j in 0..=r {
        let minors = elementary_minors(m, r - j);
        if let Some(u) = minors.iter().find(|p| p.is_monomial_unit()) {
            levels.push(LevelEvidence::Unit { minor: u.clone() });
            return LowerBound {
                bound: j,
                certified: true,
                levels,
            };
        }
        match refute_unit(&minors, points) {
            Some((point, gcd)) => levels.push(LevelEvidence::Refuted { point, gcd }),
            None => {
                levels.push(LevelEvidence::Undecided);
                return LowerBound {
                    bound: j,
                    certified: false,
                    levels,
                };
            }
        }
    }
    // Unreachable: the empty minor at level r is 1.
    LowerBound {
        bound: r,
        certified: true,
        levels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::alexander_module_matrix;

    fn g(s: &str) -> Generator {
        Generator::new(s).unwrap()
    }

    fn t_rho(names: &[&str]) -> MonomialMap {
        let mut m = MonomialMap::new(Variables::new(["t"]));
        for n in names {
            m.insert(g(n), vec![1]).unwrap();
        }
        m
    }

    fn trefoil() -> ExteriorPresentation {
        ExteriorPresentation::new_homomorphic(
            vec![g("a"), g("b")],
            vec![Word::parse("a b a b^-1 a^-1 b^-1").unwrap()],
            t_rho(&["a", "b"]),
        )
        .unwrap()
    }

    #[test]
    fn trefoil_torsion_and_alexander() {
        let q = trefoil();
        let v = q.rho.vars().clone();
        let expected = RationalFunction::new(
            LaurentPoly::parse("t^2 - t + 1", &v).unwrap(),
            LaurentPoly::parse("1 - t", &v).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            assert!(torsion_exterior(&q, i).unwrap().eq_value_up_to_unit(&expected));
        }
        assert_eq!(milnor_alexander(&q).unwrap().to_string(), "t^2 - t + 1 (degree 2)");
    }

    #[test]
    fn unknot() {
        let q = ExteriorPresentation::new_homomorphic(vec![g("a")], vec![], t_rho(&["a"])).unwrap();
        let v = q.rho.vars().clone();
        let expected = RationalFunction::new(LaurentPoly::one(&v), LaurentPoly::parse("1 - t^-1", &v).unwrap()).unwrap();
        assert!(torsion_exterior(&q, 0).unwrap().eq_value_up_to_unit(&expected));
        assert!(milnor_alexander(&q).unwrap().poly.is_one());
    }

    #[test]
    fn invalid_drop_is_rejected() {
        let mut rho = t_rho(&["a"]);
        rho.insert(g("z"), vec![0]).unwrap();
        let q = ExteriorPresentation::new(vec![g("a"), g("z")], vec![Word::parse("z").unwrap()], rho).unwrap();
        assert!(matches!(torsion_exterior(&q, 1), Err(Error::InvalidDrop { .. })));
    }

    #[test]
    fn worked_example_factorization() {
        let (p, rho) = cylinder::tests_support::p359();
        let mu = MeridianDatum::new("mu", "s").unwrap();
        let q = build_exterior_presentation(&p, &rho, &mu).unwrap();
        assert_eq!(q.generators.len(), 7);
        assert_eq!(q.relators.len(), 6);
        let rep = verify_factorization(&p, &rho, &mu).unwrap();
        assert!(rep.holds);
        // With the abelianized representation the same presentation is a genuine
        // knot exterior and the Milnor formula recovers the Alexander polynomial.
        let knot = q.with_abelianized_rho(&mu.mu, "t").unwrap();
        assert_eq!(milnor_alexander(&knot).unwrap().to_string(), "t^2 - t + 1 (degree 2)");
        let route = cylinder_route_alexander(&p).unwrap();
        assert_eq!(normalize_alexander(&route).unwrap().to_string(), "t^2 - t + 1 (degree 2)");
    }

    #[test]
    fn product_and_trefoil_cylinders_factor() {
        let mu = MeridianDatum::new("mu", "s").unwrap();
        let (p, rho) = cylinder::identity_cylinder(1, 2).unwrap();
        // Nothing to identify: the full lattice survives alongside s.
        assert_eq!(descend_rho(&p, &rho).unwrap(), rho);
        let rep = verify_factorization(&p, &rho, &mu).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.drop_independent, Some(true));

        let (a, b) = (g("a"), g("b"));
        let (p, rho) = cylinder::mapping_cylinder(1, 1, &cylinder::trefoil_monodromy(&a, &b)).unwrap();
        let rep = verify_factorization(&p, &rho, &mu).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.drop_independent, Some(true));
        assert_eq!(normalize_alexander(&cylinder_route_alexander(&p).unwrap()).unwrap().to_string(), "t^2 - t + 1 (degree 2)");
    }

    #[test]
    fn corrupted_relator_breaks_the_factorization() {
        let (p, rho) = cylinder::tests_support::p359();
        let mu = MeridianDatum::new("mu", "s").unwrap();
        let rho = descend_rho(&p, &rho).unwrap();
        assert!(rho.vars().is_empty());
        let mut bad = p.clone();
        bad.relators[1] = Word::parse("g2m x1^-1 x2^-1 x1^-1 x2^-1 x1^-1 x2^-1 x2^-3").unwrap();
        let q = build_exterior_presentation(&bad, &rho, &mu).unwrap();
        let rep = verify_factorization_against(&q, &p, &rho, &mu).unwrap();
        assert!(!rep.holds);
    }

    #[test]
    fn minors_and_bounds() {
        let v = Variables::new(["t"]);
        let one = LaurentPoly::one(&v);
        let id = Matrix::identity(2, LaurentPoly::zero(&v));
        assert_eq!(elementary_minors(&id, 2), vec![one.clone()]);
        let b = generator_lower_bound(&id, None);
        assert_eq!((b.bound, b.certified), (0, true));

        let tref = Matrix::from_rows(vec![vec![LaurentPoly::parse("t^2 - t + 1", &v).unwrap()]], LaurentPoly::zero(&v)).unwrap();
        let b = generator_lower_bound(&tref, None);
        assert_eq!((b.bound, b.certified), (1, true));

        let s946 = crate::matrix::IntMatrix::from_i64(&[vec![0, -1], vec![-2, 0]]).unwrap();
        let b = generator_lower_bound(&alexander_module_matrix(&s946), None);
        assert_eq!((b.bound, b.certified), (2, true));

        let zero = Matrix::zeros(2, 2, LaurentPoly::zero(&v));
        assert!(elementary_minors(&zero, 1).iter().all(|p| p.is_zero()));
    }
}
