//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Runs as a plain binary (`harness = false`) so the verdict lines are always
//! printed; the process exits nonzero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homocyl::cylinder::{self, AbelianRho, AdmissiblePresentation};
use homocyl::exterior::{self, MeridianDatum};
use homocyl::field::RationalFunction;
use homocyl::format::{parse_cylinder, parse_seifert};
use homocyl::laurent::{normalize_alexander, LaurentPoly, Variables};
use homocyl::matrix::{Matrix, RatMatrix};
use homocyl::par::Strategy;
use homocyl::pretzel::{self, Ordering, Pretzel3, Range3, Range5};
use homocyl::seifert::{self, alexander_module_matrix};
use homocyl::word::{fox_derivative_abelianized, Word};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn cylinder_file(name: &str) -> (AdmissiblePresentation, AbelianRho) {
    parse_cylinder(&data(name)).unwrap()
}

fn lp(s: &str, v: &Variables) -> LaurentPoly {
    LaurentPoly::parse(s, v).unwrap()
}

const PUBLISHED3: [[i64; 3]; 22] = [
    [-3, 5, 9], [-5, 7, 19], [-7, 9, 33], [-9, 11, 51], [-9, 15, 23], [-11, 13, 73],
    [-13, 15, 99], [-15, 21, 53], [-19, 33, 45], [-21, 27, 95], [-23, 37, 61],
    [-33, 59, 75], [-3, 5, 5], [-5, 7, 15], [-7, 9, 29], [-9, 11, 47], [-11, 13, 69],
    [-13, 15, 95], [-15, 25, 37], [-25, 35, 87], [-29, 51, 67], [-37, 59, 99],
];

const PUBLISHED5_ONE: [[i64; 5]; 8] = [
    [-3, 9, 9, 9, 85], [-5, 15, 15, 15, 411], [-7, 17, 17, 45, 261],
    [-9, 15, 35, 71, 467], [-33, 75, 127, 151, 403], [-39, 113, 161, 165, 221],
    [-9, 23, 27, 35, 411], [-37, 107, 107, 179, 363],
];

const PUBLISHED5_TWO: [[i64; 5]; 15] = [
    [-15, -3, 5, 5, 125], [-5, -5, 3, 19, 159], [-69, -5, 7, 15, 151],
    [-31, -7, 9, 17, 177], [-27, -11, 9, 85, 205], [-15, -3, 5, 5, 129],
    [-5, -5, 3, 19, 163], [-53, -5, 7, 15, 91], [-177, -5, 7, 31, 31],
    [-257, -5, 7, 19, 99], [-235, -7, 17, 17, 33], [-15, -11, 13, 13, 265],
    [-275, -11, 13, 109, 117], [-37, -33, 23, 111, 207], [-121, -33, 39, 107, 279],
];

/// Compares a census with a published list: set equality is the criterion,
/// the order is reported alongside.
fn compare_lists(found: &[Vec<i64>], published: &[Vec<i64>]) -> Check {
    let a: BTreeSet<&Vec<i64>> = found.iter().collect();
    let b: BTreeSet<&Vec<i64>> = published.iter().collect();
    ensure!(found.len() == a.len(), "duplicate types in the scan");
    let extra: Vec<_> = a.difference(&b).collect();
    let missing: Vec<_> = b.difference(&a).collect();
    ensure!(extra.is_empty() && missing.is_empty(), "extra {extra:?}, missing {missing:?}");
    let order = if found == published { "same order" } else { "different order" };
    Ok(format!("{} types, {order} as published", found.len()))
}

fn criterion1() -> Check {
    let start = Instant::now();
    let hits = pretzel::census3(Range3::STANDARD, Ordering::Published, Strategy::Sequential);
    let elapsed = start.elapsed();
    let found: Vec<Vec<i64>> = hits.iter().map(|h| h.knot.params().to_vec()).collect();
    let published: Vec<Vec<i64>> = PUBLISHED3.iter().map(|x| x.to_vec()).collect();
    let msg = compare_lists(&found, &published)?;
    ensure!(elapsed < Duration::from_secs(10), "single-threaded scan took {elapsed:?}");
    Ok(format!("{msg}; sequential scan {:.2?}", elapsed))
}

fn criterion2() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (range, published) in [
        (Range5::ONE_NEGATIVE, PUBLISHED5_ONE.to_vec()),
        (Range5::TWO_NEGATIVE, PUBLISHED5_TWO.to_vec()),
    ] {
        let t = Instant::now();
        let hits = pretzel::census5(range, Ordering::Published, Strategy::from_env()).map_err(|e| e.to_string())?;
        let found: Vec<Vec<i64>> = hits.iter().map(|h| h.knot.params().to_vec()).collect();
        let published: Vec<Vec<i64>> = published.iter().map(|x| x.to_vec()).collect();
        parts.push(format!("{} in {:.2?}", compare_lists(&found, &published)?, t.elapsed()));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "both scans took {elapsed:?}");
    Ok(parts.join("; "))
}

fn criterion3() -> Check {
    let start = Instant::now();
    let (p, rho) = cylinder_file("p359.cyl");
    let v = rho.vars().clone();
    let abc = cylinder::abc_matrices(&p, &rho).map_err(|e| e.to_string())?;
    // (a) A = (I | 0), C = (0 | I).
    let (one, zero) = (LaurentPoly::one(&v), LaurentPoly::zero(&v));
    for i in 0..2 {
        for j in 0..4 {
            let a = if i == j { &one } else { &zero };
            let c = if i + 2 == j { &one } else { &zero };
            ensure!(abc.a.get(i, j) == a, "A[{i}][{j}] = {}", abc.a.get(i, j));
            ensure!(abc.c.get(i, j) == c, "C[{i}][{j}] = {}", abc.c.get(i, j));
        }
    }
    // (b) B = (G1 | G2) entry by entry.
    let g1 = [
        ["t1 - t1*t2^-1 - t2^-2", "-t1^-2*t2^-7 - t1^-1*t2^-6 - t2^-5"],
        ["-t1 - t2^-1", "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"],
    ];
    let g2 = [
        ["t1 - t1*t2^-1 - t2^-2", "-t1^-1*t2^-6 - t2^-5"],
        ["-t1^-1*t2^-2 - t1 - t2^-1", "-t1^-2*t2^-6 - t1^-1*t2^-5 - t2^-4 - t2^-3 - t2^-2 - t2^-1 - 1"],
    ];
    for i in 0..2 {
        for j in 0..2 {
            ensure!(abc.b.get(i, j) == &lp(g1[i][j], &v), "G1[{i}][{j}] = {}", abc.b.get(i, j));
            ensure!(abc.b.get(i, j + 2) == &lp(g2[i][j], &v), "G2[{i}][{j}] = {}", abc.b.get(i, j + 2));
        }
    }
    // (c) det τ⁺ up to ±monomial.
    let inv = cylinder::invariants(&p, &rho).map_err(|e| e.to_string())?;
    let printed = RationalFunction::from_poly(lp("-t1^-1*t2^-6 - t1 + t2^-4 + t2^-3 + t2^-2", &v));
    ensure!(inv.torsion.eq_value_up_to_unit(&printed), "det τ⁺ = {}", inv.torsion_det);
    // (d) the printed Magnus matrix, under rf_eq.
    let common = lp("1 - t1*t2^2 - t1*t2^3 - t1*t2^4 + t1^2*t2^6", &v);
    let entry = |num: &str, mono: &str| {
        let den = lp(mono, &v).checked_mul(&common).unwrap();
        RationalFunction::new(lp(num, &v), den).unwrap()
    };
    let printed = [
        [
            entry("-1 - t1*t2 + t1*t2^2 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6 + t1^3*t2^8", "t1*t2^2"),
            entry("-1 - t1*t2 - t1^2*t2^2 - t1^2*t2^3 - t1^2*t2^4 - t1^2*t2^5 - t1^2*t2^6", "t1^3*t2^7"),
        ],
        [
            entry("t2^2 + t1*t2^3 - t1*t2^4", "1"),
            entry(
                "1 + t1*t2 + t1^2*t2^2 + t1^2*t2^3 - t1^3*t2^5 - t1^3*t2^6 - t1^3*t2^7 + t1^4*t2^9",
                "t1^2*t2^3",
            ),
        ],
    ];
    for i in 0..2 {
        for j in 0..2 {
            ensure!(inv.magnus.get(i, j).rf_eq(&printed[i][j]), "Magnus[{i}][{j}] = {}", inv.magnus.get(i, j));
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("A, C, G1, G2, det and all four Magnus entries match ({:.2?})", elapsed))
}

fn criterion4() -> Check {
    let (p, rho) = cylinder_file("p359.cyl");
    let r = cylinder::fibering_report(&p, &rho).map_err(|e| e.to_string())?;
    ensure!(!r.torsion_trivial, "P(-3,5,9) torsion reported trivial");
    ensure!(!r.magnus_integral, "P(-3,5,9) Magnus matrix reported Laurent");
    ensure!(r.non_laurent_entries.len() == 4, "non-Laurent entries {:?}", r.non_laurent_entries);
    let mut seen = vec![format!("P(-3,5,9): {}", r.verdict())];
    for file in ["identity.cyl", "trefoil_monodromy.cyl"] {
        let (p, rho) = cylinder_file(file);
        let r = cylinder::fibering_report(&p, &rho).map_err(|e| e.to_string())?;
        ensure!(!r.obstructed(), "{file}: {}", r.verdict());
        seen.push(format!("{file}: UNOBSTRUCTED"));
    }
    Ok(seen.join("; "))
}

fn criterion5() -> Check {
    let budget = Duration::from_secs(5);
    let mu = MeridianDatum::new("mu", "s").unwrap();
    let check = |label: &str, p: &AdmissiblePresentation, rho: &AbelianRho| -> Check {
        let t = Instant::now();
        let r = exterior::verify_factorization(p, rho, &mu).map_err(|e| format!("{label}: {e}"))?;
        let el = t.elapsed();
        ensure!(r.holds, "{label}: exterior {} vs predicted {}", r.exterior, r.predicted);
        ensure!(r.drop_independent == Some(true), "{label}: torsion depends on the dropped row");
        ensure!(el < budget, "{label}: took {el:?}");
        Ok(label.to_string())
    };
    let (p, rho) = cylinder_file("p359.cyl");
    check("P(-3,5,9)", &p, &rho)?;
    let (ip, irho) = cylinder::identity_cylinder(1, 1).map_err(|e| e.to_string())?;
    check("identity", &ip, &irho)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut count = 0;
    for i in 0..6 {
        let phi = common::mapping_class(&mut rng, 3 + i);
        let (mp, mrho) = cylinder::mapping_cylinder(1, 1, &phi).map_err(|e| e.to_string())?;
        check(&format!("mapping class {i}"), &mp, &mrho)?;
        count += 1;
    }
    // Control: one exponent of a relator changed, compared against the
    // prediction from the unmodified cylinder.
    let descended = exterior::descend_rho(&p, &rho).map_err(|e| e.to_string())?;
    let mut bad = p.clone();
    bad.relators[1] = Word::parse("g2m x1^-1 x2^-1 x1^-1 x2^-1 x1^-1 x2^-1 x2^-3").unwrap();
    let q = exterior::build_exterior_presentation(&bad, &descended, &mu).map_err(|e| e.to_string())?;
    let control = exterior::verify_factorization_against(&q, &p, &descended, &mu).map_err(|e| e.to_string())?;
    ensure!(!control.holds, "corrupted presentation still factors");
    Ok(format!(
        "holds for P(-3,5,9), identity and {count} random mapping classes; corrupted control fails"
    ))
}

fn criterion6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for i in 0..20 {
        let s = common::invertible_seifert(&mut rng, 6);
        let sides = seifert::factor_sides(&s).map_err(|e| e.to_string())?;
        ensure!(sides.holds(), "matrix {i} {:?}: {} vs {}", s.matrix(), sides.lhs, sides.rhs);
    }
    let (p, _) = cylinder_file("p359.cyl");
    let sigma = RatMatrix::from_i64(&[vec![3, 7], vec![-1, -2]]).unwrap();
    ensure!(cylinder::sigma_specialized(&p).unwrap() == sigma, "σ differs from [[3,7],[-1,-2]]");
    let aug = cylinder::augmented_torsion(&p).map_err(|e| e.to_string())?;
    let route = exterior::alexander_from_sigma(&sigma).map_err(|e| e.to_string())?.scale(&aug);
    let route = normalize_alexander(&route).map_err(|e| e.to_string())?;
    let direct = pretzel::alexander3(&Pretzel3::new(-3, 5, 9).unwrap()).map_err(|e| e.to_string())?;
    ensure!(route == direct, "cylinder route {route} vs pretzel {direct}");
    ensure!(route.to_string() == "t^2 - t + 1 (degree 2)", "got {route}");
    Ok(format!("20 random Seifert matrices agree; P(-3,5,9): {route}"))
}

fn criterion7() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let gs = common::gens(&["a", "b", "c"]);

    // Fox calculus on 500 random words.
    for i in 0..500 {
        let rho = common::rho(&mut rng, &gs, 2);
        let v = rho.vars().clone();
        let u = common::word(&mut rng, &gs, 8);
        let w = common::word(&mut rng, &gs, 8);
        let uw = u.concat(&w);
        let one = LaurentPoly::one(&v);
        let mut sum = LaurentPoly::zero(&v);
        for g in &gs {
            let d_uw = fox_derivative_abelianized(&uw, g, &rho).unwrap();
            let d_u = fox_derivative_abelianized(&u, g, &rho).unwrap();
            let d_w = fox_derivative_abelianized(&w, g, &rho).unwrap();
            let rhs = d_u.checked_add(&rho.apply(&u).unwrap().checked_mul(&d_w).unwrap()).unwrap();
            ensure!(d_uw == rhs, "product rule fails for word {i} at {g}");
            let gm1 = rho.image_poly(g).unwrap().checked_sub(&one).unwrap();
            sum = sum.checked_add(&d_uw.checked_mul(&gm1).unwrap()).unwrap();
        }
        let wm1 = rho.apply(&uw).unwrap().checked_sub(&one).unwrap();
        ensure!(sum == wm1, "fundamental identity fails for word {i}");
    }

    // Pairing preservation and det σ = 1 on 100 random invertible matrices.
    for i in 0..100 {
        let s = common::invertible_seifert(&mut rng, 6);
        ensure!(seifert::check_pairing_preserved(&s).unwrap(), "pairing not preserved for matrix {i}");
        let sigma = seifert::sigma(&s).unwrap();
        ensure!(num_traits::One::is_one(&sigma.det()), "det σ = {} for matrix {i}", sigma.det());
    }

    // Drop-index independence on 50 presentations with nonzero Δ.
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 50 {
        attempts += 1;
        ensure!(attempts < 1000, "could not sample 50 acyclic presentations");
        let k = 2 + accepted % 3;
        let q = common::conjugation_presentation(&mut rng, k);
        let drops = q.valid_drops();
        let Ok(first) = exterior::torsion_exterior(&q, drops[0]) else { continue };
        for &d in &drops[1..] {
            let other = exterior::torsion_exterior(&q, d).map_err(|e| format!("drop {d}: {e}"))?;
            ensure!(other.eq_up_to_unit(&first), "presentation {accepted}: drop {d} gives {other}, drop {} gives {first}", drops[0]);
        }
        accepted += 1;
    }

    // det(XY) = det X · det Y on 100 random matrices (integer and Laurent).
    let v = Variables::new(["t1", "t2"]);
    for i in 0..100 {
        let n = 1 + i % 4;
        let (x, y) = if i % 2 == 0 {
            (common::laurent_matrix(&mut rng, &v, n), common::laurent_matrix(&mut rng, &v, n))
        } else {
            let lift = |rows: Vec<Vec<i64>>| {
                Matrix::from_fn(n, n, LaurentPoly::zero(&v), |r, c| {
                    Some(LaurentPoly::constant(&v, rows[r][c].into()))
                })
            };
            (lift(common::int_matrix(&mut rng, n, 9)), lift(common::int_matrix(&mut rng, n, 9)))
        };
        let lhs = x.mul(&y).unwrap().det();
        let rhs = x.det().checked_mul(&y.det()).unwrap();
        ensure!(lhs == rhs, "det multiplicativity fails for pair {i}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "suite took {elapsed:?}");
    Ok(format!(
        "500 words, 100 Seifert matrices, 50 presentations ({attempts} sampled), 100 determinant pairs in {:.2?}",
        elapsed
    ))
}

fn criterion8() -> Check {
    let s946 = parse_seifert(&data("946.seifert")).unwrap();
    let b = exterior::generator_lower_bound(&alexander_module_matrix(s946.matrix()), None);
    ensure!(b.bound == 2 && b.certified, "9_46: bound {} certified {}", b.bound, b.certified);
    let tref = parse_seifert(&data("trefoil.seifert")).unwrap();
    let t = exterior::generator_lower_bound(&alexander_module_matrix(tref.matrix()), None);
    ensure!(t.bound == 1 && t.certified, "trefoil: bound {} certified {}", t.bound, t.certified);
    Ok("9_46 -> 2 (certified), trefoil -> 1 (certified)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("three-strand pretzel census", criterion1),
        ("five-strand pretzel census", criterion2),
        ("P(-3,5,9) blocks, torsion and Magnus matrix", criterion3),
        ("fibering obstruction", criterion4),
        ("torsion factorization", criterion5),
        ("Milnor/Alexander consistency", criterion6),
        ("property suites", criterion7),
        ("generator lower bound", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
