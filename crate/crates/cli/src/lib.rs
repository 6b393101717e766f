//! Argument parsing and dispatch for the `homocyl` binary.
//!
//! [`run`] turns a parsed [`Cli`] into a [`Report`]; `main` prints its text,
//! writes the JSON sidecar and exits with `report.exit_code`. Errors are
//! rendered by [`describe_error`] and always exit with [`EXIT_INPUT`].

pub mod report;

use std::fmt::Display;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use homocyl::cylinder::{self, AbelianRho, AdmissiblePresentation};
use homocyl::exterior::{self, ExteriorPresentation, LevelEvidence, MeridianDatum};
use homocyl::format::{self, InputFile};
use homocyl::laurent::{normalize_alexander, LaurentPoly, NormalizedAlexander};
use homocyl::matrix::{Matrix, RatMatrix};
use homocyl::par::Strategy;
use homocyl::pretzel::{self, Ordering, Range3, Range5};
use homocyl::seifert::{self, SeifertMatrix, Verdict};
use homocyl::word::Generator;
use homocyl::Error;

pub use report::{Conventions, Level, Output, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OBSTRUCTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "homocyl", version, about = "Homologically fibered knots and homology cylinders")]
pub struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Exit with status 1 when the verdict is an obstruction.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized Alexander polynomial of a Seifert matrix, exterior or knot cylinder.
    Alexander { file: PathBuf },
    /// Homological fiberedness of a Seifert matrix.
    Classify { file: PathBuf },
    /// The monodromy-like matrix σ of a Seifert matrix or cylinder.
    Sigma { file: PathBuf },
    /// Pretzel knots whose Alexander polynomial has leading coefficient ±1.
    PretzelCensus(CensusArgs),
    /// Fox blocks, torsion, Magnus matrix and σ of a cylinder.
    Cylinder { file: PathBuf },
    /// Torsion and Magnus-matrix fibering obstructions of a cylinder.
    FiberCheck { file: PathBuf },
    /// Torsion class of a cylinder or of an exterior presentation.
    Torsion {
        file: PathBuf,
        /// Exterior generator whose row is dropped (default: the meridian, else the first valid one).
        #[arg(long)]
        drop: Option<String>,
    },
    /// Checks the exterior torsion against the cylinder prediction.
    FactorCheck {
        file: PathBuf,
        /// Variable for the meridian.
        #[arg(long, default_value = "s")]
        mu_var: String,
        /// Name of the gluing generator.
        #[arg(long, default_value = "mu")]
        mu: String,
    },
    /// Lower bound on the number of generators of an Alexander module.
    Bound { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Published,
    Lex,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Number of strands (3 or 5).
    #[arg(long, default_value_t = 3)]
    pub strands: u8,
    /// Number of negative parameters in a five-strand scan (1 or 2).
    #[arg(long, default_value_t = 1)]
    pub negatives: usize,
    /// Smallest negative parameter (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub p_min: Option<i64>,
    /// Largest negative parameter (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub p_max: Option<i64>,
    /// Smallest positive parameter (inclusive).
    #[arg(long)]
    pub qr_min: Option<i64>,
    /// Largest positive parameter (inclusive).
    #[arg(long)]
    pub qr_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Published)]
    pub order: OrderArg,
}

fn read_input(path: &Path) -> anyhow::Result<InputFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    format::parse_input(&text).with_context(|| format!("in {}", path.display()))
}

fn expect_seifert(path: &Path) -> anyhow::Result<SeifertMatrix> {
    match read_input(path)? {
        InputFile::Seifert(s) => Ok(s),
        other => bail!("{} is a {} file; this command needs a Seifert matrix", path.display(), other.kind()),
    }
}

fn expect_cylinder(path: &Path) -> anyhow::Result<(AdmissiblePresentation, AbelianRho)> {
    match read_input(path)? {
        InputFile::Cylinder { presentation, rho } => Ok((presentation, rho)),
        other => bail!("{} is a {} file; this command needs a [cylinder] file", path.display(), other.kind()),
    }
}

fn grid<T: Display>(m: &Matrix<T>) -> Vec<Vec<String>>
where
    T: homocyl::matrix::Element,
{
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

fn grid_lines(g: &[Vec<String>]) -> Vec<String> {
    g.iter().map(|row| format!("  [{}]", row.join(", "))).collect()
}

fn var_names(p: &LaurentPoly) -> Vec<String> {
    p.vars().names().to_vec()
}

fn report(command: &str, input: Option<&Path>, result: Output, text: Vec<String>, exit_code: i32) -> Report {
    Report {
        tool: "homocyl".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.into(),
        input: input.map(|p| p.display().to_string()),
        conventions: Conventions::default(),
        result,
        text,
        exit_code,
    }
}

fn alexander_output(source: &str, a: &NormalizedAlexander) -> Output {
    Output::Alexander {
        source: source.into(),
        variables: var_names(&a.poly),
        polynomial: a.poly.to_string(),
        degree: Some(a.degree),
    }
}

/// Runs one command. Input and domain errors are returned as `Err`.
pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    let strict = cli.strict;
    match &cli.command {
        Command::Alexander { file } => {
            let input = read_input(file)?;
            let (source, delta) = match &input {
                InputFile::Seifert(s) => ("seifert", seifert::alexander(s)),
                InputFile::Exterior { presentation, .. } => ("exterior", exterior::milnor_alexander(presentation)),
                InputFile::Cylinder { presentation, .. } => {
                    if presentation.n != 1 {
                        bail!("the cylinder route needs a knot (n = 1), found n = {}", presentation.n);
                    }
                    let raw = exterior::cylinder_route_alexander(presentation)?;
                    ("cylinder", normalize_alexander(&raw))
                }
                InputFile::Matrix(_) => bail!("alexander takes a Seifert, exterior or cylinder file"),
            };
            match delta {
                Ok(a) => Ok(report("alexander", Some(file), alexander_output(source, &a), vec![a.to_string()], EXIT_OK)),
                Err(Error::DegenerateAlexander) => {
                    let out = Output::Alexander {
                        source: source.into(),
                        variables: vec!["t".into()],
                        polynomial: "0".into(),
                        degree: None,
                    };
                    Ok(report("alexander", Some(file), out, vec!["0 (degenerate)".into()], EXIT_OK))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Classify { file } => {
            let s = expect_seifert(file)?;
            let r = seifert::classify(&s);
            let mut text = vec![format!("verdict: {}", r.verdict)];
            match &r.alexander {
                Some(a) => text.push(format!("alexander: {a}")),
                None => text.push("alexander: 0".into()),
            }
            text.push(format!("det S: {}", r.det_s));
            text.push(format!(
                "degree = {}: {}; |Δ(0)| = 1: {}",
                s.size(),
                yes_no(r.degree_ok),
                yes_no(r.constant_unit)
            ));
            if !r.routes_agree() {
                text.push(format!("warning: the Alexander route gives {}", r.alexander_route));
            }
            let exit = if strict && r.verdict != Verdict::HomologicallyFibered {
                EXIT_OBSTRUCTED
            } else {
                EXIT_OK
            };
            let out = Output::Classification {
                variables: vec!["t".into()],
                alexander: r.alexander.as_ref().map(|a| a.poly.to_string()),
                degree: r.alexander.as_ref().map(|a| a.degree),
                size: s.size(),
                degree_ok: r.degree_ok,
                constant_unit: r.constant_unit,
                det_s: r.det_s.to_string(),
                verdict: r.verdict.to_string(),
                alexander_route: r.alexander_route.to_string(),
                assumes_minimal_genus: r.assumes_minimal_genus,
            };
            Ok(report("classify", Some(file), out, text, exit))
        }
        Command::Sigma { file } => {
            let (source, sigma): (&str, RatMatrix) = match read_input(file)? {
                InputFile::Seifert(s) => ("seifert", seifert::sigma(&s)?),
                InputFile::Cylinder { presentation, .. } => ("cylinder", cylinder::sigma_specialized(&presentation)?),
                other => bail!("sigma takes a Seifert or cylinder file, got a {} file", other.kind()),
            };
            let g = grid(&sigma);
            let det = sigma.det();
            let integral = sigma.is_integral();
            let mut text = vec!["sigma =".to_string()];
            text.extend(grid_lines(&g));
            text.push(format!("det sigma = {det}"));
            let out = Output::Sigma {
                source: source.into(),
                matrix: g,
                determinant: det.to_string(),
                integral,
            };
            Ok(report("sigma", Some(file), out, text, EXIT_OK))
        }
        Command::PretzelCensus(args) => census(args),
        Command::Cylinder { file } => {
            let (p, rho) = expect_cylinder(file)?;
            let abc = cylinder::abc_matrices(&p, &rho)?;
            let inv = cylinder::invariants(&p, &rho)?;
            let (a, b, c) = (grid(&abc.a), grid(&abc.b), grid(&abc.c));
            let magnus = grid(&inv.magnus);
            let sigma = grid(&inv.sigma_specialized);
            let vars = rho.vars().names().to_vec();
            let mut text = vec![format!("variables: {}", vars.join(" "))];
            for (name, m) in [("A", &a), ("B", &b), ("C", &c)] {
                text.push(format!("{name} ="));
                text.extend(grid_lines(m));
            }
            text.push(format!("det(A;B) = {}", inv.torsion_det));
            text.push(format!("torsion: {}", inv.torsion));
            text.push("magnus =".into());
            text.extend(grid_lines(&magnus));
            text.push("sigma (all variables at 1) =".into());
            text.extend(grid_lines(&sigma));
            let out = Output::Cylinder {
                variables: vars,
                rows: p.generators().iter().map(|g| g.to_string()).collect(),
                a,
                b,
                c,
                torsion_det: inv.torsion_det.to_string(),
                torsion: inv.torsion.representative().to_string(),
                magnus,
                sigma,
            };
            Ok(report("cylinder", Some(file), out, text, EXIT_OK))
        }
        Command::FiberCheck { file } => {
            let (p, rho) = expect_cylinder(file)?;
            let r = cylinder::fibering_report(&p, &rho)?;
            let entries: Vec<String> = r
                .non_laurent_entries
                .iter()
                .map(|(i, j)| format!("({}, {})", i + 1, j + 1))
                .collect();
            let text = vec![
                r.verdict(),
                format!(
                    "torsion test: {} ({})",
                    if r.torsion_trivial { "passed" } else { "OBSTRUCTED" },
                    r.torsion
                ),
                if r.magnus_integral {
                    "Magnus test: passed (all entries Laurent polynomials)".to_string()
                } else {
                    format!("Magnus test: OBSTRUCTED (non-Laurent entries at {})", entries.join(", "))
                },
            ];
            let exit = if strict && r.obstructed() { EXIT_OBSTRUCTED } else { EXIT_OK };
            let out = Output::FiberCheck {
                variables: rho.vars().names().to_vec(),
                torsion: r.torsion.representative().to_string(),
                torsion_trivial: r.torsion_trivial,
                magnus_integral: r.magnus_integral,
                non_laurent_entries: r.non_laurent_entries.iter().map(|&(i, j)| [i, j]).collect(),
                obstructed: r.obstructed(),
                verdict: r.verdict(),
            };
            Ok(report("fiber-check", Some(file), out, text, exit))
        }
        Command::Torsion { file, drop } => {
            let (source, class, dropped) = match read_input(file)? {
                InputFile::Cylinder { presentation, rho } => {
                    if drop.is_some() {
                        bail!("--drop applies to exterior files only");
                    }
                    ("cylinder", cylinder::torsion_plus(&presentation, &rho)?, None)
                }
                InputFile::Exterior { presentation, mu } => {
                    let idx = exterior_drop(&presentation, drop.as_deref(), mu.as_ref())?;
                    let class = exterior::torsion_exterior(&presentation, idx)?;
                    ("exterior", class, Some(presentation.generators[idx].to_string()))
                }
                other => bail!("torsion takes a cylinder or exterior file, got a {} file", other.kind()),
            };
            let mut text = vec![format!("torsion: {class}")];
            if let Some(d) = &dropped {
                text.push(format!("dropped generator: {d}"));
            }
            let out = Output::Torsion {
                source: source.into(),
                variables: class.representative().vars().names().to_vec(),
                torsion: class.representative().to_string(),
                dropped,
                trivial: class.is_trivial(),
            };
            Ok(report("torsion", Some(file), out, text, EXIT_OK))
        }
        Command::FactorCheck { file, mu_var, mu } => {
            let (p, rho) = expect_cylinder(file)?;
            let datum = MeridianDatum::new(mu, mu_var)?;
            let r = exterior::verify_factorization(&p, &rho, &datum)?;
            let verdict = if r.holds { "FACTORIZATION HOLDS" } else { "FACTORIZATION FAILS" };
            let mut text = vec![
                format!("exterior torsion (drop {mu}): {}", r.exterior),
                format!("cylinder prediction: {}", r.predicted),
                verdict.to_string(),
            ];
            if let Some(ind) = r.drop_independent {
                text.push(format!("independent of the dropped generator: {}", yes_no(ind)));
            }
            let exit = if strict && !r.holds { EXIT_OBSTRUCTED } else { EXIT_OK };
            let out = Output::Factorization {
                variables: r.exterior.representative().vars().names().to_vec(),
                meridian: mu_var.clone(),
                exterior: r.exterior.representative().to_string(),
                predicted: r.predicted.representative().to_string(),
                holds: r.holds,
                homomorphic: r.homomorphic,
                drop_independent: r.drop_independent,
            };
            Ok(report("factor-check", Some(file), out, text, exit))
        }
        Command::Bound { file } => {
            let (source, m) = match read_input(file)? {
                InputFile::Seifert(s) => ("seifert", seifert::alexander_module_matrix(s.matrix())),
                InputFile::Matrix(m) => ("matrix", m),
                other => bail!("bound takes a Seifert or [matrix] file, got a {} file", other.kind()),
            };
            let b = exterior::generator_lower_bound(&m, None);
            let levels: Vec<Level> = b
                .levels
                .iter()
                .enumerate()
                .map(|(j, ev)| match ev {
                    LevelEvidence::Unit { minor } => Level {
                        level: j,
                        evidence: "unit".into(),
                        detail: Some(minor.to_string()),
                    },
                    LevelEvidence::Refuted { point, gcd } => Level {
                        level: j,
                        evidence: "refuted".into(),
                        detail: Some(format!("point {point:?}, gcd {gcd}")),
                    },
                    LevelEvidence::Undecided => Level {
                        level: j,
                        evidence: "undecided".into(),
                        detail: None,
                    },
                })
                .collect();
            let mut text = vec![format!(
                "lower bound: {} ({})",
                b.bound,
                if b.certified { "certified" } else { "not certified" }
            )];
            for l in &levels {
                text.push(match &l.detail {
                    Some(d) => format!("  E_{}: {} [{d}]", l.level, l.evidence),
                    None => format!("  E_{}: {}", l.level, l.evidence),
                });
            }
            let out = Output::Bound {
                source: source.into(),
                rows: m.rows(),
                cols: m.cols(),
                bound: b.bound,
                certified: b.certified,
                levels,
            };
            Ok(report("bound", Some(file), out, text, EXIT_OK))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exterior_drop(q: &ExteriorPresentation, drop: Option<&str>, mu: Option<&Generator>) -> anyhow::Result<usize> {
    if let Some(name) = drop {
        let g = Generator::new(name)?;
        return q
            .index_of(&g)
            .with_context(|| format!("`{name}` is not a generator of the presentation"));
    }
    let valid = q.valid_drops();
    if let Some(i) = mu.and_then(|m| q.index_of(m)).filter(|i| valid.contains(i)) {
        return Ok(i);
    }
    valid
        .first()
        .copied()
        .context("rho is trivial on every generator, so no row can be dropped")
}

fn census(args: &CensusArgs) -> anyhow::Result<Report> {
    let ordering = match args.order {
        OrderArg::Published => Ordering::Published,
        OrderArg::Lex => Ordering::Lexicographic,
    };
    let strategy = Strategy::from_env();
    let (types, leading, negatives, box_) = match args.strands {
        3 => {
            let d = Range3::STANDARD;
            let range = Range3 {
                p_min: args.p_min.unwrap_or(d.p_min),
                p_max: args.p_max.unwrap_or(d.p_max),
                qr_min: args.qr_min.unwrap_or(d.qr_min),
                qr_max: args.qr_max.unwrap_or(d.qr_max),
            };
            check_range(range.p_min, range.p_max, range.qr_min, range.qr_max)?;
            let hits = pretzel::census3(range, ordering, strategy);
            let types: Vec<Vec<i64>> = hits.iter().map(|h| h.knot.params().to_vec()).collect();
            let leading: Vec<i64> = hits.iter().map(|h| h.leading).collect();
            (types, leading, None, [range.p_min, range.p_max, range.qr_min, range.qr_max])
        }
        5 => {
            let d = match args.negatives {
                1 => Range5::ONE_NEGATIVE,
                2 => Range5::TWO_NEGATIVE,
                n => bail!("--negatives must be 1 or 2, got {n}"),
            };
            let range = Range5 {
                negatives: args.negatives,
                neg_min: args.p_min.unwrap_or(d.neg_min),
                neg_max: args.p_max.unwrap_or(d.neg_max),
                pos_min: args.qr_min.unwrap_or(d.pos_min),
                pos_max: args.qr_max.unwrap_or(d.pos_max),
            };
            check_range(range.neg_min, range.neg_max, range.pos_min, range.pos_max)?;
            let hits = pretzel::census5(range, ordering, strategy)?;
            let types: Vec<Vec<i64>> = hits.iter().map(|h| h.knot.params().to_vec()).collect();
            let leading: Vec<i64> = hits.iter().map(|h| h.leading).collect();
            (
                types,
                leading,
                Some(args.negatives),
                [range.neg_min, range.neg_max, range.pos_min, range.pos_max],
            )
        }
        n => bail!("--strands must be 3 or 5, got {n}"),
    };
    let ordering_name = match args.order {
        OrderArg::Published => "published",
        OrderArg::Lex => "lex",
    };
    let mut text: Vec<String> = types
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(i64::to_string).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let summary = serde_json::json!({
        "strands": args.strands,
        "count": types.len(),
        "ordering": ordering_name,
        "leading_plus_one": leading.iter().filter(|&&l| l == 1).count(),
        "leading_minus_one": leading.iter().filter(|&&l| l == -1).count(),
    });
    text.push(summary.to_string());
    let out = Output::Census {
        strands: args.strands,
        negatives,
        p_min: box_[0],
        p_max: box_[1],
        qr_min: box_[2],
        qr_max: box_[3],
        ordering: ordering_name.into(),
        count: types.len(),
        types,
        leading,
    };
    Ok(report("pretzel-census", None, out, text, EXIT_OK))
}

fn check_range(p_min: i64, p_max: i64, qr_min: i64, qr_max: i64) -> anyhow::Result<()> {
    if p_max >= 0 || p_min > p_max {
        bail!("negative range must satisfy p_min <= p_max < 0, got {p_min}..={p_max}");
    }
    if qr_min <= 0 || qr_min > qr_max {
        bail!("positive range must satisfy 0 < qr_min <= qr_max, got {qr_min}..={qr_max}");
    }
    Ok(())
}

/// Error message plus a remediation hint.
pub fn describe_error(err: &anyhow::Error) -> String {
    let mut msg = format!("error: {err:#}");
    let hint = err.chain().find_map(|e| e.downcast_ref::<Error>()).map(|e| match e {
        Error::Parse { .. } => "check the line against the file grammar in the README",
        Error::Validation(_) => "fix the listed generators, relators or [rho] entries",
        Error::NotRationalHomologyCylinder => {
            "det(A;B) vanishes; check the relators, this is not a rational homology cylinder"
        }
        Error::Singular(_) => "the matrix is singular; σ needs an invertible Seifert matrix",
        Error::DegenerateAlexander | Error::NonAcyclic => "the representation gives a zero Fox determinant",
        Error::InvalidDrop { .. } => "drop a generator whose rho image is not 1",
        Error::UnknownGenerator(_) | Error::UnknownVariable(_) => "check generator and variable names",
        _ => "see `homocyl --help`",
    });
    let hint = hint.unwrap_or(if err.chain().any(|e| e.is::<std::io::Error>()) {
        "check that the file exists and is readable"
    } else {
        "see `homocyl <command> --help` for the accepted inputs"
    });
    msg.push_str(&format!("\nhint: {hint}"));
    msg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_checks() {
        assert!(check_range(-99, -3, 3, 99).is_ok());
        assert!(check_range(-99, 5, 3, 99).is_err());
        assert!(check_range(-3, -9, 3, 99).is_err());
        assert!(check_range(-99, -3, 0, 99).is_err());
    }

    #[test]
    fn hints_follow_the_error_kind() {
        let parse = anyhow::Error::new(Error::Parse { line: 3, column: 2, message: "x".into() });
        assert!(describe_error(&parse).ends_with("hint: check the line against the file grammar in the README"));
        let io = anyhow::Error::new(std::io::Error::from(std::io::ErrorKind::NotFound));
        assert!(describe_error(&io).contains("file exists"));
        let other = anyhow::anyhow!("something else");
        assert!(describe_error(&other).contains("--help"));
    }

    #[test]
    fn drop_defaults_to_mu_then_first_valid() {
        let text = "[exterior]\ngens: a b\nmu: b\nrel: a b a b^-1 a^-1 b^-1\n";
        let (q, mu) = homocyl::format::parse_exterior(text).unwrap();
        assert_eq!(exterior_drop(&q, None, mu.as_ref()).unwrap(), 1);
        assert_eq!(exterior_drop(&q, None, None).unwrap(), 0);
        assert_eq!(exterior_drop(&q, Some("a"), mu.as_ref()).unwrap(), 0);
        assert!(exterior_drop(&q, Some("z"), None).is_err());
    }
}
