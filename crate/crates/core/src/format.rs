//! Line-oriented input files.
//!
//! Four kinds are recognized by their first meaningful line:
//!
//! * a Seifert matrix: `g n` followed by `2g+n-1` integer rows;
//! * `[cylinder] g=.. n=..` with `minus:`, `aux:`, `plus:` and `rel:` lines;
//! * `[exterior]` with `gens:`, an optional `mu:` and `rel:` lines;
//! * `[matrix] vars: t` with one row per line, entries separated by commas.
//!
//! Cylinder and exterior files may end with a `[rho] vars: ...` section of
//! `generator -> monomial` lines. Everything after `#` is a comment. Parse
//! errors carry a one-based line and column.

use std::collections::BTreeSet;

use num_traits::One;

use crate::abelian;
use crate::cylinder::{infer_rho, AbelianRho, AdmissiblePresentation};
use crate::error::{Error, Result};
use crate::exterior::ExteriorPresentation;
use crate::laurent::{LaurentPoly, Variables};
use crate::matrix::{IntMatrix, Matrix};
use crate::seifert::SeifertMatrix;
use crate::word::{Generator, MonomialMap, Word};

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum InputFile {
    Seifert(SeifertMatrix),
    Cylinder {
        presentation: AdmissiblePresentation,
        rho: AbelianRho,
    },
    Exterior {
        presentation: ExteriorPresentation,
        mu: Option<Generator>,
    },
    Matrix(Matrix<LaurentPoly>),
}

impl InputFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InputFile::Seifert(_) => "seifert",
            InputFile::Cylinder { .. } => "cylinder",
            InputFile::Exterior { .. } => "exterior",
            InputFile::Matrix(_) => "matrix",
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Line<'a> {
    number: usize,
    /// Column (one-based) where `text` starts in the raw line.
    column: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Re-anchors an error from a sub-parser that saw only `text[offset..]`.
    fn relocate(&self, offset: usize, e: Error) -> Error {
        match e {
            Error::Parse { line: 1, column, message } => self.error(offset + column - 1, message),
            other => self.error(offset, other.to_string()),
        }
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column: self.column + offset,
            message: message.into(),
        }
    }

    /// Splits `key: rest`, returning the rest as a line with its own column.
    fn after_key(&self, key: &str) -> Option<Line<'a>> {
        let rest = self.text.strip_prefix(key)?.strip_prefix(':')?;
        let skipped = rest.len() - rest.trim_start().len();
        Some(Line {
            number: self.number,
            column: self.column + key.len() + 1 + skipped,
            text: rest.trim(),
        })
    }

    /// Whitespace-separated tokens with their offsets into `text`.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push((s, &self.text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out
    }
}

/// Meaningful lines: comments stripped, blank lines skipped.
fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim();
            if trimmed.is_empty() {
                return None;
            }
            let lead = body.len() - body.trim_start().len();
            Some(Line {
                number: i + 1,
                column: lead + 1,
                text: trimmed,
            })
        })
        .collect()
}

fn eof_error(text: &str, message: &str) -> Error {
    Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: message.into(),
    }
}

/// Dispatches on the header of the first meaningful line.
pub fn parse_input(text: &str) -> Result<InputFile> {
    let ls = lines(text);
    let first = ls.first().ok_or_else(|| eof_error(text, "empty input"))?;
    if first.text.starts_with("[cylinder]") {
        let (presentation, rho) = parse_cylinder(text)?;
        Ok(InputFile::Cylinder { presentation, rho })
    } else if first.text.starts_with("[exterior]") {
        let (presentation, mu) = parse_exterior(text)?;
        Ok(InputFile::Exterior { presentation, mu })
    } else if first.text.starts_with("[matrix]") {
        parse_matrix(text).map(InputFile::Matrix)
    } else if first.text.starts_with('[') {
        let end = first.text.find(']').map_or(first.text.len(), |i| i + 1);
        Err(first.error(0, format!("unknown section `{}`", &first.text[..end])))
    } else {
        parse_seifert(text).map(InputFile::Seifert)
    }
}

fn parse_int(line: &Line<'_>, offset: usize, tok: &str) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| line.error(offset, format!("expected an integer, found `{tok}`")))
}

pub fn parse_seifert(text: &str) -> Result<SeifertMatrix> {
    let ls = lines(text);
    let head = ls.first().ok_or_else(|| eof_error(text, "empty input: expected `g n`"))?;
    let toks = head.tokens();
    if toks.len() != 2 {
        return Err(head.error(0, "first line must be `g n`"));
    }
    let g = parse_int(head, toks[0].0, toks[0].1)?;
    let n = parse_int(head, toks[1].0, toks[1].1)?;
    if g < 0 || n < 1 {
        return Err(head.error(0, format!("need g >= 0 and n >= 1, found g={g} n={n}")));
    }
    let size = (2 * g + n - 1) as usize;
    let rows = &ls[1..];
    if rows.len() != size {
        let at = rows.get(size).unwrap_or(head);
        return Err(at.error(0, format!("expected {size} matrix rows, found {}", rows.len())));
    }
    let mut data = Vec::with_capacity(size);
    for row in rows {
        let toks = row.tokens();
        if toks.len() != size {
            return Err(row.error(0, format!("expected {size} entries, found {}", toks.len())));
        }
        data.push(toks.iter().map(|(o, t)| parse_int(row, *o, t)).collect::<Result<Vec<_>>>()?);
    }
    SeifertMatrix::new(g as u32, n as u32, IntMatrix::from_i64(&data)?)
}

fn parse_generators(line: &Line<'_>) -> Result<Vec<Generator>> {
    line.tokens()
        .into_iter()
        .map(|(o, t)| Generator::new(t).map_err(|e| line.error(o, e.to_string())))
        .collect()
}

fn parse_word(line: &Line<'_>) -> Result<Word> {
    Word::parse(line.text).map_err(|e| line.relocate(0, e))
}

/// `key=value` pairs on a section header.
fn header_value(line: &Line<'_>, key: &str) -> Result<i64> {
    for (o, tok) in line.tokens() {
        if let Some(v) = tok.strip_prefix(key).and_then(|r| r.strip_prefix('=')) {
            return parse_int(line, o + key.len() + 1, v);
        }
    }
    Err(line.error(0, format!("header is missing `{key}=`")))
}

/// A `[rho]` section: explicit images keyed by generator, with their lines.
struct RhoSection<'a> {
    map: MonomialMap,
    entries: Vec<(Generator, Line<'a>)>,
}

fn parse_rho<'a>(header: &Line<'a>, body: &[Line<'a>]) -> Result<RhoSection<'a>> {
    let rest = header.text.strip_prefix("[rho]").expect("caller checked the header");
    let skipped = rest.len() - rest.trim_start().len();
    let after = Line {
        number: header.number,
        column: header.column + 5 + skipped,
        text: rest.trim(),
    };
    let vars_line = after
        .after_key("vars")
        .ok_or_else(|| after.error(0, "expected `vars: <names>` after [rho]"))?;
    let names: Vec<&str> = vars_line.tokens().into_iter().map(|(_, t)| t).collect();
    let unique: BTreeSet<&str> = names.iter().copied().collect();
    if unique.len() != names.len() {
        return Err(vars_line.error(0, "duplicate variable name"));
    }
    let vars = Variables::new(names.iter().copied());
    let mut map = MonomialMap::new(vars.clone());
    let mut entries: Vec<(Generator, Line<'a>)> = Vec::new();
    for line in body {
        let Some(arrow) = line.text.find("->") else {
            return Err(line.error(0, "expected `generator -> monomial`"));
        };
        let name = line.text[..arrow].trim();
        let g = Generator::new(name).map_err(|e| line.error(0, e.to_string()))?;
        if entries.iter().any(|(h, _)| *h == g) {
            return Err(line.error(0, format!("`{g}` is assigned twice")));
        }
        let mono_text = line.text[arrow + 2..].trim();
        let offset = line.text.len() - line.text[arrow + 2..].trim_start().len();
        let poly: LaurentPoly = LaurentPoly::parse(mono_text, &vars).map_err(|e| line.relocate(offset, e))?;
        let exps = match poly.terms().next() {
            Some((e, c)) if poly.num_terms() == 1 && c.is_one() => e.clone(),
            _ => return Err(line.error(offset, format!("`{mono_text}` is not a monomial with coefficient 1"))),
        };
        map.insert(g.clone(), exps).map_err(|e| line.error(offset, e.to_string()))?;
        entries.push((g, *line));
    }
    Ok(RhoSection { map, entries })
}

/// Splits the meaningful lines at a `[rho]` header.
fn split_rho<'a, 'b>(ls: &'b [Line<'a>]) -> (&'b [Line<'a>], Option<(&'b Line<'a>, &'b [Line<'a>])>) {
    match ls.iter().position(|l| l.text.starts_with("[rho]")) {
        Some(i) => (&ls[..i], Some((&ls[i], &ls[i + 1..]))),
        None => (ls, None),
    }
}

fn free_variable_names(count: usize) -> Vec<String> {
    if count == 1 {
        vec!["t".to_string()]
    } else {
        (1..=count).map(|i| format!("t{i}")).collect()
    }
}

/// Parses a cylinder file. Without a `[rho]` section the representation is
/// the free abelianization with variables `t1, t2, …` (`t` when there is
/// one). With one, the explicit images are extended by inference along the
/// relators and the result is checked to be a homomorphism.
pub fn parse_cylinder(text: &str) -> Result<(AdmissiblePresentation, AbelianRho)> {
    let ls = lines(text);
    let (main, rho_part) = split_rho(&ls);
    let header = main.first().ok_or_else(|| eof_error(text, "empty input"))?;
    if !header.text.starts_with("[cylinder]") {
        return Err(header.error(0, "expected `[cylinder] g=.. n=..`"));
    }
    let g = header_value(header, "g")?;
    let n = header_value(header, "n")?;
    if g < 0 || n < 1 {
        return Err(header.error(0, format!("need g >= 0 and n >= 1, found g={g} n={n}")));
    }
    let mut minus = None;
    let mut aux = None;
    let mut plus = None;
    let mut relators = Vec::new();
    for line in &main[1..] {
        if let Some(l) = line.after_key("minus") {
            set_once(&mut minus, parse_generators(&l)?, line, "minus")?;
        } else if let Some(l) = line.after_key("aux") {
            set_once(&mut aux, parse_generators(&l)?, line, "aux")?;
        } else if let Some(l) = line.after_key("plus") {
            set_once(&mut plus, parse_generators(&l)?, line, "plus")?;
        } else if let Some(l) = line.after_key("rel") {
            relators.push(parse_word(&l)?);
        } else {
            return Err(line.error(0, "expected `minus:`, `aux:`, `plus:`, `rel:` or `[rho]`"));
        }
    }
    let p = AdmissiblePresentation {
        g: g as u32,
        n: n as u32,
        minus: minus.ok_or_else(|| header.error(0, "missing `minus:` line"))?,
        aux: aux.unwrap_or_default(),
        plus: plus.ok_or_else(|| header.error(0, "missing `plus:` line"))?,
        relators,
    };
    let rho = match rho_part {
        None => {
            // Structural problems are reported before any abelianization.
            let structural: Vec<String> = p
                .validate(&p.trivial_rho())
                .into_iter()
                .filter(|s| !s.starts_with("rho"))
                .collect();
            if !structural.is_empty() {
                return Err(Error::Validation(structural));
            }
            let gens = p.generators();
            let names = free_variable_names(abelian::free_rank(&gens, &p.relators));
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            abelian::abelianize(&gens, &p.relators, &refs)?.map
        }
        Some((h, body)) => {
            let section = parse_rho(h, body)?;
            let declared = p.generators();
            for (g, line) in &section.entries {
                if !declared.contains(g) {
                    return Err(line.error(0, format!("`{g}` is not a generator of the presentation")));
                }
            }
            let mut rho = section.map;
            infer_rho(&p.relators, &mut rho)?;
            rho
        }
    };
    p.check(&rho)?;
    Ok((p, rho))
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: &Line<'_>, key: &str) -> Result<()> {
    if slot.is_some() {
        return Err(line.error(0, format!("`{key}:` appears twice")));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses an exterior file. Without `[rho]` the meridian is required and the
/// representation is the abelianization normalized to `μ ↦ t`.
pub fn parse_exterior(text: &str) -> Result<(ExteriorPresentation, Option<Generator>)> {
    let ls = lines(text);
    let (main, rho_part) = split_rho(&ls);
    let header = main.first().ok_or_else(|| eof_error(text, "empty input"))?;
    if header.text != "[exterior]" {
        return Err(header.error(0, "expected `[exterior]`"));
    }
    let mut gens = None;
    let mut mu = None;
    let mut relators = Vec::new();
    for line in &main[1..] {
        if let Some(l) = line.after_key("gens") {
            set_once(&mut gens, parse_generators(&l)?, line, "gens")?;
        } else if let Some(l) = line.after_key("mu") {
            let mut v = parse_generators(&l)?;
            if v.len() != 1 {
                return Err(l.error(0, "`mu:` takes exactly one generator"));
            }
            set_once(&mut mu, (v.remove(0), l), line, "mu")?;
        } else if let Some(l) = line.after_key("rel") {
            relators.push(parse_word(&l)?);
        } else {
            return Err(line.error(0, "expected `gens:`, `mu:`, `rel:` or `[rho]`"));
        }
    }
    let gens = gens.ok_or_else(|| header.error(0, "missing `gens:` line"))?;
    if let Some((m, l)) = &mu {
        if !gens.contains(m) {
            return Err(l.error(0, format!("meridian `{m}` is not among the generators")));
        }
    }
    let rho = match rho_part {
        None => {
            let (m, _) = mu
                .as_ref()
                .ok_or_else(|| header.error(0, "without a [rho] section a `mu:` line is required"))?;
            abelian::abelianize_rank_one(&gens, &relators, m, "t")?
        }
        Some((h, body)) => {
            let section = parse_rho(h, body)?;
            for (g, line) in &section.entries {
                if !gens.contains(g) {
                    return Err(line.error(0, format!("`{g}` is not a generator of the presentation")));
                }
            }
            section.map
        }
    };
    let q = ExteriorPresentation::new_homomorphic(gens, relators, rho)?;
    Ok((q, mu.map(|(m, _)| m)))
}

/// Parses `[matrix] vars: t` followed by comma-separated rows of Laurent
/// polynomials (rows are module generators, columns relations).
pub fn parse_matrix(text: &str) -> Result<Matrix<LaurentPoly>> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| eof_error(text, "empty input"))?;
    let rest = header
        .text
        .strip_prefix("[matrix]")
        .ok_or_else(|| header.error(0, "expected `[matrix] vars: ..`"))?;
    let after = Line {
        number: header.number,
        column: header.column + 8 + (rest.len() - rest.trim_start().len()),
        text: rest.trim(),
    };
    let vars_line = after
        .after_key("vars")
        .ok_or_else(|| after.error(0, "expected `vars: <names>`"))?;
    let vars = Variables::new(vars_line.tokens().into_iter().map(|(_, t)| t));
    let mut rows = Vec::new();
    for line in &ls[1..] {
        let mut row = Vec::new();
        let mut offset = 0;
        for cell in line.text.split(',') {
            let lead = cell.len() - cell.trim_start().len();
            let p = LaurentPoly::parse(cell.trim(), &vars).map_err(|e| line.relocate(offset + lead, e))?;
            row.push(p);
            offset += cell.len() + 1;
        }
        if let Some(first) = rows.first().map(Vec::len) {
            if first != row.len() {
                return Err(line.error(0, format!("expected {first} entries, found {}", row.len())));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(header.error(0, "matrix has no rows"));
    }
    Matrix::from_rows(rows, LaurentPoly::zero(&vars))
}

/// `[rho]` section listing every generator of `order` that `rho` assigns.
pub fn render_rho(rho: &MonomialMap, order: &[Generator]) -> String {
    let mut out = format!("[rho] vars: {}\n", rho.vars().names().join(" "));
    for g in order {
        if let Ok(m) = rho.image_poly(g) {
            out.push_str(&format!("{g} -> {}\n", m.render()));
        }
    }
    out
}

pub fn render_cylinder(p: &AdmissiblePresentation, rho: &AbelianRho) -> String {
    format!("{p}{}", render_rho(rho, &p.generators()))
}

pub fn render_exterior(q: &ExteriorPresentation, mu: Option<&Generator>) -> String {
    let names: Vec<String> = q.generators.iter().map(|g| g.to_string()).collect();
    let mut out = format!("[exterior]\ngens: {}\n", names.join(" "));
    if let Some(m) = mu {
        out.push_str(&format!("mu: {m}\n"));
    }
    for r in &q.relators {
        out.push_str(&format!("rel: {r}\n"));
    }
    out + &render_rho(&q.rho, &q.generators)
}

pub fn render_seifert(s: &SeifertMatrix) -> String {
    let m = s.matrix();
    let mut out = format!("{} {}\n", s.genus(), s.boundary_components());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
