//! Machine-readable reports.
//!
//! Polynomials and rational functions are stored in their canonical text
//! rendering, integers that may exceed 64 bits as decimal strings, so a report
//! can be re-parsed with the library parsers and compared exactly.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Option<String>,
    pub conventions: Conventions,
    pub result: Output,
    /// The human-readable lines printed on stdout.
    pub text: Vec<String>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub fox: String,
    pub alexander: String,
    pub torsion: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            fox: "left derivative d(uv) = du + rho(u) dv; rho applied before the involution; \
                  rows are generators, columns are relators"
                .into(),
            alexander: "det(t*S - S^T) times ±t^k so the lowest term is a positive constant".into(),
            torsion: "classes in Q(t)^x modulo ±monomials".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    /// Elementary ideal index `j` (minors of size rows - j).
    pub level: usize,
    /// `unit`, `refuted` or `undecided`.
    pub evidence: String,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Output {
    Alexander {
        source: String,
        variables: Vec<String>,
        polynomial: String,
        degree: Option<u32>,
    },
    Classification {
        variables: Vec<String>,
        alexander: Option<String>,
        degree: Option<u32>,
        size: usize,
        degree_ok: bool,
        constant_unit: bool,
        det_s: String,
        verdict: String,
        alexander_route: String,
        assumes_minimal_genus: bool,
    },
    Sigma {
        source: String,
        matrix: Vec<Vec<String>>,
        determinant: String,
        integral: bool,
    },
    Census {
        strands: u8,
        negatives: Option<usize>,
        p_min: i64,
        p_max: i64,
        qr_min: i64,
        qr_max: i64,
        ordering: String,
        count: usize,
        types: Vec<Vec<i64>>,
        leading: Vec<i64>,
    },
    Cylinder {
        variables: Vec<String>,
        rows: Vec<String>,
        a: Vec<Vec<String>>,
        b: Vec<Vec<String>>,
        c: Vec<Vec<String>>,
        torsion_det: String,
        torsion: String,
        magnus: Vec<Vec<String>>,
        sigma: Vec<Vec<String>>,
    },
    FiberCheck {
        variables: Vec<String>,
        torsion: String,
        torsion_trivial: bool,
        magnus_integral: bool,
        non_laurent_entries: Vec<[usize; 2]>,
        obstructed: bool,
        verdict: String,
    },
    Torsion {
        source: String,
        variables: Vec<String>,
        torsion: String,
        dropped: Option<String>,
        trivial: bool,
    },
    Factorization {
        variables: Vec<String>,
        meridian: String,
        exterior: String,
        predicted: String,
        holds: bool,
        homomorphic: bool,
        drop_independent: Option<bool>,
    },
    Bound {
        source: String,
        rows: usize,
        cols: usize,
        bound: usize,
        certified: bool,
        levels: Vec<Level>,
    },
}
