//! Indecomposable power-associative nil evolution algebras of dimension at
//! most 6, two decomposable examples, and the expected dimensions of their
//! derivation algebras.

use std::fmt;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::EvolutionAlgebra;
use crate::decomposition::support_components;
use crate::derivation::{derivation_basis, derived_subalgebra, inner_derivations};
use crate::error::{EvoError, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, int, sample_rational, Scalar};

/// A nonvanishing condition on the parameters: admissible iff `poly(params) != 0`.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub label: &'static str,
    pub poly: fn(&[Scalar]) -> Scalar,
}

impl Constraint {
    pub fn holds(&self, params: &[Scalar]) -> bool {
        !(self.poly)(params).is_zero()
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub name: &'static str,
    pub dim: usize,
    pub param_names: &'static [&'static str],
    pub constraints: &'static [Constraint],
    pub table: &'static str,
    builder: fn(&[Scalar]) -> EvolutionAlgebra,
}

impl FamilySpec {
    pub fn arity(&self) -> usize {
        self.param_names.len()
    }

    pub fn violated(&self, params: &[Scalar]) -> Option<&'static str> {
        self.constraints
            .iter()
            .find(|c| !c.holds(params))
            .map(|c| c.label)
    }

    pub fn is_admissible(&self, params: &[Scalar]) -> bool {
        params.len() == self.arity() && self.violated(params).is_none()
    }

    pub fn build(&self, params: &[Scalar]) -> Result<EvolutionAlgebra> {
        if params.len() != self.arity() {
            return Err(EvoError::ParameterCount {
                family: self.name.to_string(),
                expected: self.arity(),
                found: params.len(),
            });
        }
        if let Some(label) = self.violated(params) {
            return Err(EvoError::Parameter {
                family: self.name.to_string(),
                constraint: label.to_string(),
            });
        }
        Ok((self.builder)(params))
    }
}

/// Structure matrix from 1-based `(i, k, a_ik)` triples.
fn squares(n: usize, entries: &[(usize, usize, Scalar)]) -> EvolutionAlgebra {
    let mut m = Matrix::zeros(n, n);
    for (i, k, a) in entries {
        let cur = m.get(i - 1, k - 1).clone();
        m.set(i - 1, k - 1, cur + a);
    }
    EvolutionAlgebra::new(m).expect("square structure matrix")
}

fn one() -> Scalar {
    Scalar::one()
}

fn neg1() -> Scalar {
    -Scalar::one()
}

/// `e1^2 = e_n` and `e_{k+2}^2 = alphas[k] e_n`, so `n = alphas.len() + 2`.
pub fn associative_ann1(alphas: &[Scalar]) -> EvolutionAlgebra {
    let n = alphas.len() + 2;
    let mut entries = vec![(1, n, one())];
    for (k, a) in alphas.iter().enumerate() {
        entries.push((k + 2, n, a.clone()));
    }
    squares(n, &entries)
}

/// `e1^2 = e2 + e3, e2^2 = e_t, e3^2 = -e_t` plus extra rows.
fn twisted(n: usize, t: usize, extra: &[(usize, usize, Scalar)]) -> EvolutionAlgebra {
    let mut entries = vec![(1, 2, one()), (1, 3, one()), (2, t, one()), (3, t, neg1())];
    entries.extend_from_slice(extra);
    squares(n, &entries)
}

fn b_n11(_: &[Scalar]) -> EvolutionAlgebra {
    squares(1, &[])
}
fn b_n22(_: &[Scalar]) -> EvolutionAlgebra {
    squares(2, &[(1, 2, one())])
}
fn b_n32(_: &[Scalar]) -> EvolutionAlgebra {
    squares(3, &[(1, 2, one())])
}
fn b_n44(_: &[Scalar]) -> EvolutionAlgebra {
    squares(4, &[(1, 2, one()), (3, 4, one())])
}
fn b_ann1(p: &[Scalar]) -> EvolutionAlgebra {
    associative_ann1(p)
}
fn b_n46(_: &[Scalar]) -> EvolutionAlgebra {
    twisted(4, 4, &[])
}
fn b_n59(p: &[Scalar]) -> EvolutionAlgebra {
    squares(
        5,
        &[(1, 4, one()), (2, 4, p[0].clone()), (2, 5, p[1].clone()), (3, 5, one())],
    )
}
fn b_n510(p: &[Scalar]) -> EvolutionAlgebra {
    twisted(5, 5, &[(4, 5, p[0].clone())])
}
fn b_n511(p: &[Scalar]) -> EvolutionAlgebra {
    twisted(5, 5, &[(4, 2, p[0].clone()), (4, 3, p[0].clone())])
}
fn b_n512(p: &[Scalar]) -> EvolutionAlgebra {
    twisted(
        5,
        5,
        &[(4, 2, p[0].clone()), (4, 3, p[0].clone()), (4, 5, p[1].clone())],
    )
}
fn b_n617(p: &[Scalar]) -> EvolutionAlgebra {
    squares(
        6,
        &[
            (1, 5, one()),
            (2, 5, p[0].clone()),
            (2, 6, p[1].clone()),
            (3, 6, p[2].clone()),
            (4, 6, one()),
        ],
    )
}
fn b_n618(p: &[Scalar]) -> EvolutionAlgebra {
    squares(
        6,
        &[
            (1, 5, one()),
            (2, 5, p[0].clone()),
            (2, 6, p[1].clone()),
            (3, 5, p[2].clone()),
            (3, 6, p[3].clone()),
            (4, 6, one()),
        ],
    )
}

/// `e_i^2 = a (e2 + e3) + b e6` for `i` in {4, 5}.
fn tail(i: usize, a: Option<&Scalar>, b: Option<&Scalar>) -> Vec<(usize, usize, Scalar)> {
    let mut v = Vec::new();
    if let Some(a) = a {
        v.push((i, 2, a.clone()));
        v.push((i, 3, a.clone()));
    }
    if let Some(b) = b {
        v.push((i, 6, b.clone()));
    }
    v
}

fn six(e4: Vec<(usize, usize, Scalar)>, e5: Vec<(usize, usize, Scalar)>) -> EvolutionAlgebra {
    let extra: Vec<_> = e4.into_iter().chain(e5).collect();
    twisted(6, 6, &extra)
}

fn b_n619(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, None, Some(&p[0])), tail(5, None, Some(&p[1])))
}
fn b_n620(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, Some(&p[0]), None), tail(5, None, Some(&p[1])))
}
fn b_n621(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, Some(&p[0]), Some(&p[1])), tail(5, None, Some(&p[2])))
}
fn b_n622(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, Some(&p[0]), None), tail(5, Some(&p[1]), None))
}
fn b_n623(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, Some(&p[0]), Some(&p[1])), tail(5, Some(&p[2]), Some(&p[3])))
}
fn b_n624(p: &[Scalar]) -> EvolutionAlgebra {
    six(tail(4, Some(&p[0]), Some(&p[1])), tail(5, Some(&p[2]), None))
}
fn b_n625(p: &[Scalar]) -> EvolutionAlgebra {
    twisted(
        6,
        5,
        &[(4, 2, p[0].clone()), (4, 3, p[0].clone()), (4, 6, one())],
    )
}
fn b_n626(_: &[Scalar]) -> EvolutionAlgebra {
    squares(
        6,
        &[
            (1, 2, one()),
            (1, 3, one()),
            (1, 4, one()),
            (2, 5, one()),
            (3, 6, one()),
            (4, 5, neg1()),
            (4, 6, neg1()),
        ],
    )
}

macro_rules! nonzero {
    ($label:expr, |$p:ident| $body:expr) => {
        Constraint {
            label: $label,
            poly: {
                fn f($p: &[Scalar]) -> Scalar {
                    $body
                }
                f
            },
        }
    };
}

const A: Constraint = nonzero!("α ≠ 0", |p| p[0].clone());
const B: Constraint = nonzero!("β ≠ 0", |p| p[1].clone());
const C: Constraint = nonzero!("γ ≠ 0", |p| p[2].clone());
const D: Constraint = nonzero!("δ ≠ 0", |p| p[3].clone());

const G1: &[&str] = &["α"];
const G2: &[&str] = &["α", "β"];
const G3: &[&str] = &["α", "β", "γ"];
const G4: &[&str] = &["α", "β", "γ", "δ"];

static FAMILIES: &[FamilySpec] = &[
    FamilySpec { name: "N_{1,1}", dim: 1, param_names: &[], constraints: &[], table: "Table 1", builder: b_n11 },
    FamilySpec { name: "N_{2,2}", dim: 2, param_names: &[], constraints: &[], table: "Table 1", builder: b_n22 },
    FamilySpec { name: "N_{3,2}", dim: 3, param_names: &[], constraints: &[], table: "N_{2,2} ⊕ N_{1,1}", builder: b_n32 },
    FamilySpec { name: "N_{3,3}", dim: 3, param_names: G1, constraints: &[A], table: "Table 1", builder: b_ann1 },
    FamilySpec { name: "N_{4,4}", dim: 4, param_names: &[], constraints: &[], table: "N_{2,2} ⊕ N_{2,2}", builder: b_n44 },
    FamilySpec { name: "N_{4,5}", dim: 4, param_names: G2, constraints: &[A, B], table: "Table 1", builder: b_ann1 },
    FamilySpec { name: "N_{4,6}", dim: 4, param_names: &[], constraints: &[], table: "Table 1", builder: b_n46 },
    FamilySpec { name: "N_{5,8}", dim: 5, param_names: G3, constraints: &[A, B, C], table: "Table 2", builder: b_ann1 },
    FamilySpec { name: "N_{5,9}", dim: 5, param_names: G2, constraints: &[A, B], table: "Table 2", builder: b_n59 },
    FamilySpec { name: "N_{5,10}", dim: 5, param_names: G1, constraints: &[A], table: "Table 2", builder: b_n510 },
    FamilySpec { name: "N_{5,11}", dim: 5, param_names: G1, constraints: &[A], table: "Table 2", builder: b_n511 },
    FamilySpec { name: "N_{5,12}", dim: 5, param_names: G2, constraints: &[A, B], table: "Table 2", builder: b_n512 },
    FamilySpec { name: "N_{6,16}", dim: 6, param_names: G4, constraints: &[A, B, C, D], table: "Table 3", builder: b_ann1 },
    FamilySpec {
        name: "N_{6,17}", dim: 6, param_names: G3, table: "Table 3", builder: b_n617,
        constraints: &[nonzero!("αβγ ≠ 0", |p| &(&p[0] * &p[1]) * &p[2])],
    },
    FamilySpec {
        name: "N_{6,18}", dim: 6, param_names: G4, table: "Table 3", builder: b_n618,
        constraints: &[
            nonzero!("αβ ≠ 0", |p| &p[0] * &p[1]),
            nonzero!("γδ ≠ 0", |p| &p[2] * &p[3]),
            nonzero!("αδ − βγ ≠ 0", |p| &(&p[0] * &p[3]) - &(&p[1] * &p[2])),
        ],
    },
    FamilySpec { name: "N_{6,19}", dim: 6, param_names: G2, constraints: &[A, B], table: "Table 3", builder: b_n619 },
    FamilySpec { name: "N_{6,20}", dim: 6, param_names: G2, constraints: &[A, B], table: "Table 3", builder: b_n620 },
    FamilySpec { name: "N_{6,21}", dim: 6, param_names: G3, constraints: &[A, B, C], table: "Table 3", builder: b_n621 },
    FamilySpec { name: "N_{6,22}", dim: 6, param_names: G2, constraints: &[A, B], table: "Table 3", builder: b_n622 },
    FamilySpec {
        name: "N_{6,23}", dim: 6, param_names: G4, table: "Table 3", builder: b_n623,
        constraints: &[
            nonzero!("αδ − βγ ≠ 0", |p| &(&p[0] * &p[3]) - &(&p[1] * &p[2])),
            nonzero!("αγ ≠ 0", |p| &p[0] * &p[2]),
            nonzero!("βδ ≠ 0", |p| &p[1] * &p[3]),
        ],
    },
    FamilySpec {
        name: "N_{6,24}", dim: 6, param_names: G3, table: "Table 3", builder: b_n624,
        constraints: &[nonzero!("αβγ ≠ 0", |p| &(&p[0] * &p[1]) * &p[2])],
    },
    FamilySpec { name: "N_{6,25}", dim: 6, param_names: G1, constraints: &[A], table: "Table 3", builder: b_n625 },
    FamilySpec { name: "N_{6,26}", dim: 6, param_names: &[], constraints: &[], table: "Table 3", builder: b_n626 },
];

pub fn families() -> &'static [FamilySpec] {
    FAMILIES
}

pub fn family(name: &str) -> Result<&'static FamilySpec> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| EvoError::UnknownFamily(name.to_string()))
}

pub fn build(name: &str, params: &[Scalar]) -> Result<EvolutionAlgebra> {
    family(name)?.build(params)
}

/// Claimed dimension of the inner derivations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerClaim {
    Value(usize),
    /// The tables and the accompanying proof disagree.
    Disputed { table: usize, proof: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedProfile {
    pub ann_dim: usize,
    pub associative: bool,
    pub power_associative: bool,
    pub indecomposable: bool,
    pub dim_d: usize,
    pub dim_dprime: Option<usize>,
    pub dim_in: Option<InnerClaim>,
}

fn row(ann_dim: usize, associative: bool, d: usize, dp: usize, inn: usize) -> ExpectedProfile {
    ExpectedProfile {
        ann_dim,
        associative,
        power_associative: true,
        indecomposable: true,
        dim_d: d,
        dim_dprime: Some(dp),
        dim_in: Some(InnerClaim::Value(inn)),
    }
}

fn ann1_row(n: usize) -> ExpectedProfile {
    row(1, true, n * (n - 1) / 2 + 1, n * (n - 1) / 2, n - 1)
}

pub fn expected_profile(name: &str) -> Result<ExpectedProfile> {
    let p = match name {
        "N_{1,1}" => row(1, true, 1, 0, 0),
        "N_{2,2}" => row(1, true, 2, 1, 1),
        "N_{3,2}" | "N_{4,4}" => ExpectedProfile {
            ann_dim: 2,
            associative: true,
            power_associative: true,
            indecomposable: false,
            dim_d: if name == "N_{3,2}" { 5 } else { 6 },
            dim_dprime: None,
            dim_in: None,
        },
        "N_{3,3}" => ann1_row(3),
        "N_{4,5}" => ann1_row(4),
        "N_{5,8}" => ann1_row(5),
        "N_{6,16}" => ann1_row(6),
        "N_{5,9}" => row(2, true, 7, 6, 3),
        "N_{6,17}" => row(2, true, 10, 8, 4),
        "N_{6,18}" => row(2, true, 9, 8, 4),
        "N_{4,6}" => row(1, false, 4, 2, 2),
        "N_{5,10}" => row(1, false, 6, 4, 3),
        "N_{5,11}" => row(1, false, 6, 3, 3),
        "N_{5,12}" => row(1, false, 4, 3, 3),
        "N_{6,19}" => row(1, false, 9, 6, 4),
        "N_{6,20}" => row(1, false, 8, 5, 4),
        "N_{6,21}" => row(1, false, 6, 5, 4),
        "N_{6,22}" => row(1, false, 9, 7, 4),
        "N_{6,23}" => row(1, false, 5, 4, 4),
        "N_{6,24}" => row(1, false, 6, 4, 4),
        "N_{6,25}" => row(2, false, 8, 6, 3),
        "N_{6,26}" => ExpectedProfile {
            dim_in: Some(InnerClaim::Disputed { table: 3, proof: 2 }),
            ..row(2, false, 7, 6, 0)
        },
        other => return Err(EvoError::UnknownFamily(other.to_string())),
    };
    Ok(p)
}

/// Deterministic parameter tuples: all-ones if admissible, else the
/// lexicographically smallest admissible tuple in `{1,2,3}^k`; then two
/// seeded random rational tuples.
pub fn default_samples(spec: &FamilySpec, seed: u64) -> Vec<Vec<Scalar>> {
    let k = spec.arity();
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let first = (0..3usize.pow(k as u32))
        .map(|code| {
            (0..k)
                .map(|pos| int((code / 3usize.pow((k - 1 - pos) as u32) % 3) as i64 + 1))
                .collect::<Vec<_>>()
        })
        .find(|p| spec.is_admissible(p))
        .expect("some small integer tuple is admissible");
    out.push(first);
    let salt = spec.name.bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    while out.len() < 3 {
        let p: Vec<Scalar> = (0..k).map(|_| sample_rational(&mut rng, 7)).collect();
        if spec.is_admissible(&p) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    /// Conflicting claims; the computed value is reported, never judged.
    Disputed,
    /// No claim to compare against.
    Unstated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConformanceReport {
    pub family: String,
    pub params: Vec<String>,
    pub checks: Vec<FieldCheck>,
}

impl ConformanceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Mismatch)
    }

    pub fn check(&self, field: &str) -> Option<&FieldCheck> {
        self.checks.iter().find(|c| c.field == field)
    }

    pub fn disputes(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Disputed)
    }
}

impl fmt::Display for ConformanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.family)?;
        if !self.params.is_empty() {
            write!(f, "({})", self.params.join(", "))?;
        }
        for c in &self.checks {
            let mark = match c.status {
                CheckStatus::Match => "ok",
                CheckStatus::Mismatch => "MISMATCH",
                CheckStatus::Disputed => "disputed",
                CheckStatus::Unstated => "unstated",
            };
            write!(f, "\n  {:<18} computed {:<6} expected {:<22} {mark}", c.field, c.computed, c.expected)?;
        }
        Ok(())
    }
}

fn compare<T: PartialEq + ToString>(field: &'static str, expected: T, computed: T) -> FieldCheck {
    let status = if expected == computed {
        CheckStatus::Match
    } else {
        CheckStatus::Mismatch
    };
    FieldCheck {
        field,
        expected: expected.to_string(),
        computed: computed.to_string(),
        status,
    }
}

/// Computes every ledger field for `build(name, params)` and compares.
pub fn verify(name: &str, params: &[Scalar]) -> Result<ConformanceReport> {
    let e = build(name, params)?;
    let exp = expected_profile(name)?;
    let n = e.dim();
    let mut checks = vec![
        compare("ann_dim", exp.ann_dim, e.annihilator().dim()),
        compare("associative", exp.associative, e.is_associative()),
        compare("power_associative", exp.power_associative, e.is_power_associative()),
        compare("indecomposable", exp.indecomposable, support_components(&e).len() == 1),
    ];
    let basis = derivation_basis(&e);
    checks.push(compare("dim_D", exp.dim_d, basis.len()));
    let dprime = derived_subalgebra(n, &basis)?.dim();
    checks.push(match exp.dim_dprime {
        Some(v) => compare("dim_D'", v, dprime),
        None => unstated("dim_D'", dprime),
    });
    let inner = inner_derivations(&e)?.dim();
    checks.push(match exp.dim_in {
        Some(InnerClaim::Value(v)) => compare("dim_In", v, inner),
        Some(InnerClaim::Disputed { table, proof }) => FieldCheck {
            field: "dim_In",
            expected: format!("table {table} / proof {proof}"),
            computed: inner.to_string(),
            status: CheckStatus::Disputed,
        },
        None => unstated("dim_In", inner),
    });
    Ok(ConformanceReport {
        family: name.to_string(),
        params: params.iter().map(format_scalar).collect(),
        checks,
    })
}

fn unstated(field: &'static str, computed: usize) -> FieldCheck {
    FieldCheck {
        field,
        expected: "-".into(),
        computed: computed.to_string(),
        status: CheckStatus::Unstated,
    }
}

/// `verify` over the default samples of every family.
pub fn verify_all(seed: u64) -> Result<Vec<ConformanceReport>> {
    let mut out = Vec::new();
    for spec in FAMILIES {
        for p in default_samples(spec, seed) {
            out.push(verify(spec.name, &p)?);
        }
    }
    Ok(out)
}
