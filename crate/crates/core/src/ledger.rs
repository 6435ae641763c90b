//! Component counts of fibers over infinity for the Fano threefolds whose mirrors are
//! compactified through pencils of quartics on `P^3` or of `(2,3)` divisors on
//! `P^1 x P^2`.
//!
//! Multiplicities and defects are data; only the arithmetic is checked here.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    #[serde(rename = "P3")]
    P3,
    #[serde(rename = "P1xP2")]
    P1xP2,
}

impl Ambient {
    /// `D0·D∞` for two members of the pencil: a quartic squared, or `(2H1 + 3H2)^2 = 9·H2^2 + 12·H1H2`.
    pub fn budget(self) -> Vec<i64> {
        match self {
            Ambient::P3 => vec![16],
            Ambient::P1xP2 => vec![9, 12],
        }
    }
}

/// Degree of a curve in `P^3`, or its class `(a, b) = a·H2^2 + b·H1H2` in `P^1 x P^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveDegree {
    Degree(i64),
    Bidegree([i64; 2]),
}

impl CurveDegree {
    fn as_vec(self) -> Vec<i64> {
        match self {
            CurveDegree::Degree(d) => vec![d],
            CurveDegree::Bidegree([a, b]) => vec![a, b],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCurveRecord {
    pub name: String,
    pub degree: CurveDegree,
    #[serde(rename = "M")]
    pub mult: i64,
    #[serde(rename = "m", default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDefectRecord {
    pub name: String,
    #[serde(rename = "D")]
    pub defect: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerCase {
    pub family: String,
    pub ambient: Ambient,
    pub s_components: i64,
    pub curves: Vec<BaseCurveRecord>,
    pub defects: Vec<PointDefectRecord>,
    pub anticanonical_cube: i64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub f: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub g: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl LedgerCase {
    pub fn validate(&self) -> Result<()> {
        if self.s_components < 1 {
            return Err(Error::Malformed(format!("{}: [S] must be positive", self.family)));
        }
        if self.anticanonical_cube <= 0 || self.anticanonical_cube % 2 != 0 {
            return Err(Error::OddDegree(self.anticanonical_cube));
        }
        for c in &self.curves {
            if c.mult < 1 {
                return Err(Error::InvalidMultiplicity(c.mult));
            }
            if let Some(m) = c.coefficient {
                if m < 1 {
                    return Err(Error::InvalidMultiplicity(m));
                }
            }
            let ok = matches!(
                (self.ambient, c.degree),
                (Ambient::P3, CurveDegree::Degree(_)) | (Ambient::P1xP2, CurveDegree::Bidegree(_))
            );
            if !ok {
                return Err(Error::Malformed(format!(
                    "{}: degree of {} does not fit the ambient space",
                    self.family, c.name
                )));
            }
        }
        if let Some(p) = self.defects.iter().find(|p| p.defect < 0) {
            return Err(Error::Malformed(format!("{}: negative defect at {}", self.family, p.name)));
        }
        Ok(())
    }
}

/// `0` when `M = 1`, otherwise `m - 1`.
pub fn delta(mult: i64, m: i64) -> Result<i64> {
    if mult < 1 {
        return Err(Error::InvalidMultiplicity(mult));
    }
    if m < 1 {
        return Err(Error::InvalidMultiplicity(m));
    }
    Ok(if mult == 1 { 0 } else { m - 1 })
}

/// `[S] + sum of δ_i + sum of D_P`.
pub fn components_at_infinity_ledger(c: &LedgerCase) -> Result<i64> {
    let mut total = c.s_components;
    for curve in &c.curves {
        total += match (curve.mult, curve.coefficient) {
            (1, _) => 0,
            (mult, Some(m)) => delta(mult, m)?,
            (mult, None) if mult < 1 => return Err(Error::InvalidMultiplicity(mult)),
            (_, None) => return Err(Error::MissingMultiplicity(curve.name.clone())),
        };
    }
    total += c.defects.iter().map(|p| p.defect).sum::<i64>();
    Ok(total)
}

/// `(-K)^3 / 2 + 2`.
pub fn expected_components(anticanonical_cube: i64) -> Result<i64> {
    if anticanonical_cube <= 0 || anticanonical_cube % 2 != 0 {
        return Err(Error::OddDegree(anticanonical_cube));
    }
    Ok(anticanonical_cube / 2 + 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetResult {
    Verified(Vec<i64>),
    Skipped(Vec<String>),
    Failed { expected: Vec<i64>, computed: Vec<i64> },
}

/// Checks `sum of m_i · deg(C_i)` against the self-intersection of the pencil.
pub fn intersection_budget(c: &LedgerCase) -> BudgetResult {
    let missing: Vec<String> = c
        .curves
        .iter()
        .filter(|x| x.coefficient.is_none())
        .map(|x| format!("m of {}", x.name))
        .collect();
    if !missing.is_empty() {
        return BudgetResult::Skipped(missing);
    }
    let expected = c.ambient.budget();
    let mut total = vec![0; expected.len()];
    for x in &c.curves {
        let d = x.degree.as_vec();
        if d.len() != total.len() {
            return BudgetResult::Failed {
                expected,
                computed: d,
            };
        }
        let m = x.coefficient.unwrap_or(0);
        for (t, v) in total.iter_mut().zip(d) {
            *t += m * v;
        }
    }
    if total == expected {
        BudgetResult::Verified(total)
    } else {
        BudgetResult::Failed {
            expected,
            computed: total,
        }
    }
}

pub fn verify_ledger(c: &LedgerCase) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("No.{}", c.family));
    let outcome = c.validate().and_then(|_| {
        Ok((
            components_at_infinity_ledger(c)?,
            expected_components(c.anticanonical_cube)?,
        ))
    });
    match outcome {
        Ok((got, want)) => {
            rep.push(Check::equal("components_formula", want, got));
            rep.set("components", got);
            rep.set("anticanonical_cube", c.anticanonical_cube);
        }
        Err(e) => {
            rep.push(Check::flag("completed", false));
            rep.notes.push(e.to_string());
        }
    }
    match intersection_budget(c) {
        BudgetResult::Verified(total) => {
            rep.push(Check::flag("intersection_budget", true));
            rep.set("budget_verified", 1);
            for (i, t) in total.iter().enumerate() {
                rep.set(&format!("budget_{i}"), *t);
            }
        }
        BudgetResult::Skipped(missing) => {
            rep.set("budget_verified", 0);
            rep.notes.push(format!("budget skipped: missing {}", missing.join(", ")));
        }
        BudgetResult::Failed { expected, computed } => {
            rep.push(Check::flag("intersection_budget", false));
            rep.notes.push(format!("budget {computed:?} != {expected:?}"));
        }
    }
    rep.notes.extend(c.notes.iter().cloned());
    rep.elapsed = start.elapsed();
    rep
}

fn curve(name: &str, degree: CurveDegree, mult: i64, m: Option<i64>) -> BaseCurveRecord {
    BaseCurveRecord {
        name: name.into(),
        degree,
        mult,
        coefficient: m,
    }
}

fn point(name: &str, defect: i64) -> PointDefectRecord {
    PointDefectRecord {
        name: name.into(),
        defect,
    }
}

/// The seven published cases.
pub fn builtin_cases() -> Vec<LedgerCase> {
    use CurveDegree::{Bidegree as B, Degree as D};
    vec![
        LedgerCase {
            family: "1.1".into(),
            ambient: Ambient::P3,
            s_components: 3,
            curves: vec![
                curve("C1", D(1), 1, None),
                curve("C2", D(1), 1, None),
                curve("C3", D(1), 1, None),
            ],
            defects: vec![
                point("P_{x},{y},{z}", 0),
                point("P_{x},{y},{t}", 0),
                point("P_{x},{z},{t}", 0),
                point("P_{x},{t},{y,z}", 0),
            ],
            anticanonical_cube: 2,
            f: "x^4".into(),
            g: "yz(xt-xy-xz-t^2)".into(),
            notes: vec![],
        },
        LedgerCase {
            family: "1.11".into(),
            ambient: Ambient::P3,
            s_components: 3,
            curves: vec![
                curve("C1", D(1), 1, Some(4)),
                curve("C2", D(1), 1, Some(8)),
                curve("C3", D(4), 1, Some(1)),
            ],
            defects: vec![
                point("P_{x},{y},{z}", 0),
                point("P_{x},{y},{t}", 3),
                point("P_{x},{z},{t}", 0),
            ],
            anticanonical_cube: 8,
            f: "x^4".into(),
            g: "yz(xt-xy-t^2)".into(),
            notes: vec![
                "the defect 3 is derived at P_{x},{y},{t} but printed under the name P_{x},{z},{t}".into(),
            ],
        },
        LedgerCase {
            family: "2.1".into(),
            ambient: Ambient::P1xP2,
            s_components: 3,
            curves: vec![
                curve("C1", B([0, 3]), 2, Some(2)),
                curve("C2", B([0, 3]), 1, None),
                curve("C3", B([0, 1]), 1, None),
                curve("C4", B([1, 0]), 1, None),
            ],
            defects: vec![point("P_{y},{a},{c}", 0)],
            anticanonical_cube: 4,
            f: "x(x+y)c^3-y^2(abc-b^2c-a^3)".into(),
            g: "y(x+y)(abc-b^2c-a^3)".into(),
            notes: vec![],
        },
        LedgerCase {
            family: "2.2".into(),
            ambient: Ambient::P3,
            s_components: 3,
            curves: vec![
                curve("C1", D(1), 1, Some(2)),
                curve("C2", D(1), 1, Some(2)),
                curve("C3", D(2), 2, Some(2)),
                curve("C4", D(2), 1, Some(1)),
                curve("C5", D(2), 1, Some(3)),
            ],
            defects: vec![
                point("P_{x},{y},{z}", 0),
                point("P_{x},{z},{t}", 0),
                point("P_{y},{z},{t}", 1),
            ],
            anticanonical_cube: 6,
            f: "xz^3-(zt-xy-yz-t^2)z^2".into(),
            g: "xy(zt-xy-yz-t^2)".into(),
            notes: vec![],
        },
        LedgerCase {
            family: "2.3".into(),
            ambient: Ambient::P3,
            s_components: 3,
            curves: vec![
                curve("C1", D(1), 1, Some(6)),
                curve("C2", D(1), 2, Some(2)),
                curve("C3", D(1), 1, Some(3)),
                curve("C4", D(3), 1, Some(1)),
                curve("C5", D(2), 1, Some(1)),
            ],
            defects: vec![
                point("P_{x},{z},{t}", 2),
                point("P_{x},{y},{z}", 0),
                point("P_{x},{t},{y,z}", 0),
            ],
            anticanonical_cube: 8,
            f: "x^3y+y(y+z)(xz+xt-t^2)".into(),
            g: "z(y+z)(xz+xt-t^2)".into(),
            notes: vec![],
        },
        LedgerCase {
            family: "9.1".into(),
            ambient: Ambient::P3,
            s_components: 3,
            curves: vec![
                curve("C1", D(1), 1, Some(6)),
                curve("C2", D(1), 2, Some(3)),
                curve("C3", D(2), 2, Some(2)),
                curve("C4", D(3), 1, Some(1)),
            ],
            defects: vec![point("P_{x},{z},{t}", 2), point("P_{x},{y},{z}", 0)],
            anticanonical_cube: 12,
            f: "x^3y(y^2+z^2)(xt-xz-t^2)".into(),
            g: "yz(xt-xz-t^2)".into(),
            notes: vec!["the printed f has degree 9, not 4; stored verbatim".into()],
        },
        LedgerCase {
            family: "10.1".into(),
            ambient: Ambient::P1xP2,
            s_components: 3,
            curves: vec![
                curve("C1", B([0, 3]), 2, Some(2)),
                curve("C2", B([0, 3]), 2, Some(2)),
                curve("C3", B([1, 0]), 1, None),
            ],
            defects: vec![],
            anticanonical_cube: 6,
            f: "xyc^3+(x^2+y^2)(abc-b^2c-a^3)".into(),
            g: "xy(abc-b^2c-a^3)".into(),
            notes: vec![],
        },
    ]
}

/// A JSON array of cases, or a single case.
pub fn cases_from_json(text: &str) -> Result<Vec<LedgerCase>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let cases: Vec<LedgerCase> = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|c| vec![c])
    }
    .map_err(|e| Error::Malformed(e.to_string()))?;
    for c in &cases {
        c.validate()?;
    }
    Ok(cases)
}

pub fn cases_to_json(cases: &[LedgerCase]) -> String {
    serde_json::to_string_pretty(cases).expect("serializable")
}
