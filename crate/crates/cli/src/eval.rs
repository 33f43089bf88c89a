//! Single-point evaluation shared by `eval` and `table`.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use intertwine::blocks::{d2k_block, d2k_m1, d2rk_block, d2rk_eigenvalue, interface_entries, t1_value};
use intertwine::spectra::{
    ktype_exists, m2_det_numeric, spectral_point, theorem1_eigenvalue, theorem1_eigenvalue_continued, theorem1_eigenvalue_numeric,
    BundleParams, KTypeFamily, KTypeLabel,
};
use intertwine::{Error, ExtendedScalar, RadicalValue, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Float,
}

/// Which operator's spectrum to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    /// The normalized intertwinor A.
    A,
    /// D_{2,k}.
    D2k,
    /// D_{2r,k}.
    D2rk,
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::A => "a",
            Operator::D2k => "d2k",
            Operator::D2rk => "d2rk",
        })
    }
}

/// r as given on the command line: an integer, or a real in float mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Order {
    Int(i64),
    Real(f64),
}

impl Order {
    pub fn parse(s: &str, mode: Mode) -> Result<Self> {
        if let Ok(r) = i64::from_str(s) {
            return Ok(Order::Int(r));
        }
        let r = f64::from_str(s).with_context(|| format!("r = '{s}' is not a number"))?;
        if mode == Mode::Exact {
            bail!("exact mode needs an integer r (got {s}); use --mode float for real r");
        }
        Ok(Order::Real(r))
    }

    fn as_f64(self) -> f64 {
        match self {
            Order::Int(r) => r as f64,
            Order::Real(r) => r,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Int(r) => write!(f, "{r}"),
            Order::Real(r) => write!(f, "{r}"),
        }
    }
}

/// One evaluated spectral point. Exact values are "n/d" strings; a radical
/// factor is the pair (value, radicand) meaning value·√radicand.
#[derive(Debug, Clone, Serialize, Default)]
pub struct ValueRecord {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub a: i64,
    pub family: String,
    pub jp: i64,
    pub j: i64,
    pub r: String,
    pub mode: String,
    pub operator: String,
    pub jp_level: String,
    pub j_level: String,
    pub s: String,
    pub value: String,
    pub radicand: String,
    pub trace: String,
    pub det: String,
    pub float: Option<f64>,
    pub pole: bool,
    pub zero: bool,
    pub note: String,
}

pub struct Point {
    pub params: BundleParams,
    pub family: KTypeFamily,
    pub jp: i64,
    pub j: i64,
    pub r: Order,
    pub mode: Mode,
    pub operator: Operator,
}

/// Evaluate one point; nonexistent K-types and degenerate values are errors.
pub fn evaluate(pt: &Point) -> Result<ValueRecord> {
    let label = KTypeLabel::new(pt.family, pt.jp, pt.j);
    if !ktype_exists(&pt.params, &label) {
        bail!("K-type {} {} does not exist for {}", pt.family, label_text(pt), pt.params);
    }
    let sp = spectral_point(&pt.params, pt.jp, pt.j)?;
    let mut rec = header(pt);
    let m2 = pt.family == KTypeFamily::M2;
    match (pt.mode, pt.operator, pt.r) {
        (Mode::Float, Operator::A, r) => {
            let (jp, j) = sp.to_f64();
            let v = if m2 {
                m2_det_numeric(jp, j, r.as_f64())?
            } else {
                theorem1_eigenvalue_numeric(pt.family, &pt.params, jp, j, r.as_f64())?
            };
            set_float(&mut rec, &v, m2);
        }
        (Mode::Float, _, _) => bail!("float mode evaluates the intertwinor only; use --mode exact for {}", pt.operator),
        (Mode::Exact, _, Order::Real(_)) => unreachable!("rejected when parsing r"),
        (Mode::Exact, Operator::A, Order::Int(r)) if m2 => {
            let t1 = match t1_value(&pt.params, &sp, r)? {
                RadicalValue::Finite(t1) => t1,
                RadicalValue::Pole => {
                    rec.pole = true;
                    rec.value = "pole".into();
                    return Ok(rec);
                }
            };
            let block = interface_entries(&pt.params, &sp, r, &t1)?;
            let det = block.det();
            rec.trace = block.trace().to_string();
            rec.float = Some(to_f64(&det));
            rec.zero = det == Rational::from_integer(0.into());
            rec.det = det.to_string();
        }
        (Mode::Exact, Operator::A, Order::Int(r)) => match theorem1_eigenvalue(pt.family, &pt.params, &sp, r)
            .or_else(|e| match e {
                Error::Indeterminate(_) => {
                    rec.note = "continued through a double pole".into();
                    theorem1_eigenvalue_continued(pt.family, &pt.params, &sp, r)
                }
                e => Err(e),
            })? {
            RadicalValue::Finite(v) => {
                rec.zero = v.is_zero();
                rec.float = v.to_f64();
                rec.value = v.coeff.to_string();
                rec.radicand = v.radicand.to_string();
            }
            RadicalValue::Pole => {
                rec.pole = true;
                rec.value = "pole".into();
            }
        },
        (Mode::Exact, Operator::D2k, _) if m2 => set_block(&mut rec, &d2k_block(&pt.params, &sp)),
        (Mode::Exact, Operator::D2k, _) => set_exact(&mut rec, d2k_m1(pt.family, &pt.params, &sp)?),
        (Mode::Exact, Operator::D2rk, Order::Int(r)) => {
            let r = u32::try_from(r).ok().filter(|&r| r >= 1).context("d2rk needs r >= 1")?;
            if m2 {
                set_block(&mut rec, &d2rk_block(&pt.params, &sp, r)?);
            } else {
                set_exact(&mut rec, d2rk_eigenvalue(pt.family, &pt.params, &sp, r)?);
            }
        }
    }
    Ok(rec)
}

/// The input echo of a record, without values.
pub fn header(pt: &Point) -> ValueRecord {
    let levels = spectral_point(&pt.params, pt.jp, pt.j).ok();
    ValueRecord {
        p: pt.params.p,
        q: pt.params.q,
        k: pt.params.k,
        a: pt.params.a,
        family: pt.family.to_string(),
        jp: pt.jp,
        j: pt.j,
        r: pt.r.to_string(),
        mode: match pt.mode {
            Mode::Exact => "exact".into(),
            Mode::Float => "float".into(),
        },
        operator: pt.operator.to_string(),
        jp_level: levels.as_ref().map(|l| l.jp.to_string()).unwrap_or_default(),
        j_level: levels.as_ref().map(|l| l.j.to_string()).unwrap_or_default(),
        s: pt.params.s().to_string(),
        ..Default::default()
    }
}

fn label_text(pt: &Point) -> String {
    format!("(j'={}, j={})", pt.jp, pt.j)
}

fn to_f64(x: &Rational) -> f64 {
    intertwine::arithmetic::to_f64(x)
}

fn set_exact(rec: &mut ValueRecord, v: Rational) {
    rec.float = Some(to_f64(&v));
    rec.zero = v == Rational::from_integer(0.into());
    rec.value = v.to_string();
}

fn set_block(rec: &mut ValueRecord, b: &intertwine::blocks::TwoByTwo) {
    let det = b.det();
    rec.trace = b.trace().to_string();
    rec.float = Some(to_f64(&det));
    rec.zero = det == Rational::from_integer(0.into());
    rec.det = det.to_string();
}

fn set_float(rec: &mut ValueRecord, v: &ExtendedScalar, m2: bool) {
    match v {
        ExtendedScalar::Pole => {
            rec.pole = true;
            rec.value = "pole".into();
        }
        v => {
            let x = v.to_f64();
            rec.float = Some(x);
            rec.zero = x == 0.0;
            if m2 {
                rec.det = x.to_string();
            } else {
                rec.value = x.to_string();
            }
        }
    }
}
