//! Machine-readable output records.

use serde::de::Deserializer;
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use std::str::FromStr;

use crate::identities::{Form, IdentityId, Params, VerifyReport};
use crate::series::SumResult;

/// A real printed with 17 significant digits so it parses back bit-for-bit.
/// Non-finite values are written as `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Real {
    pub fn format(v: f64) -> String {
        format!("{v:.16e}")
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(Real::format(self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Real(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

/// One NDJSON line. Every command emits the same keys; absent values are `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub id: String,
    pub form: Option<String>,
    pub case: Option<String>,
    pub x: Option<Real>,
    pub p: Option<Real>,
    pub n: Option<u64>,
    pub m: Option<u32>,
    pub lhs: Option<Real>,
    pub rhs: Option<Real>,
    pub abs_err: Option<Real>,
    pub rel_err: Option<Real>,
    pub tol: Option<Real>,
    pub pass: Option<bool>,
    pub flagged: Option<bool>,
    pub terms: Option<u64>,
    pub converged: Option<bool>,
    pub tail: Option<Real>,
    pub error: Option<String>,
    pub wall_ms: Real,
}

impl OutputRecord {
    pub fn new(command: &str, id: IdentityId, params: &Params) -> Self {
        OutputRecord {
            command: command.to_owned(),
            id: id.name().to_owned(),
            form: None,
            case: params.case.map(|c| c.name().to_owned()),
            x: params.x.map(Real),
            p: params.p.map(Real),
            n: params.n,
            m: params.m,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            tol: None,
            pass: None,
            flagged: None,
            terms: None,
            converged: None,
            tail: None,
            error: None,
            wall_ms: Real(0.0),
        }
    }

    /// Records the form only for identities that have more than one.
    pub fn with_form(mut self, form: Form) -> Self {
        self.form = IdentityId::from_str(&self.id)
            .ok()
            .filter(|id| id.has_stated_variant())
            .map(|_| form.name().to_owned());
        self
    }

    pub fn set_lhs(&mut self, s: &SumResult) {
        self.lhs = Some(Real(s.value));
        self.terms = Some(s.terms_used);
        self.converged = Some(s.converged);
        self.tail = Some(Real(s.tail_estimate));
    }

    pub fn set_rhs(&mut self, rhs: f64) {
        self.rhs = Some(Real(rhs));
        if let Some(Real(lhs)) = self.lhs {
            let (abs, rel) = crate::identities::errors(lhs, rhs);
            self.abs_err = Some(Real(abs));
            self.rel_err = Some(Real(rel));
        }
    }

    pub fn from_report(command: &str, r: &VerifyReport) -> Self {
        let mut rec = OutputRecord::new(command, r.id, &r.params).with_form(r.form);
        rec.lhs = Some(Real(r.lhs));
        rec.rhs = Some(Real(r.rhs));
        rec.abs_err = Some(Real(r.abs_err));
        rec.rel_err = Some(Real(r.rel_err));
        rec.tol = Some(Real(r.tol));
        rec.pass = Some(r.pass);
        rec.flagged = Some(r.is_flagged_discrepancy());
        rec.terms = Some(r.lhs_terms);
        rec.converged = Some(r.lhs_converged);
        rec.tail = Some(Real(r.lhs_tail));
        rec
    }

    pub fn with_error(mut self, e: &crate::Error) -> Self {
        self.error = Some(e.to_string());
        self
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// One sweep row under the fixed CSV header. The `n` column carries `x` for the
/// identities indexed by a real upper argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CsvRow {
    pub id: String,
    pub n: String,
    pub m: String,
    pub p: String,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: String,
    pub rel_err: String,
    pub terms: String,
    pub converged: String,
}

fn cell(v: Option<Real>) -> String {
    v.map(|r| Real::format(r.0)).unwrap_or_default()
}

impl From<&OutputRecord> for CsvRow {
    fn from(r: &OutputRecord) -> Self {
        let n = match (r.n, r.x) {
            (Some(n), _) => n.to_string(),
            (None, x) => cell(x),
        };
        CsvRow {
            id: r.id.clone(),
            n,
            m: r.m.map(|m| m.to_string()).unwrap_or_default(),
            p: cell(r.p),
            lhs: cell(r.lhs),
            rhs: cell(r.rhs),
            abs_err: cell(r.abs_err),
            rel_err: cell(r.rel_err),
            terms: r.terms.map(|t| t.to_string()).unwrap_or_default(),
            converged: r.converged.map(|c| c.to_string()).unwrap_or_default(),
        }
    }
}
