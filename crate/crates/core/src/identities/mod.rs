//! Identity catalogue: closed forms paired with their series oracles.

mod rhs;

pub use rhs::*;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{self, sum_adaptive, EvalConfig, SumResult};
use crate::special_fn::{extended_harmonic, hurwitz_zeta, zeta_minus_one, ZETA4};

/// Every identity the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    ThmBaseE15,
    ThmAltT25,
    ThmV131,
    CorEuler32,
    ThmV233,
    Cor34,
    ThmBase35,
    CorCentral36,
    ThmV337,
    Cor38,
    ThmV3h39,
    Cor310,
    ThmV4311,
    Cor312,
    Ex1Auyeung,
    Ex2Central,
    Ex3Goldbach,
    Ex4Half,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        ThmBaseE15,
        ThmAltT25,
        ThmV131,
        CorEuler32,
        ThmV233,
        Cor34,
        ThmBase35,
        CorCentral36,
        ThmV337,
        Cor38,
        ThmV3h39,
        Cor310,
        ThmV4311,
        Cor312,
        Ex1Auyeung,
        Ex2Central,
        Ex3Goldbach,
        Ex4Half,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThmBaseE15 => "THM_BASE_E15",
            ThmAltT25 => "THM_ALT_T25",
            ThmV131 => "THM_V1_31",
            CorEuler32 => "COR_EULER_32",
            ThmV233 => "THM_V2_33",
            Cor34 => "COR_34",
            ThmBase35 => "THM_BASE_35",
            CorCentral36 => "COR_CENTRAL_36",
            ThmV337 => "THM_V3_37",
            Cor38 => "COR_38",
            ThmV3h39 => "THM_V3H_39",
            Cor310 => "COR_310",
            ThmV4311 => "THM_V4_311",
            Cor312 => "COR_312",
            Ex1Auyeung => "EX1_AUYEUNG",
            Ex2Central => "EX2_CENTRAL",
            Ex3Goldbach => "EX3_GOLDBACH",
            Ex4Half => "EX4_HALF",
        }
    }

    /// Parameters the identity reads.
    pub fn signature(self) -> &'static str {
        match self {
            ThmBaseE15 => "x m",
            ThmAltT25 | ThmV131 | ThmV233 => "n m",
            CorEuler32 | Cor34 => "m",
            ThmBase35 => "x p m",
            CorCentral36 | Cor38 | Cor310 | Cor312 => "p m",
            ThmV337 | ThmV3h39 | ThmV4311 => "p n m",
            Ex1Auyeung => "case [m]",
            Ex2Central => "case [p]",
            Ex3Goldbach => "case [p] [m]",
            Ex4Half => "m",
        }
    }

    /// The series on the left-hand side.
    pub fn series(self) -> &'static str {
        match self {
            ThmBaseE15 => "sum_{k>=1} (-1)^(k-1) C(x,k) / k^m",
            ThmAltT25 => "sum_{k>=0} (-1)^(n-1) / ((n+k+1)^(m+1) C(n+k,k))",
            ThmV131 => "sum_{k>=0} H_k / ((n+k+1)^(m+1) C(n+k,k))",
            CorEuler32 => "2 sum_{k>=1} H_k / (k+1)^m",
            ThmV233 => "sum_{k>=0} (H_k^2 - H_k^(2)) / ((n+k+1)^(m+1) C(n+k,k))",
            Cor34 => "sum_{k>=1} (H_k^2 - H_k^(2)) / (k+1)^(m+1)",
            ThmBase35 => "sum_{k>=0} (-1)^k C(x,k) / (p+k)^(m+1)",
            CorCentral36 => "sum_{k>=0} (H_k - 2H_2k) C(2k,k) / (4^k (p+k)^(m+1))",
            ThmV337 => "sum_{k>=1} (-1)^n / (k (p+n+k)^(m+1) C(n+k,k))",
            Cor38 => "sum_{k>=1} 1 / (k (p+k)^(m+1))",
            ThmV3h39 => "sum_{k>=1} (-1)^n H_(k-1) / (k (p+n+k)^(m+1) C(n+k,k))",
            Cor310 => "sum_{k>=1} H_(k-1) / (k (p+k)^(m+1))",
            ThmV4311 => "sum_{k>=1} (H_(k-1)^2 - H_(k-1)^(2)) / (k (p+n+k)^m C(n+k,k))",
            Cor312 => "sum_{k>=1} (H_(k-1)^2 - H_(k-1)^(2)) / (k (p+k)^m)",
            Ex1Auyeung => "quadratic and linear Euler sums of weight four",
            Ex2Central => "central binomial sums with 2H_2k - H_k",
            Ex3Goldbach => "zeta tails sum_{j>=2} (zeta(m+j) - 1) and psi series",
            Ex4Half => "sum_{k>=2} H_(k-1) / (k (k-1/2)^(m+1))",
        }
    }

    /// Whether a stated form exists that differs from the evaluated one.
    pub fn has_stated_variant(self) -> bool {
        matches!(self, Cor310 | ThmV4311 | Cor312 | Ex4Half)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain("IdentityId", format!("unknown identity {s}")))
    }
}

/// Sub-cases of the worked examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// S(1²;2) = 17/4 ζ(4)
    QuadraticWeight4,
    /// S(2,2) = 7/4 ζ(4)
    LinearWeight4,
    /// Σ (H_k² − H_k^(2)) / k^(m+1)
    KPower,
    /// Σ (2H_2k − H_k) C(2k,k) / ((k+1) 4^(k+1)) = 1
    CentralOne,
    /// Σ (2H_2k − H_k) C(2k,k) / ((k+½)² 4^k) = π(4 ln²2 − π²/6)
    CentralHalf,
    /// Σ (2H_2k − H_k) C(2k,k) / ((p+k)² 4^k) at general p
    CentralP,
    /// Σ p / (k(p+k)) = γ + ψ(p+1)
    PsiSeries,
    /// Σ_j p^j ζ(m+j+2, p+1)
    ZetaPower,
    /// Σ_{j≥2} (ζ(m+j) − 1) = m + 1 − Σ ζ(k+1)
    ZetaTail,
    /// Σ_{j≥2} (ζ(j) − 1) = 1
    Goldbach,
}

impl Case {
    pub const ALL: [Case; 10] = [
        Case::QuadraticWeight4,
        Case::LinearWeight4,
        Case::KPower,
        Case::CentralOne,
        Case::CentralHalf,
        Case::CentralP,
        Case::PsiSeries,
        Case::ZetaPower,
        Case::ZetaTail,
        Case::Goldbach,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Case::QuadraticWeight4 => "quadratic-weight4",
            Case::LinearWeight4 => "linear-weight4",
            Case::KPower => "kpower",
            Case::CentralOne => "central-one",
            Case::CentralHalf => "central-half",
            Case::CentralP => "central-p",
            Case::PsiSeries => "psi-series",
            Case::ZetaPower => "zeta-power",
            Case::ZetaTail => "zeta-tail",
            Case::Goldbach => "goldbach",
        }
    }

    pub fn owner(self) -> IdentityId {
        match self {
            Case::QuadraticWeight4 | Case::LinearWeight4 | Case::KPower => Ex1Auyeung,
            Case::CentralOne | Case::CentralHalf | Case::CentralP => Ex2Central,
            Case::PsiSeries | Case::ZetaPower | Case::ZetaTail | Case::Goldbach => Ex3Goldbach,
        }
    }

    fn default_for(id: IdentityId) -> Option<Case> {
        match id {
            Ex1Auyeung => Some(Case::QuadraticWeight4),
            Ex2Central => Some(Case::CentralOne),
            Ex3Goldbach => Some(Case::Goldbach),
            _ => None,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Case::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::domain("Case", format!("unknown case {s}")))
    }
}

/// Which closed form to evaluate when a stated form differs from the checked one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Form {
    #[default]
    Corrected,
    Stated,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Corrected => "corrected",
            Form::Stated => "stated",
        }
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(Form::Corrected),
            "stated" => Ok(Form::Stated),
            _ => Err(Error::domain("Form", format!("unknown form {s}"))),
        }
    }
}

/// Parameter point; unused fields stay `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Params {
    pub n: Option<u64>,
    pub m: Option<u32>,
    pub p: Option<f64>,
    pub x: Option<f64>,
    pub case: Option<Case>,
}

impl Params {
    pub fn nm(n: u64, m: u32) -> Self {
        Params { n: Some(n), m: Some(m), ..Default::default() }
    }

    pub fn m(m: u32) -> Self {
        Params { m: Some(m), ..Default::default() }
    }

    pub fn pm(p: f64, m: u32) -> Self {
        Params { p: Some(p), m: Some(m), ..Default::default() }
    }

    pub fn pnm(p: f64, n: u64, m: u32) -> Self {
        Params { p: Some(p), n: Some(n), m: Some(m), ..Default::default() }
    }

    pub fn xm(x: f64, m: u32) -> Self {
        Params { x: Some(x), m: Some(m), ..Default::default() }
    }

    pub fn xpm(x: f64, p: f64, m: u32) -> Self {
        Params { x: Some(x), p: Some(p), m: Some(m), ..Default::default() }
    }

    pub fn case(case: Case) -> Self {
        Params { case: Some(case), ..Default::default() }
    }

    pub fn with_m(self, m: u32) -> Self {
        Params { m: Some(m), ..self }
    }

    pub fn with_p(self, p: f64) -> Self {
        Params { p: Some(p), ..self }
    }

    fn need_n(&self) -> Result<u64> {
        self.n.ok_or_else(|| Error::domain("params", "missing n"))
    }

    fn need_m(&self) -> Result<u32> {
        self.m.ok_or_else(|| Error::domain("params", "missing m"))
    }

    fn need_p(&self) -> Result<f64> {
        self.p.ok_or_else(|| Error::domain("params", "missing p"))
    }

    fn need_x(&self) -> Result<f64> {
        self.x.ok_or_else(|| Error::domain("params", "missing x"))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = self.case {
            parts.push(format!("case={c}"));
        }
        if let Some(x) = self.x {
            parts.push(format!("x={x}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of comparing an oracle with a closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub id: IdentityId,
    pub form: Form,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub lhs_terms: u64,
    pub lhs_converged: bool,
    pub lhs_tail: f64,
}

impl VerifyReport {
    /// A stated form that disagrees with its series: reported, never hidden.
    pub fn is_flagged_discrepancy(&self) -> bool {
        self.form == Form::Stated && self.id.has_stated_variant() && !self.pass
    }
}

/// Absolute error replaces relative error when |rhs| falls below this.
pub const NEAR_ZERO: f64 = 1e-12;

fn case_of(id: IdentityId, params: &Params) -> Result<Case> {
    let case = params
        .case
        .or_else(|| Case::default_for(id))
        .ok_or_else(|| Error::domain("params", format!("{id} needs a case")))?;
    if case.owner() != id {
        return Err(Error::domain("params", format!("case {case} belongs to {}", case.owner())));
    }
    Ok(case)
}

fn zeta_series_cfg(cfg: &EvalConfig) -> EvalConfig {
    EvalConfig { rel_tol: cfg.rel_tol.min(1e-15), ..*cfg }
}

/// Evaluate the series side.
pub fn eval_lhs(id: IdentityId, params: &Params, cfg: &EvalConfig) -> Result<SumResult> {
    let p = params;
    match id {
        ThmBaseE15 => series::lhs_base_binomial(p.need_x()?, p.need_m()?, cfg),
        ThmAltT25 => series::lhs_alt(p.need_n()?, p.need_m()?, cfg),
        ThmV131 => series::lhs_variant1(p.need_n()?, p.need_m()?, cfg),
        CorEuler32 => {
            let m = p.need_m()?;
            if m < 2 {
                return Err(Error::domain("COR_EULER_32", format!("m = {m} < 2")));
            }
            Ok(series::lhs_variant1(0, m - 1, cfg)?.scaled(2.0))
        }
        ThmV233 => series::lhs_variant2(p.need_n()?, p.need_m()?, cfg),
        Cor34 => series::lhs_variant2(0, p.need_m()?, cfg),
        ThmBase35 => series::lhs_base_shifted(p.need_x()?, p.need_p()?, p.need_m()?, cfg),
        CorCentral36 => series::lhs_central_binom(p.need_p()?, p.need_m()?, cfg),
        ThmV337 => series::lhs_variant3(p.need_p()?, p.need_n()?, p.need_m()?, cfg),
        Cor38 => series::lhs_variant3(p.need_p()?, 0, p.need_m()?, cfg),
        ThmV3h39 => series::lhs_variant3h(p.need_p()?, p.need_n()?, p.need_m()?, cfg),
        Cor310 => series::lhs_variant3h(p.need_p()?, 0, p.need_m()?, cfg),
        ThmV4311 => series::lhs_variant4(p.need_p()?, p.need_n()?, p.need_m()?, cfg),
        Cor312 => series::lhs_variant4(p.need_p()?, 0, p.need_m()?, cfg),
        Ex4Half => series::lhs_variant3h(-0.5, 0, p.need_m()?, cfg),
        Ex1Auyeung | Ex2Central | Ex3Goldbach => match case_of(id, p)? {
            Case::QuadraticWeight4 => series::lhs_quadratic_euler(2, cfg),
            Case::LinearWeight4 => series::lhs_linear_euler(2, 2, cfg),
            Case::KPower => series::lhs_variant2_kpower(p.need_m()?, cfg),
            Case::CentralOne => Ok(series::lhs_central_binom(1.0, 0, cfg)?.scaled(-0.25)),
            Case::CentralHalf => Ok(series::lhs_central_binom(0.5, 1, cfg)?.scaled(-1.0)),
            Case::CentralP => Ok(series::lhs_central_binom(p.need_p()?, 1, cfg)?.scaled(-1.0)),
            Case::PsiSeries => {
                let pv = p.need_p()?;
                Ok(series::lhs_variant3(pv, 0, 0, cfg)?.scaled(pv))
            }
            Case::ZetaPower => {
                let (pv, m) = (p.need_p()?, p.need_m()?);
                if !(pv.abs() < (1.0 + pv).abs()) {
                    return Err(Error::domain("zeta-power", format!("|p| < |1+p| fails at p = {pv}")));
                }
                let mut err = None;
                let r = sum_adaptive(
                    |j| match hurwitz_zeta((m as u64 + j + 2) as f64, pv + 1.0) {
                        Ok(z) => pv.powi(j as i32) * z,
                        Err(e) => {
                            err.get_or_insert(e);
                            f64::NAN
                        }
                    },
                    0,
                    &zeta_series_cfg(cfg),
                );
                match err {
                    Some(e) => Err(e),
                    None => r,
                }
            }
            Case::ZetaTail | Case::Goldbach => {
                let m = if case_of(id, p)? == Case::Goldbach { 0 } else { p.need_m()? };
                sum_adaptive(
                    |j| zeta_minus_one((m as u64 + j) as f64).unwrap_or(f64::NAN),
                    2,
                    &zeta_series_cfg(cfg),
                )
            }
        },
    }
}

/// Evaluate the closed-form side.
pub fn eval_rhs(id: IdentityId, params: &Params, form: Form) -> Result<f64> {
    let p = params;
    let stated = form == Form::Stated;
    match id {
        ThmBaseE15 => rhs_thm_e15(p.need_x()?, p.need_m()?),
        ThmAltT25 => rhs_thm_t25(p.need_n()?, p.need_m()?),
        ThmV131 => rhs_thm_31(p.need_n()?, p.need_m()?),
        CorEuler32 => rhs_cor_32(p.need_m()?),
        ThmV233 => rhs_thm_33(p.need_n()?, p.need_m()?),
        Cor34 => rhs_cor_34(p.need_m()?),
        ThmBase35 => rhs_thm_35(p.need_x()?, p.need_p()?, p.need_m()?),
        CorCentral36 => rhs_cor_36(p.need_p()?, p.need_m()?),
        ThmV337 => rhs_thm_37(p.need_p()?, p.need_n()?, p.need_m()?),
        Cor38 => rhs_cor_38(p.need_p()?, p.need_m()?),
        ThmV3h39 => rhs_thm_39(p.need_p()?, p.need_n()?, p.need_m()?),
        Cor310 if stated => rhs_cor_310_printed(p.need_p()?, p.need_m()?),
        Cor310 => rhs_cor_310(p.need_p()?, p.need_m()?),
        ThmV4311 if stated => rhs_thm_311_printed(p.need_p()?, p.need_n()?, p.need_m()?),
        ThmV4311 => rhs_thm_311(p.need_p()?, p.need_n()?, p.need_m()?),
        Cor312 if stated => rhs_cor_312_printed(p.need_p()?, p.need_m()?),
        Cor312 => rhs_cor_312(p.need_p()?, p.need_m()?),
        Ex4Half if stated => Ok(rhs_ex4_printed(p.need_m()?)),
        Ex4Half => Ok(rhs_ex4(p.need_m()?)),
        Ex1Auyeung | Ex2Central | Ex3Goldbach => match case_of(id, p)? {
            Case::QuadraticWeight4 => Ok(4.25 * ZETA4),
            Case::LinearWeight4 => Ok(1.75 * ZETA4),
            Case::KPower => rhs_cor_34a(p.need_m()?),
            Case::CentralOne => Ok(1.0),
            Case::CentralHalf => Ok(central_half_value()),
            Case::CentralP => rhs_central_m1(p.need_p()?),
            Case::PsiSeries => extended_harmonic(p.need_p()?, 1),
            Case::ZetaPower => rhs_cor_38(p.need_p()?, p.need_m()?),
            Case::ZetaTail => Ok(rhs_zeta_tail(p.need_m()?)),
            Case::Goldbach => Ok(1.0),
        },
    }
}

/// Absolute and relative disagreement; the relative error falls back to the
/// absolute one when |rhs| < [`NEAR_ZERO`].
pub fn errors(lhs: f64, rhs: f64) -> (f64, f64) {
    let abs_err = (lhs - rhs).abs();
    let rel_err = if rhs.abs() < NEAR_ZERO { abs_err } else { abs_err / rhs.abs() };
    (abs_err, rel_err)
}

/// Compare both sides with explicit form and oracle settings.
pub fn verify_with(
    id: IdentityId,
    params: &Params,
    form: Form,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<VerifyReport> {
    let lhs = eval_lhs(id, params, cfg)?;
    let rhs = eval_rhs(id, params, form)?;
    let (abs_err, rel_err) = errors(lhs.value, rhs);
    let form = if id.has_stated_variant() { form } else { Form::Stated };
    Ok(VerifyReport {
        id,
        form,
        params: *params,
        lhs: lhs.value,
        rhs,
        abs_err,
        rel_err,
        tol,
        pass: lhs.converged && rel_err <= tol,
        lhs_terms: lhs.terms_used,
        lhs_converged: lhs.converged,
        lhs_tail: lhs.tail_estimate,
    })
}

/// Compare both sides with the checked closed form and default oracle settings.
pub fn verify(id: IdentityId, params: &Params, tol: f64) -> Result<VerifyReport> {
    verify_with(id, params, Form::Corrected, tol, &EvalConfig::default())
}

pub const P_GRID: [f64; 4] = [0.5, 1.0, 1.5, 2.5];
pub const X_GRID: [f64; 8] = [0.0, 1.0, 2.0, 3.0, 4.0, 0.5, 1.5, 2.5];

/// Default verification grid of an identity.
pub fn grid(id: IdentityId) -> Vec<Params> {
    let n_all = 0..=4u64;
    let m1 = 1..=5u32;
    let m0 = 0..=4u32;
    let mut out = Vec::new();
    match id {
        ThmBaseE15 => {
            for x in X_GRID {
                out.extend(m1.clone().map(|m| Params::xm(x, m)));
            }
        }
        ThmAltT25 => {
            for n in 1..=4 {
                out.extend(m1.clone().map(|m| Params::nm(n, m)));
            }
        }
        ThmV131 | ThmV233 => {
            for n in n_all {
                out.extend(m1.clone().map(|m| Params::nm(n, m)));
            }
        }
        CorEuler32 => out.extend((2..=5).map(Params::m)),
        Cor34 => out.extend(m1.map(Params::m)),
        ThmBase35 => {
            for x in X_GRID {
                for p in P_GRID {
                    out.extend(m0.clone().map(|m| Params::xpm(x, p, m)));
                }
            }
        }
        CorCentral36 | Cor38 | Cor310 => {
            for p in P_GRID {
                out.extend(m0.clone().map(|m| Params::pm(p, m)));
            }
        }
        Cor312 => {
            for p in P_GRID {
                out.extend(m1.clone().map(|m| Params::pm(p, m)));
            }
        }
        ThmV337 | ThmV3h39 | ThmV4311 => {
            let ms = if id == ThmV4311 { m1 } else { m0 };
            for p in P_GRID {
                for n in n_all.clone() {
                    out.extend(ms.clone().map(|m| Params::pnm(p, n, m)));
                }
            }
        }
        Ex1Auyeung | Ex2Central | Ex3Goldbach | Ex4Half => {
            out.extend(example_points().into_iter().filter(|e| e.0 == id).map(|e| e.1));
        }
    }
    out
}

/// Parameter points and tolerances of the worked examples.
fn example_points() -> Vec<(IdentityId, Params, f64)> {
    let mut v = vec![
        (Ex1Auyeung, Params::case(Case::QuadraticWeight4), 1e-8),
        (Ex1Auyeung, Params::case(Case::LinearWeight4), 1e-8),
    ];
    v.extend((1..=5).map(|m| (Ex1Auyeung, Params::case(Case::KPower).with_m(m), 1e-8)));
    v.push((Ex2Central, Params::case(Case::CentralOne), 1e-9));
    v.push((Ex2Central, Params::case(Case::CentralHalf), 1e-9));
    v.extend(P_GRID.map(|p| (Ex2Central, Params::case(Case::CentralP).with_p(p), 1e-9)));
    v.extend(P_GRID.map(|p| (Ex3Goldbach, Params::case(Case::PsiSeries).with_p(p), 1e-9)));
    v.extend((0..=3).map(|m| (Ex3Goldbach, Params::case(Case::ZetaPower).with_p(0.4).with_m(m), 1e-9)));
    v.extend((0..=3).map(|m| (Ex3Goldbach, Params::case(Case::ZetaTail).with_m(m), 1e-11)));
    v.push((Ex3Goldbach, Params::case(Case::Goldbach), 1e-12));
    v.extend((0..=1).map(|m| (Ex4Half, Params::m(m), 1e-8)));
    v
}

/// Every worked example; the half-shift example appears in both its stated and corrected forms.
pub fn example_suite() -> Result<Vec<VerifyReport>> {
    let cfg = EvalConfig::default();
    let mut out = Vec::new();
    for (id, params, tol) in example_points() {
        if id.has_stated_variant() {
            out.push(verify_with(id, &params, Form::Stated, tol, &cfg)?);
        }
        out.push(verify_with(id, &params, Form::Corrected, tol, &cfg)?);
    }
    Ok(out)
}
