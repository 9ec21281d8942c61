//! Spin-mass formula, representation search, orbit classes and the
//! Gell-Mann/Okubo splitting formulas with a least-squares fit.

use std::io::Read;

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::rep_core::RepLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub b: i32,
    pub s: HalfInt,
    pub p2: i8,
    pub q: i32,
    pub y: i32,
    pub i: HalfInt,
    pub u: HalfInt,
}

impl QuantumNumbers {
    /// `I(I+1) - Y^2/4`
    pub fn isospin_term(&self) -> Rational64 {
        self.i.casimir() - Rational64::new((self.y * self.y) as i64, 4)
    }

    /// `U(U+1) - Q^2/4`
    pub fn uspin_term(&self) -> Rational64 {
        self.u.casimir() - Rational64::new((self.q * self.q) as i64, 4)
    }
}

pub const COEFF_NAMES: [&str; 7] = ["m0", "alpha", "beta", "gamma", "alpha'", "beta'", "gamma'"];

/// Coefficients of `[m0, alpha, beta, gamma, alpha', beta', gamma']`.
pub fn coefficient_row(qn: &QuantumNumbers) -> [Rational64; 7] {
    coefficient_row_with(qn, None)
}

/// As [`coefficient_row`], with `U(U+1)` replaced by `u_casimir` when given.
pub fn coefficient_row_with(qn: &QuantumNumbers, u_casimir: Option<Rational64>) -> [Rational64; 7] {
    let one = Rational64::from_integer(1);
    let u_term = match u_casimir {
        Some(c) => c - Rational64::new((qn.q * qn.q) as i64, 4),
        None => qn.uspin_term(),
    };
    [
        one,
        one,
        Rational64::from_integer(qn.y as i64),
        qn.isospin_term(),
        one,
        Rational64::from_integer(-qn.q as i64),
        u_term,
    ]
}

/// Charge-blind row: the primed entries are zero.
pub fn hypercharge_row(qn: &QuantumNumbers) -> [Rational64; 7] {
    let mut r = coefficient_row(qn);
    for v in &mut r[4..] {
        *v = Rational64::zero();
    }
    r
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct GmoParams {
    pub m0: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub alpha_p: f64,
    pub beta_p: f64,
    pub gamma_p: f64,
    pub quadratic: bool,
}

impl GmoParams {
    pub fn as_array(&self) -> [f64; 7] {
        [self.m0, self.alpha, self.beta, self.gamma, self.alpha_p, self.beta_p, self.gamma_p]
    }

    /// `(beta'/beta, gamma'/gamma)` where the denominators are nonzero.
    pub fn theta_ratios(&self) -> (Option<f64>, Option<f64>) {
        let r = |a: f64, b: f64| (b != 0.0).then(|| a / b);
        (r(self.beta_p, self.beta), r(self.gamma_p, self.gamma))
    }
}

fn dot(row: &[Rational64; 7], p: &[f64; 7]) -> f64 {
    row.iter().zip(p).map(|(c, v)| c.to_f64().unwrap() * v).sum()
}

fn finish(value: f64, quadratic: bool) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite("predicted mass".into()));
    }
    if !quadratic {
        return Ok(value);
    }
    if value < 0.0 {
        return Err(Error::NegativeMassSquared(value));
    }
    Ok(value.sqrt())
}

/// Full formula. In quadratic mode the expression is `m^2` and its root is returned.
pub fn gmo_predict(params: &GmoParams, qn: &QuantumNumbers) -> Result<f64> {
    finish(dot(&coefficient_row(qn), &params.as_array()), params.quadratic)
}

pub fn gmo_hypercharge_only(params: &GmoParams, qn: &QuantumNumbers) -> Result<f64> {
    finish(dot(&hypercharge_row(qn), &params.as_array()), params.quadratic)
}

/// Weighted mean of the masses, or of their squares in quadratic mode (then the result is `m0^2`).
pub fn m0_average(masses: &[f64], quadratic: bool, weights: &[u32]) -> Result<f64> {
    if masses.is_empty() {
        return Err(Error::Empty("masses".into()));
    }
    if weights.len() != masses.len() {
        return Err(Error::Dimension(weights.len()));
    }
    let total: u32 = weights.iter().sum();
    if total == 0 {
        return Err(Error::Empty("weights".into()));
    }
    let s: f64 = masses
        .iter()
        .zip(weights)
        .map(|(m, w)| if quadratic { m * m } else { *m } * *w as f64)
        .sum();
    Ok(s / total as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Observation {
    pub name: String,
    pub qn: QuantumNumbers,
    /// Replaces `U(U+1)` in the row, for printed rows that no half-integer `U` reproduces.
    pub u_casimir: Option<Rational64>,
    pub mass: f64,
}

impl Observation {
    pub fn new(name: &str, qn: QuantumNumbers, mass: f64) -> Self {
        Observation { name: name.to_string(), qn, u_casimir: None, mass }
    }

    pub fn row(&self) -> [Rational64; 7] {
        coefficient_row_with(&self.qn, self.u_casimir)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FitColumn {
    /// `alpha + alpha'` combined.
    Offset,
    Beta,
    Gamma,
    BetaP,
    GammaP,
}

impl FitColumn {
    pub fn name(self) -> &'static str {
        match self {
            FitColumn::Offset => "alpha+alpha'",
            FitColumn::Beta => "beta",
            FitColumn::Gamma => "gamma",
            FitColumn::BetaP => "beta'",
            FitColumn::GammaP => "gamma'",
        }
    }

    fn from_row(self, r: &[Rational64; 7]) -> Rational64 {
        match self {
            FitColumn::Offset => r[1],
            FitColumn::Beta => r[2],
            FitColumn::Gamma => r[3],
            FitColumn::BetaP => r[5],
            FitColumn::GammaP => r[6],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct FitOptions {
    pub quadratic: bool,
    /// Drop the `Y` column (meson octets).
    pub beta_zero: bool,
    /// Keep only the charge-blind columns.
    pub hypercharge_only: bool,
    /// Fixed `m0` (or `m0^2` in quadratic mode); the unweighted mean of the inputs when absent.
    pub m0: Option<f64>,
}

impl FitOptions {
    pub fn columns(&self) -> Vec<FitColumn> {
        let mut c = vec![FitColumn::Offset];
        if !self.beta_zero {
            c.push(FitColumn::Beta);
        }
        c.push(FitColumn::Gamma);
        if !self.hypercharge_only {
            c.push(FitColumn::BetaP);
            c.push(FitColumn::GammaP);
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub name: String,
    pub observed: f64,
    pub fitted: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitReport {
    /// The combined offset is reported in `alpha`; `alpha_p` is zero.
    pub params: GmoParams,
    pub columns: Vec<FitColumn>,
    pub coefficients: Vec<f64>,
    pub rank: usize,
    /// Residuals in target units (MeV, or MeV^2 in quadratic mode).
    pub residuals: Vec<Residual>,
    pub rms: f64,
}

/// Design matrix and target vector (`m - m0` or `m^2 - m0^2`).
pub fn design(obs: &[Observation], opts: &FitOptions) -> Result<(DMatrix<f64>, DVector<f64>, f64)> {
    if obs.is_empty() {
        return Err(Error::Empty("observations".into()));
    }
    for o in obs {
        if !o.mass.is_finite() {
            return Err(Error::NonFinite(format!("mass of {}", o.name)));
        }
    }
    let m0 = match opts.m0 {
        Some(v) => v,
        None => m0_average(&obs.iter().map(|o| o.mass).collect::<Vec<_>>(), opts.quadratic, &vec![1; obs.len()])?,
    };
    let cols = opts.columns();
    let a = DMatrix::from_fn(obs.len(), cols.len(), |i, j| cols[j].from_row(&obs[i].row()).to_f64().unwrap());
    let t = DVector::from_fn(obs.len(), |i, _| {
        let m = obs[i].mass;
        (if opts.quadratic { m * m } else { m }) - m0
    });
    Ok((a, t, m0))
}

/// Least squares over the selected columns via SVD. Rank deficiency is an error
/// that carries a basis of the null space.
pub fn gmo_fit(obs: &[Observation], opts: &FitOptions) -> Result<FitReport> {
    let (a, t, m0) = design(obs, opts)?;
    let cols = opts.columns();
    if obs.len() < cols.len() {
        return Err(Error::Underdetermined { obs: obs.len(), params: cols.len() });
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let tol = smax * 1e-10 * (a.nrows().max(a.ncols()) as f64);
    let rank = svd.singular_values.iter().filter(|s| **s > tol).count();
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    if rank < cols.len() {
        let null_space = (0..cols.len())
            .filter(|&k| svd.singular_values[k] <= tol)
            .map(|k| v_t.row(k).iter().copied().collect())
            .collect();
        return Err(Error::RankDeficient { rank, cols: cols.len(), null_space });
    }
    let x = svd.solve(&t, tol).map_err(|e| Error::Unknown(e.to_string()))?;
    let fitted = &a * &x;
    let residuals: Vec<Residual> = obs
        .iter()
        .enumerate()
        .map(|(i, o)| Residual {
            name: o.name.clone(),
            observed: t[i] + m0,
            fitted: fitted[i] + m0,
            residual: t[i] - fitted[i],
        })
        .collect();
    let rms = (residuals.iter().map(|r| r.residual * r.residual).sum::<f64>() / obs.len() as f64).sqrt();
    let mut params = GmoParams { m0, quadratic: opts.quadratic, ..Default::default() };
    for (c, v) in cols.iter().zip(x.iter()) {
        match c {
            FitColumn::Offset => params.alpha = *v,
            FitColumn::Beta => params.beta = *v,
            FitColumn::Gamma => params.gamma = *v,
            FitColumn::BetaP => params.beta_p = *v,
            FitColumn::GammaP => params.gamma_p = *v,
        }
    }
    Ok(FitReport { params, columns: cols, coefficients: x.iter().copied().collect(), rank, residuals, rms })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosureRelation {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs: f64,
    /// `abs / |rhs|`
    pub rel: f64,
}

fn relation(name: &str, lhs: f64, rhs: f64) -> ClosureRelation {
    let abs = (lhs - rhs).abs();
    let rel = if rhs == 0.0 { if abs == 0.0 { 0.0 } else { f64::INFINITY } } else { abs / rhs.abs() };
    ClosureRelation { name: name.to_string(), lhs, rhs, abs, rel }
}

/// `m_Xi + m_N = (3 m_Lambda + m_Sigma) / 2`
pub fn baryon_closure(xi: f64, n: f64, lambda: f64, sigma: f64) -> ClosureRelation {
    relation("m_Xi + m_N = (3 m_Lambda + m_Sigma)/2", xi + n, 0.5 * (3.0 * lambda + sigma))
}

/// `3 m_singlet^2 + m_triplet^2 = 4 m_doublet^2`
pub fn meson_closure(singlet: f64, triplet: f64, doublet: f64) -> ClosureRelation {
    relation(
        "3 m_singlet^2 + m_triplet^2 = 4 m_doublet^2",
        3.0 * singlet * singlet + triplet * triplet,
        4.0 * doublet * doublet,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Linear,
    Quadratic,
}

pub const DEFAULT_REGIME_THRESHOLD: f64 = 0.15;

pub fn splitting_regime(delta_m2: f64, m0_sq: f64, threshold: f64) -> Result<Regime> {
    if !(m0_sq > 0.0) {
        return Err(Error::NonFinite(format!("m0^2 must be positive, got {m0_sq}")));
    }
    Ok(if (delta_m2 / m0_sq).abs() < threshold { Regime::Linear } else { Regime::Quadratic })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitType {
    PlusM,
    MinusM,
    Imaginary,
    PlusZero,
    MinusZero,
    Origin,
}

impl OrbitType {
    pub fn label(self) -> &'static str {
        match self {
            OrbitType::PlusM => "O+_m",
            OrbitType::MinusM => "O-_m",
            OrbitType::Imaginary => "O_im",
            OrbitType::PlusZero => "O+_0",
            OrbitType::MinusZero => "O-_0",
            OrbitType::Origin => "O0_0",
        }
    }
}

/// Classify `p` against mass `m`; `s^2 = p0^2 - |p|^2` must equal `m^2`, `-m^2` or `0` within
/// a relative tolerance of `1e-9`.
pub fn orbit_type(p: [f64; 4], m: f64) -> Result<OrbitType> {
    if p.iter().any(|v| !v.is_finite()) || !m.is_finite() {
        return Err(Error::NonFinite("orbit input".into()));
    }
    if p.iter().all(|v| *v == 0.0) {
        return Ok(OrbitType::Origin);
    }
    let s2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
    let scale = p.iter().map(|v| v * v).sum::<f64>().max(m * m).max(f64::MIN_POSITIVE);
    let tol = 1e-9 * scale;
    let m2 = m * m;
    if s2.abs() <= tol {
        return Ok(if p[0] > 0.0 { OrbitType::PlusZero } else { OrbitType::MinusZero });
    }
    if s2 > 0.0 && (s2 - m2).abs() <= tol {
        return Ok(if p[0] > 0.0 { OrbitType::PlusM } else { OrbitType::MinusM });
    }
    if s2 < 0.0 && (s2 + m2).abs() <= tol {
        return Ok(OrbitType::Imaginary);
    }
    Err(Error::OrbitMismatch(format!("s^2 = {s2} matches neither +-{m2} nor 0")))
}

/// `mu0 (l + 1/2)(ldot + 1/2)`
pub fn mgy_mass(rep: RepLabel, mu0: f64) -> f64 {
    mu0 * (rep.l.to_f64() + 0.5) * (rep.ldot.to_f64() + 0.5)
}

/// `degree / 2`
pub fn effective_ratio(rep: RepLabel) -> Rational64 {
    Rational64::new(rep.degree() as i64, 2)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchHit {
    pub rank: usize,
    pub rep: RepLabel,
    pub degree: u64,
    pub effective_ratio: Rational64,
    /// `mgy_mass(rep, 1)`
    pub mgy_ratio: f64,
    pub distance: f64,
}

/// The `count` labels `(spin + i/2, i/2)` nearest to `target` by effective ratio,
/// ties toward the smaller degree.
pub fn search_rep(target: f64, spin: HalfInt, count: usize) -> Result<Vec<SearchHit>> {
    if !target.is_finite() || target <= 0.0 {
        return Err(Error::NonFinite(format!("target ratio {target}")));
    }
    if spin.is_negative() {
        return Err(Error::NegativeWeight(spin.to_string()));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let at = |i: i64| RepLabel { l: spin + HalfInt::from_twice(i), ldot: HalfInt::from_twice(i) };
    let ratio = |i: i64| effective_ratio(at(i)).to_f64().unwrap();
    // ratios grow with i; the nearest `count` sit within `count` steps of the crossing point
    let mut cross = 0i64;
    while ratio(cross) < target {
        cross += 1;
    }
    let lo = (cross - count as i64).max(0);
    let hi = cross + count as i64;
    let mut hits: Vec<(f64, u64, RepLabel)> = (lo..=hi)
        .map(|i| {
            let r = at(i);
            ((ratio(i) - target).abs(), r.degree(), r)
        })
        .collect();
    hits.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(hits
        .into_iter()
        .take(count)
        .enumerate()
        .map(|(k, (d, deg, rep))| SearchHit {
            rank: k + 1,
            rep,
            degree: deg,
            effective_ratio: effective_ratio(rep),
            mgy_ratio: mgy_mass(rep, 1.0),
            distance: d,
        })
        .collect())
}

/// One CSV record, header `name,Q,Y,I2,U2,B,spin2,parity,mass_mev`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassRecord {
    pub name: String,
    #[serde(rename = "Q")]
    pub q: i32,
    #[serde(rename = "Y")]
    pub y: i32,
    #[serde(rename = "I2")]
    pub i2: i64,
    #[serde(rename = "U2")]
    pub u2: i64,
    #[serde(rename = "B")]
    pub b: i32,
    pub spin2: i64,
    pub parity: i8,
    pub mass_mev: f64,
}

impl MassRecord {
    pub fn to_observation(&self) -> Result<Observation> {
        if self.i2 < 0 || self.u2 < 0 || self.spin2 < 0 {
            return Err(Error::NegativeWeight(format!("row {}", self.name)));
        }
        if self.parity.abs() != 1 {
            return Err(Error::Csv(format!("parity must be +-1 in row {}", self.name)));
        }
        let qn = QuantumNumbers {
            b: self.b,
            s: HalfInt::from_twice(self.spin2),
            p2: self.parity,
            q: self.q,
            y: self.y,
            i: HalfInt::from_twice(self.i2),
            u: HalfInt::from_twice(self.u2),
        };
        Ok(Observation::new(&self.name, qn, self.mass_mev))
    }
}

pub fn read_masses_csv<R: Read>(reader: R) -> Result<Vec<MassRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    rdr.deserialize().map(|r| r.map_err(|e| Error::Csv(e.to_string()))).collect()
}

pub fn read_observations_csv<R: Read>(reader: R) -> Result<Vec<Observation>> {
    read_masses_csv(reader)?.iter().map(MassRecord::to_observation).collect()
}

/// Exact `|a - b|` for rationals.
pub fn abs_diff(a: Rational64, b: Rational64) -> Rational64 {
    (a - b).abs()
}
