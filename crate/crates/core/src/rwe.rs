//! Eigenvalue side of relativistic wave equations: `Gamma(p)`, plus/minus pairing
//! of spectra, determinant checks, the bivector metric, the Dirac `L` matrices
//! and the two forms of the `Lambda_3` coefficient matrix.

use nalgebra::{DMatrix, Schur, SymmetricEigen};
use nalgebra_sparse::CsrMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::rep_core::{cartesian, kron, single_sparse, RepLabel};

/// Default degree cap for materialized system matrices.
pub const DEFAULT_DEGREE_CAP: u64 = 5200;

/// Zero block size printed for the proton `Lambda_3`; the implementation uses `2l+1 = 60`.
pub const PRINTED_PROTON_ZERO_BLOCK: usize = 59;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Metric4(pub [[i64; 4]; 4]);

impl Metric4 {
    /// `diag(-1, -1, -1, 1)`, indices 0..3 in matrix order.
    pub fn minkowski() -> Self {
        Metric4::diag([-1, -1, -1, 1])
    }

    pub fn euclidean() -> Self {
        Metric4::diag([1, 1, 1, 1])
    }

    pub fn diag(d: [i64; 4]) -> Self {
        let mut g = [[0; 4]; 4];
        for i in 0..4 {
            g[i][i] = d[i];
        }
        Metric4(g)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn neg(&self) -> Self {
        Metric4(self.0.map(|row| row.map(|v| -v)))
    }
}

impl Default for Metric4 {
    fn default() -> Self {
        Metric4::minkowski()
    }
}

/// Collective index order `23, 10, 20, 30, 31, 12`.
pub const BIVECTOR_ORDER: [(usize, usize); 6] = [(2, 3), (1, 0), (2, 0), (3, 0), (3, 1), (1, 2)];

/// `G[ab][cd] = g_ac g_bd - g_ad g_bc` over [`BIVECTOR_ORDER`].
pub fn bivector_metric(g: &Metric4) -> Result<[[i64; 6]; 6]> {
    if !g.is_symmetric() {
        return Err(Error::NonFinite("metric is not symmetric".into()));
    }
    let m = &g.0;
    let mut out = [[0i64; 6]; 6];
    for (x, &(a, b)) in BIVECTOR_ORDER.iter().enumerate() {
        for (y, &(c, d)) in BIVECTOR_ORDER.iter().enumerate() {
            out[x][y] = m[a][c] * m[b][d] - m[a][d] * m[b][c];
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct GammaSet {
    pub g: [DMatrix<Complex64>; 4],
}

fn cm(rows: usize, data: &[(f64, f64)]) -> DMatrix<Complex64> {
    let v: Vec<Complex64> = data.iter().map(|&(r, i)| Complex64::new(r, i)).collect();
    DMatrix::from_row_slice(rows, rows, &v)
}

impl GammaSet {
    /// Standard Dirac representation: `gamma_0 = diag(1,1,-1,-1)`,
    /// `gamma_k = [[0, sigma_k], [-sigma_k, 0]]`.
    pub fn dirac() -> Self {
        let o = (0.0, 0.0);
        let p = (1.0, 0.0);
        let n = (-1.0, 0.0);
        let pi = (0.0, 1.0);
        let ni = (0.0, -1.0);
        GammaSet {
            g: [
                cm(4, &[p, o, o, o, o, p, o, o, o, o, n, o, o, o, o, n]),
                cm(4, &[o, o, o, p, o, o, p, o, o, n, o, o, n, o, o, o]),
                cm(4, &[o, o, o, ni, o, o, pi, o, o, pi, o, o, ni, o, o, o]),
                cm(4, &[o, o, p, o, o, o, o, n, n, o, o, o, o, p, o, o]),
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.g[0].nrows()
    }
}

/// `Gamma_0 p_0 - Gamma_1 p_1 - Gamma_2 p_2 - Gamma_3 p_3`
pub fn gamma_of_p(g: &GammaSet, p: [f64; 4]) -> DMatrix<Complex64> {
    let mut out = &g.g[0] * Complex64::from(p[0]);
    for k in 1..4 {
        out -= &g.g[k] * Complex64::from(p[k]);
    }
    out
}

pub fn s_squared(p: [f64; 4]) -> f64 {
    p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]
}

fn is_diagonal(m: &DMatrix<f64>) -> bool {
    m.iter().enumerate().all(|(idx, v)| {
        let (i, j) = (idx % m.nrows(), idx / m.nrows());
        i == j || *v == 0.0
    })
}

/// Eigenvalues of a real square matrix; diagonal and symmetric inputs take exact/symmetric paths.
pub fn real_matrix_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    if !m.is_square() {
        return Err(Error::Dimension(m.ncols()));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("matrix entry".into()));
    }
    if is_diagonal(m) {
        return Ok(m.diagonal().iter().map(|&v| Complex64::from(v)).collect());
    }
    if m == &m.transpose() {
        let e = SymmetricEigen::new(m.clone());
        return Ok(e.eigenvalues.iter().map(|&v| Complex64::from(v)).collect());
    }
    Ok(m.complex_eigenvalues().iter().copied().collect())
}

/// Eigenvalues of a complex square matrix from its Schur form.
pub fn complex_matrix_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    if m.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::NonFinite("matrix entry".into()));
    }
    let (_, t) = Schur::new(m.clone()).unpack();
    Ok(t.diagonal().iter().copied().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub paired: bool,
    pub eigenvalues: Vec<Complex64>,
    /// Nonzero eigenvalues left without a `-lambda` partner.
    pub unmatched: Vec<Complex64>,
}

/// True iff the nonzero eigenvalues are symmetric under negation within `tol`.
pub fn pm_pairing_check(g0: &DMatrix<f64>, tol: f64) -> Result<PairingReport> {
    let eig = real_matrix_eigenvalues(g0)?;
    Ok(pairing_of(eig, tol))
}

pub(crate) fn pairing_of(eig: Vec<Complex64>, tol: f64) -> PairingReport {
    let scale = eig.iter().fold(1.0f64, |a, v| a.max(v.norm()));
    let mut pool: Vec<Complex64> = eig.iter().copied().filter(|v| v.norm() > tol * scale).collect();
    let mut unmatched = Vec::new();
    while let Some(v) = pool.pop() {
        match pool.iter().position(|w| (w + v).norm() <= tol * scale) {
            Some(i) => {
                pool.swap_remove(i);
            }
            None => unmatched.push(v),
        }
    }
    PairingReport { paired: unmatched.is_empty(), eigenvalues: eig, unmatched }
}

#[derive(Clone, Debug, Serialize)]
pub struct MassSpectrum {
    /// `mu0 * lambda` for real positive eigenvalues, descending.
    pub masses: Vec<f64>,
    pub complex: Vec<Complex64>,
}

pub fn mass_spectrum_from_gamma0(g0: &DMatrix<f64>, mu0: f64) -> Result<MassSpectrum> {
    const TOL: f64 = 1e-9;
    let eig = real_matrix_eigenvalues(g0)?;
    let scale = eig.iter().fold(1.0f64, |a, v| a.max(v.norm()));
    let mut masses = Vec::new();
    let mut complex = Vec::new();
    for v in eig {
        if v.im.abs() > TOL * scale {
            complex.push(v);
        } else if v.re > TOL * scale {
            masses.push(mu0 * v.re);
        }
    }
    masses.sort_by(|a, b| b.total_cmp(a));
    // merge numerically equal values from degenerate eigenvalues
    masses.dedup_by(|a, b| (*a - *b).abs() <= TOL * scale * mu0.abs().max(1.0));
    Ok(MassSpectrum { masses, complex })
}

#[derive(Clone, Debug, Serialize)]
pub struct DetSample {
    pub p: [f64; 4],
    pub s2: f64,
    pub det: Complex64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetGroup {
    pub s2: f64,
    pub dets: Vec<Complex64>,
    pub constant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetReport {
    pub samples: Vec<DetSample>,
    pub groups: Vec<DetGroup>,
    /// Values of `s^2` where the determinant vanishes, `m^2 / lambda^2` per eigenvalue of `Gamma_0`.
    pub roots_s2: Vec<f64>,
    /// `|det|` evaluated at each root on the time axis.
    pub root_residuals: Vec<f64>,
    pub all_constant: bool,
}

/// Evaluate `det(Gamma(p) + m E)` on samples, group by `s^2(p)`, check constancy.
pub fn det_factorization_check(g: &GammaSet, m: f64, samples: &[[f64; 4]], tol: f64) -> Result<DetReport> {
    if samples.is_empty() {
        return Err(Error::Empty("samples".into()));
    }
    let id = DMatrix::<Complex64>::identity(g.dim(), g.dim()) * Complex64::from(m);
    let det_at = |p: [f64; 4]| (gamma_of_p(g, p) + &id).determinant();
    let mut rows: Vec<DetSample> =
        samples.iter().map(|&p| DetSample { p, s2: s_squared(p), det: det_at(p) }).collect();
    for r in &rows {
        if !r.s2.is_finite() || !r.det.re.is_finite() {
            return Err(Error::NonFinite(format!("sample {:?}", r.p)));
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| rows[a].s2.total_cmp(&rows[b].s2));
    let mut groups: Vec<DetGroup> = Vec::new();
    for i in order {
        let r = &rows[i];
        match groups.last_mut() {
            Some(gr) if (gr.s2 - r.s2).abs() <= tol * gr.s2.abs().max(1.0) => gr.dets.push(r.det),
            _ => groups.push(DetGroup { s2: r.s2, dets: vec![r.det], constant: true }),
        }
    }
    for gr in &mut groups {
        let d0 = gr.dets[0];
        gr.constant = gr.dets.iter().all(|d| (d - d0).norm() <= tol * d0.norm().max(1.0));
    }

    let g0 = gamma_of_p(g, [1.0, 0.0, 0.0, 0.0]);
    let mut roots: Vec<f64> = complex_matrix_eigenvalues(&g0)?
        .into_iter()
        .filter(|l| l.im.abs() < 1e-9 && l.re.abs() > 1e-9)
        .map(|l| m * m / (l.re * l.re))
        .collect();
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-7 * b.abs().max(1.0));
    let root_residuals = roots.iter().map(|&x| det_at([x.sqrt(), 0.0, 0.0, 0.0]).norm()).collect();
    let all_constant = groups.iter().all(|g| g.constant);
    rows.shrink_to_fit();
    Ok(DetReport { samples: rows, groups, roots_s2: roots, root_residuals, all_constant })
}

pub type Mat2 = [[Complex64; 2]; 2];

#[derive(Clone, Debug, Serialize)]
pub struct DiracL {
    pub l: [Mat2; 3],
    /// Dotted (starred) triple; printed with the same entries.
    pub l_dot: [Mat2; 3],
}

/// `L_j = (c/2) sigma_j`.
pub fn dirac_l_matrices(c: f64) -> DiracL {
    let h = c / 2.0;
    let z = Complex64::new(0.0, 0.0);
    let r = Complex64::new(h, 0.0);
    let i = Complex64::new(0.0, h);
    let l = [[[z, r], [r, z]], [[z, -i], [i, z]], [[r, z], [z, -r]]];
    DiracL { l, l_dot: l }
}

pub fn pauli() -> [Mat2; 3] {
    dirac_l_matrices(2.0).l
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lambda3Block {
    pub mdot: HalfInt,
    pub diag: Vec<Rational64>,
}

/// Product-form `Lambda_3`: block-diagonal, blocks ordered by `mdot` descending,
/// block `mdot` equal to `mdot * diag(l, l-1, ..., -l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lambda3 {
    pub l: HalfInt,
    pub ldot: HalfInt,
    pub blocks: Vec<Lambda3Block>,
}

impl Lambda3 {
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.diag.len()).sum()
    }

    pub fn trace(&self) -> Rational64 {
        self.blocks.iter().flat_map(|b| b.diag.iter()).sum()
    }

    pub fn eigenvalues(&self) -> Vec<Rational64> {
        self.blocks.iter().flat_map(|b| b.diag.iter().copied()).collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let ev: Vec<f64> = self.eigenvalues().iter().map(|r| *r.numer() as f64 / *r.denom() as f64).collect();
        DMatrix::from_diagonal(&nalgebra::DVector::from_vec(ev))
    }

    /// Pairing check read off the exact diagonal.
    pub fn pairing(&self) -> PairingReport {
        let ev = self.eigenvalues().iter().map(|r| Complex64::from(*r.numer() as f64 / *r.denom() as f64)).collect();
        pairing_of(ev, 1e-12)
    }
}

pub fn lambda3_generalized(l: HalfInt, ldot: HalfInt) -> Lambda3 {
    let blocks = ldot
        .weights_desc()
        .map(|md| Lambda3Block {
            mdot: md,
            diag: l.weights_desc().map(|m| Rational64::new(m.twice() * md.twice(), 4)).collect(),
        })
        .collect();
    Lambda3 { l, ldot, blocks }
}

/// Difference-form matrices `L^l_j (x) 1 - 1 (x) L^ldot_j`, `j = 1, 2, 3`.
pub fn bivector_system_matrices(rep: RepLabel, cap: u64) -> Result<[CsrMatrix<Complex64>; 3]> {
    if rep.degree() > cap {
        return Err(Error::CapExceeded { n: rep.degree(), cap });
    }
    let [lp, lm, l3] = single_sparse(rep.l);
    let [rp, rm, r3] = single_sparse(rep.ldot);
    let jl = cartesian(&lp, &lm, &l3);
    let jr = cartesian(&rp, &rm, &r3);
    let il = CsrMatrix::<Complex64>::identity(rep.k() as usize + 1);
    let ir = CsrMatrix::<Complex64>::identity(rep.r() as usize + 1);
    Ok(std::array::from_fn(|j| &kron(&jl[j], &ir) - &kron(&il, &jr[j])))
}

/// Sum-form counterpart `L^l_j (x) 1 + 1 (x) L^ldot_j`.
pub fn bivector_sum_matrices(rep: RepLabel, cap: u64) -> Result<[CsrMatrix<Complex64>; 3]> {
    if rep.degree() > cap {
        return Err(Error::CapExceeded { n: rep.degree(), cap });
    }
    let [lp, lm, l3] = single_sparse(rep.l);
    let [rp, rm, r3] = single_sparse(rep.ldot);
    let jl = cartesian(&lp, &lm, &l3);
    let jr = cartesian(&rp, &rm, &r3);
    let il = CsrMatrix::<Complex64>::identity(rep.k() as usize + 1);
    let ir = CsrMatrix::<Complex64>::identity(rep.r() as usize + 1);
    Ok(std::array::from_fn(|j| &kron(&jl[j], &ir) + &kron(&il, &jr[j])))
}
