//! SU(3) degrees, the Okubo operator basis, the su(2) embedding, spin fixations,
//! adjoint images and the charge/unitary-field operators.

use nalgebra::DMatrix;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type QMat = DMatrix<Rational64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct YoungPQ {
    pub p: u32,
    pub q: u32,
}

impl YoungPQ {
    pub const fn new(p: u32, q: u32) -> Self {
        YoungPQ { p, q }
    }
}

/// `N(p, q) = (p+1)(q+1)(p+q+2)/2`.
pub fn degree(pq: YoungPQ) -> u64 {
    let (p, q) = (pq.p as u64, pq.q as u64);
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

/// Row `p`, column `q`.
pub fn degrees_table(max: u32) -> Vec<Vec<u64>> {
    (0..=max).map(|p| (0..=max).map(|q| degree(YoungPQ::new(p, q))).collect()).collect()
}

pub fn admissible(pq: YoungPQ) -> bool {
    pq.p % 3 == pq.q % 3
}

/// Every admissible `(p, q)` whose degree does not exceed `max_degree`, sorted by degree then label.
pub fn admissible_upto(max_degree: u64) -> Vec<(u64, YoungPQ)> {
    let mut out = Vec::new();
    // degree(p, q) >= (p+1)(p+2)/2, so p and q are bounded by this loop
    let mut p = 0u32;
    while degree(YoungPQ::new(p, 0)) <= max_degree {
        let mut q = 0u32;
        while degree(YoungPQ::new(p, q)) <= max_degree {
            let pq = YoungPQ::new(p, q);
            if admissible(pq) {
                out.push((degree(pq), pq));
            }
            q += 1;
        }
        p += 1;
    }
    out.sort();
    out
}

/// Distinct admissible degrees up to `max_degree`, ascending.
pub fn admissible_degrees(max_degree: u64) -> Vec<u64> {
    let mut d: Vec<u64> = admissible_upto(max_degree).into_iter().map(|(n, _)| n).collect();
    d.dedup();
    d
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn unit(n: usize, row: usize, col: usize) -> QMat {
    let mut m = QMat::zeros(n, n);
    m[(row, col)] = Rational64::one();
    m
}

pub fn commutator_q(a: &QMat, b: &QMat) -> QMat {
    a * b - b * a
}

pub fn to_f64(m: &QMat) -> DMatrix<f64> {
    m.map(|r| *r.numer() as f64 / *r.denom() as f64)
}

fn kd(a: usize, b: usize) -> Rational64 {
    if a == b { Rational64::one() } else { Rational64::zero() }
}

/// The nine 3x3 operators `A^i_k`, stored zero-based as `a[i][k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct OkuboBasis3 {
    pub a: [[QMat; 3]; 3],
}

impl OkuboBasis3 {
    /// One-based access, `get(1, 1)` is `A^1_1`.
    pub fn get(&self, i: usize, k: usize) -> &QMat {
        &self.a[i - 1][k - 1]
    }

    pub fn trace_sum(&self) -> QMat {
        &self.a[0][0] + &self.a[1][1] + &self.a[2][2]
    }
}

/// `A^i_k = e_{ki} - delta^i_k / 3`, with `e_{ki}` the unit matrix at row `k`, column `i`.
pub fn okubo_basis3() -> OkuboBasis3 {
    let third = QMat::identity(3, 3) * q(1, 3);
    let a = std::array::from_fn(|i| {
        std::array::from_fn(|k| {
            let m = unit(3, k, i);
            if i == k { m - &third } else { m }
        })
    });
    OkuboBasis3 { a }
}

/// Index quadruples `(i, k, l, m)` (zero-based) where
/// `[A^i_k, A^l_m] = delta^i_m A^l_k - delta^l_k A^i_m` fails.
pub fn okubo_relation_failures(b: &OkuboBasis3) -> Vec<[usize; 4]> {
    let mut bad = Vec::new();
    for i in 0..3 {
        for k in 0..3 {
            for l in 0..3 {
                for m in 0..3 {
                    let lhs = commutator_q(&b.a[i][k], &b.a[l][m]);
                    let rhs = &b.a[l][k] * kd(i, m) - &b.a[i][m] * kd(l, k);
                    if lhs != rhs {
                        bad.push([i, k, l, m]);
                    }
                }
            }
        }
    }
    bad
}

/// `a^i_j = A^i_j - (1/2) delta^i_j (A^1_1 + A^2_2)` for `i, j` in `{1, 2}`, zero-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Su2Embedding {
    pub a: [[QMat; 2]; 2],
}

pub fn su2_embedding() -> Su2Embedding {
    let b = okubo_basis3();
    let partial = &b.a[0][0] + &b.a[1][1];
    let a = std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { &b.a[i][j] - &partial * q(1, 2) } else { b.a[i][j].clone() })
    });
    Su2Embedding { a }
}

/// Quadruples where `[a^i_j, a^k_l] = delta^i_l a^k_j - delta^k_j a^i_l` fails.
pub fn su2_relation_failures(e: &Su2Embedding) -> Vec<[usize; 4]> {
    let mut bad = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let lhs = commutator_q(&e.a[i][j], &e.a[k][l]);
                    let rhs = &e.a[k][j] * kd(i, l) - &e.a[i][l] * kd(k, j);
                    if lhs != rhs {
                        bad.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    bad
}

/// Upper-left 2x2 block.
pub fn block2(m: &QMat) -> [[Rational64; 2]; 2] {
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinFixations {
    pub i3: QMat,
    pub u3: QMat,
    pub v3: QMat,
}

/// `I_3 = A^1_1 + A^3_3/2`, `U_3 = A^3_3 + A^1_1/2`, `V_3 = A^1_1 + A^2_2/2`.
pub fn spin_fixations() -> SpinFixations {
    let b = okubo_basis3();
    let h = q(1, 2);
    SpinFixations {
        i3: b.get(1, 1) + b.get(3, 3) * h,
        u3: b.get(3, 3) + b.get(1, 1) * h,
        v3: b.get(1, 1) + b.get(2, 2) * h,
    }
}

/// Hypercharge convention `Y = -A^3_3`.
pub fn hypercharge() -> QMat {
    -okubo_basis3().get(3, 3).clone()
}

/// Off-diagonal positions of the adjoint basis, then `A^1_1`, `A^2_2`.
pub const ADJOINT_OFFDIAG: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

pub fn adjoint_basis() -> Vec<QMat> {
    let b = okubo_basis3();
    let mut out: Vec<QMat> = ADJOINT_OFFDIAG.iter().map(|&(r, c)| unit(3, r, c)).collect();
    out.push(b.a[0][0].clone());
    out.push(b.a[1][1].clone());
    out
}

/// Coordinates of a traceless 3x3 matrix in [`adjoint_basis`].
pub fn adjoint_coords(m: &QMat) -> Result<Vec<Rational64>> {
    let tr = m[(0, 0)] + m[(1, 1)] + m[(2, 2)];
    if !tr.is_zero() {
        return Err(Error::Unknown(format!("matrix is not traceless (trace {tr})")));
    }
    let mut c: Vec<Rational64> = ADJOINT_OFFDIAG.iter().map(|&(r, cc)| m[(r, cc)]).collect();
    c.push(m[(0, 0)] - m[(2, 2)]);
    c.push(m[(1, 1)] - m[(2, 2)]);
    Ok(c)
}

/// `ad(X)` on the 8-dimensional traceless subspace; column `j` holds `[X, b_j]`.
pub fn adjoint_image(x: &QMat) -> QMat {
    let basis = adjoint_basis();
    let mut out = QMat::zeros(8, 8);
    for (j, bj) in basis.iter().enumerate() {
        let c = adjoint_coords(&commutator_q(x, bj)).expect("commutators are traceless");
        for (i, v) in c.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

/// Diagonal entries when `m` is diagonal, which is then its exact spectrum.
pub fn exact_diagonal_spectrum(m: &QMat) -> Option<Vec<Rational64>> {
    let n = m.nrows();
    for i in 0..n {
        for j in 0..n {
            if i != j && !m[(i, j)].is_zero() {
                return None;
            }
        }
    }
    let mut d: Vec<Rational64> = (0..n).map(|i| m[(i, i)]).collect();
    d.sort_by(|a, b| b.cmp(a));
    Some(d)
}

/// `Q = alpha A^1_1 + beta A^3_3 + gamma 1` in dimension 3, or the adjoint images in dimension 8.
pub fn charge_operator_exact(alpha: Rational64, beta: Rational64, gamma: Rational64, dim: usize) -> Result<QMat> {
    let b = okubo_basis3();
    match dim {
        3 => Ok(b.get(1, 1) * alpha + b.get(3, 3) * beta + QMat::identity(3, 3) * gamma),
        8 => Ok(adjoint_image(b.get(1, 1)) * alpha + adjoint_image(b.get(3, 3)) * beta + QMat::identity(8, 8) * gamma),
        d => Err(Error::Dimension(d)),
    }
}

pub fn charge_operator(alpha: f64, beta: f64, gamma: f64, dim: usize) -> Result<DMatrix<f64>> {
    if ![alpha, beta, gamma].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("charge operator coefficient".into()));
    }
    let one = Rational64::one();
    let z = Rational64::zero();
    let a = to_f64(&charge_operator_exact(one, z, z, dim)?);
    let b = to_f64(&charge_operator_exact(z, one, z, dim)?);
    Ok(a * alpha + b * beta + DMatrix::identity(dim, dim) * gamma)
}

/// `Z = C diag(1/3, 1/3, -2/3) + C' diag(2/3, -1/3, -1/3)`.
pub fn unitary_field(c: f64, c_prime: f64) -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
        c / 3.0 + 2.0 * c_prime / 3.0,
        c / 3.0 - c_prime / 3.0,
        -2.0 * c / 3.0 - c_prime / 3.0,
    ]))
}

/// Sizes of the charge multiplets in the octet: triplet, doublet, conjugate doublet, singlet.
pub fn reduction_811() -> [usize; 4] {
    [3, 2, 2, 1]
}
