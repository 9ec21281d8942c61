//! Lorentz-group representation labels and the weight-basis operator matrices.
//!
//! Basis order: `m` runs from `l` down to `-l`. The product basis is `(m, mdot)`
//! with `m` major, so the X operators form the left Kronecker factor.

use nalgebra::DMatrix;
use nalgebra_sparse::{CooMatrix, CsrMatrix};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepLabel {
    pub l: HalfInt,
    pub ldot: HalfInt,
}

impl RepLabel {
    pub fn new(l: HalfInt, ldot: HalfInt) -> Result<Self> {
        if l.is_negative() || ldot.is_negative() {
            return Err(Error::NegativeWeight(format!("({l}, {ldot})")));
        }
        Ok(RepLabel { l, ldot })
    }

    /// Build from `k = 2l` and `r = 2ldot`.
    pub const fn from_twice(k: u32, r: u32) -> Self {
        RepLabel { l: HalfInt::from_twice(k as i64), ldot: HalfInt::from_twice(r as i64) }
    }

    pub fn k(&self) -> u32 {
        self.l.twice() as u32
    }

    pub fn r(&self) -> u32 {
        self.ldot.twice() as u32
    }

    pub fn degree(&self) -> u64 {
        (self.k() as u64 + 1) * (self.r() as u64 + 1)
    }

    pub fn spin(&self) -> HalfInt {
        (self.l - self.ldot).abs()
    }

    /// `-s, -s+1, ..., s` with `s = |l - ldot|`.
    pub fn spin_values(&self) -> Vec<HalfInt> {
        let s = self.spin();
        let mut v: Vec<_> = s.weights_desc().collect();
        v.reverse();
        v
    }

    /// `(k+r)/2, (k+r)/2 - 1, ..., |k-r|/2`.
    pub fn clebsch_gordan_spins(&self) -> Vec<HalfInt> {
        let top = self.l + self.ldot;
        let bottom = self.spin();
        let n = ((top - bottom).twice() / 2) as usize;
        (0..=n).map(|j| top - HalfInt::int(j as i64)).collect()
    }

    pub fn swapped(&self) -> RepLabel {
        RepLabel { l: self.ldot, ldot: self.l }
    }

    pub fn to_gelfand_naimark(&self) -> GelfandNaimarkPair {
        GelfandNaimarkPair { l0: self.l - self.ldot, l1: self.l + self.ldot + HalfInt::ONE }
    }

    pub fn from_gelfand_naimark(pair: GelfandNaimarkPair) -> Result<RepLabel> {
        let bad = || Error::NegativeWeight(format!("GN pair ({}, {})", pair.l0, pair.l1));
        // l = (l0 + l1 - 1)/2, ldot = (l1 - l0 - 1)/2, everything in doubled units
        let tl = pair.l0.twice() + pair.l1.twice() - 2;
        let tld = pair.l1.twice() - pair.l0.twice() - 2;
        if tl % 2 != 0 || tld % 2 != 0 {
            return Err(Error::NotHalfInteger(format!("GN pair ({}, {})", pair.l0, pair.l1)));
        }
        let (l, ldot) = (HalfInt::from_twice(tl / 2), HalfInt::from_twice(tld / 2));
        RepLabel::new(l, ldot).map_err(|_| bad())
    }
}

impl std::fmt::Display for RepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.l, self.ldot)
    }
}

/// Gel'fand-Naimark pair; related to `(l, ldot)` by `l0 = l - ldot`, `l1 = l + ldot + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GelfandNaimarkPair {
    pub l0: HalfInt,
    pub l1: HalfInt,
}

/// Squared matrix element of the lowering operator at weight `m`: `(l+m)(l-m+1)`.
pub fn lowering_sq(l: HalfInt, m: HalfInt) -> i64 {
    let (tl, tm) = (l.twice(), m.twice());
    (tl + tm) * (tl - tm + 2) / 4
}

/// Squared matrix element of the raising operator at weight `m`: `(l-m)(l+m+1)`.
pub fn raising_sq(l: HalfInt, m: HalfInt) -> i64 {
    let (tl, tm) = (l.twice(), m.twice());
    (tl - tm) * (tl + tm + 2) / 4
}

/// Ladder and weight matrices on one factor, dimension `2l+1`.
#[derive(Clone, Debug)]
pub struct SingleFactor {
    pub l: HalfInt,
    pub xp: DMatrix<f64>,
    pub xm: DMatrix<f64>,
    pub x3: DMatrix<f64>,
}

pub fn ladder_matrices(l: HalfInt) -> SingleFactor {
    ladder_matrices_scaled(l, 1.0)
}

/// Ladder matrices multiplied by a normalization constant `c`.
pub fn ladder_matrices_scaled(l: HalfInt, c: f64) -> SingleFactor {
    let n = (l.twice() + 1) as usize;
    let weights: Vec<_> = l.weights_desc().collect();
    let mut xp = DMatrix::zeros(n, n);
    let mut xm = DMatrix::zeros(n, n);
    let mut x3 = DMatrix::zeros(n, n);
    for (i, &m) in weights.iter().enumerate() {
        x3[(i, i)] = c * m.to_f64();
        if i + 1 < n {
            // |m> at index i, |m-1> at index i+1
            xm[(i + 1, i)] = c * (lowering_sq(l, m) as f64).sqrt();
        }
        if i > 0 {
            xp[(i - 1, i)] = c * (raising_sq(l, m) as f64).sqrt();
        }
    }
    SingleFactor { l, xp, xm, x3 }
}

pub(crate) fn single_sparse(l: HalfInt) -> [CsrMatrix<f64>; 3] {
    let n = (l.twice() + 1) as usize;
    let weights: Vec<_> = l.weights_desc().collect();
    let mut xp = CooMatrix::new(n, n);
    let mut xm = CooMatrix::new(n, n);
    let mut x3 = CooMatrix::new(n, n);
    for (i, &m) in weights.iter().enumerate() {
        if m.twice() != 0 {
            x3.push(i, i, m.to_f64());
        }
        if i + 1 < n {
            xm.push(i + 1, i, (lowering_sq(l, m) as f64).sqrt());
        }
        if i > 0 {
            xp.push(i - 1, i, (raising_sq(l, m) as f64).sqrt());
        }
    }
    [CsrMatrix::from(&xp), CsrMatrix::from(&xm), CsrMatrix::from(&x3)]
}

pub(crate) fn sparse_identity(n: usize) -> CsrMatrix<f64> {
    CsrMatrix::identity(n)
}

pub(crate) fn kron<T>(a: &CsrMatrix<T>, b: &CsrMatrix<T>) -> CsrMatrix<T>
where
    T: nalgebra::Scalar + Copy + std::ops::Mul<Output = T> + num_traits::Zero + std::ops::AddAssign,
{
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut coo = CooMatrix::new(ar * br, ac * bc);
    for (i, j, &va) in a.triplet_iter() {
        for (k, l, &vb) in b.triplet_iter() {
            coo.push(i * br + k, j * bc + l, va * vb);
        }
    }
    CsrMatrix::from(&coo)
}

/// The six weight-basis operators on the product space, stored sparse.
#[derive(Clone, Debug)]
pub struct OperatorSet {
    pub rep: RepLabel,
    pub xp: CsrMatrix<f64>,
    pub xm: CsrMatrix<f64>,
    pub x3: CsrMatrix<f64>,
    pub yp: CsrMatrix<f64>,
    pub ym: CsrMatrix<f64>,
    pub y3: CsrMatrix<f64>,
}

impl OperatorSet {
    pub fn dim(&self) -> usize {
        self.x3.nrows()
    }

    pub fn x(&self) -> [&CsrMatrix<f64>; 3] {
        [&self.xp, &self.xm, &self.x3]
    }

    pub fn y(&self) -> [&CsrMatrix<f64>; 3] {
        [&self.yp, &self.ym, &self.y3]
    }
}

pub fn product_operators(rep: RepLabel) -> OperatorSet {
    let [sxp, sxm, sx3] = single_sparse(rep.l);
    let [syp, sym, sy3] = single_sparse(rep.ldot);
    let id_l = sparse_identity(rep.k() as usize + 1);
    let id_r = sparse_identity(rep.r() as usize + 1);
    OperatorSet {
        rep,
        xp: kron(&sxp, &id_r),
        xm: kron(&sxm, &id_r),
        x3: kron(&sx3, &id_r),
        yp: kron(&id_l, &syp),
        ym: kron(&id_l, &sym),
        y3: kron(&id_l, &sy3),
    }
}

/// Generators of sl(2,C): `A_j = -i(X_j + Y_j)`, `B_j = Y_j - X_j`, with
/// `X_1 = (X+ + X-)/2`, `X_2 = (X+ - X-)/(2i)`.
#[derive(Clone, Debug)]
pub struct Sl2cGenerators {
    pub a: [CsrMatrix<Complex64>; 3],
    pub b: [CsrMatrix<Complex64>; 3],
}

fn to_complex(m: &CsrMatrix<f64>, scale: Complex64) -> CsrMatrix<Complex64> {
    let mut coo = CooMatrix::new(m.nrows(), m.ncols());
    for (i, j, &v) in m.triplet_iter() {
        coo.push(i, j, scale * v);
    }
    CsrMatrix::from(&coo)
}

pub(crate) fn cartesian(p: &CsrMatrix<f64>, m: &CsrMatrix<f64>, z: &CsrMatrix<f64>) -> [CsrMatrix<Complex64>; 3] {
    let half = Complex64::new(0.5, 0.0);
    let mhalf_i = Complex64::new(0.0, -0.5);
    let j1 = &to_complex(p, half) + &to_complex(m, half);
    let j2 = &to_complex(p, mhalf_i) - &to_complex(m, mhalf_i);
    [j1, j2, to_complex(z, Complex64::new(1.0, 0.0))]
}

pub fn sl2c_generators(rep: RepLabel) -> Sl2cGenerators {
    let ops = product_operators(rep);
    let x = cartesian(&ops.xp, &ops.xm, &ops.x3);
    let y = cartesian(&ops.yp, &ops.ym, &ops.y3);
    let mi = Complex64::new(0.0, -1.0);
    let a = std::array::from_fn(|j| {
        scaled(&(&x[j] + &y[j]), mi)
    });
    let b = std::array::from_fn(|j| &y[j] - &x[j]);
    Sl2cGenerators { a, b }
}

/// Multiply every stored entry by `s`.
pub fn scaled<T: nalgebra::Scalar + Copy + std::ops::Mul<Output = T>>(m: &CsrMatrix<T>, s: T) -> CsrMatrix<T> {
    let mut out = m.clone();
    for v in out.values_mut() {
        *v = *v * s;
    }
    out
}

pub fn commutator<T>(a: &CsrMatrix<T>, b: &CsrMatrix<T>) -> CsrMatrix<T>
where
    T: nalgebra::Scalar + nalgebra::ClosedAddAssign + nalgebra::ClosedSubAssign + nalgebra::ClosedMulAssign
        + num_traits::Zero + num_traits::One + Copy + std::ops::Neg<Output = T>,
{
    &(a * b) - &(b * a)
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff_f64(a: &CsrMatrix<f64>, b: &CsrMatrix<f64>) -> f64 {
    (a - b).values().iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

pub fn max_abs_diff_c64(a: &CsrMatrix<Complex64>, b: &CsrMatrix<Complex64>) -> f64 {
    (a - b).values().iter().fold(0.0, |acc, v| acc.max(v.norm()))
}

pub fn max_abs_f64(a: &CsrMatrix<f64>) -> f64 {
    a.values().iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

pub fn max_abs_c64(a: &CsrMatrix<Complex64>) -> f64 {
    a.values().iter().fold(0.0, |acc, v| acc.max(v.norm()))
}

/// Largest relative residual over the ladder relations
/// `[X3,X+] = X+`, `[X3,X-] = -X-`, `[X+,X-] = 2X3` and the same for Y,
/// plus the largest absolute entry of every `[X_i, Y_j]`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LadderCheck {
    pub ladder_rel: f64,
    pub cross_abs: f64,
}

pub fn check_ladder_relations(ops: &OperatorSet) -> LadderCheck {
    let rel = |lhs: CsrMatrix<f64>, rhs: CsrMatrix<f64>| {
        max_abs_diff_f64(&lhs, &rhs) / max_abs_f64(&rhs).max(1.0)
    };
    let mut worst: f64 = 0.0;
    for [p, m, z] in [ops.x(), ops.y()] {
        worst = worst.max(rel(commutator(z, p), p.clone()));
        worst = worst.max(rel(commutator(z, m), scaled(m, -1.0)));
        worst = worst.max(rel(commutator(p, m), scaled(z, 2.0)));
    }
    let mut cross: f64 = 0.0;
    for xi in ops.x() {
        for yj in ops.y() {
            cross = cross.max(max_abs_f64(&commutator(xi, yj)));
        }
    }
    LadderCheck { ladder_rel: worst, cross_abs: cross }
}

/// Largest relative residual over the fifteen sl(2,C) relations
/// `[A_i,A_j] = e_ijk A_k`, `[B_i,B_j] = -e_ijk A_k`, `[A_i,B_j] = e_ijk B_k`.
pub fn check_sl2c_relations(g: &Sl2cGenerators) -> f64 {
    let n = g.a[0].nrows();
    let zero = CsrMatrix::<Complex64>::zeros(n, n);
    let eps = |i: usize, j: usize| -> Option<(usize, f64)> {
        match (i, j) {
            (0, 1) => Some((2, 1.0)),
            (1, 2) => Some((0, 1.0)),
            (2, 0) => Some((1, 1.0)),
            (1, 0) => Some((2, -1.0)),
            (2, 1) => Some((0, -1.0)),
            (0, 2) => Some((1, -1.0)),
            _ => None,
        }
    };
    let rhs = |set: &[CsrMatrix<Complex64>; 3], i, j, sign: f64| match eps(i, j) {
        Some((k, s)) => scaled(&set[k], Complex64::new(s * sign, 0.0)),
        None => zero.clone(),
    };
    let mut worst: f64 = 0.0;
    let mut check = |lhs: CsrMatrix<Complex64>, rhs: CsrMatrix<Complex64>| {
        let r = max_abs_diff_c64(&lhs, &rhs) / max_abs_c64(&rhs).max(1.0);
        worst = worst.max(r);
    };
    for i in 0..3 {
        for j in 0..3 {
            if i < j {
                check(commutator(&g.a[i], &g.a[j]), rhs(&g.a, i, j, 1.0));
                check(commutator(&g.b[i], &g.b[j]), rhs(&g.a, i, j, -1.0));
            }
            check(commutator(&g.a[i], &g.b[j]), rhs(&g.b, i, j, 1.0));
        }
    }
    worst
}
