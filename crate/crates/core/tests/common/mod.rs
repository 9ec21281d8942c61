//! Independent oracles and hand-transcribed fixtures shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex;
use tauspin::clifford_cpt::GMatrix;

/// Least squares by the normal equations `A^T A x = A^T t`, solved with
/// Gaussian elimination and partial pivoting. Plain `Vec` arithmetic only.
pub fn normal_equations(a: &[Vec<f64>], t: &[f64]) -> Option<Vec<f64>> {
    let k = a[0].len();
    let mut m = vec![vec![0.0; k + 1]; k];
    for (row, &ti) in a.iter().zip(t) {
        for i in 0..k {
            for j in 0..k {
                m[i][j] += row[i] * row[j];
            }
            m[i][k] += row[i] * ti;
        }
    }
    for col in 0..k {
        let piv = (col..k).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..k {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..=k {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    Some((0..k).map(|i| m[i][k] / m[i][i]).collect())
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Gaussian-integer matrix as nested vectors of `(re, im)`.
pub type Plain = Vec<Vec<(i64, i64)>>;

pub fn plain(m: &GMatrix) -> Plain {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| (m[(i, j)].re, m[(i, j)].im)).collect()).collect()
}

pub fn plain_mul(a: &Plain, b: &Plain) -> Plain {
    let n = a.len();
    let mut out = vec![vec![(0i64, 0i64); n]; n];
    for i in 0..n {
        for k in 0..n {
            let (ar, ai) = a[i][k];
            if ar == 0 && ai == 0 {
                continue;
            }
            for j in 0..n {
                let (br, bi) = b[k][j];
                out[i][j].0 += ar * br - ai * bi;
                out[i][j].1 += ar * bi + ai * br;
            }
        }
    }
    out
}

pub fn plain_conj(a: &Plain) -> Plain {
    a.iter().map(|r| r.iter().map(|&(x, y)| (x, -y)).collect()).collect()
}

/// `Some(s)` if `a = s I`.
pub fn plain_identity_sign(a: &Plain) -> Option<i8> {
    let s = a[0][0];
    if s != (1, 0) && s != (-1, 0) {
        return None;
    }
    for (i, row) in a.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let want = if i == j { s } else { (0, 0) };
            if v != want {
                return None;
            }
        }
    }
    Some(s.0 as i8)
}

pub fn gm(a: &Plain) -> GMatrix {
    let n = a.len();
    GMatrix::from_fn(n, n, |i, j| Complex::new(a[i][j].0, a[i][j].1))
}

/// One printed cell: row symbol, column symbol, `(ec, ep, et)`, word.
#[derive(Clone, Debug)]
pub struct CptFixtureCell {
    pub row: String,
    pub col: String,
    pub exps: (i32, i32, i32),
    pub word: String,
}

pub fn cpt_fixture() -> Vec<CptFixtureCell> {
    include_str!("../fixtures/cpt_table.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            CptFixtureCell {
                row: f[0].into(),
                col: f[1].into(),
                exps: (f[2].parse().unwrap(), f[3].parse().unwrap(), f[4].parse().unwrap()),
                word: f[5].into(),
            }
        })
        .collect()
}

pub fn su3_degree_fixture() -> Vec<Vec<u64>> {
    include_str!("../fixtures/su3_degrees.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect()
}

/// Printed SU(3) Okubo matrices `A^i_k` as `(i, k, rows)` with entries `(num, den)`.
pub fn printed_okubo() -> Vec<(usize, usize, [[(i64, i64); 3]; 3])> {
    let z = (0, 1);
    let o = (1, 1);
    let t2 = (2, 3);
    let t1 = (-1, 3);
    vec![
        (1, 1, [[t2, z, z], [z, t1, z], [z, z, t1]]),
        (2, 1, [[z, o, z], [z, z, z], [z, z, z]]),
        (3, 1, [[z, z, o], [z, z, z], [z, z, z]]),
        (1, 2, [[z, z, z], [o, z, z], [z, z, z]]),
        (2, 2, [[t1, z, z], [z, t2, z], [z, z, t1]]),
        (3, 2, [[z, z, z], [z, z, o], [z, z, z]]),
        (1, 3, [[z, z, z], [z, z, z], [o, z, z]]),
        (2, 3, [[z, z, z], [z, z, z], [z, o, z]]),
        (3, 3, [[t1, z, z], [z, t1, z], [z, z, t2]]),
    ]
}

/// Printed 2x2 su(2) Okubo matrices `a^i_j` as `(i, j, rows)`; `a^2_1` is printed as zero.
pub fn printed_okubo2() -> Vec<(usize, usize, [[(i64, i64); 2]; 2])> {
    let z = (0, 1);
    vec![
        (1, 1, [[(1, 2), z], [z, (-1, 2)]]),
        (2, 1, [[z, z], [z, z]]),
        (1, 2, [[z, z], [(1, 1), z]]),
        (2, 2, [[(-1, 2), z], [z, (1, 2)]]),
    ]
}
