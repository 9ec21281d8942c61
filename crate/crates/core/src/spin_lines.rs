//! Spin lines (chains of interlocking representations), spin multiplets and
//! the algebra/spinspace sizes attached to a label.

use serde::Serialize;

use crate::halfint::HalfInt;
use crate::rep_core::RepLabel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinLine {
    pub spin: HalfInt,
    pub dual: bool,
    pub entries: Vec<RepLabel>,
}

/// Entry `i` is `(spin + i/2, i/2)`, swapped when `dual`.
pub fn line(spin: HalfInt, n: usize, dual: bool) -> SpinLine {
    let entries = (0..n as i64)
        .map(|i| {
            let r = RepLabel { l: spin + HalfInt::from_twice(i), ldot: HalfInt::from_twice(i) };
            if dual { r.swapped() } else { r }
        })
        .collect();
    SpinLine { spin, dual, entries }
}

pub fn degree_sequence(line: &SpinLine) -> Vec<u64> {
    line.entries.iter().map(RepLabel::degree).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TensorStructure {
    pub k: u32,
    pub r: u32,
    /// Dimension label of the complex Clifford algebra, `2(k+r)`.
    pub complex_dim: u32,
    /// The spinspace has dimension `2^spinspace_dim_log2`.
    pub spinspace_dim_log2: u32,
}

pub fn tensor_structure(rep: RepLabel) -> TensorStructure {
    let (k, r) = (rep.k(), rep.r());
    TensorStructure { k, r, complex_dim: 2 * (k + r), spinspace_dim_log2: k + r }
}

/// All `(l +- 1/2, ldot +- 1/2)` with non-negative components, sorted by `(l, ldot)`.
pub fn interlocking_neighbors(rep: RepLabel) -> Vec<RepLabel> {
    let mut out = Vec::with_capacity(4);
    for dl in [-1, 1] {
        for dr in [-1, 1] {
            let l = rep.l + HalfInt::from_twice(dl);
            let ldot = rep.ldot + HalfInt::from_twice(dr);
            if let Ok(r) = RepLabel::new(l, ldot) {
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// The `2s+1` labels from `(s + shift/2, shift/2)` to `(shift/2, s + shift/2)`.
pub fn spin_multiplet(s: HalfInt, shift: u32) -> Vec<RepLabel> {
    let sh = HalfInt::from_twice(shift as i64);
    (0..=s.twice())
        .map(|j| RepLabel { l: s - HalfInt::from_twice(j) + sh, ldot: HalfInt::from_twice(j) + sh })
        .collect()
}
