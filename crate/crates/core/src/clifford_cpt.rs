//! Real Clifford algebras `Cl(p,q)`: mod-8 classification, spinor bases over the
//! Gaussian integers, the pseudoautomorphism matrix, the automorphism
//! representatives `W, E, C, K, S, F`, and the symbolic CPT multiplication table.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::{Complex, Complex64};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact matrix over the Gaussian integers.
pub type GMatrix = DMatrix<Complex<i64>>;

pub const DEFAULT_CAP: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CliffordSignature {
    pub p: u32,
    pub q: u32,
}

impl CliffordSignature {
    pub const fn new(p: u32, q: u32) -> Self {
        CliffordSignature { p, q }
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    pub fn d(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn d_mod8(&self) -> u8 {
        self.d().rem_euclid(8) as u8
    }
}

impl fmt::Display for CliffordSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DivisionRingKind {
    R,
    RR,
    C,
    H,
    HH,
}

impl fmt::Display for DivisionRingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivisionRingKind::R => "R",
            DivisionRingKind::RR => "R+R",
            DivisionRingKind::C => "C",
            DivisionRingKind::H => "H",
            DivisionRingKind::HH => "H+H",
        };
        f.write_str(s)
    }
}

pub fn classify(sig: CliffordSignature) -> DivisionRingKind {
    match sig.d_mod8() {
        0 | 2 => DivisionRingKind::R,
        1 => DivisionRingKind::RR,
        3 | 7 => DivisionRingKind::C,
        4 | 6 => DivisionRingKind::H,
        _ => DivisionRingKind::HH,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChargeClass {
    Charged,
    Neutral,
    TrulyNeutral,
}

impl ChargeClass {
    /// `0` for neutral, `0̄` for truly neutral.
    pub fn label(&self) -> &'static str {
        match self {
            ChargeClass::Charged => "+-",
            ChargeClass::Neutral => "0",
            ChargeClass::TrulyNeutral => "0\u{304}",
        }
    }
}

pub fn charge_class(field_is_complex: bool, ring: DivisionRingKind) -> ChargeClass {
    if field_is_complex {
        return ChargeClass::Charged;
    }
    match ring {
        DivisionRingKind::H | DivisionRingKind::HH => ChargeClass::Neutral,
        // C never occurs for a real field of even dimension; grouped with R.
        _ => ChargeClass::TrulyNeutral,
    }
}

/// `P^2` by residue: 4 gives +1, 2 and 6 give -1; the rest are not assigned.
pub fn parity_square(sig: CliffordSignature) -> Result<i8> {
    match sig.d_mod8() {
        4 => Ok(1),
        2 | 6 => Ok(-1),
        d => Err(Error::UnassignedParity { d_mod8: d }),
    }
}

fn c(re: i64, im: i64) -> Complex<i64> {
    Complex::new(re, im)
}

fn pauli(letter: u8) -> GMatrix {
    let z = c(0, 0);
    let o = c(1, 0);
    match letter {
        0 => GMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        1 => GMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => GMatrix::from_row_slice(2, 2, &[z, c(0, -1), c(0, 1), z]),
        _ => GMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

pub fn identity(n: usize) -> GMatrix {
    GMatrix::from_fn(n, n, |i, j| if i == j { c(1, 0) } else { c(0, 0) })
}

fn kron(a: &GMatrix, b: &GMatrix) -> GMatrix {
    let (br, bc) = b.shape();
    GMatrix::from_fn(a.nrows() * br, a.ncols() * bc, |i, j| a[(i / br, j / bc)] * b[(i % br, j % bc)])
}

pub fn conj(m: &GMatrix) -> GMatrix {
    m.map(|z| z.conj())
}

/// Inverse of a unitary Gaussian-integer matrix (every product of basis generators is one).
pub fn unitary_inverse(m: &GMatrix) -> GMatrix {
    m.transpose().map(|z| z.conj())
}

pub fn is_real(m: &GMatrix) -> bool {
    m.iter().all(|z| z.im == 0)
}

/// `+1` if `m = I`, `-1` if `m = -I`, `None` otherwise.
pub fn identity_sign(m: &GMatrix) -> Option<i8> {
    let n = m.nrows();
    if m == &identity(n) {
        Some(1)
    } else if m == &(-identity(n)) {
        Some(-1)
    } else {
        None
    }
}

fn word_anticommutes(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).filter(|(x, y)| **x != 0 && **y != 0 && x != y).count() % 2 == 1
}

fn count_y(w: &[u8]) -> usize {
    w.iter().filter(|&&x| x == 2).count()
}

/// Spinor basis `gamma_1..gamma_n` of `Cl(p,q)`, `gamma_i^2 = +1` for `i <= p`.
#[derive(Clone, Debug)]
pub struct GammaBasis {
    pub sig: CliffordSignature,
    pub gammas: Vec<GMatrix>,
    pub squares: Vec<i8>,
    /// Pauli word of each generator, e.g. `"i*XZY"`.
    pub words: Vec<String>,
}

impl GammaBasis {
    pub fn dim(&self) -> usize {
        1usize << (self.sig.n() / 2)
    }

    /// Exact check of anticommutation and squares.
    pub fn verify(&self) -> bool {
        let d = self.dim();
        let id = identity(d);
        for (i, gi) in self.gammas.iter().enumerate() {
            let sq = if self.squares[i] > 0 { id.clone() } else { -id.clone() };
            if gi * gi != sq {
                return false;
            }
            for gj in &self.gammas[i + 1..] {
                let ac = gi * gj + gj * gi;
                if ac.iter().any(|z| *z != c(0, 0)) {
                    return false;
                }
            }
        }
        true
    }

    /// Ordered product of the generators with the given indices (identity if empty).
    pub fn product(&self, idx: &[usize]) -> GMatrix {
        idx.iter().fold(identity(self.dim()), |acc, &i| acc * &self.gammas[i])
    }
}

pub fn gamma_basis(sig: CliffordSignature) -> Result<GammaBasis> {
    gamma_basis_with_cap(sig, DEFAULT_CAP)
}

/// Spinor basis built from Pauli words of length `n/2`.
///
/// Generators are picked by a deterministic depth-first search over words in
/// lexicographic order; a generator squaring to `-1` is `i` times a word. For
/// ring `R` only real matrices are admitted, so `Pi` can be the identity.
pub fn gamma_basis_with_cap(sig: CliffordSignature, cap: u32) -> Result<GammaBasis> {
    let n = sig.n();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n > cap {
        return Err(Error::CapExceeded { n: n as u64, cap: cap as u64 });
    }
    let m = (n / 2) as usize;
    let real_only = classify(sig) == DivisionRingKind::R;
    let words: Vec<Vec<u8>> = (1..4usize.pow(m as u32))
        .map(|mut x| {
            let mut w = vec![0u8; m];
            for slot in w.iter_mut().rev() {
                *slot = (x % 4) as u8;
                x /= 4;
            }
            w
        })
        .collect();

    fn search(
        chosen: &mut Vec<usize>,
        cands: &[usize],
        words: &[Vec<u8>],
        p: usize,
        n: usize,
        real_only: bool,
    ) -> bool {
        let k = chosen.len();
        if k == n {
            return true;
        }
        let neg = k >= p;
        for &w in cands {
            let ny_odd = count_y(&words[w]) % 2 == 1;
            // word real iff #Y even; i*word real iff #Y odd
            if real_only && ny_odd != neg {
                continue;
            }
            let next: Vec<usize> =
                cands.iter().copied().filter(|&v| v != w && word_anticommutes(&words[v], &words[w])).collect();
            chosen.push(w);
            if search(chosen, &next, words, p, n, real_only) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let all: Vec<usize> = (0..words.len()).collect();
    let mut chosen = Vec::new();
    if !search(&mut chosen, &all, &words, sig.p as usize, n as usize, real_only) {
        // unreachable for even n: a spinor representation always exists
        return Err(Error::PiRule(format!("no Pauli-word basis found for {sig}")));
    }
    let mut gammas = Vec::with_capacity(n as usize);
    let mut squares = Vec::with_capacity(n as usize);
    let mut labels = Vec::with_capacity(n as usize);
    for (k, &w) in chosen.iter().enumerate() {
        let mat = words[w].iter().fold(identity(1), |acc, &l| kron(&acc, &pauli(l)));
        let neg = k >= sig.p as usize;
        let text: String = words[w].iter().map(|&l| ['I', 'X', 'Y', 'Z'][l as usize]).collect();
        if neg {
            gammas.push(mat.map(|z| z * c(0, 1)));
            squares.push(-1);
            labels.push(format!("i*{text}"));
        } else {
            gammas.push(mat);
            squares.push(1);
            labels.push(text);
        }
    }
    Ok(GammaBasis { sig, gammas, squares, words: labels })
}

/// `(a, b)`: generators with some non-real entry, and all-real generators.
pub fn count_generator_kinds(basis: &GammaBasis) -> (usize, usize) {
    let a = basis.gammas.iter().filter(|g| !is_real(g)).count();
    (a, basis.gammas.len() - a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PiRule {
    /// Ring `R`: `Pi` is the unit matrix.
    Identity,
    /// `a` even: ordered product of the complex generators.
    ComplexProduct,
    /// `b` odd: ordered product of the real generators.
    RealProduct,
}

#[derive(Clone, Debug)]
pub struct PiMatrix {
    pub matrix: GMatrix,
    pub rule: PiRule,
    pub a: usize,
    pub b: usize,
    /// Generator indices whose product forms `Pi`.
    pub factors: Vec<usize>,
}

pub fn pi_matrix(basis: &GammaBasis) -> Result<PiMatrix> {
    let (a, b) = count_generator_kinds(basis);
    match classify(basis.sig) {
        DivisionRingKind::R => {
            if a != 0 {
                return Err(Error::PiRule(format!("{} basis is not real", basis.sig)));
            }
            Ok(PiMatrix { matrix: identity(basis.dim()), rule: PiRule::Identity, a, b, factors: vec![] })
        }
        DivisionRingKind::H => {
            let complex: Vec<usize> = (0..basis.gammas.len()).filter(|&i| !is_real(&basis.gammas[i])).collect();
            let real: Vec<usize> = (0..basis.gammas.len()).filter(|&i| is_real(&basis.gammas[i])).collect();
            // the a-rule is tried first
            if a % 2 == 0 {
                Ok(PiMatrix { matrix: basis.product(&complex), rule: PiRule::ComplexProduct, a, b, factors: complex })
            } else if b % 2 == 1 {
                Ok(PiMatrix { matrix: basis.product(&real), rule: PiRule::RealProduct, a, b, factors: real })
            } else {
                Err(Error::PiRule(format!("a = {a} odd and b = {b} even")))
            }
        }
        other => Err(Error::PiRule(format!("ring {other} of {} has no product rule", basis.sig))),
    }
}

/// Sign of `Pi * conj(Pi)` from explicit matrix arithmetic.
pub fn pi_conj_sign(pi: &PiMatrix) -> Result<i8> {
    let prod = &pi.matrix * conj(&pi.matrix);
    identity_sign(&prod).ok_or_else(|| Error::PiRule("Pi conj(Pi) is not +-I".into()))
}

/// The stated mod-4 rule: `+1` for ring `R`, and for ring `H` when `a - b = 0, 1 (mod 4)`.
pub fn theorem_sign(ring: DivisionRingKind, a: usize, b: usize) -> i8 {
    match ring {
        DivisionRingKind::R => 1,
        _ => {
            if matches!((a as i64 - b as i64).rem_euclid(4), 0 | 1) {
                1
            } else {
                -1
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleConjugation {
    pub sig: CliffordSignature,
    pub a: usize,
    pub b: usize,
    /// Sign of `Pi conj(Pi)` by explicit product.
    pub explicit: i8,
    /// Sign predicted by the mod-4 rule on `a - b`.
    pub predicted: i8,
}

/// Twice-conjugated spinor sign for an even signature; the returned `explicit`
/// field is authoritative, `predicted` is the mod-4 rule for comparison.
pub fn double_conjugation_sign(sig: CliffordSignature) -> Result<DoubleConjugation> {
    if !matches!(sig.d_mod8(), 0 | 2 | 4 | 6) {
        return Err(Error::PiRule(format!("{sig} has odd p - q")));
    }
    let basis = gamma_basis(sig)?;
    let pi = pi_matrix(&basis)?;
    let explicit = pi_conj_sign(&pi)?;
    Ok(DoubleConjugation {
        sig,
        a: pi.a,
        b: pi.b,
        explicit,
        predicted: theorem_sign(classify(sig), pi.a, pi.b),
    })
}

/// Automorphism representatives: `W` (involution), `E` (reversion), `C = EW`,
/// `K = Pi W`, `S = Pi E`, `F = Pi C`.
#[derive(Clone, Debug)]
pub struct Conjugations {
    pub w: GMatrix,
    pub e: GMatrix,
    pub c: GMatrix,
    pub k: GMatrix,
    pub s: GMatrix,
    pub f: GMatrix,
    pub pi: GMatrix,
    /// True if `E` is the product of the symmetric generators.
    pub e_from_symmetric: bool,
}

pub fn conjugation_matrices(basis: &GammaBasis) -> Result<Conjugations> {
    if basis.sig.n() % 2 == 1 {
        return Err(Error::OddDimension(basis.sig.n()));
    }
    let n = basis.gammas.len();
    let all: Vec<usize> = (0..n).collect();
    let w = basis.product(&all);
    let sym: Vec<usize> = all.iter().copied().filter(|&i| basis.gammas[i].transpose() == basis.gammas[i]).collect();
    let anti: Vec<usize> = all.iter().copied().filter(|&i| !sym.contains(&i)).collect();
    let reverses = |e: &GMatrix| basis.gammas.iter().all(|g| e * g.transpose() == g * e);
    let e_sym = basis.product(&sym);
    let (e, e_from_symmetric) = if reverses(&e_sym) { (e_sym, true) } else { (basis.product(&anti), false) };
    let pi = match classify(basis.sig) {
        DivisionRingKind::R | DivisionRingKind::H => pi_matrix(basis)?.matrix,
        _ => return Err(Error::PiRule(format!("{} not of type R or H", basis.sig))),
    };
    let c = &e * &w;
    let k = &pi * &w;
    let s = &pi * &e;
    let f = &pi * &c;
    Ok(Conjugations { w, e, c, k, s, f, pi, e_from_symmetric })
}

/// `A* = W A W^-1`
pub fn involution(cj: &Conjugations, a: &GMatrix) -> GMatrix {
    &cj.w * a * unitary_inverse(&cj.w)
}

/// `A~ = E A^T E^-1`
pub fn reversion(cj: &Conjugations, a: &GMatrix) -> GMatrix {
    &cj.e * a.transpose() * unitary_inverse(&cj.e)
}

/// `A-bar = Pi conj(A) Pi^-1`
pub fn pseudo(cj: &Conjugations, a: &GMatrix) -> GMatrix {
    &cj.pi * conj(a) * unitary_inverse(&cj.pi)
}

// ---------------------------------------------------------------------------
// CPT group

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CptElement {
    One,
    P,
    T,
    PT,
    C,
    CP,
    CT,
    CPT,
}

impl CptElement {
    pub const ALL: [CptElement; 8] = [
        CptElement::One,
        CptElement::P,
        CptElement::T,
        CptElement::PT,
        CptElement::C,
        CptElement::CP,
        CptElement::CT,
        CptElement::CPT,
    ];

    /// `(c, p, t)` bits.
    pub fn bits(self) -> (u8, u8, u8) {
        let i = self as u8;
        (i >> 2 & 1, i & 1, i >> 1 & 1)
    }

    pub fn from_bits(c: u8, p: u8, t: u8) -> Self {
        Self::ALL[((c & 1) << 2 | (t & 1) << 1 | (p & 1)) as usize]
    }

    pub fn symbol(self) -> Symbol {
        match self {
            CptElement::One => Symbol::One,
            CptElement::P => Symbol::W,
            CptElement::T => Symbol::E,
            CptElement::PT => Symbol::C,
            CptElement::C => Symbol::Pi,
            CptElement::CP => Symbol::K,
            CptElement::CT => Symbol::S,
            CptElement::CPT => Symbol::F,
        }
    }

    pub fn phase(self) -> PhaseMonomial {
        let (c, p, t) = self.bits();
        PhaseMonomial { ep: p as i32, et: t as i32, ec: c as i32, i_pow: 0 }
    }

    /// Group product at unit phases, with `W, E, Pi` commuting involutions.
    pub fn mul(self, rhs: CptElement) -> CptElement {
        let (c1, p1, t1) = self.bits();
        let (c2, p2, t2) = rhs.bits();
        CptElement::from_bits(c1 ^ c2, p1 ^ p2, t1 ^ t2)
    }

    pub fn name(self) -> &'static str {
        ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"][self as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Symbol {
    One,
    W,
    E,
    C,
    Pi,
    K,
    S,
    F,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symbol::One => "1",
            Symbol::W => "W",
            Symbol::E => "E",
            Symbol::C => "C",
            Symbol::Pi => "Π",
            Symbol::K => "K",
            Symbol::S => "S",
            Symbol::F => "F",
        };
        f.write_str(s)
    }
}

/// `i^i_pow * eta_p^ep * eta_t^et * eta_c^ec`
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PhaseMonomial {
    pub ep: i32,
    pub et: i32,
    pub ec: i32,
    pub i_pow: u8,
}

impl PhaseMonomial {
    pub fn mul(self, o: PhaseMonomial) -> PhaseMonomial {
        PhaseMonomial {
            ep: self.ep + o.ep,
            et: self.et + o.et,
            ec: self.ec + o.ec,
            i_pow: (self.i_pow + o.i_pow) % 4,
        }
    }

    pub fn eval(&self, ph: &CptPhases) -> Complex64 {
        let i = Complex64::new(0.0, 1.0).powu(self.i_pow as u32);
        i * ph.eta_p.powi(self.ep) * ph.eta_t.powi(self.et) * ph.eta_c.powi(self.ec)
    }
}

impl fmt::Display for PhaseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.i_pow != 0 {
            parts.push(["1", "i", "-1", "-i"][self.i_pow as usize].to_string());
        }
        for (name, e) in [("η_c", self.ec), ("η_p", self.ep), ("η_t", self.et)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Numeric phase values; `|eta| = 1` is expected but not enforced.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CptPhases {
    pub eta_p: Complex64,
    pub eta_t: Complex64,
    pub eta_c: Complex64,
}

impl Default for CptPhases {
    fn default() -> Self {
        let one = Complex64::new(1.0, 0.0);
        CptPhases { eta_p: one, eta_t: one, eta_c: one }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CptCell {
    pub row: CptElement,
    pub col: CptElement,
    pub phase: PhaseMonomial,
    /// Symbols with exponents, e.g. `[(W, 1), (C, 1)]` or `[(Pi, 2)]`.
    pub word: Vec<(Symbol, u32)>,
}

impl CptCell {
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CptTable {
    pub cells: Vec<Vec<CptCell>>,
}

impl CptTable {
    pub fn cell(&self, row: CptElement, col: CptElement) -> &CptCell {
        &self.cells[row as usize][col as usize]
    }
}

pub fn cpt_table() -> CptTable {
    let cells = CptElement::ALL
        .iter()
        .map(|&row| {
            CptElement::ALL
                .iter()
                .map(|&col| {
                    let phase = row.phase().mul(col.phase());
                    let word = match (row.symbol(), col.symbol()) {
                        (Symbol::One, Symbol::One) => vec![],
                        (Symbol::One, s) | (s, Symbol::One) => vec![(s, 1)],
                        (a, b) if a == b => vec![(a, 2)],
                        (a, b) => vec![(a, 1), (b, 1)],
                    };
                    CptCell { row, col, phase, word }
                })
                .collect()
        })
        .collect();
    CptTable { cells }
}
