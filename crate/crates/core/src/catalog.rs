//! Built-in state vectors for the octets `F12`, `B0`, `B1`, their charge
//! multiplets, quark strings and a consistency validator.
//!
//! Printed values are kept verbatim. Where they contradict the structural
//! invariants the validator reports it and `corrected_*` accessors give the
//! consistent value.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use crate::clifford_cpt::{charge_class, classify, parity_square, ChargeClass, CliffordSignature, DivisionRingKind};
use crate::halfint::HalfInt;
use crate::mass_model::{coefficient_row_with, Observation, QuantumNumbers};
use crate::rep_core::RepLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    Complex,
    Real,
    ComplexConjugate,
}

impl RepKind {
    pub fn prefix(self) -> &'static str {
        match self {
            RepKind::Complex => "c",
            RepKind::Real => "r",
            RepKind::ComplexConjugate => "c*",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    /// `C_n`, or `C*_n` when `conjugate`.
    Complex { dim: u32, conjugate: bool },
    /// `Cl(p,q)`, with `hat` marking the antiparticle copy.
    Real { sig: CliffordSignature, hat: bool },
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Complex { dim, conjugate: false } => write!(f, "C{dim}"),
            Algebra::Complex { dim, conjugate: true } => write!(f, "C*{dim}"),
            Algebra::Real { sig, hat: false } => write!(f, "Cl{},{}", sig.p, sig.q),
            Algebra::Real { sig, hat: true } => write!(f, "^Cl{},{}", sig.p, sig.q),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpinspaceRing {
    R,
    C,
    H,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParticleState {
    pub name: &'static str,
    pub ascii: &'static str,
    pub rep: RepLabel,
    pub rep_kind: RepKind,
    pub sym_space: (u32, u32),
    pub algebra: Algebra,
    pub spinspace_log2: u32,
    pub parity2: i8,
    pub qn: QuantumNumbers,
    pub quark_string: Option<&'static str>,
    pub mass_exp: Option<f64>,
    /// Label given in running prose where it differs from the state table.
    pub prose_rep: Option<RepLabel>,
    pub prose_signature: Option<CliffordSignature>,
    /// Printed `U(U+1)` where no half-integer `U` reproduces the printed row.
    pub printed_u_casimir: Option<Rational64>,
}

impl ParticleState {
    pub fn spinspace_ring(&self) -> SpinspaceRing {
        match self.algebra {
            Algebra::Complex { .. } => SpinspaceRing::C,
            Algebra::Real { sig, .. } => match classify(sig) {
                DivisionRingKind::H | DivisionRingKind::HH => SpinspaceRing::H,
                DivisionRingKind::C => SpinspaceRing::C,
                _ => SpinspaceRing::R,
            },
        }
    }

    pub fn charge_class(&self) -> ChargeClass {
        match self.algebra {
            Algebra::Complex { .. } => ChargeClass::Charged,
            Algebra::Real { sig, .. } => charge_class(false, classify(sig)),
        }
    }

    /// `p + q = 2(k + r)` with the printed `p - q` kept.
    pub fn corrected_signature(&self) -> Option<CliffordSignature> {
        match self.algebra {
            Algebra::Real { sig, .. } => {
                let n = 2 * (self.rep.k() + self.rep.r()) as i64;
                let d = sig.d();
                Some(CliffordSignature::new(((n + d) / 2) as u32, ((n - d) / 2) as u32))
            }
            Algebra::Complex { .. } => None,
        }
    }

    pub fn corrected_spinspace_log2(&self) -> u32 {
        self.rep.k() + self.rep.r()
    }

    /// The half-integer `U` value with the printed `U(U+1)` where one is given.
    pub fn observation(&self) -> Option<Observation> {
        let mut o = Observation::new(self.name, self.qn, self.mass_exp?);
        o.u_casimir = self.printed_u_casimir;
        Some(o)
    }

    pub fn printed_row(&self) -> [Rational64; 7] {
        coefficient_row_with(&self.qn, self.printed_u_casimir)
    }

    pub fn label(&self) -> String {
        format!("{}({}, {})", self.rep_kind.prefix(), self.rep.l, self.rep.ldot)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MultipletLabel {
    Phi3,
    Phi2,
    Phi2Star,
    Phi0,
}

impl MultipletLabel {
    pub fn size(self) -> usize {
        match self {
            MultipletLabel::Phi3 => 3,
            MultipletLabel::Phi2 | MultipletLabel::Phi2Star => 2,
            MultipletLabel::Phi0 => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MultipletLabel::Phi3 => "Φ3",
            MultipletLabel::Phi2 => "Φ2",
            MultipletLabel::Phi2Star => "Φ*2",
            MultipletLabel::Phi0 => "Φ0",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChargeMultiplet {
    pub label: MultipletLabel,
    pub name: &'static str,
    pub members: Vec<ParticleState>,
    /// Multiplet-level experimental mass (MeV).
    pub mass_exp: f64,
    /// Mass ratio to the electron quoted for this multiplet.
    pub quoted_ratio: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OctetName {
    F12,
    B0,
    B1,
}

impl OctetName {
    pub const ALL: [OctetName; 3] = [OctetName::F12, OctetName::B0, OctetName::B1];
}

impl fmt::Display for OctetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OctetName::F12 => "F12",
            OctetName::B0 => "B0",
            OctetName::B1 => "B1",
        })
    }
}

impl FromStr for OctetName {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F12" | "F1/2" => Ok(OctetName::F12),
            "B0" => Ok(OctetName::B0),
            "B1" => Ok(OctetName::B1),
            _ => Err(crate::Error::Unknown(format!("octet {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Octet {
    pub name: OctetName,
    /// Ordered `Phi3, Phi2, Phi2*, Phi0`.
    pub multiplets: Vec<ChargeMultiplet>,
    pub baryon_number: i32,
    pub spin: HalfInt,
    pub parity2: i8,
}

impl Octet {
    pub fn states(&self) -> impl Iterator<Item = &ParticleState> {
        self.multiplets.iter().flat_map(|m| m.members.iter())
    }

    pub fn state(&self, name: &str) -> Option<&ParticleState> {
        self.states().find(|s| s.name == name || s.ascii.eq_ignore_ascii_case(name))
    }

    pub fn multiplet(&self, name: &str) -> Option<&ChargeMultiplet> {
        self.multiplets.iter().find(|m| m.name == name)
    }

    /// Per-state observations in catalog order.
    pub fn observations(&self) -> Vec<Observation> {
        self.states().filter_map(ParticleState::observation).collect()
    }
}

pub fn reduction(octet: &Octet) -> &[ChargeMultiplet] {
    &octet.multiplets
}

const fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

const fn sig(p: u32, q: u32) -> CliffordSignature {
    CliffordSignature::new(p, q)
}

struct Row {
    name: &'static str,
    ascii: &'static str,
    rep: (u32, u32),
    kind: RepKind,
    sym: (u32, u32),
    algebra: Algebra,
    spinspace: u32,
    q: i32,
    y: i32,
    i2: i64,
    u2: i64,
    quarks: &'static str,
    mass: f64,
}

fn cx(dim: u32) -> Algebra {
    Algebra::Complex { dim, conjugate: false }
}

fn cc(dim: u32) -> Algebra {
    Algebra::Complex { dim, conjugate: true }
}

fn cl(p: u32, q: u32) -> Algebra {
    Algebra::Real { sig: sig(p, q), hat: false }
}

fn hat(p: u32, q: u32) -> Algebra {
    Algebra::Real { sig: sig(p, q), hat: true }
}

#[allow(clippy::too_many_arguments)]
fn row(
    name: &'static str,
    ascii: &'static str,
    rep: (u32, u32),
    kind: RepKind,
    sym: (u32, u32),
    algebra: Algebra,
    spinspace: u32,
    qyiu: (i32, i32, i64, i64),
    quarks: &'static str,
    mass: f64,
) -> Row {
    let (q, y, i2, u2) = qyiu;
    Row { name, ascii, rep, kind, sym, algebra, spinspace, q, y, i2, u2, quarks, mass }
}

fn build(r: Row, b: i32, spin: HalfInt, p2: i8) -> ParticleState {
    ParticleState {
        name: r.name,
        ascii: r.ascii,
        rep: RepLabel::from_twice(r.rep.0, r.rep.1),
        rep_kind: r.kind,
        sym_space: r.sym,
        algebra: r.algebra,
        spinspace_log2: r.spinspace,
        parity2: p2,
        qn: QuantumNumbers { b, s: spin, p2, q: r.q, y: r.y, i: h(r.i2), u: h(r.u2) },
        quark_string: Some(r.quarks),
        mass_exp: Some(r.mass),
        prose_rep: None,
        prose_signature: None,
        printed_u_casimir: None,
    }
}

fn multiplet(
    label: MultipletLabel,
    name: &'static str,
    mass_exp: f64,
    quoted_ratio: f64,
    rows: Vec<Row>,
    b: i32,
    spin: HalfInt,
    p2: i8,
) -> ChargeMultiplet {
    let members = rows.into_iter().map(|r| build(r, b, spin, p2)).collect();
    ChargeMultiplet { label, name, members, mass_exp, quoted_ratio }
}

fn set<F: FnOnce(&mut ParticleState)>(o: &mut Octet, ascii: &str, f: F) {
    let s = o
        .multiplets
        .iter_mut()
        .flat_map(|m| m.members.iter_mut())
        .find(|s| s.ascii == ascii)
        .expect("state present");
    f(s);
}

use MultipletLabel::{Phi0, Phi2, Phi2Star, Phi3};
use RepKind::{Complex as C, ComplexConjugate as Cs, Real as R};

fn octet_f12() -> Octet {
    let (b, s, p2) = (1, HalfInt::HALF, 1);
    let mut o = Octet {
        name: OctetName::F12,
        baryon_number: b,
        spin: s,
        parity2: p2,
        multiplets: vec![
            multiplet(Phi3, "Σ", 1192.0, 2280.0, vec![
                row("Σ⁺", "Sigma+", (67, 66), C, (67, 66), cx(266), 133, (1, 0, 2, 1), "uus", 1189.4),
                row("Σ⁰", "Sigma0", (67, 66), R, (67, 66), cl(135, 131), 133, (0, 0, 2, 2), "uds", 1192.4),
                row("Σ⁻", "Sigma-", (67, 66), Cs, (67, 66), cc(266), 133, (-1, 0, 2, 1), "dds", 1197.1),
            ], b, s, p2),
            multiplet(Phi2, "N", 939.0, 1800.0, vec![
                row("p", "p", (59, 58), C, (59, 58), cx(234), 117, (1, 1, 1, 1), "uud", 938.3),
                row("n", "n", (59, 58), R, (59, 58), cl(119, 115), 117, (0, 1, 1, 2), "ddu", 939.5),
            ], b, s, p2),
            multiplet(Phi2Star, "Ξ", 1318.0, 2520.0, vec![
                row("Ξ⁻", "Xi-", (71, 70), C, (71, 70), cx(282), 141, (-1, -1, 1, 1), "ssd", 1320.8),
                row("Ξ⁰", "Xi0", (71, 70), R, (71, 70), cl(143, 139), 141, (0, -1, 1, 2), "ssu", 1314.3),
            ], b, s, p2),
            multiplet(Phi0, "Λ", 1115.0, 2140.0, vec![
                row("Λ", "Lambda", (65, 64), R, (65, 64), cl(131, 127), 129, (0, 0, 0, 0), "uds", 1115.4),
            ], b, s, p2),
        ],
    };
    set(&mut o, "Xi-", |s| s.prose_rep = Some(RepLabel::from_twice(75, 70)));
    set(&mut o, "Xi0", |s| {
        s.prose_rep = Some(RepLabel::from_twice(75, 70));
        s.prose_signature = Some(sig(133, 139));
    });
    set(&mut o, "p", |s| s.printed_u_casimir = Some(Rational64::new(9, 4)));
    o
}

fn octet_b0() -> Octet {
    let (b, s, p2) = (0, HalfInt::ZERO, -1);
    Octet {
        name: OctetName::B0,
        baryon_number: b,
        spin: s,
        parity2: p2,
        multiplets: vec![
            multiplet(Phi3, "π", 138.0, 270.0, vec![
                row("π⁺", "pi+", (22, 22), C, (22, 22), cx(88), 44, (1, 0, 2, 2), "d\u{304}u", 139.6),
                row("π⁰", "pi0", (22, 22), R, (22, 22), cl(45, 43), 44, (0, 0, 2, 2), "d\u{304}d u\u{304}u", 135.0),
                row("π⁻", "pi-", (22, 22), Cs, (22, 22), cc(88), 44, (-1, 0, 2, 2), "u\u{304}d", 139.6),
            ], b, s, p2),
            multiplet(Phi2, "K", 496.0, 972.0, vec![
                row("K⁰", "K0", (43, 43), R, (43, 43), cl(89, 83), 86, (0, 1, 1, 1), "s\u{304}d", 498.0),
                row("K⁺", "K+", (43, 43), Cs, (43, 43), cc(172), 86, (1, 1, 1, 1), "s\u{304}u", 493.8),
            ], b, s, p2),
            multiplet(Phi2Star, "K̄", 496.0, 972.0, vec![
                row("K⁻", "K-", (43, 43), C, (43, 43), cx(172), 86, (-1, -1, 1, 1), "u\u{304}s", 493.8),
                row("K̄⁰", "K0bar", (43, 43), R, (43, 43), hat(89, 83), 86, (0, -1, 1, 1), "d\u{304}s", 498.0),
            ], b, s, p2),
            multiplet(Phi0, "η", 549.0, 1076.0, vec![
                row("η", "eta", (45, 45), R, (45, 45), cl(46, 44), 90, (0, 0, 0, 0), "s\u{304}s", 548.7),
            ], b, s, p2),
        ],
    }
}

fn octet_b1() -> Octet {
    let (b, s, p2) = (0, HalfInt::ONE, -1);
    Octet {
        name: OctetName::B1,
        baryon_number: b,
        spin: s,
        parity2: p2,
        multiplets: vec![
            multiplet(Phi3, "ρ", 770.0, 1496.0, vec![
                row("ρ⁻", "rho-", (55, 53), C, (55, 53), cx(216), 108, (-1, 0, 2, 2), "u\u{304}d", 766.5),
                row("ρ⁰", "rho0", (55, 53), R, (55, 53), cl(109, 107), 108, (0, 0, 2, 2), "d\u{304}d u\u{304}u", 769.0),
                row("ρ⁺", "rho+", (53, 55), Cs, (55, 53), cc(216), 108, (1, 0, 2, 2), "d\u{304}u", 766.5),
            ], b, s, p2),
            multiplet(Phi2, "*K", 892.0, 1747.0, vec![
                row("*K⁰", "*K0", (59, 57), R, (59, 57), cl(119, 113), 116, (0, 1, 1, 1), "s\u{304}d", 895.81),
                row("*K⁺", "*K+", (57, 59), Cs, (57, 59), cc(232), 116, (1, 1, 1, 1), "s\u{304}u", 891.66),
            ], b, s, p2),
            multiplet(Phi2Star, "*K̄", 892.0, 1747.0, vec![
                row("*K⁻", "*K-", (59, 57), C, (59, 57), cx(232), 116, (-1, -1, 1, 1), "u\u{304}s", 891.66),
                row("*K̄⁰", "*K0bar", (57, 59), R, (57, 59), hat(119, 113), 116, (0, -1, 1, 1), "d\u{304}s", 895.81),
            ], b, s, p2),
            multiplet(Phi0, "φ", 782.0, 1533.0, vec![
                row("φ", "phi", (56, 54), R, (56, 54), cl(110, 108), 109, (0, 0, 0, 0), "s\u{304}s", 782.0),
            ], b, s, p2),
        ],
    }
}

pub fn builtin_octet(name: OctetName) -> Octet {
    match name {
        OctetName::F12 => octet_f12(),
        OctetName::B0 => octet_b0(),
        OctetName::B1 => octet_b1(),
    }
}

pub fn builtin_octets() -> [Octet; 3] {
    [octet_f12(), octet_b0(), octet_b1()]
}

/// Looks a state up by display name, ASCII name or the aliases `proton`/`neutron`.
pub fn find_state(name: &str) -> Option<ParticleState> {
    let key = match name.to_ascii_lowercase().as_str() {
        "proton" => "p".to_string(),
        "neutron" => "n".to_string(),
        _ => name.to_string(),
    };
    builtin_octets().iter().find_map(|o| o.state(&key).cloned())
}

/// Quark string for a state, `None` for unknown names.
pub fn quark_composition(name: &str) -> Option<&'static str> {
    find_state(name).and_then(|s| s.quark_string)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AnomalyKind {
    DegreeMismatch,
    SignatureDimension,
    SpinspaceDimension,
    ComplexDimension,
    ParityMismatch,
    ChargeMismatch,
    SpinLine,
    ProseLabel,
    UCoefficient,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub state: String,
    pub kind: AnomalyKind,
    pub expected: String,
    pub found: String,
}

fn is_half_int_casimir(c: Rational64) -> bool {
    // j(j+1) = c  <=>  (2j+1)^2 = 4c + 1
    let v = c * Rational64::from_integer(4) + Rational64::from_integer(1);
    if !v.is_integer() || *v.numer() < 1 {
        return false;
    }
    let n = *v.numer();
    let r = (n as f64).sqrt().round() as i64;
    r * r == n
}

/// Structural checks on a single state; `spin` is the octet spin.
pub fn validate(state: &ParticleState, spin: HalfInt) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut flag = |kind, expected: String, found: String| {
        out.push(Violation { state: state.name.to_string(), kind, expected, found })
    };
    let (k, r) = (state.rep.k(), state.rep.r());
    let (sk, sr) = state.sym_space;
    if (sk + 1) as u64 * (sr + 1) as u64 != state.rep.degree() || (sk.min(sr), sk.max(sr)) != (k.min(r), k.max(r)) {
        flag(AnomalyKind::DegreeMismatch, format!("Sym({k},{r})"), format!("Sym({sk},{sr})"));
    }
    let n = 2 * (k + r);
    match state.algebra {
        Algebra::Complex { dim, .. } => {
            if dim != n {
                flag(AnomalyKind::ComplexDimension, n.to_string(), dim.to_string());
            }
            if state.spinspace_log2 != k + r {
                flag(AnomalyKind::SpinspaceDimension, (k + r).to_string(), state.spinspace_log2.to_string());
            }
            if state.rep_kind == RepKind::Real || state.qn.q == 0 {
                flag(AnomalyKind::ChargeMismatch, "charged".into(), format!("Q = {}", state.qn.q));
            }
        }
        Algebra::Real { sig, .. } => {
            if sig.n() != n {
                let c = state.corrected_signature().expect("real");
                flag(
                    AnomalyKind::SignatureDimension,
                    format!("p+q = {n}, e.g. ({},{}), spinspace 2^{}", c.p, c.q, k + r),
                    format!("p+q = {}, spinspace 2^{}", sig.n(), state.spinspace_log2),
                );
            } else if 2 * state.spinspace_log2 != sig.n() {
                flag(AnomalyKind::SpinspaceDimension, (sig.n() / 2).to_string(), state.spinspace_log2.to_string());
            }
            match parity_square(sig) {
                Ok(p) if p == state.parity2 => {}
                other => flag(AnomalyKind::ParityMismatch, format!("{:?}", other), state.parity2.to_string()),
            }
            if state.rep_kind != RepKind::Real || state.qn.q != 0 {
                flag(AnomalyKind::ChargeMismatch, "Q = 0".into(), format!("Q = {}", state.qn.q));
            }
        }
    }
    if (state.rep.l - state.rep.ldot).abs() != spin {
        flag(AnomalyKind::SpinLine, format!("|l - ldot| = {spin}"), state.rep.spin().to_string());
    }
    let prose_rep = state.prose_rep.filter(|p| *p != state.rep);
    let prose_sig = match (state.prose_signature, state.algebra) {
        (Some(p), Algebra::Real { sig, .. }) if p != sig => Some(p),
        _ => None,
    };
    if prose_rep.is_some() || prose_sig.is_some() {
        let mut found = Vec::new();
        if let Some(p) = prose_rep {
            found.push(p.to_string());
        }
        if let Some(s) = prose_sig {
            found.push(format!("Cl{},{}", s.p, s.q));
        }
        flag(AnomalyKind::ProseLabel, format!("{} {}", state.rep, state.algebra), found.join(" "));
    }
    if let Some(c) = state.printed_u_casimir {
        if !is_half_int_casimir(c) {
            flag(AnomalyKind::UCoefficient, "U(U+1) for half-integer U".into(), c.to_string());
        }
    }
    out
}

pub fn validate_octet(octet: &Octet) -> Vec<Violation> {
    octet.states().flat_map(|s| validate(s, octet.spin)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for o in builtin_octets() {
            assert_eq!(o.states().count(), 8);
            let sizes: Vec<usize> = o.multiplets.iter().map(|m| m.members.len()).collect();
            assert_eq!(sizes, vec![3, 2, 2, 1]);
            for m in &o.multiplets {
                assert_eq!(m.members.len(), m.label.size());
            }
        }
    }

    #[test]
    fn proton_clean() {
        let p = find_state("proton").unwrap();
        assert_eq!(p.rep.degree(), 3540);
        assert_eq!(p.sym_space, (59, 58));
        let v: Vec<_> = validate(&p, HalfInt::HALF).into_iter().map(|v| v.kind).collect();
        assert_eq!(v, vec![AnomalyKind::UCoefficient]);
    }

    #[test]
    fn eta_flag() {
        let eta = find_state("eta").unwrap();
        let v = validate(&eta, HalfInt::ZERO);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, AnomalyKind::SignatureDimension);
        assert_eq!(eta.corrected_signature(), Some(sig(91, 89)));
    }

    #[test]
    fn classes() {
        assert_eq!(find_state("pi0").unwrap().charge_class(), ChargeClass::TrulyNeutral);
        assert_eq!(find_state("pi0").unwrap().spinspace_ring(), SpinspaceRing::R);
        assert_eq!(find_state("n").unwrap().charge_class(), ChargeClass::Neutral);
        assert_eq!(find_state("Sigma+").unwrap().charge_class(), ChargeClass::Charged);
    }

    #[test]
    fn quarks() {
        assert_eq!(quark_composition("proton"), Some("uud"));
        assert_eq!(quark_composition("K+"), Some("s\u{304}u"));
        assert_eq!(quark_composition("rho0"), Some("d\u{304}d u\u{304}u"));
        assert_eq!(quark_composition("nope"), None);
    }

    #[test]
    fn casimir_detect() {
        assert!(is_half_int_casimir(Rational64::new(3, 4)));
        assert!(is_half_int_casimir(Rational64::from_integer(2)));
        assert!(!is_half_int_casimir(Rational64::new(9, 4)));
    }
}
