mod common;

use proptest::prelude::*;

use common::*;
use tauspin::clifford_cpt::{
    charge_class, classify, conjugation_matrices, conj, cpt_table, gamma_basis, gamma_basis_with_cap, involution,
    parity_square, pi_matrix, pseudo, reversion, unitary_inverse, CliffordSignature, CptElement, CptPhases,
    DivisionRingKind,
};
use tauspin::{ChargeClass, Error};

fn sig(p: u32, q: u32) -> CliffordSignature {
    CliffordSignature::new(p, q)
}

proptest! {
    #[test]
    fn ring_is_periodic_mod_8(p in 0u32..200, q in 0u32..200) {
        prop_assert_eq!(classify(sig(p, q)), classify(sig(p + 8, q)));
        prop_assert_eq!(classify(sig(p, q)), classify(sig(p + 4, q + 4)));
    }
}

#[test]
fn ring_table() {
    let want = [
        (0, DivisionRingKind::R),
        (1, DivisionRingKind::RR),
        (2, DivisionRingKind::R),
        (3, DivisionRingKind::C),
        (4, DivisionRingKind::H),
        (5, DivisionRingKind::HH),
        (6, DivisionRingKind::H),
        (7, DivisionRingKind::C),
    ];
    for (d, ring) in want {
        assert_eq!(classify(sig(d + 8, 8)), ring, "d = {d}");
    }
}

#[test]
fn bases_verify_up_to_eight() {
    for n in (2..=8u32).step_by(2) {
        for p in 0..=n {
            let b = gamma_basis(sig(p, n - p)).unwrap();
            assert!(b.verify(), "{}", b.sig);
            assert_eq!(b.dim(), 1 << (n / 2));
        }
    }
}

#[test]
fn basis_errors() {
    assert_eq!(gamma_basis(sig(2, 1)).unwrap_err(), Error::OddDimension(3));
    assert!(matches!(gamma_basis_with_cap(sig(8, 8), 12), Err(Error::CapExceeded { .. })));
}

#[test]
fn pi_conjugates_generators() {
    // Pi conj(gamma) Pi^-1 = +-gamma for each generator, checked with plain arithmetic
    for s in [sig(0, 2), sig(1, 3), sig(3, 1), sig(4, 0), sig(0, 6), sig(2, 6), sig(1, 1), sig(5, 3)] {
        let b = gamma_basis(s).unwrap();
        let pi = pi_matrix(&b).unwrap();
        let p = plain(&pi.matrix);
        let pinv = plain(&unitary_inverse(&pi.matrix));
        for g in &b.gammas {
            let lhs = plain_mul(&plain_mul(&p, &plain_conj(&plain(g))), &pinv);
            let pos = plain(g);
            let neg: Plain = pos.iter().map(|r| r.iter().map(|&(x, y)| (-x, -y)).collect()).collect();
            assert!(lhs == pos || lhs == neg, "{s}");
        }
    }
}

#[test]
fn automorphism_representatives() {
    for s in [sig(1, 3), sig(3, 1), sig(2, 2), sig(0, 4)] {
        let b = gamma_basis(s).unwrap();
        let cj = conjugation_matrices(&b).unwrap();
        for g in &b.gammas {
            assert_eq!(involution(&cj, g), -g.clone(), "{s}");
            assert_eq!(reversion(&cj, g), g.clone(), "{s}");
            let bar = pseudo(&cj, g);
            assert!(bar == g.clone() || bar == -g.clone(), "{s}");
        }
        assert_eq!(cj.c, &cj.e * &cj.w);
        assert_eq!(cj.f, &cj.pi * &cj.c);
        // conj is an involution on the matrices themselves
        assert_eq!(conj(&conj(&cj.w)), cj.w);
    }
}

#[test]
fn parity_and_charge() {
    assert_eq!(parity_square(sig(119, 115)), Ok(1));
    assert_eq!(parity_square(sig(109, 107)), Ok(-1));
    assert_eq!(charge_class(false, classify(sig(45, 43))), ChargeClass::TrulyNeutral);
    assert_eq!(charge_class(false, classify(sig(89, 83))), ChargeClass::Neutral);
    assert_eq!(ChargeClass::TrulyNeutral.label(), "0\u{304}");
}

#[test]
fn table_matches_fixture_and_phases_multiply() {
    let t = cpt_table();
    let fx = cpt_fixture();
    assert_eq!(fx.len(), 64);
    let names = ["1", "W", "E", "C", "Π", "K", "S", "F"];
    for f in &fx {
        let r = CptElement::ALL[names.iter().position(|n| *n == f.row).unwrap()];
        let c = CptElement::ALL[names.iter().position(|n| *n == f.col).unwrap()];
        let cell = t.cell(r, c);
        assert_eq!((cell.phase.ec, cell.phase.ep, cell.phase.et), f.exps, "{}·{}", f.row, f.col);
        assert_eq!(cell.word_string(), f.word);
    }
    let ph = CptPhases {
        eta_p: num_complex::Complex64::new(0.0, 1.0),
        eta_t: num_complex::Complex64::new(-1.0, 0.0),
        eta_c: num_complex::Complex64::new(0.6, 0.8),
    };
    for r in CptElement::ALL {
        for c in CptElement::ALL {
            let v = t.cell(r, c).phase.eval(&ph);
            let w = r.phase().eval(&ph) * c.phase().eval(&ph);
            assert!((v - w).norm() < 1e-12);
        }
    }
}
