//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria that are red for documented reasons must stay red with the
//! recorded values; anything else failing, or a red one turning green, fails
//! the test so the notes get revisited.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::Rational64;
use num_traits::Zero;

use tauspin::catalog::{builtin_octets, validate_octet, AnomalyKind, OctetName};
use tauspin::clifford_cpt::{
    classify, cpt_table, double_conjugation_sign, gamma_basis, pi_matrix, CliffordSignature, CptElement,
    CptPhases, DivisionRingKind, PiRule,
};
use tauspin::mass_model::{baryon_closure, gmo_fit, meson_closure, search_rep, FitOptions, Observation};
use tauspin::rep_core::{check_ladder_relations, check_sl2c_relations, product_operators, sl2c_generators};
use tauspin::rwe::{bivector_metric, dirac_l_matrices, lambda3_generalized, Metric4};
use tauspin::su3::{
    adjoint_basis, adjoint_image, commutator_q, degrees_table, okubo_basis3, okubo_relation_failures,
    su2_embedding, su2_relation_failures, QMat,
};
use tauspin::{HalfInt, RepLabel};

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn c1_su3_degrees() -> Outcome {
    let t = Instant::now();
    let got = degrees_table(6);
    let want = su3_degree_fixture();
    let cells = want.iter().map(Vec::len).sum::<usize>();
    let same = got == want;
    let secs = t.elapsed().as_secs_f64();
    ok(same && cells == 49 && secs < 1.0, format!("{cells} entries compared, {secs:.4}s"))
}

const PRINTED_DEGREES: [(&str, u64); 10] = [
    ("N", 3540),
    ("Σ", 4556),
    ("Ξ", 5112),
    ("Λ", 4290),
    ("π", 529),
    ("K", 1936),
    ("η", 2116),
    ("ρ", 3024),
    ("*K", 3480),
    ("φ", 3135),
];

fn c2_degrees() -> Outcome {
    let octets = builtin_octets();
    let mut bad = Vec::new();
    for (name, want) in PRINTED_DEGREES {
        let m = octets.iter().find_map(|o| o.multiplet(name)).expect("multiplet");
        for s in &m.members {
            if s.rep.degree() != want {
                bad.push(format!("{} {} != {want}", s.name, s.rep.degree()));
            }
        }
    }
    ok(bad.is_empty(), if bad.is_empty() { "10 labels exact".to_string() } else { bad.join("; ") })
}

fn c3_ladders() -> Outcome {
    let t = Instant::now();
    let mut reps: BTreeSet<RepLabel> = (0..=60).map(|k| RepLabel::from_twice(k, 0)).collect();
    for k in 0..=16 {
        for r in 0..=16 {
            reps.insert(RepLabel::from_twice(k, r));
        }
    }
    for o in builtin_octets() {
        for s in o.states() {
            if s.rep.degree() <= 4000 {
                reps.insert(s.rep);
            }
        }
    }
    let mut worst_ladder: f64 = 0.0;
    let mut worst_cross: f64 = 0.0;
    let mut worst_sl2c: f64 = 0.0;
    for &rep in &reps {
        let c = check_ladder_relations(&product_operators(rep));
        worst_ladder = worst_ladder.max(c.ladder_rel);
        worst_cross = worst_cross.max(c.cross_abs);
        worst_sl2c = worst_sl2c.max(check_sl2c_relations(&sl2c_generators(rep)));
    }
    let secs = t.elapsed().as_secs_f64();
    let pass = worst_ladder <= 1e-10 && worst_cross <= 1e-10 && worst_sl2c <= 1e-10 && secs < 60.0;
    ok(
        pass,
        format!(
            "{} reps, ladder {worst_ladder:.1e}, [X,Y] {worst_cross:.1e}, sl2c {worst_sl2c:.1e}, {secs:.1}s",
            reps.len()
        ),
    )
}

fn c4_lambda3() -> Outcome {
    let lam = lambda3_generalized(HalfInt::from_twice(59), HalfInt::int(29));
    let b = &lam.blocks;
    let arith = |i: usize, start: Rational64, step: Rational64| {
        b[i].diag.iter().enumerate().all(|(k, v)| *v == start + step * Rational64::from_integer(k as i64))
    };
    let block29: Vec<Rational64> = (0..60).map(|k| q(59 - 2 * k, 2)).collect();
    let mirrors = (0..59).all(|i| b[58 - i].diag.iter().zip(&b[i].diag).all(|(x, y)| *x == -*y));
    let zero = &b[29];
    let checks = [
        ("block count 59", b.len() == 59),
        ("dimension 3540", lam.dimension() == 3540),
        ("block 1 from 1711/2 step -29", arith(0, q(1711, 2), q(-29, 1))),
        ("block 2 from 826 step -28", arith(1, q(826, 1), q(-28, 1))),
        ("block 3 from 1593/2", b[2].diag[0] == q(1593, 2)),
        ("block 29 = diag(59/2..-59/2)", b[28].diag == block29),
        ("mirror blocks negated", mirrors),
        ("zero block of size 60 (printed 59)", zero.diag.len() == 60 && zero.diag.iter().all(|v| v.is_zero())),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    ok(failed.is_empty(), if failed.is_empty() { "all block checks exact".into() } else { failed.join("; ") })
}

fn c5_bivector() -> (Outcome, [i64; 6], bool) {
    let g = bivector_metric(&Metric4::minkowski()).unwrap();
    let diag: [i64; 6] = std::array::from_fn(|i| g[i][i]);
    let off_zero = (0..6).all(|i| (0..6).all(|j| i == j || g[i][j] == 0));
    let want = [-1, -1, -1, 1, 1, 1];
    (ok(off_zero && diag == want, format!("computed diag {diag:?}, printed {want:?}")), diag, off_zero)
}

fn c6_dirac_l() -> Outcome {
    use num_complex::Complex64 as C;
    let z = C::new(0.0, 0.0);
    let o = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    let pauli = [[[z, o], [o, z]], [[z, -i], [i, z]], [[o, z], [z, -o]]];
    let l = dirac_l_matrices(2.0);
    ok(l.l == pauli && l.l_dot == pauli, "L_j(c=2) against sigma_1, sigma_2, sigma_3")
}

struct TheoremRow {
    sig: CliffordSignature,
    explicit: i8,
    predicted: i8,
    factor_count_rule: i8,
}

fn c7_theorem() -> (Outcome, Vec<TheoremRow>) {
    let t = Instant::now();
    let mut rows = Vec::new();
    let mut oracle_disagree = Vec::new();
    for n in (2..=8u32).step_by(2) {
        for p in 0..=n {
            let sig = CliffordSignature::new(p, n - p);
            let dc = double_conjugation_sign(sig).unwrap();
            let basis = gamma_basis(sig).unwrap();
            let pi = pi_matrix(&basis).unwrap();
            let pm = plain(&pi.matrix);
            let oracle = plain_identity_sign(&plain_mul(&pm, &plain_conj(&pm)));
            if oracle != Some(dc.explicit) {
                oracle_disagree.push(sig.to_string());
            }
            // second reading: the count of Pi's own factors mod 4
            let m = match pi.rule {
                PiRule::Identity => 0,
                PiRule::ComplexProduct => pi.a,
                PiRule::RealProduct => pi.b,
            };
            let factor_count_rule = if m % 4 <= 1 { 1 } else { -1 };
            rows.push(TheoremRow { sig, explicit: dc.explicit, predicted: dc.predicted, factor_count_rule });
        }
    }
    let secs = t.elapsed().as_secs_f64();
    let miss: Vec<String> = rows.iter().filter(|r| r.explicit != r.predicted).map(|r| r.sig.to_string()).collect();
    let miss_alt = rows.iter().filter(|r| r.explicit != r.factor_count_rule).count();
    let pass = miss.is_empty() && oracle_disagree.is_empty() && secs < 30.0;
    let detail = format!(
        "{} signatures, oracle disagreements {}, rule mismatches {} [{}], factor-count reading mismatches {}, {secs:.1}s",
        rows.len(),
        oracle_disagree.len(),
        miss.len(),
        miss.join(" "),
        miss_alt
    );
    (ok(pass, detail), rows)
}

fn symbol_name(e: CptElement) -> &'static str {
    ["1", "W", "E", "C", "Π", "K", "S", "F"][e as usize]
}

fn c8_cpt() -> Outcome {
    let table = cpt_table();
    let all = CptElement::ALL;
    let abelian = all.iter().all(|&a| all.iter().all(|&b| a.mul(b) == b.mul(a)));
    let involutions = all.iter().all(|&a| a.mul(a) == CptElement::One);
    let assoc = all.iter().all(|&a| all.iter().all(|&b| all.iter().all(|&c| a.mul(b).mul(c) == a.mul(b.mul(c)))));
    let unit = CptPhases::default();
    let unit_phases = table.cells.iter().flatten().all(|c| (c.phase.eval(&unit) - 1.0).norm() < 1e-15);
    let fixture = cpt_fixture();
    let mut mismatched = Vec::new();
    for f in &fixture {
        let row = all.iter().copied().find(|e| symbol_name(*e) == f.row).unwrap();
        let col = all.iter().copied().find(|e| symbol_name(*e) == f.col).unwrap();
        let cell = table.cell(row, col);
        let exps = (cell.phase.ec, cell.phase.ep, cell.phase.et);
        if exps != f.exps || cell.word_string() != f.word || cell.phase.i_pow != 0 {
            mismatched.push(format!("{}·{}", f.row, f.col));
        }
    }
    let pass = abelian && involutions && assoc && unit_phases && fixture.len() == 64 && mismatched.is_empty();
    ok(
        pass,
        format!("Z2^3 at unit phases: {}, {} of 64 printed cells match", abelian && involutions, 64 - mismatched.len()),
    )
}

fn c9_search() -> Outcome {
    let octets = builtin_octets();
    let primal = |r: RepLabel| if r.l >= r.ldot { r } else { r.swapped() };
    let mut lines = Vec::new();
    let mut pass = true;
    for o in &octets {
        for m in &o.multiplets {
            let label = primal(m.members[0].rep);
            let hits = search_rep(m.quoted_ratio, o.spin, 2).unwrap();
            let rank = hits.iter().position(|h| h.rep == label).map(|i| i + 1);
            let need = if matches!(m.name, "Ξ" | "φ") { 2 } else { 1 };
            if lines.iter().any(|l: &String| l.starts_with(&format!("{} ", m.quoted_ratio))) {
                continue;
            }
            let good = rank.is_some_and(|r| r <= need);
            pass &= good;
            lines.push(format!("{} {}@{:?}", m.quoted_ratio, label, rank));
        }
    }
    ok(pass && lines.len() == 10, lines.join(", "))
}

struct Closure {
    baryon_ratio: f64,
    meson_rel: f64,
}

fn c10_closure() -> (Outcome, Closure) {
    let octets = builtin_octets();
    let mm = |oct: usize, name: &str| octets[oct].multiplet(name).unwrap().mass_exp;
    let b = baryon_closure(mm(0, "Ξ"), mm(0, "N"), mm(0, "Λ"), mm(0, "Σ"));
    let m0 = (mm(0, "Ξ") + mm(0, "N") + mm(0, "Λ") + mm(0, "Σ")) / 4.0;
    let baryon_ratio = b.abs / m0;
    let meson = meson_closure(mm(1, "η"), mm(1, "π"), mm(1, "K"));
    let b1 = meson_closure(mm(2, "φ"), mm(2, "ρ"), mm(2, "*K"));
    // hand arithmetic on the printed multiplet masses
    let b1_lhs = 3 * 782 * 782 + 770 * 770;
    let b1_rhs = 4 * 892 * 892;
    let b1_oracle = (b1_rhs - b1_lhs) as f64 / b1_rhs as f64;
    let b1_match = rel_close(b1.rel, b1_oracle, 1e-9) && b1.lhs == b1_lhs as f64 && b1.rhs == b1_rhs as f64;
    let pass = baryon_ratio <= 0.01 && meson.rel <= 0.07 && b1_match;
    let detail = format!(
        "baryon {} vs {} -> {:.4}% of m0={m0}; meson {:.2}%; B1 {:.2}% (oracle match {b1_match})",
        b.lhs,
        b.rhs,
        100.0 * baryon_ratio,
        100.0 * meson.rel,
        100.0 * b1.rel
    );
    (ok(pass, detail), Closure { baryon_ratio, meson_rel: meson.rel })
}

fn oracle_row(o: &Observation, opts: &FitOptions) -> Vec<f64> {
    let y = o.qn.y as f64;
    let i = o.qn.i.to_f64();
    let u = o.qn.u.to_f64();
    let qq = o.qn.q as f64;
    let ucas = o.u_casimir.map(|c| *c.numer() as f64 / *c.denom() as f64).unwrap_or(u * (u + 1.0));
    let mut r = vec![1.0];
    if !opts.beta_zero {
        r.push(y);
    }
    r.push(i * (i + 1.0) - y * y / 4.0);
    if !opts.hypercharge_only {
        r.push(-qq);
        r.push(ucas - qq * qq / 4.0);
    }
    r
}

fn c11_fit() -> Outcome {
    let octets = builtin_octets();
    let cases = [
        (OctetName::F12, FitOptions::default()),
        (OctetName::B0, FitOptions { quadratic: true, beta_zero: true, ..Default::default() }),
        (OctetName::B1, FitOptions { quadratic: true, beta_zero: true, ..Default::default() }),
    ];
    let mut worst: f64 = 0.0;
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, opts) in cases {
        let oct = octets.iter().find(|o| o.name == name).unwrap();
        let obs = oct.observations();
        let fit = gmo_fit(&obs, &opts).unwrap();
        let sq = |m: f64| if opts.quadratic { m * m } else { m };
        let m0 = obs.iter().map(|o| sq(o.mass)).sum::<f64>() / obs.len() as f64;
        let a: Vec<Vec<f64>> = obs.iter().map(|o| oracle_row(o, &opts)).collect();
        let t: Vec<f64> = obs.iter().map(|o| sq(o.mass) - m0).collect();
        let x = normal_equations(&a, &t).expect("full rank");
        for (u, v) in fit.coefficients.iter().zip(&x) {
            worst = worst.max((u - v).abs() / u.abs().max(v.abs()).max(1.0));
        }
        for (row, (res, ti)) in a.iter().zip(fit.residuals.iter().zip(&t)) {
            let pred: f64 = row.iter().zip(&x).map(|(p, c)| p * c).sum();
            let r = ti - pred;
            worst = worst.max((res.residual - r).abs() / res.residual.abs().max(r.abs()).max(1.0));
        }
        notes.push(format!("{name} rank {} rms {:.3}", fit.rank, fit.rms));

        // planted parameters on the same rows
        let planted: Vec<f64> = (0..x.len()).map(|k| [7.5, -3.25, 2.0, 1.5, -0.75][k]).collect();
        let base = 1000.0;
        let synth: Vec<Observation> = obs
            .iter()
            .zip(&a)
            .map(|(o, row)| {
                let target = base + row.iter().zip(&planted).map(|(p, c)| p * c).sum::<f64>();
                let mut s = o.clone();
                s.mass = if opts.quadratic { target.sqrt() } else { target };
                s
            })
            .collect();
        let sfit = gmo_fit(&synth, &FitOptions { m0: Some(base), ..opts }).unwrap();
        for (u, v) in sfit.coefficients.iter().zip(&planted) {
            if (u - v).abs() > 1e-8 * v.abs() {
                pass = false;
                notes.push(format!("{name} planted {v} recovered {u}"));
            }
        }
    }
    pass &= worst <= 1e-9;
    ok(pass, format!("max rel diff vs oracle {worst:.1e}; {}", notes.join(", ")))
}

fn c12_catalog() -> Outcome {
    let mut got = BTreeSet::new();
    for o in builtin_octets() {
        for v in validate_octet(&o) {
            got.insert((v.state, v.kind));
        }
    }
    let want: BTreeSet<(String, AnomalyKind)> = [
        ("η", AnomalyKind::SignatureDimension),
        ("φ", AnomalyKind::SignatureDimension),
        ("Ξ⁻", AnomalyKind::ProseLabel),
        ("Ξ⁰", AnomalyKind::ProseLabel),
        ("p", AnomalyKind::UCoefficient),
    ]
    .into_iter()
    .map(|(s, k)| (s.to_string(), k))
    .collect();
    let states: usize = builtin_octets().iter().map(|o| o.states().count()).sum();
    ok(got == want && states == 24, format!("{states} states, flags {got:?}"))
}

fn from_printed<const N: usize>(rows: [[(i64, i64); N]; N]) -> QMat {
    QMat::from_fn(N, N, |i, j| q(rows[i][j].0, rows[i][j].1))
}

fn c13_okubo() -> Outcome {
    let basis = okubo_basis3();
    let printed_ok = printed_okubo().into_iter().all(|(i, k, m)| basis.get(i, k) == &from_printed(m));
    let rel_fail = okubo_relation_failures(&basis).len();

    let emb = su2_embedding();
    let blk = |m: &QMat| QMat::from_fn(2, 2, |i, j| m[(i, j)]);
    let printed2 = printed_okubo2();
    let mut okubo2 = true;
    for (i, j, m) in &printed2 {
        let ours = blk(&emb.a[i - 1][j - 1]);
        if (*i, *j) == (2, 1) {
            // the defining equation a^2_1 = A^2_1 fixes this one; the printed zero block is a misprint
            okubo2 &= ours == blk(basis.get(2, 1));
        } else {
            okubo2 &= ours == from_printed(*m);
        }
    }
    let printed_set = tauspin::su3::Su2Embedding {
        a: std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let m = printed2.iter().find(|(a, b, _)| (*a, *b) == (i + 1, j + 1)).unwrap().2;
                let mut full = QMat::zeros(3, 3);
                full.view_mut((0, 0), (2, 2)).copy_from(&from_printed(m));
                full
            })
        }),
    };
    let printed_consistent = su2_relation_failures(&printed_set).is_empty();
    let emb_fail = su2_relation_failures(&emb).len();

    let nine: Vec<QMat> = basis.a.iter().flatten().cloned().collect();
    let mut ad_fail = 0;
    for x in &nine {
        for y in &nine {
            if adjoint_image(&commutator_q(x, y)) != commutator_q(&adjoint_image(x), &adjoint_image(y)) {
                ad_fail += 1;
            }
        }
    }
    let basis_rank_ok = adjoint_basis().len() == 8;
    let pass = printed_ok && rel_fail == 0 && okubo2 && emb_fail == 0 && ad_fail == 0 && basis_rank_ok;
    ok(
        pass,
        format!(
            "printed A^i_k {printed_ok}, 81 relations failing {rel_fail}, embedding vs printed {okubo2} \
             (printed a^2_1 = 0 consistent: {printed_consistent}), adjoint homomorphism failures {ad_fail}/81"
        ),
    )
}

const KNOWN_RED: [u32; 3] = [5, 7, 10];

// runs without the libtest harness so every line reaches stdout
fn main() {
    let (o5, diag5, off5) = c5_bivector();
    let (o7, rows7) = c7_theorem();
    let (o10, clos) = c10_closure();
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "SU(3) degree table", c1_su3_degrees()),
        (2, "representation degrees", c2_degrees()),
        (3, "ladder and commutator suite", c3_ladders()),
        (4, "proton Lambda_3 blocks", c4_lambda3()),
        (5, "bivector metric", o5),
        (6, "Dirac L-matrices", c6_dirac_l()),
        (7, "double conjugation rule", o7),
        (8, "CPT table", c8_cpt()),
        (9, "representation search", c9_search()),
        (10, "GMO closure relations", o10),
        (11, "GMO fit oracle", c11_fit()),
        (12, "catalog validation", c12_catalog()),
        (13, "Okubo algebra", c13_okubo()),
    ];
    for (n, name, o) in &results {
        println!("{} {:>2} {:<28} {}", if o.pass { "PASS" } else { "FAIL" }, n, name, o.detail);
    }
    let red: Vec<u32> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    println!("acceptance: {}/{} pass, failing {:?}", results.len() - red.len(), results.len(), red);
    assert_eq!(red, KNOWN_RED, "failing criteria differ from the documented set");

    // 5: the literal formula on the printed order yields this diagonal
    assert!(off5);
    assert_eq!(diag5, [-1, 1, 1, -1, -1, 1]);

    // 7: the explicit sign is -I for every quaternionic type; only the rule is off
    for r in &rows7 {
        let want = if classify(r.sig) == DivisionRingKind::R { 1 } else { -1 };
        assert_eq!(r.explicit, want, "{}", r.sig);
    }
    assert!(rows7.iter().any(|r| r.explicit != r.predicted));
    assert!(rows7.iter().any(|r| r.explicit != r.factor_count_rule));

    // 10: 11.5 MeV against m0 = 1141 MeV
    assert!((clos.baryon_ratio - 11.5 / 1141.0).abs() < 1e-12);
    assert!(clos.meson_rel <= 0.07);
}
