use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use num_complex::{Complex, Complex64};
use serde_json::{json, Value};

use tauspin::catalog::{builtin_octet, validate_octet, Algebra, ParticleState};
use tauspin::clifford_cpt::{
    charge_class, classify, cpt_table, double_conjugation_sign, gamma_basis_with_cap, parity_square, pi_conj_sign,
    pi_matrix, theorem_sign, CptElement, CptPhases, DEFAULT_CAP,
};
use tauspin::mass_model::{
    baryon_closure, effective_ratio, gmo_fit, meson_closure, mgy_mass, read_observations_csv, search_rep,
    splitting_regime, FitOptions, Observation, DEFAULT_REGIME_THRESHOLD,
};
use tauspin::rwe::{bivector_metric, dirac_l_matrices, lambda3_generalized, Mat2, Metric4, BIVECTOR_ORDER};
use tauspin::spin_lines::{degree_sequence, line, spin_multiplet, tensor_structure};
use tauspin::su3::{
    admissible_upto, degrees_table, okubo_basis3, okubo_relation_failures, su2_embedding, su2_relation_failures,
};
use tauspin::{CliffordSignature, HalfInt, Octet, OctetName, RepLabel};

use crate::config::{Config, DEFAULT_MU0};
use crate::output::{Report, Table};
use crate::{Cli, CliffordCmd, Cmd, CptCmd, GmoCmd, MassInput, RepCmd, RweCmd, Su3Cmd};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_RANK: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricKind {
    Minkowski,
    Euclidean,
}

struct Ctx {
    mu0: f64,
    masses: Option<PathBuf>,
    cap: u32,
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<tauspin::Error>() {
        Some(tauspin::Error::RankDeficient { .. }) => EXIT_RANK,
        _ => EXIT_USAGE,
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let ctx = Ctx {
        mu0: cli.mu0.or(cfg.mu0_mev).unwrap_or(DEFAULT_MU0),
        masses: cfg.masses_path,
        cap: cfg.matrix_cap.unwrap_or(DEFAULT_CAP),
    };
    if !(ctx.mu0.is_finite() && ctx.mu0 > 0.0) {
        bail!("mu0 must be positive, got {}", ctx.mu0);
    }
    match &cli.cmd {
        Cmd::Rep { cmd: RepCmd::Info { l2, ldot2 } } => rep_info(&ctx, *l2, *ldot2),
        Cmd::Line { s2, count, dual } => spin_line(*s2, *count, *dual),
        Cmd::Multiplet { s2, shift } => multiplet(*s2, *shift),
        Cmd::SearchMass { ratio, spin, top } => search(&ctx, *ratio, *spin, *top),
        Cmd::Clifford { cmd: CliffordCmd::Classify { p, q } } => clifford_classify(&ctx, *p, *q),
        Cmd::Clifford { cmd: CliffordCmd::Pi { p, q } } => clifford_pi(&ctx, *p, *q),
        Cmd::Cpt { cmd: CptCmd::Table { eta_p, eta_t, eta_c } } => {
            cpt(CptPhases { eta_p: *eta_p, eta_t: *eta_t, eta_c: *eta_c })
        }
        Cmd::Rwe { cmd: RweCmd::BivectorMetric { metric } } => bivector(*metric),
        Cmd::Rwe { cmd: RweCmd::Lambda3 { l2, ldot2, blocks } } => lambda3(*l2, *ldot2, blocks.as_deref()),
        Cmd::Rwe { cmd: RweCmd::DiracL { c } } => dirac_l(*c),
        Cmd::Su3 { cmd: Su3Cmd::Degrees { max } } => su3_degrees(*max),
        Cmd::Su3 { cmd: Su3Cmd::Admissible { max_degree } } => su3_admissible(*max_degree),
        Cmd::Su3 { cmd: Su3Cmd::OkuboCheck } => okubo_check(),
        Cmd::Octet { name, validate, quarks } => octet(*name, *validate, *quarks),
        Cmd::Gmo { cmd: GmoCmd::Fit { input, quadratic, hypercharge_only, m0 } } => {
            fit(&ctx, input, *quadratic, *hypercharge_only, *m0)
        }
        Cmd::Gmo { cmd: GmoCmd::Relations { input } } => relations(&ctx, input),
    }
}

fn half(t: u32) -> HalfInt {
    HalfInt::from_twice(t as i64)
}

fn s<T: ToString>(v: T) -> String {
    v.to_string()
}

fn rep_info(ctx: &Ctx, l2: u32, ldot2: u32) -> Result<Report> {
    let rep = RepLabel::from_twice(l2, ldot2);
    let t = tensor_structure(rep);
    let gn = rep.to_gelfand_naimark();
    let cg: Vec<String> = rep.clebsch_gordan_spins().iter().map(s).collect();
    let ratio = effective_ratio(rep);
    let mass = mgy_mass(rep, ctx.mu0);
    Ok(Report {
        text: vec![
            format!("label: {rep}"),
            format!("degree: {}", rep.degree()),
            format!("spin: {}", rep.spin()),
            format!("spins: {}", cg.join(" ")),
            format!("tensor: Sym({}) x Sym({})", t.k, t.r),
            format!("complex_algebra: C{}", t.complex_dim),
            format!("spinspace: 2^{}", t.spinspace_dim_log2),
            format!("gelfand_naimark: ({}, {})", gn.l0, gn.l1),
            format!("effective_ratio: {ratio}"),
            format!("mass_mev: {}", ratio_f64(ratio) * ctx.mu0),
            format!("mgy_mass_mev: {mass}"),
        ],
        json: json!({
            "label": rep, "degree": rep.degree(), "spin": rep.spin(), "spins": cg,
            "tensor": t, "gelfand_naimark": gn, "effective_ratio": s(ratio),
            "mass_mev": ratio_f64(ratio) * ctx.mu0, "mgy_mass_mev": mass, "mu0_mev": ctx.mu0,
        }),
        ..Default::default()
    })
}

fn ratio_f64(r: tauspin::Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn rep_rows(reps: &[RepLabel]) -> (Table, Value) {
    let mut t = Table::new(&["index", "l", "ldot", "degree"]);
    for (i, r) in reps.iter().enumerate() {
        t.push(vec![s(i), s(r.l), s(r.ldot), s(r.degree())]);
    }
    (t, json!(reps.iter().map(|r| json!({"l": r.l, "ldot": r.ldot, "degree": r.degree()})).collect::<Vec<_>>()))
}

fn spin_line(s2: u32, count: usize, dual: bool) -> Result<Report> {
    let l = line(half(s2), count, dual);
    let (table, entries) = rep_rows(&l.entries);
    Ok(Report {
        text: vec![format!("spin: {}", l.spin), format!("dual: {dual}")],
        table: Some(table),
        json: json!({"spin": l.spin, "dual": dual, "entries": entries, "degrees": degree_sequence(&l)}),
        ..Default::default()
    })
}

fn multiplet(s2: u32, shift: u32) -> Result<Report> {
    let m = spin_multiplet(half(s2), shift);
    let (table, entries) = rep_rows(&m);
    Ok(Report {
        text: vec![format!("spin: {}", half(s2)), format!("shift: {shift}")],
        table: Some(table),
        json: json!({"spin": half(s2), "shift": shift, "members": entries}),
        ..Default::default()
    })
}

fn search(ctx: &Ctx, ratio: f64, spin: u32, top: usize) -> Result<Report> {
    let hits = search_rep(ratio, half(spin), top)?;
    let mut t = Table::new(&["rank", "l", "ldot", "degree", "effective_ratio", "distance", "mass_mev"]);
    for h in &hits {
        t.push(vec![
            s(h.rank),
            s(h.rep.l),
            s(h.rep.ldot),
            s(h.degree),
            s(h.effective_ratio),
            s(h.distance),
            s(ratio_f64(h.effective_ratio) * ctx.mu0),
        ]);
    }
    let js: Vec<Value> = hits
        .iter()
        .map(|h| {
            json!({"rank": h.rank, "rep": h.rep, "degree": h.degree, "effective_ratio": s(h.effective_ratio),
                   "mgy_ratio": h.mgy_ratio, "distance": h.distance,
                   "mass_mev": ratio_f64(h.effective_ratio) * ctx.mu0})
        })
        .collect();
    Ok(Report {
        text: vec![format!("target_ratio: {ratio}"), format!("spin: {}", half(spin))],
        table: Some(t),
        json: json!({"target_ratio": ratio, "spin": half(spin), "mu0_mev": ctx.mu0, "hits": js}),
        ..Default::default()
    })
}

fn clifford_classify(ctx: &Ctx, p: u32, q: u32) -> Result<Report> {
    let sig = CliffordSignature::new(p, q);
    let ring = classify(sig);
    let parity = parity_square(sig).ok();
    let class = charge_class(false, ring);
    let mut text = vec![
        format!("signature: Cl{p},{q}"),
        format!("n: {}", sig.n()),
        format!("p_minus_q_mod8: {}", sig.d_mod8()),
        format!("ring: {ring}"),
        format!("charge_class_real: {}", class.label()),
        format!("parity_square: {}", parity.map_or("unassigned".to_string(), s)),
    ];
    let mut js = json!({
        "p": p, "q": q, "n": sig.n(), "p_minus_q_mod8": sig.d_mod8(), "ring": s(ring),
        "charge_class_real": class, "parity_square": parity,
    });
    // the explicit check needs matrices; skip it past the cap or for odd p - q
    if sig.n() <= ctx.cap && sig.d_mod8() % 2 == 0 {
        let dc = double_conjugation_sign(sig)?;
        text.push(format!("double_conjugation_explicit: {}", dc.explicit));
        text.push(format!("double_conjugation_mod4_rule: {}", dc.predicted));
        js["double_conjugation"] = json!(dc);
    }
    Ok(Report { text, json: js, ..Default::default() })
}

fn gfmt(z: Complex<i64>) -> String {
    match (z.re, z.im) {
        (r, 0) => s(r),
        (0, 1) => "i".into(),
        (0, -1) => "-i".into(),
        (0, i) => format!("{i}i"),
        (r, i) => format!("{r}{i:+}i"),
    }
}

fn cfmt(z: Complex64) -> String {
    let r = if z.re == 0.0 { 0.0 } else { z.re };
    let i = if z.im == 0.0 { 0.0 } else { z.im };
    if i == 0.0 {
        s(r)
    } else if r == 0.0 {
        format!("{i}i")
    } else {
        format!("{r}{i:+}i")
    }
}

fn clifford_pi(ctx: &Ctx, p: u32, q: u32) -> Result<Report> {
    let sig = CliffordSignature::new(p, q);
    let basis = gamma_basis_with_cap(sig, ctx.cap)?;
    let pi = pi_matrix(&basis)?;
    let explicit = pi_conj_sign(&pi)?;
    let predicted = theorem_sign(classify(sig), pi.a, pi.b);
    let n = pi.matrix.nrows();
    let mut t = Table::new(&(0..n).map(|j| format!("c{j}")).collect::<Vec<_>>());
    let mut rows = Vec::new();
    for i in 0..n {
        let r: Vec<String> = (0..n).map(|j| gfmt(pi.matrix[(i, j)])).collect();
        t.push(r.clone());
        rows.push(r);
    }
    Ok(Report {
        text: vec![
            format!("signature: Cl{p},{q}"),
            format!("rule: {:?}", pi.rule),
            format!("complex_generators: {}", pi.a),
            format!("real_generators: {}", pi.b),
            format!("factors: {:?}", pi.factors),
            format!("pi_conj_pi: {explicit}"),
            format!("mod4_rule: {predicted}"),
        ],
        table: Some(t),
        json: json!({
            "p": p, "q": q, "rule": format!("{:?}", pi.rule), "a": pi.a, "b": pi.b, "factors": pi.factors,
            "generators": basis.words, "pi_conj_pi": explicit, "mod4_rule": predicted, "matrix": rows,
        }),
        ..Default::default()
    })
}

fn cpt(ph: CptPhases) -> Result<Report> {
    let tab = cpt_table();
    let mut t = Table::new(&["row", "col", "product", "phase", "word", "value"]);
    let mut cells = Vec::new();
    let mut header = vec![String::new()];
    header.extend(CptElement::ALL.map(|c| s(c.name())));
    let mut grid = Table::new(&header);
    for r in CptElement::ALL {
        let mut line = vec![s(r.name())];
        for c in CptElement::ALL {
            let cell = tab.cell(r, c);
            let v = cell.phase.eval(&ph);
            let prod = r.mul(c);
            t.push(vec![s(r.name()), s(c.name()), s(prod.name()), s(cell.phase), cell.word_string(), cfmt(v)]);
            line.push(format!("{} {}", cell.phase, cell.word_string()));
            cells.push(json!({
                "row": r.name(), "col": c.name(), "product": prod.name(), "phase": s(cell.phase),
                "exponents": {"ec": cell.phase.ec, "ep": cell.phase.ep, "et": cell.phase.et},
                "word": cell.word_string(), "value": [v.re, v.im],
            }));
        }
        grid.push(line);
    }
    let phases = json!({"eta_p": [ph.eta_p.re, ph.eta_p.im], "eta_t": [ph.eta_t.re, ph.eta_t.im],
                        "eta_c": [ph.eta_c.re, ph.eta_c.im]});
    let text = grid.render().lines().map(String::from).collect();
    Ok(Report { text, table: Some(t), csv_only: true, json: json!({"phases": phases, "cells": cells}), exit: 0 })
}

fn bivector(kind: MetricKind) -> Result<Report> {
    let g = match kind {
        MetricKind::Minkowski => Metric4::minkowski(),
        MetricKind::Euclidean => Metric4::euclidean(),
    };
    let b = bivector_metric(&g)?;
    let labels: Vec<String> = BIVECTOR_ORDER.iter().map(|(i, j)| format!("{i}{j}")).collect();
    let mut header = vec!["pair".to_string()];
    header.extend(labels.iter().cloned());
    let mut t = Table::new(&header);
    for (i, row) in b.iter().enumerate() {
        let mut r = vec![labels[i].clone()];
        r.extend(row.iter().map(s));
        t.push(r);
    }
    Ok(Report {
        text: vec![format!("metric: {kind:?}")],
        table: Some(t),
        json: json!({"metric": format!("{kind:?}"), "order": labels, "matrix": b}),
        ..Default::default()
    })
}

fn lambda3(l2: u32, ldot2: u32, blocks: Option<&[usize]>) -> Result<Report> {
    let lam = lambda3_generalized(half(l2), half(ldot2));
    let pick: Vec<usize> = match blocks {
        Some(b) => {
            if let Some(bad) = b.iter().find(|&&i| i >= lam.blocks.len()) {
                bail!("block {bad} out of range 0..{}", lam.blocks.len());
            }
            b.to_vec()
        }
        None => (0..lam.blocks.len()).collect(),
    };
    let mut t = Table::new(&["block", "mdot", "diagonal"]);
    let mut js = Vec::new();
    for &i in &pick {
        let b = &lam.blocks[i];
        let d: Vec<String> = b.diag.iter().map(s).collect();
        t.push(vec![s(i), s(b.mdot), d.join(" ")]);
        js.push(json!({"block": i, "mdot": b.mdot, "diagonal": d}));
    }
    let pairing = lam.pairing();
    Ok(Report {
        text: vec![
            format!("label: ({}, {})", lam.l, lam.ldot),
            format!("dimension: {}", lam.dimension()),
            format!("trace: {}", lam.trace()),
            format!("pm_paired: {}", pairing.paired),
        ],
        table: Some(t),
        json: json!({"l": lam.l, "ldot": lam.ldot, "dimension": lam.dimension(), "trace": s(lam.trace()),
                     "pm_paired": pairing.paired, "blocks": js}),
        ..Default::default()
    })
}

fn dirac_l(c: f64) -> Result<Report> {
    if !c.is_finite() {
        bail!("c must be finite");
    }
    let d = dirac_l_matrices(c);
    let mut t = Table::new(&["matrix", "r0c0", "r0c1", "r1c0", "r1c1"]);
    let row = |name: String, m: &Mat2| vec![name, cfmt(m[0][0]), cfmt(m[0][1]), cfmt(m[1][0]), cfmt(m[1][1])];
    let js = |m: &Mat2| json!(m.map(|r| r.map(|z| [z.re, z.im])));
    let mut out = Vec::new();
    for (j, m) in d.l.iter().enumerate() {
        t.push(row(format!("L{}", j + 1), m));
        out.push(json!({"name": format!("L{}", j + 1), "entries": js(m)}));
    }
    for (j, m) in d.l_dot.iter().enumerate() {
        t.push(row(format!("L*{}", j + 1), m));
        out.push(json!({"name": format!("L*{}", j + 1), "entries": js(m)}));
    }
    Ok(Report { text: vec![format!("c: {c}")], table: Some(t), json: json!({"c": c, "matrices": out}), ..Default::default() })
}

fn su3_degrees(max: u32) -> Result<Report> {
    let g = degrees_table(max);
    let mut header = vec!["p\\q".to_string()];
    header.extend((0..=max).map(s));
    let mut t = Table::new(&header);
    for (p, row) in g.iter().enumerate() {
        let mut r = vec![s(p)];
        r.extend(row.iter().map(s));
        t.push(r);
    }
    Ok(Report { table: Some(t), json: json!({"max": max, "degrees": g}), ..Default::default() })
}

fn su3_admissible(max_degree: u64) -> Result<Report> {
    let list = admissible_upto(max_degree);
    let mut t = Table::new(&["degree", "p", "q"]);
    for (d, pq) in &list {
        t.push(vec![s(d), s(pq.p), s(pq.q)]);
    }
    let js: Vec<Value> = list.iter().map(|(d, pq)| json!({"degree": d, "p": pq.p, "q": pq.q})).collect();
    Ok(Report { table: Some(t), json: json!({"max_degree": max_degree, "admissible": js}), ..Default::default() })
}

fn okubo_check() -> Result<Report> {
    let b = okubo_basis3();
    let f3 = okubo_relation_failures(&b);
    let trace_zero = b.trace_sum().iter().all(|v| *v == tauspin::Rational64::from_integer(0));
    let f2 = su2_relation_failures(&su2_embedding());
    let ok = f3.is_empty() && f2.is_empty() && trace_zero;
    Ok(Report {
        text: vec![
            format!("su3_relation_failures: {}", f3.len()),
            format!("su3_trace_sum_zero: {trace_zero}"),
            format!("su2_relation_failures: {}", f2.len()),
            format!("status: {}", if ok { "ok" } else { "failed" }),
        ],
        json: json!({"su3_relation_failures": f3, "su3_trace_sum_zero": trace_zero,
                     "su2_relation_failures": f2, "ok": ok}),
        exit: if ok { 0 } else { EXIT_VALIDATION },
        ..Default::default()
    })
}

fn algebra_ring(st: &ParticleState) -> String {
    match st.algebra {
        Algebra::Complex { .. } => "C".into(),
        Algebra::Real { sig, .. } => s(classify(sig)),
    }
}

fn octet(name: OctetName, validate: bool, quarks: bool) -> Result<Report> {
    let o = builtin_octet(name);
    let mut header =
        vec!["multiplet", "state", "ascii", "rep", "degree", "algebra", "spinspace", "ring", "charge", "Q", "Y", "I", "U", "mass_mev"];
    if quarks {
        header.push("quarks");
    }
    let mut t = Table::new(&header);
    let mut states = Vec::new();
    for m in &o.multiplets {
        for st in &m.members {
            let mut r = vec![
                format!("{} {}", m.label.symbol(), m.name),
                s(st.name),
                s(st.ascii),
                st.label(),
                s(st.rep.degree()),
                s(st.algebra),
                format!("2^{}", st.spinspace_log2),
                algebra_ring(st),
                s(st.charge_class().label()),
                s(st.qn.q),
                s(st.qn.y),
                s(st.qn.i),
                s(st.qn.u),
                st.mass_exp.map_or(String::new(), s),
            ];
            if quarks {
                r.push(st.quark_string.unwrap_or("").to_string());
            }
            t.push(r);
            let mut js = serde_json::to_value(st)?;
            js["multiplet"] = json!(m.name);
            js["label"] = json!(st.label());
            states.push(js);
        }
    }
    let mut text = vec![
        format!("octet: {}", o.name),
        format!("baryon_number: {}", o.baryon_number),
        format!("spin: {}", o.spin),
        format!("parity: {}", o.parity2),
    ];
    let mut js = json!({"octet": s(o.name), "baryon_number": o.baryon_number, "spin": o.spin,
                        "parity": o.parity2, "states": states});
    let mut exit = 0;
    let mut table = t;
    if validate {
        let v = validate_octet(&o);
        let mut vt = Table::new(&["state", "kind", "expected", "found"]);
        for x in &v {
            vt.push(vec![x.state.clone(), format!("{:?}", x.kind), x.expected.clone(), x.found.clone()]);
        }
        text.push(format!("violations: {}", v.len()));
        js["violations"] = serde_json::to_value(&v)?;
        if !v.is_empty() {
            exit = EXIT_VALIDATION;
        }
        // text shows both tables, csv the violations only
        text.push(String::new());
        text.extend(table.render().lines().map(String::from));
        table = vt;
    }
    Ok(Report { text, table: Some(table), json: js, exit, ..Default::default() })
}

fn observations(ctx: &Ctx, input: &MassInput) -> Result<(Octet, Vec<Observation>, bool)> {
    let o = builtin_octet(input.octet);
    let path = input.masses.clone().or_else(|| ctx.masses.clone());
    match path {
        Some(p) => {
            let f = std::fs::File::open(&p).with_context(|| format!("opening {}", p.display()))?;
            let obs = read_observations_csv(f)?;
            Ok((o, obs, true))
        }
        None => {
            let obs = o.observations();
            Ok((o, obs, false))
        }
    }
}

fn fit(ctx: &Ctx, input: &MassInput, quadratic: bool, hypercharge_only: bool, m0: Option<f64>) -> Result<Report> {
    let (o, obs, from_file) = observations(ctx, input)?;
    let opts = FitOptions { quadratic, beta_zero: o.baryon_number == 0, hypercharge_only, m0 };
    let rep = match gmo_fit(&obs, &opts) {
        Ok(r) => r,
        Err(e @ tauspin::Error::RankDeficient { .. }) => {
            if let tauspin::Error::RankDeficient { null_space, .. } = &e {
                let names: Vec<&str> = opts.columns().iter().map(|c| c.name()).collect();
                eprintln!("columns: {}", names.join(", "));
                for v in null_space {
                    eprintln!("null direction: {v:?}");
                }
            }
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    let unit = if quadratic { "MeV^2" } else { "MeV" };
    let mut t = Table::new(&["state", "observed", "fitted", "residual"]);
    for r in &rep.residuals {
        t.push(vec![r.name.clone(), s(r.observed), s(r.fitted), s(r.residual)]);
    }
    let mut text = vec![
        format!("octet: {}", o.name),
        format!("source: {}", if from_file { "csv" } else { "catalog" }),
        format!("mode: {}", if quadratic { "quadratic" } else { "linear" }),
        format!("m0: {} {unit}", rep.params.m0),
        format!("rank: {}", rep.rank),
        format!("rms: {} {unit}", rep.rms),
    ];
    for (c, v) in rep.columns.iter().zip(&rep.coefficients) {
        text.push(format!("{}: {v}", c.name()));
    }
    let coeffs: serde_json::Map<String, Value> =
        rep.columns.iter().zip(&rep.coefficients).map(|(c, v)| (c.name().to_string(), json!(v))).collect();
    Ok(Report {
        text,
        table: Some(t),
        json: json!({"octet": s(o.name), "source": if from_file { "csv" } else { "catalog" }, "quadratic": quadratic,
                     "hypercharge_only": hypercharge_only, "m0": rep.params.m0, "rank": rep.rank, "rms": rep.rms,
                     "coefficients": coeffs, "params": rep.params, "residuals": rep.residuals}),
        ..Default::default()
    })
}

/// Multiplet masses: catalog values, or member means when read from CSV
/// (grouped by isospin and hypercharge).
fn multiplet_masses(o: &Octet, obs: &[Observation], from_file: bool) -> Result<[f64; 4]> {
    let pick = |idx: usize| -> Result<f64> {
        let m = &o.multiplets[idx];
        if !from_file {
            return Ok(m.mass_exp);
        }
        let (i, y) = (m.members[0].qn.i, m.members[0].qn.y);
        let v: Vec<f64> = obs.iter().filter(|x| x.qn.i == i && x.qn.y == y).map(|x| x.mass).collect();
        if v.is_empty() {
            bail!("no CSV row with I = {i}, Y = {y} for multiplet {}", m.name);
        }
        Ok(v.iter().sum::<f64>() / v.len() as f64)
    };
    Ok([pick(0)?, pick(1)?, pick(2)?, pick(3)?])
}

fn relations(ctx: &Ctx, input: &MassInput) -> Result<Report> {
    let (o, obs, from_file) = observations(ctx, input)?;
    let [triplet, doublet, doublet_bar, singlet] = multiplet_masses(&o, &obs, from_file)?;
    let rel = if o.baryon_number != 0 {
        // Xi + N = (3 Lambda + Sigma)/2
        baryon_closure(doublet_bar, doublet, singlet, triplet)
    } else {
        meson_closure(singlet, triplet, doublet)
    };
    let sq: Vec<f64> = [triplet, doublet, doublet_bar, singlet].iter().map(|m| m * m).collect();
    let mean = sq.iter().sum::<f64>() / 4.0;
    let spread = sq.iter().cloned().fold(f64::MIN, f64::max) - sq.iter().cloned().fold(f64::MAX, f64::min);
    let regime = splitting_regime(spread, mean, DEFAULT_REGIME_THRESHOLD)?;
    let m0 = (triplet + doublet + doublet_bar + singlet) / 4.0;
    let mut text = vec![
        format!("octet: {}", o.name),
        format!("relation: {}", rel.name),
        format!("lhs: {}", rel.lhs),
        format!("rhs: {}", rel.rhs),
        format!("abs_diff: {}", rel.abs),
        format!("rel_diff: {}", rel.rel),
    ];
    let mut js = json!({"octet": s(o.name), "relation": rel, "regime": format!("{regime:?}"),
                        "multiplet_masses": [triplet, doublet, doublet_bar, singlet]});
    // the linear relation is also quoted against m0, the mean multiplet mass
    if o.baryon_number != 0 {
        text.push(format!("m0: {m0}"));
        text.push(format!("rel_to_m0: {}", rel.abs / m0));
        js["m0"] = json!(m0);
        js["rel_to_m0"] = json!(rel.abs / m0);
    }
    text.push(format!("regime: {regime:?}"));
    Ok(Report {
        text,
        json: js,
        ..Default::default()
    })
}
