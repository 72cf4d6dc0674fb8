//! The subcommands, each producing a [`RunReport`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use qes_core::counts;
use qes_core::decompose::{enumerate_preservers, Decomposer, Decomposition};
use qes_core::generators::{casimir_sl2_holds, verify_relations_sl3};
use qes_core::kernels::{filtered_kernel_dim_sl2, realized_rank, symbol_kernel_dim};
use qes_core::lattice::{basis_g24_image, basis_g24_image_order, basis_sl3, basis_sl3_order, maximal_length_monomials};
use qes_core::module::nonpositive_y_pairs;
use qes_core::superops::{
    closure_analysis, enumerate_super_preservers, max_order, rank2_basis, rank2_express, Block, ClosureReport,
    ClosureStatus, Rank2Decomposition, SuperFamily,
};
use qes_core::{DiffOp, Error, GeneratorFamily, ModuleSpec, Operator, Rational};

use crate::parse::{parse_family, parse_matrix_operator, parse_module, parse_operator, parse_super, ParseError};
use crate::report::{RunReport, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub type CliResult = Result<RunReport, CliError>;

pub fn rat(q: &Rational) -> String {
    q.to_string()
}

fn inputs(pairs: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    pairs.iter().filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v))).collect()
}

fn check(name: impl Into<String>, holds: bool) -> Value {
    json!({"check": name.into(), "holds": holds})
}

fn tally(checks: &[Value]) -> (usize, usize) {
    let passed = checks.iter().filter(|c| c["holds"] == json!(true)).count();
    (passed, checks.len())
}

fn require<T>(v: Option<T>, what: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing {what}")))
}

fn relation_checks(fam: GeneratorFamily) -> Vec<Value> {
    let mut out = Vec::new();
    match fam {
        GeneratorFamily::Sl2(n) => {
            out.push(check(format!("casimir n={n}"), casimir_sl2_holds(n, false)));
            out.push(check(format!("perturbed casimir n={n} fails"), !casimir_sl2_holds(n, true)));
        }
        GeneratorFamily::G15(n) => {
            for r in verify_relations_sl3(n) {
                out.push(check(format!("relation {} n={n}", r.index), r.holds()));
            }
        }
        _ => {}
    }
    out.push(check(format!("{fam} closes under commutators"), fam.structure_table().is_ok()));
    out
}

/// `verify relations`: Casimir for `sl2`, the nine quadratic relations for
/// `g15`, closure of the bracket table for every family. A bare `sl2` or
/// `g15` sweeps `n = 0..=10` or `0..=6`.
pub fn verify_relations(family: &str) -> CliResult {
    let fams: Vec<GeneratorFamily> = match parse_family(family, None) {
        Ok(f) => vec![f],
        Err(e) => match family.trim() {
            "sl2" => (0..=10).map(GeneratorFamily::Sl2).collect(),
            "g15" => (0..=6).map(GeneratorFamily::G15).collect(),
            _ => return Err(e.into()),
        },
    };
    let checks: Vec<Value> = fams.par_iter().flat_map(|f| relation_checks(*f)).collect();
    let (passed, total) = tally(&checks);
    Ok(RunReport::new(
        "verify relations",
        inputs(&[("family", Some(family.into()))]),
        json!({"checks": checks, "passed": passed, "total": total}),
        Verdict::from_counts(passed, total),
    ))
}

/// What the finite/infinite boundary predicts for a family.
pub fn expected_closure(fam: &SuperFamily) -> Option<usize> {
    match *fam {
        SuperFamily::Rect { delta, gamma, .. } => match (delta, gamma) {
            (0, 0) => Some(9),
            (1, 0) | (0, 1) => Some(11),
            _ => None,
        },
        SuperFamily::Tri { delta, .. } => match delta {
            0 => Some(11),
            1 => Some(15),
            _ => None,
        },
        SuperFamily::Stair { r, .. } => Some(10 + 2 * r as usize),
    }
}

pub fn closure_json(rep: &ClosureReport) -> Value {
    let status = match rep.status {
        ClosureStatus::Finite => "finite",
        ClosureStatus::Exceeded => "exceeded",
    };
    json!({
        "status": status,
        "dim_sequence": rep.dim_sequence,
        "final_dim": rep.final_dim,
        "signature": rep.signature.as_ref().map(|s| json!({"even": s.even, "odd": s.odd, "derived": s.derived})),
        "identification": rep.identification,
    })
}

/// Whether a closure report agrees with the finite/infinite boundary.
pub fn closure_agrees(fam: &SuperFamily, rep: &ClosureReport) -> bool {
    match expected_closure(fam) {
        Some(d) => rep.status == ClosureStatus::Finite && rep.final_dim == Some(d),
        None => rep.status == ClosureStatus::Exceeded && rep.dim_sequence.windows(2).all(|w| w[1] > w[0]),
    }
}

/// `verify closure`: bracket table of a scalar family, or the graded
/// closure of a superalgebra family compared with the expected boundary.
pub fn verify_closure(family: Option<&str>, sup: Option<&str>, cap: u32) -> CliResult {
    if let Some(s) = sup {
        let fam = parse_super(s)?;
        let rep = closure_analysis(&fam, cap)?;
        let ok = closure_agrees(&fam, &rep);
        let mut results = closure_json(&rep);
        results["expected_dim"] = json!(expected_closure(&fam));
        if rep.status == ClosureStatus::Exceeded {
            results["note"] = json!("still growing at the cap: evidence of infinite dimension, not a proof");
        }
        return Ok(RunReport::new(
            "verify closure",
            inputs(&[("super", Some(s.into())), ("cap", Some(cap.to_string()))]),
            results,
            if ok { Verdict::Pass } else { Verdict::Fail },
        ));
    }
    let f = require(family, "--family or --super")?;
    let fam = parse_family(f, None)?;
    let (results, ok) = match fam.structure_table() {
        Ok(t) => {
            let lines: Vec<String> = t.brackets.iter().map(|b| t.format_bracket(b)).collect();
            (json!({"closed": true, "brackets": lines}), true)
        }
        Err(e) => (json!({"closed": false, "error": e.to_string()}), false),
    };
    Ok(RunReport::new(
        "verify closure",
        inputs(&[("family", Some(f.into()))]),
        results,
        if ok { Verdict::Pass } else { Verdict::Fail },
    ))
}

fn count_check(name: String, found: i64, expected: i64) -> Value {
    json!({"check": name, "found": found, "expected": expected, "holds": found == expected})
}

fn sl3_counts(n: u32, k: u32, cap: usize) -> Result<Vec<Value>, CliError> {
    let ops = GeneratorFamily::G15(n).ops();
    let mut out = Vec::new();
    for t in 0..=k {
        out.push(count_check(format!("order-{t} words"), basis_sl3_order(t).len() as i64, counts::sl3_order_words(t as u64) as i64));
    }
    out.push(count_check(
        format!("rank of realized words, order <= {k}, n={n}"),
        realized_rank(&basis_sl3(k), &ops) as i64,
        counts::sl3_image_dim(k as u64) as i64,
    ));
    if k <= n {
        let found = enumerate_preservers(&ModuleSpec::Tri(n), k, cap)?.len();
        out.push(count_check(format!("preservers of T({n}) of order <= {k}"), found as i64, counts::sl3_image_dim(k as u64) as i64));
    }
    for t in 2..=k.min(3) {
        out.push(count_check(
            format!("symbol kernel in degree {t}"),
            symbol_kernel_dim(&ops, t) as i64,
            counts::ker_symbol_sl3(t as u64) as i64,
        ));
    }
    Ok(out)
}

fn super_counts(fam: &SuperFamily, k: u32, cap: usize) -> Result<Vec<Value>, CliError> {
    let b = rank2_basis(fam, k)?;
    let mut out = Vec::new();
    let c = |bl| b.count(bl) as i64;
    match *fam {
        SuperFamily::Tri { n, delta } => {
            if k + delta <= n {
                let (kk, d) = (k as i64, delta as i64);
                out.push(count_check("N1".into(), c(Block::First), counts::sl3_image_dim(k as u64) as i64));
                out.push(count_check("N2".into(), c(Block::Second), counts::sl3_image_dim(k as u64) as i64));
                out.push(count_check("N+".into(), c(Block::Plus), counts::tri_super_n(kk, d, true)));
                out.push(count_check("N-".into(), c(Block::Minus), counts::tri_super_n(kk, d, false)));
                out.push(count_check("total".into(), b.len() as i64, counts::tri_super_dim(kk, d)));
            }
        }
        SuperFamily::Stair { r, p, q } => {
            if k >= p {
                let to_i = |q: Rational| q.to_integer().try_into().unwrap_or(-1i64);
                out.push(count_check("N-".into(), c(Block::Minus), to_i(counts::n_r_minus(r as i64, p as i64, q as i64))));
                out.push(count_check("N+".into(), c(Block::Plus), to_i(counts::n_r_plus(r as i64, p as i64, q as i64))));
                let m = fam.module();
                out.push(count_check("N1".into(), c(Block::First), to_i(counts::n_rpq(r as i64, p as i64 - 1, q as i64))));
                out.push(count_check("N2".into(), c(Block::Second), to_i(counts::n_rpq(r as i64, p as i64, q as i64))));
                out.push(count_check("N- by linear algebra".into(), c(Block::Minus), nonpositive_y_pairs(&m.first, &m.second) as i64));
            }
        }
        SuperFamily::Rect { .. } => {
            if k >= max_order(fam) {
                let d = fam.module().dim() as i64;
                out.push(count_check("total".into(), b.len() as i64, d * d));
            }
        }
    }
    let enumerated = enumerate_super_preservers(&fam.module(), k, cap)?;
    if !matches!(fam, SuperFamily::Stair { .. }) {
        out.push(count_check("basis size vs enumerated preservers".into(), b.len() as i64, enumerated.len() as i64));
    }
    Ok(out)
}

/// `verify counts`: closed-form counts against enumeration and rank.
pub fn verify_counts(family: Option<&str>, module: Option<&str>, sup: Option<&str>, k: Option<u32>, cap: usize) -> CliResult {
    let k_in = k;
    let checks: Vec<Value> = if let Some(s) = sup {
        let fam = parse_super(s)?;
        super_counts(&fam, k.unwrap_or(max_order(&fam)), cap)?
    } else {
        let f = require(family, "--family or --super")?;
        let fam = parse_family(f, k)?;
        match fam {
            GeneratorFamily::G15(n) => sl3_counts(n, k.unwrap_or(n), cap)?,
            GeneratorFamily::Sl2(n) => {
                let ops = fam.ops();
                let k = k.unwrap_or(n.max(2));
                let mut v = Vec::new();
                for t in 0..=k {
                    v.push(count_check(format!("filtered kernel, degree <= {t}"), filtered_kernel_dim_sl2(&ops, t) as i64, counts::ker_rho_1d(t as u64) as i64));
                    v.push(count_check(format!("symbol kernel, degree {t}"), symbol_kernel_dim(&ops, t) as i64, counts::ker_symbol_1d(t as u64) as i64));
                }
                v
            }
            GeneratorFamily::G24 { r, p } => {
                let k = k.unwrap_or(p);
                let ops = fam.ops();
                let mut v = Vec::new();
                let mut total = 0;
                for t in 0..=k {
                    let words = basis_g24_image_order(r, t).len() as i64;
                    total += words;
                    v.push(count_check(format!("order-{t} words"), words, counts::g24_order_words(r as u64, t as u64) as i64));
                }
                v.push(count_check(format!("rank of realized words, order <= {k}"), realized_rank(&basis_g24_image(r, k), &ops) as i64, total));
                let spec = match module {
                    Some(m) => parse_module(m)?,
                    None => ModuleSpec::Stair { r, p, q: p / r },
                };
                fam.check_module(&spec)?;
                if let ModuleSpec::Stair { q, .. } = spec {
                    let dec = Decomposer::new(fam, spec)?;
                    let expected: i64 = counts::n_rpq(r as i64, p as i64, q as i64).to_integer().try_into().unwrap_or(-1);
                    v.push(count_check("effective words".into(), qes_core::lattice::basis_g24_effective(r, p, q).len() as i64, expected));
                    v.push(count_check("independent projections".into(), dec.rank() as i64, nonpositive_y_pairs(&spec, &spec) as i64));
                }
                v
            }
            GeneratorFamily::G11(n, m) => {
                let spec = ModuleSpec::Rect(n, m);
                let dec = Decomposer::new(fam, spec)?;
                let d = spec.dim() as i64;
                vec![count_check("independent projections".into(), dec.rank() as i64, d * d)]
            }
        }
    };
    let (passed, total) = tally(&checks);
    Ok(RunReport::new(
        "verify counts",
        inputs(&[
            ("family", family.map(String::from)),
            ("module", module.map(String::from)),
            ("super", sup.map(String::from)),
            ("k", k_in.map(|k| k.to_string())),
        ]),
        json!({"checks": checks, "passed": passed, "total": total}),
        Verdict::from_counts(passed, total),
    ))
}

/// `verify preservation`: every generator preserves the module.
pub fn verify_preservation(family: Option<&str>, module: Option<&str>, sup: Option<&str>) -> CliResult {
    let mut rows = Vec::new();
    if let Some(s) = sup {
        let fam = parse_super(s)?;
        let m = fam.module();
        for g in fam.generators() {
            let w = m.escape_witness(&g.op);
            rows.push(json!({"generator": g.name, "holds": w.is_none(), "witness": w}));
        }
    } else {
        let f = require(family, "--family or --super")?;
        let fam = parse_family(f, None)?;
        let spec = match module {
            Some(m) => parse_module(m)?,
            None => match fam {
                GeneratorFamily::G24 { r, p } => ModuleSpec::Stair { r, p, q: p / r },
                _ => fam.natural_module(),
            },
        };
        fam.check_module(&spec)?;
        for (name, op) in fam.names().into_iter().zip(fam.ops()) {
            let w = spec.escape_witness(&op, &spec).map(|(e, img)| format!("x^{}*y^{} -> {}", e.i, e.j, img));
            rows.push(json!({"generator": name, "holds": w.is_none(), "witness": w}));
        }
    }
    let (passed, total) = tally(&rows);
    Ok(RunReport::new(
        "verify preservation",
        inputs(&[("family", family.map(String::from)), ("module", module.map(String::from)), ("super", sup.map(String::from))]),
        json!({"generators": rows, "passed": passed, "total": total}),
        Verdict::from_counts(passed, total),
    ))
}

pub fn decomposition_json(d: &Decomposition, names: &[String]) -> Value {
    let words: Vec<Value> = d.words.iter().map(|(w, c)| json!({"word": w.format(names), "coeff": rat(c)})).collect();
    json!({
        "status": d.status().to_string(),
        "words": words,
        "kernel_remainder": d.kernel_remainder.to_string(),
        "residue": d.residue.to_string(),
        "min_poly_degree": d.min_poly_degree,
    })
}

pub fn rank2_json(d: &Rank2Decomposition, fam: &SuperFamily) -> Result<Value, CliError> {
    let basis = rank2_basis(fam, 0)?;
    let words: Vec<Value> = d.words.iter().map(|(w, c)| json!({"word": basis.format(w), "coeff": rat(c)})).collect();
    Ok(json!({
        "status": d.status().to_string(),
        "words": words,
        "kernel_remainder": d.kernel_remainder.to_string(),
        "residue": d.residue.to_string(),
        "min_poly_degree": d.max_degree,
        "max_word_order": d.max_order,
    }))
}

/// `decompose`: express an operator in a family's monomials.
pub fn decompose(operator: &str, family: Option<&str>, module: Option<&str>, sup: Option<&str>) -> CliResult {
    let results = if let Some(s) = sup {
        let fam = parse_super(s)?;
        let t = parse_matrix_operator(operator)?;
        let d = rank2_express(&t, &fam)?;
        rank2_json(&d, &fam)?
    } else {
        let fam = parse_family(require(family, "--family or --super")?, None)?;
        let spec = match module {
            Some(m) => parse_module(m)?,
            None => fam.natural_module(),
        };
        let t = parse_operator(operator)?;
        let d = Decomposer::new(fam, spec)?.express(&t)?;
        decomposition_json(&d, &fam.names())
    };
    Ok(RunReport::new(
        "decompose",
        inputs(&[
            ("operator", Some(operator.into())),
            ("family", family.map(String::from)),
            ("module", module.map(String::from)),
            ("super", sup.map(String::from)),
        ]),
        results,
        Verdict::Pass,
    ))
}

/// `enumerate maximal-length`.
pub fn enumerate_maximal(family: &str, l: u32) -> CliResult {
    let fam = parse_family(family, Some(0))?;
    let words = maximal_length_monomials(&fam, l);
    let names = fam.names();
    let expected = match fam {
        GeneratorFamily::G15(_) => Some(if l == 0 { 1 } else { 6 * l as usize }),
        GeneratorFamily::Sl2(_) => Some(if l == 0 { 1 } else { 2 }),
        GeneratorFamily::G11(..) => Some(if l == 0 { 1 } else { 4 * l as usize }),
        GeneratorFamily::G24 { .. } => None,
    };
    let ok = expected.is_none_or(|e| e == words.len());
    Ok(RunReport::new(
        "enumerate maximal-length",
        inputs(&[("family", Some(family.into())), ("l", Some(l.to_string()))]),
        json!({
            "count": words.len(),
            "expected": expected,
            "words": words.iter().map(|w| w.format(&names)).collect::<Vec<_>>(),
        }),
        if ok { Verdict::Pass } else { Verdict::Fail },
    ))
}

fn expected_preservers(spec: &ModuleSpec, k: u32) -> Option<usize> {
    match *spec {
        ModuleSpec::Poly1D(n) => Some(((k.min(n) + 1) * (k.min(n) + 1)) as usize),
        ModuleSpec::Tri(n) if k <= n => Some(counts::sl3_image_dim(k as u64) as usize),
        ModuleSpec::Rect(..) | ModuleSpec::Tri(_) | ModuleSpec::Stair { .. } => None,
    }
}

/// `enumerate preservers`.
pub fn enumerate_preserver_ops(module: Option<&str>, sup: Option<&str>, k: u32, cap: usize) -> CliResult {
    let (ops, expected): (Vec<String>, Option<usize>) = if let Some(s) = sup {
        let fam = parse_super(s)?;
        let ops = enumerate_super_preservers(&fam.module(), k, cap)?;
        let expected = match fam {
            SuperFamily::Tri { n, delta } if k + delta <= n => Some(counts::tri_super_dim(k as i64, delta as i64) as usize),
            _ => None,
        };
        (ops.iter().map(|o| o.to_string()).collect(), expected)
    } else {
        let spec = parse_module(require(module, "--module or --super")?)?;
        let ops = enumerate_preservers(&spec, k, cap)?;
        (ops.iter().map(|o| o.to_string()).collect(), expected_preservers(&spec, k))
    };
    let ok = expected.is_none_or(|e| e == ops.len());
    Ok(RunReport::new(
        "enumerate preservers",
        inputs(&[("module", module.map(String::from)), ("super", sup.map(String::from)), ("k", Some(k.to_string()))]),
        json!({"count": ops.len(), "expected": expected, "operators": ops}),
        if ok { Verdict::Pass } else { Verdict::Fail },
    ))
}

/// `enumerate basis`: working basis words with independent projections.
pub fn enumerate_basis(family: Option<&str>, module: Option<&str>, sup: Option<&str>, k: Option<u32>) -> CliResult {
    let (words, expected): (Vec<String>, Option<usize>) = if let Some(s) = sup {
        let fam = parse_super(s)?;
        let b = rank2_basis(&fam, k.unwrap_or(max_order(&fam)))?;
        (b.words.iter().map(|w| b.format(&w.word)).collect(), None)
    } else {
        let fam = parse_family(require(family, "--family or --super")?, k)?;
        let spec = match module {
            Some(m) => parse_module(m)?,
            None => match fam {
                GeneratorFamily::G24 { r, p } => ModuleSpec::Stair { r, p, q: p / r },
                _ => fam.natural_module(),
            },
        };
        let dec = Decomposer::new(fam, spec)?;
        let names = fam.names();
        let expected = match (fam, spec) {
            (GeneratorFamily::G24 { r, p }, ModuleSpec::Stair { q, .. }) => {
                counts::n_rpq(r as i64, p as i64, q as i64).to_integer().try_into().ok()
            }
            (_, s) => Some(s.dim() * s.dim()),
        };
        (dec.basis_words().map(|w| w.format(&names)).collect(), expected)
    };
    let ok = expected.is_none_or(|e| e == words.len());
    Ok(RunReport::new(
        "enumerate basis",
        inputs(&[
            ("family", family.map(String::from)),
            ("module", module.map(String::from)),
            ("super", sup.map(String::from)),
            ("k", k.map(|k| k.to_string())),
        ]),
        json!({"count": words.len(), "expected": expected, "words": words}),
        if ok { Verdict::Pass } else { Verdict::Fail },
    ))
}

/// Random operators and words checked against algebraic identities.
pub fn random_sweep(seed: u64, samples: usize) -> Vec<Value> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let random_op = |rng: &mut StdRng| {
        let mut op = DiffOp::zero();
        for _ in 0..rng.gen_range(1..4) {
            let c = qes_core::rational::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            op = op + DiffOp::monomial(c, rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
        }
        op
    };
    let g15 = GeneratorFamily::G15(3).ops();
    let mut basis = qes_core::linalg::Echelon::new();
    for (i, w) in basis_sl3(3).iter().enumerate() {
        basis.insert(i, &w.realize(&g15).coordinates());
    }
    let mut out = Vec::new();
    let (mut assoc, mut action, mut reduce) = (0, 0, 0);
    for _ in 0..samples {
        let (a, b, c) = (random_op(&mut rng), random_op(&mut rng), random_op(&mut rng));
        if a.compose(&b).compose(&c) == a.compose(&b.compose(&c)) {
            assoc += 1;
        }
        let p = qes_core::Poly2::monomial(Rational::from_integer(1.into()), rng.gen_range(0..4), rng.gen_range(0..4));
        if a.compose(&b).apply(&p) == a.apply(&b.apply(&p)) {
            action += 1;
        }
        let len = rng.gen_range(0..=3);
        let w = qes_core::Word::from_factors((0..len).map(|_| (rng.gen_range(0..8), 1)));
        if basis.contains(&w.realize(&g15).coordinates()) {
            reduce += 1;
        }
    }
    out.push(json!({"check": "composition is associative", "holds": assoc == samples, "samples": samples}));
    out.push(json!({"check": "composition matches action", "holds": action == samples, "samples": samples}));
    out.push(json!({"check": "words of order <= 3 reduce into the sl3 basis", "holds": reduce == samples, "samples": samples}));
    out
}

/// Every verifier on a fixed set of small cases, plus a seeded random sweep.
pub fn report_all(seed: u64, cap: u32) -> CliResult {
    type Job = Box<dyn Fn() -> CliResult + Send + Sync>;
    let mut jobs: Vec<Job> = vec![
        Box::new(|| verify_relations("sl2")),
        Box::new(|| verify_relations("g15")),
        Box::new(|| verify_relations("g11(2,3)")),
        Box::new(|| verify_relations("g24(2,4)")),
        Box::new(|| verify_counts(Some("g15(3)"), None, None, Some(3), 200)),
        Box::new(|| verify_counts(Some("sl2(4)"), None, None, Some(4), 200)),
        Box::new(|| verify_counts(Some("g24(2,4)"), Some("S(2,4,2)"), None, None, 200)),
        Box::new(|| verify_preservation(Some("g24(2,4)"), Some("S(2,4,2)"), None)),
        Box::new(|| enumerate_maximal("g15", 3)),
        Box::new(|| enumerate_preserver_ops(Some("T(2)"), None, 2, 200)),
        Box::new(|| enumerate_basis(Some("g24(2,4)"), Some("S(2,4,2)"), None, None)),
    ];
    for s in ["sR(2,2,0,0)", "sR(2,2,1,0)", "sR(2,2,0,1)", "sT(2,0)", "sT(2,1)", "sS(2,3)"] {
        jobs.push(Box::new(move || verify_closure(None, Some(s), cap)));
        jobs.push(Box::new(move || verify_preservation(None, None, Some(s))));
    }
    jobs.push(Box::new(|| verify_counts(None, None, Some("sT(2,1)"), Some(1), 200)));
    jobs.push(Box::new(|| verify_counts(None, None, Some("sS(2,3)"), None, 200)));

    let reports: Vec<Value> = jobs
        .par_iter()
        .map(|job| match job() {
            Ok(r) => json!({"command": r.command, "inputs": r.inputs, "status": r.status.as_str()}),
            Err(e) => json!({"error": e.to_string(), "status": "fail"}),
        })
        .collect();
    let random = random_sweep(seed, 32);
    let passed = reports.iter().filter(|r| r["status"] == "pass").count() + tally(&random).0;
    let total = reports.len() + random.len();
    Ok(RunReport::new(
        "report-all",
        inputs(&[("seed", Some(seed.to_string())), ("cap", Some(cap.to_string()))]),
        json!({"reports": reports, "random": random, "passed": passed, "total": total}),
        Verdict::from_counts(passed, total),
    ))
}
