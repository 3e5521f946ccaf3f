use anyhow::{anyhow, bail, Context, Result};
use gdu_core::expr::parse;
use gdu_core::gdu::{relation_text, GduAlgebra, Preset, WeightScheme, PRESET_NAMES};
use gdu_core::graded::{
    assoc_graded, assoc_monomial, homogenize_algebra, product_series, product_series_text, quadratic_check, rees_dims,
    solvable_homogenized, Growth, HomogenizedAlgebra,
};
use gdu_core::solvable::{verify_ordering_axioms, SolvableAlgebra};
use gdu_core::Error;
use serde_json::json;

use crate::report::{AlgebraInfo, Report, Status};
use crate::spec::{parse_spec, AlgebraSpec, Source};
use crate::SourceArgs;

fn spec_from_args(args: &SourceArgs) -> Result<AlgebraSpec> {
    let mut spec = match (&args.spec, &args.preset) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_spec(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?
        }
        (None, Some(name)) => {
            let source = if name == "random" {
                Source::Random { degree: 1, seed: None }
            } else {
                let p = Preset::defaults()
                    .into_iter()
                    .find(|p| p.name() == name)
                    .ok_or_else(|| anyhow!("unknown preset '{name}' (expected one of {}, random)", PRESET_NAMES.join(", ")))?;
                Source::Preset(p)
            };
            AlgebraSpec { source, scheme: None }
        }
        (None, None) => bail!("give --spec <file> or --preset <name>"),
    };
    if let Some(s) = &args.scheme {
        spec.scheme = Some(WeightScheme::parse(s)?);
    }
    Ok(spec)
}

/// Report header plus the algebra, or a report whose Gröbner check failed.
fn load(args: &SourceArgs, command: &str) -> Result<(Report, Option<GduAlgebra>)> {
    let spec = spec_from_args(args)?;
    let (params, notes) = spec.resolve(args.seed)?;
    let scheme = spec.scheme_for(&params);
    scheme.check(params.degree_f())?;
    let info = AlgebraInfo {
        source: spec.label(),
        scheme: scheme.name().to_string(),
        lambda: params.lambda.to_string(),
        omega: params.omega.to_string(),
        gamma: params.gamma.to_string(),
        f: params.f_coeffs().iter().map(|c| c.to_string()).collect(),
        weights: scheme.weights(params.degree_f()).to_vec(),
    };
    let mut report = Report::new(command, Some(info));
    for n in notes {
        report.note(n);
    }
    match GduAlgebra::build(params, scheme) {
        Ok(alg) => Ok((report, Some(alg))),
        Err(Error::Internal(msg)) => {
            report.push("groebner", Status::Fail, msg, json!(null));
            Ok((report, None))
        }
        Err(e) => Err(e.into()),
    }
}

fn relations_json(alg: &GduAlgebra) -> serde_json::Value {
    json!(alg.named_relations().iter().map(|(n, p)| json!({"name": n, "poly": relation_text(p, alg.order())})).collect::<Vec<_>>())
}

fn groebner_check(report: &mut Report, alg: &GduAlgebra) {
    let cert = alg.certificate();
    report.check(
        "groebner",
        cert.holds,
        format!("{} overlap/inclusion compositions over {} pairs reduce to 0", cert.compositions_checked, cert.pairs_checked),
        json!({
            "relations": relations_json(alg),
            "pairs_checked": cert.pairs_checked,
            "compositions_checked": cert.compositions_checked,
        }),
    );
}

fn table_text(s: &SolvableAlgebra) -> Vec<String> {
    let n = s.num_generators();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let prod = s.multiply(&s.generator(j), &s.generator(i));
            out.push(format!("{}·{} = {}", s.names()[j], s.names()[i], s.display(&prod)));
        }
    }
    out
}

pub fn certify(args: &SourceArgs, degree: u64, bound: u64) -> Result<Report> {
    let (mut report, alg) = load(args, "certify")?;
    let Some(alg) = alg else { return Ok(report) };
    groebner_check(&mut report, &alg);

    let pbw = alg.check_pbw(degree);
    let rows: Vec<_> = pbw.per_degree.iter().map(|&(q, a, b)| json!({"degree": q, "normal_words": a, "pbw_monomials": b})).collect();
    let counts: Vec<String> = pbw.per_degree.iter().map(|r| r.1.to_string()).collect();
    report.check("pbw", pbw.holds, format!("normal words = PBW monomials for degrees 0..={degree}: {}", counts.join(" ")), json!(rows));

    match alg.to_solvable() {
        Ok(s) => {
            let diag = s.verify_solvable();
            report.check(
                "solvable",
                diag.holds,
                format!("{} commutation rules, weights {:?}", diag.rules_checked, s.weights()),
                json!({"table": table_text(&s), "weights": s.weights(), "issues": diag.issues}),
            );
            let axioms = verify_ordering_axioms(&s, s.order(), bound);
            let detail = match &axioms.violation {
                None => format!("{} monomials up to degree {bound}, {} instances", axioms.monomials, axioms.instances_checked),
                Some(v) => format!("condition {} fails: {}", v.condition, v.description),
            };
            report.check(
                "ordering-axioms",
                axioms.holds,
                detail,
                json!({
                    "bound": bound,
                    "monomials": axioms.monomials,
                    "instances_checked": axioms.instances_checked,
                    "degenerate_skipped": axioms.degenerate_skipped,
                }),
            );
        }
        Err(Error::Precondition(msg)) => {
            report.push("solvable", Status::Skipped, format!("hypothesis {msg}"), json!(null));
            report.push("ordering-axioms", Status::Skipped, "needs a solvable table", json!(null));
        }
        Err(e) => report.push("solvable", Status::Fail, e.to_string(), json!(null)),
    }
    Ok(report)
}

pub fn normal_form(args: &SourceArgs, expression: &str, homogenized: bool) -> Result<Report> {
    let (mut report, alg) = load(args, "nf")?;
    let Some(alg) = alg else { return Ok(report) };
    let (input, nf, text) = if homogenized {
        let h = match homogenize_algebra(&alg) {
            Ok(h) => h,
            Err(Error::Precondition(msg)) => bail!("{msg}"),
            Err(e) => return Err(e.into()),
        };
        let p = parse(expression, h.order())?;
        let nf = h.relations().normal_form(&p)?;
        let text = nf.display(h.order()).to_string();
        (p.display(h.order()).to_string(), nf, text)
    } else {
        let p = parse(expression, alg.order())?;
        let nf = alg.normal_form(&p)?;
        let text = nf.display(alg.order()).to_string();
        (p.display(alg.order()).to_string(), nf, text)
    };
    report.push("normal-form", Status::Info, text.clone(), json!({"input": input, "normal_form": text, "terms": nf.len()}));
    Ok(report)
}

/// Graded operations need `deg f ≥ 1`; otherwise the report says why.
fn graded_gate(report: &mut Report, alg: &GduAlgebra, name: &str) -> bool {
    if alg.degree_f() == 0 {
        report.push(name, Status::Skipped, "needs deg f ≥ 1", json!(null));
        return false;
    }
    true
}

fn homogenized(report: &mut Report, alg: &GduAlgebra) -> Option<HomogenizedAlgebra> {
    match homogenize_algebra(alg) {
        Ok(h) => Some(h),
        Err(e) => {
            report.push("homogenized-groebner", Status::Fail, e.to_string(), json!(null));
            None
        }
    }
}

pub fn assoc(args: &SourceArgs, degree: u64) -> Result<Report> {
    let (mut report, alg) = load(args, "graded assoc")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "assoc-groebner") {
        return Ok(report);
    }
    let g = match assoc_graded(&alg) {
        Ok(g) => g,
        Err(e) => {
            report.push("assoc-groebner", Status::Fail, e.to_string(), json!(null));
            return Ok(report);
        }
    };
    let texts: Vec<String> = g.named().iter().map(|(_, p)| relation_text(p, alg.order())).collect();
    report.check(
        "assoc-groebner",
        g.certificate().holds && g.is_homogeneous(),
        format!("LH(𝒢) = {{{}}}", texts.join(", ")),
        json!({
            "relations": g.named().iter().zip(&texts).map(|((n, _), t)| json!({"name": n, "poly": t})).collect::<Vec<_>>(),
            "pairs_checked": g.certificate().pairs_checked,
        }),
    );
    let ladder = g.dimension_ladder(degree);
    let holds = ladder.iter().all(|r| r.graded_dim == r.filtered_diff);
    let dims: Vec<String> = ladder.iter().map(|r| r.graded_dim.to_string()).collect();
    report.check(
        "dimension-ladder",
        holds,
        format!("dim G(A)_q = dim F_qA − dim F_(q−1)A for q ≤ {degree}: {}", dims.join(" ")),
        json!(ladder.iter().map(|r| json!({"degree": r.degree, "graded": r.graded_dim, "filtered_difference": r.filtered_diff})).collect::<Vec<_>>()),
    );
    Ok(report)
}

pub fn homogenize(args: &SourceArgs) -> Result<Report> {
    let (mut report, alg) = load(args, "graded homogenize")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "homogenized-groebner") {
        return Ok(report);
    }
    let Some(h) = homogenized(&mut report, &alg) else { return Ok(report) };
    let texts: Vec<(String, String)> = h.named().iter().map(|(n, p)| (format!("~{n}"), relation_text(p, h.order()))).collect();
    let lms: Vec<String> = h.leading_words().iter().map(|w| h.order().format_word(w)).collect();
    report.check(
        "homogenized-groebner",
        h.certificate().holds,
        format!("{} relations, leading words {{{}}}", texts.len(), lms.join(", ")),
        json!({
            "relations": texts.iter().map(|(n, t)| json!({"name": n, "poly": t})).collect::<Vec<_>>(),
            "leading_words": lms,
        }),
    );
    let back = h.dehomogenize();
    let recovered = back.iter().zip(alg.named_relations()).all(|((_, b), (_, g))| b == g);
    report.check("dehomogenization", recovered, "T ↦ 1 recovers g31, g12, g32", json!(null));
    let (variant, note) = h.g12_discrepancy();
    report.push(
        "g12-variant",
        Status::Info,
        note,
        json!({"computed": relation_text(&h.named()[1].1, h.order()), "variant": relation_text(&variant, h.order())}),
    );
    match solvable_homogenized(&h) {
        Ok(s) => {
            let diag = s.verify_solvable();
            report.check(
                "homogenized-solvable",
                diag.holds,
                format!("T central, weights {:?}", s.weights()),
                json!({"table": table_text(&s), "issues": diag.issues}),
            );
        }
        Err(Error::Precondition(msg)) => report.push("homogenized-solvable", Status::Skipped, format!("hypothesis {msg}"), json!(null)),
        Err(e) => report.push("homogenized-solvable", Status::Fail, e.to_string(), json!(null)),
    }
    Ok(report)
}

pub fn hilbert(args: &SourceArgs, degree: u64) -> Result<Report> {
    let (mut report, alg) = load(args, "graded hilbert")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "hilbert") {
        return Ok(report);
    }
    let Some(h) = homogenized(&mut report, &alg) else { return Ok(report) };
    let coeffs = h.monomial().hilbert(degree).coefficients;
    let w = alg.x2_weight() as u32;
    let weights = [1, 1, w, w];
    let closed = product_series_text(&weights);
    let expected = product_series(&weights, degree);
    let shown: Vec<String> = coeffs.iter().map(u64::to_string).collect();
    report.check(
        "hilbert",
        coeffs == expected,
        format!("H(A) series {closed}, coefficients {}", shown.join(", ")),
        json!({"coefficients": coeffs, "closed_form": closed, "all_ones_form": "1/(1−t)^4"}),
    );
    if w != 1 {
        report.note(format!("with X2, X3 of weight {w} the series is {closed}; 1/(1−t)^4 holds for all weights 1"));
    }
    if let Ok(m) = assoc_monomial(&alg) {
        let g = m.hilbert(degree).coefficients;
        report.push("hilbert-assoc", Status::Info, format!("G(A): {}", g.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")), json!({"coefficients": g}));
    }
    Ok(report)
}

pub fn gk(args: &SourceArgs) -> Result<Report> {
    let (mut report, alg) = load(args, "graded gk")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "gk") {
        return Ok(report);
    }
    let a = assoc_monomial(&alg)?.growth();
    report.check("gk-A", a == Growth::Polynomial(3), format!("growth of LM(LH(𝒢)) = {a}"), json!({"growth": a.to_string()}));
    let Some(h) = homogenized(&mut report, &alg) else { return Ok(report) };
    let g = h.monomial().growth();
    report.check("gk-H", g == Growth::Polynomial(4), format!("growth of LM(~𝒢) = {g}"), json!({"growth": g.to_string()}));
    report.note("growth is computed on the leading-word algebras from the Ufnarovski graph");
    Ok(report)
}

pub fn rees(args: &SourceArgs, degree: u64) -> Result<Report> {
    let (mut report, alg) = load(args, "graded rees")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "rees") {
        return Ok(report);
    }
    let Some(h) = homogenized(&mut report, &alg) else { return Ok(report) };
    let check = rees_dims(&alg, &h, degree);
    let dims: Vec<String> = check.per_degree.iter().map(|r| r.1.to_string()).collect();
    report.check(
        "rees",
        check.holds,
        format!("dim H(A)_q = dim F_qA for q ≤ {degree}: {}", dims.join(" ")),
        json!(check.per_degree.iter().map(|&(q, a, b)| json!({"degree": q, "homogenized": a, "filtered": b})).collect::<Vec<_>>()),
    );
    Ok(report)
}

pub fn quadratic(args: &SourceArgs) -> Result<Report> {
    let (mut report, alg) = load(args, "graded quadratic")?;
    let Some(alg) = alg else { return Ok(report) };
    if !graded_gate(&mut report, &alg, "quadratic") {
        return Ok(report);
    }
    let Some(h) = homogenized(&mut report, &alg) else { return Ok(report) };
    let q = quadratic_check(h.relations());
    let degrees: Vec<u64> = h.named().iter().filter_map(|(_, p)| p.degree(h.order())).collect();
    let detail = if q {
        "all homogenized relations are quadratic in degree-1 generators".to_string()
    } else {
        format!("not quadratic: weights {:?}, relation degrees {:?}", h.order().weights(), degrees)
    };
    report.push("quadratic", Status::Info, detail, json!({"quadratic": q, "degrees": degrees}));
    Ok(report)
}

pub fn presets_list() -> Result<Report> {
    let mut report = Report::new("presets list", None);
    for p in Preset::defaults() {
        let (params, notes) = p.params()?;
        let scheme = p.default_scheme()?;
        report.push(
            p.name(),
            Status::Info,
            format!("{p}: {params} [{scheme}]"),
            json!({
                "preset": p.to_string(),
                "lambda": params.lambda.to_string(),
                "omega": params.omega.to_string(),
                "gamma": params.gamma.to_string(),
                "f": params.f_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "default_scheme": scheme.name(),
                "notes": notes,
            }),
        );
    }
    report.push("random", Status::Info, "random rational parameters from --seed; [preset] degree = n, seed = s", json!(null));
    Ok(report)
}
