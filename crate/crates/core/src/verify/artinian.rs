use super::report::{CheckResult, Status, VerificationReport};
use crate::caps::Caps;
use crate::finalg::{AlgebraError, FinAlgebra, IdealSubspace};
use serde_json::json;
use std::collections::BTreeSet;

pub const VERDICT_ALL_HOLD: &str = "all five conditions hold";
pub const VERDICT_ALL_FAIL: &str = "all five conditions fail";

const GORENSTEIN: &str = "gorenstein";
const IDEAL_EQ: &str = "every-ideal-equals-its-trace";
const PRINCIPAL_EQ: &str = "every-principal-ideal-equals-its-trace";
const IDEAL_ISO: &str = "every-ideal-isomorphic-to-its-trace";
const PRINCIPAL_ISO: &str = "every-principal-ideal-isomorphic-to-its-trace";

fn anchor(name: &str) -> &'static str {
    match name {
        GORENSTEIN => "artinian local with one-dimensional socle",
        IDEAL_EQ => "I = tr I for every ideal I",
        PRINCIPAL_EQ => "(x) = tr (x) for every element x",
        IDEAL_ISO => "I ≅ tr I for every ideal I",
        PRINCIPAL_ISO => "(x) ≅ tr (x) for every element x",
        _ => "",
    }
}

/// Principal ideals, in enumeration order.
fn principal_ideals(a: &FinAlgebra, all: &[IdealSubspace]) -> Vec<IdealSubspace> {
    let principal: BTreeSet<IdealSubspace> = a.elements().map(|x| a.principal_ideal(&x)).collect();
    all.iter().filter(|i| principal.contains(*i)).cloned().collect()
}

fn equality_check(a: &FinAlgebra, name: &str, ideals: &[(IdealSubspace, IdealSubspace)]) -> CheckResult {
    match ideals.iter().find(|(i, t)| i != t) {
        Some((i, t)) => CheckResult::new(
            name,
            anchor(name),
            Status::Fail,
            Some(json!({"I": a.render_ideal(i), "trace": a.render_ideal(t)})),
        ),
        None => CheckResult::new(name, anchor(name), Status::Pass, Some(json!({"ideals": ideals.len()}))),
    }
}

fn isomorphism_check(
    a: &FinAlgebra,
    name: &str,
    ideals: &[(IdealSubspace, IdealSubspace)],
    caps: &Caps,
) -> CheckResult {
    let mut over_budget = Vec::new();
    for (i, t) in ideals {
        match a.is_isomorphic(i, t, caps.hom_budget()) {
            Ok(true) => {}
            Ok(false) => {
                return CheckResult::new(
                    name,
                    anchor(name),
                    Status::Fail,
                    Some(json!({
                        "I": a.render_ideal(i),
                        "trace": a.render_ideal(t),
                        "dims": [i.dim(), t.dim()],
                    })),
                );
            }
            Err(e) => over_budget.push(format!("{}: {e}", a.render_ideal(i))),
        }
    }
    if over_budget.is_empty() {
        CheckResult::new(name, anchor(name), Status::Pass, Some(json!({"ideals": ideals.len()})))
    } else {
        CheckResult::skipped(name, anchor(name), over_budget.join("; "))
    }
}

/// Decides the five equivalent conditions for an artinian ring and reports
/// whether they agree.
pub fn run_artinian_lp_suite(a: &FinAlgebra, caps: &Caps) -> VerificationReport {
    let mut report = VerificationReport::new(a.name(), "lp", *caps);
    let gorenstein = a.is_gorenstein();
    let socle = a.socle();
    report.push(CheckResult::new(
        GORENSTEIN,
        anchor(GORENSTEIN),
        Status::from_bool(gorenstein),
        Some(json!({"socle": a.render_ideal(&socle), "socle_dim": socle.dim()})),
    ));
    let ideals = match a.enumerate_ideals(caps) {
        Ok(ideals) => ideals,
        Err(e) => {
            for name in [IDEAL_EQ, PRINCIPAL_EQ, IDEAL_ISO, PRINCIPAL_ISO] {
                report.push(CheckResult::skipped(name, anchor(name), e.to_string()));
            }
            report.verdict = Some("inconclusive: ideal enumeration exceeds the cap".into());
            return report;
        }
    };
    let with_trace = |list: &[IdealSubspace]| -> Vec<(IdealSubspace, IdealSubspace)> {
        list.iter().map(|i| (i.clone(), a.trace_ideal(i))).collect()
    };
    let all = with_trace(&ideals);
    let principal = with_trace(&principal_ideals(a, &ideals));
    report.push(equality_check(a, IDEAL_EQ, &all));
    report.push(equality_check(a, PRINCIPAL_EQ, &principal));
    report.push(isomorphism_check(a, IDEAL_ISO, &all, caps));
    report.push(isomorphism_check(a, PRINCIPAL_ISO, &principal, caps));
    report.verdict = Some(five_way_verdict(&report));
    report
}

fn five_way_verdict(report: &VerificationReport) -> String {
    let statuses: Vec<&Status> = report.checks.iter().map(|c| &c.status).collect();
    if statuses.iter().any(|s| matches!(s, Status::Skipped(_))) {
        return "inconclusive: some conditions were skipped".into();
    }
    if statuses.iter().all(|s| **s == Status::Pass) {
        VERDICT_ALL_HOLD.into()
    } else if statuses.iter().all(|s| **s == Status::Fail) {
        VERDICT_ALL_FAIL.into()
    } else {
        let failing: Vec<&str> =
            report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
        format!("equivalence violated: only {} fail", failing.join(", "))
    }
}

/// Structural identities of the trace on every ideal of `a`.
pub fn run_artinian_identity_suite(a: &FinAlgebra, caps: &Caps) -> VerificationReport {
    let mut report = VerificationReport::new(a.name(), "identities", *caps);
    let f = a.field();
    let r = a.unit_ideal();
    let tr_r = a.trace_ideal(&r);
    report.push(CheckResult::new(
        "trace-of-unit-ideal",
        "tr R = R",
        Status::from_bool(tr_r == r),
        Some(json!({"trace": a.render_ideal(&tr_r)})),
    ));

    let mut elements = 0usize;
    let mut mismatch = None;
    for x in a.elements() {
        elements += 1;
        let t = a.trace_ideal(&a.principal_ideal(&x));
        let aa = a.trace_principal_via_ann(&x);
        if t != aa && mismatch.is_none() {
            mismatch = Some(json!({"x": a.render_element(&x), "trace": a.render_ideal(&t), "ann_ann": a.render_ideal(&aa)}));
        }
    }
    report.push(CheckResult::new(
        "principal-trace-equals-double-annihilator",
        "tr (x) = ann(ann(x)) for every element x",
        Status::from_bool(mismatch.is_none()),
        mismatch.or(Some(json!({"elements": elements}))),
    ));

    let ideals = match a.enumerate_ideals(caps) {
        Ok(ideals) => ideals,
        Err(e) => {
            for (name, anchor) in ENUMERATED_CHECKS {
                report.push(CheckResult::skipped(name, anchor, e.to_string()));
            }
            return report;
        }
    };
    let traces: Vec<IdealSubspace> = ideals.iter().map(|i| a.trace_ideal(i)).collect();

    let first = |pred: &dyn Fn(usize) -> bool| (0..ideals.len()).find(|&k| !pred(k));
    let witness = |k: usize| json!({"I": a.render_ideal(&ideals[k]), "trace": a.render_ideal(&traces[k])});
    let count = json!({"ideals": ideals.len()});

    let bad = first(&|k| ideals[k].is_subset_of(&f, &traces[k]));
    report.push(CheckResult::new(
        ENUMERATED_CHECKS[0].0,
        ENUMERATED_CHECKS[0].1,
        Status::from_bool(bad.is_none()),
        Some(bad.map_or(count.clone(), witness)),
    ));
    let bad = first(&|k| a.trace_ideal(&traces[k]) == traces[k]);
    report.push(CheckResult::new(
        ENUMERATED_CHECKS[1].0,
        ENUMERATED_CHECKS[1].1,
        Status::from_bool(bad.is_none()),
        Some(bad.map_or(count.clone(), witness)),
    ));
    report.push(isomorphism_invariance(a, &ideals, &traces, caps));
    report.push(product_traces(a, caps));
    report
}

const ENUMERATED_CHECKS: [(&str, &str); 4] = [
    ("trace-contains-ideal", "I ⊆ tr I"),
    ("trace-idempotent", "tr(tr I) = tr I"),
    ("isomorphism-invariants", "I ≅ J implies tr I = tr J and Hom(I, R) ≅ Hom(J, R)"),
    ("trace-of-product", "tr(I × J) = tr I × tr J in a product ring"),
];

/// Isomorphic ideals have equal traces and equal `dim Hom(-, R)`; only pairs
/// where one of these differs need an isomorphism search.
fn isomorphism_invariance(
    a: &FinAlgebra,
    ideals: &[IdealSubspace],
    traces: &[IdealSubspace],
    caps: &Caps,
) -> CheckResult {
    let (name, anchor) = ENUMERATED_CHECKS[2];
    let r = a.unit_ideal();
    let hom_dims: Vec<usize> = ideals.iter().map(|i| a.hom_module(i, &r).dim()).collect();
    let mut searched = 0usize;
    let mut over_budget = 0usize;
    for x in 0..ideals.len() {
        for y in x + 1..ideals.len() {
            if ideals[x].dim() != ideals[y].dim() || (traces[x] == traces[y] && hom_dims[x] == hom_dims[y]) {
                continue;
            }
            searched += 1;
            match a.is_isomorphic(&ideals[x], &ideals[y], caps.hom_budget()) {
                Ok(false) => {}
                Ok(true) => {
                    return CheckResult::new(
                        name,
                        anchor,
                        Status::Fail,
                        Some(json!({
                            "I": a.render_ideal(&ideals[x]),
                            "J": a.render_ideal(&ideals[y]),
                            "traces": [a.render_ideal(&traces[x]), a.render_ideal(&traces[y])],
                            "hom_dims": [hom_dims[x], hom_dims[y]],
                        })),
                    )
                }
                Err(_) => over_budget += 1,
            }
        }
    }
    if over_budget > 0 {
        return CheckResult::skipped(name, anchor, format!("{over_budget} of {searched} searches exceed the hom budget"));
    }
    CheckResult::new(name, anchor, Status::Pass, Some(json!({"pairs_searched": searched})))
}

/// For a local ring `A`, compares traces in `A × F_p` with pairs of traces.
/// For a product ring, compares each ideal's trace with its blockwise traces.
fn product_traces(a: &FinAlgebra, caps: &Caps) -> CheckResult {
    let (name, anchor) = ENUMERATED_CHECKS[3];
    let target = if a.is_local() {
        let residue = FinAlgebra::from_presentation(a.field().characteristic(), &[], &[])
            .expect("the residue field is a valid algebra");
        match FinAlgebra::product(a, &residue) {
            Ok(p) => p,
            Err(e) => return CheckResult::skipped(name, anchor, e.to_string()),
        }
    } else {
        a.clone()
    };
    match check_product_traces(&target, caps) {
        Ok(None) => CheckResult::new(name, anchor, Status::Pass, Some(json!({"ring": target.name()}))),
        Ok(Some(w)) => CheckResult::new(name, anchor, Status::Fail, Some(w)),
        Err(e) => CheckResult::skipped(name, anchor, e.to_string()),
    }
}

/// First ideal of the product whose trace differs from the sum of its
/// blockwise traces.
pub fn check_product_traces(p: &FinAlgebra, caps: &Caps) -> Result<Option<serde_json::Value>, AlgebraError> {
    for ideal in p.enumerate_ideals(caps)? {
        let whole = p.trace_ideal(&ideal);
        let mut blockwise = p.zero_ideal();
        for k in 0..p.components().len() {
            let block = p.component_algebra(k);
            let part = p.project_to_component(k, &ideal);
            blockwise = p.ideal_sum(&blockwise, &p.embed_from_component(k, &block.trace_ideal(&part)));
        }
        if whole != blockwise {
            return Ok(Some(json!({
                "I": p.render_ideal(&ideal),
                "trace": p.render_ideal(&whole),
                "blockwise": p.render_ideal(&blockwise),
            })));
        }
    }
    Ok(None)
}
