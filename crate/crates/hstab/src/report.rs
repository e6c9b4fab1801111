//! JSON renderings of the computed reports. Every report carries the
//! schema tag and a `type` field; key order is fixed by construction.

use hstab_core::fi::{
    DegreeReport, GenerationDegree, MultiplicityTable, NoetherianReport, ShiftDecomposition, StabilityVerdict,
};
use hstab_core::hecke::basis_label;
use hstab_core::HeckeElement;
use serde_json::{json, Map, Value};

use crate::format::{partition_label, SCHEMA};

fn tagged(kind: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), SCHEMA.into());
    out.insert("type".into(), kind.into());
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

fn generation_degree(g: GenerationDegree) -> Value {
    match g {
        GenerationDegree::Degree(d) => d.into(),
        GenerationDegree::ExceedsTruncation => "exceeds-truncation".into(),
    }
}

/// `{"T_e": "q", "T_1": "q-1"}`, terms in lexicographic order of permutations.
pub fn hecke_element(x: &HeckeElement) -> Value {
    let terms: Map<String, Value> = x.terms().map(|(w, c)| (basis_label(w), c.to_string().into())).collect();
    Value::Object(terms)
}

pub fn degree_report(label: &str, d: &DegreeReport) -> Value {
    let verdicts: Vec<Value> = d
        .verdicts
        .iter()
        .map(|m| {
            json!({
                "a": m.a,
                "n": m.n,
                "source_dim": m.source_dim,
                "target_dim": m.target_dim,
                "rank": m.rank,
                "injective": m.injective,
                "surjective": m.surjective,
            })
        })
        .collect();
    let violations: Vec<Value> = d
        .monotonicity_violations
        .iter()
        .map(|(a, n, p)| json!({"a": a, "n": n, "property": p}))
        .collect();
    tagged(
        "degrees",
        json!({
            "label": label,
            "a_max": d.a_max,
            "n_max": d.n_max,
            "injective_degree": d.injective_degree,
            "surjective_degree": d.surjective_degree,
            "stability_degree": d.stability_degree,
            "well_defined": d.well_defined,
            "monotonicity_violations": violations,
            "maps": verdicts,
        }),
    )
}

fn table_rows(t: &MultiplicityTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(lambda, counts)| json!({"lambda": partition_label(lambda), "counts": counts}))
        .collect();
    rows.into()
}

pub fn multiplicities(label: &str, t: &MultiplicityTable) -> Value {
    tagged(
        "multiplicities",
        json!({"label": label, "n_max": t.n_max, "rows": table_rows(t)}),
    )
}

pub fn weight(label: &str, n_max: usize, w: usize) -> Value {
    tagged("weight", json!({"label": label, "n_max": n_max, "weight": w}))
}

pub fn stability(label: &str, v: &StabilityVerdict) -> Value {
    let transitions: Vec<Value> = v
        .transitions
        .iter()
        .map(|t| {
            json!({
                "n": t.n,
                "injective": t.injective,
                "generates": t.generates,
                "multiplicities_equal": t.multiplicities_equal,
            })
        })
        .collect();
    tagged(
        "stability",
        json!({
            "label": label,
            "n_max": v.table.n_max,
            "stable": v.stable,
            "onset": v.onset,
            "weight": v.weight,
            "stability_degree": v.degrees.as_ref().and_then(|d| d.stability_degree),
            "predicted_bound": v.predicted_bound,
            "within_bound": v.within_bound,
            "transitions": transitions,
            "multiplicities": table_rows(&v.table),
        }),
    )
}

pub fn shift_decomposition(r: &ShiftDecomposition) -> Value {
    tagged(
        "shift-decomposition",
        json!({
            "m": r.m,
            "a": r.a,
            "n_max": r.n_max,
            "passed": r.passed(),
            "shifted_dims": r.shifted_dims,
            "free_dims": r.free_dims,
            "complement_dims": r.complement_dims,
            "direct_sum": r.direct_sum,
            "free_block_is_m": r.free_block_is_m,
            "complement_consistent": r.complement_consistent,
            "complement_generation_degree": generation_degree(r.complement_generation_degree),
            "complement_degree_ok": r.complement_degree_ok,
        }),
    )
}

pub fn noetherian(r: &NoetherianReport) -> Value {
    let trials: Vec<Value> = r
        .trials
        .iter()
        .map(|t| {
            let seeds: Vec<Value> = t
                .seeds
                .iter()
                .map(|(n, v)| {
                    let entries: Vec<Value> = v.iter().map(|(i, c)| json!([i, c.to_string()])).collect();
                    json!({"n": n, "entries": entries})
                })
                .collect();
            json!({
                "seeds": seeds,
                "dims": t.dims,
                "generation_degree": generation_degree(t.generation_degree),
                "stable": t.stable,
                "onset": t.onset,
                "multiplicities": table_rows(&t.table),
            })
        })
        .collect();
    tagged(
        "noetherian",
        json!({
            "m": r.m,
            "seed": r.seed,
            "n_max": r.n_max,
            "all_finitely_generated": r.all_finitely_generated,
            "all_stable": r.all_stable,
            "max_generation_degree": r.max_generation_degree,
            "trials": trials,
        }),
    )
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}
