//! Deterministic JSON reports. `serde_json`'s default map keeps keys
//! sorted, and every array below is built in a fixed order, so repeated
//! runs are byte-identical.

use serde_json::{json, Map, Value};

use tilt_core::algebra::BoundQuiverAlgebra;
use tilt_core::complex::SiltingReport;
use tilt_core::ext::ExtClass;
use tilt_core::indec::IndecomposableList;
use tilt_core::torsion::{AxiomReport, TorsionPair, TorsionVerdicts};
use tilt_core::verdict::{HeartDescription, Verdict, WitnessRecord};

pub fn verdict_json(v: &Verdict) -> Value {
    let mut hom = Map::new();
    for (k, d) in &v.evidence.hom_dimensions {
        hom.insert(k.clone(), json!(d));
    }
    json!({
        "conclusion": v.conclusion.as_str(),
        "route": v.route.as_str(),
        "evidence": {
            "homDimensions": Value::Object(hom),
            "witnesses": v.evidence.witnesses.iter().map(witness_record_json).collect::<Vec<_>>(),
            "extClassZero": v.evidence.ext_class_zero,
            "torsion": v.evidence.torsion_labels,
            "free": v.evidence.free_labels,
            "offendingMap": v.evidence.offending_map,
            "notes": v.evidence.notes,
        },
        "budget": v.budget,
        "caveats": v.caveats,
    })
}

pub fn witness_record_json(w: &WitnessRecord) -> Value {
    json!({
        "module": w.module,
        "route": w.route,
        "f0": w.f0,
        "f1": w.f1,
        "t0": w.t0,
        "t1": w.t1,
        "classZero": w.class_zero,
        "tried": w.tried,
    })
}

pub fn silting_json(r: &SiltingReport) -> Value {
    let neg: Map<String, Value> = r
        .neg_self_homs
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let pos: Map<String, Value> = r
        .pos_self_homs
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "twoTerm": r.two_term,
        "presilting": r.presilting,
        "generating": r.generating,
        "generatingCheckedOn": "simples",
        "negSelfHoms": Value::Object(neg),
        "posSelfHoms": Value::Object(pos),
        "generatingTable": r.generating_table.iter().map(|(s, d0, d1)| {
            json!({"simple": s, "shift0": d0, "shift1": d1})
        }).collect::<Vec<_>>(),
        "failures": r.failures,
        "caveats": r.caveats,
    })
}

pub fn pair_json(inds: &IndecomposableList, tp: &TorsionPair) -> Value {
    json!({
        "torsion": tp.torsion_labels(inds),
        "free": tp.free_labels(inds),
    })
}

pub fn axiom_json(r: &AxiomReport) -> Value {
    json!({
        "ok": r.ok,
        "violation": r.violation.as_ref().map(|v| v.to_string()),
    })
}

pub fn classification_json(v: &TorsionVerdicts) -> Value {
    json!({
        "splitting": v.splitting,
        "tilting": v.tilting,
        "cotilting": v.cotilting,
        "facFreeStarTorsion": v.fac_free_star_torsion,
        "freeStarSubTorsion": v.free_star_sub_torsion,
        "facFreeStarSubTorsion": v.fac_free_star_sub_torsion,
        "splittingWitness": v.splitting_witness.as_ref().map(|(f, t, d)| {
            json!({"free": f, "torsion": t, "ext1Dim": d})
        }),
        "starEvidence": v.star_evidence.iter().map(|(m, s, q)| {
            json!({"module": m, "sub": s, "quotient": q})
        }).collect::<Vec<_>>(),
        "implicationsHold": v.implications_hold,
        "caveats": v.caveats,
    })
}

pub fn heart_json(h: &HeartDescription, inds: &IndecomposableList) -> Value {
    json!({
        "torsion": pair_json(inds, &h.torsion),
        "endoDimension": h.endo.dim,
        "heartObjects": h.heart_objects.iter().map(|(hm1, h0)| {
            json!({"hMinus1": hm1, "h0": h0})
        }).collect::<Vec<_>>(),
        "caveats": h.caveats,
    })
}

pub fn ext_class_json(c: &ExtClass) -> Value {
    json!({
        "degree": c.degree,
        "isZero": c.is_zero(),
        "coordinates": c.coords.iter().map(|s| s.literal()).collect::<Vec<_>>(),
    })
}

pub fn algebra_info_json(
    alg: &BoundQuiverAlgebra,
    proj_dims: &[(String, Option<usize>)],
) -> Value {
    let q = alg.quiver();
    let basis: Vec<String> = alg.basis().iter().map(|p| p.display(q)).collect();
    let vertices: Vec<&str> = (0..q.vertex_count()).map(|v| q.vertex_name(v)).collect();
    let arrows: Vec<Value> = (0..q.arrow_count())
        .map(|a| {
            json!({
                "name": q.arrow_name(a),
                "source": q.vertex_name(q.source(a)),
                "target": q.vertex_name(q.target(a)),
            })
        })
        .collect();
    let pd: Map<String, Value> = proj_dims
        .iter()
        .map(|(s, d)| (s.clone(), json!(d)))
        .collect();
    json!({
        "field": alg.field().to_string(),
        "dim": alg.dim(),
        "vertices": vertices,
        "arrows": arrows,
        "pathBasis": basis,
        "projDimsOfSimples": Value::Object(pd),
        "projectiveDims": (0..q.vertex_count()).map(|v| {
            json!({"vertex": q.vertex_name(v), "dim": alg.paths_from(v).len()})
        }).collect::<Vec<_>>(),
    })
}

pub fn indecomposables_json(alg: &BoundQuiverAlgebra, inds: &IndecomposableList) -> Value {
    let q = alg.quiver();
    json!({
        "algebraClass": inds.class.tag(),
        "count": inds.len(),
        "modules": inds.modules.iter().map(|m| {
            let dims: Vec<Value> = (0..q.vertex_count())
                .filter(|&v| m.rep.dims[v] > 0)
                .map(|v| json!({"vertex": q.vertex_name(v), "dim": m.rep.dims[v]}))
                .collect();
            json!({"label": m.label, "dims": dims, "totalDim": m.rep.total_dim()})
        }).collect::<Vec<_>>(),
    })
}

/// Renders with a trailing newline; the canonical byte form of every report.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
