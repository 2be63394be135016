//! JSON views of the core types with exact rational values: every rational
//! serializes as an `[numerator, denominator]` pair of machine integers,
//! erroring (rather than rounding) if a value does not fit.

use num::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::classify::{
    CellStatus, CellVerdict, MaxTorusVerdict, MomentGraph, StabilityStatus, StabilityVerdict,
};
use crate::combinat::SkeletalNilpotent;
use crate::exactla::{FlagMatrix, RationalMatrix};
use crate::hess::{CellProfile, CoordStatus, StabilizerEstimate, TorusConstraintReport};
use crate::torus::Subtorus;
use crate::{Error, Rat, Result};

/// `[numerator, denominator]`, reduced, denominator positive.
pub fn rat_value(x: &Rat) -> Result<Value> {
    let num = x.numer().to_i64();
    let den = x.denom().to_i64();
    match (num, den) {
        (Some(n), Some(d)) => Ok(json!([n, d])),
        _ => Err(Error::InvalidArgument(format!(
            "rational {x} exceeds the 64-bit JSON range"
        ))),
    }
}

/// Row-major nested arrays of rational pairs.
pub fn matrix_value(m: &RationalMatrix) -> Result<Value> {
    let rows: Result<Vec<Value>> = (1..=m.rows())
        .map(|r| {
            (1..=m.cols())
                .map(|c| rat_value(m.at(r, c)))
                .collect::<Result<Vec<Value>>>()
                .map(Value::Array)
        })
        .collect();
    Ok(Value::Array(rows?))
}

pub fn flag_value(g: &FlagMatrix) -> Result<Value> {
    Ok(json!({
        "pivot_perm": g.pivot_perm().images(),
        "matrix": matrix_value(g.matrix())?,
    }))
}

/// Entry list `[row, col, numerator, denominator]`.
pub fn skeletal_value(x: &SkeletalNilpotent) -> Result<Value> {
    let entries: Result<Vec<Value>> = x
        .entries()
        .map(|(i, j, c)| {
            let pair = rat_value(c)?;
            Ok(json!([i, j, pair[0], pair[1]]))
        })
        .collect();
    Ok(json!({ "n": x.n(), "entries": entries? }))
}

pub fn subtorus_value(k: &Subtorus) -> Value {
    json!({
        "n": k.n(),
        "codim": k.codim(),
        "constraints": k
            .constraint_basis()
            .iter()
            .map(|c| c.exps().to_vec())
            .collect::<Vec<_>>(),
    })
}

pub fn constraint_report_value(r: &TorusConstraintReport) -> Value {
    json!({
        "equalities": r.equalities.iter().map(|c| c.exps().to_vec()).collect::<Vec<_>>(),
        "full_torus_obstructed": r.full_torus_obstructed,
        "obstruction_witness": r.obstruction_witness,
        "vacuous_columns": r
            .vacuous_columns
            .iter()
            .map(|(j, reason)| (j.to_string(), json!(format!("{reason:?}"))))
            .collect::<Map<String, Value>>(),
    })
}

/// Cell profiles keyed by `"row,col"`.
pub fn cell_profile_value(p: &CellProfile) -> Value {
    let statuses: Map<String, Value> = p
        .statuses
        .iter()
        .map(|((r, c), s)| {
            let tag = match s {
                CoordStatus::Free => "free",
                CoordStatus::ForcedZero => "forced-zero",
                CoordStatus::Entangled => "entangled",
            };
            (format!("{r},{c}"), json!(tag))
        })
        .collect();
    json!({ "statuses": statuses, "entangled": p.is_entangled() })
}

pub fn stability_verdict_value(v: &StabilityVerdict) -> Result<Value> {
    let status = match &v.status {
        StabilityStatus::TStable { condition } => json!({
            "kind": "T_stable",
            "condition": condition,
        }),
        StabilityStatus::NotTStable { table_row, witness } => json!({
            "kind": "not_T_stable",
            "table_row": table_row,
            "witness": witness.images(),
        }),
    };
    let certificate = match &v.certificate {
        Some(g) => flag_value(g)?,
        None => Value::Null,
    };
    Ok(json!({
        "n": v.n,
        "h": v.h.values(),
        "status": status,
        "certificate": certificate,
    }))
}

pub fn stabilizer_estimate_value(e: &StabilizerEstimate) -> Value {
    json!({
        "lower": subtorus_value(&e.lower),
        "upper": subtorus_value(&e.upper),
        "members_sampled": e.members_sampled,
        "determined": e.determined,
        "possibly_full_torus": e.possibly_full_torus,
    })
}

pub fn max_torus_value(v: &MaxTorusVerdict) -> Value {
    json!({
        "lower": subtorus_value(&v.lower),
        "upper": subtorus_value(&v.upper),
        "determined": v.determined,
        "certified": v.certified,
    })
}

pub fn moment_graph_value(g: &MomentGraph) -> Value {
    json!({
        "torus": subtorus_value(&g.torus),
        "vertices": g.vertices.iter().map(|w| w.images().to_vec()).collect::<Vec<_>>(),
        "edges": g
            .edges
            .iter()
            .map(|e| json!({
                "a": e.a.images(),
                "b": e.b.images(),
                "weight": e.weight.exps().to_vec(),
            }))
            .collect::<Vec<_>>(),
        "complete": g.complete,
        "incompleteness_witness": g
            .incompleteness_witness
            .as_ref()
            .map(|w| w.images().to_vec()),
    })
}

pub fn cell_verdicts_value(verdicts: &[CellVerdict]) -> Result<Value> {
    let items: Result<Vec<Value>> = verdicts
        .iter()
        .map(|cv| {
            let status = match &cv.status {
                CellStatus::FullyContained { samples } => json!({
                    "kind": "fully_contained",
                    "samples": samples,
                }),
                CellStatus::ProperIntersection { witness } => json!({
                    "kind": "proper_intersection",
                    "witness": flag_value(witness)?,
                }),
            };
            Ok(json!({ "w": cv.w.images(), "status": status }))
        })
        .collect();
    Ok(Value::Array(items?))
}
