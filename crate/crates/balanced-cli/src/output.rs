//! Stable JSON renderings of the library types.

use balanced_core::gens::PrimeClassTable;
use balanced_core::graph::{CommutationReport, IntersectionTable, NotDistanceRegular};
use balanced_core::prime::PrimeKind;
use balanced_core::swap::EquivalenceClass;
use balanced_core::word::Word;
use serde_json::{json, Value};

fn words(list: &[Word]) -> Value {
    Value::Array(list.iter().map(|w| json!(w.to_string())).collect())
}

fn word_pairs(list: &[(Word, Word)]) -> Value {
    Value::Array(
        list.iter()
            .map(|(x, y)| json!([x.to_string(), y.to_string()]))
            .collect(),
    )
}

pub fn class_json(class: &EquivalenceClass) -> Value {
    json!({
        "members": words(&class.members),
        "edges": word_pairs(&class.edges),
        "reduction_edges": word_pairs(&class.reduction_edges),
    })
}

pub fn classes_json(table: &PrimeClassTable) -> Value {
    let classes: Vec<Value> = table
        .classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative.to_string(),
                "members": words(&c.members),
            })
        })
        .collect();
    json!({
        "kind": match table.kind {
            PrimeKind::Upper => "upper",
            PrimeKind::Lower => "lower",
        },
        "max_len": table.max_len,
        "classes": classes,
    })
}

pub fn graph_report_json(
    numbers: &Result<IntersectionTable, NotDistanceRegular>,
    a_eq_r_plus_l: bool,
    projections_ok: bool,
    report: &CommutationReport,
) -> Value {
    let intersection = match numbers {
        Ok(table) => json!(table.entries()),
        Err(_) => Value::Null,
    };
    json!({
        "intersection_numbers": intersection,
        "a_eq_r_plus_l": a_eq_r_plus_l,
        "projections_ok": projections_ok,
        "commutation_violations": word_pairs(&report.violations),
    })
}
