//! DOT and JSON exports: quantum Bruhat graph, Hasse diagrams, edge
//! labelings, and the weight table.

use serde_json::json;

use crate::adm::AdmPoset;
use crate::affine::notation;
use crate::qbg::{EdgeKind, QbGraph};
use crate::root_datum::RootDatum;
use crate::AdmError;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT digraph of the quantum Bruhat graph: Bruhat edges solid, quantum
/// edges dashed and annotated with their weight.
pub fn qbg_dot(rd: &RootDatum, g: &QbGraph) -> String {
    let mut out = String::from("digraph qbg {\n");
    for w in 0..g.n {
        out += &format!("  {} [label={}];\n", w, quote(&rd.weyl.name(w)));
    }
    for e in &g.edges {
        let attrs = match e.kind {
            EdgeKind::Bruhat => String::new(),
            EdgeKind::Quantum => format!(
                " [style=dashed, label={}]",
                quote(&format!("{:?}", e.weight))
            ),
        };
        out += &format!("  {} -> {}{};\n", e.source, e.target, attrs);
    }
    out += "}\n";
    out
}

/// DOT graph of a Hasse diagram from named elements and cover pairs.
pub fn hasse_dot(names: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, name) in names.iter().enumerate() {
        out += &format!("  {} [label={}];\n", i, quote(name));
    }
    for &(lo, hi) in covers {
        out += &format!("  {lo} -> {hi};\n");
    }
    out += "}\n";
    out
}

fn cover_list(covers_up: &[Vec<usize>]) -> Vec<(usize, usize)> {
    covers_up
        .iter()
        .enumerate()
        .flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi)))
        .collect()
}

pub fn adm_names(rd: &RootDatum, adm: &AdmPoset) -> Vec<String> {
    let mut names: Vec<String> = adm.elements.iter().map(|w| notation(rd, w)).collect();
    names.push("1^".into());
    names
}

pub fn adm_hasse_dot(rd: &RootDatum, adm: &AdmPoset) -> String {
    hasse_dot(&adm_names(rd, adm), &cover_list(&adm.poset.covers_up))
}

/// JSON dump of the augmented poset: elements, cover pairs, grading.
pub fn adm_poset_json(rd: &RootDatum, adm: &AdmPoset) -> String {
    let v = json!({
        "elements": adm_names(rd, adm),
        "covers": cover_list(&adm.poset.covers_up),
        "grading": adm.poset.rank,
    });
    serde_json::to_string_pretty(&v).expect("poset serializes")
}

/// JSON list of labeled cover edges of the augmented poset.
pub fn adm_labels_json(rd: &RootDatum, adm: &AdmPoset) -> Result<String, AdmError> {
    let names = adm_names(rd, adm);
    let mut rows = Vec::new();
    for (lo, hi) in cover_list(&adm.poset.covers_up) {
        let label = adm.edge_label(rd, lo, hi)?;
        rows.push(json!({
            "lower": names[lo],
            "upper": names[hi],
            "label": adm.labels.render(rd, &label),
        }));
    }
    Ok(serde_json::to_string_pretty(&json!(rows)).expect("labels serialize"))
}

/// JSON table of the quantum Bruhat graph weight function over all pairs.
pub fn wt_table_json(rd: &RootDatum, g: &QbGraph) -> String {
    let mut rows = Vec::new();
    for u in 0..g.n {
        for v in 0..g.n {
            rows.push(json!({
                "u": rd.weyl.name(u),
                "v": rd.weyl.name(v),
                "wt": g.wt(u, v),
            }));
        }
    }
    serde_json::to_string_pretty(&json!(rows)).expect("table serializes")
}
