//! Deterministic DOT and JSON documents.
//!
//! DOT output is a plain `digraph` of node and edge statements. Solid edges
//! are irreducible maps, dashed edges go from an object to its translate.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::gp::{Classification, RelationQuiver};
use crate::qalg::BoundQuiverAlgebra;

use super::knit::{check_component, divisibility_report, StableComponent};
use super::sn::{verify_sequence, AlmostSplitSequence};
use super::RepError;

pub const COMPONENT_SCHEMA: &str = "gsemi.component/1";
pub const RELATION_QUIVER_SCHEMA: &str = "gsemi.relation-quiver/1";
pub const SEQUENCES_SCHEMA: &str = "gsemi.sequences/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

impl Format {
    pub fn name(&self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

pub enum Exportable<'a> {
    Components(&'a [StableComponent]),
    RelationQuiver(&'a RelationQuiver),
    Sequences(&'a [AlmostSplitSequence]),
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_quiver(
    alg: &BoundQuiverAlgebra,
    obj: Exportable<'_>,
    format: Format,
) -> Result<String, RepError> {
    match (obj, format) {
        (_, Format::Text) => Err(RepError::UnsupportedFormat(format.name().into())),
        (Exportable::Components(c), Format::Dot) => Ok(components_dot(alg, c)),
        (Exportable::Components(c), Format::Json) => Ok(pretty(&components_json(alg, c))),
        (Exportable::RelationQuiver(rq), Format::Dot) => Ok(relation_quiver_dot(alg, rq)),
        (Exportable::RelationQuiver(rq), Format::Json) => {
            Ok(pretty(&relation_quiver_json(alg, rq)))
        }
        (Exportable::Sequences(s), Format::Dot) => Ok(sequences_dot(alg, s)),
        (Exportable::Sequences(s), Format::Json) => sequences_json(alg, s).map(|v| pretty(&v)),
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn components_dot(alg: &BoundQuiverAlgebra, comps: &[StableComponent]) -> String {
    let mut out = String::from("digraph component {\n");
    for (c, comp) in comps.iter().enumerate() {
        for k in 0..comp.len() {
            let _ = writeln!(
                out,
                "  c{c}_{k} [label={}];",
                quote(&comp.render_vertex(alg, k))
            );
        }
        for &(s, t) in &comp.arrows {
            let _ = writeln!(out, "  c{c}_{s} -> c{c}_{t};");
        }
        for &(z, tz) in &comp.tau {
            let _ = writeln!(out, "  c{c}_{z} -> c{c}_{tz} [style=dashed];");
        }
    }
    out.push_str("}\n");
    out
}

pub fn components_json(alg: &BoundQuiverAlgebra, comps: &[StableComponent]) -> Value {
    let items: Vec<Value> = comps
        .iter()
        .map(|comp| {
            let check = check_component(alg, comp);
            json!({
                "class": comp.class,
                "n": comp.n,
                "exact": comp.exact,
                "size": comp.len(),
                "vertices": (0..comp.len()).map(|k| comp.render_vertex(alg, k)).collect::<Vec<_>>(),
                "arrows": comp.arrows.iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
                "tau": comp.tau.iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
                "checks": check,
                "divisibility": divisibility_report(comp.n, comp),
            })
        })
        .collect();
    json!({"schema": COMPONENT_SCHEMA, "components": items})
}

fn relation_quiver_dot(alg: &BoundQuiverAlgebra, rq: &RelationQuiver) -> String {
    let mut out = String::from("digraph relations {\n");
    for a in 0..alg.arrow_count() {
        let _ = writeln!(out, "  r{a} [label={}];", quote(alg.arrow_name(a)));
    }
    for &(b, a) in rq.edges() {
        let _ = writeln!(out, "  r{b} -> r{a};");
    }
    out.push_str("}\n");
    out
}

pub fn relation_quiver_json(alg: &BoundQuiverAlgebra, rq: &RelationQuiver) -> Value {
    let cls = Classification::new(alg);
    let names = |xs: &[usize]| {
        xs.iter()
            .map(|&a| alg.arrow_name(a).to_string())
            .collect::<Vec<_>>()
    };
    json!({
        "schema": RELATION_QUIVER_SCHEMA,
        "vertices": names(&(0..alg.arrow_count()).collect::<Vec<_>>()),
        "edges": rq.edges().iter().map(|&(b, a)| json!([alg.arrow_name(b), alg.arrow_name(a)])).collect::<Vec<_>>(),
        "perfect_components": cls.components.iter().map(|c| names(&c.cycle)).collect::<Vec<_>>(),
    })
}

fn sequences_dot(alg: &BoundQuiverAlgebra, seqs: &[AlmostSplitSequence]) -> String {
    let mut out = String::from("digraph sequences {\n");
    for (s, seq) in seqs.iter().enumerate() {
        let _ = writeln!(out, "  s{s}_l [label={}];", quote(&seq.left.render(alg)));
        for (k, m) in seq.middles.iter().enumerate() {
            let _ = writeln!(out, "  s{s}_m{k} [label={}];", quote(&m.render(alg)));
        }
        let _ = writeln!(out, "  s{s}_r [label={}];", quote(&seq.right.render(alg)));
        for k in 0..seq.middles.len() {
            let _ = writeln!(out, "  s{s}_l -> s{s}_m{k};");
            let _ = writeln!(out, "  s{s}_m{k} -> s{s}_r;");
        }
        let _ = writeln!(out, "  s{s}_r -> s{s}_l [style=dashed];");
    }
    out.push_str("}\n");
    out
}

pub fn sequences_json(
    alg: &BoundQuiverAlgebra,
    seqs: &[AlmostSplitSequence],
) -> Result<Value, RepError> {
    let mut items = Vec::new();
    for seq in seqs {
        let check = verify_sequence(alg, seq)?;
        items.push(json!({
            "n": seq.n,
            "family": seq.family,
            "left": seq.left.render(alg),
            "middles": seq.middles.iter().map(|m| m.render(alg)).collect::<Vec<_>>(),
            "right": seq.right.render(alg),
            "checks": check,
        }));
    }
    Ok(json!({"schema": SEQUENCES_SCHEMA, "sequences": items}))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gp::relation_quiver;
    use crate::qalg::parse_algebra;
    use crate::repcat::knit::stable_components;

    #[test]
    fn loop_component_dot() {
        let alg = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap();
        let comps = stable_components(&alg, 2);
        let dot = export_quiver(&alg, Exportable::Components(&comps), Format::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches("[style=dashed]").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(matches!(
            export_quiver(&alg, Exportable::Components(&comps), Format::Text),
            Err(RepError::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn hereditary_gives_empty_graph() {
        let alg = parse_algebra("vertices: 1 2; arrows: a: 1 -> 2").unwrap();
        let comps = stable_components(&alg, 2);
        assert!(comps.is_empty());
        let dot = export_quiver(&alg, Exportable::Components(&comps), Format::Dot).unwrap();
        assert_eq!(dot, "digraph component {\n}\n");
        let js = components_json(&alg, &comps);
        assert_eq!(js["components"], json!([]));
    }

    #[test]
    fn nakayama_relation_cycle() {
        let alg = parse_algebra("vertices: 1 2 3\narrows: a1: 1 -> 2, a2: 2 -> 3, a3: 3 -> 1\nrelations: a2*a1, a3*a2, a1*a3")
            .unwrap();
        let dot = export_quiver(
            &alg,
            Exportable::RelationQuiver(&relation_quiver(&alg)),
            Format::Dot,
        )
        .unwrap();
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert!(dot.contains("r1 -> r0;"));
    }
}
