//! JSON input and output for representations.
//!
//! A stable representation file looks like
//!
//! ```json
//! {"quiver": "A2",
//!  "vertices": {"1": [{"class": "x", "mult": 1}], "2": [{"class": "x", "mult": 1}]},
//!  "arrows": {"a1": [[1]]}}
//! ```
//!
//! `quiver` is `"A<k>"` for the linear quiver, quiver text, or an object
//! `{"vertices": [...], "arrows": [[name, source, target], ...]}`. Missing
//! vertices are zero and missing arrows are zero maps. Summands at a vertex
//! are listed in file order, each repeated `mult` times.
//!
//! A Gorenstein projective representation uses summands `{"projective": v}`
//! or `{"ideal": a}` and block entries `0`, `{"id": c}`, `{"emb": c}` or
//! `{"cover": c}`.

use serde_json::{json, Map, Value};

use crate::gp::GpIndec;
use crate::oracle::Matrix;
use crate::qalg::{parse_quiver, BoundQuiverAlgebra, Quiver};

use super::reps::{GpRep, StableRep};
use super::symbolic::{Entry, SymbolicModule, SymbolicMorphism};
use super::RepError;

fn fmt_err(msg: impl Into<String>) -> RepError {
    RepError::Format(msg.into())
}

pub fn quiver_from_json(v: &Value) -> Result<Quiver, RepError> {
    match v {
        Value::String(s) => {
            let t = s.trim();
            if let Some(k) = t.strip_prefix('A').map(|r| r.trim_start_matches('_')) {
                if let Ok(k) = k.parse::<usize>() {
                    if k == 0 {
                        return Err(fmt_err("A0 is not a quiver"));
                    }
                    return Ok(Quiver::linear(k));
                }
            }
            Ok(parse_quiver(t)?)
        }
        Value::Object(o) => {
            let vertices = o
                .get("vertices")
                .and_then(Value::as_array)
                .ok_or_else(|| fmt_err("quiver object needs a `vertices` list"))?
                .iter()
                .map(scalar_name)
                .collect::<Result<Vec<_>, _>>()?;
            let mut arrows = Vec::new();
            for a in o
                .get("arrows")
                .and_then(Value::as_array)
                .map(Vec::as_slice)
                .unwrap_or(&[])
            {
                let parts = a
                    .as_array()
                    .filter(|p| p.len() == 3)
                    .ok_or_else(|| fmt_err("arrow must be [name, source, target]"))?;
                arrows.push((
                    scalar_name(&parts[0])?,
                    scalar_name(&parts[1])?,
                    scalar_name(&parts[2])?,
                ));
            }
            Ok(Quiver::new(vertices, arrows)?)
        }
        _ => Err(fmt_err("`quiver` must be a name, quiver text or an object")),
    }
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertices(),
        "arrows": q.arrows().iter().map(|a| json!([a.name, q.vertices()[a.source], q.vertices()[a.target]])).collect::<Vec<_>>(),
    })
}

fn scalar_name(v: &Value) -> Result<String, RepError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(fmt_err(format!("expected a name, found {v}"))),
    }
}

fn scalar(v: &Value, p: u64) -> Result<u64, RepError> {
    let n = v
        .as_i64()
        .ok_or_else(|| fmt_err(format!("expected an integer, found {v}")))?;
    Ok(n.rem_euclid(p as i64) as u64)
}

fn object<'a>(root: &'a Value, key: &str) -> Result<Option<&'a Map<String, Value>>, RepError> {
    match root.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Object(o)) => Ok(Some(o)),
        Some(_) => Err(fmt_err(format!("`{key}` must be an object"))),
    }
}

fn check_keys(
    map: &Map<String, Value>,
    known: impl Fn(&str) -> bool,
    what: &str,
) -> Result<(), RepError> {
    match map.keys().find(|k| !known(k)) {
        Some(k) => Err(fmt_err(format!("unknown {what} `{k}`"))),
        None => Ok(()),
    }
}

fn matrix_rows(v: &Value, name: &str) -> Result<Vec<Vec<Value>>, RepError> {
    v.as_array()
        .ok_or_else(|| fmt_err(format!("matrix of `{name}` must be a list of rows")))?
        .iter()
        .map(|r| {
            r.as_array()
                .cloned()
                .ok_or_else(|| fmt_err(format!("row of `{name}` must be a list")))
        })
        .collect()
}

fn shaped<T>(rows: Vec<Vec<T>>, r: usize, c: usize, name: &str) -> Result<Vec<Vec<T>>, RepError> {
    // an empty target has no rows to carry the column count
    if rows.len() != r || (r > 0 && rows.iter().any(|row| row.len() != c)) {
        return Err(fmt_err(format!("matrix of `{name}` must be {r}x{c}")));
    }
    Ok(rows)
}

pub fn stable_rep_from_json(alg: &BoundQuiverAlgebra, text: &str) -> Result<StableRep, RepError> {
    let root: Value = serde_json::from_str(text).map_err(|e| fmt_err(e.to_string()))?;
    let quiver = quiver_from_json(
        root.get("quiver")
            .ok_or_else(|| fmt_err("missing `quiver`"))?,
    )?;
    let p = alg.field_char();
    let mut vertices = vec![Vec::new(); quiver.vertex_count()];
    if let Some(vs) = object(&root, "vertices")? {
        check_keys(vs, |k| quiver.vertex_index(k).is_some(), "vertex")?;
        for (name, list) in vs {
            let v = quiver.vertex_index(name).unwrap();
            for item in list
                .as_array()
                .ok_or_else(|| fmt_err(format!("vertex `{name}` needs a list")))?
            {
                let class = item
                    .get("class")
                    .ok_or_else(|| fmt_err("summand needs `class`"))?;
                let class = scalar_name(class)?;
                let a = alg
                    .quiver()
                    .arrow_index(&class)
                    .ok_or_else(|| fmt_err(format!("`{class}` is not an arrow of the algebra")))?;
                let mult = match item.get("mult") {
                    None => 1,
                    Some(m) => m
                        .as_u64()
                        .ok_or_else(|| fmt_err("`mult` must be a non-negative integer"))?
                        as usize,
                };
                vertices[v].extend(std::iter::repeat_n(a, mult));
            }
        }
    }
    let mut arrows: Vec<Matrix> = quiver
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(vertices[ar.target].len(), vertices[ar.source].len(), p))
        .collect();
    if let Some(arr) = object(&root, "arrows")? {
        check_keys(arr, |k| quiver.arrow_index(k).is_some(), "arrow")?;
        for (name, m) in arr {
            let k = quiver.arrow_index(name).unwrap();
            let ar = quiver.arrow(k);
            let (r, c) = (vertices[ar.target].len(), vertices[ar.source].len());
            let rows = shaped(matrix_rows(m, name)?, r, c, name)?;
            for (i, row) in rows.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    arrows[k].set(i, j, scalar(x, p)?);
                }
            }
        }
    }
    Ok(StableRep {
        quiver,
        p,
        vertices,
        arrows,
    })
}

pub fn stable_rep_to_json(alg: &BoundQuiverAlgebra, r: &StableRep) -> Value {
    let q = &r.quiver;
    let mut vertices = Map::new();
    for (v, summands) in r.vertices.iter().enumerate() {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &a in summands {
            match runs.last_mut() {
                Some((b, k)) if *b == a => *k += 1,
                _ => runs.push((a, 1)),
            }
        }
        let items: Vec<Value> = runs
            .iter()
            .map(|&(a, k)| json!({"class": alg.arrow_name(a), "mult": k}))
            .collect();
        vertices.insert(q.vertices()[v].clone(), Value::Array(items));
    }
    let mut arrows = Map::new();
    for (k, ar) in q.arrows().iter().enumerate() {
        let m = &r.arrows[k];
        let rows: Vec<Vec<u64>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
            .collect();
        arrows.insert(ar.name.clone(), json!(rows));
    }
    json!({"quiver": quiver_to_json(q), "vertices": vertices, "arrows": arrows})
}

fn summand_from_json(alg: &BoundQuiverAlgebra, v: &Value) -> Result<GpIndec, RepError> {
    if let Some(x) = v.get("projective") {
        let name = scalar_name(x)?;
        let w = alg
            .quiver()
            .vertex_index(&name)
            .ok_or_else(|| fmt_err(format!("unknown vertex `{name}`")))?;
        return Ok(GpIndec::Projective(w));
    }
    if let Some(x) = v.get("ideal") {
        let name = scalar_name(x)?;
        let a = alg
            .quiver()
            .arrow_index(&name)
            .ok_or_else(|| fmt_err(format!("unknown arrow `{name}`")))?;
        return Ok(GpIndec::ArrowIdeal(a));
    }
    Err(fmt_err(format!(
        "summand must be {{\"projective\": v}} or {{\"ideal\": a}}, found {v}"
    )))
}

fn summand_to_json(alg: &BoundQuiverAlgebra, g: GpIndec) -> Value {
    match g {
        GpIndec::Projective(v) => json!({"projective": alg.vertex_name(v)}),
        GpIndec::ArrowIdeal(a) => json!({"ideal": alg.arrow_name(a)}),
    }
}

fn entry_from_json(v: &Value, p: u64) -> Result<Entry, RepError> {
    match v {
        Value::Number(_) if v.as_i64() == Some(0) => Ok(Entry::Zero),
        Value::String(s) if s == "0" => Ok(Entry::Zero),
        Value::Object(o) if o.len() == 1 => {
            let (k, c) = o.iter().next().unwrap();
            let c = scalar(c, p)?;
            match k.as_str() {
                "id" => Ok(Entry::Id(c)),
                "emb" => Ok(Entry::Emb(c)),
                "cover" => Ok(Entry::Cover(c)),
                _ => Err(fmt_err(format!("unknown entry kind `{k}`"))),
            }
        }
        _ => Err(fmt_err(format!("bad block entry {v}"))),
    }
}

fn entry_to_json(e: Entry) -> Value {
    match e {
        Entry::Zero => json!(0),
        Entry::Id(c) => json!({"id": c}),
        Entry::Emb(c) => json!({"emb": c}),
        Entry::Cover(c) => json!({"cover": c}),
    }
}

pub fn gp_rep_from_json(alg: &BoundQuiverAlgebra, text: &str) -> Result<GpRep, RepError> {
    let root: Value = serde_json::from_str(text).map_err(|e| fmt_err(e.to_string()))?;
    let quiver = quiver_from_json(
        root.get("quiver")
            .ok_or_else(|| fmt_err("missing `quiver`"))?,
    )?;
    let p = alg.field_char();
    let mut vertices = vec![SymbolicModule::default(); quiver.vertex_count()];
    if let Some(vs) = object(&root, "vertices")? {
        check_keys(vs, |k| quiver.vertex_index(k).is_some(), "vertex")?;
        for (name, list) in vs {
            let v = quiver.vertex_index(name).unwrap();
            let items = list
                .as_array()
                .ok_or_else(|| fmt_err(format!("vertex `{name}` needs a list")))?;
            vertices[v] = SymbolicModule::new(
                items
                    .iter()
                    .map(|x| summand_from_json(alg, x))
                    .collect::<Result<_, _>>()?,
            );
        }
    }
    let mut arrows: Vec<SymbolicMorphism> = quiver
        .arrows()
        .iter()
        .map(|ar| SymbolicMorphism::zero(vertices[ar.target].len(), vertices[ar.source].len()))
        .collect();
    if let Some(arr) = object(&root, "arrows")? {
        check_keys(arr, |k| quiver.arrow_index(k).is_some(), "arrow")?;
        for (name, m) in arr {
            let k = quiver.arrow_index(name).unwrap();
            let ar = quiver.arrow(k);
            let (r, c) = (vertices[ar.target].len(), vertices[ar.source].len());
            let rows = shaped(matrix_rows(m, name)?, r, c, name)?;
            for (i, row) in rows.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    arrows[k].set(i, j, entry_from_json(x, p)?);
                }
            }
        }
    }
    Ok(GpRep {
        quiver,
        vertices,
        arrows,
    })
}

pub fn gp_rep_to_json(alg: &BoundQuiverAlgebra, rep: &GpRep) -> Value {
    let q = &rep.quiver;
    let mut vertices = Map::new();
    for (v, m) in rep.vertices.iter().enumerate() {
        let items: Vec<Value> = m
            .summands
            .iter()
            .map(|&g| summand_to_json(alg, g))
            .collect();
        vertices.insert(q.vertices()[v].clone(), Value::Array(items));
    }
    let mut arrows = Map::new();
    for (k, ar) in q.arrows().iter().enumerate() {
        let f = &rep.arrows[k];
        let rows: Vec<Value> = (0..f.rows())
            .map(|i| Value::Array((0..f.cols()).map(|j| entry_to_json(f.get(i, j))).collect()))
            .collect();
        arrows.insert(ar.name.clone(), Value::Array(rows));
    }
    json!({"quiver": quiver_to_json(q), "vertices": vertices, "arrows": arrows})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::parse_algebra;
    use crate::repcat::lift;

    fn kx2() -> BoundQuiverAlgebra {
        parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap()
    }

    #[test]
    fn stable_rep_roundtrip() {
        let alg = kx2();
        let text = r#"{"quiver": "A2", "vertices": {"1": [{"class": "x", "mult": 2}], "2": [{"class": "x"}]},
                       "arrows": {"a1": [[1, -1]]}}"#;
        let r = stable_rep_from_json(&alg, text).unwrap();
        assert_eq!(r.vertices, vec![vec![0, 0], vec![0]]);
        assert_eq!(r.arrows[0].get(0, 1), 100);
        let back = stable_rep_from_json(&alg, &stable_rep_to_json(&alg, &r).to_string()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn gp_rep_roundtrip() {
        let alg = kx2();
        let r = stable_rep_from_json(&alg, r#"{"quiver": "A2", "vertices": {"1": [{"class": "x"}], "2": [{"class": "x"}]}, "arrows": {"a1": [[1]]}}"#)
            .unwrap();
        let h = lift(&alg, &r).unwrap();
        let v = gp_rep_to_json(&alg, &h);
        assert_eq!(v["arrows"]["a1"], json!([[{"emb": 1}], [{"id": 1}]]));
        assert_eq!(gp_rep_from_json(&alg, &v.to_string()).unwrap(), h);
    }

    #[test]
    fn format_errors() {
        let alg = kx2();
        let bad = [
            r#"{"vertices": {}}"#,
            r#"{"quiver": "A2", "vertices": {"9": []}}"#,
            r#"{"quiver": "A2", "vertices": {"1": [{"class": "y"}]}}"#,
            r#"{"quiver": "A2", "vertices": {"1": [{"class": "x"}]}, "arrows": {"a1": [[1]]}}"#,
        ];
        for b in bad {
            assert!(
                matches!(stable_rep_from_json(&alg, b), Err(RepError::Format(_))),
                "{b}"
            );
        }
        let q =
            quiver_from_json(&json!({"vertices": [1, 2], "arrows": [["u", 1, 2], ["w", 1, 2]]}))
                .unwrap();
        assert_eq!(q.arrow_count(), 2);
    }
}
