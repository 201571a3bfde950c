//! Line-oriented text format.
//!
//! ```text
//! # comment
//! vertices: 1 2 3
//! arrows: a: 1 -> 2, b: 2 -> 3
//! relations: b*a
//! ```
//!
//! Statements may also be separated by `;` on a single line.

use super::{BoundQuiverAlgebra, QalgError, Quiver, DEFAULT_PRIME};

struct Statement<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn statements(text: &str) -> Result<Vec<Statement<'_>>, QalgError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        for part in body.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let Some((key, value)) = part.split_once(':') else {
                return Err(QalgError::Parse {
                    line,
                    msg: format!("expected `key: value`, found `{part}`"),
                });
            };
            out.push(Statement {
                line,
                key: key.trim(),
                value: value.trim(),
            });
        }
    }
    Ok(out)
}

fn valid_id(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| !c.is_whitespace() && !":,;*#".contains(c))
        && !s.contains("->")
}

fn parse_arrows(
    st: &Statement<'_>,
    out: &mut Vec<(String, String, String)>,
) -> Result<(), QalgError> {
    let err = |msg: String| QalgError::Parse { line: st.line, msg };
    for item in st.value.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (name, ends) = item
            .split_once(':')
            .ok_or_else(|| err(format!("arrow `{item}` must look like `name: src -> tgt`")))?;
        let (s, t) = ends
            .split_once("->")
            .ok_or_else(|| err(format!("arrow `{item}` is missing `->`")))?;
        let (name, s, t) = (name.trim(), s.trim(), t.trim());
        for id in [name, s, t] {
            if !valid_id(id) {
                return Err(err(format!("bad identifier `{id}` in arrow `{item}`")));
            }
        }
        out.push((name.to_string(), s.to_string(), t.to_string()));
    }
    Ok(())
}

struct Raw<'a> {
    vertices: Option<Vec<String>>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<(usize, &'a str)>,
    saw_relations: bool,
}

fn collect(text: &str) -> Result<Raw<'_>, QalgError> {
    let mut raw = Raw {
        vertices: None,
        arrows: Vec::new(),
        relations: Vec::new(),
        saw_relations: false,
    };
    for st in statements(text)? {
        match st.key {
            "vertices" => {
                if raw.vertices.is_some() {
                    return Err(QalgError::Parse {
                        line: st.line,
                        msg: "repeated `vertices:` line".into(),
                    });
                }
                let vs: Vec<String> = st
                    .value
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                if let Some(bad) = vs.iter().find(|v| !valid_id(v)) {
                    return Err(QalgError::Parse {
                        line: st.line,
                        msg: format!("bad vertex id `{bad}`"),
                    });
                }
                raw.vertices = Some(vs);
            }
            "arrows" => parse_arrows(&st, &mut raw.arrows)?,
            "relations" => {
                raw.saw_relations = true;
                for item in st.value.split(',') {
                    let item = item.trim();
                    if !item.is_empty() {
                        raw.relations.push((st.line, item));
                    }
                }
            }
            other => {
                return Err(QalgError::Parse {
                    line: st.line,
                    msg: format!("unknown key `{other}`"),
                });
            }
        }
    }
    Ok(raw)
}

/// Parses the algebra text format; the oracle field defaults to F_101.
pub fn parse_algebra(text: &str) -> Result<BoundQuiverAlgebra, QalgError> {
    let raw = collect(text)?;
    let vertices = raw.vertices.ok_or(QalgError::Parse {
        line: 0,
        msg: "missing `vertices:` line".into(),
    })?;
    let quiver = Quiver::new(vertices, raw.arrows)?;
    let mut relations = Vec::new();
    for (line, item) in raw.relations {
        let parts: Vec<&str> = item.split('*').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(QalgError::Parse {
                line,
                msg: format!("malformed relation `{item}`"),
            });
        }
        if parts.len() != 2 {
            return Err(QalgError::NonQuadratic(item.to_string()));
        }
        let lookup = |n: &str| {
            quiver.arrow_index(n).ok_or_else(|| {
                QalgError::Validation(format!("relation `{item}` uses unknown arrow `{n}`"))
            })
        };
        relations.push((lookup(parts[0])?, lookup(parts[1])?));
    }
    BoundQuiverAlgebra::new(quiver, relations, DEFAULT_PRIME)
}

/// Parses a bare quiver: the same format without a `relations:` line.
pub fn parse_quiver(text: &str) -> Result<Quiver, QalgError> {
    let raw = collect(text)?;
    if raw.saw_relations {
        return Err(QalgError::Parse {
            line: 0,
            msg: "quiver files take no `relations:` line".into(),
        });
    }
    let vertices = raw.vertices.ok_or(QalgError::Parse {
        line: 0,
        msg: "missing `vertices:` line".into(),
    })?;
    Quiver::new(vertices, raw.arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_form() {
        let alg = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap();
        assert_eq!(alg.relations(), &[(0, 0)]);
        assert_eq!(alg.field_char(), 101);
    }

    #[test]
    fn multiline_with_comments() {
        let text = "# two arrows\nvertices: 1 2 3\narrows: a: 1 -> 2\narrows: b: 2 -> 3 # second line\nrelations: b*a\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg.arrow_count(), 2);
        assert_eq!(alg.relations().len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_algebra("vertices 1"),
            Err(QalgError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_algebra("vertices: 1\nfoo: 2"),
            Err(QalgError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_algebra("vertices: 1; arrows: x: 1 -> 2"),
            Err(QalgError::Validation(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x*x"),
            Err(QalgError::NonQuadratic(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x"),
            Err(QalgError::NonQuadratic(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations:"),
            Err(QalgError::InfiniteDimensional(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1 2 3; arrows: a: 1 -> 2, b: 2 -> 3; relations: a*b"),
            Err(QalgError::Validation(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1 1"),
            Err(QalgError::Validation(_))
        ));
        assert!(matches!(
            parse_algebra("vertices: 1; arrows: x: 1 -> 1, x: 1 -> 1; relations: x*x"),
            Err(QalgError::Validation(_))
        ));
    }

    #[test]
    fn quiver_format() {
        let q = parse_quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 1 -> 2").unwrap();
        assert_eq!(q.arrow_count(), 2);
        assert!(parse_quiver("vertices: 1\nrelations:").is_err());
    }

    #[test]
    fn text_roundtrip() {
        let alg = parse_algebra("vertices: 1 2; arrows: a: 1 -> 2, b: 2 -> 1; relations: a*b, b*a")
            .unwrap();
        assert_eq!(parse_algebra(&alg.to_text()).unwrap(), alg);
    }
}
