//! Quivers, paths and bound quiver algebras with quadratic monomial relations.
//!
//! Paths compose right to left: the written path `b*a` traverses `a` first.
//! Right modules are used throughout, so `e_v Λ` has as basis the nonzero
//! paths ending at `v`.

mod parse;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::is_cyclic_directed;
use petgraph::graph::DiGraph;
use thiserror::Error;

pub use parse::{parse_algebra, parse_quiver};

/// Default characteristic used by the linear algebra oracle.
pub const DEFAULT_PRIME: u64 = 101;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QalgError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid algebra: {0}")]
    Validation(String),
    #[error("algebra is infinite dimensional: nonzero cycle through {0}")]
    InfiniteDimensional(String),
    #[error("relation `{0}` is not a path of length 2")]
    NonQuadratic(String),
    #[error("paths `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are given as (name, source id, target id).
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, QalgError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(QalgError::Validation(format!("duplicate vertex `{v}`")));
            }
        }
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut names = BTreeSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(QalgError::Validation(format!("duplicate arrow `{name}`")));
            }
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| {
                    QalgError::Validation(format!("arrow `{name}` uses unknown vertex `{v}`"))
                })
            };
            let (source, target) = (lookup(&s)?, lookup(&t)?);
            out.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    /// The linear quiver 1 -> 2 -> ... -> n with arrows a1, a2, ...
    pub fn linear(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(vertices, arrows).expect("linear quiver is valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn is_acyclic(&self) -> bool {
        !is_cyclic_directed(&self.digraph())
    }

    fn digraph(&self) -> DiGraph<(), ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = (0..self.vertices.len()).map(|_| g.add_node(())).collect();
        for a in &self.arrows {
            g.add_edge(nodes[a.source], nodes[a.target], ());
        }
        g
    }

    /// Vertices ordered so every arrow goes from an earlier to a later vertex.
    /// Ties keep declaration order. None when the quiver has a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = (0..n).find(|&v| !done[v] && indeg[v] == 0)?;
            done[v] = true;
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
            }
        }
        Some(order)
    }

    /// Text form accepted by [`parse_quiver`].
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertices.join(" "));
        if !self.arrows.is_empty() {
            let items: Vec<String> = self
                .arrows
                .iter()
                .map(|a| {
                    format!(
                        "{}: {} -> {}",
                        a.name, self.vertices[a.source], self.vertices[a.target]
                    )
                })
                .collect();
            s.push_str(&format!("arrows: {}\n", items.join(", ")));
        }
        s
    }
}

/// A path, stored in written order: `arrows[0]` is traversed last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// Builds a path from arrows in written order, checking composability.
    pub fn from_written(q: &Quiver, arrows: &[usize]) -> Result<Self, QalgError> {
        let Some((&first, rest)) = arrows.split_first() else {
            return Err(QalgError::Validation(
                "empty path needs a base vertex".into(),
            ));
        };
        let mut p = Path::arrow(q, first);
        for &a in rest {
            let next = Path::arrow(q, a);
            if next.target != p.source {
                return Err(QalgError::NotComposable(p.render(q), next.render(q)));
            }
            p.arrows.push(a);
            p.source = next.source;
        }
        Ok(p)
    }

    pub fn source(&self) -> usize {
        self.source
    }
    pub fn target(&self) -> usize {
        self.target
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
    /// Arrows in written order, leftmost (last traversed) first.
    pub fn written(&self) -> &[usize] {
        &self.arrows
    }
    /// The last traversed arrow.
    pub fn leading(&self) -> Option<usize> {
        self.arrows.first().copied()
    }
    /// The first traversed arrow.
    pub fn trailing(&self) -> Option<usize> {
        self.arrows.last().copied()
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            let names: Vec<&str> = self
                .arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect();
            names.join("*")
        }
    }

    fn sort_key(&self) -> (usize, Vec<usize>, usize) {
        (self.arrows.len(), self.arrows.clone(), self.source)
    }
}

/// Result of composing two paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Composite {
    Path(Path),
    Zero,
}

#[derive(Debug, Clone)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    /// Pairs (b, a) meaning the written path `b*a` lies in the ideal.
    relations: Vec<(usize, usize)>,
    killed: BTreeSet<(usize, usize)>,
    field_char: u64,
    paths: Vec<Path>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.killed == other.killed
            && self.field_char == other.field_char
    }
}

impl BoundQuiverAlgebra {
    pub fn new(
        quiver: Quiver,
        relations: Vec<(usize, usize)>,
        field_char: u64,
    ) -> Result<Self, QalgError> {
        let mut killed = BTreeSet::new();
        for &(b, a) in &relations {
            let (ab, aa) = (quiver.arrow(b), quiver.arrow(a));
            if aa.target != ab.source {
                return Err(QalgError::Validation(format!(
                    "relation {}*{} is not composable",
                    ab.name, aa.name
                )));
            }
            if !killed.insert((b, a)) {
                return Err(QalgError::Validation(format!(
                    "duplicate relation {}*{}",
                    ab.name, aa.name
                )));
            }
        }
        let mut alg = BoundQuiverAlgebra {
            quiver,
            relations,
            killed,
            field_char,
            paths: Vec::new(),
        };
        alg.check_finite()?;
        alg.paths = alg.enumerate();
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }
    pub fn field_char(&self) -> u64 {
        self.field_char
    }
    pub fn with_field_char(&self, p: u64) -> Self {
        BoundQuiverAlgebra {
            field_char: p,
            ..self.clone()
        }
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }
    pub fn arrow_name(&self, a: usize) -> &str {
        &self.quiver.arrow(a).name
    }
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver.vertices()[v]
    }

    /// True when the written path `b*a` is in the ideal.
    pub fn kills(&self, b: usize, a: usize) -> bool {
        self.killed.contains(&(b, a))
    }

    pub fn relation_text(&self, (b, a): (usize, usize)) -> String {
        format!("{}*{}", self.arrow_name(b), self.arrow_name(a))
    }

    /// Arrow graph with an edge a -> b whenever `b*a` is composable and nonzero.
    fn check_finite(&self) -> Result<(), QalgError> {
        let n = self.arrow_count();
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
        for a in 0..n {
            for b in 0..n {
                if self.quiver.arrow(a).target == self.quiver.arrow(b).source && !self.kills(b, a) {
                    g.add_edge(nodes[a], nodes[b], ());
                }
            }
        }
        if is_cyclic_directed(&g) {
            let sccs = petgraph::algo::tarjan_scc(&g);
            let cyc = sccs
                .into_iter()
                .find(|c| c.len() > 1 || g.contains_edge(c[0], c[0]))
                .map(|c| {
                    let mut names: Vec<&str> =
                        c.iter().map(|i| self.arrow_name(i.index())).collect();
                    names.sort();
                    names.join(", ")
                })
                .unwrap_or_default();
            return Err(QalgError::InfiniteDimensional(cyc));
        }
        Ok(())
    }

    fn enumerate(&self) -> Vec<Path> {
        let q = &self.quiver;
        let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = (0..q.arrow_count()).map(|a| Path::arrow(q, a)).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for a in 0..q.arrow_count() {
                    if let Some(longer) = self.right_multiply(p, a) {
                        next.push(longer);
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out.sort_by_key(Path::sort_key);
        out
    }

    /// `p*a` (traverse `a`, then `p`) when composable and nonzero.
    pub fn right_multiply(&self, p: &Path, a: usize) -> Option<Path> {
        let ar = self.quiver.arrow(a);
        if ar.target != p.source {
            return None;
        }
        if let Some(last) = p.trailing() {
            if self.kills(last, a) {
                return None;
            }
        }
        let mut arrows = p.arrows.clone();
        arrows.push(a);
        Some(Path {
            source: ar.source,
            target: p.target,
            arrows,
        })
    }

    /// The product `p*q`: first `q`, then `p`.
    pub fn compose(&self, p: &Path, q: &Path) -> Result<Composite, QalgError> {
        if q.target != p.source {
            return Err(QalgError::NotComposable(
                p.render(&self.quiver),
                q.render(&self.quiver),
            ));
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        if arrows.windows(2).any(|w| self.kills(w[0], w[1])) {
            return Ok(Composite::Zero);
        }
        Ok(Composite::Path(Path {
            source: q.source,
            target: p.target,
            arrows,
        }))
    }

    pub fn is_nonzero(&self, p: &Path) -> bool {
        p.arrows.windows(2).all(|w| !self.kills(w[0], w[1]))
    }

    /// Basis of the algebra, sorted by length then written arrow order.
    pub fn nonzero_paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    /// Basis of the projective `e_v Λ`.
    pub fn paths_ending_at(&self, v: usize) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter(move |p| p.target == v)
    }

    /// Basis of the arrow ideal `a Λ`.
    pub fn paths_leading_with(&self, a: usize) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter(move |p| p.leading() == Some(a))
    }

    /// Reverses every arrow; `a` becomes `a^op` and `a^op` becomes `a`.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let q = &self.quiver;
        let arrows = q
            .arrows
            .iter()
            .map(|a| {
                let name = match a.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", a.name),
                };
                (
                    name,
                    q.vertices[a.target].clone(),
                    q.vertices[a.source].clone(),
                )
            })
            .collect();
        let quiver = Quiver::new(q.vertices.clone(), arrows).expect("renaming keeps ids unique");
        let relations = self.relations.iter().map(|&(b, a)| (a, b)).collect();
        BoundQuiverAlgebra::new(quiver, relations, self.field_char)
            .expect("opposite of a valid algebra")
    }

    /// Text form accepted by [`parse_algebra`].
    pub fn to_text(&self) -> String {
        let mut s = self.quiver.to_text();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|&r| self.relation_text(r))
            .collect();
        s.push_str(&format!("relations: {}\n", rels.join(", ")));
        s
    }
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
