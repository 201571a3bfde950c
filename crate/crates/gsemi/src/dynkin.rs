//! Dynkin recognition of quivers and positive roots.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;
use thiserror::Error;

use crate::gp::Classification;
use crate::qalg::{BoundQuiverAlgebra, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(k) => write!(f, "A{k}"),
            DynkinType::D(k) => write!(f, "D{k}"),
            DynkinType::E6 => f.write_str("E6"),
            DynkinType::E7 => f.write_str("E7"),
            DynkinType::E8 => f.write_str("E8"),
        }
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DynkinError {
    #[error("quiver is not connected")]
    Disconnected,
    #[error("quiver is empty")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognition {
    Dynkin(DynkinType),
    NotDynkin,
}

/// Forgets orientation and matches the underlying graph against ADE.
pub fn classify_underlying_graph(q: &Quiver) -> Result<Recognition, DynkinError> {
    let n = q.vertex_count();
    if n == 0 {
        return Err(DynkinError::Empty);
    }
    let mut uf = UnionFind::<usize>::new(n);
    for a in q.arrows() {
        uf.union(a.source, a.target);
    }
    if (1..n).any(|v| !uf.equiv(0, v)) {
        return Err(DynkinError::Disconnected);
    }
    let mut edges = BTreeSet::new();
    for a in q.arrows() {
        let e = (a.source.min(a.target), a.source.max(a.target));
        if a.source == a.target || !edges.insert(e) {
            return Ok(Recognition::NotDynkin);
        }
    }
    // connected with n - 1 edges means a tree
    if edges.len() != n - 1 {
        return Ok(Recognition::NotDynkin);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(Recognition::Dynkin(DynkinType::A(n)));
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return Ok(Recognition::NotDynkin);
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = adj[centre]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    Ok(match (arms[0], arms[1], arms[2]) {
        (1, 1, c) => Recognition::Dynkin(DynkinType::D(c + 3)),
        (1, 2, 2) => Recognition::Dynkin(DynkinType::E6),
        (1, 2, 3) => Recognition::Dynkin(DynkinType::E7),
        (1, 2, 4) => Recognition::Dynkin(DynkinType::E8),
        _ => Recognition::NotDynkin,
    })
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(k) | DynkinType::D(k) => k,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Edges of the standard diagram on vertices `0..rank`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.rank();
        match *self {
            DynkinType::A(_) => (1..k).map(|i| (i - 1, i)).collect(),
            DynkinType::D(_) => {
                let mut e: Vec<_> = (1..k - 1).map(|i| (i - 1, i)).collect();
                e.push((k - 3, k - 1));
                e
            }
            _ => {
                let mut e: Vec<_> = (1..k - 1).map(|i| (i - 1, i)).collect();
                e.push((2, k - 1));
                e
            }
        }
    }
}

/// Largest coordinate a root may have; the highest root of E8 needs 6.
pub const MAX_COORDINATE: i64 = 6;

pub fn tits_form(edges: &[(usize, usize)], x: &[i64]) -> i64 {
    x.iter().map(|v| v * v).sum::<i64>() - edges.iter().map(|&(i, j)| x[i] * x[j]).sum::<i64>()
}

/// Positive roots as the closure of the simple roots under adding simple
/// roots while the Tits form stays 1. Sorted by height, then lexicographically.
pub fn positive_roots(t: DynkinType) -> Vec<Vec<i64>> {
    let k = t.rank();
    let edges = t.edges();
    let simple: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| (i == j) as i64).collect())
        .collect();
    let mut found: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier = simple;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..k {
                let mut s = r.clone();
                s[i] += 1;
                if s[i] <= MAX_COORDINATE && tits_form(&edges, &s) == 1 && found.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Vec<i64>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    #[serde(rename = "type")]
    pub kind: Option<DynkinType>,
    pub root_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Vec<i64>>>,
    pub cm_finite: bool,
    /// `None` when there are infinitely many.
    pub gp_count: Option<usize>,
}

impl CmReport {
    pub fn summary(&self) -> String {
        match (self.cm_finite, self.gp_count) {
            (true, Some(c)) => format!("CM-finite: yes; count = {c}"),
            _ => "CM-finite: no; count = infinite".into(),
        }
    }
}

/// CM-finiteness of Gorenstein projective representations of `q` over `alg`.
pub fn cm_classification(alg: &BoundQuiverAlgebra, q: &Quiver) -> Result<CmReport, DynkinError> {
    let m = Classification::new(alg).m();
    let kind = match classify_underlying_graph(q)? {
        Recognition::Dynkin(t) => Some(t),
        Recognition::NotDynkin => None,
    };
    let roots = kind.map(positive_roots);
    let root_count = roots.as_ref().map(Vec::len);
    let gp_count = if m == 0 {
        Some(0)
    } else {
        root_count.map(|r| m * r)
    };
    Ok(CmReport {
        kind,
        root_count,
        roots,
        cm_finite: kind.is_some() || m == 0,
        gp_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{parse_algebra, parse_quiver};

    fn q(text: &str) -> Quiver {
        parse_quiver(text).unwrap()
    }

    #[test]
    fn recognition() {
        assert_eq!(
            classify_underlying_graph(&Quiver::linear(3)),
            Ok(Recognition::Dynkin(DynkinType::A(3)))
        );
        let star = q("vertices: 1 2 3 4; arrows: a: 2 -> 1, b: 3 -> 1, c: 1 -> 4");
        assert_eq!(
            classify_underlying_graph(&star),
            Ok(Recognition::Dynkin(DynkinType::D(4)))
        );
        let kron = q("vertices: 1 2; arrows: a: 1 -> 2, b: 1 -> 2");
        assert_eq!(classify_underlying_graph(&kron), Ok(Recognition::NotDynkin));
        let split = q("vertices: 1 2 3; arrows: a: 1 -> 2");
        assert_eq!(
            classify_underlying_graph(&split),
            Err(DynkinError::Disconnected)
        );
        let e6 = q(
            "vertices: 1 2 3 4 5 6; arrows: a: 1 -> 2, b: 2 -> 3, c: 3 -> 4, d: 4 -> 5, e: 3 -> 6",
        );
        assert_eq!(
            classify_underlying_graph(&e6),
            Ok(Recognition::Dynkin(DynkinType::E6))
        );
        let affine_d4 =
            q("vertices: 1 2 3 4 5; arrows: a: 1 -> 2, b: 1 -> 3, c: 1 -> 4, d: 1 -> 5");
        assert_eq!(
            classify_underlying_graph(&affine_d4),
            Ok(Recognition::NotDynkin)
        );
    }

    #[test]
    fn standard_diagrams_are_recognized() {
        for t in [
            DynkinType::A(5),
            DynkinType::D(6),
            DynkinType::E6,
            DynkinType::E7,
            DynkinType::E8,
        ] {
            let verts: Vec<String> = (0..t.rank()).map(|i| i.to_string()).collect();
            let arrows = t
                .edges()
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| (format!("e{k}"), i.to_string(), j.to_string()))
                .collect();
            let quiver = Quiver::new(verts, arrows).unwrap();
            assert_eq!(
                classify_underlying_graph(&quiver),
                Ok(Recognition::Dynkin(t))
            );
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(DynkinType::A(3)).len(), 6);
        assert_eq!(positive_roots(DynkinType::D(4)).len(), 12);
        assert_eq!(positive_roots(DynkinType::D(5)).len(), 20);
        assert_eq!(positive_roots(DynkinType::E6).len(), 36);
        assert_eq!(positive_roots(DynkinType::E7).len(), 63);
        let e8 = positive_roots(DynkinType::E8);
        assert_eq!(e8.len(), 120);
        assert_eq!(e8.last().unwrap().iter().sum::<i64>(), 29);
    }

    #[test]
    fn closure_matches_brute_force() {
        for t in [DynkinType::A(4), DynkinType::D(4), DynkinType::D(5)] {
            let k = t.rank();
            let edges = t.edges();
            let mut brute = Vec::new();
            let total = (MAX_COORDINATE as usize + 1).pow(k as u32);
            for code in 1..total {
                let mut x = vec![0i64; k];
                let mut c = code;
                for xi in x.iter_mut() {
                    *xi = (c % (MAX_COORDINATE as usize + 1)) as i64;
                    c /= MAX_COORDINATE as usize + 1;
                }
                if tits_form(&edges, &x) == 1 {
                    brute.push(x);
                }
            }
            brute.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
            assert_eq!(brute, positive_roots(t), "{t}");
        }
    }

    #[test]
    fn cm_reports() {
        let kx2 = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap();
        let r = cm_classification(&kx2, &Quiver::linear(3)).unwrap();
        assert_eq!(r.summary(), "CM-finite: yes; count = 6");
        let kron = q("vertices: 1 2; arrows: a: 1 -> 2, b: 1 -> 2");
        assert_eq!(
            cm_classification(&kx2, &kron).unwrap().summary(),
            "CM-finite: no; count = infinite"
        );
        let her = parse_algebra("vertices: 1 2; arrows: a: 1 -> 2").unwrap();
        let r = cm_classification(&her, &kron).unwrap();
        assert_eq!((r.cm_finite, r.gp_count), (true, Some(0)));
        assert_eq!(r.summary(), "CM-finite: yes; count = 0");
    }
}
