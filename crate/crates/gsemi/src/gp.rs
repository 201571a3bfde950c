//! Indecomposable Gorenstein projective modules via the relation quiver.
//!
//! For an arrow `a` the right ideal `aΛ` has projective cover `e_{s(a)}Λ`
//! (via `p ↦ a*p`) whose kernel is the sum of `bΛ` over arrows `b` with
//! `a*b` in the ideal. The relation quiver stores the edge `a -> b` for each
//! such relation, so walking an edge is one syzygy step.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::qalg::BoundQuiverAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GpError {
    #[error("{0} is projective and has no stable syzygy class")]
    NotStable(String),
    #[error("arrow `{0}` is not perfect")]
    NotPerfect(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationQuiver {
    arrow_count: usize,
    /// (from, to) meaning `from*to` is a relation.
    edges: Vec<(usize, usize)>,
}

impl RelationQuiver {
    pub fn vertex_count(&self) -> usize {
        self.arrow_count
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == a).map(|e| e.1)
    }
    pub fn predecessors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.1 == a).map(|e| e.0)
    }
}

/// A basic cycle of the relation quiver, listed in syzygy order from its
/// least arrow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectComponent {
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GpIndec {
    Projective(usize),
    ArrowIdeal(usize),
}

impl GpIndec {
    pub fn label(&self, alg: &BoundQuiverAlgebra) -> String {
        match *self {
            GpIndec::Projective(v) => format!("e_{}Λ", alg.vertex_name(v)),
            GpIndec::ArrowIdeal(a) => format!("{}Λ", alg.arrow_name(a)),
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, GpIndec::Projective(_))
    }

    /// Dimension at each vertex of the algebra.
    pub fn dim_vector(&self, alg: &BoundQuiverAlgebra) -> Vec<usize> {
        let mut d = vec![0; alg.vertex_count()];
        let paths: Box<dyn Iterator<Item = _>> = match *self {
            GpIndec::Projective(v) => Box::new(alg.paths_ending_at(v)),
            GpIndec::ArrowIdeal(a) => Box::new(alg.paths_leading_with(a)),
        };
        for p in paths {
            d[p.source()] += 1;
        }
        d
    }

    /// The projective `P(G)` receiving the minimal left approximation of G.
    pub fn envelope(&self, alg: &BoundQuiverAlgebra) -> GpIndec {
        match *self {
            GpIndec::Projective(v) => GpIndec::Projective(v),
            GpIndec::ArrowIdeal(a) => GpIndec::Projective(alg.quiver().arrow(a).target),
        }
    }

    /// The projective cover of G.
    pub fn cover(&self, alg: &BoundQuiverAlgebra) -> GpIndec {
        match *self {
            GpIndec::Projective(v) => GpIndec::Projective(v),
            GpIndec::ArrowIdeal(a) => GpIndec::Projective(alg.quiver().arrow(a).source),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableClass {
    /// Arrows `a` with members `aΛ`, in syzygy order.
    pub members: Vec<usize>,
    pub period: usize,
}

/// Everything the relation quiver determines, computed once.
#[derive(Debug, Clone)]
pub struct Classification {
    pub relation_quiver: RelationQuiver,
    pub components: Vec<PerfectComponent>,
    component_of: Vec<Option<usize>>,
}

impl Classification {
    pub fn new(alg: &BoundQuiverAlgebra) -> Self {
        let rq = relation_quiver(alg);
        let components = perfect_components(&rq);
        let mut component_of = vec![None; alg.arrow_count()];
        for (i, c) in components.iter().enumerate() {
            for &a in &c.cycle {
                component_of[a] = Some(i);
            }
        }
        Classification {
            relation_quiver: rq,
            components,
            component_of,
        }
    }

    pub fn is_perfect(&self, a: usize) -> bool {
        self.component_of[a].is_some()
    }

    /// Index of the class containing `aΛ`.
    pub fn class_of(&self, a: usize) -> Option<usize> {
        self.component_of[a]
    }

    pub fn m(&self) -> usize {
        self.components.iter().map(|c| c.cycle.len()).sum()
    }

    pub fn perfect_arrows(&self) -> Vec<usize> {
        self.components
            .iter()
            .flat_map(|c| c.cycle.iter().copied())
            .collect()
    }

    pub fn classes(&self) -> Vec<StableClass> {
        self.components
            .iter()
            .map(|c| StableClass {
                members: c.cycle.clone(),
                period: c.cycle.len(),
            })
            .collect()
    }

    /// Omega^k on a perfect arrow, k may be negative.
    pub fn omega_power(&self, a: usize, k: i64) -> usize {
        let c = &self.components[self.component_of[a].expect("perfect arrow")].cycle;
        let pos = c.iter().position(|&x| x == a).unwrap() as i64;
        c[(pos + k).rem_euclid(c.len() as i64) as usize]
    }

    pub fn omega(&self, a: usize) -> usize {
        self.omega_power(a, 1)
    }

    pub fn omega_inv(&self, a: usize) -> usize {
        self.omega_power(a, -1)
    }

    pub fn gp_indecomposables(&self, alg: &BoundQuiverAlgebra) -> Vec<GpIndec> {
        let mut out: Vec<GpIndec> = (0..alg.vertex_count()).map(GpIndec::Projective).collect();
        out.extend(self.perfect_arrows().into_iter().map(GpIndec::ArrowIdeal));
        out
    }
}

pub fn relation_quiver(alg: &BoundQuiverAlgebra) -> RelationQuiver {
    RelationQuiver {
        arrow_count: alg.arrow_count(),
        edges: alg.relations().to_vec(),
    }
}

pub fn perfect_components(rq: &RelationQuiver) -> Vec<PerfectComponent> {
    let n = rq.arrow_count;
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(a, b) in &rq.edges {
        outdeg[a] += 1;
        indeg[b] += 1;
    }
    // undirected components by union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in &rq.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut out = Vec::new();
    for start in 0..n {
        if find(&mut parent, start) != start {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| find(&mut parent, x) == start).collect();
        if members.iter().all(|&x| indeg[x] == 1 && outdeg[x] == 1) {
            let mut cycle = vec![start];
            let mut cur = rq.successors(start).next().unwrap();
            while cur != start {
                cycle.push(cur);
                cur = rq.successors(cur).next().unwrap();
            }
            out.push(PerfectComponent { cycle });
        }
    }
    out
}

pub fn gp_indecomposables(alg: &BoundQuiverAlgebra) -> Vec<GpIndec> {
    Classification::new(alg).gp_indecomposables(alg)
}

pub fn syzygy_step(
    alg: &BoundQuiverAlgebra,
    g: GpIndec,
    dir: Direction,
) -> Result<GpIndec, GpError> {
    let a = match g {
        GpIndec::Projective(_) => return Err(GpError::NotStable(g.label(alg))),
        GpIndec::ArrowIdeal(a) => a,
    };
    let cls = Classification::new(alg);
    if !cls.is_perfect(a) {
        return Err(GpError::NotPerfect(alg.arrow_name(a).to_string()));
    }
    Ok(GpIndec::ArrowIdeal(match dir {
        Direction::Forward => cls.omega(a),
        Direction::Inverse => cls.omega_inv(a),
    }))
}

pub fn stable_classes(alg: &BoundQuiverAlgebra) -> Vec<StableClass> {
    Classification::new(alg).classes()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GsemisimpleReport {
    pub gsemisimple: bool,
    pub reason: &'static str,
    pub m: usize,
    pub classes: Vec<StableClass>,
    pub cm_finite: bool,
}

/// Accepted inputs are quadratic monomial, which is always G-semisimple and
/// CM-finite.
pub fn check_gsemisimple(alg: &BoundQuiverAlgebra) -> GsemisimpleReport {
    let cls = Classification::new(alg);
    GsemisimpleReport {
        gsemisimple: true,
        reason: "quadratic-monomial",
        m: cls.m(),
        classes: cls.classes(),
        cm_finite: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneGorensteinReport {
    pub one_gorenstein: bool,
    /// Arrows whose ideal is neither projective nor perfect.
    pub offending: Vec<usize>,
}

/// The radical of `e_vΛ` is the direct sum of the ideals `aΛ` with `t(a) = v`,
/// so the radical generates only Gorenstein projectives exactly when every
/// arrow ideal is projective or perfect. `aΛ` is projective iff no relation
/// `a*b` exists.
pub fn check_one_gorenstein(alg: &BoundQuiverAlgebra) -> OneGorensteinReport {
    let cls = Classification::new(alg);
    let offending: Vec<usize> = (0..alg.arrow_count())
        .filter(|&a| !cls.is_perfect(a) && cls.relation_quiver.successors(a).next().is_some())
        .collect();
    OneGorensteinReport {
        one_gorenstein: offending.is_empty(),
        offending,
    }
}

/// Multiset of periods, one per stable class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityDescriptor {
    pub periods: Vec<usize>,
}

impl fmt::Display for SingularityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.periods.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .periods
            .iter()
            .map(|l| format!("D^b(mod k)/[{l}]"))
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

impl SingularityDescriptor {
    pub fn multiset(&self) -> String {
        let parts: Vec<String> = self.periods.iter().map(|l| l.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn singularity_descriptor(alg: &BoundQuiverAlgebra) -> SingularityDescriptor {
    SingularityDescriptor {
        periods: stable_classes(alg).iter().map(|c| c.period).collect(),
    }
}

/// The sequence `0 -> ΩG -> P -> G -> 0` with `P` the projective cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GprjSequence {
    pub left: GpIndec,
    pub middle: GpIndec,
    pub right: GpIndec,
}

pub fn almost_split_gprj(alg: &BoundQuiverAlgebra, g: GpIndec) -> Result<GprjSequence, GpError> {
    let left = syzygy_step(alg, g, Direction::Forward)?;
    Ok(GprjSequence {
        left,
        middle: g.cover(alg),
        right: g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::parse_algebra;

    #[test]
    fn nakayama_cycle() {
        let alg = parse_algebra(
            "vertices: 1 2 3\narrows: a1: 1 -> 2, a2: 2 -> 3, a3: 3 -> 1\nrelations: a2*a1, a3*a2, a1*a3",
        )
        .unwrap();
        let comps = perfect_components(&relation_quiver(&alg));
        assert_eq!(
            comps,
            vec![PerfectComponent {
                cycle: vec![0, 2, 1]
            }]
        );
        assert_eq!(
            syzygy_step(&alg, GpIndec::ArrowIdeal(1), Direction::Forward),
            Ok(GpIndec::ArrowIdeal(0))
        );
        let seq = almost_split_gprj(&alg, GpIndec::ArrowIdeal(1)).unwrap();
        assert_eq!(seq.left, GpIndec::ArrowIdeal(0));
        assert_eq!(seq.middle, GpIndec::Projective(1));
    }

    #[test]
    fn hereditary_has_no_stable_part() {
        let alg = parse_algebra("vertices: 1 2; arrows: a: 1 -> 2; relations:").unwrap();
        assert!(perfect_components(&relation_quiver(&alg)).is_empty());
        assert_eq!(check_gsemisimple(&alg).m, 0);
        assert!(matches!(
            almost_split_gprj(&alg, GpIndec::Projective(0)),
            Err(GpError::NotStable(_))
        ));
        assert_eq!(singularity_descriptor(&alg).to_string(), "0");
    }

    #[test]
    fn path_with_one_relation_is_not_one_gorenstein() {
        let alg =
            parse_algebra("vertices: 1 2 3; arrows: a: 1 -> 2, b: 2 -> 3; relations: b*a").unwrap();
        let r = check_one_gorenstein(&alg);
        assert!(!r.one_gorenstein);
        assert_eq!(r.offending, vec![1]);
    }

    #[test]
    fn non_cycle_component_is_not_perfect() {
        // x*x plus a dangling relation y*x makes x have out-degree 1 but the
        // component contains y with in-degree 1 and out-degree 0.
        let alg = parse_algebra("vertices: 1 2; arrows: x: 1 -> 1, y: 1 -> 2; relations: x*x, y*x")
            .unwrap();
        assert!(perfect_components(&relation_quiver(&alg)).is_empty());
    }
}
