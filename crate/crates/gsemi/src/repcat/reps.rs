//! Gorenstein projective representations of an acyclic quiver and their
//! stable images.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::Serialize;

use crate::gp::{Classification, GpIndec};
use crate::oracle::realize::{realize_module, realize_morphism, Realized};
use crate::oracle::rep::{rep_isomorphism, Edge, IsoOutcome, LinRep};
use crate::oracle::{cokernel, direct_sum, GpCertifier, GpVerdict, Matrix, MatrixModule};
use crate::qalg::{BoundQuiverAlgebra, Quiver};

use super::symbolic::{Entry, SymbolicModule, SymbolicMorphism};
use super::RepError;

/// A representation of `quiver` with Gorenstein projective values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpRep {
    pub quiver: Quiver,
    pub vertices: Vec<SymbolicModule>,
    /// Map for arrow `a`: from the module at `s(a)` to the one at `t(a)`.
    pub arrows: Vec<SymbolicMorphism>,
}

/// A representation in the stable category: arrow ideals at each vertex,
/// scalar matrices between equal ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableRep {
    pub quiver: Quiver,
    pub p: u64,
    /// Arrow `a` of the algebra for each summand `aΛ`.
    pub vertices: Vec<Vec<usize>>,
    /// Rows index target summands, columns index source summands.
    pub arrows: Vec<Matrix>,
}

impl StableRep {
    /// Checks shapes, perfection of the ideals and the zero pattern.
    pub fn validate(&self, alg: &BoundQuiverAlgebra, cls: &Classification) -> Result<(), RepError> {
        if self.vertices.len() != self.quiver.vertex_count()
            || self.arrows.len() != self.quiver.arrow_count()
        {
            return Err(RepError::Invalid(
                "vertex or arrow count does not match the quiver".into(),
            ));
        }
        for summands in &self.vertices {
            if let Some(&a) = summands.iter().find(|&&a| !cls.is_perfect(a)) {
                return Err(RepError::Invalid(format!(
                    "`{}Λ` is not a stable indecomposable",
                    alg.arrow_name(a)
                )));
            }
        }
        for (k, ar) in self.quiver.arrows().iter().enumerate() {
            let (src, tgt) = (&self.vertices[ar.source], &self.vertices[ar.target]);
            let m = &self.arrows[k];
            if m.rows() != tgt.len() || m.cols() != src.len() {
                return Err(RepError::Invalid(format!(
                    "matrix of arrow `{}` has the wrong shape",
                    ar.name
                )));
            }
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if m.get(i, j) != 0 && tgt[i] != src[j] {
                        return Err(RepError::PatternViolation(format!(
                            "arrow `{}` entry ({i},{j}) maps {}Λ to {}Λ",
                            ar.name,
                            alg.arrow_name(src[j]),
                            alg.arrow_name(tgt[i])
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The quiver representation carried by the copies of `aΛ`.
    pub fn isotypic_part(&self, a: usize) -> LinRep {
        let pick: Vec<Vec<usize>> = self
            .vertices
            .iter()
            .map(|s| (0..s.len()).filter(|&i| s[i] == a).collect())
            .collect();
        let edges = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.arrows)
            .map(|(ar, m)| Edge {
                from: ar.source,
                to: ar.target,
                map: m.submatrix(&pick[ar.target], &pick[ar.source]),
            })
            .collect();
        LinRep {
            p: self.p,
            dims: pick.iter().map(Vec::len).collect(),
            edges,
        }
    }
}

/// Drops projective summands; identity scalars between ideals survive.
pub fn psi(alg: &BoundQuiverAlgebra, rep: &GpRep) -> StableRep {
    let p = alg.field_char();
    let keep: Vec<Vec<usize>> = rep
        .vertices
        .iter()
        .map(|m| {
            (0..m.len())
                .filter(|&i| !m.summands[i].is_projective())
                .collect()
        })
        .collect();
    let vertices = rep
        .vertices
        .iter()
        .zip(&keep)
        .map(|(m, k)| {
            k.iter()
                .map(|&i| match m.summands[i] {
                    GpIndec::ArrowIdeal(a) => a,
                    GpIndec::Projective(_) => unreachable!(),
                })
                .collect()
        })
        .collect();
    let arrows = rep
        .quiver
        .arrows()
        .iter()
        .zip(&rep.arrows)
        .map(|(ar, f)| {
            let (rows, cols) = (&keep[ar.target], &keep[ar.source]);
            let mut m = Matrix::zeros(rows.len(), cols.len(), p);
            for (i, &r) in rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    if let Entry::Id(x) = f.get(r, c) {
                        m.set(i, j, x);
                    }
                }
            }
            m
        })
        .collect();
    StableRep {
        quiver: rep.quiver.clone(),
        p,
        vertices,
        arrows,
    }
}

/// Builds `H_v = G_v ⊕ ⊕_{t(a)=v} P(H_{s(a)})` from sources to sinks. The
/// map for `a` is the stable matrix on `G_{s(a)}`, the envelope embedding
/// into the `P(H_{s(a)})` block, and the identity on projective summands.
pub fn lift(alg: &BoundQuiverAlgebra, r: &StableRep) -> Result<GpRep, RepError> {
    let cls = Classification::new(alg);
    r.validate(alg, &cls)?;
    let q = &r.quiver;
    let order = q.topological_order().ok_or(RepError::CyclicQuiver)?;
    let mut h: Vec<SymbolicModule> = vec![SymbolicModule::default(); q.vertex_count()];
    // (arrow, offset of the P(H_{s(a)}) block in H_{t(a)})
    let mut block_offset = vec![0usize; q.arrow_count()];
    for &v in &order {
        let mut summands: Vec<GpIndec> = r.vertices[v]
            .iter()
            .map(|&a| GpIndec::ArrowIdeal(a))
            .collect();
        for (k, ar) in q.arrows().iter().enumerate() {
            if ar.target == v {
                block_offset[k] = summands.len();
                summands.extend(h[ar.source].summands.iter().map(|g| g.envelope(alg)));
            }
        }
        h[v] = SymbolicModule::new(summands);
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (k, ar) in q.arrows().iter().enumerate() {
        let (src, tgt) = (&h[ar.source], &h[ar.target]);
        let mut f = SymbolicMorphism::zero(tgt.len(), src.len());
        let stable_src = r.vertices[ar.source].len();
        let stable_tgt = r.vertices[ar.target].len();
        for (j, g) in src.summands.iter().enumerate() {
            if j < stable_src {
                for i in 0..stable_tgt {
                    let c = r.arrows[k].get(i, j);
                    if c != 0 {
                        f.set(i, j, Entry::Id(c));
                    }
                }
            }
            let e = if g.is_projective() {
                Entry::Id(1)
            } else {
                Entry::Emb(1)
            };
            f.set(block_offset[k] + j, j, e);
        }
        maps.push(f);
    }
    Ok(canonicalize(
        &cls,
        GpRep {
            quiver: q.clone(),
            vertices: h,
            arrows: maps,
        },
    ))
}

/// Puts every vertex module in canonical summand order.
pub fn canonicalize(cls: &Classification, rep: GpRep) -> GpRep {
    let perms: Vec<Vec<usize>> = rep
        .vertices
        .iter()
        .map(|m| m.canonical_permutation(cls))
        .collect();
    let vertices = rep
        .vertices
        .iter()
        .zip(&perms)
        .map(|(m, pm)| SymbolicModule::new(pm.iter().map(|&i| m.summands[i]).collect()))
        .collect();
    let arrows = rep
        .quiver
        .arrows()
        .iter()
        .zip(&rep.arrows)
        .map(|(ar, f)| f.permuted(&perms[ar.target], &perms[ar.source]))
        .collect();
    GpRep {
        quiver: rep.quiver,
        vertices,
        arrows,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    pub vertex: String,
    pub injective: bool,
    pub cokernel_dims: Vec<usize>,
    pub verdict: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GpRepReport {
    pub ok: bool,
    pub vertices: Vec<VertexCheck>,
    pub first_failure: Option<String>,
}

/// Checks at every vertex that the incoming map is injective with a
/// Gorenstein projective cokernel.
pub fn verify_gp_rep(
    alg: &BoundQuiverAlgebra,
    rep: &GpRep,
    cert: &GpCertifier<'_>,
) -> Result<GpRepReport, RepError> {
    let p = alg.field_char();
    let q = &rep.quiver;
    if rep.vertices.len() != q.vertex_count() || rep.arrows.len() != q.arrow_count() {
        return Err(RepError::Invalid(
            "vertex or arrow count does not match the quiver".into(),
        ));
    }
    let realized: Vec<Realized> = rep
        .vertices
        .iter()
        .map(|m| realize_module(alg, m, p))
        .collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (k, ar) in q.arrows().iter().enumerate() {
        let f = realize_morphism(
            alg,
            &rep.arrows[k],
            &rep.vertices[ar.source],
            &realized[ar.source],
            &rep.vertices[ar.target],
            &realized[ar.target],
        )
        .map_err(|e| RepError::Invalid(format!("arrow `{}`: {e}", ar.name)))?;
        maps.push(f);
    }
    let mut checks = Vec::new();
    let mut first_failure = None;
    let mut inconclusive = None;
    for v in 0..q.vertex_count() {
        let incoming: Vec<usize> = (0..q.arrow_count())
            .filter(|&k| q.arrow(k).target == v)
            .collect();
        let parts: Vec<&MatrixModule> = incoming
            .iter()
            .map(|&k| &realized[q.arrow(k).source].module)
            .collect();
        let (src, _) = direct_sum(alg, p, &parts);
        let tgt = &realized[v].module;
        let assembled: Vec<Matrix> = (0..alg.vertex_count())
            .map(|w| {
                let blocks: Vec<&Matrix> = incoming.iter().map(|&k| &maps[k][w]).collect();
                Matrix::hstack(tgt.dims()[w], p, &blocks)
            })
            .collect();
        let injective = assembled
            .iter()
            .zip(src.dims())
            .all(|(m, &d)| m.rank() == d);
        let name = q.vertices()[v].clone();
        if !injective {
            checks.push(VertexCheck {
                vertex: name.clone(),
                injective,
                cokernel_dims: Vec::new(),
                verdict: "not-injective".into(),
                detail: "incoming map has a kernel".into(),
            });
            first_failure.get_or_insert(name);
            continue;
        }
        let (c, _) = cokernel(alg, &assembled, tgt);
        let verdict = cert.certify(&c);
        let detail = match &verdict {
            GpVerdict::Certified(d) => {
                let parts: Vec<String> = d
                    .iter()
                    .map(|(g, k)| format!("{}^{k}", g.label(alg)))
                    .collect();
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            }
            GpVerdict::EvidenceOnly => "Ext vanishes to the bound".into(),
            GpVerdict::NotGp(why) => why.clone(),
        };
        match verdict {
            GpVerdict::NotGp(_) => {
                first_failure.get_or_insert(name.clone());
            }
            GpVerdict::EvidenceOnly => {
                inconclusive.get_or_insert(name.clone());
            }
            GpVerdict::Certified(_) => {}
        }
        checks.push(VertexCheck {
            vertex: name,
            injective,
            cokernel_dims: c.dims().to_vec(),
            verdict: verdict.label().into(),
            detail,
        });
    }
    if first_failure.is_none() {
        if let Some(v) = inconclusive {
            return Err(RepError::OracleInconclusive(format!(
                "cokernel at vertex `{v}` matched no known decomposition"
            )));
        }
    }
    Ok(GpRepReport {
        ok: first_failure.is_none(),
        vertices: checks,
        first_failure,
    })
}

/// Isomorphism in the stable category, decided per arrow ideal.
pub fn stable_isomorphic(a: &StableRep, b: &StableRep, seed: u64) -> Result<bool, RepError> {
    if a.quiver != b.quiver {
        return Ok(false);
    }
    let mut ideals: Vec<usize> = a
        .vertices
        .iter()
        .chain(&b.vertices)
        .flatten()
        .copied()
        .collect();
    ideals.sort_unstable();
    ideals.dedup();
    for x in ideals {
        match rep_isomorphism(&a.isotypic_part(x), &b.isotypic_part(x), seed)? {
            IsoOutcome::Iso(_) => {}
            IsoOutcome::NotIso(_) => return Ok(false),
        }
    }
    Ok(true)
}

/// Random acyclic quiver with at most `max_vertices` vertices and
/// `max_arrows` arrows; multiple arrows are allowed.
pub fn random_acyclic_quiver<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_arrows: usize,
) -> Quiver {
    let n = rng.random_range(1..=max_vertices);
    let mut names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    names.shuffle(rng);
    let arrow_count = if n == 1 {
        0
    } else {
        rng.random_range(0..=max_arrows)
    };
    let arrows = (0..arrow_count)
        .map(|k| {
            let i = rng.random_range(0..n - 1);
            let j = rng.random_range(i + 1..n);
            (format!("q{}", k + 1), names[i].clone(), names[j].clone())
        })
        .collect();
    let mut vertices = names;
    vertices.sort_by_key(|v| v.parse::<usize>().unwrap_or(0));
    Quiver::new(vertices, arrows).expect("generated quiver is valid")
}

/// Random stable representation: each vertex gets up to two distinct
/// stable classes of ideals with multiplicity at most `max_mult`.
pub fn random_stable_rep<R: Rng>(
    alg: &BoundQuiverAlgebra,
    cls: &Classification,
    quiver: Quiver,
    max_mult: usize,
    rng: &mut R,
) -> StableRep {
    let p = alg.field_char();
    let perfect = cls.perfect_arrows();
    let vertices: Vec<Vec<usize>> = (0..quiver.vertex_count())
        .map(|_| {
            if perfect.is_empty() {
                return Vec::new();
            }
            let kinds = rng.random_range(0..=2.min(perfect.len()));
            let mut chosen: Vec<usize> = perfect.choose_multiple(rng, kinds).copied().collect();
            chosen.sort_unstable();
            let mut out = Vec::new();
            for a in chosen {
                for _ in 0..rng.random_range(1..=max_mult) {
                    out.push(a);
                }
            }
            out
        })
        .collect();
    let arrows = quiver
        .arrows()
        .iter()
        .map(|ar| {
            let (src, tgt) = (&vertices[ar.source], &vertices[ar.target]);
            let mut m = Matrix::zeros(tgt.len(), src.len(), p);
            for i in 0..tgt.len() {
                for j in 0..src.len() {
                    if tgt[i] == src[j] {
                        m.set(i, j, rng.random_range(0..p));
                    }
                }
            }
            m
        })
        .collect();
    StableRep {
        quiver,
        p,
        vertices,
        arrows,
    }
}
