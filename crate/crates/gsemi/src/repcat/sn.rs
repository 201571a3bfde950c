//! Indecomposables of the monomorphism category `S_n` of Gorenstein
//! projectives, and the almost split sequences between them.
//!
//! `[i,j,G]` is the chain `0 -> ... -> 0 -> ΩG = ... = ΩG -> P_G = ... = P_G`
//! with `ΩG` at positions `i..=j` and the cover `P_G` at `j+1..=n`.
//! `[j,j,P:v]` has `e_vΛ` at positions `j+1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::gp::{Classification, GpIndec};
use crate::oracle::realize::{realize_module, realize_morphism};
use crate::oracle::{verify_exact_sequence, GradedMap};
use crate::qalg::BoundQuiverAlgebra;

use super::symbolic::{Entry, SymbolicModule, SymbolicMorphism};
use super::RepError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SnObject {
    Interval {
        i: usize,
        j: usize,
        g: usize,
    },
    /// Normal form has `i == j`.
    ProjInterval {
        i: usize,
        j: usize,
        v: usize,
    },
}

impl SnObject {
    pub fn interval(i: usize, j: usize, g: usize) -> Self {
        SnObject::Interval { i, j, g }
    }

    pub fn proj(j: usize, v: usize) -> Self {
        SnObject::ProjInterval { i: j, j, v }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, SnObject::ProjInterval { .. })
    }

    pub fn render(&self, alg: &BoundQuiverAlgebra) -> String {
        match *self {
            SnObject::Interval { i, j, g } => format!("[{i},{j},{}]", alg.arrow_name(g)),
            SnObject::ProjInterval { i, j, v } => format!("[{i},{j},P:{}]", alg.vertex_name(v)),
        }
    }

    /// Parses `[i,j,name]` or `[i,j,P:vertex]`; projective intervals are normalized.
    pub fn parse(alg: &BoundQuiverAlgebra, n: usize, text: &str) -> Result<Self, RepError> {
        let bad = |why: &str| RepError::Invalid(format!("object `{text}`: {why}"));
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[i,j,G]`"))?;
        let parts: Vec<&str> = inner.splitn(3, ',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad("expected three fields"));
        }
        let i = usize::from_str(parts[0]).map_err(|_| bad("bad index i"))?;
        let j = usize::from_str(parts[1]).map_err(|_| bad("bad index j"))?;
        if let Some(v) = parts[2].strip_prefix("P:") {
            let v = alg
                .quiver()
                .vertex_index(v)
                .ok_or_else(|| bad("unknown vertex"))?;
            if i > j || j >= n {
                return Err(bad("need 0 <= i <= j < n"));
            }
            return Ok(SnObject::proj(j, v));
        }
        let g = alg
            .quiver()
            .arrow_index(parts[2])
            .ok_or_else(|| bad("unknown arrow"))?;
        if i < 1 || i > j || j > n {
            return Err(bad("need 1 <= i <= j <= n"));
        }
        Ok(SnObject::Interval { i, j, g })
    }

    /// The summand at position `k` (1-based), if any.
    pub fn at(&self, alg: &BoundQuiverAlgebra, cls: &Classification, k: usize) -> Option<GpIndec> {
        match *self {
            SnObject::Interval { i, j, g } => {
                let x = GpIndec::ArrowIdeal(g);
                if k < i {
                    None
                } else if k <= j {
                    Some(GpIndec::ArrowIdeal(cls.omega(g)))
                } else {
                    Some(x.cover(alg))
                }
            }
            SnObject::ProjInterval { j, v, .. } => (k > j).then_some(GpIndec::Projective(v)),
        }
    }

    /// Dimension vectors of the positions 1..=n.
    pub fn dim_vectors(
        &self,
        alg: &BoundQuiverAlgebra,
        cls: &Classification,
        n: usize,
    ) -> Vec<Vec<usize>> {
        (1..=n)
            .map(|k| match self.at(alg, cls, k) {
                Some(g) => g.dim_vector(alg),
                None => vec![0; alg.vertex_count()],
            })
            .collect()
    }
}

/// Positions of an object or a direct sum of objects, with chain maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnRep {
    pub positions: Vec<SymbolicModule>,
    /// `chain[k]` maps position `k+1` to position `k+2`.
    pub chain: Vec<SymbolicMorphism>,
}

fn chain_entry(alg: &BoundQuiverAlgebra, src: GpIndec, tgt: GpIndec) -> Entry {
    if src == tgt {
        Entry::Id(1)
    } else {
        debug_assert_eq!(src.envelope(alg), tgt);
        Entry::Emb(1)
    }
}

pub fn sn_rep(
    alg: &BoundQuiverAlgebra,
    cls: &Classification,
    n: usize,
    objs: &[SnObject],
) -> SnRep {
    let mut parts = Vec::new();
    for o in objs {
        let positions: Vec<Option<GpIndec>> = (1..=n).map(|k| o.at(alg, cls, k)).collect();
        let chain: Vec<SymbolicMorphism> = positions
            .windows(2)
            .map(|w| match (w[0], w[1]) {
                (Some(a), Some(b)) => {
                    SymbolicMorphism::from_rows(vec![vec![chain_entry(alg, a, b)]], 1)
                }
                (a, b) => SymbolicMorphism::zero(b.is_some() as usize, a.is_some() as usize),
            })
            .collect();
        parts.push((positions, chain));
    }
    let positions = (0..n)
        .map(|k| SymbolicModule::new(parts.iter().filter_map(|(ps, _)| ps[k]).collect()))
        .collect();
    let chain = (0..n.saturating_sub(1))
        .map(|k| SymbolicMorphism::diagonal(&parts.iter().map(|(_, c)| &c[k]).collect::<Vec<_>>()))
        .collect();
    SnRep { positions, chain }
}

/// All indecomposables: non-projective intervals by position then class
/// order, then the `n·s` projective intervals.
pub fn sn_indecomposables(alg: &BoundQuiverAlgebra, n: usize) -> Vec<SnObject> {
    let cls = Classification::new(alg);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            for g in cls.perfect_arrows() {
                out.push(SnObject::Interval { i, j, g });
            }
        }
    }
    for j in 0..n {
        for v in 0..alg.vertex_count() {
            out.push(SnObject::proj(j, v));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Boundary,
    Top,
    Diagonal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Boundary => "boundary",
            Family::Top => "top",
            Family::Diagonal => "diagonal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostSplitSequence {
    pub n: usize,
    pub left: SnObject,
    pub middles: Vec<SnObject>,
    pub right: SnObject,
    pub family: Family,
    /// Per position, left to middle.
    pub f: Vec<SymbolicMorphism>,
    /// Per position, middle to right.
    pub g: Vec<SymbolicMorphism>,
}

impl AlmostSplitSequence {
    pub fn render(&self, alg: &BoundQuiverAlgebra) -> String {
        let mids: Vec<String> = self.middles.iter().map(|m| m.render(alg)).collect();
        format!(
            "0 -> {} -> {} -> {} -> 0",
            self.left.render(alg),
            mids.join(" + "),
            self.right.render(alg)
        )
    }
}

fn neg(p: u64) -> u64 {
    p - 1
}

/// The almost split sequence ending at `end`, for the three covered shapes.
pub fn almost_split_sn(
    alg: &BoundQuiverAlgebra,
    n: usize,
    end: SnObject,
) -> Result<AlmostSplitSequence, RepError> {
    let cls = Classification::new(alg);
    let not_covered = || RepError::NotCovered(end.render(alg));
    let SnObject::Interval { i, j, g } = end else {
        return Err(not_covered());
    };
    if n == 0 || j > n || !cls.is_perfect(g) {
        return Err(not_covered());
    }
    let m1 = neg(alg.field_char());
    let one = |e: Entry| SymbolicMorphism::from_rows(vec![vec![e]], 1);
    let col = |a: Entry, b: Entry| SymbolicMorphism::from_rows(vec![vec![a], vec![b]], 1);
    let row = |a: Entry, b: Entry| SymbolicMorphism::from_rows(vec![vec![a, b]], 2);
    if i == n && j == n && n >= 2 {
        // ends at (0, ..., 0, ΩH)
        let y = cls.omega(g);
        let left = SnObject::interval(1, n, y);
        let mid = SnObject::interval(1, n - 1, y);
        let mut f = Vec::new();
        let mut gm = Vec::new();
        for k in 1..=n {
            if k < n {
                f.push(one(Entry::Id(1)));
                gm.push(SymbolicMorphism::zero(0, 1));
            } else {
                f.push(one(Entry::Emb(1)));
                gm.push(one(Entry::Cover(1)));
            }
        }
        return Ok(AlmostSplitSequence {
            n,
            left,
            middles: vec![mid],
            right: end,
            family: Family::Boundary,
            f,
            g: gm,
        });
    }
    if i == 1 && j == n {
        // ends at ΩG = ... = ΩG
        let y = cls.omega(g);
        let p1 = GpIndec::ArrowIdeal(y).cover(alg);
        let GpIndec::Projective(pv) = p1 else {
            unreachable!()
        };
        let left = SnObject::interval(1, 1, y);
        let mut middles = vec![SnObject::proj(0, pv)];
        if n >= 2 {
            middles.push(SnObject::interval(2, n, g));
        }
        let mut f = Vec::new();
        let mut gm = Vec::new();
        for k in 1..=n {
            if k == 1 {
                f.push(one(Entry::Emb(1)));
                gm.push(one(Entry::Cover(m1)));
            } else {
                f.push(col(Entry::Id(1), Entry::Cover(1)));
                gm.push(row(Entry::Cover(m1), Entry::Id(1)));
            }
        }
        return Ok(AlmostSplitSequence {
            n,
            left,
            middles,
            right: end,
            family: Family::Top,
            f,
            g: gm,
        });
    }
    if i == j && i < n {
        // ends at ΩK -> P_K = ... = P_K starting at position i
        let pk = GpIndec::ArrowIdeal(g).cover(alg);
        let GpIndec::Projective(pv) = pk else {
            unreachable!()
        };
        let left = SnObject::interval(i + 1, i + 1, g);
        let middles = vec![SnObject::proj(i, pv), SnObject::interval(i, i + 1, g)];
        let mut f = Vec::new();
        let mut gm = Vec::new();
        for k in 1..=n {
            if k < i {
                f.push(SymbolicMorphism::zero(0, 0));
                gm.push(SymbolicMorphism::zero(0, 0));
            } else if k == i {
                f.push(SymbolicMorphism::zero(1, 0));
                gm.push(one(Entry::Id(m1)));
            } else if k == i + 1 {
                f.push(col(Entry::Emb(1), Entry::Id(1)));
                gm.push(row(Entry::Id(1), Entry::Emb(m1)));
            } else {
                f.push(col(Entry::Id(1), Entry::Id(1)));
                gm.push(row(Entry::Id(1), Entry::Id(m1)));
            }
        }
        return Ok(AlmostSplitSequence {
            n,
            left,
            middles,
            right: end,
            family: Family::Diagonal,
            f,
            g: gm,
        });
    }
    Err(not_covered())
}

/// Every covered almost split sequence in `S_n`.
pub fn all_almost_split(alg: &BoundQuiverAlgebra, n: usize) -> Vec<AlmostSplitSequence> {
    sn_indecomposables(alg, n)
        .into_iter()
        .filter_map(|o| almost_split_sn(alg, n, o).ok())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub additive: bool,
    pub exact: bool,
    pub morphisms: bool,
}

impl SequenceCheck {
    pub fn ok(&self) -> bool {
        self.additive && self.exact && self.morphisms
    }
}

/// Realizes the sequence and checks additivity of dimension vectors,
/// exactness at every position, and that both maps commute with the chains.
pub fn verify_sequence(
    alg: &BoundQuiverAlgebra,
    seq: &AlmostSplitSequence,
) -> Result<SequenceCheck, RepError> {
    let cls = Classification::new(alg);
    let p = alg.field_char();
    let n = seq.n;
    let l = sn_rep(alg, &cls, n, &[seq.left]);
    let m = sn_rep(alg, &cls, n, &seq.middles);
    let r = sn_rep(alg, &cls, n, &[seq.right]);
    let additive = (0..n).all(|k| {
        let (a, b, c) = (
            l.positions[k].dim_vector(alg),
            m.positions[k].dim_vector(alg),
            r.positions[k].dim_vector(alg),
        );
        a.iter().zip(&c).map(|(x, y)| x + y).eq(b.iter().copied())
    });
    let rl: Vec<_> = l
        .positions
        .iter()
        .map(|s| realize_module(alg, s, p))
        .collect();
    let rm: Vec<_> = m
        .positions
        .iter()
        .map(|s| realize_module(alg, s, p))
        .collect();
    let rr: Vec<_> = r
        .positions
        .iter()
        .map(|s| realize_module(alg, s, p))
        .collect();
    let mut exact = true;
    let mut fs: Vec<GradedMap> = Vec::new();
    let mut gs: Vec<GradedMap> = Vec::new();
    for k in 0..n {
        let f = realize_morphism(
            alg,
            &seq.f[k],
            &l.positions[k],
            &rl[k],
            &m.positions[k],
            &rm[k],
        )?;
        let g = realize_morphism(
            alg,
            &seq.g[k],
            &m.positions[k],
            &rm[k],
            &r.positions[k],
            &rr[k],
        )?;
        exact &= verify_exact_sequence(
            &f,
            &g,
            rl[k].module.dims(),
            rm[k].module.dims(),
            rr[k].module.dims(),
        )?;
        fs.push(f);
        gs.push(g);
    }
    let mut morphisms = true;
    for k in 0..n.saturating_sub(1) {
        let cl = realize_morphism(
            alg,
            &l.chain[k],
            &l.positions[k],
            &rl[k],
            &l.positions[k + 1],
            &rl[k + 1],
        )?;
        let cm = realize_morphism(
            alg,
            &m.chain[k],
            &m.positions[k],
            &rm[k],
            &m.positions[k + 1],
            &rm[k + 1],
        )?;
        let cr = realize_morphism(
            alg,
            &r.chain[k],
            &r.positions[k],
            &rr[k],
            &r.positions[k + 1],
            &rr[k + 1],
        )?;
        for w in 0..alg.vertex_count() {
            morphisms &= fs[k + 1][w].mul(&cl[w]) == cm[w].mul(&fs[k][w]);
            morphisms &= gs[k + 1][w].mul(&cm[w]) == cr[w].mul(&gs[k][w]);
        }
    }
    Ok(SequenceCheck {
        additive,
        exact,
        morphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::parse_algebra;

    fn kx2() -> BoundQuiverAlgebra {
        parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap()
    }

    #[test]
    fn counts() {
        let alg = kx2();
        assert_eq!(sn_indecomposables(&alg, 2).len(), 5);
        let three = sn_indecomposables(&alg, 3);
        assert_eq!(three.len(), 9);
        assert_eq!(three.iter().filter(|o| !o.is_projective()).count(), 6);
    }

    #[test]
    fn parse_and_render() {
        let alg = kx2();
        let o = SnObject::parse(&alg, 3, "[1, 2, x]").unwrap();
        assert_eq!(o.render(&alg), "[1,2,x]");
        assert_eq!(
            SnObject::parse(&alg, 3, "[0,2,P:1]").unwrap(),
            SnObject::proj(2, 0)
        );
        assert!(SnObject::parse(&alg, 3, "[0,2,x]").is_err());
        assert!(SnObject::parse(&alg, 3, "[1,4,x]").is_err());
    }

    #[test]
    fn boundary_family_for_loop() {
        let alg = kx2();
        let s = almost_split_sn(&alg, 3, SnObject::interval(3, 3, 0)).unwrap();
        assert_eq!(s.render(&alg), "0 -> [1,3,x] -> [1,2,x] -> [3,3,x] -> 0");
        assert!(verify_sequence(&alg, &s).unwrap().ok());
    }

    #[test]
    fn projective_end_is_not_covered() {
        let alg = kx2();
        assert!(matches!(
            almost_split_sn(&alg, 2, SnObject::proj(0, 0)),
            Err(RepError::NotCovered(_))
        ));
        assert!(matches!(
            almost_split_sn(&alg, 3, SnObject::interval(2, 3, 0)),
            Err(RepError::NotCovered(_))
        ));
    }

    #[test]
    fn families_verify_for_small_n() {
        let alg = kx2();
        for n in 1..=4 {
            let seqs = all_almost_split(&alg, n);
            assert_eq!(seqs.len(), if n == 1 { 1 } else { n + 1 });
            for s in seqs {
                assert!(
                    verify_sequence(&alg, &s).unwrap().ok(),
                    "{}",
                    s.render(&alg)
                );
            }
        }
    }
}
