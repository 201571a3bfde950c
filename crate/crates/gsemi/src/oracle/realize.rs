//! Realizing symbolic modules and morphisms as matrices.

use std::collections::HashMap;

use crate::gp::GpIndec;
use crate::qalg::{BoundQuiverAlgebra, Composite, Path};
use crate::repcat::{Entry, SymbolicModule, SymbolicMorphism};

use super::matrix::Matrix;
use super::module::{basis_paths, direct_sum, realize_indec, MatrixModule};
use super::rep::{is_equivariant, GradedMap};
use super::OracleError;

/// A realized direct sum that remembers where each summand lives.
#[derive(Debug, Clone)]
pub struct Realized {
    pub module: MatrixModule,
    /// Offset of summand `k` at vertex `w`.
    pub offsets: Vec<Vec<usize>>,
    /// Basis paths of summand `k` at vertex `w`.
    pub bases: Vec<Vec<Vec<Path>>>,
}

pub fn realize_module(alg: &BoundQuiverAlgebra, m: &SymbolicModule, p: u64) -> Realized {
    let parts: Vec<MatrixModule> = m
        .summands
        .iter()
        .map(|&g| realize_indec(alg, g, p))
        .collect();
    let (module, offsets) = direct_sum(alg, p, &parts.iter().collect::<Vec<_>>());
    let bases = m.summands.iter().map(|&g| basis_paths(alg, g)).collect();
    Realized {
        module,
        offsets,
        bases,
    }
}

fn block(
    alg: &BoundQuiverAlgebra,
    e: Entry,
    src: GpIndec,
    tgt: GpIndec,
    src_basis: &[Path],
    tgt_basis: &[Path],
    p: u64,
) -> Result<Option<Matrix>, OracleError> {
    let mismatch =
        || OracleError::EntryMismatch(format!("{e} from {} to {}", src.label(alg), tgt.label(alg)));
    let (c, image): (u64, Box<dyn Fn(&Path) -> Option<Path> + '_>) = match e {
        Entry::Zero => return Ok(None),
        Entry::Id(c) => {
            if src != tgt {
                return Err(mismatch());
            }
            (c, Box::new(|q: &Path| Some(q.clone())))
        }
        Entry::Emb(c) => match (src, tgt) {
            (GpIndec::ArrowIdeal(a), GpIndec::Projective(v))
                if alg.quiver().arrow(a).target == v =>
            {
                (c, Box::new(|q: &Path| Some(q.clone())))
            }
            _ => return Err(mismatch()),
        },
        Entry::Cover(c) => match (src, tgt) {
            (GpIndec::Projective(v), GpIndec::ArrowIdeal(a))
                if alg.quiver().arrow(a).source == v =>
            {
                let ap = Path::arrow(alg.quiver(), a);
                (
                    c,
                    Box::new(move |q: &Path| match alg.compose(&ap, q) {
                        Ok(Composite::Path(r)) => Some(r),
                        _ => None,
                    }),
                )
            }
            _ => return Err(mismatch()),
        },
    };
    let index: HashMap<&Path, usize> = tgt_basis.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let mut m = Matrix::zeros(tgt_basis.len(), src_basis.len(), p);
    for (j, q) in src_basis.iter().enumerate() {
        if let Some(r) = image(q) {
            let i = *index.get(&r).ok_or_else(mismatch)?;
            m.set(i, j, c);
        }
    }
    Ok(Some(m))
}

/// Assembles the per-vertex matrix of `f` and checks it is a module map.
pub fn realize_morphism(
    alg: &BoundQuiverAlgebra,
    f: &SymbolicMorphism,
    src_sym: &SymbolicModule,
    src: &Realized,
    tgt_sym: &SymbolicModule,
    tgt: &Realized,
) -> Result<GradedMap, OracleError> {
    if f.rows() != tgt_sym.len() || f.cols() != src_sym.len() {
        return Err(OracleError::ShapeMismatch(format!(
            "block matrix is {}x{} but summands are {}x{}",
            f.rows(),
            f.cols(),
            tgt_sym.len(),
            src_sym.len()
        )));
    }
    let p = src.module.p();
    let n = alg.vertex_count();
    let mut out: GradedMap = (0..n)
        .map(|w| Matrix::zeros(tgt.module.dims()[w], src.module.dims()[w], p))
        .collect();
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            let e = f.get(i, j);
            for w in 0..n {
                if let Some(b) = block(
                    alg,
                    e,
                    src_sym.summands[j],
                    tgt_sym.summands[i],
                    &src.bases[j][w],
                    &tgt.bases[i][w],
                    p,
                )? {
                    out[w].paste(tgt.offsets[i][w], src.offsets[j][w], &b);
                }
            }
        }
    }
    if !is_equivariant(&out, &src.module.rep, &tgt.module.rep) {
        let bad = (0..alg.arrow_count())
            .find(|&a| {
                let (s, t) = (&src.module.rep.edges[a], &tgt.module.rep.edges[a]);
                out[s.to].mul(&s.map) != t.map.mul(&out[s.from])
            })
            .unwrap_or(0);
        return Err(OracleError::NotEquivariant(alg.arrow_name(bad).to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::parse_algebra;

    #[test]
    fn embedding_and_cover_of_loop_ideal() {
        let alg = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap();
        let x = SymbolicModule::new(vec![GpIndec::ArrowIdeal(0)]);
        let e = SymbolicModule::new(vec![GpIndec::Projective(0)]);
        let (rx, re) = (realize_module(&alg, &x, 101), realize_module(&alg, &e, 101));
        let emb = SymbolicMorphism::from_rows(vec![vec![Entry::Emb(1)]], 1);
        let f = realize_morphism(&alg, &emb, &x, &rx, &e, &re).unwrap();
        assert_eq!(f[0], Matrix::from_rows(101, &[vec![0], vec![1]]));
        let cov = SymbolicMorphism::from_rows(vec![vec![Entry::Cover(1)]], 1);
        let g = realize_morphism(&alg, &cov, &e, &re, &x, &rx).unwrap();
        assert_eq!(g[0], Matrix::from_rows(101, &[vec![1, 0]]));
        let bad = SymbolicMorphism::from_rows(vec![vec![Entry::Id(1)]], 1);
        assert!(matches!(
            realize_morphism(&alg, &bad, &x, &rx, &e, &re),
            Err(OracleError::EntryMismatch(_))
        ));
    }

    #[test]
    fn embedding_in_cyclic_nakayama() {
        let alg = parse_algebra("vertices: 1 2 3\narrows: a1: 1 -> 2, a2: 2 -> 3, a3: 3 -> 1\nrelations: a2*a1, a3*a2, a1*a3")
            .unwrap();
        let a1 = SymbolicModule::new(vec![GpIndec::ArrowIdeal(0)]);
        let e2 = SymbolicModule::new(vec![GpIndec::Projective(1)]);
        let (r1, r2) = (
            realize_module(&alg, &a1, 101),
            realize_module(&alg, &e2, 101),
        );
        assert_eq!(r2.module.dim(), 2);
        let emb = SymbolicMorphism::from_rows(vec![vec![Entry::Emb(1)]], 1);
        let f = realize_morphism(&alg, &emb, &a1, &r1, &e2, &r2).unwrap();
        assert_eq!(f.iter().map(Matrix::rank).sum::<usize>(), 1);
    }
}
