//! Certifying that a module is Gorenstein projective by matching it against
//! a known list of indecomposable Gorenstein projectives.
//!
//! Multiplicities come from `dim Hom(X_i, C) = Σ_j dim Hom(X_i, X_j) c_j`,
//! solved exactly; the match is then certified by an explicit isomorphism
//! `⊕ X_j^{c_j} -> C` found by sampling. Ext vanishing is only evidence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gp::GpIndec;
use crate::qalg::BoundQuiverAlgebra;

use super::matrix::Matrix;
use super::module::{
    ext_dims, hom_basis_presented, present, realize_indec, MatrixModule, Presentation,
};
use super::rep::{GradedMap, RANDOM_TRIALS};

/// Prime used to solve the integer multiplicity system exactly.
const EXACT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GpVerdict {
    /// Isomorphic to the given sum of known indecomposables.
    Certified(Vec<(GpIndec, usize)>),
    /// Ext vanishes to the bound but no decomposition was certified.
    EvidenceOnly,
    NotGp(String),
}

impl GpVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            GpVerdict::Certified(_) => "certified-by-decomposition",
            GpVerdict::EvidenceOnly => "evidence-only",
            GpVerdict::NotGp(_) => "not-gorenstein-projective",
        }
    }
}

pub struct GpCertifier<'a> {
    alg: &'a BoundQuiverAlgebra,
    p: u64,
    known: Vec<(GpIndec, MatrixModule, Presentation)>,
    gram: Vec<Vec<usize>>,
    gram_inverse: Option<Matrix>,
    ext_bound: usize,
    seed: u64,
}

impl<'a> GpCertifier<'a> {
    pub fn new(
        alg: &'a BoundQuiverAlgebra,
        known: &[GpIndec],
        p: u64,
        ext_bound: usize,
        seed: u64,
    ) -> Self {
        let known: Vec<(GpIndec, MatrixModule, Presentation)> = known
            .iter()
            .map(|&g| {
                let m = realize_indec(alg, g, p);
                let pres = present(alg, &m);
                (g, m, pres)
            })
            .collect();
        let gram: Vec<Vec<usize>> = known
            .iter()
            .map(|(_, _, pi)| {
                known
                    .iter()
                    .map(|(_, mj, _)| hom_basis_presented(alg, pi, mj).len())
                    .collect()
            })
            .collect();
        let k = known.len();
        let mut g = Matrix::zeros(k, k, EXACT_PRIME);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, gram[i][j] as u64);
            }
        }
        let gram_inverse = g.inverse();
        GpCertifier {
            alg,
            p,
            known,
            gram,
            gram_inverse,
            ext_bound,
            seed,
        }
    }

    /// `dim Hom(X_i, X_j)` over the known list.
    pub fn gram(&self) -> &[Vec<usize>] {
        &self.gram
    }

    pub fn certify(&self, c: &MatrixModule) -> GpVerdict {
        if c.is_zero() {
            return GpVerdict::Certified(Vec::new());
        }
        if let Some(decomp) = self.decompose(c) {
            return GpVerdict::Certified(decomp);
        }
        let ext = ext_dims(self.alg, c, self.ext_bound);
        match ext.iter().position(|&d| d != 0) {
            Some(i) => GpVerdict::NotGp(format!("Ext^{}(C, Λ) has dimension {}", i + 1, ext[i])),
            None => GpVerdict::EvidenceOnly,
        }
    }

    fn decompose(&self, c: &MatrixModule) -> Option<Vec<(GpIndec, usize)>> {
        let inv = self.gram_inverse.as_ref()?;
        let homs: Vec<Vec<GradedMap>> = self
            .known
            .iter()
            .map(|(_, _, pres)| hom_basis_presented(self.alg, pres, c))
            .collect();
        let h: Vec<u64> = homs.iter().map(|b| b.len() as u64).collect();
        let sol = inv.mul_vec(&h);
        let bound = c.dim() as u64;
        if sol.iter().any(|&x| x > bound) {
            return None;
        }
        let mult: Vec<usize> = sol.iter().map(|&x| x as usize).collect();
        // exact integer check
        for (i, row) in self.gram.iter().enumerate() {
            let lhs: usize = row.iter().zip(&mult).map(|(d, m)| d * m).sum();
            if lhs != homs[i].len() {
                return None;
            }
        }
        let n = self.alg.vertex_count();
        for w in 0..n {
            let sum: usize = self
                .known
                .iter()
                .zip(&mult)
                .map(|((_, m, _), k)| m.dims()[w] * k)
                .sum();
            if sum != c.dims()[w] {
                return None;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..RANDOM_TRIALS {
            let mut blocks: Vec<Vec<Matrix>> = vec![Vec::new(); n];
            for (i, &k) in mult.iter().enumerate() {
                for _ in 0..k {
                    let mut f: Vec<Matrix> = (0..n)
                        .map(|w| Matrix::zeros(c.dims()[w], self.known[i].1.dims()[w], self.p))
                        .collect();
                    for b in &homs[i] {
                        let coeff = rng.random_range(0..self.p);
                        for w in 0..n {
                            f[w] = f[w].add(&b[w].scale(coeff));
                        }
                    }
                    for w in 0..n {
                        blocks[w].push(f[w].clone());
                    }
                }
            }
            let ok = (0..n).all(|w| {
                let refs: Vec<&Matrix> = blocks[w].iter().collect();
                Matrix::hstack(c.dims()[w], self.p, &refs).is_invertible()
            });
            if ok {
                return Some(
                    self.known
                        .iter()
                        .zip(&mult)
                        .filter(|(_, &k)| k > 0)
                        .map(|((g, _, _), &k)| (*g, k))
                        .collect(),
                );
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gp::Classification;
    use crate::oracle::module::{direct_sum, realize_ideal, realize_projective};
    use crate::qalg::parse_algebra;

    #[test]
    fn loop_algebra_sums_are_certified() {
        let alg = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x").unwrap();
        let known = Classification::new(&alg).gp_indecomposables(&alg);
        let cert = GpCertifier::new(&alg, &known, 101, 4, 0);
        assert_eq!(cert.gram(), &[vec![2, 1], vec![1, 1]]);
        let e = realize_projective(&alg, 0, 101);
        let x = realize_ideal(&alg, 0, 101);
        let (sum, _) = direct_sum(&alg, 101, &[&x, &e, &x]);
        assert_eq!(
            cert.certify(&sum),
            GpVerdict::Certified(vec![
                (GpIndec::Projective(0), 1),
                (GpIndec::ArrowIdeal(0), 2)
            ])
        );
    }

    #[test]
    fn non_gp_module_is_rejected() {
        let alg =
            parse_algebra("vertices: 1 2 3; arrows: a: 1 -> 2, b: 2 -> 3; relations: b*a").unwrap();
        let known = Classification::new(&alg).gp_indecomposables(&alg);
        let cert = GpCertifier::new(&alg, &known, 101, 4, 0);
        let b = realize_ideal(&alg, 1, 101);
        assert!(matches!(cert.certify(&b), GpVerdict::NotGp(_)));
        let a = realize_ideal(&alg, 0, 101);
        assert_eq!(
            cert.certify(&a),
            GpVerdict::Certified(vec![(GpIndec::Projective(0), 1)])
        );
    }
}
