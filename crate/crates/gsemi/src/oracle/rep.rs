//! Finite dimensional representations of a quiver over F_p, with Hom spaces
//! computed by solving the intertwiner equations directly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use super::OracleError;

/// One linear map per vertex.
pub type GradedMap = Vec<Matrix>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// `dims[to] x dims[from]`.
    pub map: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinRep {
    pub p: u64,
    pub dims: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl LinRep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn zero_map_to(&self, other: &LinRep) -> GradedMap {
        self.dims
            .iter()
            .zip(&other.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s, self.p))
            .collect()
    }

    pub fn identity(&self) -> GradedMap {
        self.dims
            .iter()
            .map(|&d| Matrix::identity(d, self.p))
            .collect()
    }
}

/// True when `f` commutes with every edge map.
pub fn is_equivariant(f: &GradedMap, src: &LinRep, tgt: &LinRep) -> bool {
    src.edges.iter().zip(&tgt.edges).all(|(a, b)| {
        debug_assert_eq!((a.from, a.to), (b.from, b.to));
        f[a.to].mul(&a.map) == b.map.mul(&f[a.from])
    })
}

/// Basis of Hom(src, tgt) from the linear system `f_to A = B f_from`.
pub fn hom_basis_direct(src: &LinRep, tgt: &LinRep) -> Vec<GradedMap> {
    let p = src.p;
    let nv = src.dims.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + tgt.dims[v] * src.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * src.dims[v] + c;
    let eq_count: usize = src
        .edges
        .iter()
        .map(|e| tgt.dims[e.to] * src.dims[e.from])
        .sum();
    let mut sys = Matrix::zeros(eq_count, unknowns, p);
    let mut row = 0;
    for (a, b) in src.edges.iter().zip(&tgt.edges) {
        let (u, w) = (a.from, a.to);
        for r in 0..tgt.dims[w] {
            for c in 0..src.dims[u] {
                for k in 0..src.dims[w] {
                    let x = a.map.get(k, c);
                    if x != 0 {
                        sys.add_at(row, var(w, r, k), x);
                    }
                }
                for k in 0..tgt.dims[u] {
                    let x = b.map.get(r, k);
                    if x != 0 {
                        sys.add_at(row, var(u, k, c), p - x);
                    }
                }
                row += 1;
            }
        }
    }
    let ns = sys.nullspace();
    (0..ns.cols())
        .map(|j| {
            (0..nv)
                .map(|v| {
                    let mut m = Matrix::zeros(tgt.dims[v], src.dims[v], p);
                    for r in 0..tgt.dims[v] {
                        for c in 0..src.dims[v] {
                            m.set(r, c, ns.get(var(v, r, c), j));
                        }
                    }
                    m
                })
                .collect()
        })
        .collect()
}

pub fn is_invertible(f: &GradedMap) -> bool {
    f.iter().all(Matrix::is_invertible)
}

pub fn combine(basis: &[GradedMap], coeffs: &[u64], zero: &GradedMap) -> GradedMap {
    let mut out = zero.clone();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, m) in out.iter_mut().zip(b) {
            *o = o.add(&m.scale(c));
        }
    }
    out
}

/// Exhaustive search is allowed up to this many elements.
pub const ENUMERATION_CAP: u64 = 1 << 16;
pub const RANDOM_TRIALS: usize = 256;

/// Outcome of looking for an invertible element in a Hom space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(GradedMap),
    /// Exhaustive enumeration found none.
    Absent,
    Inconclusive,
}

/// Tries basis elements, then seeded random combinations, then exhaustive
/// enumeration when the space is small.
pub fn search_invertible(basis: &[GradedMap], zero: &GradedMap, p: u64, seed: u64) -> Search {
    if zero.iter().any(|m| !m.is_square()) {
        return Search::Absent;
    }
    if basis.is_empty() {
        return if zero.iter().all(|m| m.rows() == 0) {
            Search::Found(zero.clone())
        } else {
            Search::Absent
        };
    }
    for b in basis {
        if is_invertible(b) {
            return Search::Found(b.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.random_range(0..p)).collect();
        let f = combine(basis, &coeffs, zero);
        if is_invertible(&f) {
            return Search::Found(f);
        }
    }
    let size = (p as u128).checked_pow(basis.len() as u32);
    let cap = ENUMERATION_CAP.min((p as u128).pow(4).min(u64::MAX as u128) as u64);
    match size {
        Some(s) if s <= cap as u128 => {
            let mut coeffs = vec![0u64; basis.len()];
            loop {
                let f = combine(basis, &coeffs, zero);
                if is_invertible(&f) {
                    return Search::Found(f);
                }
                let mut i = 0;
                loop {
                    if i == coeffs.len() {
                        return Search::Absent;
                    }
                    coeffs[i] += 1;
                    if coeffs[i] < p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
            }
        }
        _ => Search::Inconclusive,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// An invertible intertwiner certifies the isomorphism.
    Iso(GradedMap),
    NotIso(&'static str),
}

/// Isomorphism test with a certificate. Dimension vectors and Hom dimensions
/// give fast negative answers.
pub fn rep_isomorphism(a: &LinRep, b: &LinRep, seed: u64) -> Result<IsoOutcome, OracleError> {
    if a.dims != b.dims {
        return Ok(IsoOutcome::NotIso("dimension vectors differ"));
    }
    let hom = hom_basis_direct(a, b);
    let zero = a.zero_map_to(b);
    decide(&hom, &zero, a.p, seed, || {
        let ea = hom_basis_direct(a, a).len();
        let eb = hom_basis_direct(b, b).len();
        ea == hom.len() && eb == hom.len()
    })
}

pub(crate) fn decide(
    hom: &[GradedMap],
    zero: &GradedMap,
    p: u64,
    seed: u64,
    hom_dims_agree: impl FnOnce() -> bool,
) -> Result<IsoOutcome, OracleError> {
    match search_invertible(hom, zero, p, seed) {
        Search::Found(f) => Ok(IsoOutcome::Iso(f)),
        Search::Absent => Ok(IsoOutcome::NotIso("no invertible homomorphism")),
        Search::Inconclusive => {
            if !hom_dims_agree() {
                Ok(IsoOutcome::NotIso("Hom dimensions differ"))
            } else {
                Err(OracleError::Inconclusive(format!(
                    "no invertible element among {RANDOM_TRIALS} samples of a {}-dimensional Hom space",
                    hom.len()
                )))
            }
        }
    }
}
