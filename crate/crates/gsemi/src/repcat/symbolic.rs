//! Symbolic modules and morphisms: direct sums of indecomposable Gorenstein
//! projectives and block matrices of scalar multiples of canonical maps.

use std::fmt;

use crate::gp::{Classification, GpIndec};
use crate::qalg::BoundQuiverAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SymbolicModule {
    pub summands: Vec<GpIndec>,
}

impl SymbolicModule {
    pub fn new(summands: Vec<GpIndec>) -> Self {
        SymbolicModule { summands }
    }
    pub fn len(&self) -> usize {
        self.summands.len()
    }
    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Projectives by vertex, then ideals by class and position in the cycle.
    pub fn canonical_key(cls: &Classification, g: &GpIndec) -> (usize, usize, usize) {
        match *g {
            GpIndec::Projective(v) => (0, v, 0),
            GpIndec::ArrowIdeal(a) => match cls.class_of(a) {
                Some(c) => (
                    1,
                    c,
                    cls.components[c]
                        .cycle
                        .iter()
                        .position(|&x| x == a)
                        .unwrap(),
                ),
                None => (2, a, 0),
            },
        }
    }

    /// Stable sort into canonical order; `perm[new] = old`.
    pub fn canonical_permutation(&self, cls: &Classification) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.summands.len()).collect();
        perm.sort_by_key(|&i| Self::canonical_key(cls, &self.summands[i]));
        perm
    }

    pub fn is_canonical(&self, cls: &Classification) -> bool {
        self.summands
            .windows(2)
            .all(|w| Self::canonical_key(cls, &w[0]) <= Self::canonical_key(cls, &w[1]))
    }

    pub fn dim_vector(&self, alg: &BoundQuiverAlgebra) -> Vec<usize> {
        let mut d = vec![0; alg.vertex_count()];
        for g in &self.summands {
            for (x, y) in d.iter_mut().zip(g.dim_vector(alg)) {
                *x += y;
            }
        }
        d
    }

    pub fn label(&self, alg: &BoundQuiverAlgebra) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.summands.iter().map(|g| g.label(alg)).collect();
        parts.join(" + ")
    }
}

/// Block entry of a symbolic morphism. Scalars are field elements in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    /// `c` times the identity of an indecomposable.
    Id(u64),
    /// `c` times the inclusion `aΛ -> e_{t(a)}Λ`.
    Emb(u64),
    /// `c` times the cover `e_{s(a)}Λ -> aΛ`, `p ↦ a*p`.
    Cover(u64),
}

impl Entry {
    pub fn is_zero(&self) -> bool {
        matches!(
            self,
            Entry::Zero | Entry::Id(0) | Entry::Emb(0) | Entry::Cover(0)
        )
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Zero => f.write_str("0"),
            Entry::Id(c) => write!(f, "id({c})"),
            Entry::Emb(c) => write!(f, "emb({c})"),
            Entry::Cover(c) => write!(f, "cover({c})"),
        }
    }
}

/// Rows index target summands, columns index source summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicMorphism {
    rows: usize,
    cols: usize,
    entries: Vec<Entry>,
}

impl SymbolicMorphism {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SymbolicMorphism {
            rows,
            cols,
            entries: vec![Entry::Zero; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Entry>>, cols: usize) -> Self {
        let r = rows.len();
        let mut m = Self::zero(r, cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged block matrix");
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.entries[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, e: Entry) {
        self.entries[i * self.cols + j] = e;
    }

    /// Block diagonal sum.
    pub fn diagonal(parts: &[&SymbolicMorphism]) -> Self {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(r0 + i, c0 + j, m.get(i, j));
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Reorders rows and columns; `perm[new] = old`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (ni, &oi) in row_perm.iter().enumerate() {
            for (nj, &oj) in col_perm.iter().enumerate() {
                out.set(ni, nj, self.get(oi, oj));
            }
        }
        out
    }
}
