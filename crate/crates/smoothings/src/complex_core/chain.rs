use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;

use super::{ComplexError, SimplicialComplex};
use crate::exact_algebra::IntMatrix;

/// Column-major sparse integer matrix; column `j` lists `(row, coefficient)`
/// pairs with nonzero coefficients, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, mut columns: Vec<Vec<(u32, i64)>>) -> Self {
        for c in &mut columns {
            c.retain(|&(_, v)| v != 0);
            c.sort_unstable_by_key(|&(r, _)| r);
            debug_assert!(c.iter().all(|&(r, _)| (r as usize) < rows));
        }
        SparseMatrix { rows, columns }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i as usize, j, BigInt::from(v));
            }
        }
        m
    }

    /// `self · rhs` is zero (used for the `∂∂ = 0` check).
    fn composes_to_zero(&self, rhs: &SparseMatrix) -> bool {
        let mut acc = vec![0i128; self.rows];
        let mut touched = Vec::new();
        for col in &rhs.columns {
            for &(k, v) in col {
                for &(i, w) in &self.columns[k as usize] {
                    acc[i as usize] += v as i128 * w as i128;
                    touched.push(i as usize);
                }
            }
            for &i in &touched {
                if acc[i] != 0 {
                    return false;
                }
            }
            touched.clear();
        }
        true
    }

    /// Applies the transpose to a cochain: `(δφ)(σ) = Σ ⟨∂σ, τ⟩ φ(τ)`.
    pub fn transpose_apply(&self, cochain: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        assert_eq!(cochain.len(), self.rows, "cochain length mismatch");
        self.columns
            .iter()
            .map(|col| {
                let mut acc: i128 = 0;
                for &(i, v) in col {
                    acc += v as i128 * cochain[i as usize] as i128;
                }
                reduce_i128(acc, modulus)
            })
            .collect()
    }
}

pub(crate) fn reduce_i128(x: i128, modulus: u64) -> Result<i64, ComplexError> {
    let y = if modulus == 0 { x } else { x.rem_euclid(modulus as i128) };
    i64::try_from(y).map_err(|_| ComplexError::CoefficientOverflow)
}

/// Free chain complex `C_0 ← C_1 ← … ← C_n` with chosen bases.
///
/// Complexes built from simplicial complexes carry the augmentation
/// `C_0 → Z`; synthetic complexes do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[k]` is `∂_k: C_k → C_{k-1}` for `k >= 1`.
    boundaries: Vec<SparseMatrix>,
    augmented: bool,
    id: u64,
}

impl ChainComplex {
    /// Builds a complex from boundary matrices `∂_1, …, ∂_n` and checks
    /// `∂∂ = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>, augmented: bool) -> Result<Self, ComplexError> {
        if ranks.is_empty() || boundaries.len() + 1 != ranks.len() {
            return Err(ComplexError::Shape(format!(
                "{} ranks need {} boundary maps, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        let mut all = Vec::with_capacity(ranks.len());
        all.push(SparseMatrix::zeros(0, ranks[0]));
        for (k, b) in boundaries.into_iter().enumerate() {
            if b.rows() != ranks[k] || b.cols() != ranks[k + 1] {
                return Err(ComplexError::Shape(format!(
                    "boundary of degree {} is {}x{}, expected {}x{}",
                    k + 1,
                    b.rows(),
                    b.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
            all.push(b);
        }
        for k in 2..all.len() {
            if !all[k - 1].composes_to_zero(&all[k]) {
                return Err(ComplexError::BoundarySquare(k));
            }
        }
        if augmented {
            // ε ∘ ∂_1 = 0: every column of ∂_1 sums to zero
            if let Some(d1) = all.get(1) {
                if (0..d1.cols()).any(|j| d1.column(j).iter().map(|&(_, v)| v).sum::<i64>() != 0) {
                    return Err(ComplexError::BoundarySquare(1));
                }
            }
        }
        let mut h = DefaultHasher::new();
        ranks.hash(&mut h);
        all.hash(&mut h);
        augmented.hash(&mut h);
        Ok(ChainComplex {
            ranks,
            boundaries: all,
            augmented,
            id: h.finish(),
        })
    }

    /// Simplicial chain complex with the alternating-sign boundary on sorted
    /// vertex tuples.
    pub fn from_simplicial(k: &SimplicialComplex) -> Self {
        let n = k.dimension();
        let ranks: Vec<usize> = (0..=n).map(|d| k.count(d)).collect();
        let mut boundaries = Vec::with_capacity(n);
        for d in 1..=n {
            let mut cols = Vec::with_capacity(k.count(d));
            let mut face = Vec::with_capacity(d);
            for s in k.simplices(d) {
                let mut col = Vec::with_capacity(d + 1);
                for i in 0..=d {
                    face.clear();
                    face.extend(s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                    let idx = k.index_of(&face).expect("face lattice is closed");
                    col.push((idx as u32, if i % 2 == 0 { 1 } else { -1 }));
                }
                cols.push(col);
            }
            boundaries.push(SparseMatrix::new(ranks[d - 1], cols));
        }
        ChainComplex::new(ranks, boundaries, true).expect("simplicial boundaries square to zero")
    }

    /// Moore complex with `C_{k+1} = Z`, `C_k = Z`, `∂ = (m)` and nothing else.
    pub fn moore(m: u64, k: usize) -> Result<Self, ComplexError> {
        if m < 2 || k < 1 {
            return Err(ComplexError::Shape(format!("moore complex needs m >= 2 and k >= 1, got m={m}, k={k}")));
        }
        let m = i64::try_from(m).map_err(|_| ComplexError::CoefficientOverflow)?;
        let mut ranks = vec![0; k + 2];
        ranks[k] = 1;
        ranks[k + 1] = 1;
        let mut boundaries: Vec<SparseMatrix> = (1..=k + 1).map(|d| SparseMatrix::zeros(ranks[d - 1], ranks[d])).collect();
        boundaries[k] = SparseMatrix::new(1, vec![vec![(0, m)]]);
        ChainComplex::new(ranks, boundaries, false)
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_k`; degree 0 gives the empty map out of `C_0`.
    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    pub fn boundary_dense(&self, k: usize) -> IntMatrix {
        self.boundaries[k].to_dense()
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// Content fingerprint used to tie classes to their complex.
    pub fn id(&self) -> u64 {
        self.id
    }

    /// `δ_k = ∂_{k+1}^T` applied to a `k`-cochain.
    pub fn coboundary(&self, k: usize, cochain: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        if k >= self.top_degree() {
            return Ok(Vec::new());
        }
        self.boundaries[k + 1].transpose_apply(cochain, modulus)
    }
}
