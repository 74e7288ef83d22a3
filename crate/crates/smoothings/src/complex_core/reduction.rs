//! Integral chain-homotopy reduction by unit pivots.
//!
//! A pivot pair `(a, b)` with `⟨∂a, b⟩ = λ = ±1` is removed and every other
//! cell `x` with `⟨∂x, b⟩ ≠ 0` gets `∂x ← ∂x − λ⟨∂x, b⟩ ∂a`. The result is a
//! much smaller complex `C'` chain-homotopy equivalent to `C` over `Z`, so
//! its cohomology with any coefficients agrees with that of `C`. Each pivot
//! records enough of the boundary at its time to move cochains between `C`
//! and `C'`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;

use super::chain::reduce_i128;
use super::{ChainComplex, ComplexError};
use crate::exact_algebra::IntMatrix;

type Entries = Vec<(u32, i64)>;

#[derive(Clone, Debug)]
struct Pivot {
    a: u32,
    b: u32,
    lambda: i64,
    /// `∂a` minus the `b` term, at pivot time.
    col_a: Entries,
    /// Cells `x ≠ a` with their coefficient `⟨∂x, b⟩`, at pivot time.
    row_b: Entries,
}

/// Levels index cells by degree shifted by one when the augmentation cell
/// (the empty simplex) is present.
#[derive(Clone, Debug)]
pub(crate) struct Reduction {
    offset: usize,
    sizes: Vec<usize>,
    survivors: Vec<Vec<u32>>,
    /// `residual[L]`: boundary from surviving level-`L` cells to surviving
    /// level-`L-1` cells (rows indexed by the lower level).
    residual: Vec<IntMatrix>,
    /// Pivots grouped by the level of `b`, in execution order.
    by_b_level: Vec<Vec<Pivot>>,
}

struct Work {
    cols: Vec<Vec<Entries>>,
    rows: Vec<Vec<Entries>>,
    alive: Vec<Vec<bool>>,
}

fn add_entry(v: &mut Entries, idx: u32, delta: i64) -> Result<(), ComplexError> {
    match v.iter().position(|&(i, _)| i == idx) {
        Some(p) => {
            let s = v[p].1.checked_add(delta).ok_or(ComplexError::CoefficientOverflow)?;
            if s == 0 {
                v.swap_remove(p);
            } else {
                v[p].1 = s;
            }
        }
        None => v.push((idx, delta)),
    }
    Ok(())
}

fn remove_entry(v: &mut Entries, idx: u32) {
    if let Some(p) = v.iter().position(|&(i, _)| i == idx) {
        v.swap_remove(p);
    }
}

impl Work {
    fn new(c: &ChainComplex, offset: usize, sizes: &[usize]) -> Self {
        let levels = sizes.len();
        let mut cols: Vec<Vec<Entries>> = sizes.iter().map(|&s| vec![Vec::new(); s]).collect();
        let mut rows: Vec<Vec<Entries>> = sizes.iter().map(|&s| vec![Vec::new(); s]).collect();
        for l in 1..levels {
            for (cell, slot) in cols[l].iter_mut().enumerate() {
                let col: Entries = if offset == 1 && l == 1 {
                    vec![(0, 1)]
                } else {
                    c.boundary(l - offset).column(cell).to_vec()
                };
                for &(b, v) in &col {
                    rows[l - 1][b as usize].push((cell as u32, v));
                }
                *slot = col;
            }
        }
        let alive = sizes.iter().map(|&s| vec![true; s]).collect();
        Work { cols, rows, alive }
    }

    /// Pivot on `a` at level `la` against `b` at level `la - 1`.
    fn eliminate(&mut self, la: usize, a: u32, b: u32, touched: &mut Vec<(usize, u32)>) -> Result<Pivot, ComplexError> {
        let lb = la - 1;
        let col_a = std::mem::take(&mut self.cols[la][a as usize]);
        let row_b = std::mem::take(&mut self.rows[lb][b as usize]);
        let lambda = col_a.iter().find(|&&(i, _)| i == b).map(|&(_, v)| v).expect("pivot entry present");
        debug_assert!(lambda == 1 || lambda == -1);
        let rest_a: Entries = col_a.iter().copied().filter(|&(i, _)| i != b).collect();
        let rest_b: Entries = row_b.iter().copied().filter(|&(i, _)| i != a).collect();
        for &(x, cxb) in &rest_b {
            let t = cxb.checked_mul(lambda).ok_or(ComplexError::CoefficientOverflow)?;
            remove_entry(&mut self.cols[la][x as usize], b);
            for &(c, cac) in &rest_a {
                let delta = t.checked_mul(cac).and_then(i64::checked_neg).ok_or(ComplexError::CoefficientOverflow)?;
                add_entry(&mut self.cols[la][x as usize], c, delta)?;
                add_entry(&mut self.rows[lb][c as usize], x, delta)?;
            }
        }
        for &(c, _) in &rest_a {
            remove_entry(&mut self.rows[lb][c as usize], a);
        }
        let row_a = std::mem::take(&mut self.rows[la][a as usize]);
        for &(y, _) in &row_a {
            remove_entry(&mut self.cols[la + 1][y as usize], a);
            touched.push((la + 1, y));
        }
        let col_b = std::mem::take(&mut self.cols[lb][b as usize]);
        if lb > 0 {
            for &(d, _) in &col_b {
                remove_entry(&mut self.rows[lb - 1][d as usize], b);
                touched.push((lb - 1, d));
            }
        }
        self.alive[la][a as usize] = false;
        self.alive[lb][b as usize] = false;
        touched.extend(rest_b.iter().map(|&(x, _)| (la, x)));
        touched.extend(rest_a.iter().map(|&(c, _)| (lb, c)));
        Ok(Pivot {
            a,
            b,
            lambda,
            col_a: rest_a,
            row_b: rest_b,
        })
    }

    /// The unit entry of `∂a` with the least fill-in
    /// `(|∂a| − 1)(|δb| − 1)`, as `(cost, b)`.
    fn best_entry(&self, l: usize, a: u32) -> Option<(usize, u32)> {
        if !self.alive[l][a as usize] {
            return None;
        }
        let col = &self.cols[l][a as usize];
        col.iter()
            .filter(|&&(_, v)| v.abs() == 1)
            .map(|&(b, _)| ((col.len() - 1) * (self.rows[l - 1][b as usize].len() - 1), b))
            .min_by_key(|&(cost, _)| cost)
    }
}

impl Reduction {
    pub(crate) fn new(c: &ChainComplex) -> Result<Self, ComplexError> {
        let offset = usize::from(c.is_augmented());
        let mut sizes = Vec::with_capacity(c.top_degree() + 1 + offset);
        if offset == 1 {
            sizes.push(1);
        }
        sizes.extend((0..=c.top_degree()).map(|k| c.rank(k)));
        let levels = sizes.len();
        let mut w = Work::new(c, offset, &sizes);
        let mut by_b_level: Vec<Vec<Pivot>> = vec![Vec::new(); levels];
        // candidate pivot columns keyed by fill-in; keys may be stale and are
        // rechecked when popped
        let mut heap: BinaryHeap<Reverse<(usize, usize, u32)>> = BinaryHeap::new();
        for (l, &s) in sizes.iter().enumerate().skip(1) {
            for a in 0..s as u32 {
                if let Some((cost, _)) = w.best_entry(l, a) {
                    heap.push(Reverse((cost, l, a)));
                }
            }
        }
        let mut touched = Vec::new();
        while let Some(Reverse((key, l, a))) = heap.pop() {
            let Some((cost, b)) = w.best_entry(l, a) else {
                continue;
            };
            if cost > key {
                heap.push(Reverse((cost, l, a)));
                continue;
            }
            let p = w.eliminate(l, a, b, &mut touched)?;
            by_b_level[l - 1].push(p);
            for (tl, t) in touched.drain(..) {
                if tl >= 1 {
                    if let Some((cost, _)) = w.best_entry(tl, t) {
                        heap.push(Reverse((cost, tl, t)));
                    }
                }
                if tl + 1 < levels && w.alive[tl][t as usize] {
                    if let [(up, v)] = w.rows[tl][t as usize][..] {
                        if v.abs() == 1 {
                            heap.push(Reverse((0, tl + 1, up)));
                        }
                    }
                }
            }
        }
        let survivors: Vec<Vec<u32>> = w
            .alive
            .iter()
            .map(|lv| lv.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i as u32).collect())
            .collect();
        let mut residual = Vec::with_capacity(levels);
        residual.push(IntMatrix::zeros(0, survivors[0].len()));
        for l in 1..levels {
            let below = &survivors[l - 1];
            let mut m = IntMatrix::zeros(below.len(), survivors[l].len());
            for (j, &cell) in survivors[l].iter().enumerate() {
                for &(b, v) in &w.cols[l][cell as usize] {
                    let i = below.binary_search(&b).expect("residual boundary stays among survivors");
                    m.set(i, j, BigInt::from(v));
                }
            }
            residual.push(m);
        }
        Ok(Reduction {
            offset,
            sizes,
            survivors,
            residual,
            by_b_level,
        })
    }

    pub(crate) fn offset(&self) -> usize {
        self.offset
    }

    pub(crate) fn levels(&self) -> usize {
        self.sizes.len()
    }

    pub(crate) fn survivors(&self, level: usize) -> &[u32] {
        &self.survivors[level]
    }

    /// Residual boundary into `level - 1`; the zero map for level 0.
    pub(crate) fn residual(&self, level: usize) -> &IntMatrix {
        &self.residual[level]
    }

    /// Residual coboundary out of `level`, as a dense matrix
    /// (`survivors(level+1) × survivors(level)`).
    pub(crate) fn residual_coboundary(&self, level: usize) -> IntMatrix {
        match self.residual.get(level + 1) {
            Some(m) => m.transpose(),
            None => IntMatrix::zeros(0, self.survivors[level].len()),
        }
    }

    /// The augmentation pivot's vertex, i.e. the vertex paired with the
    /// empty simplex.
    pub(crate) fn base_vertex(&self) -> Option<u32> {
        (self.offset == 1).then(|| self.by_b_level[0].first().map(|p| p.a)).flatten()
    }

    /// Original cochain to reduced cochain (values on survivors).
    pub(crate) fn restrict(&self, level: usize, cochain: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        assert_eq!(cochain.len(), self.sizes[level]);
        let mut phi: Vec<i64> = cochain.to_vec();
        if level >= 1 {
            for p in &self.by_b_level[level - 1] {
                let pa = phi[p.a as usize] as i128;
                if pa == 0 {
                    continue;
                }
                for &(x, coef) in &p.row_b {
                    let v = phi[x as usize] as i128 - p.lambda as i128 * coef as i128 * pa;
                    phi[x as usize] = reduce_i128(v, modulus)?;
                }
            }
        }
        Ok(self.survivors[level].iter().map(|&s| phi[s as usize]).collect())
    }

    /// Reduced cochain (values on survivors) to an original cochain.
    pub(crate) fn lift(&self, level: usize, reduced: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        assert_eq!(reduced.len(), self.survivors[level].len());
        let mut psi = vec![0i64; self.sizes[level]];
        for (&s, &v) in self.survivors[level].iter().zip(reduced) {
            psi[s as usize] = v;
        }
        for p in self.by_b_level[level].iter().rev() {
            let mut acc: i128 = 0;
            for &(c, coef) in &p.col_a {
                acc += coef as i128 * psi[c as usize] as i128;
            }
            psi[p.b as usize] = reduce_i128(-(p.lambda as i128) * acc, modulus)?;
        }
        Ok(psi)
    }

    #[cfg(test)]
    pub(crate) fn pivot_count(&self) -> usize {
        self.by_b_level.iter().map(Vec::len).sum()
    }
}
