use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·A·V = S` together with the inverse transforms.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Nonzero diagonal entries `s_1 | s_2 | … | s_rank`, all positive.
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Returns `(U, S, V)` with `U·A·V = S`, `S` diagonal with a divisibility
/// chain, and `U`, `V` unimodular.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let f = smith_form(a);
    (f.u, f.s, f.v)
}

/// Quotient rounding to the nearest integer, so remainders stay small.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // r has the sign of b, so r - b is the other candidate remainder
    let twice: BigInt = &r * 2;
    if twice.abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[target] += k * row[source]
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    /// col[target] += k * col[source]
    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
        self.v_inv.add_row_multiple(source, target, &-k);
    }

    fn negate_row(&mut self, r: usize) {
        self.s.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    /// Smallest-magnitude nonzero entry in the trailing block, first in
    /// row-major order among ties.
    fn pivot_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = self.s.get(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.s.get(bi, bj).abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn clear_cross(&mut self, t: usize) {
        loop {
            let p = self.s.get(t, t).clone();
            for i in t + 1..self.s.rows() {
                if !self.s.get(i, t).is_zero() {
                    let q = nearest_quotient(self.s.get(i, t), &p);
                    self.add_row(i, t, &-q);
                }
            }
            for j in t + 1..self.s.cols() {
                if !self.s.get(t, j).is_zero() {
                    let q = nearest_quotient(self.s.get(t, j), &p);
                    self.add_col(j, t, &-q);
                }
            }
            // a nonzero remainder is smaller than the pivot; promote it
            let col_rest = (t + 1..self.s.rows()).find(|&i| !self.s.get(i, t).is_zero());
            let row_rest = (t + 1..self.s.cols()).find(|&j| !self.s.get(t, j).is_zero());
            match (col_rest, row_rest) {
                (None, None) => return,
                (Some(i), _) => {
                    let best = (t + 1..self.s.rows())
                        .filter(|&r| !self.s.get(r, t).is_zero())
                        .min_by(|&a, &b| self.s.get(a, t).abs().cmp(&self.s.get(b, t).abs()))
                        .unwrap_or(i);
                    self.swap_rows(t, best);
                }
                (None, Some(j)) => {
                    let best = (t + 1..self.s.cols())
                        .filter(|&c| !self.s.get(t, c).is_zero())
                        .min_by(|&a, &b| self.s.get(t, a).abs().cmp(&self.s.get(t, b).abs()))
                        .unwrap_or(j);
                    self.swap_cols(t, best);
                }
            }
        }
    }
}

/// Full Smith normal form with deterministic smallest-magnitude pivoting.
pub fn smith_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = Reducer {
        s: a.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = r.pivot_in_block(t) else {
            break;
        };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        loop {
            r.clear_cross(t);
            let p = r.s.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !r.s.get(i, j).is_multiple_of(&p))
            });
            match offender {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.s.get(t, t).is_negative() {
            r.negate_row(t);
        }
        diagonal.push(r.s.get(t, t).clone());
        t += 1;
    }
    SmithForm {
        u: r.u,
        s: r.s,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
        diagonal,
    }
}
