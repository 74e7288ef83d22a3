//! Small dense linear algebra over `F_2` on `u8` vectors.

/// Reduces `v` against an echelon basis; returns the residue and the
/// combination of original vectors used.
struct Echelon {
    rows: Vec<(usize, Vec<u8>, Vec<u8>)>,
    len: usize,
    count: usize,
}

impl Echelon {
    fn new(vectors: &[Vec<u8>], len: usize) -> Self {
        let mut e = Echelon {
            rows: Vec::new(),
            len,
            count: vectors.len(),
        };
        for (i, v) in vectors.iter().enumerate() {
            let mut combo = vec![0u8; vectors.len()];
            combo[i] = 1;
            let (res, combo) = e.reduce(v.clone(), combo);
            if let Some(p) = res.iter().position(|&x| x == 1) {
                e.rows.push((p, res, combo));
            }
        }
        e
    }

    fn reduce(&self, mut v: Vec<u8>, mut combo: Vec<u8>) -> (Vec<u8>, Vec<u8>) {
        v.resize(self.len, 0);
        for (p, row, c) in &self.rows {
            if v[*p] == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
                for (a, b) in combo.iter_mut().zip(c) {
                    *a ^= b;
                }
            }
        }
        (v, combo)
    }
}

fn width(vectors: &[Vec<u8>], v: &[u8]) -> usize {
    vectors.iter().map(Vec::len).chain([v.len()]).max().unwrap_or(0)
}

pub(crate) fn rank(vectors: &[Vec<u8>]) -> usize {
    Echelon::new(vectors, width(vectors, &[])).rows.len()
}

/// Coefficients `c` with `Σ c_i vectors_i = v`, if any.
pub(crate) fn solve(vectors: &[Vec<u8>], v: &[u8]) -> Option<Vec<u8>> {
    let e = Echelon::new(vectors, width(vectors, v));
    let (res, combo) = e.reduce(v.to_vec(), vec![0; e.count]);
    if res.iter().all(|&x| x == 0) {
        Some(combo)
    } else {
        None
    }
}

pub(crate) fn in_span(vectors: &[Vec<u8>], v: &[u8]) -> bool {
    solve(vectors, v).is_some()
}

/// A maximal independent subset, in input order.
pub(crate) fn independent(vectors: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    for v in vectors {
        if !in_span(&out, v) {
            out.push(v.clone());
        }
    }
    out
}

/// `matrix · v (mod 2)` with `matrix[row][col]`.
pub(crate) fn apply(matrix: &[Vec<u64>], v: &[u8]) -> Vec<u8> {
    matrix
        .iter()
        .map(|row| (row.iter().zip(v).map(|(&a, &b)| a * b as u64).sum::<u64>() % 2) as u8)
        .collect()
}

pub(crate) fn is_zero(v: &[u8]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Every vector of `F_2^n` in counting order, `n <= 20`.
pub(crate) fn all_vectors(n: usize) -> impl Iterator<Item = Vec<u8>> {
    assert!(n <= 20, "vector space too large to enumerate");
    (0u32..(1 << n)).map(move |x| (0..n).map(|i| ((x >> i) & 1) as u8).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_solve() {
        let vs = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(rank(&vs), 2);
        assert_eq!(solve(&vs, &[1, 0, 1]), Some(vec![1, 1]));
        assert!(!in_span(&vs, &[1, 0, 0]));
        assert_eq!(independent(&[vec![1, 0], vec![1, 0], vec![0, 1]]).len(), 2);
        assert_eq!(apply(&[vec![1, 1], vec![0, 1]], &[1, 1]), vec![0, 1]);
        assert_eq!(all_vectors(2).count(), 4);
    }
}
