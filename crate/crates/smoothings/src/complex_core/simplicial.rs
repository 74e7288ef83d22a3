use std::collections::HashMap;

use super::ComplexError;

/// A finite abstract simplicial complex with its full face lattice.
///
/// Simplices of each dimension are stored as strictly increasing vertex
/// tuples in lexicographic order; a simplex's index in that list is its
/// basis position in the chain complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Vec<u32>>,
    simplices: Vec<Vec<Vec<u32>>>,
    pure: bool,
}

/// Builds the closed face lattice of a facet list.
pub fn build_complex(facets: &[Vec<u32>]) -> Result<SimplicialComplex, ComplexError> {
    if facets.is_empty() {
        return Err(ComplexError::NoFacets);
    }
    let mut sorted = Vec::with_capacity(facets.len());
    for (i, f) in facets.iter().enumerate() {
        if f.is_empty() {
            return Err(ComplexError::EmptyFacet(i));
        }
        let mut s = f.clone();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertex { facet: i, vertex: w[0] });
        }
        sorted.push(s);
    }
    let n = sorted.iter().map(Vec::len).max().unwrap_or(1) - 1;
    let mut simplices: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
    for s in &sorted {
        simplices[s.len() - 1].push(s.clone());
    }
    let mut pure = true;
    for d in (0..=n).rev() {
        let mut level = std::mem::take(&mut simplices[d]);
        level.sort_unstable();
        level.dedup();
        if d > 0 {
            let mut faces: Vec<Vec<u32>> = Vec::with_capacity(level.len() * (d + 1));
            for s in &level {
                for skip in 0..=d {
                    faces.push(drop_vertex(s, skip));
                }
            }
            faces.sort_unstable();
            faces.dedup();
            // a lower-dimensional input facet that is not a face of anything is maximal
            if simplices[d - 1].iter().any(|f| faces.binary_search(f).is_err()) {
                pure = false;
            }
            simplices[d - 1].append(&mut faces);
        }
        simplices[d] = level;
    }
    let mut facet_list = sorted;
    facet_list.sort_unstable();
    facet_list.dedup();
    Ok(SimplicialComplex {
        facets: facet_list,
        simplices,
        pure,
    })
}

fn drop_vertex(s: &[u32], skip: usize) -> Vec<u32> {
    s.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &v)| v)
        .collect()
}

impl SimplicialComplex {
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.simplices[0].len()
    }

    /// Input facets, sorted and deduplicated.
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Facets that are not faces of other facets.
    pub fn maximal_simplices(&self) -> Vec<&[u32]> {
        self.facets
            .iter()
            .filter(|f| {
                let d = f.len() - 1;
                d == self.dimension() || !self.simplices[d + 1].iter().any(|s| is_face(f, s))
            })
            .map(Vec::as_slice)
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, Vec::len)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.simplices[d][i]
    }

    /// Index of a sorted vertex tuple within its dimension.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.simplices.get(s.len() - 1)?.binary_search_by(|x| x.as_slice().cmp(s)).ok()
    }

    /// Checks that every codimension-one face of a top simplex lies in
    /// exactly two top simplices and that the complex is pure.
    pub fn check_pseudomanifold(&self) -> Result<(), ComplexError> {
        if !self.pure {
            return Err(ComplexError::NotPure);
        }
        let n = self.dimension();
        if n == 0 {
            return Ok(());
        }
        let mut counts = vec![0usize; self.count(n - 1)];
        for s in &self.simplices[n] {
            for skip in 0..=n {
                let f = drop_vertex(s, skip);
                counts[self.index_of(&f).expect("closed lattice")] += 1;
            }
        }
        match counts.iter().position(|&c| c != 2) {
            Some(i) => Err(ComplexError::NotPseudomanifold {
                ridge: self.simplices[n - 1][i].clone(),
                count: counts[i],
            }),
            None => Ok(()),
        }
    }
}

fn is_face(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

/// Staircase triangulation of `|K1| × |K2|`.
///
/// Product vertices are pairs `(i, j)` of vertex positions, numbered
/// `i · |V2| + j`; each pair of maximal simplices of dimensions `p` and `q`
/// contributes `C(p+q, p)` simplices, one per monotone lattice path.
pub fn product_complex(k1: &SimplicialComplex, k2: &SimplicialComplex) -> SimplicialComplex {
    let pos1: HashMap<u32, u32> = k1.simplices(0).iter().enumerate().map(|(i, v)| (v[0], i as u32)).collect();
    let pos2: HashMap<u32, u32> = k2.simplices(0).iter().enumerate().map(|(i, v)| (v[0], i as u32)).collect();
    let width = k2.vertex_count() as u32;
    let mut facets = Vec::new();
    for s in k1.maximal_simplices() {
        for t in k2.maximal_simplices() {
            let (p, q) = (s.len() - 1, t.len() - 1);
            for path in staircase_paths(p, q) {
                facets.push(
                    path.iter()
                        .map(|&(a, b)| pos1[&s[a]] * width + pos2[&t[b]])
                        .collect::<Vec<u32>>(),
                );
            }
        }
    }
    build_complex(&facets).expect("product facets are well formed")
}

/// Monotone lattice paths from `(0,0)` to `(p,q)` as point sequences.
fn staircase_paths(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut path = vec![(0, 0)];
    fn walk(p: usize, q: usize, path: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let (a, b) = *path.last().expect("path starts at the origin");
        if a == p && b == q {
            out.push(path.clone());
            return;
        }
        if a < p {
            path.push((a + 1, b));
            walk(p, q, path, out);
            path.pop();
        }
        if b < q {
            path.push((a, b + 1));
            walk(p, q, path, out);
            path.pop();
        }
    }
    walk(p, q, &mut path, &mut out);
    out
}
