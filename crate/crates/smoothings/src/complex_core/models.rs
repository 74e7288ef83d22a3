use std::collections::BTreeMap;

use super::{build_complex, SimplicialComplex};

/// `∂Δ^d`: all `d`-element subsets of `{0, …, d}`, a `(d-1)`-sphere.
pub fn boundary_of_simplex(d: usize) -> SimplicialComplex {
    assert!(d >= 1, "∂Δ^0 is empty");
    let facets: Vec<Vec<u32>> = (0..=d as u32)
        .map(|skip| (0..=d as u32).filter(|&v| v != skip).collect())
        .collect();
    build_complex(&facets).expect("simplex boundary is well formed")
}

/// The six-vertex projective plane (hemi-icosahedron).
pub fn rp2_six_vertex() -> SimplicialComplex {
    let facets: Vec<Vec<u32>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 1, 5],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4],
        vec![2, 4, 5],
        vec![1, 3, 5],
    ];
    build_complex(&facets).expect("fixed facet list")
}

/// `RP^d` as the antipodal quotient of the barycentric subdivision of the
/// boundary of the `(d+1)`-dimensional cross-polytope.
///
/// A face of the cross-polytope is a nonzero sign vector in `{-1,0,1}^{d+1}`
/// and antipodal faces are never comparable, so the quotient stays
/// simplicial. Sizes grow like `2^d (d+1)!`; meant for `d <= 4`.
pub fn projective_space(d: usize) -> SimplicialComplex {
    assert!((1..=6).contains(&d), "projective_space supports 1 <= d <= 6");
    let n = d + 1;
    // canonical representative of {s, -s}: first nonzero entry positive
    let mut ids: BTreeMap<Vec<i8>, u32> = BTreeMap::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut s = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            s.push((c % 3) as i8 - 1);
            c /= 3;
        }
        if s.iter().find(|&&x| x != 0) == Some(&1) {
            ids.insert(s, 0);
        }
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i as u32;
    }
    let canon = |s: &[i8]| -> u32 {
        let flip = s.iter().find(|&&x| x != 0) == Some(&-1);
        let key: Vec<i8> = s.iter().map(|&x| if flip { -x } else { x }).collect();
        ids[&key]
    };
    let mut facets = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for signs in 0..(1u32 << n) {
            let mut face = vec![0i8; n];
            let mut simplex = Vec::with_capacity(n);
            for &coord in &perm {
                face[coord] = if signs >> coord & 1 == 1 { -1 } else { 1 };
                simplex.push(canon(&face));
            }
            facets.push(simplex);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    build_complex(&facets).expect("quotient facets are well formed")
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
