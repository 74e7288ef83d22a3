use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::complex_core::{boundary_of_simplex, product_complex, projective_space, rp2_six_vertex};
use crate::oracle::{brute_bockstein, brute_d2_vanishes, BruteBockstein};

fn add2(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| (a + b).rem_euclid(2)).collect()
}

fn random_cochain(rng: &mut ChaCha8Rng, n: usize, m: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(0..m)).collect()
}

fn coords(s: &Space, a: &CohomClass) -> Vec<BigInt> {
    let g = s.cohomology(a.degree, a.modulus).unwrap();
    s.coordinates(&g, a).unwrap()
}

fn is_zero(s: &Space, a: &CohomClass) -> bool {
    coords(s, a).iter().all(|c| c == &BigInt::from(0))
}

fn generator(s: &Space, k: usize, m: u64) -> CohomClass {
    let g = s.cohomology(k, m).unwrap();
    assert_eq!(g.rank(), 1, "expected cyclic H^{k}(Z/{m})");
    g.basis[0].clone()
}

/// δ(a ∪_i b) = δa ∪_i b + a ∪_i δb + a ∪_{i-1} b + b ∪_{i-1} a (mod 2).
fn check_coboundary_formula(s: &Space, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = s.engine().complex();
    let n = s.dimension();
    for p in 0..=n {
        for q in 0..=n {
            for i in 0..=p.min(q) {
                let d = p + q - i;
                if d + 1 > n {
                    continue;
                }
                let a = random_cochain(&mut rng, c.rank(p), 2);
                let b = random_cochain(&mut rng, c.rank(q), 2);
                let lhs = c.coboundary(d, &s.cup_i_cochain(&a, p, &b, q, i as i64).unwrap(), 2).unwrap();
                let mut rhs = vec![0; c.rank(d + 1)];
                if p < n {
                    let da = c.coboundary(p, &a, 2).unwrap();
                    rhs = add2(&rhs, &s.cup_i_cochain(&da, p + 1, &b, q, i as i64).unwrap());
                }
                if q < n {
                    let db = c.coboundary(q, &b, 2).unwrap();
                    rhs = add2(&rhs, &s.cup_i_cochain(&a, p, &db, q + 1, i as i64).unwrap());
                }
                if i > 0 {
                    rhs = add2(&rhs, &s.cup_i_cochain(&a, p, &b, q, i as i64 - 1).unwrap());
                    rhs = add2(&rhs, &s.cup_i_cochain(&b, q, &a, p, i as i64 - 1).unwrap());
                }
                assert_eq!(lhs, rhs, "p={p} q={q} i={i}");
            }
        }
    }
}

#[test]
fn cup_i_coboundary_formula_rp2() {
    let s = Space::simplicial(rp2_six_vertex()).unwrap();
    for seed in 0..5 {
        check_coboundary_formula(&s, seed);
    }
}

#[test]
fn cup_i_coboundary_formula_four_sphere() {
    let s = Space::simplicial(boundary_of_simplex(5)).unwrap();
    check_coboundary_formula(&s, 11);
}

#[test]
fn squares_on_rp2() {
    let s = Space::simplicial(rp2_six_vertex()).unwrap();
    let x = generator(&s, 1, 2);
    assert!(!is_zero(&s, &s.cup(&x, &x).unwrap()));
    assert!(!is_zero(&s, &s.sq(1, &x).unwrap()));
    assert_eq!(coords(&s, &s.sq(0, &x).unwrap()), coords(&s, &x));
    assert!(s.sq(2, &x).unwrap().cochain.iter().all(|&v| v == 0));
}

#[test]
fn squares_and_bocksteins_on_rp3() {
    let s = Space::simplicial(projective_space(3)).unwrap();
    let x = generator(&s, 1, 2);
    let x2 = s.cup(&x, &x).unwrap();
    let x3 = s.cup(&x2, &x).unwrap();
    assert!(!is_zero(&s, &x2));
    assert!(!is_zero(&s, &x3));
    assert_eq!(s.evaluate_top(&x3).unwrap(), 1);
    assert!(is_zero(&s, &s.sq(1, &x2).unwrap()));
    // Cartan: Sq^2(x^2) = (Sq^1 x)^2 = x^4 = 0 in dimension 3 is out of range;
    // Sq^1(x^2) = 2 x Sq^1 x = 0 checked above.
    assert_eq!(s.bockstein_nonzero(1, &x).unwrap(), Some(true));
    assert_eq!(s.bockstein_nonzero(1, &x2).unwrap(), Some(false));
    assert!(s.lifts_to_power_of_two(&x2, 6).unwrap());
    match s.bockstein(1, &x).unwrap() {
        Bockstein::Value(v) => assert_eq!(coords(&s, &v), coords(&s, &x2)),
        Bockstein::Undefined => panic!("β_1 is always defined"),
    }
    assert_eq!(s.bockstein(2, &x).unwrap(), Bockstein::Undefined);
    let w = s.wu_and_sw().unwrap();
    assert!(w.is_spin());
}

#[test]
fn stiefel_whitney_of_rp2() {
    let s = Space::simplicial(rp2_six_vertex()).unwrap();
    let w = s.wu_and_sw().unwrap();
    assert!(!w.w1_zero);
    assert!(!w.w2_zero);
    assert!(!w.is_spin());
}

#[test]
fn product_of_two_spheres() {
    let k = product_complex(&boundary_of_simplex(3), &boundary_of_simplex(3));
    let s = Space::simplicial(k).unwrap();
    let h2 = s.cohomology(2, 2).unwrap();
    assert_eq!(h2.rank(), 2);
    let (a, b) = (&h2.basis[0], &h2.basis[1]);
    assert_eq!(s.evaluate_top(&s.cup(a, b).unwrap()).unwrap(), 1);
    assert_eq!(s.evaluate_top(&s.cup(a, a).unwrap()).unwrap(), 0);
    assert_eq!(s.evaluate_top(&s.sq(2, b).unwrap()).unwrap(), 0);
    assert!(s.wu_and_sw().unwrap().is_spin());
}

#[test]
fn operations_are_independent_of_representative() {
    let s = Space::simplicial(projective_space(3)).unwrap();
    let c = s.engine().complex();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = generator(&s, 1, 2);
    let x2 = s.cup(&x, &x).unwrap();
    let base = coords(&s, &s.sq(1, &x).unwrap());
    for _ in 0..4 {
        let b = random_cochain(&mut rng, c.rank(0), 2);
        let moved = add2(&x.cochain, &c.coboundary(0, &b, 2).unwrap());
        let y = s.engine().class(1, 2, moved).unwrap();
        assert_eq!(coords(&s, &s.sq(1, &y).unwrap()), base);
        assert_eq!(coords(&s, &s.cup(&y, &y).unwrap()), coords(&s, &x2));
        let Bockstein::Value(v) = s.bockstein(1, &y).unwrap() else { panic!() };
        assert_eq!(coords(&s, &v), base);
    }
}

#[test]
fn moore_bocksteins_match_the_oracle() {
    for (m, expect) in [(2u64, [1u32]), (4, [2]), (8, [3])] {
        let c = ChainComplex::moore(m, 3).unwrap();
        let s = Space::synthetic(c.clone()).unwrap();
        let x = generator(&s, 3, 2);
        let a: Vec<u64> = x.cochain.iter().map(|&v| v as u64).collect();
        for r in 1..=4 {
            let brute = brute_bockstein(&c, r, 3, &a).unwrap();
            let ours = s.bockstein_nonzero(r, &x).unwrap();
            let translated = match ours {
                None => BruteBockstein::Undefined,
                Some(false) => BruteBockstein::Zero,
                Some(true) => BruteBockstein::Nonzero,
            };
            assert_eq!(translated, brute, "m={m} r={r}");
            assert_eq!(ours == Some(true), r == expect[0]);
            if let Bockstein::Value(v) = s.bockstein(r, &x).unwrap() {
                assert_eq!(is_zero(&s, &v), r != expect[0]);
            }
        }
    }
}

#[test]
fn moore_d2_matches_the_oracle() {
    for m in [2u64, 4, 8, 12] {
        let c = ChainComplex::moore(m, 2).unwrap();
        let s = Space::synthetic(c.clone()).unwrap();
        let g = s.cohomology(2, 4).unwrap();
        for b in &g.basis {
            let a: Vec<u64> = b.cochain.iter().map(|&v| v as u64).collect();
            let vanishes = brute_d2_vanishes(&c, 2, &a).unwrap();
            assert_eq!(is_zero(&s, &s.d2(b).unwrap()), vanishes, "m={m}");
        }
    }
}

#[test]
fn d2_on_rp3() {
    // H^1(RP^3; Z/8) is generated by 4x, which reduces to zero mod 4, so
    // nothing in H^1(Z/4) lifts and d2 is injective there.
    let s = Space::simplicial(projective_space(3)).unwrap();
    let g = s.cohomology(1, 4).unwrap();
    assert_eq!(g.rank(), 1);
    assert!(!is_zero(&s, &s.d2(&g.basis[0]).unwrap()));
    let m = s.operation_matrix(Op::D2, 1).unwrap();
    assert!(!m.is_zero());
    let q = s.operation_matrix(Op::Reduce4To2, 1).unwrap();
    assert_eq!(q.matrix.rows(), 1);
}

#[test]
fn operation_matrix_shapes() {
    let s = Space::simplicial(rp2_six_vertex()).unwrap();
    let m = s.operation_matrix(Op::Sq(1), 1).unwrap();
    assert_eq!(m.name, "Sq1");
    assert_eq!((m.source, m.target), ((1, 2), (2, 2)));
    assert_eq!(m.matrix.get(0, 0), &BigInt::from(1));
    let beyond = s.operation_matrix(Op::Sq(2), 1).unwrap();
    assert_eq!(beyond.matrix.rows(), 0);
}

#[test]
fn synthetic_complexes_reject_products() {
    let s = Space::synthetic(ChainComplex::moore(2, 2).unwrap()).unwrap();
    let x = generator(&s, 2, 2);
    assert!(matches!(s.cup(&x, &x), Err(OpsError::NeedsSimplicial(_))));
    assert!(matches!(s.sq(1, &x), Err(OpsError::NeedsSimplicial(_))));
    assert!(matches!(s.wu_and_sw(), Err(OpsError::NeedsSimplicial(_))));
}

#[test]
fn negative_cup_index_is_rejected() {
    let s = Space::simplicial(rp2_six_vertex()).unwrap();
    let x = generator(&s, 1, 2);
    assert_eq!(s.cup_i(&x, &x, -1), Err(OpsError::NegativeIndex(-1)));
}

#[test]
fn sq3_is_sq1_sq2() {
    let s = Space::simplicial(projective_space(3)).unwrap();
    let x = generator(&s, 1, 2);
    let y = s.sq3(&x).unwrap();
    assert_eq!(y.degree, 4);
    assert!(y.cochain.is_empty());
}
