//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls Smith normal form except to check it.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use smoothings::exact_algebra::{cokernel_group, smith_form, subgroup_structure, AbelianGroup, IntMatrix};
use smoothings::oracle::{
    brute_cokernel_order, brute_subgroup, group_order_profile, naive_invariant_factors, order_profile, OracleError,
};

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    IntMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-bound..=bound).into())
}

/// Reconstruction, unimodularity, divisibility and agreement with the
/// determinantal-divisor invariant factors.
pub fn check_smith(a: &IntMatrix) -> Result<(), String> {
    let f = smith_form(a);
    if f.u.mul(a).mul(&f.v) != f.s {
        return Err(format!("U A V != S for\n{a}"));
    }
    if !f.s.is_diagonal() {
        return Err(format!("S is not diagonal for\n{a}"));
    }
    if !(f.u.is_unimodular() && f.v.is_unimodular()) {
        return Err(format!("transforms are not unimodular for\n{a}"));
    }
    if f.u.mul(&f.u_inv) != IntMatrix::identity(a.rows()) || f.v.mul(&f.v_inv) != IntMatrix::identity(a.cols()) {
        return Err(format!("stored inverses are wrong for\n{a}"));
    }
    if f.diagonal.iter().any(|d| !d.is_positive()) || f.diagonal.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return Err(format!("diagonal {:?} is not a divisibility chain", f.diagonal));
    }
    let naive = naive_invariant_factors(a);
    if naive != f.diagonal {
        return Err(format!("diagonal {:?} but determinantal divisors give {naive:?}", f.diagonal));
    }
    Ok(())
}

/// Cokernel order against enumeration. `Ok(false)` when the enumeration
/// is out of reach and the divisor product was used instead.
pub fn check_cokernel(a: &IntMatrix) -> Result<bool, String> {
    let ours = cokernel_group(a).order();
    match brute_cokernel_order(a) {
        Ok(brute) => {
            if ours != brute {
                return Err(format!("cokernel order {ours:?}, enumeration {brute:?} for\n{a}"));
            }
            Ok(true)
        }
        Err(OracleError::TooLarge(_)) => {
            let naive = naive_invariant_factors(a);
            let expected = (naive.len() == a.rows())
                .then(|| naive.iter().fold(BigUint::one(), |acc, d| acc * d.magnitude()));
            if ours != expected {
                return Err(format!("cokernel order {ours:?}, divisor product {expected:?}"));
            }
            Ok(false)
        }
        Err(e) => Err(e.to_string()),
    }
}

/// Random ambient of order at most `2^12` with random generators; the
/// computed structure must match the enumerated subgroup.
pub fn check_random_subgroup(rng: &mut impl Rng) -> Result<(), String> {
    let choices = [2u64, 3, 4, 6, 8, 9, 12];
    let mut orders = Vec::new();
    let mut size = 1u64;
    for _ in 0..rng.gen_range(1..=4) {
        let d = choices[rng.gen_range(0..choices.len())];
        if size * d > 1 << 12 {
            break;
        }
        size *= d;
        orders.push(d);
    }
    let ambient = AbelianGroup::from_cyclic_orders(orders.iter().map(|&d| BigUint::from(d)));
    let amb_orders: Vec<u64> = ambient.torsion.iter().map(|d| d.try_into().unwrap()).collect();
    let gens: Vec<Vec<BigInt>> = (0..rng.gen_range(0..=3))
        .map(|_| amb_orders.iter().map(|&m| BigInt::from(rng.gen_range(0..2 * m as i64) - m as i64)).collect())
        .collect();
    let ours = subgroup_structure(&ambient, &gens).map_err(|e| e.to_string())?;
    let brute = brute_subgroup(&ambient, &gens).map_err(|e| e.to_string())?;
    let exponent = amb_orders.iter().fold(1u64, |a, &b| a.lcm(&b));
    if group_order_profile(&ours.structure, exponent) != order_profile(&brute, &amb_orders) {
        return Err(format!("subgroup of {ambient} generated by {gens:?}: got {}", ours.structure));
    }
    Ok(())
}

/// `H^k(;Z/m)` from integral cohomology by the universal coefficient
/// theorem: `H^k ⊗ Z/m ⊕ Tor(H^{k+1}, Z/m)`.
pub fn hand_uct(integral: &[AbelianGroup], k: usize, m: u64) -> AbelianGroup {
    let mut orders: Vec<u64> = Vec::new();
    let gcd = |d: &BigUint| -> u64 { u64::try_from(d).unwrap().gcd(&m) };
    if let Some(h) = integral.get(k) {
        orders.extend(std::iter::repeat_n(m, h.free_rank));
        orders.extend(h.torsion.iter().map(gcd));
    }
    if let Some(h) = integral.get(k + 1) {
        orders.extend(h.torsion.iter().map(gcd));
    }
    AbelianGroup::from_cyclic_orders(orders.into_iter().filter(|&o| o > 1).map(BigUint::from))
}

/// Integral cohomology of `S^i × S^j`, degrees `0..=i+j`.
pub fn sphere_product_cohomology(i: usize, j: usize) -> Vec<AbelianGroup> {
    (0..=i + j)
        .map(|k| {
            let rank = [0, i, j, i + j].iter().filter(|&&d| d == k).count();
            AbelianGroup::free(rank)
        })
        .collect()
}

pub fn orders(v: &[u64]) -> AbelianGroup {
    AbelianGroup::from_cyclic_orders(v.iter().map(|&x| BigUint::from(x)))
}

pub fn is_zero_coords(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
