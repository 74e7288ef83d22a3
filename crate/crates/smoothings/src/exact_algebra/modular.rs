use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{integer_kernel, smith_form, subgroup_structure, AbelianGroup, AlgebraError, IntMatrix, ModSubgroup};

fn modulus(m: u64) -> BigInt {
    BigInt::from(m)
}

/// Generators of `{x : A·x ≡ 0 (mod m)}`, reduced into `[0, m)`.
pub fn kernel_mod(a: &IntMatrix, m: u64) -> Result<Vec<Vec<BigInt>>, AlgebraError> {
    if m < 2 {
        return Err(AlgebraError::BadModulus(m));
    }
    let mm = modulus(m);
    let f = smith_form(a);
    let mut gens = Vec::new();
    for i in 0..a.cols() {
        // coordinate i of y = V^{-1} x must satisfy s_i·y_i ≡ 0
        let step = match f.diagonal.get(i) {
            Some(s) => &mm / s.gcd(&mm),
            None => BigInt::one(),
        };
        if step == mm {
            continue;
        }
        let g: Vec<BigInt> = (0..a.cols())
            .map(|r| (f.v.get(r, i) * &step).mod_floor(&mm))
            .collect();
        if g.iter().any(|x| !x.is_zero()) {
            gens.push(g);
        }
    }
    Ok(gens)
}

/// Some `x` with `A·x ≡ b (mod m)`, or `None` when the system has no
/// solution. `m = 1` always succeeds with `x = 0`.
pub fn solve_mod(a: &IntMatrix, b: &[BigInt], m: u64) -> Result<Option<Vec<BigInt>>, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::BadModulus(m));
    }
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    if m == 1 {
        return Ok(Some(vec![BigInt::zero(); a.cols()]));
    }
    let mm = modulus(m);
    let f = smith_form(a);
    let c = f.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let ci = ci.mod_floor(&mm);
        match f.diagonal.get(i) {
            Some(s) => {
                let g = s.gcd(&mm);
                if !ci.is_multiple_of(&g) {
                    return Ok(None);
                }
                let reduced = &mm / &g;
                let unit = (s / &g).mod_floor(&reduced);
                let inv = mod_inverse(&unit, &reduced).expect("coprime after dividing out the gcd");
                y[i] = ((&ci / &g) * inv).mod_floor(&reduced);
            }
            None => {
                if !ci.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    let x = f.v.mul_vec(&y).into_iter().map(|v| v.mod_floor(&mm)).collect();
    Ok(Some(x))
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Kernel of the homomorphism `⊕ Z/t_j → ⊕ Z/u_i` given by an integer matrix
/// in generator coordinates (`u_i = 0` means `Z`).
///
/// The matrix must describe a well-defined map; this is not checked.
pub fn hom_kernel(
    source: &AbelianGroup,
    target_orders: &[BigUint],
    matrix: &IntMatrix,
) -> Result<ModSubgroup, AlgebraError> {
    let k = source.num_generators();
    if matrix.cols() != k || matrix.rows() != target_orders.len() {
        return Err(AlgebraError::CoordinateLength {
            expected: k,
            found: matrix.cols(),
        });
    }
    let finite: Vec<usize> = (0..target_orders.len())
        .filter(|&i| !target_orders[i].is_zero())
        .collect();
    let stacked = IntMatrix::from_fn(matrix.rows(), k + finite.len(), |i, j| {
        if j < k {
            matrix.get(i, j).clone()
        } else if finite[j - k] == i {
            -BigInt::from_biguint(Sign::Plus, target_orders[i].clone())
        } else {
            BigInt::zero()
        }
    });
    let kernel = integer_kernel(&stacked);
    let gens: Vec<Vec<BigInt>> = (0..kernel.cols())
        .map(|c| (0..k).map(|r| kernel.get(r, c).clone()).collect())
        .collect();
    subgroup_structure(source, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn span_size(gens: &[Vec<BigInt>], modulus: u64, n: usize) -> usize {
        use std::collections::HashSet;
        let mm = BigInt::from(modulus);
        let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
        seen.insert(vec![BigInt::zero(); n]);
        let mut frontier: Vec<Vec<BigInt>> = seen.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y: Vec<BigInt> = x.iter().zip(g).map(|(a, b)| (a + b).mod_floor(&mm)).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn kernel_of_two_mod_four() {
        let gens = kernel_mod(&m(&[vec![2]]), 4).unwrap();
        assert_eq!(span_size(&gens, 4, 1), 2);
    }

    #[test]
    fn kernel_of_identity_mod_two() {
        assert!(kernel_mod(&IntMatrix::identity(3), 2).unwrap().is_empty());
    }

    #[test]
    fn kernel_order_eight() {
        let a = m(&[vec![2, 2], vec![0, 0]]);
        let gens = kernel_mod(&a, 4).unwrap();
        assert_eq!(span_size(&gens, 4, 2), 8);
    }

    #[test]
    fn modulus_checked() {
        assert!(matches!(kernel_mod(&IntMatrix::identity(1), 1), Err(AlgebraError::BadModulus(1))));
    }

    #[test]
    fn solving_congruences() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let b = vec![BigInt::from(4), BigInt::from(3)];
        let x = solve_mod(&a, &b, 8).unwrap().unwrap();
        let ax = a.mul_vec(&x);
        assert!(ax.iter().zip(&b).all(|(l, r)| (l - r).mod_floor(&BigInt::from(8)).is_zero()));
        assert!(solve_mod(&m(&[vec![2]]), &[BigInt::from(1)], 4).unwrap().is_none());
        assert!(solve_mod(&m(&[vec![0]]), &[BigInt::from(1)], 1).unwrap().is_some());
    }

    #[test]
    fn kernel_of_homomorphism() {
        // Z/4 -> Z/2, 1 -> 1 has kernel {0, 2}
        let k = hom_kernel(&AbelianGroup::cyclic(4), &[BigUint::from(2u32)], &m(&[vec![1]])).unwrap();
        assert_eq!(k.structure, AbelianGroup::cyclic(2));
        // Z/2 ⊕ Z/4 -> Z/2 summing coordinates
        let src = AbelianGroup::from_cyclic_orders([BigUint::from(2u32), BigUint::from(4u32)]);
        let k = hom_kernel(&src, &[BigUint::from(2u32)], &m(&[vec![1, 1]])).unwrap();
        assert_eq!(k.order().unwrap(), BigUint::from(4u32));
    }
}
