//! Brute-force verifiers: exhaustive enumeration of cochains, subgroup
//! closures, cochain lifts and determinantal divisors. Slow by design and
//! independent of the reduction engine and of Smith normal form.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::complex_core::ChainComplex;
use crate::exact_algebra::{AbelianGroup, IntMatrix};

/// Enumeration ceiling shared by the oracles.
pub const ENUMERATION_LIMIT: u64 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration of {0} elements exceeds the oracle bound")]
    TooLarge(String),
    #[error("modulus {0} is not allowed here")]
    BadModulus(u64),
    #[error("degree {0} is out of range")]
    Degree(usize),
    #[error("coordinate vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
}

fn checked_count(base: u64, exp: usize) -> Result<u64, OracleError> {
    let mut n: u64 = 1;
    for _ in 0..exp {
        n = n
            .checked_mul(base)
            .filter(|&x| x <= ENUMERATION_LIMIT)
            .ok_or_else(|| OracleError::TooLarge(format!("{base}^{exp}")))?;
    }
    Ok(n)
}

/// Odometer over `{0..m-1}^n`.
fn for_each_vector(m: u64, n: usize, mut f: impl FnMut(&[u64]) -> bool) {
    let mut v = vec![0u64; n];
    loop {
        if !f(&v) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            v[i] += 1;
            if v[i] < m {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Closure of a set of vectors under addition modulo the given orders.
fn span_mod(gens: &[Vec<u64>], orders: &[u64], limit: u64) -> Result<HashSet<Vec<u64>>, OracleError> {
    let n = orders.len();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(vec![0; n]);
    let mut frontier = vec![vec![0u64; n]];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).zip(orders).map(|((a, b), m)| (a + b) % m).collect();
            if seen.insert(y.clone()) {
                if seen.len() as u64 > limit {
                    return Err(OracleError::TooLarge("span".into()));
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

fn coboundary_mod(c: &ChainComplex, k: usize, x: &[u64], m: u64) -> Vec<u64> {
    if k >= c.top_degree() {
        return Vec::new();
    }
    let b = c.boundary(k + 1);
    (0..b.cols())
        .map(|j| {
            let s: i128 = b.column(j).iter().map(|&(i, v)| v as i128 * x[i as usize] as i128).sum();
            s.rem_euclid(m as i128) as u64
        })
        .collect()
}

/// Coboundaries `δ(C^{k-1}) mod m` as a set.
fn coboundary_set(c: &ChainComplex, k: usize, m: u64) -> Result<HashSet<Vec<u64>>, OracleError> {
    let n = c.rank(k);
    if k == 0 {
        let mut s = HashSet::new();
        s.insert(vec![0; n]);
        return Ok(s);
    }
    let gens: Vec<Vec<u64>> = (0..c.rank(k - 1))
        .map(|i| {
            let mut e = vec![0u64; c.rank(k - 1)];
            e[i] = 1;
            coboundary_mod(c, k - 1, &e, m)
        })
        .collect();
    span_mod(&gens, &vec![m; n], ENUMERATION_LIMIT)
}

/// Result of exhaustive cohomology enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteCohomology {
    pub order: u64,
    pub cocycles: Vec<Vec<u64>>,
    pub coboundaries: usize,
}

/// `|H^k(C; Z/m)|` by listing every cochain. Unreduced in degree 0.
pub fn brute_cohomology(c: &ChainComplex, k: usize, m: u64) -> Result<BruteCohomology, OracleError> {
    if m < 2 {
        return Err(OracleError::BadModulus(m));
    }
    if k > c.top_degree() {
        return Err(OracleError::Degree(k));
    }
    let n = c.rank(k);
    checked_count(m, n)?;
    let mut cocycles = Vec::new();
    for_each_vector(m, n, |x| {
        if coboundary_mod(c, k, x, m).iter().all(|&v| v == 0) {
            cocycles.push(x.to_vec());
        }
        true
    });
    let b = coboundary_set(c, k, m)?;
    Ok(BruteCohomology {
        order: cocycles.len() as u64 / b.len() as u64,
        cocycles,
        coboundaries: b.len(),
    })
}

/// Outcome of a lift search for a mod-2 class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruteBockstein {
    /// No mod-`2^r` cocycle reduces to the class.
    Undefined,
    /// The class lifts to a mod-`2^{r+1}` cocycle.
    Zero,
    /// The class lifts mod `2^r` but not mod `2^{r+1}`.
    Nonzero,
}

/// Whether the mod-`p` cocycle `a` is the reduction of a mod-`q` cocycle
/// (`p | q`), allowing `a` to move by mod-`p` coboundaries. Searches
/// `a + δb + p·c` over all `b` and `c` in the window `[0, q/p)`.
pub fn lifts_to(c: &ChainComplex, k: usize, a: &[u64], p: u64, q: u64) -> Result<bool, OracleError> {
    assert!(q.is_multiple_of(p), "target modulus must be a multiple of the source modulus");
    let n = c.rank(k);
    let nb = if k == 0 { 0 } else { c.rank(k - 1) };
    let w = q / p;
    checked_count(w, n)?;
    checked_count(p, nb)?;
    let shifts: Vec<Vec<u64>> = if k == 0 {
        vec![vec![0; n]]
    } else {
        let mut out = Vec::new();
        for_each_vector(p, nb, |b| {
            out.push(coboundary_mod(c, k - 1, b, p));
            true
        });
        out.sort();
        out.dedup();
        out
    };
    checked_count(w, n)?
        .checked_mul(shifts.len() as u64)
        .filter(|&x| x <= ENUMERATION_LIMIT * 4)
        .ok_or_else(|| OracleError::TooLarge("lift window".into()))?;
    for s in &shifts {
        let base: Vec<u64> = a.iter().zip(s).map(|(x, y)| (x + y) % p).collect();
        let mut found = false;
        for_each_vector(w, n, |cv| {
            let lift: Vec<u64> = base.iter().zip(cv).map(|(x, y)| x + p * y).collect();
            if coboundary_mod(c, k, &lift, q).iter().all(|&v| v == 0) {
                found = true;
                return false;
            }
            true
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `β_r(a)` decided by lift searches: defined iff `a` lifts mod `2^r`,
/// zero iff it lifts mod `2^{r+1}`.
pub fn brute_bockstein(c: &ChainComplex, r: u32, k: usize, a: &[u64]) -> Result<BruteBockstein, OracleError> {
    assert!((1..20).contains(&r), "Bockstein index out of range");
    if !lifts_to(c, k, a, 2, 1 << r)? {
        return Ok(BruteBockstein::Undefined);
    }
    Ok(if lifts_to(c, k, a, 2, 1 << (r + 1))? {
        BruteBockstein::Zero
    } else {
        BruteBockstein::Nonzero
    })
}

/// `d_2(a) = 0` iff the mod-4 class `a` is the reduction of a mod-8 class.
pub fn brute_d2_vanishes(c: &ChainComplex, k: usize, a: &[u64]) -> Result<bool, OracleError> {
    lifts_to(c, k, a, 4, 8)
}

/// Whether a mod-`m` cochain is a coboundary, by enumeration.
pub fn brute_is_coboundary(c: &ChainComplex, k: usize, x: &[u64], m: u64) -> Result<bool, OracleError> {
    Ok(coboundary_set(c, k, m)?.contains(x))
}

/// Elements of the subgroup generated inside a finite ambient group.
pub fn brute_subgroup(ambient: &AbelianGroup, generators: &[Vec<BigInt>]) -> Result<HashSet<Vec<u64>>, OracleError> {
    if !ambient.is_finite() {
        return Err(OracleError::TooLarge("infinite ambient group".into()));
    }
    let orders: Vec<u64> = ambient
        .torsion
        .iter()
        .map(|d| d.to_u64().ok_or_else(|| OracleError::TooLarge(d.to_string())))
        .collect::<Result<_, _>>()?;
    let size = ambient.order_u64().unwrap_or(u64::MAX);
    if size > 1 << 16 {
        return Err(OracleError::TooLarge(format!("ambient of order {size}")));
    }
    let gens: Vec<Vec<u64>> = generators
        .iter()
        .map(|g| {
            if g.len() != orders.len() {
                return Err(OracleError::Length {
                    expected: orders.len(),
                    found: g.len(),
                });
            }
            Ok(g.iter()
                .zip(&orders)
                .map(|(x, &m)| x.mod_floor(&BigInt::from(m)).to_u64().expect("reduced"))
                .collect())
        })
        .collect::<Result<_, _>>()?;
    span_mod(&gens, &orders, 1 << 16)
}

/// For each divisor `d` of the ambient exponent, the number of elements
/// `x` of the set with `d·x = 0`.
pub fn order_profile(elements: &HashSet<Vec<u64>>, orders: &[u64]) -> Vec<(u64, usize)> {
    let exponent = orders.iter().fold(1u64, |a, &b| a.lcm(&b));
    let divisors: Vec<u64> = (1..=exponent).filter(|d| exponent % d == 0).collect();
    divisors
        .into_iter()
        .map(|d| {
            let count = elements
                .iter()
                .filter(|x| x.iter().zip(orders).all(|(&v, &m)| (v * d) % m == 0))
                .count();
            (d, count)
        })
        .collect()
}

/// Counts of elements killed by each divisor of `exponent`, computed from
/// the invariant factors. Finite groups of exponent dividing `exponent`
/// are isomorphic iff these profiles agree.
pub fn group_order_profile(g: &AbelianGroup, exponent: u64) -> Vec<(u64, usize)> {
    let orders: Vec<u64> = g.torsion.iter().map(|d| d.to_u64().expect("small group")).collect();
    (1..=exponent)
        .filter(|d| exponent.is_multiple_of(*d))
        .map(|d| (d, orders.iter().map(|&m| d.gcd(&m) as usize).product()))
        .collect()
}

/// Determinant by cofactor expansion.
fn naive_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * naive_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Determinantal divisors `d_k = gcd of all k×k minors`, up to the rank.
pub fn determinantal_divisors(a: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let minor: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| a.get(r, c).clone()).collect()).collect();
                g = g.gcd(&naive_det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    out
}

/// Invariant factors `d_k / d_{k-1}` from determinantal divisors.
pub fn naive_invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let d = determinantal_divisors(a);
    let mut prev = BigInt::one();
    d.into_iter()
        .map(|x| {
            let f = &x / &prev;
            prev = x;
            f.abs()
        })
        .collect()
}

/// `|Z^rows / column-span(A)|` by enumerating the image of the column span
/// in `(Z/N)^rows` where `N` is the top determinantal divisor; `None` when
/// the cokernel is infinite.
pub fn brute_cokernel_order(a: &IntMatrix) -> Result<Option<BigUint>, OracleError> {
    let r = a.rows();
    if r == 0 {
        return Ok(Some(BigUint::one()));
    }
    let d = determinantal_divisors(a);
    if d.len() < r {
        return Ok(None);
    }
    let n = d[r - 1].abs().to_u64().ok_or_else(|| OracleError::TooLarge("determinant".into()))?;
    if n == 1 {
        return Ok(Some(BigUint::one()));
    }
    let total = checked_count(n, r)?;
    let gens: Vec<Vec<u64>> = (0..a.cols())
        .map(|j| {
            (0..r)
                .map(|i| a.get(i, j).mod_floor(&BigInt::from(n)).to_u64().expect("reduced"))
                .collect()
        })
        .collect();
    let span = span_mod(&gens, &vec![n; r], ENUMERATION_LIMIT)?;
    Ok(Some(BigUint::from(total / span.len() as u64)))
}
