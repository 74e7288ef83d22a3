use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{smith_form, AlgebraError, IntMatrix};

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with
/// `d_i | d_{i+1}` and every `d_i >= 2`.
///
/// The chosen generator basis lists the torsion factors first, in order,
/// followed by the free generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(with = "biguint_list")]
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/m`; `m = 0` gives `Z` and `m = 1` the trivial group.
    pub fn cyclic(m: u64) -> Self {
        Self::from_cyclic_orders([BigUint::from(m)])
    }

    /// `(Z/m)^k`.
    pub fn elementary(m: u64, k: usize) -> Self {
        Self::from_cyclic_orders(std::iter::repeat_n(BigUint::from(m), k))
    }

    /// Canonical form of a direct sum of cyclic groups; `0` stands for `Z`
    /// and `1` for the trivial group.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut free_rank = 0;
        let mut finite = Vec::new();
        for d in orders {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        // pairwise gcd/lcm exchange converges to the invariant-factor chain
        let k = finite.len();
        for i in 0..k {
            for j in i + 1..k {
                let g = finite[i].gcd(&finite[j]);
                let l = finite[i].lcm(&finite[j]);
                finite[i] = g;
                finite[j] = l;
            }
        }
        finite.retain(|d| !d.is_one());
        AbelianGroup {
            free_rank,
            torsion: finite,
        }
    }

    /// The cyclic orders of the generator basis (`0` for free generators).
    pub fn generator_orders(&self) -> Vec<BigUint> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat_n(BigUint::zero(), self.free_rank));
        v
    }

    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigUint::one(), |a, d| a * d))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        Self::from_cyclic_orders(self.generator_orders().into_iter().chain(other.generator_orders()))
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> AbelianGroup {
        groups
            .into_iter()
            .fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(g))
    }

    /// `k`-fold direct sum of the group with itself.
    pub fn power(&self, k: usize) -> AbelianGroup {
        Self::sum_all(std::iter::repeat_n(self, k))
    }

    /// Number of torsion factors equal to `d`.
    pub fn count_factor(&self, d: u64) -> usize {
        let d = BigUint::from(d);
        self.torsion.iter().filter(|x| **x == d).count()
    }

    /// Elementary divisors `p^e` of the torsion part, sorted.
    pub fn primary_parts(&self) -> Vec<BigUint> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let mut rest = d.clone();
            let mut p = BigUint::from(2u32);
            while &p * &p <= rest {
                if (&rest % &p).is_zero() {
                    let mut q = BigUint::one();
                    while (&rest % &p).is_zero() {
                        rest /= &p;
                        q *= &p;
                    }
                    out.push(q);
                }
                p += 1u32;
            }
            if !rest.is_one() {
                out.push(rest);
            }
        }
        out.sort();
        out
    }

    /// Display as a sum of prime-power cyclic groups, e.g. `Z/7 ⊕ Z/4 ⊕ Z/3`.
    pub fn primary_display(&self) -> String {
        let mut parts: Vec<String> = self
            .primary_parts()
            .iter()
            .rev()
            .map(|d| format!("Z/{d}"))
            .collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Cokernel `Z^rows / column-span(A)` in canonical form.
pub fn cokernel_group(a: &IntMatrix) -> AbelianGroup {
    let f = smith_form(a);
    let mut orders: Vec<BigUint> = f
        .diagonal
        .iter()
        .map(|d| d.magnitude().clone())
        .collect();
    orders.extend(std::iter::repeat_n(BigUint::zero(), a.rows() - f.rank()));
    AbelianGroup::from_cyclic_orders(orders)
}

/// Subgroup of an ambient group generated by coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModSubgroup {
    pub ambient: AbelianGroup,
    #[serde(with = "bigint_rows")]
    pub generators: Vec<Vec<BigInt>>,
    pub structure: AbelianGroup,
}

impl ModSubgroup {
    pub fn order(&self) -> Option<BigUint> {
        self.structure.order()
    }
}

/// Reduces a coordinate vector modulo the ambient generator orders.
pub fn reduce_coords(ambient: &AbelianGroup, v: &[BigInt]) -> Vec<BigInt> {
    ambient
        .generator_orders()
        .iter()
        .zip(v)
        .map(|(d, x)| {
            if d.is_zero() {
                x.clone()
            } else {
                x.mod_floor(&BigInt::from_biguint(Sign::Plus, d.clone()))
            }
        })
        .collect()
}

/// Integer kernel basis of `A` (columns of the returned matrix).
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let f = smith_form(a);
    let r = f.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    let rows: Vec<usize> = (0..a.cols()).collect();
    f.v.select(&rows, &cols)
}

/// Isomorphism type of the subgroup of `ambient` generated by `generators`.
pub fn subgroup_structure(
    ambient: &AbelianGroup,
    generators: &[Vec<BigInt>],
) -> Result<ModSubgroup, AlgebraError> {
    let n = ambient.num_generators();
    for g in generators {
        if g.len() != n {
            return Err(AlgebraError::CoordinateLength {
                expected: n,
                found: g.len(),
            });
        }
    }
    let gens: Vec<Vec<BigInt>> = generators.iter().map(|g| reduce_coords(ambient, g)).collect();
    let k = gens.len();
    let t = ambient.torsion.len();
    // y in Z^k lies in the relation lattice iff X·y ∈ span of d_i e_i
    let m = IntMatrix::from_fn(n, k + t, |i, j| {
        if j < k {
            gens[j][i].clone()
        } else if j - k == i {
            -BigInt::from_biguint(Sign::Plus, ambient.torsion[i].clone())
        } else {
            BigInt::zero()
        }
    });
    let kernel = integer_kernel(&m);
    let rows: Vec<usize> = (0..k).collect();
    let cols: Vec<usize> = (0..kernel.cols()).collect();
    let relations = kernel.select(&rows, &cols);
    Ok(ModSubgroup {
        ambient: ambient.clone(),
        generators: gens,
        structure: cokernel_group(&relations),
    })
}

mod biguint_list {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Large(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<Repr> = v
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => Repr::Small(x),
                None => Repr::Large(d.to_string()),
            })
            .collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let reprs = Vec::<Repr>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|r| match r {
                Repr::Small(x) => Ok(BigUint::from(x)),
                Repr::Large(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

pub(crate) mod bigint_rows {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Large(String),
    }

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<Vec<Repr>> = v
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x.to_i64() {
                        Some(y) => Repr::Small(y),
                        None => Repr::Large(x.to_string()),
                    })
                    .collect()
            })
            .collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let reprs = Vec::<Vec<Repr>>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|r| match r {
                        Repr::Small(x) => Ok(BigInt::from(x)),
                        Repr::Large(s) => s.parse().map_err(D::Error::custom),
                    })
                    .collect()
            })
            .collect()
    }
}
