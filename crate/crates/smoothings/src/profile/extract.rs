use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{
    f2, order_u64, profile_operations, profile_slots, r_max_for, BocksteinEntry, CohomProfile, Flags, GroupEntry,
    KnownSpace, OpValue, OperationEntry, ProfileError, Provenance, QPreimages, SecondaryOpStatus, PROFILE_FORMAT,
};
use crate::cohomops::{Bockstein, Op, Space};
use crate::complex_core::SimplicialComplex;
use crate::exact_algebra::{AbelianGroup, IntMatrix};

/// Hypotheses that cannot be computed from cohomology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Assertions {
    pub simply_connected: Option<bool>,
    pub phi: Option<OpValue>,
    pub psi: Option<OpValue>,
}

impl Assertions {
    /// Records the assertions on a profile. An assertion that contradicts
    /// a forced or known value is a hypothesis failure.
    pub fn apply(&self, p: &mut CohomProfile) -> Result<(), ProfileError> {
        if let Some(sc) = self.simply_connected {
            if sc && !p.flags.h1_zero {
                return Err(ProfileError::Hypothesis("pi1=trivial contradicts H_1(M) != 0".into()));
            }
            p.flags.simply_connected_asserted = sc;
        }
        for (label, value, slot) in [("phi", self.phi, &mut p.phi), ("psi", self.psi, &mut p.psi)] {
            let Some(v) = value else { continue };
            if v == OpValue::Unknown {
                continue;
            }
            match slot.provenance {
                Some(Provenance::ForcedByVanishing) | Some(Provenance::KnownSpace) => {
                    if slot.value != v {
                        return Err(ProfileError::Hypothesis(format!(
                            "{label}={v} contradicts the {} value {}",
                            if slot.provenance == Some(Provenance::KnownSpace) { "known" } else { "forced" },
                            slot.value
                        )));
                    }
                }
                _ => *slot = SecondaryOpStatus::asserted(v),
            }
        }
        Ok(())
    }
}

/// Source of Steenrod square matrices: `sq(i, k)` is `Sq^i` from
/// `H^k(;Z/2)` in the space's canonical bases.
pub(crate) type SqSource<'a> = dyn Fn(usize, usize) -> Result<IntMatrix, ProfileError> + 'a;

fn to_u64_rows(m: &IntMatrix, orders: &[u64]) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| {
            let ord = BigInt::from(orders[i]);
            (0..m.cols())
                .map(|j| {
                    let x = if orders[i] == 0 { m.get(i, j).clone() } else { m.get(i, j) % &ord };
                    let x = if x < BigInt::from(0) { x + &ord } else { x };
                    x.to_u64().expect("matrix entry fits in u64")
                })
                .collect()
        })
        .collect()
}

fn mul_mod2(a: &[Vec<u64>], b: &[Vec<u64>], inner: usize, cols: usize) -> Vec<Vec<u64>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum::<u64>() % 2)
                .collect()
        })
        .collect()
}

/// Everything coefficient-level: groups, `d_2`, `q`, Bocksteins; squares
/// come from `sq`.
pub(crate) fn build_profile(
    space: &Space,
    name: &str,
    known_space: Option<KnownSpace>,
    flags: Flags,
    sq: &SqSource<'_>,
    phi_psi: (Option<OpValue>, Option<OpValue>, Option<crate::profile::Provenance>),
) -> Result<CohomProfile, ProfileError> {
    let n = space.dimension();
    if !(7..=10).contains(&n) {
        return Err(ProfileError::DimensionOutOfRange(n));
    }
    let mut groups = Vec::new();
    for slot in profile_slots(n) {
        let g = space.cohomology(slot.degree, slot.coefficients)?;
        groups.push(GroupEntry {
            degree: slot.degree,
            coefficients: slot.coefficients,
            group: g.group.clone(),
        });
    }
    let find = |d: usize, m: u64| -> AbelianGroup {
        groups
            .iter()
            .find(|g| g.degree == d && g.coefficients == m)
            .map(|g| g.group.clone())
            .unwrap_or_default()
    };
    let orders = |d: usize, m: u64| -> Vec<u64> {
        if d > n {
            return Vec::new();
        }
        find(d, m).generator_orders().iter().map(order_u64).collect()
    };
    let rank2 = |d: usize| -> usize { if d > n { 0 } else { find(d, 2).num_generators() } };

    let mut operations: Vec<OperationEntry> = Vec::new();
    for (name, s, t) in profile_operations(n) {
        let matrix = match name.as_str() {
            "Sq1" => to_u64_rows(&sq(1, s.degree)?, &orders(t.degree, 2)),
            "Sq2" => to_u64_rows(&sq(2, s.degree)?, &orders(t.degree, 2)),
            "d2" => to_u64_rows(&space.operation_matrix(Op::D2, s.degree)?.matrix, &orders(t.degree, 2)),
            "q_red4to2" => to_u64_rows(&space.operation_matrix(Op::Reduce4To2, s.degree)?.matrix, &orders(t.degree, 2)),
            "Sq2_d2" => {
                let d2 = to_u64_rows(&space.operation_matrix(Op::D2, s.degree)?.matrix, &orders(s.degree + 1, 2));
                let sq2 = to_u64_rows(&sq(2, s.degree + 1)?, &orders(t.degree, 2));
                mul_mod2(&sq2, &d2, rank2(s.degree + 1), find(s.degree, 4).num_generators())
            }
            other => unreachable!("unknown profile operation {other}"),
        };
        operations.push(OperationEntry {
            name,
            source: s,
            target: t,
            matrix,
        });
    }

    let r_max = r_max_for(&[&find(7, 0), &find(8, 0)]);
    let mut bocksteins = Vec::new();
    for k in [6, 7] {
        if k >= n {
            continue;
        }
        let h2 = space.cohomology(k, 2)?;
        let target = space.cohomology(k + 1, 2)?;
        for r in 1..=r_max {
            let domain: Vec<Vec<u8>> = if r == 1 {
                (0..h2.rank())
                    .map(|i| (0..h2.rank()).map(|j| u8::from(i == j)).collect())
                    .collect()
            } else {
                let hr = space.cohomology(k, 1u64 << r)?;
                let mut images = Vec::new();
                for b in &hr.basis {
                    let red = space.reduce(b, 2)?;
                    images.push(coords_u8(&space.coordinates(&h2, &red)?));
                }
                f2::independent(&images)
                    .into_iter()
                    .filter(|v| !f2::is_zero(v))
                    .collect()
            };
            let mut values = Vec::new();
            for d in &domain {
                let coeffs: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
                let class = space.engine().combine(&h2, &coeffs)?;
                match space.bockstein(r, &class)? {
                    Bockstein::Value(v) => values.push(coords_u8(&space.coordinates(&target, &v)?)),
                    Bockstein::Undefined => {
                        return Err(ProfileError::Invalid(format!(
                            "beta_{r} undefined on a reduction of a mod-2^{r} class"
                        )))
                    }
                }
            }
            bocksteins.push(BocksteinEntry {
                source_degree: k,
                r,
                domain,
                values,
            });
        }
    }

    let forced = find(6, 4).is_trivial() || n < 10 || find(10, 2).is_trivial();
    let status = |v: Option<OpValue>| -> SecondaryOpStatus {
        if forced {
            SecondaryOpStatus::FORCED_ZERO
        } else {
            match v {
                Some(OpValue::Unknown) | None => SecondaryOpStatus::UNKNOWN,
                Some(x) => SecondaryOpStatus {
                    value: x,
                    provenance: phi_psi.2,
                },
            }
        }
    };
    let mut p = CohomProfile {
        format: PROFILE_FORMAT.into(),
        name: name.into(),
        n,
        known_space,
        flags,
        r_max,
        groups,
        operations,
        bocksteins,
        phi: status(phi_psi.0),
        psi: status(phi_psi.1),
        q_preimages: None,
        notes: Vec::new(),
    };
    p.q_preimages = q_preimages(&p)?;
    p.validate()?;
    Ok(p)
}

fn coords_u8(v: &[BigInt]) -> Vec<u8> {
    v.iter()
        .map(|x| (x % 2u32).to_u8().map(|b| b & 1).unwrap_or(1))
        .collect()
}

/// Preimages under `q` of the first `w` with `Sq^2 w ≠ 0`, by enumeration.
pub(crate) fn q_preimages(p: &CohomProfile) -> Result<Option<QPreimages>, ProfileError> {
    let (Some(q), Some(sq2), Some(h74)) = (p.op("q_red4to2", 7), p.op("Sq2", 7), p.group(7, 4)) else {
        return Ok(None);
    };
    let c = p.generators(7, 2)?;
    if c > 20 {
        return Err(ProfileError::TooLarge("H^7(;Z/2)".into()));
    }
    let Some(w) = f2::all_vectors(c).find(|w| !f2::is_zero(&f2::apply(&sq2.matrix, w))) else {
        return Ok(None);
    };
    let gens: Vec<u64> = h74.generator_orders().iter().map(order_u64).collect();
    let total: u64 = gens.iter().product();
    if total > 1 << 16 {
        return Err(ProfileError::TooLarge("H^7(;Z/4)".into()));
    }
    let mut orders = Vec::new();
    let mut x = vec![0u64; gens.len()];
    for _ in 0..total {
        let image: Vec<u8> = q
            .matrix
            .iter()
            .map(|row| (row.iter().zip(&x).map(|(a, b)| a * b).sum::<u64>() % 2) as u8)
            .collect();
        if image == w {
            let ord = x
                .iter()
                .zip(&gens)
                .map(|(&v, &g)| g / num_integer::gcd(v, g))
                .fold(1, num_integer::lcm);
            orders.push(ord);
        }
        for (xi, g) in x.iter_mut().zip(&gens) {
            *xi += 1;
            if *xi < *g {
                break;
            }
            *xi = 0;
        }
    }
    orders.sort_unstable();
    Ok(Some(QPreimages { w, orders }))
}

/// Profile of a closed triangulated manifold of dimension 7 to 10.
pub fn extract_profile(k: SimplicialComplex, name: &str, assertions: Assertions) -> Result<CohomProfile, ProfileError> {
    let n = k.dimension();
    if !(7..=10).contains(&n) {
        return Err(ProfileError::DimensionOutOfRange(n));
    }
    k.check_pseudomanifold()?;
    let space = Space::simplicial(k)?;
    let cx = space.complex().expect("simplicial space");
    let top = cx.top_structure_with(space.engine())?;
    let wu = space.wu_and_sw()?;
    let flags = Flags {
        orientable: top.orientable,
        h1_zero: top.h1_zero,
        simply_connected_asserted: false,
        spin: top.orientable && wu.is_spin(),
    };
    let sq = |i: usize, k: usize| -> Result<IntMatrix, ProfileError> {
        Ok(space.operation_matrix(Op::Sq(i), k)?.matrix)
    };
    let mut p = build_profile(&space, name, None, flags, &sq, (None, None, None))?;
    assertions.apply(&mut p)?;
    Ok(p)
}
