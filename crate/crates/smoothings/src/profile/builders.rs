use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::extract::{build_profile, q_preimages};
use super::{
    f2, order_u64, r_max_for, BocksteinEntry, CohomProfile, Flags, GroupEntry, KnownSpace, OpValue, OperationEntry,
    ProfileError, Provenance, SecondaryOpStatus, Slot,
};
use crate::cohomops::Space;
use crate::complex_core::{ChainComplex, SparseMatrix};
use crate::exact_algebra::{AbelianGroup, IntMatrix};

fn check_dimension(n: usize) -> Result<(), ProfileError> {
    if (7..=10).contains(&n) {
        Ok(())
    } else {
        Err(ProfileError::DimensionOutOfRange(n))
    }
}

/// One cell in every degree `0..=n` with `∂_k = m` for even `k`.
fn lens_cells(n: usize, m: u64) -> ChainComplex {
    let m = i64::try_from(m).expect("lens parameter fits in i64");
    let boundaries = (1..=n)
        .map(|k| {
            if k % 2 == 0 {
                SparseMatrix::new(1, vec![vec![(0, m)]])
            } else {
                SparseMatrix::zeros(1, 1)
            }
        })
        .collect();
    ChainComplex::new(vec![1; n + 1], boundaries, false).expect("cellular lens complex")
}

/// `Sq^i` on a space with at most one mod-2 class per degree, given the
/// coefficient of the class in degree `k + i` in `Sq^i` of the one in `k`.
fn rank_one_squares<'a>(
    space: &'a Space,
    rule: impl Fn(usize, usize) -> u8 + 'a,
) -> impl Fn(usize, usize) -> Result<IntMatrix, ProfileError> + 'a {
    move |i, k| {
        let n = space.dimension();
        let cols = space.cohomology(k, 2)?.rank();
        let rows = if k + i > n { 0 } else { space.cohomology(k + i, 2)?.rank() };
        let mut m = IntMatrix::zeros(rows, cols);
        if rows == 1 && cols == 1 {
            m.set(0, 0, rule(i, k).into());
        }
        Ok(m)
    }
}

fn binomial_mod2(j: usize, i: usize) -> u8 {
    // Lucas: C(j, i) is odd iff the bits of i are a subset of those of j
    u8::from(i & !j == 0)
}

/// The standard smooth `n`-sphere.
pub fn profile_sphere(n: usize) -> Result<CohomProfile, ProfileError> {
    check_dimension(n)?;
    let mut ranks = vec![0; n + 1];
    ranks[0] = 1;
    ranks[n] = 1;
    let boundaries = (1..=n).map(|k| SparseMatrix::zeros(ranks[k - 1], ranks[k])).collect();
    let space = Space::synthetic(ChainComplex::new(ranks, boundaries, false)?)?;
    let flags = Flags {
        orientable: true,
        h1_zero: true,
        simply_connected_asserted: true,
        spin: true,
    };
    let sq = rank_one_squares(&space, |_, _| 0);
    build_profile(&space, &format!("S^{n}"), Some(KnownSpace::Sphere(n)), flags, &sq, (None, None, None))
}

/// Real projective space `RP^n` from its cellular chain complex and the
/// binomial rule `Sq^i x^j = C(j, i) x^{i+j}`.
pub fn profile_rp(n: usize) -> Result<CohomProfile, ProfileError> {
    check_dimension(n)?;
    let space = Space::synthetic(lens_cells(n, 2))?;
    // total Stiefel–Whitney class (1 + x)^{n+1}
    let orientable = n % 2 == 1;
    let w2 = binomial_mod2(n + 1, 2) == 1;
    let flags = Flags {
        orientable,
        h1_zero: false,
        simply_connected_asserted: false,
        spin: orientable && !w2,
    };
    let sq = rank_one_squares(&space, |i, k| binomial_mod2(k, i));
    let provenance = Some(Provenance::KnownSpace);
    build_profile(&space, &format!("RP^{n}"), Some(KnownSpace::Rp(n)), flags, &sq, (None, None, provenance))
}

/// The lens space `L^9(m) = S^9/Z_m`. `m = 2` is `RP^9`.
pub fn profile_lens9(m: u64) -> Result<CohomProfile, ProfileError> {
    if m < 2 {
        return Err(ProfileError::Hypothesis(format!("lens parameter must be at least 2, got {m}")));
    }
    if m == 2 {
        return profile_rp(9);
    }
    let space = Space::synthetic(lens_cells(9, m))?;
    let flags = Flags {
        orientable: true,
        h1_zero: false,
        simply_connected_asserted: false,
        spin: m % 2 == 1,
    };
    // mod 2 the ring is Λ[x] ⊗ Z/2[y]; x² = y exactly when m ≡ 2 (mod 4)
    let rule = move |i: usize, k: usize| -> u8 {
        if m % 4 == 2 {
            return binomial_mod2(k, i);
        }
        match i {
            2 => ((k / 2) % 2) as u8,
            _ => 0,
        }
    };
    let sq = rank_one_squares(&space, rule);
    build_profile(&space, &format!("L^9({m})"), Some(KnownSpace::Lens9(m)), flags, &sq, (None, None, None))
}

/// `H^k(;Z/m)` from `H^k(;Z)` and `H^{k+1}(;Z)`.
fn uct(hk: &AbelianGroup, hk1: &AbelianGroup, m: u64) -> AbelianGroup {
    if m == 0 {
        return hk.clone();
    }
    let m = BigUint::from(m);
    let tensor = hk.generator_orders().into_iter().map(|d| if d.is_zero() { m.clone() } else { d.gcd(&m) });
    let tor = hk1.torsion.iter().map(|d| d.gcd(&m));
    AbelianGroup::from_cyclic_orders(tensor.chain(tor))
}

/// Positions of the concatenated generators of `a ⊕ b` in the canonical
/// basis of the sum. Only valid for 2-primary torsion with no free part,
/// where canonicalization is a stable sort by order.
fn sum_permutation(a: &AbelianGroup, b: &AbelianGroup) -> Vec<usize> {
    let orders: Vec<u64> = a.generator_orders().iter().chain(&b.generator_orders()).map(order_u64).collect();
    let mut idx: Vec<usize> = (0..orders.len()).collect();
    idx.sort_by_key(|&i| orders[i]);
    let mut pos = vec![0; orders.len()];
    for (new, &old) in idx.iter().enumerate() {
        pos[old] = new;
    }
    pos
}

fn combine_status(a: SecondaryOpStatus, b: SecondaryOpStatus) -> SecondaryOpStatus {
    use OpValue::*;
    let value = match (a.value, b.value) {
        (Nonzero, _) | (_, Nonzero) => Nonzero,
        (Zero, Zero) => Zero,
        _ => Unknown,
    };
    if value == Unknown {
        return SecondaryOpStatus::UNKNOWN;
    }
    let provenance = [a, b]
        .iter()
        .filter(|s| s.value != Unknown && s.provenance != Some(Provenance::ForcedByVanishing))
        .find_map(|s| s.provenance)
        .or(Some(Provenance::ForcedByVanishing));
    SecondaryOpStatus { value, provenance }
}

/// Bocksteins of `p` on degree `k` for every `r ≤ r_max`; past the stored
/// range the domain is the `E_{r+1}` part of the last one and values vanish.
fn extended_bocksteins(p: &CohomProfile, k: usize, r_max: u32) -> Vec<BocksteinEntry> {
    let mut out: Vec<BocksteinEntry> = p.bocksteins.iter().filter(|b| b.source_degree == k).cloned().collect();
    let Some(last) = out.last().cloned() else {
        return out;
    };
    let target = last.values.first().map_or(0, Vec::len);
    let lower: Vec<Vec<u8>> = out[..out.len() - 1].iter().flat_map(|b| b.values.clone()).collect();
    // w in domain with β(w) ∈ span(lower), as combinations of the domain
    let mut survivors = Vec::new();
    for combo in f2::all_vectors(last.domain.len()) {
        let w = f2_combine(&last.domain, &combo, p.generators(k, 2).unwrap_or(0));
        let v = f2_combine(&last.values, &combo, target);
        if f2::in_span(&lower, &v) {
            survivors.push(w);
        }
    }
    let domain: Vec<Vec<u8>> = f2::independent(&survivors).into_iter().filter(|v| !f2::is_zero(v)).collect();
    for r in last.r + 1..=r_max {
        out.push(BocksteinEntry {
            source_degree: k,
            r,
            domain: domain.clone(),
            values: vec![vec![0; target]; domain.len()],
        });
    }
    out
}

fn f2_combine(vectors: &[Vec<u8>], coeffs: &[u8], len: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for (v, &c) in vectors.iter().zip(coeffs) {
        if c == 1 {
            for (o, x) in out.iter_mut().zip(v) {
                *o ^= x;
            }
        }
    }
    out
}

/// Connected sum, assembled from the two profiles.
///
/// Below the top degree the cohomology is the direct sum and every
/// operation is block diagonal; the top degree follows orientability. When
/// both summands are non-orientable the groups of degree `n − 1` with
/// coefficients other than `Z/2` change, and the operations touching them
/// are dropped with a note.
pub fn profile_connected_sum(p: &CohomProfile, q: &CohomProfile) -> Result<CohomProfile, ProfileError> {
    if p.n != q.n {
        return Err(ProfileError::DimensionMismatch(p.n, q.n));
    }
    let n = p.n;
    let orientable = p.flags.orientable && q.flags.orientable;
    let twisted = !p.flags.orientable && !q.flags.orientable;
    let mut notes: Vec<String> = p.notes.iter().chain(&q.notes).cloned().collect();

    let top = |m: u64| -> AbelianGroup {
        match (orientable, m) {
            (true, m) => AbelianGroup::cyclic(m),
            (false, 0) => AbelianGroup::cyclic(2),
            (false, m) => AbelianGroup::cyclic(m.gcd(&2)),
        }
    };
    let hn1_z = if twisted {
        p.group_or_trivial(n - 1, 0)?
            .direct_sum(&q.group_or_trivial(n - 1, 0)?)
            .direct_sum(&AbelianGroup::free(1))
    } else {
        p.group_or_trivial(n - 1, 0)?.direct_sum(&q.group_or_trivial(n - 1, 0)?)
    };
    let mut groups = Vec::new();
    for g in &p.groups {
        let (d, m) = (g.degree, g.coefficients);
        let group = if d == n {
            top(m)
        } else if d == n - 1 && twisted && m != 2 {
            uct(&hn1_z, &top(0), m)
        } else {
            g.group.direct_sum(&q.group_or_trivial(d, m)?)
        };
        groups.push(GroupEntry {
            degree: d,
            coefficients: m,
            group,
        });
    }

    let changed = |s: &Slot| twisted && s.degree == n - 1 && s.coefficients != 2;
    let mut operations = Vec::new();
    for o in &p.operations {
        let Some(o2) = q.op(&o.name, o.source.degree) else {
            return Err(ProfileError::Invalid(format!("{} missing from {}", o.name, q.name)));
        };
        if changed(&o.source) || changed(&o.target) {
            notes.push(format!(
                "{} on degree {} dropped: both summands are non-orientable",
                o.name, o.source.degree
            ));
            continue;
        }
        let (s, t) = (o.source, o.target);
        let sp = p.group_or_trivial(s.degree, s.coefficients)?;
        let sq = q.group_or_trivial(s.degree, s.coefficients)?;
        let cols = sum_permutation(&sp, &sq);
        let matrix = if s.degree == n {
            // top to top: both ends are the identified fundamental class, so
            // take the summand whose orientability the sum inherits
            if orientable || !p.flags.orientable { o.matrix.clone() } else { o2.matrix.clone() }
        } else if t.degree == n {
            // the fundamental classes are identified
            let mut row = vec![0u64; cols.len()];
            for (j, &c) in cols.iter().enumerate() {
                let from = if j < sp.num_generators() {
                    o.matrix.first().map_or(0, |r| r[j])
                } else {
                    o2.matrix.first().map_or(0, |r| r[j - sp.num_generators()])
                };
                row[c] = from;
            }
            if o.matrix.is_empty() { Vec::new() } else { vec![row] }
        } else {
            let tp = p.group_or_trivial(t.degree, t.coefficients)?;
            let tq = q.group_or_trivial(t.degree, t.coefficients)?;
            let rows = sum_permutation(&tp, &tq);
            let mut m = vec![vec![0u64; cols.len()]; rows.len()];
            for (i, &ri) in rows.iter().enumerate() {
                for (j, &cj) in cols.iter().enumerate() {
                    let (a, b) = (i < tp.num_generators(), j < sp.num_generators());
                    m[ri][cj] = match (a, b) {
                        (true, true) => o.matrix[i][j],
                        (false, false) => o2.matrix[i - tp.num_generators()][j - sp.num_generators()],
                        _ => 0,
                    };
                }
            }
            m
        };
        operations.push(OperationEntry {
            name: o.name.clone(),
            source: s,
            target: t,
            matrix,
        });
    }

    let find = |d: usize| {
        groups
            .iter()
            .find(|g| g.degree == d && g.coefficients == 0)
            .map(|g| g.group.clone())
            .unwrap_or_default()
    };
    let r_max = r_max_for(&[&find(7), &find(8)]);
    let mut bocksteins = Vec::new();
    for k in [6, 7] {
        if k >= n {
            continue;
        }
        if twisted && k == n - 1 {
            notes.push(format!("Bocksteins on degree {k} dropped: both summands are non-orientable"));
            continue;
        }
        let bp = extended_bocksteins(p, k, r_max);
        let bq = extended_bocksteins(q, k, r_max);
        let (sp, sq) = (p.generators(k, 2)?, q.generators(k, 2)?);
        let (tp, tq) = (p.generators(k + 1, 2)?, q.generators(k + 1, 2)?);
        for (a, b) in bp.iter().zip(&bq) {
            let pad = |v: &[u8], left: usize, right: usize| -> Vec<u8> {
                let mut out = vec![0; left];
                out.extend_from_slice(v);
                out.resize(left + v.len() + right, 0);
                out
            };
            let value = |v: &[u8], first: bool| -> Vec<u8> {
                if k + 1 == n {
                    v.to_vec()
                } else if first {
                    pad(v, 0, tq)
                } else {
                    pad(v, tp, 0)
                }
            };
            let mut domain: Vec<Vec<u8>> = a.domain.iter().map(|v| pad(v, 0, sq)).collect();
            domain.extend(b.domain.iter().map(|v| pad(v, sp, 0)));
            let mut values: Vec<Vec<u8>> = a.values.iter().map(|v| value(v, true)).collect();
            values.extend(b.values.iter().map(|v| value(v, false)));
            bocksteins.push(BocksteinEntry {
                source_degree: k,
                r: a.r,
                domain,
                values,
            });
        }
    }

    let forced = n < 10
        || groups.iter().any(|g| g.degree == 6 && g.coefficients == 4 && g.group.is_trivial())
        || groups.iter().any(|g| g.degree == 10 && g.coefficients == 2 && g.group.is_trivial());
    let status = |a, b| if forced { SecondaryOpStatus::FORCED_ZERO } else { combine_status(a, b) };
    notes.dedup();
    let mut out = CohomProfile {
        format: p.format.clone(),
        name: format!("{} # {}", p.name, q.name),
        n,
        known_space: None,
        flags: Flags {
            orientable,
            h1_zero: p.flags.h1_zero && q.flags.h1_zero,
            simply_connected_asserted: p.flags.simply_connected_asserted && q.flags.simply_connected_asserted,
            spin: p.flags.spin && q.flags.spin,
        },
        r_max,
        groups,
        operations,
        bocksteins,
        phi: status(p.phi, q.phi),
        psi: status(p.psi, q.psi),
        q_preimages: None,
        notes,
    };
    out.q_preimages = q_preimages(&out)?;
    out.validate()?;
    Ok(out)
}
