//! Acceptance harness. Prints PASS/FAIL per criterion and exits nonzero
//! only when a criterion outside `KNOWN_RED` fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smoothings::classifier::{
    classify, classify_concordance, lens_inertia, theta_constants, ClassificationResult, ClassifyError, InertiaBounds,
    SubgroupDescriptor, ThetaGenerator,
};
use smoothings::cli::{zoo_rows, ZooTable};
use smoothings::cohomops::{Bockstein, Op, Space};
use smoothings::complex_core::{
    boundary_of_simplex, product_complex, projective_space, rp2_six_vertex, ChainComplex, CohomClass,
    SimplicialComplex,
};
use smoothings::exact_algebra::AbelianGroup;
use smoothings::oracle::{brute_bockstein, brute_d2_vanishes, BruteBockstein};
use smoothings::profile::{
    extract_profile, profile_connected_sum, profile_lens9, profile_rp, profile_sphere, Assertions, CohomProfile,
};

/// Criteria expected to fail; see the README for the reason.
const KNOWN_RED: &[usize] = &[3];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// 1. Θ_n from trivial cohomology
fn spheres() -> Outcome {
    let expected: [(usize, &[u64]); 4] = [(7, &[28]), (8, &[2]), (9, &[2, 2, 2]), (10, &[6])];
    for (n, orders) in expected {
        let c = classify_concordance(&profile_sphere(n).map_err(s)?).map_err(s)?.value.group;
        let want = common::orders(orders);
        ensure(c == want, || format!("C(S^{n}) = {c}, expected {want}"))?;
        let theta = theta_constants(n).map_err(s)?.theta;
        ensure(c == theta, || format!("C(S^{n}) = {c} but Θ_{n} = {theta}"))?;
    }
    Ok("C(S^n) = Θ_n for n = 7..10".into())
}

// 2. lens spaces L^9(m)
fn lens_table() -> Outcome {
    use ThetaGenerator::*;
    let mut orders = Vec::new();
    for m in 2..=12u64 {
        let d = lens_inertia(m).map_err(s)?;
        let order = d.structure.order_u64().unwrap_or(0);
        let ok = match m % 4 {
            0 => order == 4 && d.generators.contains(&BP),
            2 => order == 2 && d.generators == [EtaEpsilon],
            _ => d.is_trivial() && order == 1,
        };
        ensure(ok, || format!("I(L^9({m})) = {d}"))?;
        let r = classify(&profile_lens9(m).map_err(s)?).map_err(s)?;
        ensure(r.inertia.as_ref() == Some(&d), || format!("classify(L^9({m})) reports {:?}", r.inertia))?;
        orders.push(order.to_string());
    }
    // RP^9 = L^9(2): exactly one homotopy sphere other than S^9 is absorbed
    let r9 = classify(&profile_rp(9).map_err(s)?).map_err(s)?;
    let i9 = r9.inertia.ok_or("I(RP^9) not determined")?;
    ensure(i9.structure.order_u64() == Some(2), || format!("I(RP^9) = {i9}"))?;
    ensure(i9 == lens_inertia(2).map_err(s)?, || format!("I(RP^9) = {i9} differs from the m = 2 row"))?;
    Ok(format!("|I| for m = 2..12: {}; I(RP^9) = {i9}", orders.join(",")))
}

// 3. projective spaces
fn projective() -> Outcome {
    let mut failures = Vec::new();
    let r8 = classify(&profile_rp(8).map_err(s)?).map_err(s)?;
    let ih8 = r8.ih.clone().ok_or("I_h(RP^8) not determined")?;
    if ih8 != InertiaBounds::exact(SubgroupDescriptor::zero(8)) {
        failures.push(format!("I_h(RP^8) = [{}, {}]", ih8.lower, ih8.upper));
    }
    let whole8 = SubgroupDescriptor::whole(8).map_err(s)?;
    if r8.inertia.as_ref() != Some(&whole8) {
        failures.push(format!("I(RP^8) = {}, expected {whole8}", show(&r8.inertia)));
    }
    let r10 = classify(&profile_rp(10).map_err(s)?).map_err(s)?;
    let expected = SubgroupDescriptor::new(10, [ThetaGenerator::Beta1, ThetaGenerator::EtaMu]).map_err(s)?;
    if r10.ih != Some(InertiaBounds::exact(expected.clone())) {
        failures.push(format!("I_h(RP^10) = {:?}, expected {expected}", r10.ih));
    }
    let whole10 = SubgroupDescriptor::whole(10).map_err(s)?;
    if r10.inertia.as_ref() != Some(&whole10) {
        failures.push(format!("I(RP^10) = {}, expected Θ_10", show(&r10.inertia)));
    }
    for row in zoo_rows(ZooTable::TheoremC).map_err(s)? {
        if (row.label.starts_with("(iv)") || row.label.starts_with("(v)")) && !row.pass {
            failures.push(format!("{}: {} (expected {})", row.label, row.computed, row.expected));
        }
    }
    if failures.is_empty() {
        Ok(format!("I_h(RP^8) = 0, I(RP^8) = {whole8}, I_h(RP^10) = {expected}, I(RP^10) = Θ_10"))
    } else {
        Err(failures.join("; "))
    }
}

fn show(d: &Option<SubgroupDescriptor>) -> String {
    d.as_ref().map_or("not determined".into(), |d| d.to_string())
}

fn product(i: usize, j: usize) -> Result<CohomProfile, String> {
    let k = product_complex(&boundary_of_simplex(i + 1), &boundary_of_simplex(j + 1));
    let a = Assertions {
        simply_connected: Some(true),
        ..Assertions::default()
    };
    extract_profile(k, &format!("S^{i} x S^{j}"), a).map_err(s)
}

/// Extracted groups and every `H^d(;Z/m)` summand against the hand UCT,
/// then the whole group against `formula` evaluated on hand groups.
fn check_product(i: usize, j: usize, formula: &[(usize, u64, usize)], want: &[u64]) -> Result<String, String> {
    let t = Instant::now();
    let p = product(i, j)?;
    let integral = common::sphere_product_cohomology(i, j);
    for g in &p.groups {
        let hand = if g.coefficients == 0 {
            integral[g.degree].clone()
        } else {
            common::hand_uct(&integral, g.degree, g.coefficients)
        };
        ensure(g.group == hand, || format!("H^{}(S^{i}xS^{j};Z/{}) = {}, hand {hand}", g.degree, g.coefficients, g.group))?;
    }
    let r = classify(&p).map_err(s)?;
    let c = r.concordance.clone().ok_or("C not determined")?;
    for summand in &c.summands {
        if let Some((d, m, pow)) = parse_source(&summand.source) {
            let hand = common::hand_uct(&integral, d, m).power(pow);
            ensure(summand.group == hand, || format!("{} = {}, hand {hand}", summand.source, summand.group))?;
        }
    }
    let hand_total = AbelianGroup::sum_all(
        formula.iter().map(|&(d, m, pow)| common::hand_uct(&integral, d, m).power(pow)).collect::<Vec<_>>().iter(),
    );
    ensure(c.group == hand_total, || format!("C(S^{i}xS^{j}) = {}, hand formula {hand_total}", c.group))?;
    ensure(c.group == common::orders(want), || format!("C(S^{i}xS^{j}) = {}", c.group))?;
    ensure(r.ic.as_ref().is_some_and(|d| d.is_trivial()), || format!("I_c(S^{i}xS^{j}) = {:?}", r.ic))?;
    Ok(format!(
        "C(S^{i}xS^{j}) = {} [{}] in {:.1}s",
        c.group.primary_display(),
        c.group,
        t.elapsed().as_secs_f64()
    ))
}

/// `H^d(;Z/m)` or `H^d(;Z/m)^k`.
fn parse_source(src: &str) -> Option<(usize, u64, usize)> {
    let rest = src.strip_prefix("H^")?;
    let (d, rest) = rest.split_once("(;Z/")?;
    let (m, rest) = rest.split_once(')')?;
    let pow = match rest.strip_prefix('^') {
        Some(k) => k.parse().ok()?,
        None if rest.is_empty() => 1,
        None => return None,
    };
    Some((d.parse().ok()?, m.parse().ok()?, pow))
}

// 4. products of spheres
fn products() -> Outcome {
    // spin, dimension 9: H^7(Z/28) ⊕ H^8(Z/2) ⊕ H^9(Z/2)^3
    let a = check_product(2, 7, &[(7, 28, 1), (8, 2, 1), (9, 2, 3)], &[28, 2, 2, 2])?;
    // spin with Φ = ψ = 0, dimension 10
    let b = check_product(3, 7, &[(7, 7, 1), (8, 2, 1), (9, 2, 1), (10, 3, 1), (10, 2, 1), (7, 4, 1)], &[7, 4, 3, 2])?;
    Ok(format!("{a}; {b}"))
}

fn binom_mod2(n: usize, k: usize) -> u8 {
    // Lucas: C(n, k) is odd iff the bits of k are a subset of those of n
    u8::from(k <= n && n & k == k)
}

struct Steenrod {
    space: Space,
    dim: usize,
}

impl Steenrod {
    fn coords(&self, a: &CohomClass) -> Result<Vec<BigInt>, String> {
        if a.degree > self.dim {
            return Ok(Vec::new());
        }
        let g = self.space.cohomology(a.degree, 2).map_err(s)?;
        self.space.coordinates(&g, a).map_err(s)
    }

    fn add(&self, a: &CohomClass, b: &CohomClass) -> Result<CohomClass, String> {
        if a.degree > self.dim {
            return Ok(a.clone());
        }
        let c = a.cochain.iter().zip(&b.cochain).map(|(x, y)| (x + y).rem_euclid(2)).collect();
        self.space.engine().class(a.degree, 2, c).map_err(s)
    }

    fn sq(&self, i: usize, a: &CohomClass) -> Result<CohomClass, String> {
        self.space.sq(i, a).map_err(s)
    }

    fn cup(&self, a: &CohomClass, b: &CohomClass) -> Result<CohomClass, String> {
        self.space.cup(a, b).map_err(s)
    }

    fn basis(&self, k: usize) -> Result<Vec<CohomClass>, String> {
        Ok(self.space.cohomology(k, 2).map_err(s)?.basis)
    }
}

/// `H^*(RP^d; Z/2) = Z/2[x]/x^{d+1}`: every matrix against `C(j, i)`.
fn binomial_rule(st: &Steenrod, label: &str) -> Result<usize, String> {
    let mut checked = 0;
    let x = st.basis(1)?.into_iter().next().ok_or("H^1 = 0")?;
    let mut power = x.clone();
    for j in 1..=st.dim {
        let basis = st.basis(j)?;
        ensure(basis.len() == 1, || format!("{label}: H^{j} has rank {}", basis.len()))?;
        ensure(st.coords(&power)? == vec![BigInt::from(1)], || format!("{label}: x^{j} is not the generator"))?;
        for i in 1..=2 {
            let m = st.space.operation_matrix(Op::Sq(i), j).map_err(s)?.matrix;
            let expected = if i + j <= st.dim { binom_mod2(j, i) } else { 0 };
            let got = if m.rows() == 0 { 0 } else { u8::from(m.get(0, 0) % BigInt::from(2) != BigInt::from(0)) };
            ensure(got == expected, || format!("{label}: Sq^{i} x^{j} = {got}, C({j},{i}) = {expected}"))?;
            checked += 1;
        }
        if j < st.dim {
            power = st.cup(&power, &x)?;
        }
    }
    Ok(checked)
}

fn sq1_is_beta1(st: &Steenrod, label: &str) -> Result<usize, String> {
    let mut checked = 0;
    for k in 0..st.dim {
        for a in st.basis(k)? {
            let sq1 = st.coords(&st.sq(1, &a)?)?;
            let beta = match st.space.bockstein(1, &a).map_err(s)? {
                Bockstein::Value(v) => st.coords(&v)?,
                Bockstein::Undefined => return Err(format!("{label}: β_1 undefined in degree {k}")),
            };
            ensure(sq1 == beta, || format!("{label}: Sq^1 != β_1 in degree {k}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// `Sq^2(ab) = Sq^2a·b + Sq^1a·Sq^1b + a·Sq^2b` on all basis pairs.
fn cartan(st: &Steenrod, label: &str) -> Result<usize, String> {
    let mut checked = 0;
    for p in 0..=st.dim {
        for q in 0..=st.dim - p {
            for a in st.basis(p)? {
                for b in st.basis(q)? {
                    let lhs = st.coords(&st.sq(2, &st.cup(&a, &b)?)?)?;
                    let t1 = st.cup(&st.sq(2, &a)?, &b)?;
                    let t2 = st.cup(&st.sq(1, &a)?, &st.sq(1, &b)?)?;
                    let t3 = st.cup(&a, &st.sq(2, &b)?)?;
                    let rhs = st.coords(&st.add(&st.add(&t1, &t2)?, &t3)?)?;
                    ensure(lhs == rhs, || format!("{label}: Cartan fails in degrees ({p}, {q})"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Adding `δc` to a representative must not move any operation value.
fn perturbations(st: &Steenrod, rng: &mut ChaCha8Rng, count: usize, label: &str) -> Result<(), String> {
    let complex = st.space.engine().complex();
    for t in 0..count {
        let k = rng.gen_range(1..=st.dim);
        let basis = st.basis(k)?;
        if basis.is_empty() {
            continue;
        }
        let a = &basis[rng.gen_range(0..basis.len())];
        let c: Vec<i64> = (0..complex.rank(k - 1)).map(|_| rng.gen_range(0..2)).collect();
        let dc = complex.coboundary(k - 1, &c, 2).map_err(s)?;
        let moved = st.add(a, &st.space.engine().class(k, 2, dc).map_err(s)?)?;
        for i in 1..=2 {
            let (x, y) = (st.coords(&st.sq(i, a)?)?, st.coords(&st.sq(i, &moved)?)?);
            ensure(x == y, || format!("{label}: perturbation {t} moves Sq^{i} in degree {k}"))?;
        }
        if k < st.dim {
            let other = &st.basis(1)?[0];
            let (x, y) = (st.coords(&st.cup(a, other)?)?, st.coords(&st.cup(&moved, other)?)?);
            ensure(x == y, || format!("{label}: perturbation {t} moves a cup product in degree {k}"))?;
        }
        ensure(st.coords(a)? == st.coords(&moved)?, || format!("{label}: perturbation {t} changes the class"))?;
    }
    Ok(())
}

// 5. Steenrod squares against closed forms
fn steenrod() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = Vec::new();
    let spaces: [(&str, SimplicialComplex, bool); 3] = [
        ("RP^2", rp2_six_vertex(), true),
        ("RP^3", projective_space(3), true),
        ("RP^2xRP^2", product_complex(&rp2_six_vertex(), &rp2_six_vertex()), false),
    ];
    for (label, k, truncated_polynomial) in spaces {
        let dim = k.dimension();
        let st = Steenrod {
            space: Space::simplicial(k).map_err(s)?,
            dim,
        };
        let b = if truncated_polynomial { binomial_rule(&st, label)? } else { 0 };
        let o = sq1_is_beta1(&st, label)?;
        let c = cartan(&st, label)?;
        if truncated_polynomial {
            perturbations(&st, &mut rng, 50, label)?;
        }
        counts.push(format!("{label}: {b} binomial, {o} Sq^1=β_1, {c} Cartan"));
    }
    Ok(format!("{}; 50 perturbations each on RP^2, RP^3", counts.join("; ")))
}

fn as_u64(c: &[i64]) -> Vec<u64> {
    c.iter().map(|&x| x as u64).collect()
}

fn moore_space(m: u64) -> Result<(ChainComplex, Space), String> {
    let c = ChainComplex::moore(m, 7).map_err(s)?;
    let space = Space::synthetic(c.clone()).map_err(s)?;
    Ok((c, space))
}

fn translate(v: Option<bool>) -> BruteBockstein {
    match v {
        None => BruteBockstein::Undefined,
        Some(false) => BruteBockstein::Zero,
        Some(true) => BruteBockstein::Nonzero,
    }
}

fn d2_is_zero(space: &Space, a: &CohomClass) -> Result<bool, String> {
    let v = space.d2(a).map_err(s)?;
    if v.degree > space.dimension() {
        return Ok(true);
    }
    let g = space.cohomology(v.degree, 2).map_err(s)?;
    Ok(common::is_zero_coords(&space.coordinates(&g, &v).map_err(s)?))
}

// 6. Bocksteins and d_2 against the lift oracle
fn lift_oracles() -> Outcome {
    let mut checked = 0;
    for r in 1..=3u32 {
        let (c, space) = moore_space(1 << r)?;
        let x = space.cohomology(7, 2).map_err(s)?.basis[0].clone();
        for t in 1..=r {
            let ours = space.bockstein_nonzero(t, &x).map_err(s)?;
            let brute = brute_bockstein(&c, t, 7, &as_u64(&x.cochain)).map_err(s)?;
            ensure(ours == Some(t == r), || format!("moore(2^{r}, 7): β_{t}(gen) = {ours:?}"))?;
            ensure(translate(ours) == brute, || format!("moore(2^{r}, 7): β_{t} disagrees with the oracle"))?;
            checked += 1;
        }
        // β_t vanishes on reductions of mod 2^{t+1} and integral classes
        for k in 7..=8 {
            for t in 1..=3u32 {
                let lifts = space.cohomology(k, 1 << (t + 1)).map_err(s)?.basis;
                let integral = space.cohomology(k, 0).map_err(s)?.basis;
                for a in lifts.iter().chain(&integral) {
                    let y = space.reduce(a, 2).map_err(s)?;
                    let ours = space.bockstein_nonzero(t, &y).map_err(s)?;
                    ensure(ours == Some(false), || format!("moore(2^{r}, 7): β_{t} of a reduction is {ours:?}"))?;
                    if k < 8 {
                        let brute = brute_bockstein(&c, t, k, &as_u64(&y.cochain)).map_err(s)?;
                        ensure(brute == BruteBockstein::Zero, || format!("oracle: β_{t} of a reduction is {brute:?}"))?;
                    }
                    checked += 1;
                }
            }
        }
        // d_2 vanishes on reductions of mod 8 and integral classes
        for k in 7..=8 {
            let eights = space.cohomology(k, 8).map_err(s)?.basis;
            let integral = space.cohomology(k, 0).map_err(s)?.basis;
            for a in eights.iter().chain(&integral) {
                let y = space.reduce(a, 4).map_err(s)?;
                ensure(d2_is_zero(&space, &y)?, || format!("moore(2^{r}, 7): d_2 of a reduction is nonzero"))?;
                ensure(brute_d2_vanishes(&c, k, &as_u64(&y.cochain)).map_err(s)?, || "oracle: d_2 of a reduction".into())?;
                checked += 1;
            }
        }
    }
    let (c, space) = moore_space(4)?;
    let x = space.cohomology(7, 4).map_err(s)?.basis[0].clone();
    ensure(!d2_is_zero(&space, &x)?, || "moore(4, 7): d_2(gen) = 0".into())?;
    ensure(!brute_d2_vanishes(&c, 7, &as_u64(&x.cochain)).map_err(s)?, || "oracle: d_2(gen) = 0 on moore(4, 7)".into())?;
    Ok(format!("{} checks, d_2(gen) != 0 on moore(4, 7)", checked + 1))
}

// 7. exact algebra on random input
fn exact_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut enumerated, mut by_divisors) = (0, 0);
    for _ in 0..500 {
        let a = common::random_matrix(&mut rng, 6, 9);
        common::check_smith(&a)?;
        if common::check_cokernel(&a)? {
            enumerated += 1;
        } else {
            by_divisors += 1;
        }
    }
    for _ in 0..200 {
        common::check_random_subgroup(&mut rng)?;
    }
    Ok(format!(
        "500 matrices: Smith forms sound; cokernels {enumerated} enumerated, {by_divisors} by divisor product; 200 subgroups"
    ))
}

fn corpus() -> Result<Vec<CohomProfile>, String> {
    let mut out = Vec::new();
    for n in 7..=10 {
        out.push(profile_sphere(n).map_err(s)?);
        out.push(profile_rp(n).map_err(s)?);
    }
    for m in 2..=12 {
        out.push(profile_lens9(m).map_err(s)?);
    }
    let sums = [(4, 6), (2, 3), (3, 5), (8, 12)];
    for (a, b) in sums {
        out.push(profile_connected_sum(&profile_lens9(a).map_err(s)?, &profile_lens9(b).map_err(s)?).map_err(s)?);
    }
    for n in [8, 10] {
        let rp = profile_rp(n).map_err(s)?;
        out.push(profile_connected_sum(&rp, &rp).map_err(s)?);
    }
    out.push(product(2, 5)?);
    out.push(product(3, 5)?);
    Ok(out)
}

// 8. bound discipline and citations
fn discipline() -> Outcome {
    let mut results: Vec<ClassificationResult> = Vec::new();
    let mut skipped = 0;
    let profiles = corpus()?;
    for p in &profiles {
        match classify(p) {
            Ok(r) => results.push(r),
            Err(ClassifyError::Alternatives(alts)) => results.extend(alts.into_iter().map(|(_, r)| r)),
            Err(ClassifyError::Hypothesis(_)) => skipped += 1,
            Err(e) => return Err(format!("{}: {e}", p.name)),
        }
    }
    for r in &results {
        r.check_discipline().map_err(|e| format!("{}: {e}", r.name))?;
        ensure(!r.trace.is_empty(), || format!("{}: empty trace", r.name))?;
    }
    Ok(format!("{} profiles, {} results checked, {skipped} outside the hypotheses", profiles.len(), results.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("sphere consistency", spheres),
        ("lens-space table", lens_table),
        ("projective-space regression", projective),
        ("concordance on products", products),
        ("Steenrod engine vs closed form", steenrod),
        ("coefficient operations vs lift oracles", lift_oracles),
        ("exact-algebra properties", exact_algebra),
        ("bound discipline", discipline),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        let known = KNOWN_RED.contains(&id);
        match outcome {
            Ok(detail) => {
                println!("PASS {id} {name} ({secs:.2}s): {detail}");
                if known {
                    println!("     note: criterion {id} is listed as known red but passed");
                }
            }
            Err(detail) => {
                let tag = if known { " [known red]" } else { "" };
                println!("FAIL {id} {name}{tag} ({secs:.2}s): {detail}");
                unexpected += usize::from(!known);
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
