use num_bigint::BigInt;
use num_traits::Zero;

use crate::cohomops::{Op, Space};
use crate::complex_core::{projective_space, rp2_six_vertex, ChainComplex};
use crate::exact_algebra::{smith_form, IntMatrix};
use crate::oracle::{brute_bockstein, brute_cohomology, brute_d2_vanishes, naive_invariant_factors, BruteBockstein};

pub(super) struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, r: Result<(bool, String), String>) -> Check {
    let (pass, detail) = r.unwrap_or_else(|e| (false, e));
    Check {
        name: name.into(),
        pass,
        detail,
    }
}

fn as_u64(c: &[i64]) -> Vec<u64> {
    c.iter().map(|&x| x as u64).collect()
}

/// Engine group orders against exhaustive cochain enumeration.
fn cohomology_orders(c: &ChainComplex, moduli: &[u64], label: &str) -> Result<(bool, String), String> {
    let s = Space::synthetic(c.clone()).map_err(|e| e.to_string())?;
    let mut ok = true;
    let mut seen = Vec::new();
    for k in 1..=c.top_degree() {
        for &m in moduli {
            let ours = s.cohomology(k, m).map_err(|e| e.to_string())?.group.order_u64();
            let brute = brute_cohomology(c, k, m).map_err(|e| e.to_string())?.order;
            ok &= ours == Some(brute);
            seen.push(format!("{k}/{m}:{brute}"));
        }
    }
    Ok((ok, format!("{label} {}", seen.join(" "))))
}

fn translate(v: Option<bool>) -> BruteBockstein {
    match v {
        None => BruteBockstein::Undefined,
        Some(false) => BruteBockstein::Zero,
        Some(true) => BruteBockstein::Nonzero,
    }
}

fn sq1_is_beta1(s: &Space, c: &ChainComplex, k: usize) -> Result<(bool, String), String> {
    let g = s.cohomology(k, 2).map_err(|e| e.to_string())?;
    let m = s.operation_matrix(Op::Sq(1), k).map_err(|e| e.to_string())?;
    let mut ok = true;
    for (j, b) in g.basis.iter().enumerate() {
        let nonzero = (0..m.matrix.rows()).any(|i| !(m.matrix.get(i, j) % BigInt::from(2)).is_zero());
        let brute = brute_bockstein(c, 1, k, &as_u64(&b.cochain)).map_err(|e| e.to_string())?;
        ok &= brute == if nonzero { BruteBockstein::Nonzero } else { BruteBockstein::Zero };
    }
    Ok((ok, format!("{} classes in degree {k}", g.rank())))
}

/// On `RP^3`, too large for the lift oracle: `Sq^1` against the engine's
/// `β_1` and the binomial rule `Sq^1 x^j = j x^{j+1}`.
fn rp3_sq1(s: &Space) -> Result<(bool, String), String> {
    let mut ok = true;
    for k in 1..=2 {
        let g = s.cohomology(k, 2).map_err(|e| e.to_string())?;
        let m = s.operation_matrix(Op::Sq(1), k).map_err(|e| e.to_string())?;
        let nonzero = !(m.matrix.get(0, 0) % BigInt::from(2)).is_zero();
        let beta = s.bockstein_nonzero(1, &g.basis[0]).map_err(|e| e.to_string())?;
        ok &= g.rank() == 1 && nonzero == (k % 2 == 1) && beta == Some(nonzero);
    }
    Ok((ok, "degrees 1 and 2".into()))
}

fn moore_bocksteins(r: u32) -> Result<(bool, String), String> {
    let c = ChainComplex::moore(1 << r, 7).map_err(|e| e.to_string())?;
    let s = Space::synthetic(c.clone()).map_err(|e| e.to_string())?;
    let g = s.cohomology(7, 2).map_err(|e| e.to_string())?;
    let x = &g.basis[0];
    let mut ok = true;
    let mut pattern = String::new();
    for t in 1..=r + 1 {
        let ours = s.bockstein_nonzero(t, x).map_err(|e| e.to_string())?;
        let brute = brute_bockstein(&c, t, 7, &as_u64(&x.cochain)).map_err(|e| e.to_string())?;
        ok &= translate(ours) == brute && (ours == Some(true)) == (t == r);
        pattern.push(if ours == Some(true) { '1' } else { '0' });
    }
    Ok((ok, format!("beta_1..beta_{} nonzero pattern {pattern}", r + 1)))
}

fn moore_d2() -> Result<(bool, String), String> {
    let c = ChainComplex::moore(4, 7).map_err(|e| e.to_string())?;
    let s = Space::synthetic(c.clone()).map_err(|e| e.to_string())?;
    let g = s.cohomology(7, 4).map_err(|e| e.to_string())?;
    let x = &g.basis[0];
    let d = s.d2(x).map_err(|e| e.to_string())?;
    let t = s.cohomology(8, 2).map_err(|e| e.to_string())?;
    let nonzero = s.coordinates(&t, &d).map_err(|e| e.to_string())?.iter().any(|v| !v.is_zero());
    let vanishes = brute_d2_vanishes(&c, 7, &as_u64(&x.cochain)).map_err(|e| e.to_string())?;
    Ok((nonzero && !vanishes, format!("d2(gen) {}", if nonzero { "nonzero" } else { "zero" })))
}

fn smith_vs_divisors() -> Result<(bool, String), String> {
    let samples: [&[&[i64]]; 5] = [
        &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]],
        &[&[1, 2], &[3, 4], &[5, 6]],
        &[&[0, 0], &[0, 0]],
        &[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]],
        &[&[2, 3, 5, 7], &[11, 13, 17, 19]],
    ];
    let mut ok = true;
    for rows in samples {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        let a = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        let ours: Vec<BigInt> = smith_form(&a).diagonal.iter().filter(|d| !d.is_zero()).cloned().collect();
        let naive: Vec<BigInt> = naive_invariant_factors(&a).into_iter().filter(|d| !d.is_zero()).collect();
        ok &= ours == naive;
    }
    Ok((ok, format!("{} matrices", samples.len())))
}

pub(super) fn run_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let rp2 = rp2_six_vertex();
    let rp2c = ChainComplex::from_simplicial(&rp2);
    out.push(check("cohomology orders on RP^2", cohomology_orders(&rp2c, &[2], "deg/mod:order")));
    let moore6 = ChainComplex::moore(6, 2).map_err(|e| e.to_string());
    out.push(check("cohomology orders on moore(6, 2)", moore6.and_then(|c| cohomology_orders(&c, &[2, 3, 4], "deg/mod:order"))));
    match Space::simplicial(rp2) {
        Ok(s) => out.push(check("Sq^1 = beta_1 on RP^2", sq1_is_beta1(&s, &rp2c, 1))),
        Err(e) => out.push(check("Sq^1 = beta_1 on RP^2", Err(e.to_string()))),
    }
    let rp3 = projective_space(3);
    match Space::simplicial(rp3) {
        Ok(s) => out.push(check("Sq^1 = beta_1 on RP^3", rp3_sq1(&s))),
        Err(e) => out.push(check("Sq^1 = beta_1 on RP^3", Err(e.to_string()))),
    }
    for r in 1..=3 {
        out.push(check(format!("higher Bocksteins on moore({}, 7)", 1 << r), moore_bocksteins(r)));
    }
    out.push(check("d2 on moore(4, 7)", moore_d2()));
    out.push(check("Smith form vs determinantal divisors", smith_vs_divisors()));
    out
}
