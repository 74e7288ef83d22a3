use std::fmt;

use serde::{Deserialize, Serialize};

use super::{f2, CohomProfile, OpValue, ProfileError};

/// Value of `β_r` on a mod-2 class, read from the stored Bockstein data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaEval {
    /// The class does not lift to `Z/2^r`.
    Undefined,
    /// Defined and zero on the `E_r` page.
    Zero,
    /// Defined and nonzero on the `E_r` page; carries a representative.
    Nonzero(Vec<u8>),
}

/// `β_r(w)` for `w ∈ H^k(;Z/2)`, modulo the images of `β_s`, `s < r`.
pub fn beta_eval(p: &CohomProfile, k: usize, r: u32, w: &[u8]) -> Result<BetaEval, ProfileError> {
    let entry = p
        .bockstein(k, r)
        .ok_or_else(|| ProfileError::Invalid(format!("no beta_{r} on degree {k}")))?;
    let Some(coeffs) = f2::solve(&entry.domain, w) else {
        return Ok(BetaEval::Undefined);
    };
    let width = p.generators(k + 1, 2)?;
    let mut value = vec![0u8; width];
    for (v, &c) in entry.values.iter().zip(&coeffs) {
        if c == 1 {
            for (a, b) in value.iter_mut().zip(v) {
                *a ^= b;
            }
        }
    }
    let lower: Vec<Vec<u8>> = p
        .bocksteins
        .iter()
        .filter(|b| b.source_degree == k && b.r < r)
        .flat_map(|b| b.values.clone())
        .collect();
    Ok(if f2::in_span(&lower, &value) {
        BetaEval::Zero
    } else {
        BetaEval::Nonzero(value)
    })
}

/// Every stored Bockstein value out of degree `k`; their span is the union
/// of the images of all `β_r` in `H^{k+1}(;Z/2)`.
pub fn image_of_bocksteins(p: &CohomProfile, k: usize) -> Vec<Vec<u8>> {
    p.bocksteins
        .iter()
        .filter(|b| b.source_degree == k)
        .flat_map(|b| b.values.iter().filter(|v| !f2::is_zero(v)).cloned())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NineCase {
    Spin,
    /// Every class with `Sq^2 w ≠ 0` is a free carrier.
    NonSpinEta,
    /// Some class with `Sq^2 w ≠ 0` has a nonzero higher Bockstein.
    NonSpinIotaEta,
    NonSpinSqd2Nonzero,
}

impl fmt::Display for NineCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NineCase::Spin => "spin",
            NineCase::NonSpinEta => "non-spin, Sq^2 d_2 = 0, free carrier (eta)",
            NineCase::NonSpinIotaEta => "non-spin, Sq^2 d_2 = 0, torsion carrier (iota eta)",
            NineCase::NonSpinSqd2Nonzero => "non-spin, Sq^2 d_2 != 0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiShape {
    EtaSq,
    IotaEtaSq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case", content = "shape", rename_all = "snake_case")]
pub enum TenCase {
    NonSpin,
    SpinPhiNonzero,
    SpinPhi0Psi0,
    SpinPhi0PsiNonzero(PsiShape),
}

impl fmt::Display for TenCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TenCase::NonSpin => f.write_str("non-spin"),
            TenCase::SpinPhiNonzero => f.write_str("spin, Phi != 0"),
            TenCase::SpinPhi0Psi0 => f.write_str("spin, Phi = 0, psi = 0"),
            TenCase::SpinPhi0PsiNonzero(PsiShape::EtaSq) => f.write_str("spin, Phi = 0, psi != 0, free carrier (eta^2)"),
            TenCase::SpinPhi0PsiNonzero(PsiShape::IotaEtaSq) => {
                f.write_str("spin, Phi = 0, psi != 0, torsion carrier (iota eta^2)")
            }
        }
    }
}

/// The classes that decided a case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEvidence {
    pub spin: bool,
    /// A generator of `H^6(;Z/4)` with `Sq^2 d_2` nonzero.
    pub sq2_d2_witness: Option<usize>,
    /// Number of `w ∈ H^7(;Z/2)` with `Sq^2 w ≠ 0`.
    pub carriers: usize,
    /// A carrier `w` and `r` with `β_r(w) ≠ 0`.
    pub beta_witness: Option<(Vec<u8>, u32)>,
    /// A carrier outside every Bockstein image with all `β_r` zero.
    pub free_witness: Option<Vec<u8>>,
}

impl CaseEvidence {
    /// Re-checks every witness against the stored matrices.
    pub fn recheck(&self, p: &CohomProfile) -> Result<bool, ProfileError> {
        if self.spin != p.flags.spin {
            return Ok(false);
        }
        if let Some(j) = self.sq2_d2_witness {
            let o = p.require_op("Sq2_d2", 6)?;
            if o.column(j).iter().all(|&x| x % 2 == 0) {
                return Ok(false);
            }
        }
        if self.spin || p.op("Sq2", 7).is_none() {
            return Ok(true);
        }
        if carriers(p)?.len() != self.carriers {
            return Ok(false);
        }
        if let Some((w, r)) = &self.beta_witness {
            if !is_carrier(p, w)? || !matches!(beta_eval(p, 7, *r, w)?, BetaEval::Nonzero(_)) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.free_witness {
            if !is_carrier(p, w)? || in_image(p, w) || first_nonzero_beta(p, w)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn is_carrier(p: &CohomProfile, w: &[u8]) -> Result<bool, ProfileError> {
    let sq2 = p.require_op("Sq2", 7)?;
    Ok(!f2::is_zero(&f2::apply(&sq2.matrix, w)))
}

/// `W = {w ∈ H^7(;Z/2) : Sq^2 w ≠ 0}` in counting order.
fn carriers(p: &CohomProfile) -> Result<Vec<Vec<u8>>, ProfileError> {
    let c = p.generators(7, 2)?;
    if c > 20 {
        return Err(ProfileError::TooLarge("H^7(;Z/2)".into()));
    }
    let sq2 = p.require_op("Sq2", 7)?;
    Ok(f2::all_vectors(c)
        .filter(|w| !f2::is_zero(&f2::apply(&sq2.matrix, w)))
        .collect())
}

fn in_image(p: &CohomProfile, w: &[u8]) -> bool {
    f2::in_span(&image_of_bocksteins(p, 6), w)
}

fn first_nonzero_beta(p: &CohomProfile, w: &[u8]) -> Result<Option<u32>, ProfileError> {
    for r in 1..=p.r_max {
        if matches!(beta_eval(p, 7, r, w)?, BetaEval::Nonzero(_)) {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Carrier data shared by the nine- and ten-dimensional detectors.
fn scan_carriers(p: &CohomProfile, evidence: &mut CaseEvidence) -> Result<Vec<Vec<u8>>, ProfileError> {
    let ws = carriers(p)?;
    evidence.carriers = ws.len();
    let mut in_im = Vec::new();
    for w in &ws {
        if in_image(p, w) {
            in_im.push(w.clone());
            continue;
        }
        match first_nonzero_beta(p, w)? {
            Some(r) if evidence.beta_witness.is_none() => evidence.beta_witness = Some((w.clone(), r)),
            Some(_) => {}
            None if evidence.free_witness.is_none() => evidence.free_witness = Some(w.clone()),
            None => {}
        }
    }
    Ok(in_im)
}

/// Case split for a closed 9-manifold.
pub fn nine_case(p: &CohomProfile) -> Result<(NineCase, CaseEvidence), ProfileError> {
    if p.n != 9 {
        return Err(ProfileError::DimensionMismatch(p.n, 9));
    }
    let mut evidence = CaseEvidence {
        spin: p.flags.spin,
        ..CaseEvidence::default()
    };
    if p.flags.spin {
        return Ok((NineCase::Spin, evidence));
    }
    let sq2d2 = p.require_op("Sq2_d2", 6)?;
    let cols = p.generators(6, 4)?;
    if let Some(j) = (0..cols).find(|&j| sq2d2.column(j).iter().any(|&x| x % 2 == 1)) {
        evidence.sq2_d2_witness = Some(j);
        return Ok((NineCase::NonSpinSqd2Nonzero, evidence));
    }
    let in_im = scan_carriers(p, &mut evidence)?;
    if let Some(w) = in_im.into_iter().next() {
        return Err(ProfileError::UnclassifiedNineManifold(w));
    }
    if evidence.carriers == 0 {
        return Err(ProfileError::Hypothesis(
            "non-spin 9-profile without a class w in degree 7 with Sq^2 w != 0 (non-orientable input?)".into(),
        ));
    }
    if evidence.beta_witness.is_some() {
        Ok((NineCase::NonSpinIotaEta, evidence))
    } else {
        Ok((NineCase::NonSpinEta, evidence))
    }
}

/// Carrier shapes compatible with `ψ ≠ 0`: a free carrier gives
/// `EtaSq`, a carrier with a nonzero higher Bockstein `IotaEtaSq`.
fn psi_shapes(p: &CohomProfile, evidence: &mut CaseEvidence) -> Result<Vec<PsiShape>, ProfileError> {
    scan_carriers(p, evidence)?;
    let mut shapes = Vec::new();
    if evidence.free_witness.is_some() {
        shapes.push(PsiShape::EtaSq);
    }
    if evidence.beta_witness.is_some() {
        shapes.push(PsiShape::IotaEtaSq);
    }
    if shapes.is_empty() {
        return Err(ProfileError::Hypothesis(
            "psi != 0 but no class w in degree 7 outside the Bockstein images has Sq^2 w != 0".into(),
        ));
    }
    Ok(shapes)
}

/// Case split for a closed 10-manifold with `H_1 = 0`.
pub fn ten_case(p: &CohomProfile) -> Result<(TenCase, CaseEvidence), ProfileError> {
    if p.n != 10 {
        return Err(ProfileError::DimensionMismatch(p.n, 10));
    }
    let mut evidence = CaseEvidence {
        spin: p.flags.spin,
        ..CaseEvidence::default()
    };
    if !p.flags.spin {
        return Ok((TenCase::NonSpin, evidence));
    }
    if !p.flags.h1_zero {
        return Err(ProfileError::Hypothesis("H_1(M) = 0 is required for the spin cases in dimension 10".into()));
    }
    let options = |s: OpValue| match s {
        OpValue::Unknown => vec![OpValue::Zero, OpValue::Nonzero],
        v => vec![v],
    };
    let mut outcomes: Vec<(String, TenCase)> = Vec::new();
    for phi in options(p.phi.value) {
        if phi == OpValue::Nonzero {
            outcomes.push(("phi=nonzero".into(), TenCase::SpinPhiNonzero));
            continue;
        }
        for psi in options(p.psi.value) {
            if psi == OpValue::Zero {
                outcomes.push(("phi=zero psi=zero".into(), TenCase::SpinPhi0Psi0));
                continue;
            }
            let shapes = psi_shapes(p, &mut evidence)?;
            let single = shapes.len() == 1;
            for s in shapes {
                let label = match (single, s) {
                    (true, _) => "phi=zero psi=nonzero".to_string(),
                    (false, PsiShape::EtaSq) => "phi=zero psi=nonzero carrier=free".to_string(),
                    (false, PsiShape::IotaEtaSq) => "phi=zero psi=nonzero carrier=torsion".to_string(),
                };
                outcomes.push((label, TenCase::SpinPhi0PsiNonzero(s)));
            }
        }
    }
    if outcomes.len() == 1 {
        let (_, case) = outcomes.remove(0);
        return Ok((case, evidence));
    }
    Err(ProfileError::NeedsSecondaryOpAssertion(outcomes))
}
