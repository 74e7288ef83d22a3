//! Concordance groups and inertia groups of smoothings in dimensions 7 to
//! 10, read off a [`CohomProfile`].
//!
//! Every claim carries a trace of the rules used (see [`RULES`]). Results
//! stated only as containments are kept as lower and upper bounds.

mod citations;
mod render;
mod theta;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_algebra::{hom_kernel, AbelianGroup, IntMatrix};
use crate::profile::{
    nine_case, order_u64, ten_case, CohomProfile, KnownSpace, NineCase, OperationEntry, ProfileError,
    Provenance, PsiShape, TenCase,
};

pub use citations::{rule, Citation, Rule, RULES};
pub use theta::{theta_constants, SubgroupDescriptor, ThetaConstants, ThetaGenerator};

pub const RESULT_FORMAT: &str = "result/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("dimension {0} is outside 7..=10")]
    DimensionOutOfRange(usize),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("the answer depends on unasserted hypotheses: {}", .0.iter().map(|(a, _)| a.as_str()).collect::<Vec<_>>().join(" | "))]
    Alternatives(Vec<(String, ClassificationResult)>),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// One summand of a concordance group and the cohomology it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub source: String,
    pub group: AbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Concordance {
    pub group: AbelianGroup,
    pub summands: Vec<Summand>,
}

impl Concordance {
    fn from_summands(summands: Vec<Summand>) -> Self {
        let group = AbelianGroup::sum_all(summands.iter().map(|s| &s.group));
        Concordance { group, summands }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaBounds {
    pub lower: SubgroupDescriptor,
    pub upper: SubgroupDescriptor,
    pub exact: bool,
}

impl InertiaBounds {
    pub fn exact(d: SubgroupDescriptor) -> Self {
        InertiaBounds {
            lower: d.clone(),
            upper: d,
            exact: true,
        }
    }
}

/// A value with the rules and caveats behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotated<T> {
    pub value: T,
    pub trace: Vec<Citation>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub format: String,
    pub name: String,
    pub n: usize,
    pub case: Option<String>,
    pub assertions: Vec<String>,
    pub concordance: Option<Concordance>,
    pub ic: Option<SubgroupDescriptor>,
    pub ih: Option<InertiaBounds>,
    /// The full inertia group, where it is pinned down.
    pub inertia: Option<SubgroupDescriptor>,
    pub trace: Vec<Citation>,
    pub caveats: Vec<String>,
}

#[derive(Default)]
struct Notes {
    trace: Vec<Citation>,
    caveats: Vec<String>,
}

impl Notes {
    fn cite(&mut self, id: &'static str, anchor: impl Into<String>) {
        debug_assert!(rule(id).is_some(), "unknown rule {id}");
        let c = Citation {
            id: id.to_string(),
            anchor: anchor.into(),
        };
        if !self.trace.contains(&c) {
            self.trace.push(c);
        }
    }

    fn caveat(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.caveats.contains(&text) {
            self.caveats.push(text);
        }
    }

    fn wrap<T>(self, value: T) -> Annotated<T> {
        Annotated {
            value,
            trace: self.trace,
            caveats: self.caveats,
        }
    }
}

fn group(p: &CohomProfile, d: usize, m: u64) -> Result<AbelianGroup, ClassifyError> {
    Ok(p.group_or_trivial(d, m)?)
}

fn summand(p: &CohomProfile, d: usize, m: u64) -> Result<Summand, ClassifyError> {
    Ok(Summand {
        source: format!("H^{d}(;Z/{m})"),
        group: group(p, d, m)?,
    })
}

fn int_matrix(o: &OperationEntry, cols: usize) -> IntMatrix {
    IntMatrix::from_fn(o.matrix.len(), cols, |i, j| o.matrix[i][j].into())
}

/// `ker` of an operation as a subgroup of its source.
fn op_kernel(p: &CohomProfile, name: &str, source_degree: usize) -> Result<AbelianGroup, ClassifyError> {
    let o = p.require_op(name, source_degree)?;
    let src = group(p, o.source.degree, o.source.coefficients)?;
    let tgt = group(p, o.target.degree, o.target.coefficients)?;
    let k = hom_kernel(&src, &tgt.generator_orders(), &int_matrix(o, src.num_generators()))
        .map_err(|e| ClassifyError::Internal(e.to_string()))?;
    Ok(k.structure)
}

fn sq2_d2_nonzero(p: &CohomProfile) -> Result<bool, ClassifyError> {
    Ok(!p.require_op("Sq2_d2", 6)?.is_zero())
}

/// `K̃` and `Ã` from the stored q-preimage orders.
fn split_k_a(p: &CohomProfile, notes: &mut Notes) -> Result<(AbelianGroup, AbelianGroup), ClassifyError> {
    let q = p.q_preimages.as_ref().ok_or_else(|| {
        ClassifyError::Hypothesis("no class w in H^7(;Z/2) with Sq^2 w != 0, so K̃ ⊕ A is undefined".into())
    })?;
    let a: u64 = if q.orders.contains(&4) { 4 } else { 2 };
    let h = group(p, 7, 4)?;
    let mut orders: Vec<u64> = h.generator_orders().iter().map(order_u64).collect();
    if let Some(i) = orders.iter().position(|&o| o == a) {
        orders.remove(i);
    } else if let Some(i) = orders.iter().position(|&o| o == 4) {
        orders[i] = 2;
        notes.caveat(format!("H^7(;Z/4) = {h} has no Z/{a} summand; K̃ taken as the quotient by a subgroup of order {a}"));
    } else {
        return Err(ClassifyError::Internal(format!("H^7(;Z/4) = {h} cannot contain A = Z/{a}")));
    }
    notes.cite(
        "splitting-assumption",
        format!("w = {:?}, preimage orders {:?}, A = Z/{a}", q.w, q.orders),
    );
    notes.caveat("the K̃ ⊕ A splitting of H^7(;Z/4) is read off q-preimage orders (assumed rule)");
    Ok((AbelianGroup::from_cyclic_orders(orders.into_iter().map(Into::into)), AbelianGroup::cyclic(2 * a)))
}

/// The ten-dimensional case, or the labelled alternatives.
fn ten(p: &CohomProfile) -> Result<TenCase, ClassifyError> {
    Ok(ten_case(p)?.0)
}

fn concordance_with(p: &CohomProfile, case10: Option<TenCase>, notes: &mut Notes) -> Result<Concordance, ClassifyError> {
    let n = p.n;
    let s = |d, m| summand(p, d, m);
    let summands = match n {
        7 => {
            notes.cite("concordance-7", p.name.clone());
            vec![s(7, 28)?]
        }
        8 => {
            notes.cite("concordance-8", p.name.clone());
            vec![s(7, 28)?, s(8, 2)?]
        }
        9 => {
            if !p.flags.orientable {
                return Err(ClassifyError::Hypothesis("the 9-dimensional formulas need an oriented manifold".into()));
            }
            if p.flags.spin {
                notes.cite("concordance-9-spin", p.name.clone());
                let h9 = group(p, 9, 2)?;
                vec![s(7, 28)?, s(8, 2)?, Summand { source: "H^9(;Z/2)^3".into(), group: h9.power(3) }]
            } else if sq2_d2_nonzero(p)? {
                notes.cite("concordance-9-sq2d2", p.name.clone());
                vec![s(7, 28)?, s(8, 2)?, s(9, 2)?]
            } else {
                notes.cite("concordance-9-split", p.name.clone());
                let (k, a) = split_k_a(p, notes)?;
                vec![s(7, 7)?, s(8, 2)?, s(9, 2)?, Summand { source: "K̃".into(), group: k }, Summand { source: "Ã".into(), group: a }]
            }
        }
        10 => {
            if !p.flags.h1_zero {
                return Err(ClassifyError::Hypothesis("the 10-dimensional formulas need H_1(M) = 0".into()));
            }
            let case = match case10 {
                Some(c) => c,
                None => ten(p)?,
            };
            match case {
                TenCase::NonSpin => {
                    notes.cite("concordance-10-nonspin", p.name.clone());
                    vec![
                        s(7, 7)?,
                        s(10, 3)?,
                        Summand { source: "ker(Sq^2: H^8(;Z/2) -> H^10(;Z/2))".into(), group: op_kernel(p, "Sq2", 8)? },
                        Summand { source: "ker(Sq^2 d_2: H^7(;Z/4) -> H^10(;Z/2))".into(), group: op_kernel(p, "Sq2_d2", 7)? },
                    ]
                }
                TenCase::SpinPhiNonzero => {
                    notes.cite("concordance-10-phi1", p.name.clone());
                    vec![s(7, 28)?, s(8, 2)?, s(9, 2)?, s(10, 3)?]
                }
                TenCase::SpinPhi0Psi0 => {
                    notes.cite("concordance-10-phi0-psi0", p.name.clone());
                    vec![s(7, 7)?, s(8, 2)?, s(9, 2)?, s(10, 3)?, s(10, 2)?, s(7, 4)?]
                }
                TenCase::SpinPhi0PsiNonzero(_) => {
                    notes.cite("concordance-10-phi0-psi1", p.name.clone());
                    let (k, a) = split_k_a(p, notes)?;
                    vec![s(7, 7)?, s(8, 2)?, s(9, 2)?, s(10, 3)?, Summand { source: "K̃".into(), group: k }, Summand { source: "Ã".into(), group: a }]
                }
            }
        }
        _ => return Err(ClassifyError::DimensionOutOfRange(n)),
    };
    Ok(Concordance::from_summands(summands))
}

/// The concordance group `C(M)` with the source of every summand.
pub fn classify_concordance(p: &CohomProfile) -> Result<Annotated<Concordance>, ClassifyError> {
    let mut notes = Notes::default();
    let c = concordance_with(p, None, &mut notes)?;
    Ok(notes.wrap(c))
}

fn ic_with(p: &CohomProfile, case10: Option<TenCase>, notes: &mut Notes) -> Result<SubgroupDescriptor, ClassifyError> {
    use ThetaGenerator::*;
    let n = p.n;
    match n {
        8 => {
            notes.cite("concordance-inertia-8", p.name.clone());
            Ok(SubgroupDescriptor::zero(8))
        }
        9 => {
            if !p.flags.orientable {
                return Err(ClassifyError::Hypothesis("I_c in dimension 9 needs an oriented manifold".into()));
            }
            notes.cite("concordance-inertia-9", p.name.clone());
            if p.flags.spin {
                Ok(SubgroupDescriptor::zero(9))
            } else if sq2_d2_nonzero(p)? {
                SubgroupDescriptor::new(9, [EtaEpsilon, Mu])
            } else {
                SubgroupDescriptor::new(9, [EtaEpsilon])
            }
        }
        10 => {
            if !p.flags.simply_connected_asserted {
                return Err(ClassifyError::Hypothesis("I_c in dimension 10 needs a simply connected manifold (assert pi1=trivial)".into()));
            }
            let case = match case10 {
                Some(c) => c,
                None => ten(p)?,
            };
            notes.cite("concordance-inertia-10", p.name.clone());
            match case {
                TenCase::SpinPhi0Psi0 | TenCase::SpinPhi0PsiNonzero(_) => Ok(SubgroupDescriptor::zero(10)),
                TenCase::SpinPhiNonzero | TenCase::NonSpin => SubgroupDescriptor::new(10, [EtaMu]),
            }
        }
        7 => Err(ClassifyError::Hypothesis("inertia groups are not determined in dimension 7".into())),
        _ => Err(ClassifyError::DimensionOutOfRange(n)),
    }
}

/// The concordance inertia group `I_c(M)`.
pub fn concordance_inertia(p: &CohomProfile) -> Result<Annotated<SubgroupDescriptor>, ClassifyError> {
    let mut notes = Notes::default();
    let d = ic_with(p, None, &mut notes)?;
    Ok(notes.wrap(d))
}

/// `I(L^9(m))`; `m = 1` is the sphere.
pub fn lens_inertia(m: u64) -> Result<SubgroupDescriptor, ClassifyError> {
    use ThetaGenerator::*;
    match m {
        0 => Err(ClassifyError::Hypothesis("lens parameter must be positive".into())),
        m if m % 2 == 1 => Ok(SubgroupDescriptor::zero(9)),
        m if m % 4 == 2 => SubgroupDescriptor::new(9, [EtaEpsilon]),
        _ => SubgroupDescriptor::new(9, [EtaEpsilon, BP]),
    }
}

fn ih_with(
    p: &CohomProfile,
    case10: Option<TenCase>,
    ic: Option<&SubgroupDescriptor>,
    notes: &mut Notes,
) -> Result<InertiaBounds, ClassifyError> {
    use ThetaGenerator::*;
    let n = p.n;
    let d = |g: &[ThetaGenerator]| SubgroupDescriptor::new(n, g.iter().copied());
    let bounds = match n {
        8 => {
            notes.cite("homotopy-inertia-8", p.name.clone());
            InertiaBounds::exact(SubgroupDescriptor::zero(8))
        }
        9 => {
            if !p.flags.orientable {
                return Err(ClassifyError::Hypothesis("I_h in dimension 9 needs an oriented manifold".into()));
            }
            if let Some(m) = p.known_space.and_then(|k| k.lens_parameter()) {
                // lens spaces: the general bounds plus the bP criterion pin I_h down
                notes.cite("kervaire-bp", format!("m = {m}"));
                InertiaBounds::exact(lens_inertia(m)?)
            } else if p.flags.spin {
                if p.flags.simply_connected_asserted {
                    notes.cite("homotopy-inertia-9-spin-simply-connected", p.name.clone());
                    InertiaBounds::exact(SubgroupDescriptor::zero(9))
                } else {
                    notes.cite("homotopy-inertia-9-spin", p.name.clone());
                    InertiaBounds {
                        lower: SubgroupDescriptor::zero(9),
                        upper: d(&[BP])?,
                        exact: false,
                    }
                }
            } else if sq2_d2_nonzero(p)? {
                notes.cite("homotopy-inertia-9-sq2d2", p.name.clone());
                InertiaBounds {
                    lower: d(&[EtaEpsilon, Mu])?,
                    upper: SubgroupDescriptor::whole(9)?,
                    exact: false,
                }
            } else {
                match nine_case(p) {
                    Ok((NineCase::NonSpinEta, _)) => {
                        notes.cite("homotopy-inertia-9-eta", p.name.clone());
                        InertiaBounds {
                            lower: d(&[EtaEpsilon, Mu])?,
                            upper: SubgroupDescriptor::whole(9)?,
                            exact: false,
                        }
                    }
                    Ok((NineCase::NonSpinIotaEta, _)) => {
                        notes.cite("homotopy-inertia-9-iota-eta", p.name.clone());
                        InertiaBounds {
                            lower: d(&[EtaEpsilon])?,
                            upper: d(&[EtaEpsilon, BP])?,
                            exact: false,
                        }
                    }
                    Ok((other, _)) => return Err(ClassifyError::Internal(format!("unexpected nine-case {other}"))),
                    Err(ProfileError::UnclassifiedNineManifold(w)) => {
                        notes.caveat(format!(
                            "carrier {w:?} lies in a Bockstein image; no case applies, I_h bounded by I_c and Θ_9"
                        ));
                        InertiaBounds {
                            lower: ic.cloned().unwrap_or_else(|| SubgroupDescriptor::zero(9)),
                            upper: SubgroupDescriptor::whole(9)?,
                            exact: false,
                        }
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        10 => {
            if p.known_space == Some(KnownSpace::Rp(10)) {
                notes.cite("rp10-inertia", p.name.clone());
                InertiaBounds::exact(SubgroupDescriptor::whole(10)?)
            } else if p.flags.simply_connected_asserted {
                let case = match case10 {
                    Some(c) => c,
                    None => ten(p)?,
                };
                notes.cite("homotopy-inertia-10", format!("{}: {case}", p.name));
                match case {
                    TenCase::SpinPhi0Psi0 | TenCase::SpinPhi0PsiNonzero(PsiShape::IotaEtaSq) => {
                        InertiaBounds::exact(SubgroupDescriptor::zero(10))
                    }
                    _ => InertiaBounds::exact(d(&[EtaMu])?),
                }
            } else if p.flags.orientable {
                notes.cite("oriented-3-local", p.name.clone());
                notes.cite("hypothesis-gap", p.name.clone());
                notes.caveat("π_1 not asserted trivial: only the 3-local part of I_h is determined");
                InertiaBounds {
                    lower: SubgroupDescriptor::zero(10),
                    upper: d(&[EtaMu])?,
                    exact: false,
                }
            } else {
                notes.cite("nonorientable-3-local", p.name.clone());
                InertiaBounds {
                    lower: d(&[Beta1])?,
                    upper: SubgroupDescriptor::whole(10)?,
                    exact: false,
                }
            }
        }
        7 => return Err(ClassifyError::Hypothesis("inertia groups are not determined in dimension 7".into())),
        _ => return Err(ClassifyError::DimensionOutOfRange(n)),
    };
    // I_c ⊆ I_h always
    let mut bounds = bounds;
    if let Some(ic) = ic {
        if !ic.is_subset(&bounds.lower) {
            if !ic.is_subset(&bounds.upper) {
                return Err(ClassifyError::Internal(format!("I_c = {ic} is not inside the I_h upper bound")));
            }
            notes.cite("definition-inclusion", format!("I_c = {ic}"));
            bounds.lower = SubgroupDescriptor::new(n, bounds.lower.generators.iter().chain(&ic.generators).copied())?;
            bounds.exact = bounds.lower == bounds.upper;
        }
    }
    Ok(bounds)
}

/// Bounds on the homotopy inertia group `I_h(M)`.
pub fn homotopy_inertia(p: &CohomProfile) -> Result<Annotated<InertiaBounds>, ClassifyError> {
    let mut notes = Notes::default();
    let ic = ic_with(p, None, &mut Notes::default()).ok();
    let b = ih_with(p, None, ic.as_ref(), &mut notes)?;
    Ok(notes.wrap(b))
}

fn full_inertia(p: &CohomProfile, notes: &mut Notes) -> Result<Option<SubgroupDescriptor>, ClassifyError> {
    Ok(match p.known_space {
        Some(KnownSpace::Rp(8)) => {
            notes.cite("rp8-inertia", p.name.clone());
            Some(SubgroupDescriptor::zero(8))
        }
        Some(KnownSpace::Rp(10)) => {
            notes.cite("rp10-inertia", p.name.clone());
            Some(SubgroupDescriptor::whole(10)?)
        }
        Some(k) => match k.lens_parameter() {
            Some(m) => {
                notes.cite("lens-inertia", format!("m = {m}"));
                Some(lens_inertia(m)?)
            }
            None => None,
        },
        None => None,
    })
}

fn assertions_of(p: &CohomProfile, notes: &mut Notes) -> Vec<String> {
    let mut out = Vec::new();
    if p.known_space.is_none() && p.flags.simply_connected_asserted {
        out.push("pi1=trivial".to_string());
    }
    for (label, s) in [("phi", p.phi), ("psi", p.psi)] {
        if s.provenance == Some(Provenance::UserAsserted) {
            out.push(format!("{label}={}", s.value));
        }
    }
    for a in &out {
        notes.cite("user-assertion", a.clone());
    }
    out
}

/// Turns a hypothesis failure into a caveat.
fn keep<T>(r: Result<T, ClassifyError>, notes: &mut Notes, missing: &mut Vec<String>) -> Result<Option<T>, ClassifyError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(ClassifyError::Hypothesis(h)) => {
            notes.caveat(h.clone());
            missing.push(h);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn classify_case(p: &CohomProfile, case10: Option<TenCase>, assumed: Option<&str>) -> Result<ClassificationResult, ClassifyError> {
    let mut notes = Notes::default();
    notes.cite("theta-sequence", format!("n = {}", p.n));
    let mut assertions = assertions_of(p, &mut notes);
    if let Some(a) = assumed {
        assertions.push(format!("assumed {a}"));
    }
    let case = match p.n {
        9 if p.flags.orientable => match nine_case(p) {
            Ok((c, _)) => Some(c.to_string()),
            Err(ProfileError::UnclassifiedNineManifold(_)) => Some("unclassified".into()),
            Err(e) => return Err(e.into()),
        },
        10 => case10.map(|c| c.to_string()),
        _ => None,
    };
    let mut missing = Vec::new();
    let concordance = keep(concordance_with(p, case10, &mut notes), &mut notes, &mut missing)?;
    let ic = keep(ic_with(p, case10, &mut notes), &mut notes, &mut missing)?;
    let ih = keep(ih_with(p, case10, ic.as_ref(), &mut notes), &mut notes, &mut missing)?;
    let inertia = full_inertia(p, &mut notes)?;
    if concordance.is_none() && ic.is_none() && ih.is_none() {
        return Err(ClassifyError::Hypothesis(missing.join("; ")));
    }
    let r = ClassificationResult {
        format: RESULT_FORMAT.into(),
        name: p.name.clone(),
        n: p.n,
        case,
        assertions,
        concordance,
        ic,
        ih,
        inertia,
        trace: notes.trace,
        caveats: notes.caveats,
    };
    r.check_discipline().map_err(ClassifyError::Internal)?;
    Ok(r)
}

/// Everything the classifier can say about a profile.
///
/// When the answer depends on an unasserted secondary operation, every
/// admissible outcome is returned as [`ClassifyError::Alternatives`].
pub fn classify(p: &CohomProfile) -> Result<ClassificationResult, ClassifyError> {
    p.validate()?;
    if p.n != 10 || !p.flags.spin || !p.flags.h1_zero {
        let case10 = if p.n == 10 { ten_case(p).ok().map(|c| c.0) } else { None };
        return classify_case(p, case10, None);
    }
    match ten_case(p) {
        Ok((c, _)) => classify_case(p, Some(c), None),
        Err(ProfileError::NeedsSecondaryOpAssertion(outcomes)) => {
            let mut alts = Vec::new();
            for (label, c) in outcomes {
                alts.push((label.clone(), classify_case(p, Some(c), Some(&label))?));
            }
            Err(ClassifyError::Alternatives(alts))
        }
        Err(e) => Err(e.into()),
    }
}

impl ClassificationResult {
    /// Bound discipline: `I_c ⊆ lower ⊆ upper`, exactness means equality,
    /// the full inertia group contains `I_h`, and every citation is known.
    pub fn check_discipline(&self) -> Result<(), String> {
        if let Some(ih) = &self.ih {
            if !ih.lower.is_subset(&ih.upper) {
                return Err(format!("I_h lower {} not inside upper {}", ih.lower, ih.upper));
            }
            if ih.exact && ih.lower != ih.upper {
                return Err("exact I_h with different bounds".into());
            }
            if let Some(ic) = &self.ic {
                if !ic.is_subset(&ih.lower) {
                    return Err(format!("I_c {} not inside I_h lower {}", ic, ih.lower));
                }
            }
            if let Some(i) = &self.inertia {
                if !ih.lower.is_subset(i) {
                    return Err(format!("I_h lower {} not inside I {}", ih.lower, i));
                }
            }
        }
        if let Some(c) = &self.concordance {
            if c.summands.iter().any(|s| s.source.is_empty()) {
                return Err("concordance summand without a source".into());
            }
        }
        if let Some(c) = self.trace.iter().find(|c| rule(&c.id).is_none()) {
            return Err(format!("citation {} is not in the rule table", c.id));
        }
        let cited = |ids: &[&str]| self.trace.iter().any(|c| ids.iter().any(|p| c.id.starts_with(p)));
        let claims: [(&str, bool, &[&str]); 4] = [
            ("C(M)", self.concordance.is_some(), &["concordance-7", "concordance-8", "concordance-9", "concordance-10"]),
            ("I_c(M)", self.ic.is_some(), &["concordance-inertia-"]),
            (
                "I_h(M)",
                self.ih.is_some(),
                &["homotopy-inertia-", "oriented-3-local", "nonorientable-3-local", "kervaire-bp", "rp10-inertia"],
            ),
            ("I(M)", self.inertia.is_some(), &["lens-inertia", "rp8-inertia", "rp10-inertia"]),
        ];
        for (what, present, ids) in claims {
            if present && !cited(ids) {
                return Err(format!("{what} is claimed without a citation"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ClassifyError> {
        let r: ClassificationResult =
            serde_json::from_str(text).map_err(|e| ClassifyError::Profile(ProfileError::Parse(e.to_string())))?;
        if r.format != RESULT_FORMAT {
            return Err(ClassifyError::Profile(ProfileError::Parse(format!("unknown format tag {:?}", r.format))));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests;
