//! The cohomology profile: every group, operation matrix and flag the
//! classifier reads, with extraction from complexes and closed-form
//! builders for spheres, real projective spaces and lens spaces.

mod builders;
mod cases;
mod extract;
pub(crate) mod f2;

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomops::OpsError;
use crate::complex_core::ComplexError;
use crate::exact_algebra::AbelianGroup;

pub use builders::{profile_connected_sum, profile_lens9, profile_rp, profile_sphere};
pub use cases::{
    beta_eval, image_of_bocksteins, nine_case, ten_case, BetaEval, CaseEvidence, NineCase, PsiShape, TenCase,
};
pub use extract::{extract_profile, Assertions};

pub const PROFILE_FORMAT: &str = "profile/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("dimension {0} is outside 7..=10")]
    DimensionOutOfRange(usize),
    #[error("dimensions differ: {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("a class w with Sq^2 w != 0 lies in the image of a Bockstein ({0:?}); no case applies")]
    UnclassifiedNineManifold(Vec<u8>),
    #[error("the answer depends on an unasserted secondary operation; outcomes: {}", fmt_alternatives(.0))]
    NeedsSecondaryOpAssertion(Vec<(String, TenCase)>),
    #[error("invalid profile: {0}")]
    Invalid(String),
    #[error("cannot parse profile: {0}")]
    Parse(String),
    #[error("{0} is too large to enumerate")]
    TooLarge(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ops(#[from] OpsError),
}

fn fmt_alternatives(v: &[(String, TenCase)]) -> String {
    v.iter().map(|(a, c)| format!("{a} => {c}")).collect::<Vec<_>>().join("; ")
}

/// A cohomology group `H^degree(;Z/coefficients)`, `coefficients = 0`
/// meaning the integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub degree: usize,
    pub coefficients: u64,
    pub group: AbelianGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub degree: usize,
    pub coefficients: u64,
}

impl Slot {
    pub fn new(degree: usize, coefficients: u64) -> Self {
        Slot { degree, coefficients }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficients {
            0 => write!(f, "H^{}(Z)", self.degree),
            m => write!(f, "H^{}(Z/{m})", self.degree),
        }
    }
}

/// Matrix of an operation; `matrix[i][j]` is the `i`-th target
/// coordinate of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationEntry {
    pub name: String,
    pub source: Slot,
    pub target: Slot,
    pub matrix: Vec<Vec<u64>>,
}

impl OperationEntry {
    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&x| x == 0)
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        self.matrix.iter().map(|r| r[j]).collect()
    }

    /// Columns reduced mod 2, as vectors.
    pub fn columns_mod2(&self, cols: usize) -> Vec<Vec<u8>> {
        (0..cols).map(|j| self.column(j).iter().map(|x| (x % 2) as u8).collect()).collect()
    }
}

/// `β_r` on the subgroup of `H^k(;Z/2)` where it is defined (the image of
/// `H^k(;Z/2^r)`): a basis of that subgroup and a representative value
/// for each basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BocksteinEntry {
    pub source_degree: usize,
    pub r: u32,
    pub domain: Vec<Vec<u8>>,
    pub values: Vec<Vec<u8>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpValue {
    Zero,
    Nonzero,
    Unknown,
}

impl fmt::Display for OpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpValue::Zero => "zero",
            OpValue::Nonzero => "nonzero",
            OpValue::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ForcedByVanishing,
    UserAsserted,
    KnownSpace,
}

/// Status of one of the secondary operations `Φ, ψ: H^6(;Z/4) → H^10(;Z/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondaryOpStatus {
    pub value: OpValue,
    pub provenance: Option<Provenance>,
}

impl SecondaryOpStatus {
    pub const FORCED_ZERO: SecondaryOpStatus = SecondaryOpStatus {
        value: OpValue::Zero,
        provenance: Some(Provenance::ForcedByVanishing),
    };
    pub const UNKNOWN: SecondaryOpStatus = SecondaryOpStatus {
        value: OpValue::Unknown,
        provenance: None,
    };

    pub fn asserted(value: OpValue) -> Self {
        SecondaryOpStatus {
            value,
            provenance: Some(Provenance::UserAsserted),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub orientable: bool,
    pub h1_zero: bool,
    pub simply_connected_asserted: bool,
    pub spin: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "snake_case")]
pub enum KnownSpace {
    Sphere(usize),
    Rp(usize),
    Lens9(u64),
}

impl KnownSpace {
    /// `L^9(m)`, counting `RP^9` as `m = 2`.
    pub fn lens_parameter(&self) -> Option<u64> {
        match *self {
            KnownSpace::Lens9(m) => Some(m),
            KnownSpace::Rp(9) => Some(2),
            _ => None,
        }
    }
}

/// Orders of all `x ∈ H^7(;Z/4)` with `q(x) = w` for the first `w` (in
/// counting order) with `Sq^2 w ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPreimages {
    pub w: Vec<u8>,
    pub orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomProfile {
    pub format: String,
    pub name: String,
    pub n: usize,
    pub known_space: Option<KnownSpace>,
    pub flags: Flags,
    pub r_max: u32,
    pub groups: Vec<GroupEntry>,
    pub operations: Vec<OperationEntry>,
    pub bocksteins: Vec<BocksteinEntry>,
    pub phi: SecondaryOpStatus,
    pub psi: SecondaryOpStatus,
    pub q_preimages: Option<QPreimages>,
    pub notes: Vec<String>,
}

/// The groups a profile of dimension `n` carries.
pub fn profile_slots(n: usize) -> Vec<Slot> {
    let mut out = Vec::new();
    for k in 6..=n {
        for m in [0, 2, 4] {
            out.push(Slot::new(k, m));
        }
    }
    out.push(Slot::new(n - 2, 2));
    out.push(Slot::new(7, 7));
    out.push(Slot::new(7, 28));
    if n == 10 {
        out.push(Slot::new(10, 3));
    }
    out.sort();
    out.dedup();
    out
}

/// Operations a profile of dimension `n` carries, in canonical order.
pub fn profile_operations(n: usize) -> Vec<(String, Slot, Slot)> {
    let mut out: Vec<(String, Slot, Slot)> = Vec::new();
    let mut push = |name: &str, s: Slot, t: Slot| {
        if t.degree <= n && !out.iter().any(|(a, b, _)| a == name && *b == s) {
            out.push((name.to_string(), s, t));
        }
    };
    for k in [6, 7, n - 1] {
        push("Sq1", Slot::new(k, 2), Slot::new(k + 1, 2));
    }
    for k in [7, 8, n - 2] {
        push("Sq2", Slot::new(k, 2), Slot::new(k + 2, 2));
    }
    for k in [6, 7] {
        push("d2", Slot::new(k, 4), Slot::new(k + 1, 2));
    }
    for k in [6, 7] {
        push("Sq2_d2", Slot::new(k, 4), Slot::new(k + 3, 2));
    }
    push("q_red4to2", Slot::new(7, 4), Slot::new(7, 2));
    out
}

/// Largest `r` worth storing: the 2-adic valuation of the exponent of the
/// integral torsion in degrees 7 and 8, at least 1 and at most 8.
pub fn r_max_for(torsion: &[&AbelianGroup]) -> u32 {
    let mut v = 1;
    for g in torsion {
        for t in &g.torsion {
            let tz = t.trailing_zeros().unwrap_or(0) as u32;
            v = v.max(tz);
        }
    }
    v.min(8)
}

pub(crate) fn order_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("group order fits in u64")
}

impl CohomProfile {
    pub fn group(&self, degree: usize, coefficients: u64) -> Option<&AbelianGroup> {
        self.groups
            .iter()
            .find(|g| g.degree == degree && g.coefficients == coefficients)
            .map(|g| &g.group)
    }

    /// Like [`CohomProfile::group`] but a degree above `n` is trivial.
    pub fn group_or_trivial(&self, degree: usize, coefficients: u64) -> Result<AbelianGroup, ProfileError> {
        if degree > self.n {
            return Ok(AbelianGroup::trivial());
        }
        self.group(degree, coefficients)
            .cloned()
            .ok_or_else(|| ProfileError::Invalid(format!("missing group {}", Slot::new(degree, coefficients))))
    }

    /// Number of cyclic generators of a stored group (0 above `n`).
    pub fn generators(&self, degree: usize, coefficients: u64) -> Result<usize, ProfileError> {
        Ok(self.group_or_trivial(degree, coefficients)?.num_generators())
    }

    pub fn op(&self, name: &str, source_degree: usize) -> Option<&OperationEntry> {
        self.operations
            .iter()
            .find(|o| o.name == name && o.source.degree == source_degree)
    }

    pub fn require_op(&self, name: &str, source_degree: usize) -> Result<&OperationEntry, ProfileError> {
        self.op(name, source_degree)
            .ok_or_else(|| ProfileError::Invalid(format!("missing operation {name} on degree {source_degree}")))
    }

    pub fn bockstein(&self, source_degree: usize, r: u32) -> Option<&BocksteinEntry> {
        self.bocksteins
            .iter()
            .find(|b| b.source_degree == source_degree && b.r == r)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("profile serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ProfileError> {
        let p: CohomProfile = serde_json::from_str(text).map_err(|e| ProfileError::Parse(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    /// Checks the structural invariants of a profile.
    pub fn validate(&self) -> Result<(), ProfileError> {
        let bad = |m: String| Err(ProfileError::Invalid(m));
        if self.format != PROFILE_FORMAT {
            return bad(format!("unknown format tag {:?}", self.format));
        }
        if !(7..=10).contains(&self.n) {
            return Err(ProfileError::DimensionOutOfRange(self.n));
        }
        for slot in profile_slots(self.n) {
            if self.group(slot.degree, slot.coefficients).is_none() {
                return bad(format!("missing group {slot}"));
            }
        }
        for o in &self.operations {
            let src = self.generators(o.source.degree, o.source.coefficients)?;
            let tgt = self.group_or_trivial(o.target.degree, o.target.coefficients)?;
            let orders = tgt.generator_orders();
            if o.matrix.len() != orders.len() || o.matrix.iter().any(|r| r.len() != src) {
                return bad(format!(
                    "{} on degree {} has shape {}x{}, groups need {}x{}",
                    o.name,
                    o.source.degree,
                    o.matrix.len(),
                    o.matrix.first().map_or(0, Vec::len),
                    orders.len(),
                    src
                ));
            }
            for (row, ord) in o.matrix.iter().zip(&orders) {
                if row.iter().any(|&x| BigUint::from(x) >= *ord) {
                    return bad(format!("{} has an unreduced entry", o.name));
                }
            }
        }
        for b in &self.bocksteins {
            let src = self.generators(b.source_degree, 2)?;
            let tgt = self.generators(b.source_degree + 1, 2)?;
            if b.domain.len() != b.values.len()
                || b.domain.iter().any(|v| v.len() != src)
                || b.values.iter().any(|v| v.len() != tgt)
            {
                return bad(format!("beta_{} on degree {} has inconsistent shape", b.r, b.source_degree));
            }
        }
        if self.flags.spin {
            if !self.flags.orientable {
                return bad("spin profile marked non-orientable".into());
            }
            if let Some(o) = self.op("Sq2", self.n - 2) {
                if !o.is_zero() {
                    return bad("spin profile with nonzero Sq^2 into the top degree".into());
                }
            }
        }
        for (label, s) in [("phi", self.phi), ("psi", self.psi)] {
            if s.provenance == Some(Provenance::ForcedByVanishing) {
                let trivial = self.group_or_trivial(6, 4)?.is_trivial() || self.group_or_trivial(10, 2)?.is_trivial();
                if !trivial || s.value != OpValue::Zero {
                    return bad(format!("{label} marked forced but source and target are nontrivial"));
                }
            }
            if s.value == OpValue::Unknown && s.provenance.is_some() {
                return bad(format!("{label} is unknown but carries a provenance"));
            }
        }
        self.check_q_sequence()?;
        Ok(())
    }

    /// `0 → coker(Sq^1: H^6 → H^7) → H^7(;Z/4) → ker(Sq^1: H^7 → H^8) → 0`
    /// with `q` the right-hand map; checked by orders.
    fn check_q_sequence(&self) -> Result<(), ProfileError> {
        let (Some(q), Some(sq1_6), Some(h74)) = (self.op("q_red4to2", 7), self.op("Sq1", 6), self.group(7, 4)) else {
            return Ok(());
        };
        let c = self.generators(7, 2)?;
        let b6 = self.generators(6, 2)?;
        let rank_q = f2::rank(&transpose_mod2(&q.matrix, h74.num_generators()));
        let rank_sq1_6 = f2::rank(&sq1_6.columns_mod2(b6));
        let ker_sq1_7 = match self.op("Sq1", 7) {
            Some(o) => c - f2::rank(&o.columns_mod2(c)),
            None => c,
        };
        let h_order = h74.order().map(|o| order_u64(&o)).unwrap_or(0);
        let ker_q_log = (h_order.trailing_zeros() as usize).saturating_sub(rank_q);
        if rank_q != ker_sq1_7 || ker_q_log != c - rank_sq1_6 {
            return Err(ProfileError::Invalid(format!(
                "mod-4 reduction does not fit the Sq^1 exact sequence (rank q = {rank_q}, dim ker Sq^1 = {ker_sq1_7})"
            )));
        }
        Ok(())
    }
}

/// Columns of `matrix` (with `cols` columns) reduced mod 2.
pub(crate) fn transpose_mod2(matrix: &[Vec<u64>], cols: usize) -> Vec<Vec<u8>> {
    (0..cols)
        .map(|j| matrix.iter().map(|r| (r[j] % 2) as u8).collect())
        .collect()
}
