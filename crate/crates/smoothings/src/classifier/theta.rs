use std::fmt;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::exact_algebra::AbelianGroup;

/// Named generators of `Θ_n` for `8 ≤ n ≤ 10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaGenerator {
    Epsilon,
    EtaEpsilon,
    Mu,
    EtaMu,
    Beta1,
    #[serde(rename = "bP")]
    BP,
}

impl ThetaGenerator {
    pub fn valid_in(&self, n: usize) -> bool {
        use ThetaGenerator::*;
        matches!(
            (n, self),
            (8, Epsilon) | (9, EtaEpsilon) | (9, Mu) | (9, BP) | (10, EtaMu) | (10, Beta1)
        )
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            ThetaGenerator::Epsilon => "ε",
            ThetaGenerator::EtaEpsilon => "η∘ε",
            ThetaGenerator::Mu => "μ",
            ThetaGenerator::EtaMu => "η∘μ",
            ThetaGenerator::Beta1 => "β_1",
            ThetaGenerator::BP => "bP",
        }
    }

    fn order(&self, n: usize) -> u64 {
        match self {
            ThetaGenerator::Beta1 => 3,
            ThetaGenerator::BP => bp_order(n),
            _ => 2,
        }
    }
}

fn bp_order(n: usize) -> u64 {
    match n {
        7 => 28,
        9 => 2,
        _ => 1,
    }
}

/// `Θ_n`, `bP_{n+1}` and the generators of `Θ_n / bP_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaConstants {
    pub n: usize,
    pub theta: AbelianGroup,
    pub bp: AbelianGroup,
    pub quotient_generators: Vec<ThetaGenerator>,
}

pub fn theta_constants(n: usize) -> Result<ThetaConstants, ClassifyError> {
    use ThetaGenerator::*;
    let (theta, gens) = match n {
        7 => (AbelianGroup::cyclic(28), vec![]),
        8 => (AbelianGroup::cyclic(2), vec![Epsilon]),
        9 => (AbelianGroup::elementary(2, 3), vec![EtaEpsilon, Mu]),
        10 => (AbelianGroup::cyclic(6), vec![EtaMu, Beta1]),
        _ => return Err(ClassifyError::DimensionOutOfRange(n)),
    };
    Ok(ThetaConstants {
        n,
        theta,
        bp: AbelianGroup::cyclic(bp_order(n)),
        quotient_generators: gens,
    })
}

/// A subgroup of `Θ_n` spanned by named generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDescriptor {
    pub n: usize,
    pub generators: Vec<ThetaGenerator>,
    pub structure: AbelianGroup,
}

impl SubgroupDescriptor {
    pub fn new(n: usize, generators: impl IntoIterator<Item = ThetaGenerator>) -> Result<Self, ClassifyError> {
        let mut generators: Vec<ThetaGenerator> = generators.into_iter().collect();
        generators.sort();
        generators.dedup();
        if let Some(g) = generators.iter().find(|g| !g.valid_in(n)) {
            return Err(ClassifyError::Internal(format!("{} is not a generator of Θ_{n}", g.symbol())));
        }
        let structure = AbelianGroup::from_cyclic_orders(generators.iter().map(|g| g.order(n).into()));
        Ok(SubgroupDescriptor {
            n,
            generators,
            structure,
        })
    }

    pub fn zero(n: usize) -> Self {
        SubgroupDescriptor {
            n,
            generators: Vec::new(),
            structure: AbelianGroup::trivial(),
        }
    }

    /// All of `Θ_n`.
    pub fn whole(n: usize) -> Result<Self, ClassifyError> {
        let c = theta_constants(n)?;
        let mut gens = c.quotient_generators;
        if !c.bp.is_trivial() {
            gens.push(ThetaGenerator::BP);
        }
        Self::new(n, gens)
    }

    pub fn is_subset(&self, other: &SubgroupDescriptor) -> bool {
        self.generators.iter().all(|g| other.generators.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| match g {
                ThetaGenerator::BP => format!("bP_{}", self.n + 1),
                g => format!("Z/{}⟨{}⟩", g.order(self.n), g.symbol()),
            })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}
