use std::fmt::Write;

use clap::ValueEnum;

use super::CliError;
use crate::classifier::{classify, theta_constants, ClassificationResult, SubgroupDescriptor, ThetaGenerator};
use crate::exact_algebra::AbelianGroup;
use crate::profile::{profile_lens9, profile_rp, profile_sphere};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZooTable {
    Lens,
    Rp,
    Spheres,
    #[value(name = "theoremC")]
    TheoremC,
}

/// One regression row: computed value next to the built-in expectation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooRow {
    pub label: String,
    pub computed: String,
    pub expected: String,
    /// Rule id the expected value comes from.
    pub citation: &'static str,
    pub pass: bool,
}

fn row(label: impl Into<String>, computed: impl ToString, expected: impl ToString, citation: &'static str) -> ZooRow {
    let (computed, expected) = (computed.to_string(), expected.to_string());
    ZooRow {
        label: label.into(),
        pass: computed == expected,
        computed,
        expected,
        citation,
    }
}

fn result(p: Result<crate::profile::CohomProfile, crate::profile::ProfileError>) -> Result<ClassificationResult, CliError> {
    Ok(classify(&p?)?)
}

fn show(d: &Option<SubgroupDescriptor>) -> String {
    d.as_ref().map_or("undetermined".into(), |d| d.to_string())
}

fn show_ih(r: &ClassificationResult) -> String {
    match &r.ih {
        Some(b) if b.exact => b.lower.to_string(),
        Some(b) => format!("between {} and {}", b.lower, b.upper),
        None => "undetermined".into(),
    }
}

fn expected_lens(m: u64) -> Result<SubgroupDescriptor, CliError> {
    use ThetaGenerator::*;
    Ok(match m % 4 {
        0 => SubgroupDescriptor::new(9, [EtaEpsilon, BP])?,
        2 => SubgroupDescriptor::new(9, [EtaEpsilon])?,
        _ => SubgroupDescriptor::zero(9),
    })
}

fn inertia_order(r: &ClassificationResult) -> String {
    r.inertia
        .as_ref()
        .and_then(|d| d.structure.order_u64())
        .map_or("undetermined".into(), |o| o.to_string())
}

pub fn zoo_rows(table: ZooTable) -> Result<Vec<ZooRow>, CliError> {
    use ThetaGenerator::*;
    let mut rows = Vec::new();
    match table {
        ZooTable::Spheres => {
            for n in 7..=10 {
                let r = result(profile_sphere(n))?;
                let c = r.concordance.as_ref().map_or("undetermined".into(), |c| c.group.to_string());
                rows.push(row(format!("C(S^{n})"), c, theta_constants(n)?.theta, "theta-sequence"));
            }
        }
        ZooTable::Lens => {
            for m in 2..=12u64 {
                let r = result(profile_lens9(m))?;
                rows.push(row(format!("I(L^9({m}))"), show(&r.inertia), expected_lens(m)?, "lens-inertia"));
            }
        }
        ZooTable::Rp => {
            let r8 = result(profile_rp(8))?;
            let c8 = r8.concordance.as_ref().map_or("undetermined".into(), |c| c.group.to_string());
            rows.push(row("C(RP^8)", c8, AbelianGroup::elementary(2, 2), "concordance-8"));
            rows.push(row("I_h(RP^8)", show_ih(&r8), "0", "homotopy-inertia-8"));
            rows.push(row("I(RP^8)", show(&r8.inertia), "0", "rp8-inertia"));
            let r9 = result(profile_rp(9))?;
            rows.push(row("I(RP^9)", show(&r9.inertia), expected_lens(2)?, "lens-inertia"));
            let r10 = result(profile_rp(10))?;
            let whole = SubgroupDescriptor::whole(10)?;
            rows.push(row("I_h(RP^10)", show_ih(&r10), &whole, "rp10-inertia"));
            rows.push(row("I(RP^10)", show(&r10.inertia), &whole, "rp10-inertia"));
        }
        ZooTable::TheoremC => {
            // (i) odd m: no nonzero sphere is absorbed
            let odd: Vec<String> = [3u64, 5, 7, 9, 11]
                .iter()
                .map(|&m| result(profile_lens9(m)).map(|r| inertia_order(&r)))
                .collect::<Result<_, _>>()?;
            rows.push(row("(i) |I(L^9(2k+1))|, k = 1..5", odd.join(","), "1,1,1,1,1", "lens-inertia"));
            // (ii) m = 4k+2: exactly one nonzero sphere is absorbed
            let two: Vec<String> = [2u64, 6, 10]
                .iter()
                .map(|&m| result(profile_lens9(m)).map(|r| inertia_order(&r)))
                .collect::<Result<_, _>>()?;
            rows.push(row("(ii) |I(L^9(4k+2))|, k = 0..2", two.join(","), "2,2,2", "lens-inertia"));
            // (iii) m = 4k: four spheres in the inertia group, bP_10 among them
            let four: Vec<String> = [4u64, 8, 12]
                .iter()
                .map(|&m| {
                    result(profile_lens9(m)).map(|r| {
                        let bp = r.inertia.as_ref().is_some_and(|d| d.generators.contains(&BP));
                        format!("{}{}", inertia_order(&r), if bp { "+bP" } else { "" })
                    })
                })
                .collect::<Result<_, _>>()?;
            rows.push(row("(iii) |I(L^9(4k))|, k = 1..3", four.join(","), "4+bP,4+bP,4+bP", "lens-inertia"));
            // (iv) the exotic 8-sphere is not absorbed by RP^8
            let r8 = result(profile_rp(8))?;
            let absorbed = r8.inertia.as_ref().map(|d| d.generators.contains(&Epsilon));
            let status = |a: Option<bool>| match a {
                Some(true) => "absorbed",
                Some(false) => "not absorbed",
                None => "undetermined",
            };
            rows.push(row("(iv) RP^8 # Σ, Σ exotic", status(absorbed), "not absorbed", "rp8-inertia"));
            // (v) every homotopy 10-sphere is absorbed by RP^10
            let r10 = result(profile_rp(10))?;
            let whole = SubgroupDescriptor::whole(10)?;
            let all = r10.inertia.as_ref().map(|d| *d == whole);
            rows.push(row("(v) RP^10 # Σ, every Σ in Θ_10", status(all), "absorbed", "rp10-inertia"));
        }
    }
    Ok(rows)
}

pub(super) fn render(rows: &[ZooRow]) -> String {
    let w = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0);
    let c = rows.iter().map(|r| r.computed.chars().count()).max().unwrap_or(0).max(8);
    let mut s = String::new();
    let _ = writeln!(s, "{:<w$}  {:<c$}  {:<4}  expected [rule]", "row", "computed", "");
    for r in rows {
        let pad = |t: &str, width: usize| format!("{t}{}", " ".repeat(width.saturating_sub(t.chars().count())));
        let _ = writeln!(
            s,
            "{}  {}  {}  {} [{}]",
            pad(&r.label, w),
            pad(&r.computed, c),
            if r.pass { "PASS" } else { "FAIL" },
            r.expected,
            r.citation
        );
    }
    s
}
