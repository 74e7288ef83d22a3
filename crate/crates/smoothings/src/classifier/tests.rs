use super::*;
use crate::exact_algebra::AbelianGroup;
use crate::profile::{profile_connected_sum, profile_lens9, profile_rp, profile_sphere, SecondaryOpStatus};

fn orders(v: &[u64]) -> AbelianGroup {
    AbelianGroup::from_cyclic_orders(v.iter().map(|&x| x.into()))
}

fn corpus() -> Vec<CohomProfile> {
    let mut out = Vec::new();
    for n in 7..=10 {
        out.push(profile_sphere(n).unwrap());
        out.push(profile_rp(n).unwrap());
    }
    for m in 3..=12 {
        out.push(profile_lens9(m).unwrap());
    }
    out.push(profile_connected_sum(&profile_lens9(4).unwrap(), &profile_lens9(6).unwrap()).unwrap());
    out.push(profile_connected_sum(&profile_rp(8).unwrap(), &profile_rp(8).unwrap()).unwrap());
    out
}

#[test]
fn spheres_have_theta_as_concordance_group() {
    for n in 7..=10 {
        let c = classify_concordance(&profile_sphere(n).unwrap()).unwrap();
        assert_eq!(c.value.group, theta_constants(n).unwrap().theta, "n = {n}");
        if n > 7 {
            let r = classify(&profile_sphere(n).unwrap()).unwrap();
            assert_eq!(r.ih.unwrap(), InertiaBounds::exact(SubgroupDescriptor::zero(n)));
            assert!(r.ic.unwrap().is_trivial());
        }
    }
}

#[test]
fn lens_inertia_table() {
    for m in 1..=12u64 {
        let d = lens_inertia(m).unwrap();
        let expected = match m % 4 {
            1 | 3 => 1,
            2 => 2,
            _ => 4,
        };
        assert_eq!(d.structure.order_u64(), Some(expected), "m = {m}");
        assert_eq!(d.generators.contains(&ThetaGenerator::BP), m % 4 == 0);
        if m > 1 {
            let r = classify(&profile_lens9(m).unwrap()).unwrap();
            assert_eq!(r.inertia.as_ref(), Some(&d));
            assert_eq!(r.ih.as_ref().unwrap(), &InertiaBounds::exact(d.clone()));
        }
    }
    assert!(lens_inertia(0).is_err());
}

#[test]
fn real_projective_spaces() {
    let r8 = classify(&profile_rp(8).unwrap()).unwrap();
    assert_eq!(r8.concordance.unwrap().group, AbelianGroup::elementary(2, 2));
    assert!(r8.ih.as_ref().unwrap().exact && r8.ih.unwrap().lower.is_trivial());
    assert!(r8.inertia.unwrap().is_trivial());

    let r10 = classify(&profile_rp(10).unwrap()).unwrap();
    let whole = SubgroupDescriptor::whole(10).unwrap();
    assert_eq!(r10.ih.unwrap(), InertiaBounds::exact(whole.clone()));
    assert_eq!(r10.inertia, Some(whole));
    assert!(r10.concordance.is_none() && r10.ic.is_none());
    assert!(!r10.caveats.is_empty());
}

#[test]
fn rp9_uses_the_split_formula() {
    // H^7(;Z/4) = Z/2 so A = Z/2, K̃ = 0, Ã = Z/4
    let c = classify_concordance(&profile_rp(9).unwrap()).unwrap();
    assert_eq!(c.value.group, orders(&[2, 2, 4]));
    assert!(c.trace.iter().any(|t| t.id == "splitting-assumption"));
    let sources: Vec<&str> = c.value.summands.iter().map(|s| s.source.as_str()).collect();
    assert_eq!(sources, ["H^7(;Z/7)", "H^8(;Z/2)", "H^9(;Z/2)", "K̃", "Ã"]);
}

#[test]
fn lens_four_has_a_z8_summand() {
    let c = classify_concordance(&profile_lens9(4).unwrap()).unwrap();
    assert_eq!(c.value.group, orders(&[2, 2, 8]));
}

#[test]
fn odd_lens_spaces_are_spin_cases() {
    let r = classify(&profile_lens9(3).unwrap()).unwrap();
    assert_eq!(r.case.as_deref(), Some(NineCase::Spin.to_string().as_str()));
    // H^7(;Z/28) = 0, H^8(;Z/2) = 0, H^9(;Z/2)^3
    assert_eq!(r.concordance.unwrap().group, AbelianGroup::elementary(2, 3));
}

#[test]
fn unknown_phi_returns_every_outcome() {
    let mut p = profile_sphere(10).unwrap();
    p.phi = SecondaryOpStatus::UNKNOWN;
    match classify(&p) {
        Err(ClassifyError::Alternatives(alts)) => {
            assert_eq!(alts.len(), 2);
            for (label, r) in &alts {
                assert!(r.assertions.iter().any(|a| a.contains(label.as_str())));
                r.check_discipline().unwrap();
            }
            let groups: Vec<AbelianGroup> = alts.iter().map(|(_, r)| r.concordance.clone().unwrap().group).collect();
            assert_eq!(groups, vec![AbelianGroup::cyclic(6), AbelianGroup::cyclic(3)]);
        }
        other => panic!("expected alternatives, got {other:?}"),
    }
}

#[test]
fn asserted_phi_is_echoed() {
    let mut p = profile_sphere(10).unwrap();
    p.phi = SecondaryOpStatus::asserted(crate::profile::OpValue::Nonzero);
    let r = classify(&p).unwrap();
    assert_eq!(r.assertions, vec!["phi=nonzero".to_string()]);
    assert!(r.trace.iter().any(|c| c.id == "user-assertion"));
    let eta_mu = SubgroupDescriptor::new(10, [ThetaGenerator::EtaMu]).unwrap();
    assert_eq!(r.ic, Some(eta_mu.clone()));
    assert_eq!(r.ih.unwrap(), InertiaBounds::exact(eta_mu));
}

#[test]
fn missing_hypotheses_become_caveats_or_errors() {
    let mut p = profile_sphere(10).unwrap();
    p.flags.simply_connected_asserted = false;
    let r = classify(&p).unwrap();
    assert!(r.concordance.is_some() && r.ic.is_none());
    let ih = r.ih.unwrap();
    assert!(!ih.exact);
    assert!(r.trace.iter().any(|c| c.id == "hypothesis-gap"));

    let r7 = classify(&profile_sphere(7).unwrap()).unwrap();
    assert!(r7.ic.is_none() && r7.ih.is_none() && !r7.caveats.is_empty());
    assert!(matches!(concordance_inertia(&profile_sphere(7).unwrap()), Err(ClassifyError::Hypothesis(_))));
    assert!(matches!(theta_constants(11), Err(ClassifyError::DimensionOutOfRange(11))));
}

#[test]
fn bound_discipline_on_the_corpus() {
    for p in corpus() {
        match classify(&p) {
            Ok(r) => r.check_discipline().unwrap(),
            Err(ClassifyError::Alternatives(alts)) => alts.iter().for_each(|(_, r)| r.check_discipline().unwrap()),
            Err(e) => panic!("{}: {e}", p.name),
        }
    }
}

#[test]
fn every_cited_rule_exists() {
    for p in corpus() {
        if let Ok(r) = classify(&p) {
            assert!(r.trace.iter().all(|c| rule(&c.id).is_some()), "{}", p.name);
        }
    }
    let mut ids: Vec<&str> = RULES.iter().map(|r| r.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), RULES.len());
}

#[test]
fn result_json_round_trip() {
    let r = classify(&profile_lens9(8).unwrap()).unwrap();
    let text = r.to_json();
    assert_eq!(ClassificationResult::from_json(&text).unwrap(), r);
    assert_eq!(classify(&profile_lens9(8).unwrap()).unwrap().to_json(), text);
    assert!(r.render_table().contains("bP_10"));
}

#[test]
fn uncited_claims_are_rejected() {
    let r = classify(&profile_rp(8).unwrap()).unwrap();
    let mut stripped = r.clone();
    stripped.trace.retain(|c| c.id != "homotopy-inertia-8");
    assert!(stripped.check_discipline().unwrap_err().contains("I_h"));
    let mut loose = r;
    loose.ih.as_mut().unwrap().upper = SubgroupDescriptor::zero(8);
    loose.ic = Some(SubgroupDescriptor::whole(8).unwrap());
    assert!(loose.check_discipline().is_err());
}
