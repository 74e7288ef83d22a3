mod common;

use smoothings::classifier::{classify, InertiaBounds, SubgroupDescriptor};
use smoothings::complex_core::{boundary_of_simplex, product_complex};
use smoothings::profile::{extract_profile, nine_case, Assertions, CohomProfile, NineCase, SecondaryOpStatus};

fn product(i: usize, j: usize) -> CohomProfile {
    let k = product_complex(&boundary_of_simplex(i + 1), &boundary_of_simplex(j + 1));
    let a = Assertions {
        simply_connected: Some(true),
        ..Assertions::default()
    };
    extract_profile(k, &format!("S^{i} x S^{j}"), a).unwrap()
}

fn groups_match_uct(p: &CohomProfile, i: usize, j: usize) {
    let integral = common::sphere_product_cohomology(i, j);
    for g in &p.groups {
        let expected = if g.coefficients == 0 {
            integral[g.degree].clone()
        } else {
            common::hand_uct(&integral, g.degree, g.coefficients)
        };
        assert_eq!(g.group, expected, "H^{}(Z/{})", g.degree, g.coefficients);
    }
}

#[test]
fn s2_x_s5_is_a_seven_manifold_with_c_zero() {
    let p = product(2, 5);
    groups_match_uct(&p, 2, 5);
    assert!(p.flags.spin);
    let r = classify(&p).unwrap();
    // H^7(S^2 x S^5; Z/28) = Z/28
    assert_eq!(r.concordance.unwrap().group, common::orders(&[28]));
}

#[test]
fn s3_x_s5_has_c_equal_to_h8() {
    let p = product(3, 5);
    groups_match_uct(&p, 3, 5);
    let r = classify(&p).unwrap();
    // H^7(;Z/28) = 0 and H^8(;Z/2) = Z/2
    assert_eq!(r.concordance.unwrap().group, common::orders(&[2]));
    assert_eq!(r.ih.unwrap(), InertiaBounds::exact(SubgroupDescriptor::zero(8)));
}

#[test]
fn s2_x_s7_takes_the_spin_branch() {
    let p = product(2, 7);
    groups_match_uct(&p, 2, 7);
    assert!(p.flags.spin && p.flags.orientable && p.flags.h1_zero);
    assert_eq!(nine_case(&p).unwrap().0, NineCase::Spin);
    assert_eq!(p.phi, SecondaryOpStatus::FORCED_ZERO);
    let r = classify(&p).unwrap();
    // H^7(;Z/28) ⊕ H^8(;Z/2) ⊕ H^9(;Z/2)^3 = Z/28 ⊕ 0 ⊕ (Z/2)^3
    let integral = common::sphere_product_cohomology(2, 7);
    let expected = common::hand_uct(&integral, 7, 28)
        .direct_sum(&common::hand_uct(&integral, 8, 2))
        .direct_sum(&common::hand_uct(&integral, 9, 2).power(3));
    assert_eq!(expected, common::orders(&[28, 2, 2, 2]));
    assert_eq!(r.concordance.unwrap().group, expected);
    assert_eq!(r.ih.unwrap(), InertiaBounds::exact(SubgroupDescriptor::zero(9)));
    assert!(r.trace.iter().any(|c| c.id == "concordance-9-spin"));
}
