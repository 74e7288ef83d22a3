//! Classification of spheres, real projective spaces and lens spaces.

use smoothings::classifier::{classify, ClassifyError};
use smoothings::profile::{profile_lens9, profile_rp, profile_sphere};

fn main() {
    let mut profiles = Vec::new();
    for n in 7..=10 {
        profiles.push(profile_sphere(n).expect("sphere"));
    }
    for n in [8, 9, 10] {
        profiles.push(profile_rp(n).expect("projective space"));
    }
    for m in [3, 6, 8] {
        profiles.push(profile_lens9(m).expect("lens space"));
    }
    for p in &profiles {
        match classify(p) {
            Ok(r) => println!("{}", r.render_table()),
            Err(ClassifyError::Alternatives(alts)) => {
                for (label, r) in alts {
                    println!("assuming {label}:\n{}", r.render_table());
                }
            }
            Err(e) => println!("{}: {e}\n", p.name),
        }
    }
}
