//! Profiles of connected sums: L^9(4) # L^9(6) and RP^8 # RP^8.

use smoothings::classifier::classify;
use smoothings::profile::{profile_connected_sum, profile_lens9, profile_rp, Slot};

fn main() {
    let sums = [
        profile_connected_sum(&profile_lens9(4).expect("L(4)"), &profile_lens9(6).expect("L(6)")),
        profile_connected_sum(&profile_rp(8).expect("RP^8"), &profile_rp(8).expect("RP^8")),
    ];
    for s in sums {
        let p = s.expect("connected sum");
        println!("{}: orientable {}, spin {}", p.name, p.flags.orientable, p.flags.spin);
        for g in p.groups.iter().filter(|g| g.degree == 7) {
            println!("  {:<12} {}", Slot::new(g.degree, g.coefficients).to_string(), g.group);
        }
        for n in &p.notes {
            println!("  note: {n}");
        }
        match classify(&p) {
            Ok(r) => print!("{}", r.render_table()),
            Err(e) => println!("  classify: {e}"),
        }
        println!();
    }
}
