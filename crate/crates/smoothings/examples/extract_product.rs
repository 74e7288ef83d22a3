//! Extracts the profile of a product of sphere boundaries, e.g. `2 7` for S^2 × S^7.

use std::time::Instant;

use smoothings::complex_core::{boundary_of_simplex, product_complex};
use smoothings::classifier::classify;
use smoothings::profile::{extract_profile, Assertions, Slot};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("sphere dimension")).collect();
    let (i, j) = match args[..] {
        [i, j] => (i, j),
        _ => (2, 7),
    };
    let start = Instant::now();
    let k = product_complex(&boundary_of_simplex(i + 1), &boundary_of_simplex(j + 1));
    println!("S^{i} x S^{j}: f-vector {:?}", k.f_vector());
    let assertions = Assertions {
        simply_connected: Some(i > 1 && j > 1),
        ..Assertions::default()
    };
    let p = extract_profile(k, &format!("S^{i}xS^{j}"), assertions).expect("extraction");
    for g in &p.groups {
        println!("{:<12} {}", Slot::new(g.degree, g.coefficients).to_string(), g.group);
    }
    println!("spin={} phi={} psi={}", p.flags.spin, p.phi.value, p.psi.value);
    println!("elapsed {:.2?}", start.elapsed());
    match classify(&p) {
        Ok(r) => print!("{}", r.render_table()),
        Err(e) => println!("classify: {e}"),
    }
}
