//! Integral and mod-m cohomology of the 6-vertex RP^2 and of S^2 x S^3.

use smoothings::complex_core::{boundary_of_simplex, product_complex, rp2_six_vertex, CohomologyEngine, SimplicialComplex};

fn table(name: &str, k: &SimplicialComplex) {
    let e = CohomologyEngine::for_simplicial(k).expect("engine");
    println!("{name}: f-vector {:?}, euler {}", k.f_vector(), k.euler_characteristic());
    for d in 0..=k.dimension() {
        let row: Vec<String> = [0u64, 2, 3, 4]
            .iter()
            .map(|&m| {
                let g = e.cohomology(d, m).expect("cohomology").group;
                if m == 0 { format!("Z: {g}") } else { format!("Z/{m}: {g}") }
            })
            .collect();
        println!("  H^{d}  {}", row.join("   "));
    }
}

fn main() {
    table("RP^2", &rp2_six_vertex());
    table("S^2 x S^3", &product_complex(&boundary_of_simplex(3), &boundary_of_simplex(4)));
}
