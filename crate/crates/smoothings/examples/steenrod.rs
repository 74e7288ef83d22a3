//! Steenrod squares and Bocksteins: Sq^i on RP^3, Wu and Stiefel-Whitney
//! classes of RP^2, and higher Bocksteins on Moore complexes.

use smoothings::cohomops::{Op, Space};
use smoothings::complex_core::{projective_space, rp2_six_vertex, ChainComplex};

fn main() {
    let rp3 = Space::simplicial(projective_space(3)).expect("RP^3");
    for (i, k) in [(1, 1), (1, 2), (2, 1)] {
        let m = rp3.operation_matrix(Op::Sq(i), k).expect("matrix");
        println!("RP^3: Sq^{i} on H^{k}(Z/2) -> {}", if m.is_zero() { "zero" } else { "nonzero" });
    }
    let d2 = rp3.operation_matrix(Op::D2, 1).expect("d2");
    println!("RP^3: d2 on H^1(Z/4) -> {}", if d2.is_zero() { "zero" } else { "nonzero" });

    let rp2 = Space::simplicial(rp2_six_vertex()).expect("RP^2");
    let w = rp2.wu_and_sw().expect("Wu classes");
    println!("RP^2: orientable {}, spin {}", w.w1_zero, w.is_spin());

    for r in 1..=3u32 {
        let s = Space::synthetic(ChainComplex::moore(1 << r, 7).expect("moore")).expect("space");
        let x = s.cohomology(7, 2).expect("H^7").basis[0].clone();
        let pattern: Vec<String> = (1..=4)
            .map(|t| match s.bockstein_nonzero(t, &x).expect("bockstein") {
                None => format!("b{t}:undefined"),
                Some(true) => format!("b{t}:nonzero"),
                Some(false) => format!("b{t}:zero"),
            })
            .collect();
        println!("Moore(Z/{}, 7): {}", 1 << r, pattern.join(" "));
    }
}
