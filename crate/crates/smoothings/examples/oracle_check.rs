//! Cross-checks the reduction engine against the brute-force oracles on
//! Moore complexes and a random integer matrix.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smoothings::cohomops::Space;
use smoothings::complex_core::ChainComplex;
use smoothings::exact_algebra::{cokernel_group, IntMatrix};
use smoothings::oracle::{brute_bockstein, brute_cohomology, brute_cokernel_order};

fn main() {
    for m in [4u64, 6, 12] {
        let c = ChainComplex::moore(m, 3).expect("moore");
        let s = Space::synthetic(c.clone()).expect("space");
        for k in 3..=4 {
            let ours = s.cohomology(k, 2).expect("cohomology").group.order_u64();
            let brute = brute_cohomology(&c, k, 2).expect("oracle").order;
            println!("Moore(Z/{m}, 3) H^{k}(Z/2): engine {ours:?}, oracle {brute}");
        }
        let x = s.cohomology(3, 2).expect("H^3").basis[0].clone();
        let a: Vec<u64> = x.cochain.iter().map(|&v| v as u64).collect();
        println!("  beta_2 engine {:?}, oracle {:?}", s.bockstein_nonzero(2, &x).expect("beta"), brute_bockstein(&c, 2, 3, &a).expect("oracle"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = IntMatrix::from_fn(3, 3, |_, _| rng.gen_range(-9i64..=9).into());
    println!("random A:\n{a}");
    println!("coker: engine order {:?}, oracle {:?}", cokernel_group(&a).order(), brute_cokernel_order(&a).expect("oracle"));
}
