//! Smith normal form of a small integer matrix and the group it presents.

use smoothings::exact_algebra::{cokernel_group, smith_form, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).expect("rectangular rows");
    let f = smith_form(&a);
    println!("A =\n{a}");
    println!("S = U A V =\n{}", f.s);
    println!("invariant factors {:?}", f.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>());
    let g = cokernel_group(&a);
    println!("Z^3 / im A = {g}  (primary: {})", g.primary_display());
}
