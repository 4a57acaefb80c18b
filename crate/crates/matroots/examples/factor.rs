//! Complete factorization over ℚ: content, squarefree decomposition,
//! modular factorization, Hensel lifting, and recombination, all exact.
//!
//! Run with: cargo run --example factor

use matroots::{factor_over_q, UniPoly};

fn show(p: &UniPoly) {
    let f = factor_over_q(p).expect("nonzero polynomial");
    println!("{p}");
    print!("  = {}", f.content);
    for (h, m) in &f.factors {
        if *m == 1 {
            print!(" · ({h})");
        } else {
            print!(" · ({h})^{m}");
        }
    }
    println!();
    assert_eq!(f.product(), *p);
    println!("  (product of the factors reproduces the input exactly)\n");
}

fn main() {
    // A sextic that splits into two cubics.
    show(&UniPoly::from_integers(&[-30, -18, 18, -1, 3, -3, 1]));

    // Stays irreducible: the factorization is the polynomial itself.
    show(&UniPoly::from_integers(&[3, 0, 0, 0, 0, 0, 1]));

    // Repeated factors and rational content are both recovered.
    let base = UniPoly::from_integers(&[-1, 1]);
    let with_multiplicity = &(&base.pow(2) * &UniPoly::from_integers(&[1, 1]))
        * &UniPoly::from_integers(&[6]);
    show(&with_multiplicity);

    // Recombination at work: λ⁴ + 1 is irreducible over ℚ even though it
    // splits into quadratics modulo every prime.
    show(&UniPoly::from_integers(&[1, 0, 0, 0, 1]));
}
