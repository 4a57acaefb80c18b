//! Decide whether p(X) = A has a rational solution, without constructing
//! one. The test is purely about polynomial factorization: with
//! f = char_poly(A) irreducible, a solution exists exactly when the
//! composition f(p(λ)) has an irreducible factor of degree n over ℚ.
//!
//! Run with: cargo run --example decide

use matroots::{decide, Decision, RatMatrix, UniPoly};

fn report(a: &RatMatrix, p: &UniPoly) {
    println!("A =\n{a}");
    println!("p = {p}");
    let report = decide(a, p).expect("irreducible characteristic polynomial");
    println!("char_poly(A) = {}", report.char_poly);
    println!("composition  = {}", report.composition);
    print!("factors      =");
    for (h, m) in &report.factors.factors {
        if *m == 1 {
            print!(" ({h})");
        } else {
            print!(" ({h})^{m}");
        }
    }
    println!();
    match report.decision {
        Decision::Solvable => println!(
            "=> SOLVABLE: {} rational solution(s) exist (none constructed here)",
            report.count
        ),
        Decision::Unsolvable => {
            println!("=> UNSOLVABLE: no factor has degree {}", a.dim())
        }
    }
    println!();
}

fn main() {
    // No 3×3 rational matrix squares to this companion-like matrix: the
    // composition λ⁶ + 3 stays irreducible, so its only factor is itself,
    // of degree 6 ≠ 3.
    let a = RatMatrix::from_integers(&[&[0, 1, 0], &[0, 0, 1], &[-3, 0, 0]]);
    let square = UniPoly::from_integers(&[0, 0, 1]);
    report(&a, &square);

    // This one is solvable: the composition picks up a quadratic factor.
    let b = RatMatrix::from_integers(&[&[1, -2], &[-4, 1]]);
    let cubic = UniPoly::from_integers(&[1, -4, 0, 1]);
    report(&b, &cubic);
}
