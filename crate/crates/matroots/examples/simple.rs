//! Blockwise solving for simple matrices (squarefree characteristic
//! polynomial). The matrix is first brought to companion-Jordan form, a
//! block diagonal of companion matrices of the distinct irreducible
//! factors; each block is solved independently and the solution sets
//! multiply out as a cartesian product.
//!
//! Run with: cargo run --example simple

use matroots::{companion_jordan, is_simple, solve_simple, Decision, RatMatrix, UniPoly};

fn main() {
    let a = RatMatrix::from_integers(&[&[4, 0], &[0, 9]]);
    let p = UniPoly::from_integers(&[0, 0, 1]);
    println!("A =\n{a}");
    println!("p = {p}");
    println!("is_simple(A) = {}\n", is_simple(&a));

    let form = companion_jordan(&a).unwrap();
    println!("companion-Jordan blocks:");
    for block in &form.blocks {
        println!("  companion of {}", block.poly);
    }
    println!();

    // Each eigenvalue block contributes its own square roots: ±2 and ±3,
    // so there are 2 × 2 = 4 rational square roots in total.
    let report = solve_simple(&a, &p).unwrap();
    println!("count = {}", report.count);
    for x in report.solutions.as_ref().unwrap() {
        println!("X =\n{x}");
    }

    // One blocked factor kills the whole product: diag(2, 3) has no
    // rational square root because x² = 2 has none.
    let b = RatMatrix::from_integers(&[&[2, 0], &[0, 3]]);
    let report = solve_simple(&b, &p).unwrap();
    println!("B = diag(2, 3): {:?}", report.decision);
    assert_eq!(report.decision, Decision::Unsolvable);
}
