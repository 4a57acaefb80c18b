//! Enumerate every rational solution of p(X) = A. Each irreducible
//! degree-n factor h of the composition char_poly(A)(p(λ)) yields exactly
//! one solution, built by conjugating the companion matrix of h with a
//! similarity assembled from two Krylov bases.
//!
//! Run with: cargo run --example enumerate

use matroots::{enumerate_solutions, verify_solution, RatMatrix, UniPoly};

fn main() {
    // Solve X² − X − I = A, i.e. p(X) = A with p = λ² − λ − 1.
    let a = RatMatrix::from_integers(&[&[-1, 6, 2], &[-1, -1, -2], &[-3, 3, -1]]);
    let p = UniPoly::from_integers(&[-1, -1, 1]);

    println!("A =\n{a}");
    println!("p = {p}\n");

    let report = enumerate_solutions(&a, &p).expect("irreducible characteristic polynomial");
    println!("composition = {}", report.composition);
    println!("degree-3 factors of the composition, one solution each:\n");

    let solutions = report.solutions.as_ref().expect("enumerated");
    for (h, x) in report.admissible_factors().iter().zip(solutions) {
        println!("h = {h}");
        println!("X =\n{x}");
        let ok = verify_solution(&a, &p, x).unwrap();
        println!("p(X) = A holds exactly: {ok}\n");
    }
    println!("total rational solutions: {}", report.count);
}
