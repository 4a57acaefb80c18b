//! The eigenvector construction of a solution, in full view.
//!
//! With f = char_poly(A) irreducible and μ a root of f, a rational
//! solution corresponds to an admissible γ ∈ ℚ(μ) with p(γ) = μ. Writing
//! an eigenvector w of A for μ in power-basis coordinates gives a matrix
//! W; the coordinates of γ·w give C; then X = C·W⁻¹ is rational,
//! independent of the eigenvector chosen, and satisfies p(X) = A.
//!
//! Run with: cargo run --example drazin

use matroots::numberfield::admissible_gammas;
use matroots::{enumerate_solutions, solve_drazin, RatMatrix, UniPoly};

fn main() {
    let a = RatMatrix::from_integers(&[&[1, -2], &[-4, 1]]);
    let p = UniPoly::from_integers(&[1, -4, 0, 1]);
    let f = a.char_poly();
    println!("A =\n{a}");
    println!("p = {p}");
    println!("f = char_poly(A) = {f}\n");

    // Find the admissible elements: one per degree-2 irreducible factor of
    // the composition f(p(λ)).
    let admissibility = admissible_gammas(&f, &p).expect("f is irreducible");
    println!("composition f(p(λ)) = {}", admissibility.composition);
    for ag in &admissibility.admissible {
        println!("factor {} gives γ = {} (a polynomial in μ)", ag.factor, ag.gamma.rep());
    }
    println!();

    // Construct X from the first admissible γ via the eigenvector route.
    let gamma = &admissibility.admissible[0].gamma;
    let x = solve_drazin(&a, &p, gamma).expect("γ is admissible");
    println!("eigenvector route:\nX =\n{x}");

    // The production route (companion + Krylov similarity) must agree.
    let report = enumerate_solutions(&a, &p).unwrap();
    let companion_route = &report.solutions.as_ref().unwrap()[0];
    println!("companion route:\nX =\n{companion_route}");
    assert_eq!(&x, companion_route);
    println!("both constructions agree entry for entry");
}
