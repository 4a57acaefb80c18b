//! The sufficient-condition report for nonderogatory matrices, where
//! eigenvalues may repeat. For char_poly(A) = ∏ fⱼ^(dⱼ) the verdict is
//!   SUFFICIENT      every fⱼ has an admissible γ, and repeated factors
//!                   additionally satisfy the derivative-like condition
//!                   that ∏ D(γ_s, γ_t) ≠ 0 over root pairs of the factor,
//!   NO_SOLUTION     some fⱼ has no admissible γ (a hard obstruction),
//!   NOT_ESTABLISHED neither of the above; the condition is sufficient,
//!                   not necessary, so nothing is claimed.
//!
//! Run with: cargo run --example nonderogatory

use matroots::{
    condition13_holds, is_nonderogatory, nondero_report, verify_solution, RatMatrix, UniPoly,
};

fn show(a: &RatMatrix, p: &UniPoly) {
    println!("A =\n{a}");
    println!("p = {p}");
    assert!(is_nonderogatory(a));
    let report = nondero_report(a, p).unwrap();
    for ((f, d), (count, cond13)) in report.factors.iter().zip(&report.per_factor) {
        println!("factor ({f})^{d}: admissible γ count = {count}, pair condition = {cond13}");
    }
    println!("verdict: {:?}\n", report.verdict);
}

fn main() {
    let p = UniPoly::from_integers(&[0, 0, 1]);

    // A Jordan-like block with repeated eigenvalue 4. γ = 2 is admissible
    // for λ − 4 and p′(2) = 4 ≠ 0, so a solution exists; here is one.
    let a = RatMatrix::from_integers(&[&[4, 1], &[0, 4]]);
    show(&a, &p);
    let x = RatMatrix::from_rows(vec![
        vec![matroots::rational::rat(2), matroots::rational::ratio(1, 4)],
        vec![matroots::rational::rat(0), matroots::rational::rat(2)],
    ])
    .unwrap();
    println!("certificate X =\n{x}");
    println!("p(X) = A: {}\n", verify_solution(&a, &p, &x).unwrap());

    // Repeated irreducible factor with no admissible γ at all: λ⁴ − 2 is
    // irreducible, so no degree-2 factor exists and no solution can.
    let f = UniPoly::from_integers(&[-2, 0, 1]).pow(2);
    let b = RatMatrix::companion(&f).unwrap();
    show(&b, &p);

    // The pair condition in isolation: for h = λ² − 2 under p = λ² the
    // mixed pair (√2, −√2) gives D = √2 + (−√2) = 0, so it fails.
    let h = UniPoly::from_integers(&[-2, 0, 1]);
    println!(
        "condition on (h, p) = ({h}, {p}): {}",
        condition13_holds(&h, &p)
    );
    // Under p = λ³ − 4λ + 1 every pair survives.
    let q = UniPoly::from_integers(&[1, -4, 0, 1]);
    println!(
        "condition on (h, p) = ({h}, {q}): {}",
        condition13_holds(&h, &q)
    );
}
