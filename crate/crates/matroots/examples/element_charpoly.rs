//! Arithmetic in a number field ℚ(μ) = ℚ[λ]/(f), and the characteristic
//! polynomial of an element computed two independent ways: as the
//! resultant Res_t(f(t), λ − g(t)), and from power-sum traces via the
//! Newton identities. The two routes cross-check each other.
//!
//! Run with: cargo run --example element_charpoly

use matroots::{NumberField, UniPoly};

fn main() {
    // ℚ(μ) with μ³ = −3.
    let f = UniPoly::from_integers(&[3, 0, 0, 1]);
    let field = NumberField::new(&f).expect("f is irreducible");
    println!("field ℚ(μ), μ a root of {f}\n");

    // Field inversion through the extended Euclidean algorithm.
    let one_plus_mu = field.element(&UniPoly::from_integers(&[1, 1]));
    let inv = field.inv(&one_plus_mu).unwrap();
    println!("(1 + μ)⁻¹ = {}", inv.rep());
    let product = field.mul(&one_plus_mu, &inv);
    assert_eq!(product.as_rational(), Some(matroots::rational::rat(1)));
    println!("(1 + μ)·(1 + μ)⁻¹ = 1 exactly\n");

    // The characteristic polynomial of g(μ) = μ² − 1, both ways.
    let g = UniPoly::from_integers(&[-1, 0, 1]);
    let via_resultant = field.char_poly_of_element(&g);
    let via_newton = field.char_poly_via_newton(&g);
    println!("g(μ) = {g}");
    println!("char poly via resultant:       {via_resultant}");
    println!("char poly via Newton identities: {via_newton}");
    assert_eq!(via_resultant, via_newton);

    // The element is a root of its own characteristic polynomial.
    let g_elem = field.element(&g);
    let value = field.eval_unipoly(&via_resultant, &g_elem);
    assert!(value.is_zero());
    println!("g(μ) roots its characteristic polynomial: true");

    // The generator's characteristic polynomial is the modulus itself.
    assert_eq!(field.char_poly_of_element(&UniPoly::var()), f);
    println!("char poly of μ recovers the modulus: true");
}
