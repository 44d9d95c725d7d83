// Classes of the family hypersurfaces as polynomials in T = [G_m].
//
// Run with `cargo run --example grothendieck_classes`.

use graph_hypersurface::graph::Family;
use graph_hypersurface::motive::{
    banana_alternative_value, family_class, hyperplane_section, projective_class, sn_class,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=6 {
        let c = family_class(Family::Banana, n)?;
        println!("banana n={n}: {c}   ({})", c.lefschetz_string());
    }
    for kind in [Family::Star, Family::Flower, Family::Polygon] {
        println!("{kind} n=4: {}", family_class(kind, 4)?);
    }
    println!("[S_5] = {}", sn_class(5)?);

    let p4 = projective_class(4);
    println!("H([P^4]) = {} = [P^3]", hyperplane_section(&p4));

    // the closed expression with a bare T denominator does not match the count
    let v = banana_alternative_value(3, 2)?;
    println!("alternative banana expression at n=3, q=2: {v} (the count is 3)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
