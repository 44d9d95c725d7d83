// Coordinate inversion carries the zeros of a planar graph's polynomial off
// the coordinate hyperplanes onto those of its dual.
//
// Run with `cargo run --example cremona_bijection`.

use graph_hypersurface::count::{cremona_map, cremona_point_check, inverse_table};
use graph_hypersurface::embedding::RotationSystem;
use graph_hypersurface::graph::Family;
use graph_hypersurface::kirchhoff::psi;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = 5;
    let polygon = RotationSystem::family(Family::Polygon, 3)?;
    let banana = polygon.dual()?;
    let primal = psi(polygon.graph())?;
    let dual = psi(banana.graph())?;
    println!("psi = {primal}, dual psi = {dual}");

    // t1 + t2 + t3 = 0 at (1, 1, 3) in F_5
    let point = [1, 1, 3];
    let inverse = inverse_table(q);
    let image = cremona_map(&point, &inverse, q);
    println!("{point:?} -> {image:?}");
    assert_eq!(primal.evaluate_mod(&point, q)?, 0);
    assert_eq!(dual.evaluate_mod(&image, q)?, 0);

    for k in 3..=4 {
        let r = cremona_point_check(&RotationSystem::wheel(k)?, 3)?;
        println!(
            "W{k} over F_3: {} -> {} off-sigma zeros, bijective: {}",
            r.primal_off_sigma, r.dual_off_sigma, r.pass
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
