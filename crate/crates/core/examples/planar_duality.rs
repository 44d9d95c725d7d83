// Rotation systems, face tracing and the planar dual.
//
// Run with `cargo run --example planar_duality`.

use graph_hypersurface::embedding::RotationSystem;
use graph_hypersurface::graph::Family;
use graph_hypersurface::kirchhoff::{cremona_identity_check, psi};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let square = RotationSystem::family(Family::Polygon, 4)?;
    let faces = square.faces()?;
    println!("polygon n=4 has {} faces", faces.len());

    let dual = square.dual()?;
    println!(
        "its dual has {} vertices and {} edges",
        dual.graph().vertex_count(),
        dual.graph().edge_count()
    );
    println!("psi(primal) = {}", psi(square.graph())?);
    println!("psi(dual)   = {}", psi(dual.graph())?);
    println!(
        "reciprocal of psi(dual) = {}",
        psi(dual.graph())?.reciprocal_transform()
    );

    for k in 3..=6 {
        let wheel = RotationSystem::wheel(k)?;
        println!("W{k}: Cremona identity holds: {}", cremona_identity_check(&wheel)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
