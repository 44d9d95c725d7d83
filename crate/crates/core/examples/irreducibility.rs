// Reducibility from the block structure, checked against factoring Ψ.
//
// Run with `cargo run --example irreducibility`.

use graph_hypersurface::graph::{Family, Multigraph};
use graph_hypersurface::irred::{classify_graph, classify_poly, Verdict};
use graph_hypersurface::kirchhoff::psi;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("two triangles at a vertex", Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])?),
        ("hexagon", Multigraph::family(Family::Polygon, 6)?),
        ("flower of three loops", Multigraph::family(Family::Flower, 3)?),
        ("path", Multigraph::new(3, [(0, 1), (1, 2)])?),
    ];
    for (name, g) in &graphs {
        let verdict = classify_graph(g)?;
        let p = psi(g)?;
        assert_eq!(verdict.kind(), classify_poly(&p)?.kind());
        match verdict {
            Verdict::Reducible(w) => println!(
                "{name}: reducible at vertex {}, psi = ({}) * ({})",
                w.separating_vertex.unwrap_or_default(),
                w.factors.0,
                w.factors.1
            ),
            other => println!("{name}: {:?}", other.kind()),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
