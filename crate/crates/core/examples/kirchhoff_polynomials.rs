// Kirchhoff polynomials of the standard families and a wheel.
//
// Run with `cargo run --example kirchhoff_polynomials`.

use graph_hypersurface::graph::{Family, Multigraph};
use graph_hypersurface::kirchhoff::{psi, psi_family};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in Family::ALL {
        let n = kind.min_size().max(3);
        let g = Multigraph::family(kind, n)?;
        let p = psi(&g)?;
        assert_eq!(p, psi_family(kind, n)?);
        println!("{:>7} n={n}: psi = {p}", kind.name());
    }

    let w3 = Multigraph::wheel(3)?;
    let p = psi(&w3)?;
    println!(
        "wheel W3: {} spanning trees, degree {}, {} terms",
        w3.spanning_tree_count()?,
        p.degree().unwrap_or(0),
        p.term_count()
    );
    // every monomial is the complement of a spanning tree
    let trees = w3.spanning_trees()?;
    let recip = p.reciprocal_transform();
    assert!(trees.iter().all(|&t| recip.coefficient(t) == 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
