// Brute-force point counts over F_q against the predicted classes.
//
// Run with `cargo run --release --example point_counting`.

use graph_hypersurface::count::PointCounter;
use graph_hypersurface::graph::{Family, Multigraph};
use graph_hypersurface::kirchhoff::psi;
use graph_hypersurface::motive::family_class;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let counter = PointCounter::default();
    println!("{:<8} {:>2} {:>2} {:>8} {:>8}", "family", "n", "q", "class", "count");
    for kind in Family::ALL {
        for n in kind.min_size().max(2)..=5 {
            let class = family_class(kind, n)?;
            let p = psi(&Multigraph::family(kind, n)?)?;
            for q in [2, 3, 5] {
                let r = counter.verify_class(&class, &p, q)?;
                assert!(r.pass);
                println!("{:<8} {n:>2} {q:>2} {:>8} {:>8}", kind.name(), r.class_value, r.total);
            }
        }
    }

    // the work bound refuses enumerations that would take too long
    let p = psi(&Multigraph::family(Family::Polygon, 12)?)?;
    let small = PointCounter::new(16);
    match small.count_zeros(&p, 3) {
        Err(e) => println!("refused: {e}"),
        Ok(c) => println!("counted {}", c.total),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
