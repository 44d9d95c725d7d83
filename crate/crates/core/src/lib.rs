//! Graph hypersurfaces of connected planar multigraphs.
//!
//! * [`graph`]: multigraphs, spanning trees, blocks and the star, flower,
//!   polygon and banana families;
//! * [`embedding`]: rotation systems, face tracing and planar duals;
//! * [`multipoly`]: multilinear integer polynomials indexed by edge subsets;
//! * [`kirchhoff`]: the Kirchhoff polynomial and its duality identity;
//! * [`motive`]: Grothendieck classes as integer polynomials in the torus
//!   class `T`;
//! * [`count`]: brute-force point counts over prime fields, used as the
//!   oracle for every class formula;
//! * [`irred`]: reducibility of the hypersurface from the block structure;
//! * [`cli`]: the `ghs` command surface.
//!
//! ```
//! use graph_hypersurface::{graph::{Family, Multigraph}, kirchhoff, motive};
//!
//! let banana = Multigraph::family(Family::Banana, 3).unwrap();
//! assert_eq!(kirchhoff::psi(&banana).unwrap().to_string(), "t1*t2 + t1*t3 + t2*t3");
//! assert_eq!(motive::family_class(Family::Banana, 3).unwrap().to_string(), "T + 2");
//! ```

pub mod cli;
pub mod count;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod irred;
pub mod kirchhoff;
pub mod motive;
pub mod multipoly;

pub use error::{Error, Result};
