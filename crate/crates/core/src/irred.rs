//! Reducibility of graph hypersurfaces.
//!
//! The hypersurface of a connected graph is reducible exactly when the graph
//! splits at a vertex into two pieces that both contain a cycle; in block
//! terms, when at least two blocks are cyclic. [`classify_graph`] reads the
//! verdict off the blocks; [`classify_poly`] recovers it from the polynomial
//! alone by searching for a variable-disjoint factorization, and serves as
//! the independent check.

use serde::{Deserialize, Serialize};

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Multigraph, UnionFind};
use crate::kirchhoff::{block_psi_product, psi};
use crate::multipoly::SubsetPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    /// `Ψ` is the constant 1 and the hypersurface is empty.
    EmptyHypersurface,
    Irreducible,
    Reducible,
}

/// A separation of the graph (or of the polynomial's variables) into two
/// parts, with the corresponding factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Shared vertex; absent when the witness comes from the polynomial alone.
    pub separating_vertex: Option<usize>,
    pub first: EdgeSubset,
    pub second: EdgeSubset,
    pub factors: (SubsetPoly, SubsetPoly),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "witness")]
pub enum Verdict {
    EmptyHypersurface,
    Irreducible,
    Reducible(Box<Witness>),
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::EmptyHypersurface => VerdictKind::EmptyHypersurface,
            Verdict::Irreducible => VerdictKind::Irreducible,
            Verdict::Reducible(_) => VerdictKind::Reducible,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Reducible(w) => Some(w),
            _ => None,
        }
    }
}

/// Verdict from the block structure: no cyclic block means `Ψ = 1`, one
/// cyclic block means irreducible, two or more means reducible.
///
/// The witness splits at the lowest-numbered cut vertex that separates two
/// cyclic blocks. The blocks hanging off that vertex fall into branches; the
/// branch holding the first cyclic block is one side and everything else is
/// the other.
pub fn classify_graph(g: &Multigraph) -> Result<Verdict> {
    let decomposition = g.blocks()?;
    let blocks = &decomposition.blocks;
    let cyclic: Vec<bool> = blocks.iter().map(|&b| g.is_cyclic_block(b)).collect();
    match cyclic.iter().filter(|&&c| c).count() {
        0 => return Ok(Verdict::EmptyHypersurface),
        1 => return Ok(Verdict::Irreducible),
        _ => {}
    }
    let block_vertices: Vec<Vec<usize>> = blocks.iter().map(|&b| g.incident_vertices(b)).collect();
    for &v in &decomposition.cut_vertices {
        let mut branches = UnionFind::new(blocks.len());
        let mut holder: Vec<Option<usize>> = vec![None; g.vertex_count()];
        for (i, verts) in block_vertices.iter().enumerate() {
            for &u in verts.iter().filter(|&&u| u != v) {
                match holder[u] {
                    Some(j) => {
                        branches.union(i, j);
                    }
                    None => holder[u] = Some(i),
                }
            }
        }
        let Some(first_cyclic) = cyclic.iter().position(|&c| c) else {
            unreachable!("at least two cyclic blocks");
        };
        let side = branches.find(first_cyclic);
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (i, &b) in blocks.iter().enumerate() {
            if branches.find(i) == side {
                first.push(b);
            } else {
                second.push(b);
            }
        }
        if !second.iter().any(|&b| g.is_cyclic_block(b)) {
            continue;
        }
        let f = block_psi_product(g, &first)?;
        let h = block_psi_product(g, &second)?;
        let union = |bs: &[EdgeSubset]| bs.iter().fold(EdgeSubset::EMPTY, |a, &b| a.union(b));
        return Ok(Verdict::Reducible(Box::new(Witness {
            separating_vertex: Some(v),
            first: union(&first),
            second: union(&second),
            factors: (f, h),
        })));
    }
    unreachable!("two cyclic blocks are always separated by some cut vertex")
}

/// Verdict from the polynomial alone. The input must look like a Kirchhoff
/// polynomial: nonzero, homogeneous, every coefficient equal to 1.
pub fn classify_poly(p: &SubsetPoly) -> Result<Verdict> {
    if p.is_zero() {
        return Err(Error::InvalidPolynomial("the zero polynomial is not a graph polynomial".into()));
    }
    if p.terms().any(|(_, c)| c != 1) {
        return Err(Error::InvalidPolynomial(
            "graph polynomials have all coefficients equal to 1".into(),
        ));
    }
    if !p.is_homogeneous() {
        return Err(Error::InvalidPolynomial("graph polynomials are homogeneous".into()));
    }
    if p.is_constant() {
        return Ok(Verdict::EmptyHypersurface);
    }
    Ok(match p.find_disjoint_factorization()? {
        None => Verdict::Irreducible,
        Some((f, h)) => Verdict::Reducible(Box::new(Witness {
            separating_vertex: None,
            first: f.support(),
            second: h.support(),
            factors: (f, h),
        })),
    })
}

/// Whether the hypersurfaces of a graph and of its dual agree on
/// irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityCheck {
    pub primal: VerdictKind,
    pub dual: VerdictKind,
    /// One side has constant `Ψ` (a tree, dual to a bouquet of loops), where
    /// the comparison is vacuous.
    pub degenerate: bool,
    pub holds: bool,
}

pub fn duality_irreducibility_check(r: &RotationSystem) -> Result<DualityCheck> {
    let dual = r.dual()?;
    let primal = classify_poly(&psi(r.graph())?)?.kind();
    let dual = classify_poly(&psi(dual.graph())?)?.kind();
    let degenerate =
        primal == VerdictKind::EmptyHypersurface || dual == VerdictKind::EmptyHypersurface;
    Ok(DualityCheck {
        primal,
        dual,
        degenerate,
        holds: degenerate || primal == dual,
    })
}
