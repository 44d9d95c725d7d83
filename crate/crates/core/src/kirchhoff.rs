//! The Kirchhoff polynomial `Ψ_Γ = Σ_T Π_{e ∉ T} t_e` and the identities
//! it satisfies under planar duality and block decomposition.

use crate::embedding::RotationSystem;
use crate::error::Result;
use crate::graph::{EdgeSubset, Family, Multigraph};
use crate::multipoly::SubsetPoly;

/// Sum over spanning trees of the monomial on the edges left out of the tree.
pub fn psi(g: &Multigraph) -> Result<SubsetPoly> {
    g.require_connected()?;
    psi_of_subgraph(g, g.all_edges())
}

/// Kirchhoff polynomial of the subgraph spanned by `edges` (on the vertices
/// they touch), expressed in the variables of the whole graph.
pub fn psi_of_subgraph(g: &Multigraph, edges: EdgeSubset) -> Result<SubsetPoly> {
    let trees = g.subgraph_spanning_trees(edges);
    SubsetPoly::from_terms(
        g.edge_count(),
        trees.into_iter().map(|t| (edges.difference(t), 1)),
    )
}

/// The elementary symmetric polynomial `e_k(t_1, ..., t_n)`.
pub fn elementary_symmetric(n: usize, k: usize) -> Result<SubsetPoly> {
    let terms = (0..1u64 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (EdgeSubset::from_bits(b), 1));
    SubsetPoly::from_terms(n, terms)
}

/// Closed forms for the families, built without enumerating trees:
/// star `1`, flower `t_1 ⋯ t_n`, polygon `t_1 + ⋯ + t_n`, banana `e_{n-1}`.
pub fn psi_family(kind: Family, n: usize) -> Result<SubsetPoly> {
    kind.check_size(n)?;
    match kind {
        Family::Star => Ok(SubsetPoly::one(n)),
        Family::Flower => SubsetPoly::monomial(n, EdgeSubset::full(n), 1),
        Family::Polygon => SubsetPoly::from_terms(n, (1..=n as u32).map(|i| (EdgeSubset::single(i), 1))),
        Family::Banana => SubsetPoly::from_terms(
            n,
            (1..=n as u32).map(|i| (EdgeSubset::single(i).complement(n), 1)),
        ),
    }
}

/// Whether `Ψ_Γ` equals the reciprocal transform of `Ψ` of the dual.
pub fn cremona_identity_check(r: &RotationSystem) -> Result<bool> {
    let dual = r.dual()?;
    let primal = psi(r.graph())?;
    let from_dual = psi(dual.graph())?.reciprocal_transform();
    Ok(primal == from_dual)
}

/// Whether `Ψ_Γ` is the variable-disjoint product of the block polynomials.
pub fn psi_block_product_check(g: &Multigraph) -> Result<bool> {
    let whole = psi(g)?;
    let product = block_psi_product(g, &g.blocks()?.blocks)?;
    Ok(whole == product)
}

/// Product of the Kirchhoff polynomials of the given blocks.
pub(crate) fn block_psi_product(g: &Multigraph, blocks: &[EdgeSubset]) -> Result<SubsetPoly> {
    blocks.iter().try_fold(SubsetPoly::one(g.edge_count()), |acc, &b| {
        acc.mul_disjoint(&psi_of_subgraph(g, b)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn two_triangles() -> Multigraph {
        Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn family_polynomials() {
        for n in 1..=6 {
            let star = psi(&Multigraph::family(Family::Star, n).unwrap()).unwrap();
            assert_eq!(star, SubsetPoly::one(n));
            let flower = psi(&Multigraph::family(Family::Flower, n).unwrap()).unwrap();
            assert_eq!(flower.term_count(), 1);
            assert_eq!(flower.degree().unwrap(), n);
        }
        let polygon = psi(&Multigraph::family(Family::Polygon, 4).unwrap()).unwrap();
        assert_eq!(polygon.to_string(), "t1 + t2 + t3 + t4");
        let banana = psi(&Multigraph::family(Family::Banana, 3).unwrap()).unwrap();
        assert_eq!(banana.to_string(), "t1*t2 + t1*t3 + t2*t3");
        assert_eq!(banana, elementary_symmetric(3, 2).unwrap());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(psi_family(Family::Banana, 3).unwrap().to_string(), "t1*t2 + t1*t3 + t2*t3");
        assert_eq!(psi_family(Family::Star, 5).unwrap().to_string(), "1");
        assert_eq!(psi_family(Family::Polygon, 2).unwrap().to_string(), "t1 + t2");
        assert_eq!(psi_family(Family::Flower, 3).unwrap().to_string(), "t1*t2*t3");
        assert!(psi_family(Family::Polygon, 1).is_err());
        assert_eq!(psi_family(Family::Banana, 4).unwrap().degree().unwrap(), 3);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Multigraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(psi(&g), Err(Error::NotConnected));
        assert_eq!(psi_block_product_check(&g), Err(Error::NotConnected));
    }

    #[test]
    fn cremona_on_families_and_wheels() {
        for n in 2..=8 {
            let r = RotationSystem::family(Family::Polygon, n).unwrap();
            assert!(cremona_identity_check(&r).unwrap());
        }
        for n in 1..=8 {
            let r = RotationSystem::family(Family::Star, n).unwrap();
            assert!(cremona_identity_check(&r).unwrap());
        }
        assert!(cremona_identity_check(&RotationSystem::wheel(4).unwrap()).unwrap());
    }

    #[test]
    fn block_products() {
        assert!(psi_block_product_check(&two_triangles()).unwrap());
        let flower = Multigraph::family(Family::Flower, 4).unwrap();
        assert!(psi_block_product_check(&flower).unwrap());
        assert!(psi_block_product_check(&Multigraph::family(Family::Polygon, 5).unwrap()).unwrap());
    }

    #[test]
    fn double_triangle_expands() {
        let g = two_triangles();
        let p = psi(&g).unwrap();
        let left = psi_of_subgraph(&g, [1, 2, 3].into_iter().collect()).unwrap();
        let right = psi_of_subgraph(&g, [4, 5, 6].into_iter().collect()).unwrap();
        assert_eq!(left.to_string(), "t1 + t2 + t3");
        assert_eq!(right.to_string(), "t4 + t5 + t6");
        assert_eq!(p.term_count(), 9);
        assert_eq!(left.mul_disjoint(&right).unwrap(), p);
    }

    #[test]
    fn bridges_and_loops() {
        // triangle with a pendant bridge (4) and a loop (5) at the far end
        let g = Multigraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 3)]).unwrap();
        let p = psi(&g).unwrap();
        assert!(!p.support().contains(4));
        assert!(p.terms().all(|(s, _)| s.contains(5)));
        assert_eq!(p.degree().unwrap(), 5 - 4 + 1);
    }
}
