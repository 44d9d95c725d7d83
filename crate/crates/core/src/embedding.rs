//! Sphere embeddings as rotation systems, face tracing and planar duals.
//!
//! A half-edge is an edge id together with the end it leaves from. Faces are
//! traced with the rule "jump to the twin, then take the successor in the
//! rotation at that vertex". The dual lists, around each face, the crossed
//! edges in the order the face walk meets them, so dualizing twice returns
//! the original rotation system.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Family, Multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn flip(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// `(edge id, end)`; serialized as `[id, "tail"|"head"]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfEdge(pub u32, pub End);

impl HalfEdge {
    pub fn edge(self) -> u32 {
        self.0
    }

    pub fn end(self) -> End {
        self.1
    }

    pub fn twin(self) -> HalfEdge {
        HalfEdge(self.0, self.1.flip())
    }

    fn vertex(self, g: &Multigraph) -> usize {
        let e = g.edge(self.0);
        match self.1 {
            End::Tail => e.tail,
            End::Head => e.head,
        }
    }

    fn slot(self) -> usize {
        2 * (self.0 as usize - 1) + usize::from(self.1 == End::Head)
    }
}

/// A multigraph with a cyclic order of half-edges around every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    graph: Multigraph,
    rotation: Vec<Vec<HalfEdge>>,
}

#[derive(Deserialize)]
struct RotationRepr {
    graph: Multigraph,
    rotation: Vec<Vec<HalfEdge>>,
}

impl<'de> Deserialize<'de> for RotationSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RotationRepr::deserialize(d)?;
        RotationSystem::new(repr.graph, repr.rotation).map_err(serde::de::Error::custom)
    }
}

/// Face boundaries of an embedding, each a cyclic walk of half-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSet {
    pub faces: Vec<Vec<HalfEdge>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

impl RotationSystem {
    /// Validates that every half-edge sits at its own endpoint and appears
    /// exactly once across all rotation lists.
    pub fn new(graph: Multigraph, rotation: Vec<Vec<HalfEdge>>) -> Result<Self> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        let n = graph.edge_count();
        let mut seen = vec![false; 2 * n];
        for (v, list) in rotation.iter().enumerate() {
            for &h in list {
                if h.0 == 0 || h.0 as usize > n {
                    return Err(Error::InvalidRotation(format!("unknown edge {}", h.0)));
                }
                if h.vertex(&graph) != v {
                    return Err(Error::InvalidRotation(format!(
                        "half-edge ({}, {:?}) listed at vertex {v}, which it does not leave",
                        h.0, h.1
                    )));
                }
                if std::mem::replace(&mut seen[h.slot()], true) {
                    return Err(Error::InvalidRotation(format!(
                        "half-edge ({}, {:?}) listed twice",
                        h.0, h.1
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            let id = missing / 2 + 1;
            return Err(Error::InvalidRotation(format!("edge {id} has a missing half-edge")));
        }
        Ok(RotationSystem { graph, rotation })
    }

    /// The canonical planar embedding of a family member.
    pub fn family(kind: Family, n: usize) -> Result<Self> {
        let graph = Multigraph::family(kind, n)?;
        let ids = 1..=n as u32;
        let rotation = match kind {
            Family::Star => std::iter::once(ids.map(|i| HalfEdge(i, End::Tail)).collect())
                .chain((1..=n as u32).map(|i| vec![HalfEdge(i, End::Head)]))
                .collect(),
            Family::Flower => vec![ids
                .flat_map(|i| [HalfEdge(i, End::Tail), HalfEdge(i, End::Head)])
                .collect()],
            Family::Polygon => (0..n)
                .map(|v| {
                    let leaving = v as u32 + 1;
                    let arriving = if v == 0 { n as u32 } else { v as u32 };
                    vec![HalfEdge(leaving, End::Tail), HalfEdge(arriving, End::Head)]
                })
                .collect(),
            Family::Banana => vec![
                ids.clone().map(|i| HalfEdge(i, End::Tail)).collect(),
                ids.rev().map(|i| HalfEdge(i, End::Head)).collect(),
            ],
        };
        Self::new(graph, rotation)
    }

    /// The wheel `W_k` (see [`Multigraph::wheel`]) drawn with the hub in the
    /// centre and the rim traversed counter-clockwise.
    pub fn wheel(k: usize) -> Result<Self> {
        let graph = Multigraph::wheel(k)?;
        let k32 = k as u32;
        let mut rotation = vec![(1..=k32).map(|i| HalfEdge(i, End::Tail)).collect::<Vec<_>>()];
        for i in 1..=k32 {
            let prev_rim = if i == 1 { 2 * k32 } else { k32 + i - 1 };
            rotation.push(vec![
                HalfEdge(k32 + i, End::Tail),
                HalfEdge(i, End::Head),
                HalfEdge(prev_rim, End::Head),
            ]);
        }
        Self::new(graph, rotation)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<HalfEdge>] {
        &self.rotation
    }

    /// The embedding with every rotation reversed (its mirror image).
    pub fn mirrored(&self) -> Self {
        RotationSystem {
            graph: self.graph.clone(),
            rotation: self
                .rotation
                .iter()
                .map(|l| l.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Applies an edge relabeling `perm[id - 1] = new id` to graph and rotation.
    pub fn relabel_edges(&self, perm: &[u32]) -> Result<Self> {
        let graph = self.graph.relabel_edges(perm)?;
        let rotation = self
            .rotation
            .iter()
            .map(|l| l.iter().map(|h| HalfEdge(perm[h.0 as usize - 1], h.1)).collect())
            .collect();
        Self::new(graph, rotation)
    }

    fn successor_table(&self) -> Vec<HalfEdge> {
        let mut next = vec![HalfEdge(0, End::Tail); 2 * self.graph.edge_count()];
        for list in &self.rotation {
            for (i, &h) in list.iter().enumerate() {
                next[h.slot()] = list[(i + 1) % list.len()];
            }
        }
        next
    }

    /// Traces the faces and checks Euler's formula `v - n + F = 2`.
    pub fn faces(&self) -> Result<FaceSet> {
        self.graph.require_connected()?;
        let n = self.graph.edge_count();
        if n == 0 {
            return Ok(FaceSet { faces: vec![vec![]] });
        }
        let next = self.successor_table();
        let mut visited = vec![false; 2 * n];
        let mut faces = Vec::new();
        for id in 1..=n as u32 {
            for end in [End::Tail, End::Head] {
                let start = HalfEdge(id, end);
                if visited[start.slot()] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut h = start;
                while !visited[h.slot()] {
                    visited[h.slot()] = true;
                    walk.push(h);
                    h = next[h.twin().slot()];
                }
                faces.push(walk);
            }
        }
        let v = self.graph.vertex_count() as i64;
        let euler = v - n as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NotSphereEmbedding(format!(
                "v - n + F = {v} - {n} + {} = {euler}",
                faces.len()
            )));
        }
        Ok(FaceSet { faces })
    }

    /// The planar dual: one vertex per face, and for each primal edge a dual
    /// edge with the same id running from the face of its tail half-edge to
    /// the face of its head half-edge.
    pub fn dual(&self) -> Result<RotationSystem> {
        let faces = self.faces()?;
        let n = self.graph.edge_count();
        let mut face_of = HashMap::with_capacity(2 * n);
        for (f, walk) in faces.faces.iter().enumerate() {
            for &h in walk {
                face_of.insert(h, f);
            }
        }
        let edges = (1..=n as u32)
            .map(|id| Edge {
                id,
                tail: face_of[&HalfEdge(id, End::Tail)],
                head: face_of[&HalfEdge(id, End::Head)],
            })
            .collect();
        let graph = Multigraph::from_edges(faces.len(), edges)?;
        Self::new(graph, faces.faces)
    }
}
