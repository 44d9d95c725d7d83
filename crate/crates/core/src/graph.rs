//! Labeled multigraphs with loops and parallel edges.
//!
//! Edge ids run over `1..=n` and double as the variable indices of the
//! Kirchhoff polynomial, so an [`EdgeSubset`] is simultaneously a set of
//! edges and a multilinear monomial.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported edge count (one bit per edge).
pub const MAX_EDGES: usize = 64;

/// A set of edge ids, stored as a bitmask with edge `e` at bit `e - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_EDGES, "edge count {n} exceeds {MAX_EDGES}");
        if n == MAX_EDGES {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << n) - 1)
        }
    }

    pub fn single(edge: u32) -> Self {
        assert!((1..=MAX_EDGES as u32).contains(&edge), "edge id {edge} out of range");
        EdgeSubset(1u64 << (edge - 1))
    }

    pub fn from_edges<I: IntoIterator<Item = u32>>(edges: I) -> Self {
        edges
            .into_iter()
            .fold(EdgeSubset::EMPTY, |acc, e| acc.union(EdgeSubset::single(e)))
    }

    pub fn contains(self, edge: u32) -> bool {
        (1..=MAX_EDGES as u32).contains(&edge) && self.0 >> (edge - 1) & 1 == 1
    }

    pub fn insert(&mut self, edge: u32) {
        *self = self.union(EdgeSubset::single(edge));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        EdgeSubset::full(n).difference(self)
    }

    /// Largest edge id present, if any.
    pub fn max_edge(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Edge ids in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<u32> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        EdgeSubset::from_edges(iter)
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<u32>::deserialize(d)?;
        if let Some(bad) = ids.iter().find(|&&e| e == 0 || e as usize > MAX_EDGES) {
            return Err(serde::de::Error::custom(format!("edge id {bad} out of range")));
        }
        Ok(EdgeSubset::from_edges(ids))
    }
}

/// One edge of a multigraph. `tail == head` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: u32,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.tail {
            self.head
        } else {
            self.tail
        }
    }
}

/// The four graph families with closed-form polynomials and classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// A hub joined to `n` leaves.
    Star,
    /// One vertex carrying `n` loops.
    Flower,
    /// The `n`-cycle.
    Polygon,
    /// Two vertices joined by `n` parallel edges.
    Banana,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Star, Family::Flower, Family::Polygon, Family::Banana];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Flower => "flower",
            Family::Polygon => "polygon",
            Family::Banana => "banana",
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Family::Star | Family::Flower => 1,
            Family::Polygon | Family::Banana => 2,
        }
    }

    /// The family of the dual graph under the canonical embedding.
    pub fn dual(self) -> Family {
        match self {
            Family::Star => Family::Flower,
            Family::Flower => Family::Star,
            Family::Polygon => Family::Banana,
            Family::Banana => Family::Polygon,
        }
    }

    pub fn check_size(self, n: usize) -> Result<()> {
        if n < self.min_size() || n > MAX_EDGES {
            return Err(Error::InvalidFamilySize {
                family: self.name(),
                min: self.min_size(),
                n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Family::Star),
            "flower" => Ok(Family::Flower),
            "polygon" => Ok(Family::Polygon),
            "banana" => Ok(Family::Banana),
            other => Err(Error::Input(format!("unknown family '{other}'"))),
        }
    }
}

/// A finite multigraph whose edges carry the ids `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct MultigraphRepr {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MultigraphRepr::deserialize(d)?;
        Multigraph::from_edges(repr.vertex_count, repr.edges).map_err(serde::de::Error::custom)
    }
}

impl Multigraph {
    /// Builds a graph from endpoint pairs; edge ids are assigned `1, 2, ...`
    /// in iteration order.
    pub fn new<I>(vertex_count: usize, endpoints: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges = endpoints
            .into_iter()
            .enumerate()
            .map(|(i, (tail, head))| Edge {
                id: i as u32 + 1,
                tail,
                head,
            })
            .collect();
        Self::from_edges(vertex_count, edges)
    }

    /// Builds a graph from explicit edges, validating that the ids are
    /// exactly `1..=n` and every endpoint is in range.
    pub fn from_edges(vertex_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("vertex_count must be positive".into()));
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::InvalidGraph(format!(
                "{} edges exceeds the maximum of {MAX_EDGES}",
                edges.len()
            )));
        }
        edges.sort_by_key(|e| e.id);
        for (i, e) in edges.iter().enumerate() {
            if e.id as usize != i + 1 {
                return Err(Error::InvalidGraph(format!(
                    "edge ids must be exactly 1..={} without gaps or repeats",
                    edges.len()
                )));
            }
            if e.tail >= vertex_count || e.head >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {} has an endpoint outside 0..{vertex_count}",
                    e.id
                )));
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: u32) -> &Edge {
        &self.edges[id as usize - 1]
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub fn loops(&self) -> EdgeSubset {
        self.edges.iter().filter(|e| e.is_loop()).map(|e| e.id).collect()
    }

    /// Vertices touched by the given edges, ascending.
    pub fn incident_vertices(&self, edges: EdgeSubset) -> Vec<usize> {
        let set: BTreeSet<usize> = edges
            .iter()
            .flat_map(|id| {
                let e = self.edge(id);
                [e.tail, e.head]
            })
            .collect();
        set.into_iter().collect()
    }

    /// Adjacency as `(edge id, neighbour)` lists; a loop appears twice at its vertex.
    pub fn adjacency(&self) -> Vec<Vec<(u32, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.tail].push((e.id, e.head));
            adj[e.head].push((e.id, e.tail));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.tail, e.head);
        }
        uf.components() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    /// All spanning trees, as edge subsets in ascending bitmask order.
    pub fn spanning_trees(&self) -> Result<Vec<EdgeSubset>> {
        self.require_connected()?;
        Ok(self.subgraph_spanning_trees(self.all_edges()))
    }

    /// Spanning trees of the subgraph formed by `edges` on the vertices they
    /// touch. The empty subgraph has exactly one (empty) spanning tree; a
    /// disconnected subgraph has none.
    pub fn subgraph_spanning_trees(&self, edges: EdgeSubset) -> Vec<EdgeSubset> {
        let candidates: Vec<Edge> = edges
            .iter()
            .map(|id| *self.edge(id))
            .filter(|e| !e.is_loop())
            .collect();
        let touched = self.incident_vertices(edges);
        let mut out = Vec::new();
        if touched.is_empty() {
            out.push(EdgeSubset::EMPTY);
            return out;
        }
        let needed = touched.len() - 1;
        let mut search = TreeSearch {
            graph_vertices: self.vertex_count,
            touched: &touched,
            candidates: &candidates,
            needed,
            out: &mut out,
        };
        search.run(0, UnionFind::new(self.vertex_count), EdgeSubset::EMPTY, 0);
        out.sort_unstable();
        out
    }

    /// Number of spanning trees by the matrix-tree theorem: the determinant
    /// of the Laplacian with one row and column removed.
    pub fn spanning_tree_count(&self) -> Result<u128> {
        self.require_connected()?;
        let v = self.vertex_count;
        if v == 1 {
            return Ok(1);
        }
        let m = v - 1;
        let mut lap = vec![vec![0i128; m]; m];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            let (a, b) = (e.tail, e.head);
            if a < m {
                lap[a][a] += 1;
            }
            if b < m {
                lap[b][b] += 1;
            }
            if a < m && b < m {
                lap[a][b] -= 1;
                lap[b][a] -= 1;
            }
        }
        let det = bareiss_determinant(lap)?;
        u128::try_from(det).map_err(|_| Error::Overflow("spanning tree count"))
    }

    /// Block (2-connected component) decomposition. Loops and bridges form
    /// their own blocks; a vertex lying in two or more blocks is a cut vertex.
    pub fn blocks(&self) -> Result<BlockDecomposition> {
        self.require_connected()?;
        let mut blocks = Vec::new();
        for e in self.edges.iter().filter(|e| e.is_loop()) {
            blocks.push(EdgeSubset::single(e.id));
        }
        let adj: Vec<Vec<(u32, usize)>> = self
            .adjacency()
            .into_iter()
            .map(|list| list.into_iter().filter(|&(id, _)| !self.edge(id).is_loop()).collect())
            .collect();
        let mut tarjan = Tarjan {
            adj: &adj,
            disc: vec![usize::MAX; self.vertex_count],
            low: vec![0; self.vertex_count],
            time: 0,
            stack: Vec::new(),
            blocks: &mut blocks,
        };
        tarjan.visit(0, None);
        blocks.sort_by_key(|b| b.bits().trailing_zeros());

        let mut membership = vec![0usize; self.vertex_count];
        for &b in &blocks {
            for v in self.incident_vertices(b) {
                membership[v] += 1;
            }
        }
        let cut_vertices = (0..self.vertex_count).filter(|&v| membership[v] >= 2).collect();
        Ok(BlockDecomposition {
            blocks,
            cut_vertices,
        })
    }

    /// Whether a block contains a cycle: a loop, or any block with two or more
    /// edges. A single non-loop edge (bridge) is acyclic.
    pub fn is_cyclic_block(&self, block: EdgeSubset) -> bool {
        match block.len() {
            0 => false,
            1 => self.edge(block.max_edge().unwrap()).is_loop(),
            _ => true,
        }
    }

    /// Builds a member of one of the four families with its canonical labeling.
    ///
    /// * star: hub `0`, edge `i` joins `0` to leaf `i`;
    /// * flower: vertex `0` carrying loops `1..=n`;
    /// * polygon: edge `i` joins `i - 1` to `i mod n`;
    /// * banana: every edge runs from `0` to `1`.
    pub fn family(kind: Family, n: usize) -> Result<Self> {
        kind.check_size(n)?;
        match kind {
            Family::Star => Self::new(n + 1, (1..=n).map(|i| (0, i))),
            Family::Flower => Self::new(1, (0..n).map(|_| (0, 0))),
            Family::Polygon => Self::new(n, (1..=n).map(|i| (i - 1, i % n))),
            Family::Banana => Self::new(2, (0..n).map(|_| (0, 1))),
        }
    }

    /// The wheel `W_k`: hub `0`, rim vertices `1..=k`, spokes `1..=k` from the
    /// hub to rim vertex `i`, rim edges `k + i` from rim `i` to rim `i + 1`.
    pub fn wheel(k: usize) -> Result<Self> {
        if !(3..=MAX_EDGES / 2).contains(&k) {
            return Err(Error::InvalidGraph(format!("wheel needs 3 <= k <= 32, got {k}")));
        }
        let spokes = (1..=k).map(|i| (0, i));
        let rim = (1..=k).map(|i| (i, i % k + 1));
        Self::new(k + 1, spokes.chain(rim))
    }

    /// Relabels edge ids by `perm`, where `perm[id - 1]` is the new id of `id`.
    pub fn relabel_edges(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.edges.len() {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: perm[e.id as usize - 1],
                ..*e
            })
            .collect();
        Self::from_edges(self.vertex_count, edges)
    }

    /// Whether some vertex bijection maps every edge of `self` onto the
    /// edge of `other` carrying the same id.
    pub fn is_isomorphic_preserving_ids(&self, other: &Multigraph) -> bool {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        if self
            .edges
            .iter()
            .zip(&other.edges)
            .any(|(a, b)| a.is_loop() != b.is_loop())
        {
            return false;
        }
        let mut fwd = vec![None; self.vertex_count];
        let mut bwd = vec![None; self.vertex_count];
        if !extend_vertex_map(self, other, 0, &mut fwd, &mut bwd) {
            return false;
        }
        // isolated vertices can be paired arbitrarily
        let unmatched_left = fwd.iter().filter(|m| m.is_none()).count();
        let unmatched_right = bwd.iter().filter(|m| m.is_none()).count();
        unmatched_left == unmatched_right
    }
}

fn extend_vertex_map(
    a: &Multigraph,
    b: &Multigraph,
    idx: usize,
    fwd: &mut Vec<Option<usize>>,
    bwd: &mut Vec<Option<usize>>,
) -> bool {
    let Some(ea) = a.edges.get(idx) else {
        return true;
    };
    let eb = b.edges[idx];
    let orientations = [(eb.tail, eb.head), (eb.head, eb.tail)];
    for (x, y) in orientations {
        let mut assigned = Vec::new();
        let ok = try_assign(ea.tail, x, fwd, bwd, &mut assigned)
            && try_assign(ea.head, y, fwd, bwd, &mut assigned);
        if ok && extend_vertex_map(a, b, idx + 1, fwd, bwd) {
            return true;
        }
        for (u, w) in assigned {
            fwd[u] = None;
            bwd[w] = None;
        }
        if eb.tail == eb.head {
            break;
        }
    }
    false
}

fn try_assign(
    u: usize,
    w: usize,
    fwd: &mut [Option<usize>],
    bwd: &mut [Option<usize>],
    assigned: &mut Vec<(usize, usize)>,
) -> bool {
    match (fwd[u], bwd[w]) {
        (Some(x), _) => x == w,
        (None, Some(_)) => false,
        (None, None) => {
            fwd[u] = Some(w);
            bwd[w] = Some(u);
            assigned.push((u, w));
            true
        }
    }
}

/// Maximal 2-connected pieces of a connected multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest edge id.
    pub blocks: Vec<EdgeSubset>,
    /// Vertices shared by two or more blocks, ascending.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn is_separable(&self) -> bool {
        !self.cut_vertices.is_empty()
    }
}

struct TreeSearch<'a> {
    graph_vertices: usize,
    touched: &'a [usize],
    candidates: &'a [Edge],
    needed: usize,
    out: &'a mut Vec<EdgeSubset>,
}

impl TreeSearch<'_> {
    fn run(&mut self, idx: usize, uf: UnionFind, chosen: EdgeSubset, size: usize) {
        if size == self.needed {
            self.out.push(chosen);
            return;
        }
        if self.candidates.len() - idx < self.needed - size {
            return;
        }
        let e = self.candidates[idx];
        if uf.find_const(e.tail) != uf.find_const(e.head) {
            let mut with = uf.clone();
            with.union(e.tail, e.head);
            self.run(idx + 1, with, chosen.union(EdgeSubset::single(e.id)), size + 1);
        }
        if self.can_still_span(&uf, idx + 1) {
            self.run(idx + 1, uf, chosen, size);
        }
    }

    fn can_still_span(&self, uf: &UnionFind, from: usize) -> bool {
        let mut probe = uf.clone();
        for e in &self.candidates[from..] {
            probe.union(e.tail, e.head);
        }
        let root = probe.find(self.touched[0]);
        debug_assert!(self.touched.iter().all(|&v| v < self.graph_vertices));
        self.touched.iter().all(|&v| probe.find(v) == root)
    }
}

struct Tarjan<'a> {
    adj: &'a [Vec<(u32, usize)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<u32>,
    blocks: &'a mut Vec<EdgeSubset>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<u32>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &(id, w) in &self.adj[u] {
            if Some(id) == parent_edge {
                continue;
            }
            if self.disc[w] == usize::MAX {
                self.stack.push(id);
                self.visit(w, Some(id));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = EdgeSubset::EMPTY;
                    while let Some(top) = self.stack.pop() {
                        block.insert(top);
                        if top == id {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(id);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn find_const(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.count
    }
}

/// Fraction-free Gaussian elimination; every intermediate is a minor of the
/// input, so the division at each step is exact.
fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]);
                let b = m[i][k].checked_mul(m[k][j]);
                let num = a
                    .zip(b)
                    .and_then(|(a, b)| a.checked_sub(b))
                    .ok_or(Error::Overflow("determinant"))?;
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Edges with no common cycle witness a separation; used by tests as a
/// block-free description of separability.
pub fn edges_on_common_cycle(g: &Multigraph) -> HashSet<(u32, u32)> {
    let n = g.edge_count();
    assert!(n <= 20, "cycle enumeration is exponential in the edge count");
    let mut pairs = HashSet::new();
    for bits in 1u64..(1u64 << n) {
        let subset = EdgeSubset::from_bits(bits);
        if is_simple_cycle(g, subset) {
            let ids = subset.to_vec();
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i + 1..] {
                    pairs.insert((a, b));
                }
            }
        }
    }
    pairs
}

/// A nonempty edge set forms a simple cycle when its vertices all have
/// degree two (a loop counts twice) and it is connected.
pub fn is_simple_cycle(g: &Multigraph, subset: EdgeSubset) -> bool {
    if subset.is_empty() {
        return false;
    }
    let mut degree = vec![0usize; g.vertex_count()];
    let mut uf = UnionFind::new(g.vertex_count());
    for id in subset.iter() {
        let e = g.edge(id);
        degree[e.tail] += 1;
        degree[e.head] += 1;
        uf.union(e.tail, e.head);
    }
    let verts = g.incident_vertices(subset);
    let root = uf.find(verts[0]);
    verts.iter().all(|&v| degree[v] == 2 && uf.find(v) == root)
}
