//! Width measures on edge subsets: the border function `delta`, the graphic
//! rank `r` (spanning-forest size), the matroid connectivity function `mu`,
//! circuit rank, and fundamental cycle bases.
//!
//! All functions are pure and ignore the embedding; they see the host only as
//! an abstract multigraph.

use std::collections::{BTreeMap, BTreeSet};

use crate::embedding::{Dsu, EdgeId, EmbeddedGraph, VertexId};
use crate::error::{Error, Result};

/// A subset of the host's edges.
pub struct EdgeSubset<'g> {
    graph: &'g EmbeddedGraph,
    members: BTreeSet<EdgeId>,
}

impl<'g> EdgeSubset<'g> {
    pub fn new(graph: &'g EmbeddedGraph, members: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let members: BTreeSet<EdgeId> = members.into_iter().collect();
        for &e in &members {
            if !graph.has_edge(e) {
                return Err(Error::UnknownEdge(e));
            }
        }
        Ok(EdgeSubset { graph, members })
    }

    pub fn members(&self) -> &BTreeSet<EdgeId> {
        &self.members
    }

    pub fn complement(&self) -> BTreeSet<EdgeId> {
        self.graph
            .edge_ids()
            .filter(|e| !self.members.contains(e))
            .collect()
    }

    pub fn border(&self) -> BTreeSet<VertexId> {
        border(self.graph, &self.members)
    }

    pub fn delta(&self) -> u32 {
        self.border().len() as u32
    }

    pub fn rank(&self) -> u32 {
        rank(self.graph, &self.members)
    }

    pub fn mu(&self) -> u32 {
        mu(self.graph, &self.members)
    }

    pub fn circuit_rank(&self) -> u32 {
        circuit_rank(self.graph, &self.members)
    }

    pub fn cycle_basis(&self) -> CycleBasis {
        cycle_basis(self.graph, &self.members)
    }
}

/// A fundamental cycle basis: one cycle per non-forest edge of the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<BTreeSet<EdgeId>>,
}

/// Vertices incident both to an edge inside `f` and to one outside it.
pub fn border(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> BTreeSet<VertexId> {
    let mut inside: BTreeSet<VertexId> = BTreeSet::new();
    let mut outside: BTreeSet<VertexId> = BTreeSet::new();
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e).unwrap();
        let target = if f.contains(&e) {
            &mut inside
        } else {
            &mut outside
        };
        target.insert(u);
        target.insert(v);
    }
    inside.intersection(&outside).copied().collect()
}

pub fn delta(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> u32 {
    border(g, f).len() as u32
}

/// Size of a spanning forest of the edge set: the number of union-find merges
/// over the endpoints. Loops contribute nothing.
pub fn rank(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> u32 {
    let verts: Vec<VertexId> = subset_vertices(g, f).into_iter().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    let mut merges = 0;
    for &e in f {
        let (u, v) = g.endpoints(e).unwrap();
        if dsu.union(index[&u], index[&v]) {
            merges += 1;
        }
    }
    merges
}

/// The matroid connectivity function
/// `mu(F) = r(F) + r(E \ F) - r(E) + 1`. Symmetric in `F` and its
/// complement; `mu(empty) = 1` on any host.
pub fn mu(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> u32 {
    let all = g.edge_set();
    let complement: BTreeSet<EdgeId> = all.difference(f).copied().collect();
    let val = rank(g, f) as i64 + rank(g, &complement) as i64 - rank(g, &all) as i64 + 1;
    debug_assert!(val >= 1, "rank is subadditive");
    val as u32
}

/// Circuit rank of the subgraph spanned by `f`: `|F| - |V(G[F])| + cc(G[F])`,
/// with each loop counting as one independent cycle.
pub fn circuit_rank(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> u32 {
    let verts: Vec<VertexId> = subset_vertices(g, f).into_iter().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    let mut merges = 0usize;
    for &e in f {
        let (u, v) = g.endpoints(e).unwrap();
        if dsu.union(index[&u], index[&v]) {
            merges += 1;
        }
    }
    let cc = verts.len() - merges;
    let val = f.len() as i64 - verts.len() as i64 + cc as i64;
    debug_assert_eq!(val, f.len() as i64 - rank(g, f) as i64);
    val as u32
}

/// Fundamental cycle basis from a spanning forest of `G[F]`: one cycle per
/// non-forest edge, loops yielding singleton cycles. The basis has exactly
/// `circuit_rank(F)` cycles.
pub fn cycle_basis(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> CycleBasis {
    let verts: Vec<VertexId> = subset_vertices(g, f).into_iter().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    // forest adjacency: vertex -> (neighbor, edge)
    let mut forest: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> = BTreeMap::new();
    let mut non_forest = Vec::new();
    for &e in f {
        let (u, v) = g.endpoints(e).unwrap();
        if u != v && dsu.union(index[&u], index[&v]) {
            forest.entry(u).or_default().push((v, e));
            forest.entry(v).or_default().push((u, e));
        } else {
            non_forest.push(e);
        }
    }
    let mut cycles = Vec::new();
    for e in non_forest {
        let (u, v) = g.endpoints(e).unwrap();
        let mut cycle: BTreeSet<EdgeId> = BTreeSet::new();
        cycle.insert(e);
        for x in forest_path(&forest, u, v) {
            cycle.insert(x);
        }
        cycles.push(cycle);
    }
    CycleBasis { cycles }
}

/// Edges of the forest path between two vertices (empty for a loop's equal
/// endpoints).
fn forest_path(
    forest: &BTreeMap<VertexId, Vec<(VertexId, EdgeId)>>,
    from: VertexId,
    to: VertexId,
) -> Vec<EdgeId> {
    if from == to {
        return Vec::new();
    }
    let mut prev: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        if let Some(nbrs) = forest.get(&x) {
            for &(y, e) in nbrs {
                if y != from && !prev.contains_key(&y) {
                    prev.insert(y, (x, e));
                    queue.push_back(y);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, e) = prev[&cur];
        path.push(e);
        cur = p;
    }
    path.reverse();
    path
}

/// Vertices incident to at least one edge of the subset.
pub fn subset_vertices(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> BTreeSet<VertexId> {
    let mut out = BTreeSet::new();
    for &e in f {
        let (u, v) = g.endpoints(e).unwrap();
        out.insert(u);
        out.insert(v);
    }
    out
}

/// Whether the subgraph spanned by `f` (its edges plus the vertices they
/// touch) is nonempty and connected.
pub fn edge_set_connected(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> bool {
    if f.is_empty() {
        return false;
    }
    let verts: Vec<VertexId> = subset_vertices(g, f).into_iter().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    let mut merges = 0;
    for &e in f {
        let (u, v) = g.endpoints(e).unwrap();
        if dsu.union(index[&u], index[&v]) {
            merges += 1;
        }
    }
    merges == verts.len() - 1
}

/// Whether `e` is a bridge of the subgraph spanned by `f` (which must
/// contain `e`).
pub fn is_bridge_in_subset(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>, e: EdgeId) -> bool {
    debug_assert!(f.contains(&e));
    let (u, v) = match g.endpoints(e) {
        Ok(x) => x,
        Err(_) => return false,
    };
    if u == v {
        return false;
    }
    let verts: Vec<VertexId> = subset_vertices(g, f).into_iter().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut dsu = Dsu::new(verts.len());
    for &x in f {
        if x == e {
            continue;
        }
        let (a, b) = g.endpoints(x).unwrap();
        dsu.union(index[&a], index[&b]);
    }
    dsu.find(index[&u]) != dsu.find(index[&v])
}
