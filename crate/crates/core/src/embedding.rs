//! Multigraphs cellularly embedded on surfaces, encoded as signed rotation
//! systems (embedding schemes).
//!
//! Every edge owns two darts (half-edge ends). A scheme consists of `sigma`,
//! the cyclic order of darts around each vertex, `theta`, the fixed-point-free
//! involution pairing the two darts of every edge, and a `+`/`-` sign per edge
//! recording whether the local orientations at its endpoints agree. All-plus
//! schemes describe orientable embeddings; minus signs add crosscaps.
//!
//! Faces, Euler genus and duals are computed through an internal flag
//! representation (see `flags`); contraction and deletion are performed
//! directly on the scheme and keep surviving edge identifiers stable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::FlagSystem;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(
            Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl std::str::FromStr for $name {
            type Err = std::num::ParseIntError;
            fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
                Ok($name(s.parse()?))
            }
        }
    };
}

id_type!(
    /// Stable vertex identifier.
    VertexId
);
id_type!(
    /// Stable edge identifier. Contraction and deletion never renumber
    /// surviving edges.
    EdgeId
);
id_type!(
    /// One of the two half-edge ends of an edge.
    DartId
);
id_type!(
    /// Face identifier produced by face tracing, ordered by smallest
    /// contained dart side.
    FaceId
);

/// Edge sign of an embedding scheme: `Plus` if the local orientations at the
/// two endpoints agree across the edge, `Minus` if the edge is twisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Which corner of a dart a face walk passes through: `Next` is the corner
/// between the dart and its rotation successor, `Prev` the corner between its
/// rotation predecessor and the dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Next,
    Prev,
}

/// One step of a face boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DartSide {
    pub dart: DartId,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRec {
    pub darts: (DartId, DartId),
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Loop,
    Bridge,
    Ordinary,
}

/// A face of the embedding: the cyclic boundary walk as a sequence of dart
/// sides. Faces of isolated vertices have empty walks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: FaceId,
    pub walk: Vec<DartSide>,
}

impl Face {
    /// Number of edge traversals along the boundary (each flag pair is one).
    pub fn degree(&self) -> usize {
        self.walk.len() / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSet {
    pub faces: Vec<Face>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// The dual graph together with the bookkeeping needed to move sets and
/// decompositions across the duality: `edge_bijection` maps each edge `e` to
/// its dual edge `e*` (identifiers are preserved, so this is the identity on
/// ids), and `vertex_of_face` maps each face of the primal to the dual vertex
/// placed inside it.
#[derive(Debug, Clone)]
pub struct DualCorrespondence {
    pub graph: EmbeddedGraph,
    pub edge_bijection: BTreeMap<EdgeId, EdgeId>,
    pub vertex_of_face: BTreeMap<FaceId, VertexId>,
}

/// A multigraph with a signed rotation system.
///
/// Invariants (checked by [`EmbeddedGraph::validate`]):
/// * the rotation lists partition the darts, one list per vertex;
/// * every edge owns exactly two distinct darts;
/// * every dart belongs to exactly one edge and one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotations: BTreeMap<VertexId, Vec<DartId>>,
    edges: BTreeMap<EdgeId, EdgeRec>,
    dart_vertex: BTreeMap<DartId, VertexId>,
    dart_edge: BTreeMap<DartId, EdgeId>,
}

impl EmbeddedGraph {
    pub fn new() -> Self {
        EmbeddedGraph {
            rotations: BTreeMap::new(),
            edges: BTreeMap::new(),
            dart_vertex: BTreeMap::new(),
            dart_edge: BTreeMap::new(),
        }
    }

    /// Builds a graph from explicit rotations and edge records and validates
    /// the scheme invariants.
    pub fn from_parts(
        rotations: BTreeMap<VertexId, Vec<DartId>>,
        edges: BTreeMap<EdgeId, EdgeRec>,
    ) -> Result<Self> {
        let mut dart_vertex = BTreeMap::new();
        for (&v, rot) in &rotations {
            for &d in rot {
                if dart_vertex.insert(d, v).is_some() {
                    return Err(Error::invalid(format!("dart {d} listed twice")));
                }
            }
        }
        let mut dart_edge = BTreeMap::new();
        for (&e, rec) in &edges {
            let (d1, d2) = rec.darts;
            if d1 == d2 {
                return Err(Error::invalid(format!("edge {e} pairs a dart with itself")));
            }
            for d in [d1, d2] {
                if !dart_vertex.contains_key(&d) {
                    return Err(Error::invalid(format!("edge {e} uses unknown dart {d}")));
                }
                if dart_edge.insert(d, e).is_some() {
                    return Err(Error::invalid(format!("dart {d} belongs to two edges")));
                }
            }
        }
        for &d in dart_vertex.keys() {
            if !dart_edge.contains_key(&d) {
                return Err(Error::invalid(format!("dart {d} belongs to no edge")));
            }
        }
        let g = EmbeddedGraph {
            rotations,
            edges,
            dart_vertex,
            dart_edge,
        };
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        // Rebuilding from parts re-runs every structural check.
        Self::from_parts(self.rotations.clone(), self.edges.clone()).map(|_| ())
    }

    pub fn builder() -> Builder {
        Builder::new()
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_darts(&self) -> usize {
        self.dart_vertex.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations.keys().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.rotations.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn edge(&self, e: EdgeId) -> Result<&EdgeRec> {
        self.edges.get(&e).ok_or(Error::UnknownEdge(e))
    }

    pub fn rotation(&self, v: VertexId) -> Result<&[DartId]> {
        self.rotations
            .get(&v)
            .map(|r| r.as_slice())
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations.get(&v).map_or(0, |r| r.len())
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        self.dart_vertex[&d]
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[&d]
    }

    /// The other dart of the same edge.
    pub fn theta(&self, d: DartId) -> DartId {
        let rec = &self.edges[&self.dart_edge[&d]];
        if rec.darts.0 == d {
            rec.darts.1
        } else {
            rec.darts.0
        }
    }

    pub fn sigma(&self, d: DartId) -> DartId {
        let rot = &self.rotations[&self.dart_vertex[&d]];
        let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
        rot[(i + 1) % rot.len()]
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        let rot = &self.rotations[&self.dart_vertex[&d]];
        let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Endpoints of an edge, in dart order (`darts.0`'s vertex first).
    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        let rec = self.edge(e)?;
        Ok((self.vertex_of(rec.darts.0), self.vertex_of(rec.darts.1)))
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.endpoints(e).map(|(u, v)| u == v).unwrap_or(false)
    }

    /// Edges incident to `v`, loops listed once.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out = BTreeSet::new();
        if let Some(rot) = self.rotations.get(&v) {
            for &d in rot {
                out.insert(self.edge_of(d));
            }
        }
        out.into_iter().collect()
    }

    /// Number of connected components and a deterministic labeling: component
    /// labels are assigned in order of each component's smallest vertex id.
    pub fn connected_components(&self) -> (usize, BTreeMap<VertexId, usize>) {
        let verts: Vec<VertexId> = self.vertex_ids().collect();
        let index: BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = Dsu::new(verts.len());
        for rec in self.edges.values() {
            let u = index[&self.vertex_of(rec.darts.0)];
            let v = index[&self.vertex_of(rec.darts.1)];
            dsu.union(u, v);
        }
        let mut labels = BTreeMap::new();
        let mut root_label: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in &verts {
            let r = dsu.find(index[&v]);
            let next = root_label.len();
            let label = *root_label.entry(r).or_insert(next);
            labels.insert(v, label);
        }
        (root_label.len(), labels)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().0 == 1
    }

    /// Classifies an edge as loop, bridge, or ordinary. Loops and bridges are
    /// mutually exclusive: a loop never changes the component count.
    pub fn classify_edge(&self, e: EdgeId) -> Result<EdgeClass> {
        let (u, v) = self.endpoints(e)?;
        if u == v {
            return Ok(EdgeClass::Loop);
        }
        let verts: Vec<VertexId> = self.vertex_ids().collect();
        let index: BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let mut dsu = Dsu::new(verts.len());
        for (&f, rec) in &self.edges {
            if f == e {
                continue;
            }
            dsu.union(
                index[&self.vertex_of(rec.darts.0)],
                index[&self.vertex_of(rec.darts.1)],
            );
        }
        if dsu.find(index[&u]) != dsu.find(index[&v]) {
            Ok(EdgeClass::Bridge)
        } else {
            Ok(EdgeClass::Ordinary)
        }
    }

    pub fn has_loops(&self) -> bool {
        self.edge_ids().any(|e| self.is_loop(e))
    }

    pub fn has_bridges(&self) -> bool {
        self.edge_ids()
            .any(|e| matches!(self.classify_edge(e), Ok(EdgeClass::Bridge)))
    }

    /// Deletes an edge. The induced rotation system is reinterpreted as a
    /// cellular embedding of the smaller graph; the Euler genus never grows.
    pub fn delete(&self, e: EdgeId) -> Result<EmbeddedGraph> {
        let rec = self.edge(e)?.clone();
        let mut g = self.clone();
        for d in [rec.darts.0, rec.darts.1] {
            let v = g.dart_vertex[&d];
            g.rotations.get_mut(&v).unwrap().retain(|&x| x != d);
            g.dart_vertex.remove(&d);
            g.dart_edge.remove(&d);
        }
        g.edges.remove(&e);
        Ok(g)
    }

    /// Reverses the local orientation at `v`: the rotation is reversed and
    /// every non-loop edge at `v` changes sign. This is a signature
    /// equivalence; faces and genus are unchanged.
    pub fn flip_vertex(&mut self, v: VertexId) {
        if let Some(rot) = self.rotations.get_mut(&v) {
            rot.reverse();
        }
        for e in self.incident_edges(v) {
            let (a, b) = self.endpoints(e).unwrap();
            if a != b {
                let rec = self.edges.get_mut(&e).unwrap();
                rec.sign = rec.sign.flip();
            }
        }
    }

    /// Contracts a non-loop edge: the rotations at the two endpoints are
    /// spliced together at the contracted darts. If the edge is twisted, one
    /// endpoint is flipped first so the splice is orientation-consistent.
    /// The Euler genus is preserved and all other edge ids survive unchanged.
    /// The merged vertex keeps the smaller of the two endpoint ids.
    pub fn contract(&self, e: EdgeId) -> Result<EmbeddedGraph> {
        let rec = self.edge(e)?.clone();
        let (u, v) = (self.vertex_of(rec.darts.0), self.vertex_of(rec.darts.1));
        if u == v {
            return Err(Error::precondition(format!(
                "cannot contract loop edge {e}"
            )));
        }
        let mut g = self.clone();
        if g.edges[&e].sign == Sign::Minus {
            g.flip_vertex(v);
        }
        debug_assert_eq!(g.edges[&e].sign, Sign::Plus);
        let (du, dv) = g.edges[&e].darts;
        let (du, dv) = if g.vertex_of(du) == u { (du, dv) } else { (dv, du) };
        let ru = rotation_after(&g.rotations[&u], du);
        let rv = rotation_after(&g.rotations[&v], dv);
        let keep = u.min(v);
        let gone = u.max(v);
        let mut merged = ru;
        merged.extend(rv);
        g.rotations.remove(&gone);
        g.rotations.insert(keep, merged.clone());
        for &d in &merged {
            g.dart_vertex.insert(d, keep);
        }
        for d in [du, dv] {
            g.dart_vertex.remove(&d);
            g.dart_edge.remove(&d);
        }
        g.edges.remove(&e);
        Ok(g)
    }

    /// Traces all faces of the scheme. Face orbits are enumerated from the
    /// smallest dart side, so the output is deterministic. Degree-zero
    /// vertices each contribute one face with an empty walk (an isolated
    /// vertex lies on its own sphere).
    pub fn trace_faces(&self) -> FaceSet {
        let flags = FlagSystem::from_graph(self);
        let mut faces = Vec::new();
        for orbit in flags.face_orbits() {
            let walk = orbit.iter().map(|&f| flags.dart_side(f)).collect();
            faces.push(Face {
                id: FaceId(faces.len() as u32),
                walk,
            });
        }
        for v in self.vertex_ids() {
            if self.degree(v) == 0 {
                faces.push(Face {
                    id: FaceId(faces.len() as u32),
                    walk: Vec::new(),
                });
            }
        }
        FaceSet { faces }
    }

    /// Euler genus of the surface determined by the scheme:
    /// `2*cc - |V| + |E| - |F|`. Zero for sphere embeddings, 1 for the
    /// projective plane, 2 for the torus and the Klein bottle.
    pub fn euler_genus(&self) -> u32 {
        let (cc, _) = self.connected_components();
        let f = self.trace_faces().len() as i64;
        let val = 2 * cc as i64 - self.num_vertices() as i64 + self.num_edges() as i64 - f;
        assert!(val >= 0, "negative Euler genus: scheme invariant broken");
        val as u32
    }

    /// Constructs the dual graph on the same surface. One dual vertex per
    /// face, one dual edge `e*` per edge `e` joining the faces incident to
    /// `e` (a loop when both sides of `e` lie on the same face). Edge ids are
    /// preserved across the duality and `dual(dual(G))` is isomorphic to `G`
    /// as an embedded graph.
    pub fn dual(&self) -> Result<DualCorrespondence> {
        if !self.is_connected() || self.num_vertices() == 0 {
            return Err(Error::precondition(
                "dual is defined for connected embedded graphs".to_string(),
            ));
        }
        if self.num_edges() == 0 {
            // A single vertex on the sphere is self-dual.
            let mut g = EmbeddedGraph::new();
            g.rotations.insert(VertexId(0), Vec::new());
            let mut vertex_of_face = BTreeMap::new();
            vertex_of_face.insert(FaceId(0), VertexId(0));
            return Ok(DualCorrespondence {
                graph: g,
                edge_bijection: BTreeMap::new(),
                vertex_of_face,
            });
        }
        let flags = FlagSystem::from_graph(self).dual();
        let converted = flags.to_graph();
        let graph = converted.graph;
        let edge_bijection = self.edge_ids().map(|e| (e, e)).collect();
        // Dual vertices are the face orbits of the primal, both enumerated in
        // ascending order of their smallest flag, so index i maps to index i.
        let vertex_of_face = graph
            .vertex_ids()
            .enumerate()
            .map(|(i, v)| (FaceId(i as u32), v))
            .collect();
        debug_assert_eq!(graph.euler_genus(), self.euler_genus());
        Ok(DualCorrespondence {
            graph,
            edge_bijection,
            vertex_of_face,
        })
    }

    pub(crate) fn rotations_map(&self) -> &BTreeMap<VertexId, Vec<DartId>> {
        &self.rotations
    }

    pub(crate) fn edges_map(&self) -> &BTreeMap<EdgeId, EdgeRec> {
        &self.edges
    }
}

impl Default for EmbeddedGraph {
    fn default() -> Self {
        Self::new()
    }
}

fn rotation_after(rot: &[DartId], d: DartId) -> Vec<DartId> {
    let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
    let mut out = Vec::with_capacity(rot.len() - 1);
    out.extend_from_slice(&rot[i + 1..]);
    out.extend_from_slice(&rot[..i]);
    out
}

/// Tests whether two connected embedded graphs are isomorphic as embedding
/// schemes under a prescribed edge correspondence. Isomorphism is checked at
/// the flag level, so it is insensitive to vertex/dart relabeling, to the
/// choice of local orientations (signature equivalence), and to global
/// reflection.
pub fn embedded_isomorphic(
    a: &EmbeddedGraph,
    b: &EmbeddedGraph,
    edge_map: &BTreeMap<EdgeId, EdgeId>,
) -> Result<bool> {
    if !a.is_connected() || !b.is_connected() {
        return Err(Error::precondition(
            "embedded isomorphism check requires connected graphs".to_string(),
        ));
    }
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    if a.num_edges() == 0 {
        return Ok(true);
    }
    if edge_map.len() != a.num_edges()
        || a.edge_ids().any(|e| !edge_map.contains_key(&e))
        || edge_map.values().any(|e| !b.has_edge(*e))
    {
        return Err(Error::precondition(
            "edge correspondence is not a bijection between the edge sets".to_string(),
        ));
    }
    let fa = FlagSystem::from_graph(a);
    let fb = FlagSystem::from_graph(b);
    Ok(fa.isomorphic(&fb, edge_map))
}

/// Incremental construction of an [`EmbeddedGraph`]. Darts are numbered in
/// creation order and appended to the endpoint rotations; rotations can be
/// overridden afterwards.
pub struct Builder {
    rotations: BTreeMap<VertexId, Vec<DartId>>,
    edges: BTreeMap<EdgeId, EdgeRec>,
    next_dart: u32,
}

impl Builder {
    pub fn new() -> Self {
        Builder {
            rotations: BTreeMap::new(),
            edges: BTreeMap::new(),
            next_dart: 0,
        }
    }

    pub fn vertex(&mut self, v: VertexId) -> &mut Self {
        self.rotations.entry(v).or_default();
        self
    }

    /// Adds an edge between `u` and `v` (equal ids give a loop); the two new
    /// darts are appended to the endpoint rotations in order.
    pub fn edge(&mut self, e: EdgeId, u: VertexId, v: VertexId, sign: Sign) -> &mut Self {
        let d1 = DartId(self.next_dart);
        let d2 = DartId(self.next_dart + 1);
        self.next_dart += 2;
        self.rotations.entry(u).or_default().push(d1);
        self.rotations.entry(v).or_default().push(d2);
        self.edges.insert(
            e,
            EdgeRec {
                darts: (d1, d2),
                sign,
            },
        );
        self
    }

    /// Overrides the rotation at `v`; the list must be a permutation of the
    /// darts already placed there.
    pub fn rotation(&mut self, v: VertexId, order: Vec<DartId>) -> &mut Self {
        self.rotations.insert(v, order);
        self
    }

    pub fn build(&self) -> Result<EmbeddedGraph> {
        EmbeddedGraph::from_parts(self.rotations.clone(), self.edges.clone())
    }
}

impl Default for Builder {
    fn default() -> Self {
        Self::new()
    }
}

/// Small union-find used by the component and classification routines.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    /// Returns true when the two elements were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::deck;

    fn v(n: u32) -> VertexId {
        VertexId(n)
    }

    fn e(n: u32) -> EdgeId {
        EdgeId(n)
    }

    #[test]
    fn triangle_has_two_faces_and_genus_zero() {
        let g = deck::cycle(3);
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 2);
        assert_eq!(g.euler_genus(), 0);
    }

    #[test]
    fn positive_loop_is_spherical() {
        let g = deck::bouquet(&[Sign::Plus]);
        assert_eq!(g.trace_faces().len(), 2);
        assert_eq!(g.euler_genus(), 0);
    }

    #[test]
    fn negative_loop_is_projective() {
        let g = deck::bouquet(&[Sign::Minus]);
        assert_eq!(g.trace_faces().len(), 1);
        assert_eq!(g.euler_genus(), 1);
    }

    #[test]
    fn deleting_negative_loop_drops_genus() {
        let g = deck::bouquet(&[Sign::Minus]);
        let h = g.delete(e(0)).unwrap();
        assert_eq!(h.num_edges(), 0);
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(h.euler_genus(), 0);
        assert_eq!(h.trace_faces().len(), 1);
    }

    #[test]
    fn face_walks_cover_every_dart_side_once() {
        for g in [deck::cycle(4), deck::complete4(), deck::dipole(3)] {
            let faces = g.trace_faces();
            let mut seen = BTreeSet::new();
            for f in &faces.faces {
                for &ds in &f.walk {
                    assert!(seen.insert(ds), "dart side visited twice");
                }
            }
            assert_eq!(seen.len(), 4 * g.num_edges());
        }
    }

    #[test]
    fn components_and_classification() {
        let mut b = EmbeddedGraph::builder();
        b.edge(e(0), v(0), v(1), Sign::Plus)
            .edge(e(1), v(1), v(2), Sign::Plus)
            .edge(e(2), v(3), v(3), Sign::Plus)
            .vertex(v(4));
        let g = b.build().unwrap();
        let (cc, labels) = g.connected_components();
        assert_eq!(cc, 3);
        assert_eq!(labels[&v(0)], labels[&v(2)]);
        assert_ne!(labels[&v(0)], labels[&v(3)]);
        assert_eq!(g.classify_edge(e(0)).unwrap(), EdgeClass::Bridge);
        assert_eq!(g.classify_edge(e(2)).unwrap(), EdgeClass::Loop);
        let c4 = deck::cycle(4);
        for i in 0..4 {
            assert_eq!(c4.classify_edge(e(i)).unwrap(), EdgeClass::Ordinary);
        }
        assert_eq!(EmbeddedGraph::new().connected_components().0, 0);
    }

    #[test]
    fn contraction_preserves_ids_and_genus() {
        let c4 = deck::cycle(4);
        let g = c4.contract(e(0)).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(
            g.edge_set(),
            [e(1), e(2), e(3)].into_iter().collect::<BTreeSet<_>>()
        );
        assert_eq!(g.euler_genus(), 0);

        // C3 -> dipole -> loop, per the usual contraction cascade.
        let c3 = deck::cycle(3);
        let dip = c3.contract(e(0)).unwrap();
        assert_eq!(dip.num_vertices(), 2);
        assert_eq!(dip.num_edges(), 2);
        assert!(!dip.is_loop(e(1)) && !dip.is_loop(e(2)));
        let lp = dip.contract(e(1)).unwrap();
        assert_eq!(lp.num_vertices(), 1);
        assert!(lp.is_loop(e(2)));
        assert_eq!(lp.euler_genus(), 0);
    }

    #[test]
    fn contracting_loop_is_rejected() {
        let g = deck::bouquet(&[Sign::Plus]);
        assert!(matches!(g.contract(e(0)), Err(Error::Precondition(_))));
    }

    #[test]
    fn delete_examples() {
        let c3 = deck::cycle(3);
        let p = c3.delete(e(0)).unwrap();
        assert_eq!(p.num_vertices(), 3);
        assert_eq!(p.euler_genus(), 0);
        let k4 = deck::complete4();
        assert_eq!(k4.delete(e(0)).unwrap().euler_genus(), 0);
    }

    #[test]
    fn dual_of_triangle_is_dipole() {
        let c3 = deck::cycle(3);
        let dual = c3.dual().unwrap();
        assert_eq!(dual.graph.num_vertices(), 2);
        assert_eq!(dual.graph.num_edges(), 3);
        assert!(dual.graph.edge_ids().all(|x| !dual.graph.is_loop(x)));
        assert_eq!(dual.graph.euler_genus(), 0);
    }

    #[test]
    fn dual_of_positive_loop_is_bridge() {
        let g = deck::bouquet(&[Sign::Plus]);
        let dual = g.dual().unwrap();
        assert_eq!(dual.graph.num_vertices(), 2);
        assert_eq!(dual.graph.num_edges(), 1);
        assert!(!dual.graph.is_loop(e(0)));
        assert_eq!(dual.graph.euler_genus(), 0);
    }

    #[test]
    fn tetrahedron_is_self_dual() {
        let k4 = deck::complete4();
        assert_eq!(k4.euler_genus(), 0);
        let dual = k4.dual().unwrap();
        assert_eq!(dual.graph.num_vertices(), 4);
        assert_eq!(dual.graph.euler_genus(), 0);
        for x in dual.graph.edge_ids() {
            assert!(!dual.graph.is_loop(x));
        }
    }

    #[test]
    fn dual_is_an_involution() {
        for g in [
            deck::cycle(3),
            deck::cycle(5),
            deck::complete4(),
            deck::dipole(4),
            deck::bouquet(&[Sign::Minus]),
            deck::bouquet(&[Sign::Plus, Sign::Minus]),
        ] {
            let d1 = g.dual().unwrap();
            let d2 = d1.graph.dual().unwrap();
            let mut composed = BTreeMap::new();
            for (a, b) in &d1.edge_bijection {
                composed.insert(*a, d2.edge_bijection[b]);
            }
            for (a, b) in &composed {
                assert_eq!(a, b, "edge bijection must compose to the identity");
            }
            assert!(embedded_isomorphic(&g, &d2.graph, &composed).unwrap());
        }
    }

    #[test]
    fn flip_vertex_preserves_embedding() {
        let mut g = deck::complete4();
        let genus = g.euler_genus();
        let faces = g.trace_faces().len();
        g.flip_vertex(v(1));
        assert_eq!(g.euler_genus(), genus);
        assert_eq!(g.trace_faces().len(), faces);
        let id_map: BTreeMap<_, _> = g.edge_ids().map(|x| (x, x)).collect();
        assert!(embedded_isomorphic(&g, &deck::complete4(), &id_map).unwrap());
    }

    #[test]
    fn disconnected_dual_is_rejected() {
        let mut b = EmbeddedGraph::builder();
        b.edge(e(0), v(0), v(1), Sign::Plus)
            .edge(e(1), v(2), v(3), Sign::Plus);
        let g = b.build().unwrap();
        assert!(matches!(g.dual(), Err(Error::Precondition(_))));
    }

    #[test]
    fn from_parts_rejects_malformed_schemes() {
        // A dart shared by two edges.
        let mut rot = BTreeMap::new();
        rot.insert(v(0), vec![DartId(0), DartId(1), DartId(2)]);
        let mut edges = BTreeMap::new();
        edges.insert(
            e(0),
            EdgeRec {
                darts: (DartId(0), DartId(1)),
                sign: Sign::Plus,
            },
        );
        edges.insert(
            e(1),
            EdgeRec {
                darts: (DartId(1), DartId(2)),
                sign: Sign::Plus,
            },
        );
        assert!(EmbeddedGraph::from_parts(rot, edges).is_err());
    }
}
