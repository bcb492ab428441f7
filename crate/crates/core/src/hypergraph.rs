//! Embedded hypergraphs, represented through their embedded incidence graphs.
//!
//! A hyperedge is drawn as a star: a center point with one half-edge arc per
//! endpoint. The incidence graph has one node per hypergraph vertex and one
//! node per star center, and one edge per half-edge; a marking records which
//! nodes are centers. Faces of the hypergraph are the faces of this incidence
//! embedding, since both occupy the same point set of the surface.
//!
//! The dual hypergraph keeps every star center and grows one dual half-edge
//! per face corner around it, attached to the dual vertex of that face. This
//! is built on the flag level (each corner contributes a spoke with two ends
//! and two sides) and reuses the generic flag-to-scheme conversion, so the
//! Euler genus is preserved by construction.

use std::collections::{BTreeMap, BTreeSet};

use crate::embedding::{EdgeClass, EdgeId, EmbeddedGraph, VertexId};
use crate::error::{Error, Result};
use crate::flags::{dihedral_orbits, FlagSystem};

/// Hyperedges are identified by their center node in the incidence graph.
pub type HyperedgeId = VertexId;

/// An embedded hypergraph: a loopless incidence embedding plus the marking of
/// the hyperedge-center nodes. Every incidence edge joins a center to a
/// vertex node, and every center has at least one half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedHypergraph {
    incidence: EmbeddedGraph,
    centers: BTreeSet<VertexId>,
}

/// The dual hypergraph plus the bookkeeping to move decompositions across:
/// stars correspond center-to-center and half-edges keep their incidence
/// edge ids.
#[derive(Debug, Clone)]
pub struct HyperDualCorrespondence {
    pub dual: EmbeddedHypergraph,
    pub star_bijection: BTreeMap<HyperedgeId, HyperedgeId>,
    pub half_edge_bijection: BTreeMap<EdgeId, EdgeId>,
}

impl EmbeddedHypergraph {
    pub fn new(incidence: EmbeddedGraph, centers: BTreeSet<VertexId>) -> Result<Self> {
        for &c in &centers {
            if !incidence.has_vertex(c) {
                return Err(Error::UnknownVertex(c));
            }
            if incidence.degree(c) == 0 {
                return Err(Error::invalid(format!("hyperedge {c} has no endpoints")));
            }
        }
        for e in incidence.edge_ids() {
            let (u, v) = incidence.endpoints(e)?;
            if centers.contains(&u) == centers.contains(&v) {
                return Err(Error::invalid(format!(
                    "incidence edge {e} must join a vertex node to a center"
                )));
            }
        }
        Ok(EmbeddedHypergraph { incidence, centers })
    }

    /// Wraps an ordinary graph as a hypergraph: every edge becomes an
    /// arity-two star whose center subdivides it.
    pub fn from_graph(g: &EmbeddedGraph) -> Result<Self> {
        let mut rotations: BTreeMap<VertexId, Vec<crate::embedding::DartId>> = BTreeMap::new();
        let mut edges: BTreeMap<EdgeId, crate::embedding::EdgeRec> = BTreeMap::new();
        let vmax = g.vertex_ids().map(|v| v.0).max().unwrap_or(0);
        let mut next_center = vmax + 1;
        let mut next_dart = 0u32;
        let mut centers = BTreeSet::new();
        let mut dart_map: BTreeMap<crate::embedding::DartId, crate::embedding::DartId> =
            BTreeMap::new();
        let mut next_edge = 0u32;
        for e in g.edge_ids() {
            let rec = g.edge(e)?;
            let center = VertexId(next_center);
            next_center += 1;
            centers.insert(center);
            let mut center_rot = Vec::new();
            for (i, d) in [rec.darts.0, rec.darts.1].into_iter().enumerate() {
                // Half-edge from the center toward the end the old dart d
                // occupied; the old edge's twist rides on the second half.
                let dv = crate::embedding::DartId(next_dart);
                let dc = crate::embedding::DartId(next_dart + 1);
                next_dart += 2;
                dart_map.insert(d, dv);
                center_rot.push(dc);
                let sign = if i == 1 {
                    rec.sign
                } else {
                    crate::embedding::Sign::Plus
                };
                edges.insert(
                    EdgeId(next_edge),
                    crate::embedding::EdgeRec {
                        darts: (dv, dc),
                        sign,
                    },
                );
                next_edge += 1;
            }
            rotations.insert(center, center_rot);
        }
        for v in g.vertex_ids() {
            let rot = g
                .rotation(v)?
                .iter()
                .map(|d| dart_map[d])
                .collect::<Vec<_>>();
            rotations.insert(v, rot);
        }
        let incidence = EmbeddedGraph::from_parts(rotations, edges)?;
        debug_assert_eq!(incidence.euler_genus(), g.euler_genus());
        EmbeddedHypergraph::new(incidence, centers)
    }

    /// The underlying embedded incidence graph, marking erased.
    pub fn incidence_graph(&self) -> EmbeddedGraph {
        self.incidence.clone()
    }

    pub fn incidence(&self) -> &EmbeddedGraph {
        &self.incidence
    }

    pub fn is_center(&self, v: VertexId) -> bool {
        self.centers.contains(&v)
    }

    pub fn centers(&self) -> &BTreeSet<VertexId> {
        &self.centers
    }

    pub fn hyperedge_ids(&self) -> Vec<HyperedgeId> {
        self.centers.iter().copied().collect()
    }

    pub fn num_hyperedges(&self) -> usize {
        self.centers.len()
    }

    pub fn vertex_nodes(&self) -> Vec<VertexId> {
        self.incidence
            .vertex_ids()
            .filter(|v| !self.centers.contains(v))
            .collect()
    }

    /// Incidence edges of a hyperedge, in the center's rotation order.
    pub fn incidence_edges(&self, h: HyperedgeId) -> Result<Vec<EdgeId>> {
        if !self.centers.contains(&h) {
            return Err(Error::UnknownVertex(h));
        }
        Ok(self
            .incidence
            .rotation(h)?
            .iter()
            .map(|&d| self.incidence.edge_of(d))
            .collect())
    }

    pub fn arity(&self, h: HyperedgeId) -> usize {
        self.incidence.degree(h)
    }

    /// Endpoints of a hyperedge with multiplicity, in rotation order.
    pub fn endpoints(&self, h: HyperedgeId) -> Result<Vec<VertexId>> {
        Ok(self
            .incidence_edges(h)?
            .into_iter()
            .map(|e| {
                let (u, v) = self.incidence.endpoints(e).unwrap();
                if self.centers.contains(&u) {
                    v
                } else {
                    u
                }
            })
            .collect())
    }

    /// Some but not all endpoints coincide: accepted as a non-loop, but
    /// surfaced in verification reports.
    pub fn has_coinciding_endpoints(&self, h: HyperedgeId) -> bool {
        let eps = self.endpoints(h).unwrap_or_default();
        let distinct: BTreeSet<VertexId> = eps.iter().copied().collect();
        distinct.len() > 1 && distinct.len() < eps.len()
    }

    pub fn is_connected(&self) -> bool {
        self.incidence.is_connected()
    }

    pub fn euler_genus(&self) -> u32 {
        self.incidence.euler_genus()
    }

    pub fn trace_faces(&self) -> crate::embedding::FaceSet {
        self.incidence.trace_faces()
    }

    /// Border of a set of hyperedges: vertices incident both to a hyperedge
    /// inside the set and to one outside it.
    pub fn hyper_border(&self, f: &BTreeSet<HyperedgeId>) -> BTreeSet<VertexId> {
        let mut inside = BTreeSet::new();
        let mut outside = BTreeSet::new();
        for h in self.hyperedge_ids() {
            let target = if f.contains(&h) {
                &mut inside
            } else {
                &mut outside
            };
            for v in self.endpoints(h).unwrap() {
                target.insert(v);
            }
        }
        inside.intersection(&outside).copied().collect()
    }

    pub fn hyper_delta(&self, f: &BTreeSet<HyperedgeId>) -> u32 {
        self.hyper_border(f).len() as u32
    }

    /// Loop: exactly one distinct endpoint. Bridge: removing the star
    /// disconnects the incidence structure. Ordinary otherwise.
    pub fn hyper_classify(&self, h: HyperedgeId) -> Result<EdgeClass> {
        let eps = self.endpoints(h)?;
        let distinct: BTreeSet<VertexId> = eps.iter().copied().collect();
        if distinct.len() == 1 {
            return Ok(EdgeClass::Loop);
        }
        let (before, _) = self.incidence.connected_components();
        let mut g = self.incidence.clone();
        for e in self.incidence_edges(h)? {
            g = g.delete(e)?;
        }
        // Remove the now-isolated center itself.
        let rotations: BTreeMap<_, _> = g
            .rotations_map()
            .iter()
            .filter(|(&v, _)| v != h)
            .map(|(&v, r)| (v, r.clone()))
            .collect();
        let g = EmbeddedGraph::from_parts(rotations, g.edges_map().clone())?;
        let (after, _) = g.connected_components();
        if after > before {
            Ok(EdgeClass::Bridge)
        } else {
            Ok(EdgeClass::Ordinary)
        }
    }

    pub fn has_hyper_loops(&self) -> bool {
        self.hyperedge_ids()
            .into_iter()
            .any(|h| matches!(self.hyper_classify(h), Ok(EdgeClass::Loop)))
    }

    pub fn has_hyper_bridges(&self) -> bool {
        self.hyperedge_ids()
            .into_iter()
            .any(|h| matches!(self.hyper_classify(h), Ok(EdgeClass::Bridge)))
    }

    /// Builds the dual hypergraph on the same surface. Each star center
    /// stays put; around it, every face corner contributes one dual
    /// half-edge reaching the dual vertex placed in that face, in the
    /// rotation induced by the center's rotation. Arities are preserved and
    /// half-edges keep their ids.
    pub fn hyper_dual(&self) -> Result<HyperDualCorrespondence> {
        if !self.is_connected() || self.centers.is_empty() {
            return Err(Error::precondition(
                "hypergraph dual requires a connected hypergraph with at least one star"
                    .to_string(),
            ));
        }
        let sys = FlagSystem::from_graph(&self.incidence);
        // Corner flags at star centers each spawn one dual spoke with two
        // ends: t = 0 at the center, t = 1 in the face.
        let darts_sorted: Vec<crate::embedding::DartId> = {
            let mut ds: Vec<_> = self
                .incidence
                .rotations_map()
                .values()
                .flatten()
                .copied()
                .collect();
            ds.sort();
            ds
        };
        let is_center_flag = |f: u32| -> bool {
            let d = darts_sorted[(f / 2) as usize];
            self.centers.contains(&self.incidence.vertex_of(d))
        };
        let center_flags: Vec<u32> = (0..sys.len() as u32)
            .filter(|&f| is_center_flag(f))
            .collect();
        let pos: BTreeMap<u32, usize> = center_flags
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let n = 2 * center_flags.len();
        let mut s0 = vec![0u32; n];
        let mut s1 = vec![0u32; n];
        let mut s2 = vec![0u32; n];
        let mut labels = vec![EdgeId(0); n];
        for (k, &x) in center_flags.iter().enumerate() {
            let xu = x as usize;
            // Walk along the spoke: same corner side, other end.
            s0[2 * k] = (2 * k + 1) as u32;
            s0[2 * k + 1] = (2 * k) as u32;
            // Flip spoke side: the corner's other flag.
            let side = pos[&sys.s1[xu]];
            s2[2 * k] = (2 * side) as u32;
            s2[2 * k + 1] = (2 * side + 1) as u32;
            // Rotate at the center end: across the dart to the next corner.
            let at_center = pos[&sys.s2[xu]];
            s1[2 * k] = (2 * at_center) as u32;
            // Rotate at the face end: the next corner pair along the face
            // walk (the incidence graph is bipartite, so s0 s1 s0 lands on a
            // center flag again).
            let nu = sys.s0[sys.s1[sys.s0[xu] as usize] as usize];
            debug_assert!(is_center_flag(nu));
            s1[2 * k + 1] = (2 * pos[&nu] + 1) as u32;
            // The spoke inherits the id of the incidence edge whose dart
            // faces this corner (each corner has exactly one next-side flag).
            let labeled_flag = if x % 2 == 0 { x } else { sys.s1[xu] };
            debug_assert_eq!(labeled_flag % 2, 0);
            let d = darts_sorted[(labeled_flag / 2) as usize];
            labels[2 * k] = self.incidence.edge_of(d);
            labels[2 * k + 1] = labels[2 * k];
        }
        let dual_sys = FlagSystem::from_raw(s0, s1, s2, labels);
        // Which new vertices are centers: the orbits made of t = 0 flags.
        let vorbits = dihedral_orbits(&dual_sys.s1, &dual_sys.s2);
        let mut dual_centers = BTreeSet::new();
        let mut star_bijection = BTreeMap::new();
        for (vi, orbit) in vorbits.iter().enumerate() {
            if orbit[0] % 2 == 0 {
                dual_centers.insert(VertexId(vi as u32));
                let old_center_flag = center_flags[(orbit[0] / 2) as usize];
                let d = darts_sorted[(old_center_flag / 2) as usize];
                let old_center = self.incidence.vertex_of(d);
                star_bijection.insert(old_center, VertexId(vi as u32));
            } else {
                debug_assert!(orbit.iter().all(|&f| f % 2 == 1));
            }
        }
        let graph = dual_sys.to_graph().graph;
        debug_assert_eq!(graph.euler_genus(), self.incidence.euler_genus());
        let dual = EmbeddedHypergraph::new(graph, dual_centers)?;
        let half_edge_bijection = self.incidence.edge_ids().map(|e| (e, e)).collect();
        for (&h, &hd) in &star_bijection {
            debug_assert_eq!(self.arity(h), dual.arity(hd));
        }
        Ok(HyperDualCorrespondence {
            dual,
            star_bijection,
            half_edge_bijection,
        })
    }
}

/// Whether an edge set forms a single cycle of the host: it spans a
/// connected subgraph in which every vertex has total incidence exactly two
/// (a loop is the one-edge cycle, a dipole pair the two-edge cycle).
pub fn is_cycle(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> bool {
    if f.is_empty() {
        return false;
    }
    if f.len() > 1 && !crate::measures::edge_set_connected(g, f) {
        return false;
    }
    let mut incidence: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &e in f {
        let (u, v) = match g.endpoints(e) {
            Ok(x) => x,
            Err(_) => return false,
        };
        *incidence.entry(u).or_insert(0) += 1;
        *incidence.entry(v).or_insert(0) += 1;
    }
    incidence.values().all(|&d| d == 2)
}

/// Whether an edge set traces a single closed walk: connected with every
/// vertex incidence even. The duals of a star's half-edges always form such
/// a walk through the corner faces around its center; the walk is a simple
/// cycle exactly when those faces are pairwise distinct, which can fail on
/// higher-genus embeddings where one face meets a center at several corners.
pub fn is_closed_walk(g: &EmbeddedGraph, f: &BTreeSet<EdgeId>) -> bool {
    if f.is_empty() {
        return false;
    }
    if f.len() > 1 && !crate::measures::edge_set_connected(g, f) {
        return false;
    }
    let mut incidence: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &e in f {
        let (u, v) = match g.endpoints(e) {
            Ok(x) => x,
            Err(_) => return false,
        };
        *incidence.entry(u).or_insert(0) += 1;
        *incidence.entry(v).or_insert(0) += 1;
    }
    incidence.values().all(|&d| d % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::Sign;
    use crate::gen::deck;

    fn star(endpoint_lists: &[&[u32]]) -> EmbeddedHypergraph {
        // Centers get ids 100, 101, ...; vertex nodes the listed ids.
        let mut b = EmbeddedGraph::builder();
        let mut next_edge = 0u32;
        let mut centers = BTreeSet::new();
        for (i, eps) in endpoint_lists.iter().enumerate() {
            let c = VertexId(100 + i as u32);
            centers.insert(c);
            for &v in eps.iter() {
                b.edge(EdgeId(next_edge), VertexId(v), c, Sign::Plus);
                next_edge += 1;
            }
        }
        EmbeddedHypergraph::new(b.build().unwrap(), centers).unwrap()
    }

    #[test]
    fn graph_as_hypergraph_subdivides() {
        let h = EmbeddedHypergraph::from_graph(&deck::cycle(3)).unwrap();
        assert_eq!(h.incidence().num_vertices(), 6);
        assert_eq!(h.incidence().num_edges(), 6);
        assert_eq!(h.num_hyperedges(), 3);
        assert_eq!(h.euler_genus(), 0);
        assert_eq!(h.trace_faces().len(), deck::cycle(3).trace_faces().len());
    }

    #[test]
    fn subdivision_keeps_genus_with_signs() {
        for g in [
            deck::bouquet(&[Sign::Minus]),
            deck::k5_projective(),
            deck::grid3x3_torus(),
        ] {
            let h = EmbeddedHypergraph::from_graph(&g).unwrap();
            assert_eq!(h.euler_genus(), g.euler_genus());
        }
    }

    #[test]
    fn single_star_shapes() {
        let h = star(&[&[0, 1, 2]]);
        assert_eq!(h.incidence().num_vertices(), 4);
        assert_eq!(h.arity(VertexId(100)), 3);
        assert_eq!(h.hyper_classify(VertexId(100)).unwrap(), EdgeClass::Bridge);

        let two = star(&[&[0, 1], &[1, 2]]);
        // Path on 5 nodes.
        assert_eq!(two.incidence().num_vertices(), 5);
        assert_eq!(two.incidence().num_edges(), 4);
        assert!(two.is_connected());
    }

    #[test]
    fn border_examples() {
        let two = star(&[&[0, 1], &[1, 2]]);
        let f: BTreeSet<VertexId> = [VertexId(100)].into_iter().collect();
        assert_eq!(
            two.hyper_border(&f),
            [VertexId(1)].into_iter().collect::<BTreeSet<_>>()
        );
        assert!(two.hyper_border(&BTreeSet::new()).is_empty());

        let c4 = EmbeddedHypergraph::from_graph(&deck::cycle(4)).unwrap();
        let ids = c4.hyperedge_ids();
        let f: BTreeSet<VertexId> = [ids[0], ids[1]].into_iter().collect();
        assert_eq!(c4.hyper_delta(&f), 2);
    }

    #[test]
    fn classify_examples() {
        let lonely = star(&[&[0]]);
        assert_eq!(
            lonely.hyper_classify(VertexId(100)).unwrap(),
            EdgeClass::Loop
        );
        let c4 = EmbeddedHypergraph::from_graph(&deck::cycle(4)).unwrap();
        for h in c4.hyperedge_ids() {
            assert_eq!(c4.hyper_classify(h).unwrap(), EdgeClass::Ordinary);
        }
        // Pendant star in a tree-like hypergraph.
        let t = star(&[&[0, 1], &[1, 2]]);
        assert_eq!(t.hyper_classify(VertexId(100)).unwrap(), EdgeClass::Bridge);
    }

    #[test]
    fn dual_of_graph_case_matches_graph_dual() {
        for g in [deck::cycle(3), deck::complete4()] {
            let h = EmbeddedHypergraph::from_graph(&g).unwrap();
            let hd = h.hyper_dual().unwrap();
            let gd = g.dual().unwrap();
            assert_eq!(hd.dual.vertex_nodes().len(), gd.graph.num_vertices());
            assert_eq!(hd.dual.num_hyperedges(), g.num_edges());
            assert_eq!(hd.dual.euler_genus(), g.euler_genus());
            // Every dual star of the graph case has arity two.
            for h_id in hd.dual.hyperedge_ids() {
                assert_eq!(hd.dual.arity(h_id), 2);
            }
        }
    }

    #[test]
    fn dual_preserves_arity_and_genus() {
        let h = star(&[&[0, 1, 2], &[0, 1], &[2, 0]]);
        let hd = h.hyper_dual().unwrap();
        assert_eq!(hd.dual.euler_genus(), h.euler_genus());
        for (hh, hdd) in &hd.star_bijection {
            assert_eq!(h.arity(*hh), hd.dual.arity(*hdd));
        }
        assert_eq!(hd.half_edge_bijection.len(), h.incidence().num_edges());
    }

    #[test]
    fn arity_one_star_dual_is_arity_one() {
        let h = star(&[&[0, 1], &[1, 0], &[0]]);
        let hd = h.hyper_dual().unwrap();
        let d = hd.star_bijection[&VertexId(102)];
        assert_eq!(hd.dual.arity(d), 1);
    }

    #[test]
    fn dual_star_edges_form_closed_walks_in_incidence_dual() {
        // On sphere embeddings the walks are genuine cycles; on higher-genus
        // schemes a face can meet a center at several corners, so only the
        // closed-walk property survives.
        for h in [
            EmbeddedHypergraph::from_graph(&deck::cycle(4)).unwrap(),
            EmbeddedHypergraph::from_graph(&deck::complete4()).unwrap(),
        ] {
            let inc_dual = h.incidence().dual().unwrap();
            for hid in h.hyperedge_ids() {
                let star_edges: BTreeSet<EdgeId> =
                    h.incidence_edges(hid).unwrap().into_iter().collect();
                assert!(is_cycle(&inc_dual.graph, &star_edges));
            }
        }
        let twisted = star(&[&[0, 1, 2], &[0, 1], &[2, 0]]);
        assert_eq!(twisted.euler_genus(), 2);
        let inc_dual = twisted.incidence().dual().unwrap();
        for hid in twisted.hyperedge_ids() {
            let star_edges: BTreeSet<EdgeId> =
                twisted.incidence_edges(hid).unwrap().into_iter().collect();
            assert!(is_closed_walk(&inc_dual.graph, &star_edges));
            assert!(!is_cycle(&inc_dual.graph, &star_edges));
        }
    }

    #[test]
    fn double_dual_returns_to_start() {
        let h = star(&[&[0, 1, 2], &[0, 1], &[2, 0]]);
        let d1 = h.hyper_dual().unwrap();
        let d2 = d1.dual.hyper_dual().unwrap();
        assert_eq!(d2.dual.num_hyperedges(), h.num_hyperedges());
        assert_eq!(d2.dual.vertex_nodes().len(), h.vertex_nodes().len());
        assert_eq!(d2.dual.euler_genus(), h.euler_genus());
        let mut a1: Vec<usize> = h.hyperedge_ids().iter().map(|&x| h.arity(x)).collect();
        let mut a2: Vec<usize> = d2
            .dual
            .hyperedge_ids()
            .iter()
            .map(|&x| d2.dual.arity(x))
            .collect();
        a1.sort_unstable();
        a2.sort_unstable();
        assert_eq!(a1, a2);
    }

    #[test]
    fn marking_is_validated() {
        let mut b = EmbeddedGraph::builder();
        b.edge(EdgeId(0), VertexId(0), VertexId(1), Sign::Plus);
        let g = b.build().unwrap();
        assert!(EmbeddedHypergraph::new(g.clone(), BTreeSet::new()).is_err());
        let both: BTreeSet<VertexId> = [VertexId(0), VertexId(1)].into_iter().collect();
        assert!(EmbeddedHypergraph::new(g, both).is_err());
    }
}
