//! Flag ("blade") view of an embedding scheme.
//!
//! Every edge contributes four flags, one per (end, side) pair. Three
//! fixed-point-free involutions act on them:
//!
//! * `s0` walks along the edge to the other end, staying on the same side of
//!   the edge (an untwisted edge exchanges the local side labels, a twisted
//!   one keeps them);
//! * `s1` rotates within a corner to the adjacent edge end at the same
//!   vertex;
//! * `s2` flips to the other side of the same edge end.
//!
//! Vertices are the orbits of `<s1,s2>`, edges the orbits of `<s0,s2>`, faces
//! the orbits of `<s0,s1>`. Dualizing is exactly swapping `s0` and `s2`,
//! which makes the dual an involution by construction and keeps the Euler
//! genus unchanged.

use std::collections::BTreeMap;

use crate::embedding::{DartId, DartSide, EdgeId, EdgeRec, EmbeddedGraph, Side, Sign, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct FlagSystem {
    pub s0: Vec<u32>,
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    /// Edge label per flag, constant on `<s0,s2>` orbits.
    pub edge_label: Vec<EdgeId>,
    /// Present when built from a graph: the (dart, side) each flag encodes.
    dart_sides: Option<Vec<DartSide>>,
}

pub(crate) struct Converted {
    pub graph: EmbeddedGraph,
}

impl FlagSystem {
    pub fn from_graph(g: &EmbeddedGraph) -> FlagSystem {
        let darts: Vec<DartId> = g.rotations_map().values().flatten().copied().collect();
        let mut darts = darts;
        darts.sort();
        let pos: BTreeMap<DartId, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
        let n = 2 * darts.len();
        let flag = |d: DartId, side: usize| -> u32 { (2 * pos[&d] + side) as u32 };

        let mut s0 = vec![0u32; n];
        let mut s1 = vec![0u32; n];
        let mut s2 = vec![0u32; n];
        let mut edge_label = vec![EdgeId(0); n];
        let mut dart_sides = Vec::with_capacity(n);
        for &d in &darts {
            dart_sides.push(DartSide {
                dart: d,
                side: Side::Next,
            });
            dart_sides.push(DartSide {
                dart: d,
                side: Side::Prev,
            });
        }

        for i in 0..darts.len() {
            s2[2 * i] = (2 * i + 1) as u32;
            s2[2 * i + 1] = (2 * i) as u32;
        }
        for rot in g.rotations_map().values() {
            let k = rot.len();
            for i in 0..k {
                let d = rot[i];
                let dn = rot[(i + 1) % k];
                // corner between d and its successor dn
                s1[flag(d, 0) as usize] = flag(dn, 1);
                s1[flag(dn, 1) as usize] = flag(d, 0);
            }
        }
        for (&e, rec) in g.edges_map() {
            let (d1, d2) = rec.darts;
            for side in 0..2 {
                let other = match rec.sign {
                    Sign::Plus => 1 - side,
                    Sign::Minus => side,
                };
                s0[flag(d1, side) as usize] = flag(d2, other);
                s0[flag(d2, other) as usize] = flag(d1, side);
            }
            for side in 0..2 {
                edge_label[flag(d1, side) as usize] = e;
                edge_label[flag(d2, side) as usize] = e;
            }
        }
        let sys = FlagSystem {
            s0,
            s1,
            s2,
            edge_label,
            dart_sides: Some(dart_sides),
        };
        sys.debug_check();
        sys
    }

    /// Raw constructor for synthetic systems (used by the hypergraph dual).
    pub fn from_raw(s0: Vec<u32>, s1: Vec<u32>, s2: Vec<u32>, edge_label: Vec<EdgeId>) -> Self {
        let sys = FlagSystem {
            s0,
            s1,
            s2,
            edge_label,
            dart_sides: None,
        };
        sys.debug_check();
        sys
    }

    fn debug_check(&self) {
        debug_assert!({
            let n = self.s0.len();
            (0..n).all(|x| {
                let inv = |p: &Vec<u32>| p[p[x] as usize] as usize == x && p[x] as usize != x;
                inv(&self.s0)
                    && inv(&self.s1)
                    && inv(&self.s2)
                    && self.s0[self.s2[x] as usize] == self.s2[self.s0[x] as usize]
            })
        });
    }

    pub fn len(&self) -> usize {
        self.s0.len()
    }

    /// Swaps the roles of vertices and faces.
    pub fn dual(mut self) -> FlagSystem {
        std::mem::swap(&mut self.s0, &mut self.s2);
        self.dart_sides = None;
        self
    }

    pub fn dart_side(&self, flag: u32) -> DartSide {
        self.dart_sides.as_ref().expect("graph-backed flags")[flag as usize]
    }

    pub fn face_orbits(&self) -> Vec<Vec<u32>> {
        dihedral_orbits(&self.s0, &self.s1)
    }

    pub fn vertex_orbits(&self) -> Vec<Vec<u32>> {
        dihedral_orbits(&self.s1, &self.s2)
    }

    /// Reconstructs an embedding scheme. Vertices are numbered in ascending
    /// order of the smallest flag of their orbit; darts likewise, so the
    /// output is deterministic. Edge ids are taken from the flag labels.
    pub fn to_graph(&self) -> Converted {
        let n = self.len();
        let vorbits = self.vertex_orbits();
        let mut chosen = vec![false; n];
        let mut dart_of_flag: BTreeMap<u32, DartId> = BTreeMap::new();
        let mut rotations = BTreeMap::new();
        let mut next_dart = 0u32;
        for (vi, orbit) in vorbits.iter().enumerate() {
            // One of the two orientation classes of the vertex: iterate
            // rho = s2 . s1, which advances to the next edge end.
            let x0 = orbit[0];
            let mut rot = Vec::new();
            let mut x = x0;
            loop {
                chosen[x as usize] = true;
                let d = DartId(next_dart);
                next_dart += 1;
                dart_of_flag.insert(x, d);
                rot.push(d);
                x = self.s2[self.s1[x as usize] as usize];
                if x == x0 {
                    break;
                }
            }
            rotations.insert(VertexId(vi as u32), rot);
        }
        let mut edges = BTreeMap::new();
        for orbit in dihedral_orbits(&self.s0, &self.s2) {
            assert_eq!(orbit.len(), 4, "edge orbit must have four flags");
            let label = self.edge_label[orbit[0] as usize];
            let mut ch: Vec<u32> = orbit
                .iter()
                .copied()
                .filter(|&f| chosen[f as usize])
                .collect();
            assert_eq!(ch.len(), 2, "one chosen flag per edge end");
            ch.sort_unstable();
            let (x, y) = (ch[0] as usize, ch[1] as usize);
            let sign = if self.s0[x] as usize == y {
                Sign::Minus
            } else {
                assert_eq!(self.s2[self.s0[x] as usize] as usize, y);
                Sign::Plus
            };
            let prev = edges.insert(
                label,
                EdgeRec {
                    darts: (dart_of_flag[&(x as u32)], dart_of_flag[&(y as u32)]),
                    sign,
                },
            );
            assert!(prev.is_none(), "duplicate edge label {label}");
        }
        let graph = EmbeddedGraph::from_parts(rotations, edges).expect("flag reconstruction");
        Converted { graph }
    }

    /// Checks for a flag bijection commuting with the three involutions and
    /// matching `edge_map` on labels. Requires connected systems.
    pub fn isomorphic(&self, other: &FlagSystem, edge_map: &BTreeMap<EdgeId, EdgeId>) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        if n == 0 {
            return true;
        }
        let target = match edge_map.get(&self.edge_label[0]) {
            Some(&t) => t,
            None => return false,
        };
        (0..n as u32)
            .filter(|&f| other.edge_label[f as usize] == target)
            .any(|cand| self.try_map(other, edge_map, cand))
    }

    fn try_map(&self, other: &FlagSystem, edge_map: &BTreeMap<EdgeId, EdgeId>, image0: u32) -> bool {
        let n = self.len();
        let mut img: Vec<Option<u32>> = vec![None; n];
        let mut used = vec![false; n];
        img[0] = Some(image0);
        used[image0 as usize] = true;
        let mut stack = vec![0u32];
        while let Some(x) = stack.pop() {
            let y = img[x as usize].unwrap();
            match edge_map.get(&self.edge_label[x as usize]) {
                Some(&t) if t == other.edge_label[y as usize] => {}
                _ => return false,
            }
            for (sa, sb) in [
                (&self.s0, &other.s0),
                (&self.s1, &other.s1),
                (&self.s2, &other.s2),
            ] {
                let nx = sa[x as usize];
                let ny = sb[y as usize];
                match img[nx as usize] {
                    Some(v) => {
                        if v != ny {
                            return false;
                        }
                    }
                    None => {
                        if used[ny as usize] {
                            return false;
                        }
                        img[nx as usize] = Some(ny);
                        used[ny as usize] = true;
                        stack.push(nx);
                    }
                }
            }
        }
        img.iter().all(|x| x.is_some())
    }
}

/// Orbits of the group generated by two fixed-point-free involutions. Each
/// orbit is an even cycle alternating `a`- and `b`-steps; the returned walk
/// starts at the smallest flag and applies `a` first. Orbits are listed in
/// ascending order of their smallest flag.
pub(crate) fn dihedral_orbits(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut seq = Vec::new();
        let mut cur = start;
        let mut use_a = true;
        loop {
            seq.push(cur);
            seen[cur as usize] = true;
            cur = if use_a {
                a[cur as usize]
            } else {
                b[cur as usize]
            };
            use_a = !use_a;
            if cur == start {
                break;
            }
        }
        out.push(seq);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::deck;

    #[test]
    fn roundtrip_through_flags_is_isomorphic() {
        for g in [
            deck::cycle(3),
            deck::complete4(),
            deck::dipole(3),
            deck::bouquet(&[Sign::Minus, Sign::Plus]),
        ] {
            let sys = FlagSystem::from_graph(&g);
            let back = sys.to_graph().graph;
            assert_eq!(back.num_vertices(), g.num_vertices());
            assert_eq!(back.num_edges(), g.num_edges());
            let id_map: BTreeMap<_, _> = g.edge_ids().map(|e| (e, e)).collect();
            assert!(crate::embedding::embedded_isomorphic(&g, &back, &id_map).unwrap());
        }
    }

    #[test]
    fn orbit_counts_match_structure() {
        let g = deck::complete4();
        let sys = FlagSystem::from_graph(&g);
        assert_eq!(sys.vertex_orbits().len(), 4);
        assert_eq!(dihedral_orbits(&sys.s0, &sys.s2).len(), 6);
        assert_eq!(sys.face_orbits().len(), 4);
    }
}
