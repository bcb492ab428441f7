//! Exact branchwidth under any symmetric measure.
//!
//! The exact solver runs a dynamic program over bitmask-indexed subsets of
//! the ground set: `opt(F)` is the best achievable maximum over the splits
//! inside a subtree gathering `F`, including the cost `f(F)` of the tree edge
//! above it. Splits are enumerated by sub-mask iteration (`3^m` total), so
//! the default cap is 14 elements; `BRANCHDUAL_EXACT_CAP` overrides it.
//!
//! `bw_by_tree_enumeration` is an independent oracle that walks every
//! leaf-labeled unrooted cubic tree; it shares no code with the DP and is
//! used to cross-validate it.

use std::collections::BTreeSet;

use crate::decomposition::{BranchTree, SplitTree};
use crate::embedding::{EdgeId, EmbeddedGraph};
use crate::error::{Error, Result};
use crate::measures;

pub const DEFAULT_EXACT_CAP: usize = 14;

/// Cap on the exact solver's ground-set size, overridable through the
/// `BRANCHDUAL_EXACT_CAP` environment variable.
pub fn exact_cap() -> usize {
    std::env::var("BRANCHDUAL_EXACT_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_EXACT_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Delta,
    Mu,
}

#[derive(Debug, Clone)]
pub struct SolveResult<L: Ord + Clone> {
    pub value: u32,
    pub tree: BranchTree<L>,
    /// Number of DP states (or enumerated trees) examined.
    pub explored: u64,
}

const INF: u32 = u32::MAX;

/// Exact branchwidth of a symmetric set function on an arbitrary ground set.
/// Ties between optimal splits are broken toward the numerically smallest
/// first-part bitmask (bits ordered by ground position), so the witness tree
/// is reproducible.
pub fn exact_bw_set<L, F>(ground: &[L], mut f: F, cap: usize) -> Result<SolveResult<L>>
where
    L: Ord + Clone,
    F: FnMut(&BTreeSet<L>) -> u32,
{
    let m = ground.len();
    if m > cap {
        return Err(Error::SizeCap { size: m, cap });
    }
    {
        let uniq: BTreeSet<&L> = ground.iter().collect();
        if uniq.len() != m {
            return Err(Error::precondition("ground set has duplicates".to_string()));
        }
    }
    match m {
        0 => {
            return Ok(SolveResult {
                value: 0,
                tree: BranchTree::empty(),
                explored: 0,
            })
        }
        1 => {
            return Ok(SolveResult {
                value: 0,
                tree: BranchTree::single(ground[0].clone()),
                explored: 1,
            })
        }
        _ => {}
    }
    let full: usize = (1 << m) - 1;
    let subset_of = |mask: usize| -> BTreeSet<L> {
        ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect()
    };
    let mut fval = vec![0u32; full + 1];
    for (mask, slot) in fval.iter_mut().enumerate() {
        *slot = f(&subset_of(mask));
    }
    let mut opt = vec![INF; full + 1];
    let mut choice = vec![0usize; full + 1];
    let mut explored = 0u64;
    for mask in 1..=full {
        explored += 1;
        if mask.count_ones() == 1 {
            opt[mask] = fval[mask];
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let mut best = INF;
        let mut best_sub = 0usize;
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if sub & low != 0 {
                let other = mask ^ sub;
                let inner = opt[sub].max(opt[other]);
                // The top split does not pay f(full).
                let val = if mask == full {
                    inner
                } else {
                    inner.max(fval[mask])
                };
                if val < best || (val == best && sub < best_sub) {
                    best = val;
                    best_sub = sub;
                }
            }
            sub = (sub - 1) & mask;
        }
        opt[mask] = best;
        choice[mask] = best_sub;
    }
    let tree = BranchTree::from_split(&rebuild(full, &choice, ground))?;
    Ok(SolveResult {
        value: opt[full],
        tree,
        explored,
    })
}

fn rebuild<L: Ord + Clone>(mask: usize, choice: &[usize], ground: &[L]) -> SplitTree<L> {
    if mask.count_ones() == 1 {
        return SplitTree::Leaf(ground[mask.trailing_zeros() as usize].clone());
    }
    let sub = choice[mask];
    SplitTree::Node(
        Box::new(rebuild(sub, choice, ground)),
        Box::new(rebuild(mask ^ sub, choice, ground)),
    )
}

fn sorted_edges(g: &EmbeddedGraph) -> Vec<EdgeId> {
    g.edge_ids().collect()
}

/// Closure evaluating the requested measure on edge subsets of `g`.
pub fn measure_fn<'g>(
    g: &'g EmbeddedGraph,
    kind: MeasureKind,
) -> impl FnMut(&BTreeSet<EdgeId>) -> u32 + 'g {
    move |f: &BTreeSet<EdgeId>| match kind {
        MeasureKind::Delta => measures::delta(g, f),
        MeasureKind::Mu => measures::mu(g, f),
    }
}

/// Exact branchwidth of `g` under the chosen measure.
pub fn exact_bw(g: &EmbeddedGraph, kind: MeasureKind) -> Result<SolveResult<EdgeId>> {
    let ground = sorted_edges(g);
    exact_bw_set(&ground, measure_fn(g, kind), exact_cap())
}

/// Exact matroid branchwidth (`mu` measure).
pub fn exact_mu_bw(g: &EmbeddedGraph) -> Result<SolveResult<EdgeId>> {
    exact_bw(g, MeasureKind::Mu)
}

/// Exact branchwidth under `delta` restricted to connected decompositions:
/// every DP state `F` must span a connected subgraph and so must its
/// complement, which is precisely the connectedness condition on every tree
/// edge of the witness. For connected bridgeless hosts the optimum equals
/// the unrestricted branchwidth.
pub fn exact_connected_bw(g: &EmbeddedGraph) -> Result<SolveResult<EdgeId>> {
    if !g.is_connected() {
        return Err(Error::precondition(
            "connected-decomposition solver requires a connected graph".to_string(),
        ));
    }
    if g.has_bridges() {
        return Err(Error::precondition(
            "connected-decomposition solver requires a bridgeless graph".to_string(),
        ));
    }
    let ground = sorted_edges(g);
    let m = ground.len();
    let cap = exact_cap();
    if m > cap {
        return Err(Error::SizeCap { size: m, cap });
    }
    if m <= 1 {
        return exact_bw(g, MeasureKind::Delta);
    }
    let full: usize = (1 << m) - 1;
    let subset_of = |mask: usize| -> BTreeSet<EdgeId> {
        ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    };
    let mut fval = vec![0u32; full + 1];
    let mut valid = vec![false; full + 1];
    for mask in 1..full {
        let set = subset_of(mask);
        fval[mask] = measures::delta(g, &set);
        valid[mask] = measures::edge_set_connected(g, &set)
            && measures::edge_set_connected(g, &subset_of(full ^ mask));
    }
    let mut opt = vec![INF; full + 1];
    let mut choice = vec![0usize; full + 1];
    let mut explored = 0u64;
    for mask in 1..=full {
        if mask != full && !valid[mask] {
            continue;
        }
        explored += 1;
        if mask.count_ones() == 1 {
            opt[mask] = fval[mask];
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let mut best = INF;
        let mut best_sub = 0usize;
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if sub & low != 0 {
                let other = mask ^ sub;
                if valid[sub] && valid[other] && opt[sub] != INF && opt[other] != INF {
                    let inner = opt[sub].max(opt[other]);
                    let val = if mask == full {
                        inner
                    } else {
                        inner.max(fval[mask])
                    };
                    if val < best || (val == best && sub < best_sub) {
                        best = val;
                        best_sub = sub;
                    }
                }
            }
            sub = (sub - 1) & mask;
        }
        opt[mask] = best;
        choice[mask] = best_sub;
    }
    if opt[full] == INF {
        return Err(Error::invalid(
            "no connected decomposition found for a connected bridgeless graph".to_string(),
        ));
    }
    let tree = BranchTree::from_split(&rebuild(full, &choice, &ground))?;
    Ok(SolveResult {
        value: opt[full],
        tree,
        explored,
    })
}

/// Greedy recursive balanced bisection: at every level the first part grows
/// from the cheapest seed by repeatedly adding the element that keeps the
/// measure smallest, until it holds half the elements. Not optimal, but the
/// returned value always matches the returned tree.
pub fn heuristic_bw<L, F>(ground: &[L], mut f: F) -> Result<SolveResult<L>>
where
    L: Ord + Clone,
    F: FnMut(&BTreeSet<L>) -> u32,
{
    let mut sorted: Vec<L> = ground.to_vec();
    sorted.sort();
    {
        let uniq: BTreeSet<&L> = sorted.iter().collect();
        if uniq.len() != sorted.len() {
            return Err(Error::precondition("ground set has duplicates".to_string()));
        }
    }
    match sorted.len() {
        0 => {
            return Ok(SolveResult {
                value: 0,
                tree: BranchTree::empty(),
                explored: 0,
            })
        }
        1 => {
            return Ok(SolveResult {
                value: 0,
                tree: BranchTree::single(sorted[0].clone()),
                explored: 1,
            })
        }
        _ => {}
    }
    let mut explored = 0u64;
    let split = heuristic_split(&sorted, &mut f, &mut explored);
    let tree = BranchTree::from_split(&split)?;
    let value = tree.width(&mut f);
    Ok(SolveResult {
        value,
        tree,
        explored,
    })
}

fn heuristic_split<L, F>(elems: &[L], f: &mut F, explored: &mut u64) -> SplitTree<L>
where
    L: Ord + Clone,
    F: FnMut(&BTreeSet<L>) -> u32,
{
    if elems.len() == 1 {
        return SplitTree::Leaf(elems[0].clone());
    }
    let target = elems.len().div_ceil(2);
    let mut part: BTreeSet<L> = BTreeSet::new();
    let seed = elems
        .iter()
        .min_by_key(|l| {
            *explored += 1;
            f(&[(*l).clone()].into_iter().collect())
        })
        .unwrap()
        .clone();
    part.insert(seed);
    while part.len() < target {
        let next = elems
            .iter()
            .filter(|l| !part.contains(l))
            .min_by_key(|l| {
                let mut trial = part.clone();
                trial.insert((*l).clone());
                *explored += 1;
                f(&trial)
            })
            .unwrap()
            .clone();
        part.insert(next);
    }
    let left: Vec<L> = elems.iter().filter(|l| part.contains(l)).cloned().collect();
    let right: Vec<L> = elems.iter().filter(|l| !part.contains(l)).cloned().collect();
    SplitTree::Node(
        Box::new(heuristic_split(&left, f, explored)),
        Box::new(heuristic_split(&right, f, explored)),
    )
}

/// Heuristic branchwidth of a graph under the chosen measure.
pub fn heuristic_bw_graph(g: &EmbeddedGraph, kind: MeasureKind) -> Result<SolveResult<EdgeId>> {
    let ground = sorted_edges(g);
    heuristic_bw(&ground, measure_fn(g, kind))
}

/// Brute-force oracle: minimum width over every leaf-labeled unrooted cubic
/// tree on `m` leaves, built by iterative leaf insertion. `f` receives the
/// bitmask of one side of each tree-edge split (bit `i` is ground element
/// `i`). Independent of the DP above by construction.
pub fn bw_by_tree_enumeration<F>(m: usize, f: &mut F) -> u32
where
    F: FnMut(u32) -> u32,
{
    if m <= 1 {
        return 0;
    }
    // Nodes: leaves 0..m, internal nodes m..2m-2.
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut best = INF;
    enumerate_trees(&mut edges, 2, m, &mut best, f);
    best
}

fn enumerate_trees<F>(
    edges: &mut Vec<(usize, usize)>,
    next_leaf: usize,
    m: usize,
    best: &mut u32,
    f: &mut F,
) where
    F: FnMut(u32) -> u32,
{
    if next_leaf == m {
        let w = eval_tree(edges, m, f);
        *best = (*best).min(w);
        return;
    }
    // With k leaves placed there are k-2 internal nodes (none for k = 2),
    // numbered from m upward.
    let internal = m + (next_leaf - 2);
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        edges[i] = (a, internal);
        edges.push((internal, b));
        edges.push((internal, next_leaf));
        enumerate_trees(edges, next_leaf + 1, m, best, f);
        edges.pop();
        edges.pop();
        edges[i] = (a, b);
    }
}

fn eval_tree<F>(edges: &[(usize, usize)], m: usize, f: &mut F) -> u32
where
    F: FnMut(u32) -> u32,
{
    let n = 2 * m - 2;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    // Root at leaf 0; accumulate the leaf bitmask below every edge in
    // post-order.
    let mut below = vec![0u32; edges.len()];
    let mut order = Vec::with_capacity(n);
    let mut parent_edge = vec![usize::MAX; n];
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((x, pe)) = stack.pop() {
        parent_edge[x] = pe;
        order.push(x);
        for &(y, ei) in &adj[x] {
            if ei != pe {
                stack.push((y, ei));
            }
        }
    }
    let mut width = 0u32;
    for &x in order.iter().rev() {
        let mut mask = if x < m { 1u32 << x } else { 0 };
        for &(_, ei) in &adj[x] {
            if ei != parent_edge[x] {
                mask |= below[ei];
            }
        }
        if parent_edge[x] != usize::MAX {
            below[parent_edge[x]] = mask;
            width = width.max(f(mask));
        }
    }
    width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{self, deck, GenOptions};

    #[test]
    fn golden_small_branchwidths() {
        assert_eq!(
            exact_bw(&deck::cycle(4), MeasureKind::Delta).unwrap().value,
            2
        );
        assert_eq!(
            exact_bw(&deck::complete4(), MeasureKind::Delta)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            exact_bw(&deck::dipole(3), MeasureKind::Delta).unwrap().value,
            2
        );
        assert_eq!(
            exact_bw(&deck::path(2), MeasureKind::Delta).unwrap().value,
            0
        );
    }

    #[test]
    fn witness_matches_value() {
        for g in [deck::cycle(4), deck::complete4(), deck::wheel(4)] {
            for kind in [MeasureKind::Delta, MeasureKind::Mu] {
                let res = exact_bw(&g, kind).unwrap();
                assert_eq!(res.tree.width(measure_fn(&g, kind)), res.value);
            }
        }
    }

    #[test]
    fn mu_examples() {
        // Connected and bridgeless: both measures agree.
        let c4 = deck::cycle(4);
        assert_eq!(exact_mu_bw(&c4).unwrap().value, 2);
        assert_eq!(exact_mu_bw(&deck::complete4()).unwrap().value, 3);
        // With bridges mu-branchwidth can only be smaller.
        let p3 = deck::path(3);
        let bw = exact_bw(&p3, MeasureKind::Delta).unwrap().value;
        let mbw = exact_mu_bw(&p3).unwrap().value;
        assert!(mbw <= bw);
    }

    #[test]
    fn connected_variant_matches_exact() {
        for g in [
            deck::cycle(4),
            deck::complete4(),
            deck::dipole(3),
            deck::wheel(4),
        ] {
            let a = exact_bw(&g, MeasureKind::Delta).unwrap().value;
            let c = exact_connected_bw(&g).unwrap();
            assert_eq!(a, c.value);
            assert!(crate::decomposition::is_connected_decomposition(
                &g, &c.tree
            ));
        }
    }

    #[test]
    fn connected_variant_rejects_bridges() {
        assert!(exact_connected_bw(&deck::path(3)).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = deck::grid3x3_torus(); // 18 edges
        assert!(matches!(
            exact_bw(&g, MeasureKind::Delta),
            Err(Error::SizeCap { size: 18, .. })
        ));
    }

    #[test]
    fn heuristic_is_witness_consistent_and_bounded_below() {
        for g in [deck::cycle(4), deck::complete4()] {
            let h = heuristic_bw_graph(&g, MeasureKind::Delta).unwrap();
            assert_eq!(h.tree.width(measure_fn(&g, MeasureKind::Delta)), h.value);
            let exact = exact_bw(&g, MeasureKind::Delta).unwrap().value;
            assert!(h.value >= exact);
        }
        let k4 = deck::complete4();
        let h = heuristic_bw_graph(&k4, MeasureKind::Delta).unwrap().value;
        assert!((3..=4).contains(&h));
    }

    #[test]
    fn heuristic_on_planar_grid_at_the_cap() {
        // 3x3 grid, 12 edges; the embedding is irrelevant to the measures.
        use crate::embedding::{Sign, VertexId};
        let mut b = crate::embedding::EmbeddedGraph::builder();
        let v = |i: u32, j: u32| VertexId(3 * i + j);
        let mut next = 0u32;
        for i in 0..3 {
            for j in 0..2 {
                b.edge(EdgeId(next), v(i, j), v(i, j + 1), Sign::Plus);
                next += 1;
            }
        }
        for i in 0..2 {
            for j in 0..3 {
                b.edge(EdgeId(next), v(i, j), v(i + 1, j), Sign::Plus);
                next += 1;
            }
        }
        let g = b.build().unwrap();
        let exact = exact_bw(&g, MeasureKind::Delta).unwrap().value;
        assert_eq!(exact, 3);
        let h = heuristic_bw_graph(&g, MeasureKind::Delta).unwrap();
        assert_eq!(h.tree.width(measure_fn(&g, MeasureKind::Delta)), h.value);
        assert!(h.value >= exact);
    }

    #[test]
    fn dp_matches_enumeration_on_small_instances() {
        let opts = GenOptions::new(6, 2);
        let mut checked = 0;
        for (_, g) in gen::instances(5, 30, &opts).unwrap() {
            if g.num_edges() > 6 {
                continue;
            }
            for kind in [MeasureKind::Delta, MeasureKind::Mu] {
                let dp = exact_bw(&g, kind).unwrap().value;
                let ground = sorted_edges(&g);
                let mut f = measure_fn(&g, kind);
                let brute = bw_by_tree_enumeration(ground.len(), &mut |mask| {
                    let set: BTreeSet<EdgeId> = ground
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    f(&set)
                });
                assert_eq!(dp, brute);
                checked += 1;
            }
        }
        assert!(checked >= 20);
    }
}
