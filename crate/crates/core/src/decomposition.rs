//! Branch decompositions: unrooted trees whose internal nodes have degree
//! three and whose leaves are bijectively labeled by a ground set. Every tree
//! edge splits the ground set in two; the width of a decomposition under a
//! symmetric set function is the maximum value over these splits.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Display;
use std::str::FromStr;

use crate::embedding::{DualCorrespondence, EdgeId, EmbeddedGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{EmbeddedHypergraph, HyperedgeId};
use crate::measures;

/// An unrooted cubic tree with a leaf bijection to a ground set of labels.
///
/// Ground sets of size zero and one have no tree edges; their width is zero
/// by convention. A two-element ground set is the single-edge tree.
#[derive(Debug, Clone)]
pub struct BranchTree<L: Ord + Clone> {
    adj: Vec<Vec<usize>>,
    label: Vec<Option<L>>,
    leaf_of: BTreeMap<L, usize>,
}

/// A rooted description of a decomposition, produced by the solvers and by
/// the text parser; `BranchTree::from_split` forgets the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitTree<L> {
    Leaf(L),
    Node(Box<SplitTree<L>>, Box<SplitTree<L>>),
}

impl<L: Ord + Clone> BranchTree<L> {
    pub fn empty() -> Self {
        BranchTree {
            adj: Vec::new(),
            label: Vec::new(),
            leaf_of: BTreeMap::new(),
        }
    }

    pub fn single(l: L) -> Self {
        BranchTree {
            adj: vec![Vec::new()],
            label: vec![Some(l.clone())],
            leaf_of: [(l, 0)].into_iter().collect(),
        }
    }

    /// Caterpillar over the elements in the given order.
    pub fn caterpillar(elems: &[L]) -> Self {
        match elems.len() {
            0 => return Self::empty(),
            1 => return Self::single(elems[0].clone()),
            _ => {}
        }
        let mut split = SplitTree::Leaf(elems[elems.len() - 1].clone());
        for l in elems[1..elems.len() - 1].iter().rev() {
            split = SplitTree::Node(Box::new(SplitTree::Leaf(l.clone())), Box::new(split));
        }
        Self::from_split(&SplitTree::Node(
            Box::new(SplitTree::Leaf(elems[0].clone())),
            Box::new(split),
        ))
        .expect("caterpillar labels are distinct")
    }

    /// Builds the unrooted tree of a rooted split description: the two
    /// top-level subtrees are joined by a single edge.
    pub fn from_split(split: &SplitTree<L>) -> Result<Self> {
        let mut t = BranchTree::empty();
        match split {
            SplitTree::Leaf(l) => {
                t.new_leaf(l.clone())?;
            }
            SplitTree::Node(a, b) => {
                let ra = t.materialize(a)?;
                let rb = t.materialize(b)?;
                t.adj[ra].push(rb);
                t.adj[rb].push(ra);
            }
        }
        t.validate()?;
        Ok(t)
    }

    fn materialize(&mut self, split: &SplitTree<L>) -> Result<usize> {
        match split {
            SplitTree::Leaf(l) => self.new_leaf(l.clone()),
            SplitTree::Node(a, b) => {
                let ra = self.materialize(a)?;
                let rb = self.materialize(b)?;
                let x = self.adj.len();
                self.adj.push(vec![ra, rb]);
                self.label.push(None);
                self.adj[ra].push(x);
                self.adj[rb].push(x);
                Ok(x)
            }
        }
    }

    fn new_leaf(&mut self, l: L) -> Result<usize> {
        if self.leaf_of.contains_key(&l) {
            return Err(Error::invalid("duplicate leaf label".to_string()));
        }
        let idx = self.adj.len();
        self.adj.push(Vec::new());
        self.label.push(Some(l.clone()));
        self.leaf_of.insert(l, idx);
        Ok(idx)
    }

    pub fn num_leaves(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn ground_set(&self) -> BTreeSet<L> {
        self.leaf_of.keys().cloned().collect()
    }

    pub fn leaf_node(&self, l: &L) -> Option<usize> {
        self.leaf_of.get(l).copied()
    }

    pub fn label_of(&self, node: usize) -> Option<&L> {
        self.label.get(node).and_then(|x| x.as_ref())
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Tree edges as normalized `(min, max)` node pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks the degree condition (1 or 3, with labels exactly on the
    /// degree-one nodes), leaf bijectivity, and connectivity.
    pub fn validate(&self) -> Result<()> {
        let n = self.adj.len();
        if n == 0 {
            return Ok(());
        }
        let mut leaf_count = 0;
        for (i, nbrs) in self.adj.iter().enumerate() {
            let labeled = self.label[i].is_some();
            match (nbrs.len(), labeled, n) {
                (0, true, 1) => leaf_count += 1,
                (1, true, _) if n >= 2 => leaf_count += 1,
                (3, false, _) => {}
                _ => {
                    return Err(Error::invalid(format!(
                        "node {i} has degree {} (labeled: {labeled})",
                        nbrs.len()
                    )))
                }
            }
        }
        if leaf_count != self.leaf_of.len() {
            return Err(Error::invalid("leaf map is not a bijection".to_string()));
        }
        for (l, &node) in &self.leaf_of {
            if self.label[node].as_ref() != Some(l) {
                return Err(Error::invalid("leaf map mismatch".to_string()));
            }
        }
        // connectivity + edge count
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        let mut half_edges = self.adj[0].len();
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    half_edges += self.adj[y].len();
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        if count != n || half_edges != 2 * (n - 1) {
            return Err(Error::invalid("not a tree".to_string()));
        }
        Ok(())
    }

    /// The two leaf-label sets separated by a tree edge; the first component
    /// is the one containing the edge's smaller endpoint.
    pub fn bipartition(&self, edge: (usize, usize)) -> Result<(BTreeSet<L>, BTreeSet<L>)> {
        let (u, v) = (edge.0.min(edge.1), edge.0.max(edge.1));
        if u >= self.adj.len() || !self.adj[u].contains(&v) {
            return Err(Error::precondition(format!("unknown tree edge {u}-{v}")));
        }
        let mut side = BTreeSet::new();
        let mut seen = vec![false; self.adj.len()];
        seen[u] = true;
        seen[v] = true; // block the far endpoint
        let mut queue = VecDeque::from([u]);
        if let Some(l) = &self.label[u] {
            side.insert(l.clone());
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    if let Some(l) = &self.label[y] {
                        side.insert(l.clone());
                    }
                    queue.push_back(y);
                }
            }
        }
        let rest = self
            .leaf_of
            .keys()
            .filter(|l| !side.contains(l))
            .cloned()
            .collect();
        Ok((side, rest))
    }

    /// Maximum of the symmetric set function over all tree-edge splits; zero
    /// for ground sets of size at most one.
    pub fn width<F: FnMut(&BTreeSet<L>) -> u32>(&self, mut f: F) -> u32 {
        if self.num_leaves() <= 1 {
            return 0;
        }
        self.edges()
            .into_iter()
            .map(|e| {
                let (a, _) = self.bipartition(e).expect("edge exists");
                f(&a)
            })
            .max()
            .unwrap_or(0)
    }

    /// Rebuilds the derived leaf map from raw adjacency and labels.
    pub(crate) fn from_adj(adj: Vec<Vec<usize>>, label: Vec<Option<L>>) -> Result<Self> {
        let mut leaf_of = BTreeMap::new();
        for (i, l) in label.iter().enumerate() {
            if let Some(l) = l {
                if leaf_of.insert(l.clone(), i).is_some() {
                    return Err(Error::invalid("duplicate leaf label".to_string()));
                }
            }
        }
        let t = BranchTree { adj, label, leaf_of };
        t.validate()?;
        Ok(t)
    }

    /// Same tree with every leaf label pushed through a bijection.
    pub fn relabel<M: Ord + Clone>(&self, map: &BTreeMap<L, M>) -> Result<BranchTree<M>> {
        let mut label = Vec::with_capacity(self.label.len());
        let mut leaf_of = BTreeMap::new();
        for (i, l) in self.label.iter().enumerate() {
            match l {
                None => label.push(None),
                Some(l) => {
                    let m = map
                        .get(l)
                        .ok_or_else(|| {
                            Error::precondition("leaf label missing from relabeling".to_string())
                        })?
                        .clone();
                    if leaf_of.insert(m.clone(), i).is_some() {
                        return Err(Error::precondition(
                            "relabeling is not injective".to_string(),
                        ));
                    }
                    label.push(Some(m));
                }
            }
        }
        Ok(BranchTree {
            adj: self.adj.clone(),
            label,
            leaf_of,
        })
    }
}

impl<L: Ord + Clone + Display> BranchTree<L> {
    /// Canonical nested-parentheses form: rooted at the smallest leaf, with
    /// subtrees ordered by their smallest contained label. Two decompositions
    /// are equal as unrooted leaf-labeled trees exactly when these strings
    /// match.
    pub fn to_paren_string(&self) -> String {
        match self.num_leaves() {
            0 => "()".to_string(),
            1 => self.leaf_of.keys().next().unwrap().to_string(),
            _ => {
                let root_label = self.leaf_of.keys().next().unwrap();
                let root = self.leaf_of[root_label];
                let next = self.adj[root][0];
                let (s, _) = self.render(next, root);
                format!("({root_label},{s})")
            }
        }
    }

    fn render(&self, node: usize, from: usize) -> (String, L) {
        if let Some(l) = &self.label[node] {
            return (l.to_string(), l.clone());
        }
        let kids: Vec<usize> = self.adj[node]
            .iter()
            .copied()
            .filter(|&x| x != from)
            .collect();
        debug_assert_eq!(kids.len(), 2);
        let (s1, m1) = self.render(kids[0], node);
        let (s2, m2) = self.render(kids[1], node);
        if m1 <= m2 {
            (format!("({s1},{s2})"), m1)
        } else {
            (format!("({s2},{s1})"), m2)
        }
    }
}

impl<L: Ord + Clone + Display> BranchTree<L> {
    /// JSON mirror of the canonical parenthesized form: a leaf is its label
    /// as a string, an internal split is a two-element array.
    pub fn to_json_value(&self) -> serde_json::Value {
        fn render<L: Ord + Clone + Display>(
            t: &BranchTree<L>,
            node: usize,
            from: usize,
        ) -> (serde_json::Value, L) {
            if let Some(l) = &t.label[node] {
                return (serde_json::Value::String(l.to_string()), l.clone());
            }
            let kids: Vec<usize> = t.adj[node].iter().copied().filter(|&x| x != from).collect();
            let (a, ma) = render(t, kids[0], node);
            let (b, mb) = render(t, kids[1], node);
            if ma <= mb {
                (serde_json::Value::Array(vec![a, b]), ma)
            } else {
                (serde_json::Value::Array(vec![b, a]), mb)
            }
        }
        match self.num_leaves() {
            0 => serde_json::Value::Array(Vec::new()),
            1 => serde_json::Value::String(self.leaf_of.keys().next().unwrap().to_string()),
            _ => {
                let root_label = self.leaf_of.keys().next().unwrap();
                let root = self.leaf_of[root_label];
                let next = self.adj[root][0];
                let (rest, _) = render(self, next, root);
                serde_json::Value::Array(vec![
                    serde_json::Value::String(root_label.to_string()),
                    rest,
                ])
            }
        }
    }
}

impl<L: Ord + Clone + FromStr> BranchTree<L> {
    /// Parses the JSON mirror produced by [`BranchTree::to_json_value`].
    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        fn build<L: Ord + Clone + FromStr>(v: &serde_json::Value) -> Result<SplitTree<L>> {
            match v {
                serde_json::Value::String(s) => {
                    let label = s.parse().map_err(|_| Error::Parse {
                        line: 0,
                        msg: format!("bad leaf label {s:?}"),
                    })?;
                    Ok(SplitTree::Leaf(label))
                }
                serde_json::Value::Array(items) if items.len() == 2 => Ok(SplitTree::Node(
                    Box::new(build(&items[0])?),
                    Box::new(build(&items[1])?),
                )),
                other => Err(Error::Parse {
                    line: 0,
                    msg: format!("expected a leaf string or a pair, got {other}"),
                }),
            }
        }
        match v {
            serde_json::Value::Array(items) if items.is_empty() => Ok(Self::empty()),
            _ => Self::from_split(&build(v)?),
        }
    }

    /// Parses the nested-parentheses form produced by
    /// [`BranchTree::to_paren_string`] (any rooting is accepted).
    pub fn parse_paren(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(Self::empty());
        }
        let (split, rest) = parse_split(s)?;
        if !rest.trim_start().is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: format!("trailing input: {rest:?}"),
            });
        }
        Self::from_split(&split)
    }
}

fn parse_split<L: FromStr>(s: &str) -> Result<(SplitTree<L>, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('(') {
        let (a, rest) = parse_split(rest)?;
        let rest = rest.trim_start();
        let rest = rest.strip_prefix(',').ok_or(Error::Parse {
            line: 1,
            msg: "expected ','".to_string(),
        })?;
        let (b, rest) = parse_split(rest)?;
        let rest = rest.trim_start();
        let rest = rest.strip_prefix(')').ok_or(Error::Parse {
            line: 1,
            msg: "expected ')'".to_string(),
        })?;
        Ok((SplitTree::Node(Box::new(a), Box::new(b)), rest))
    } else {
        let end = s
            .find(|c: char| c == ',' || c == ')' || c == '(' || c.is_whitespace())
            .unwrap_or(s.len());
        if end == 0 {
            return Err(Error::Parse {
                line: 1,
                msg: "expected leaf label".to_string(),
            });
        }
        let label = s[..end].parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("bad leaf label {:?}", &s[..end]),
        })?;
        Ok((SplitTree::Leaf(label), &s[end..]))
    }
}

/// True when every tree edge splits `E(G)` into two sets that both span
/// connected subgraphs.
pub fn is_connected_decomposition(g: &EmbeddedGraph, t: &BranchTree<EdgeId>) -> bool {
    if t.num_leaves() <= 1 {
        return true;
    }
    t.edges().into_iter().all(|e| {
        let (a, b) = t.bipartition(e).expect("edge exists");
        measures::edge_set_connected(g, &a) && measures::edge_set_connected(g, &b)
    })
}

/// The same tree read over the dual ground set: each leaf label `e` becomes
/// the dual edge `e*`.
pub fn dual_decomposition(
    t: &BranchTree<EdgeId>,
    corr: &DualCorrespondence,
) -> Result<BranchTree<EdgeId>> {
    if t.ground_set() != corr.edge_bijection.keys().copied().collect() {
        return Err(Error::precondition(
            "decomposition ground set does not match the dual correspondence".to_string(),
        ));
    }
    t.relabel(&corr.edge_bijection)
}

/// Lifts a decomposition of a hypergraph to a decomposition of its incidence
/// graph: each leaf labeled by a star is replaced by a half-edge tree over
/// that star's incidence edges, grafted at a subdivision point of the chosen
/// attach edge. Arity-one stars keep their leaf (relabeled to the single
/// half-edge); for larger stars the caller may supply the half-edge trees,
/// otherwise caterpillars in rotation order are used — the choice never
/// affects the width, which is always attained on an original tree edge.
pub fn inc_lift(
    t: &BranchTree<HyperedgeId>,
    h: &EmbeddedHypergraph,
    half_trees: Option<&BTreeMap<HyperedgeId, (BranchTree<EdgeId>, (usize, usize))>>,
) -> Result<BranchTree<EdgeId>> {
    let hyperedges: BTreeSet<HyperedgeId> = h.hyperedge_ids().into_iter().collect();
    if t.ground_set() != hyperedges {
        return Err(Error::precondition(
            "decomposition ground set must be the hyperedge set".to_string(),
        ));
    }
    if t.num_leaves() == 0 {
        return Ok(BranchTree::empty());
    }
    let half_tree_for = |hid: HyperedgeId| -> Result<(BranchTree<EdgeId>, (usize, usize))> {
        let star: Vec<EdgeId> = h.incidence_edges(hid)?;
        if let Some(map) = half_trees {
            let (tree, attach) = map.get(&hid).ok_or_else(|| {
                Error::precondition(format!("missing half-edge tree for star {hid}"))
            })?;
            let want: BTreeSet<EdgeId> = star.iter().copied().collect();
            if tree.ground_set() != want {
                return Err(Error::precondition(format!(
                    "half-edge tree for star {hid} covers the wrong incidence edges"
                )));
            }
            let a = (attach.0.min(attach.1), attach.0.max(attach.1));
            if tree.num_leaves() >= 2 && !tree.edges().contains(&a) {
                return Err(Error::precondition(format!(
                    "attach edge {a:?} is not an edge of the half-edge tree for {hid}"
                )));
            }
            Ok((tree.clone(), a))
        } else {
            let tree = BranchTree::caterpillar(&star);
            let attach = if tree.num_leaves() >= 2 {
                let leaf = tree.leaf_node(&star[0]).expect("leaf exists");
                let nbr = tree.neighbors(leaf)[0];
                (leaf.min(nbr), leaf.max(nbr))
            } else {
                (0, 0)
            };
            Ok((tree, attach))
        }
    };
    // A single star: the lift is just its half-edge tree.
    if t.num_leaves() == 1 {
        let hid = *t.ground_set().iter().next().unwrap();
        return Ok(half_tree_for(hid)?.0);
    }
    let mut adj: Vec<Vec<usize>> = (0..t.num_nodes()).map(|i| t.neighbors(i).to_vec()).collect();
    let mut label: Vec<Option<EdgeId>> = vec![None; t.num_nodes()];
    for hid in hyperedges {
        let leaf = t.leaf_node(&hid).expect("leaf exists");
        let (half, attach) = half_tree_for(hid)?;
        if half.num_leaves() == 1 {
            label[leaf] = Some(*half.ground_set().iter().next().unwrap());
            continue;
        }
        // Graft: copy the half tree, cut its attach edge, and join both cut
        // ends to the (now internal) former leaf.
        let offset = adj.len();
        for node in 0..half.num_nodes() {
            adj.push(
                half.neighbors(node)
                    .iter()
                    .filter(|&&x| {
                        !((node, x) == attach || (x, node) == attach)
                    })
                    .map(|&x| x + offset)
                    .collect(),
            );
            label.push(half.label_of(node).copied());
        }
        adj[leaf].push(attach.0 + offset);
        adj[leaf].push(attach.1 + offset);
        adj[attach.0 + offset].push(leaf);
        adj[attach.1 + offset].push(leaf);
    }
    BranchTree::from_adj(adj, label)
}
