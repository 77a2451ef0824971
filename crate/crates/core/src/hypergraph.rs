//! 3-uniform hypergraphs and their elementary structure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A 3-edge, vertices in ascending order.
pub type Edge = [usize; 3];

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored ascending and the edge list is kept in lexicographic
/// order without duplicates. Isolated vertices are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformHypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl UniformHypergraph {
    /// Uniformity. Fixed for this crate.
    pub const RANK: usize = 3;

    /// Builds a hypergraph from edges given in any vertex order.
    ///
    /// Rejects out-of-range vertices, repeated vertices inside an edge and
    /// duplicate edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut out = Vec::new();
        for raw in edges {
            let mut e = raw;
            e.sort_unstable();
            if e[2] >= n {
                return invalid(format!("edge {raw:?} has a vertex outside 0..{n}"));
            }
            if e[0] == e[1] || e[1] == e[2] {
                return invalid(format!("edge {raw:?} repeats a vertex"));
            }
            out.push(e);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge {:?}", w[0]));
        }
        Ok(Self { n, edges: out })
    }

    /// Hypergraph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Caller guarantees the canonical in-memory invariants.
    pub(crate) fn from_canonical_parts(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e[0] < e[1] && e[1] < e[2] && e[2] < n));
        Self { n, edges }
    }

    /// `F4 = {abc, abd, bcd}` with `a, b, c, d = 0, 1, 2, 3`, padded with
    /// isolated vertices up to `n`.
    pub fn f4(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::UnsupportedSize {
                what: "n",
                value: n,
                supported: "n >= 4 for F4",
            });
        }
        Self::new(n, [[0, 1, 2], [0, 1, 3], [1, 2, 3]])
    }

    /// `F5 = {abc, abd, cde}` with `a..e = 0..4`, padded up to `n`.
    pub fn f5(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::UnsupportedSize {
                what: "n",
                value: n,
                supported: "n >= 5 for F5",
            });
        }
        Self::new(n, [[0, 1, 2], [0, 1, 3], [2, 3, 4]])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge lookup; `e` may be given in any vertex order.
    pub fn contains_edge(&self, e: [usize; 3]) -> bool {
        let mut e = e;
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return invalid(format!("vertex {v} outside 0..{}", self.n));
        }
        Ok(())
    }

    /// `E_v(G)`: the edges containing `v`.
    pub fn edges_at(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.contains(&v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges_at(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Two vertices are adjacent when some edge contains both.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.iter().any(|e| e.contains(&u) && e.contains(&v))
    }

    /// Link of `v`: all pairs that complete `v` to an edge.
    pub fn link(&self, v: usize) -> Result<LinkGraph> {
        self.check_vertex(v)?;
        let pairs = self.edges_at(v).map(|e| other_two(e, v)).collect();
        Ok(LinkGraph { host: v, pairs })
    }

    /// Shadow: all pairs covered by some edge.
    pub fn shadow(&self) -> ShadowGraph {
        let pairs = self
            .edges
            .iter()
            .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)]);
        SimpleGraph::from_pairs_unchecked(self.n, pairs)
    }

    /// Incidence lists: for each vertex, the other two vertices of each
    /// edge at that vertex.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.n];
        for &[a, b, c] in &self.edges {
            inc[a].push((b, c));
            inc[b].push((a, c));
            inc[c].push((a, b));
        }
        inc
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return invalid(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return invalid("not a permutation");
            }
        }
        Self::new(self.n, self.edges.iter().map(|e| e.map(|v| perm[v])))
    }

    /// Copy with one more edge. Fails if `e` is already present or invalid.
    pub fn with_edge(&self, e: [usize; 3]) -> Result<Self> {
        Self::new(self.n, self.edges.iter().copied().chain(std::iter::once(e)))
    }

    /// Copy without the edge at position `idx` of [`Self::edges`].
    pub fn without_edge_at(&self, idx: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Self::from_canonical_parts(self.n, edges)
    }

    /// Induced subgraph on `keep`, vertex labels unchanged.
    pub fn induced_edges<'a>(&'a self, keep: &'a [bool]) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges.iter().filter(move |e| e.iter().all(|&v| keep[v]))
    }

    /// Same graph on more vertices; the new ones are isolated.
    pub fn pad_to(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return invalid(format!("cannot shrink {} vertices to {n}", self.n));
        }
        Ok(Self::from_canonical_parts(n, self.edges.clone()))
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}{}{}", e[0], e[1], e[2])?;
        }
        f.write_str("}")
    }
}

fn other_two(e: &Edge, v: usize) -> (usize, usize) {
    match e.iter().position(|&x| x == v) {
        Some(0) => (e[1], e[2]),
        Some(1) => (e[0], e[2]),
        _ => (e[0], e[1]),
    }
}

/// The link `L_G(v)` of a vertex: pairs `{a, b}` with `{a, b, v}` an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub host: usize,
    /// Ascending pairs, lexicographically sorted.
    pub pairs: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }
}

/// A simple graph (2-uniform) on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// The shadow of a 3-graph is an ordinary simple graph.
pub type ShadowGraph = SimpleGraph;

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return invalid(format!("loop at vertex {a}"));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            if b >= n {
                return invalid(format!("edge ({a}, {b}) outside 0..{n}"));
            }
            out.push((a, b));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self { n, edges: out })
    }

    fn from_pairs_unchecked<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut edges: Vec<_> = pairs.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Self { n, edges }
    }

    /// Complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let edges = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b)));
        Self::from_pairs_unchecked(k, edges)
    }

    /// Cycle `C_k` for `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return invalid("a cycle needs at least 3 vertices");
        }
        Self::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// `t_3(n) = floor(n/3) * floor((n+1)/3) * floor((n+2)/3)`, the edge count
/// of `T_3(n)`.
pub fn t3(n: usize) -> u64 {
    let (a, b, c) = part_sizes(n);
    (a * b * c) as u64
}

fn part_sizes(n: usize) -> (usize, usize, usize) {
    (n / 3, (n + 1) / 3, (n + 2) / 3)
}

/// Complete 3-partite 3-graph with the given part sizes; parts occupy
/// consecutive index ranges in the given order.
pub fn complete_tripartite(sizes: [usize; 3]) -> UniformHypergraph {
    let n = sizes.iter().sum();
    let (s0, s1) = (sizes[0], sizes[0] + sizes[1]);
    let mut edges = Vec::with_capacity(sizes.iter().product());
    for a in 0..s0 {
        for b in s0..s1 {
            for c in s1..n {
                edges.push([a, b, c]);
            }
        }
    }
    UniformHypergraph::from_canonical_parts(n, edges)
}

/// `T_3(n)`: the balanced complete 3-partite 3-graph, parts of sizes
/// `floor(n/3)`, `floor((n+1)/3)`, `floor((n+2)/3)` on increasing index
/// ranges.
pub fn turan3(n: usize) -> Result<UniformHypergraph> {
    if n < 3 {
        return invalid(format!("T_3(n) needs n >= 3, got {n}"));
    }
    let (a, b, c) = part_sizes(n);
    Ok(complete_tripartite([a, b, c]))
}

/// Part index of each vertex of `turan3(n)`.
pub fn turan3_parts(n: usize) -> Vec<usize> {
    let (a, b, _) = part_sizes(n);
    (0..n)
        .map(|v| if v < a { 0 } else if v < a + b { 1 } else { 2 })
        .collect()
}
