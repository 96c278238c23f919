//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so that cut sizes and
//! subset membership tests in the solver's inner loop are single popcount /
//! mask operations.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard capacity of the representation: one machine word per vertex set.
pub const MAX_ORDER: usize = 64;

/// A set of vertices, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1 << v)
    }

    /// All vertices of a graph of the given order.
    #[inline]
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        if order == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Set difference.
    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within a graph of the given order.
    #[inline]
    pub fn complement(self, order: usize) -> VertexSet {
        VertexSet::full(order).minus(self)
    }

    /// Ascending iterator over the member vertices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An edge cut `[A : Aᶜ]`: the chosen side, its crossing edges and their count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub side_a: VertexSet,
    /// Crossing edges in canonical `(min, max)` lexicographic order.
    pub crossing_edges: Vec<(usize, usize)>,
    pub size: usize,
}

/// Undirected simple graph, adjacency as per-vertex bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

impl Graph {
    /// An edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            adj: vec![VertexSet::EMPTY; order],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Edges in canonical `(min, max)` lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        (d == self.max_degree()).then_some(d)
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = (next & within).minus(seen);
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.order {
            0 => true,
            _ => self.reachable_within(0, self.vertices()).len() == self.order,
        }
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within;
        while let Some(v) = rest.first() {
            let comp = self.reachable_within(v, within);
            out.push(comp);
            rest = rest.minus(comp);
        }
        out
    }

    /// Number of edges with both endpoints in `side`.
    pub fn induced_edge_count(&self, side: VertexSet) -> usize {
        side.iter()
            .map(|v| (self.adj[v] & side).len())
            .sum::<usize>()
            / 2
    }

    /// Degree of `v` inside the subgraph induced by `side`.
    pub fn degree_within(&self, v: usize, side: VertexSet) -> usize {
        (self.adj[v] & side).len()
    }

    /// Number of edges with exactly one endpoint in `side`. No validation;
    /// this is the solver's hot path.
    #[inline]
    pub fn cut_size(&self, side: VertexSet) -> usize {
        let outside = side.complement(self.order);
        side.iter().map(|v| (self.adj[v] & outside).len()).sum()
    }

    /// The cut `[A : Aᶜ]` for a nonempty proper subset `A`.
    pub fn cut_of(&self, side_a: VertexSet) -> Result<Cut> {
        if !side_a.minus(self.vertices()).is_empty() {
            return Err(Error::VertexOutOfRange {
                vertex: side_a.minus(self.vertices()).first().unwrap(),
                order: self.order,
            });
        }
        if side_a.is_empty() || side_a == self.vertices() {
            return Err(Error::ImproperCutSide);
        }
        let outside = side_a.complement(self.order);
        let mut crossing = Vec::new();
        for u in 0..self.order {
            let other = if side_a.contains(u) { outside } else { side_a };
            for v in (self.adj[u] & other).iter() {
                if v > u {
                    crossing.push((u, v));
                }
            }
        }
        let size = crossing.len();
        Ok(Cut {
            side_a,
            crossing_edges: crossing,
            size,
        })
    }

    /// Cut edges (bridges), by lowpoint DFS. Requires a connected graph.
    pub fn bridges(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut disc = vec![0u32; self.order];
        let mut low = vec![0u32; self.order];
        let mut out = Vec::new();
        if self.order > 0 {
            let mut time = 0;
            self.bridge_dfs(0, usize::MAX, &mut time, &mut disc, &mut low, &mut out);
        }
        out.sort_unstable();
        Ok(out)
    }

    fn bridge_dfs(
        &self,
        v: usize,
        parent: usize,
        time: &mut u32,
        disc: &mut [u32],
        low: &mut [u32],
        out: &mut Vec<(usize, usize)>,
    ) {
        *time += 1;
        disc[v] = *time;
        low[v] = *time;
        for w in self.adj[v].iter() {
            if disc[w] == 0 {
                self.bridge_dfs(w, v, time, disc, low, out);
                low[v] = low[v].min(low[w]);
                if low[w] > disc[v] {
                    out.push((v.min(w), v.max(w)));
                }
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    /// Edge connectivity `κ'`, by repeated unit-capacity max-flow from vertex
    /// 0 to every other vertex. Returns 0 for disconnected graphs and graphs
    /// of order below 2.
    pub fn edge_connectivity(&self) -> usize {
        if self.order < 2 || !self.is_connected() {
            return 0;
        }
        (1..self.order)
            .map(|t| self.max_flow_unit(0, t))
            .min()
            .unwrap()
    }

    fn max_flow_unit(&self, s: usize, t: usize) -> usize {
        let n = self.order;
        let mut residual = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            residual[u][v] = 1;
            residual[v][u] = 1;
        }
        let mut flow = 0;
        loop {
            // BFS for an augmenting path in the residual network.
            let mut parent = vec![usize::MAX; n];
            parent[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for v in 0..n {
                    if parent[v] == usize::MAX && residual[u][v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return flow;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                residual[u][v] -= 1;
                residual[v][u] += 1;
                v = u;
            }
            flow += 1;
        }
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[v] = Some(0);
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.order {
            let mut dist = vec![usize::MAX; self.order];
            let mut parent = vec![usize::MAX; self.order];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Disjoint union of `self` and `other` plus one edge between `v1` (in
    /// `self`) and `v2` (in `other`). The new edge is a bridge of the result.
    pub fn join_with_bridge(&self, v1: usize, other: &Graph, v2: usize) -> Result<Graph> {
        let total = self.order + other.order;
        if total > MAX_ORDER {
            return Err(Error::Capacity {
                order: total,
                max: MAX_ORDER,
            });
        }
        for (w, g) in [(v1, self), (v2, other)] {
            if w >= g.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: g.order,
                });
            }
        }
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.order + u, self.order + v)?;
        }
        g.add_edge(v1, self.order + v2)?;
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Parameters of a generalized Petersen graph `P(n, k)`.
///
/// Vertex convention: the outer vertex `u_i` is index `i` and the inner
/// vertex `v_i` is index `n + i`, for `0 <= i < n`. Edges are the outer cycle
/// `u_i u_{i+1}`, the spokes `u_i v_i`, and the inner edges `v_i v_{i+k}`,
/// subscripts modulo `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PetersenDescriptor {
    pub n: usize,
    pub k: usize,
}

impl PetersenDescriptor {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 || k < 1 || 2 * k >= n {
            return Err(Error::PetersenParameters { n, k });
        }
        if 2 * n > MAX_ORDER {
            return Err(Error::Capacity {
                order: 2 * n,
                max: MAX_ORDER,
            });
        }
        Ok(PetersenDescriptor { n, k })
    }

    #[inline]
    pub fn order(&self) -> usize {
        2 * self.n
    }

    #[inline]
    pub fn outer_vertex(&self, i: usize) -> usize {
        i % self.n
    }

    #[inline]
    pub fn inner_vertex(&self, i: usize) -> usize {
        self.n + i % self.n
    }

    /// All spokes `u_i v_i`, canonical order.
    pub fn spokes(&self) -> Vec<(usize, usize)> {
        (0..self.n).map(|i| (i, self.n + i)).collect()
    }

    /// Outer vertices as a set.
    pub fn outer_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Inner vertices as a set.
    pub fn inner_set(&self) -> VertexSet {
        VertexSet::full(2 * self.n).minus(VertexSet::full(self.n))
    }

    pub fn graph(&self) -> Graph {
        let (n, k) = (self.n, self.k);
        let mut g = Graph::empty(2 * n).expect("validated order");
        for i in 0..n {
            g.add_edge(self.outer_vertex(i), self.outer_vertex(i + 1)).unwrap();
            g.add_edge(self.outer_vertex(i), self.inner_vertex(i)).unwrap();
            g.add_edge(self.inner_vertex(i), self.inner_vertex(i + k)).unwrap();
        }
        g
    }
}

/// The generalized Petersen graph `P(n, k)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    Ok(PetersenDescriptor::new(n, k)?.graph())
}

/// Classic one-parameter graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` vertices.
    Path,
    /// Cycle on `n` vertices.
    Cycle,
    /// Star with `n` leaves (`n + 1` vertices, hub is vertex 0).
    Star,
    /// Wheel with an `n`-cycle rim (`n + 1` vertices, hub is vertex 0). The
    /// rim-size parameterization matches the star convention and is the one
    /// under which the known rna formula is exact for every `n`.
    Wheel,
    /// Complete graph on `n` vertices.
    Complete,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Complete => "complete",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "wheel" => Ok(Family::Wheel),
            "complete" => Ok(Family::Complete),
            other => Err(format!(
                "unknown family {other:?} (expected path, cycle, star, wheel or complete)"
            )),
        }
    }
}

/// Builds a member of one of the standard families.
pub fn family_graph(family: Family, n: usize) -> Result<Graph> {
    match family {
        Family::Path => {
            if n < 1 {
                return Err(Error::OutOfRange {
                    what: "path",
                    n,
                    requirement: "n >= 1",
                });
            }
            let mut g = Graph::empty(n)?;
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
            Ok(g)
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "cycle",
                    n,
                    requirement: "n >= 3",
                });
            }
            let mut g = Graph::empty(n)?;
            for i in 0..n {
                g.add_edge(i, (i + 1) % n)?;
            }
            Ok(g)
        }
        Family::Star => {
            if n < 1 {
                return Err(Error::OutOfRange {
                    what: "star",
                    n,
                    requirement: "n >= 1 leaves",
                });
            }
            let mut g = Graph::empty(n + 1)?;
            for i in 1..=n {
                g.add_edge(0, i)?;
            }
            Ok(g)
        }
        Family::Wheel => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "wheel",
                    n,
                    requirement: "a rim of n >= 3 vertices",
                });
            }
            let mut g = Graph::empty(n + 1)?;
            for i in 0..n {
                g.add_edge(1 + i, 1 + (i + 1) % n)?;
                g.add_edge(0, 1 + i)?;
            }
            Ok(g)
        }
        Family::Complete => {
            if n < 1 {
                return Err(Error::OutOfRange {
                    what: "complete graph",
                    n,
                    requirement: "n >= 1",
                });
            }
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
    }
}

/// The `p`-th power of the cycle `C_n`: vertices adjacent iff their cycle
/// distance is at most `p`. Degenerates to `K_n` once `2p >= n - 1`.
pub fn cycle_power(n: usize, p: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "cycle power",
            n,
            requirement: "n >= 3",
        });
    }
    if p < 1 {
        return Err(Error::OutOfRange {
            what: "cycle power",
            n: p,
            requirement: "p >= 1",
        });
    }
    let mut g = Graph::empty(n)?;
    let reach = p.min(n / 2); // cycle distances never exceed n/2
    for i in 0..n {
        for d in 1..=reach {
            g.add_edge(i, (i + d) % n)?;
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

/// Vertex naming convention for DOT output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameStyle {
    /// Plain numeric indices.
    Index,
    /// `u0..u{n-1}` for the outer ring, `v0..v{n-1}` for the inner ring.
    PetersenPairs { n: usize },
}

impl NameStyle {
    fn name(&self, v: usize) -> String {
        match *self {
            NameStyle::Index => format!("n{v}"),
            NameStyle::PetersenPairs { n } => {
                if v < n {
                    format!("u{v}")
                } else {
                    format!("v{}", v - n)
                }
            }
        }
    }
}

/// Renders the graph in DOT `graph {}` syntax. Edges listed in `negative`
/// (canonical `(min, max)` pairs) are drawn dashed.
pub fn to_dot(g: &Graph, names: NameStyle, negative: &[(usize, usize)]) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {};\n", names.name(v)));
    }
    for (u, v) in g.edges() {
        let dashed = negative.binary_search(&(u, v)).is_ok();
        if dashed {
            out.push_str(&format!(
                "  {} -- {} [style=dashed];\n",
                names.name(u),
                names.name(v)
            ));
        } else {
            out.push_str(&format!("  {} -- {};\n", names.name(u), names.name(v)));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// JSON form `{"order": n, "edges": [[a,b],...]}` with canonical edge order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            order: self.order,
            edges: self.edges(),
        })
        .expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidJson(e.to_string()))?;
        Graph::new(raw.order, &raw.edges)
    }
}
