//! Isomorphism-free enumeration of small connected cubic graphs.
//!
//! Generation backtracks over the vertex-pair slots in lexicographic order
//! with degree-capacity pruning. Symmetry is broken soundly by insisting on a
//! breadth-first-style labeling: vertex 0's neighbors are exactly {1, 2, 3},
//! every later vertex has a lower-numbered neighbor, untouched vertices are
//! brought in in increasing order, and the edge pattern among {1, 2, 3} is in
//! a fixed normal form. Every isomorphism class of connected cubic graphs
//! admits such a labeling (relabel by BFS discovery order, picking the root
//! neighbors to normalize their pattern), so no class is lost; the surviving
//! duplicates are removed via canonical forms.

use std::collections::HashSet;

use crate::graph::Graph;

/// Canonical form of a graph: the minimum adjacency encoding over vertex
/// orderings. Placing vertices one at a time, position `m` contributes the
/// column `col_m` whose bit `i` records adjacency to the vertex at position
/// `i < m`; the encoding is the sequence `(col_1, ..., col_{n-1})` compared
/// lexicographically. The first position is restricted to vertices whose
/// (isomorphism-invariant) local profile is minimal, which shrinks the search
/// without affecting the minimum. Two graphs are isomorphic iff their
/// canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();

    // invariant profile per vertex: degree, triangles through it, BFS layer sizes
    let profiles: Vec<(usize, usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let triangles: usize = g
                .neighbors(v)
                .iter()
                .map(|u| (g.neighbors(u) & g.neighbors(v)).len())
                .sum::<usize>()
                / 2;
            let dist = g.distances_from(v);
            let mut layers = vec![0usize; n + 1];
            for d in dist.iter() {
                match d {
                    Some(d) => layers[*d] += 1,
                    None => layers[n] += 1,
                }
            }
            (g.degree(v), triangles, layers)
        })
        .collect();
    let min_profile = profiles.iter().min().unwrap().clone();
    let starts: Vec<usize> = (0..n).filter(|&v| profiles[v] == min_profile).collect();

    struct Search<'a> {
        adj: &'a [u64],
        n: usize,
        cols: Vec<u64>,
        code: Vec<u64>,
        best: Vec<u64>,
        seeded: bool,
    }

    impl Search<'_> {
        fn twins(&self, v: usize, w: usize) -> bool {
            let (av, aw) = (self.adj[v], self.adj[w]);
            av == aw || (av & !(1 << w)) == (aw & !(1 << v))
        }

        /// Returns true when `best` was replaced somewhere in this subtree.
        fn descend(&mut self, pos: usize, placed_mask: u64, mut prefix_equal: bool) -> bool {
            if pos == self.n {
                if !self.seeded || !prefix_equal {
                    self.best = self.code.clone();
                    self.seeded = true;
                    return true;
                }
                return false;
            }
            let mut cands: Vec<(u64, usize)> = (0..self.n)
                .filter(|&v| placed_mask >> v & 1 == 0)
                .map(|v| (self.cols[v], v))
                .collect();
            cands.sort_unstable();
            let mut updated_any = false;
            let mut tried: Vec<(u64, usize)> = Vec::new();
            for (col, v) in cands {
                if self.seeded && prefix_equal && col > self.best[pos] {
                    break; // ascending order: the rest only get worse
                }
                // interchangeable twins yield identical subtrees
                if tried.iter().any(|&(c, w)| c == col && self.twins(v, w)) {
                    continue;
                }
                tried.push((col, v));
                let child_equal = self.seeded && prefix_equal && col == self.best[pos];
                self.code.push(col);
                let touched = self.adj[v] & !placed_mask & !(1 << v);
                let mut t = touched;
                while t != 0 {
                    let w = t.trailing_zeros() as usize;
                    t &= t - 1;
                    self.cols[w] |= 1 << pos;
                }
                let upd = self.descend(pos + 1, placed_mask | 1 << v, child_equal);
                let mut t = touched;
                while t != 0 {
                    let w = t.trailing_zeros() as usize;
                    t &= t - 1;
                    self.cols[w] &= !(1 << pos);
                }
                self.code.pop();
                if upd {
                    updated_any = true;
                    // the new best extends our current prefix
                    prefix_equal = true;
                }
            }
            updated_any
        }
    }

    let mut search = Search {
        adj: &adj,
        n,
        cols: vec![0u64; n],
        code: Vec::with_capacity(n),
        best: Vec::new(),
        seeded: false,
    };
    for &s in &starts {
        search.code.push(0);
        let touched = adj[s];
        let mut t = touched;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            search.cols[w] |= 1;
        }
        search.descend(1, 1 << s, search.seeded);
        let mut t = touched;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            search.cols[w] &= !1u64;
        }
        search.code.pop();
    }
    search.best
}

/// Whether two graphs are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// All connected cubic graphs of the given order, one per isomorphism class,
/// sorted by canonical form.
pub(crate) fn enumerate_cubic_classes(order: usize) -> Vec<Graph> {
    let n = order;
    // slots (i, j), i < j, rows 1.., with vertex 0 pre-wired to 1, 2, 3
    let mut slots = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            slots.push((i, j));
        }
    }

    struct Gen {
        n: usize,
        slots: Vec<(usize, usize)>,
        deg: Vec<usize>,
        undecided: Vec<usize>,
        touched: usize,
        edges: Vec<(usize, usize)>,
        has: Vec<u64>,
        found: Vec<(Vec<u64>, Graph)>,
        seen: HashSet<Vec<u64>>,
    }

    impl Gen {
        fn run(&mut self, idx: usize) {
            if idx == self.slots.len() {
                if self.deg.iter().all(|&d| d == 3) {
                    let g = Graph::new(self.n, &self.edges).expect("generated edges are valid");
                    let form = canonical_form(&g);
                    if self.seen.insert(form.clone()) {
                        self.found.push((form, g));
                    }
                }
                return;
            }
            let (i, j) = self.slots[idx];
            // entering a new row: the finished row's vertex must be saturated,
            // and the new row's vertex must already have a lower neighbor
            if idx > 0 {
                let (pi, _) = self.slots[idx - 1];
                if pi != i && (self.deg[pi] != 3 || self.deg[i] == 0) {
                    return;
                }
            }

            self.undecided[i] -= 1;
            self.undecided[j] -= 1;

            // include the edge
            let fresh = self.deg[j] == 0;
            if self.deg[i] < 3
                && self.deg[j] < 3
                && (!fresh || j == self.touched)
                && self.root_pattern_allows(i, j)
            {
                self.deg[i] += 1;
                self.deg[j] += 1;
                if fresh {
                    self.touched += 1;
                }
                self.edges.push((i, j));
                self.has[i] |= 1 << j;
                self.has[j] |= 1 << i;
                if self.feasible(i, j) {
                    self.run(idx + 1);
                }
                self.has[i] &= !(1u64 << j);
                self.has[j] &= !(1u64 << i);
                self.edges.pop();
                if fresh {
                    self.touched -= 1;
                }
                self.deg[i] -= 1;
                self.deg[j] -= 1;
            }

            // exclude the edge
            if self.feasible(i, j) {
                self.run(idx + 1);
            }

            self.undecided[i] += 1;
            self.undecided[j] += 1;
        }

        /// Normal form for the edge pattern among the root's neighbors
        /// {1, 2, 3}: present edges must form a prefix of (1-2, 1-3, 2-3).
        /// Any labeling can permute these three vertices to comply.
        fn root_pattern_allows(&self, i: usize, j: usize) -> bool {
            match (i, j) {
                (1, 3) => self.has[1] >> 2 & 1 == 1,
                (2, 3) => self.has[1] >> 3 & 1 == 1,
                _ => true,
            }
        }

        fn feasible(&self, i: usize, j: usize) -> bool {
            3 - self.deg[i] <= self.undecided[i] && 3 - self.deg[j] <= self.undecided[j]
        }
    }

    let mut deg = vec![0usize; n];
    deg[0] = 3;
    deg[1] = 1;
    deg[2] = 1;
    deg[3] = 1;
    let mut has = vec![0u64; n];
    has[0] = 0b1110;
    has[1] = 1;
    has[2] = 1;
    has[3] = 1;
    let mut undecided = vec![0usize; n];
    for &(i, j) in &slots {
        undecided[i] += 1;
        undecided[j] += 1;
    }
    let mut gen = Gen {
        n,
        slots,
        deg,
        undecided,
        touched: 4,
        edges: vec![(0, 1), (0, 2), (0, 3)],
        has,
        found: Vec::new(),
        seen: HashSet::new(),
    };
    gen.run(0);
    gen.found.sort_by(|a, b| a.0.cmp(&b.0));
    gen.found.into_iter().map(|(_, g)| g).collect()
}
