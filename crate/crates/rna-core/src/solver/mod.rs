//! Exact computation of the rna number `σ⁻(G)`.
//!
//! `σ⁻(G)` is the minimum cut size over all vertex subsets of size
//! `floor(n/2)` (complements cover the `ceil` side, and the cut is symmetric
//! in the two sides). Three interchangeable solvers are provided:
//!
//! * [`rna_naive`] — visits every subset in lexicographic order and
//!   recomputes each cut; the reported witness is the lexicographically least
//!   minimizer.
//! * [`rna_fast`] — same value, computed by revolving-door enumeration with
//!   O(1) incremental cut updates. For even order, vertex 0 is pinned to the
//!   chosen side (complement symmetry halves the space), and the search stops
//!   early once the running minimum reaches the edge-connectivity lower bound.
//! * [`rna_branch_bound`] — depth-first side assignment with pruning on the
//!   committed crossing count and on side capacities.
//!
//! The subset family is never materialized; enumeration is lazy throughout.

mod subsets;

pub use subsets::{LexCombinations, RevolvingDoor};

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::signing::{labeling_from_subset, ParityLabeling};

/// Default order guard for the exhaustive solver.
pub const NAIVE_MAX_ORDER: usize = 28;
/// Default order guard for the incremental and branch-and-bound solvers.
pub const FAST_MAX_ORDER: usize = 40;
/// Order guard for exhaustive cut-pattern verification.
pub const VERIFY_MAX_ORDER: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    Naive,
    Fast,
    BranchBound,
}

impl SolverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::Naive => "naive",
            SolverKind::Fast => "fast",
            SolverKind::BranchBound => "bb",
        }
    }

    fn default_guard(&self) -> usize {
        match self {
            SolverKind::Naive => NAIVE_MAX_ORDER,
            _ => FAST_MAX_ORDER,
        }
    }
}

impl std::str::FromStr for SolverKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "naive" => Ok(SolverKind::Naive),
            "fast" => Ok(SolverKind::Fast),
            "bb" => Ok(SolverKind::BranchBound),
            other => Err(format!(
                "unknown solver {other:?} (expected naive, fast or bb)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverStats {
    /// Number of candidate subsets whose cut size was evaluated.
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

/// The computed rna number together with a witness.
#[derive(Clone, Debug)]
pub struct RnaResult {
    pub value: usize,
    /// A minimizing subset of size `floor(n/2)`.
    pub witness_side: VertexSet,
    /// The canonical labeling whose even labels sit on `witness_side`; its
    /// induced signing has exactly `value` negative edges.
    pub witness_labeling: ParityLabeling,
    pub stats: SolverStats,
    pub kind: SolverKind,
}

fn check_input(g: &Graph, kind: SolverKind, max_order: Option<usize>) -> Result<()> {
    let guard = max_order.unwrap_or_else(|| kind.default_guard());
    if g.order() > guard {
        let advice = if kind == SolverKind::Naive && g.order() <= FAST_MAX_ORDER {
            "the fast solver accepts this order, or override the limit"
        } else {
            "override the limit to force"
        };
        return Err(Error::EnumerationGuard {
            what: kind.as_str(),
            order: g.order(),
            guard,
            advice,
        });
    }
    if g.order() < 2 {
        return Err(Error::OutOfRange {
            what: "rna solver",
            n: g.order(),
            requirement: "order >= 2",
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn finish(
    g: &Graph,
    kind: SolverKind,
    value: usize,
    witness: u64,
    subsets: u64,
    started: Instant,
) -> RnaResult {
    let side = VertexSet::from_bits(witness);
    let witness_labeling =
        labeling_from_subset(g, side).expect("witness side always has floor(n/2) vertices");
    RnaResult {
        value,
        witness_side: side,
        witness_labeling,
        stats: SolverStats {
            subsets_examined: subsets,
            elapsed: started.elapsed(),
        },
        kind,
    }
}

/// Exhaustive solver: every `floor(n/2)`-subset, lexicographic order, full
/// cut recomputation. Witness: the lexicographically least minimizer.
pub fn rna_naive(g: &Graph) -> Result<RnaResult> {
    solve(g, SolverKind::Naive, None)
}

/// Incremental solver with symmetry breaking and early exit; same value as
/// [`rna_naive`].
pub fn rna_fast(g: &Graph) -> Result<RnaResult> {
    solve(g, SolverKind::Fast, None)
}

/// Branch-and-bound solver; same value as [`rna_naive`].
pub fn rna_branch_bound(g: &Graph) -> Result<RnaResult> {
    solve(g, SolverKind::BranchBound, None)
}

/// Runs the chosen solver. `max_order` overrides the built-in order guard.
pub fn solve(g: &Graph, kind: SolverKind, max_order: Option<usize>) -> Result<RnaResult> {
    check_input(g, kind, max_order)?;
    let started = Instant::now();
    let (value, witness, subsets) = match kind {
        SolverKind::Naive => solve_naive(g),
        SolverKind::Fast => solve_fast(g),
        SolverKind::BranchBound => solve_branch_bound(g),
    };
    Ok(finish(g, kind, value, witness, subsets, started))
}

fn solve_naive(g: &Graph) -> (usize, u64, u64) {
    let n = g.order();
    let k = n / 2;
    let mut best = usize::MAX;
    let mut witness = 0u64;
    let mut subsets = 0u64;
    for mask in LexCombinations::new(n, k) {
        subsets += 1;
        let size = g.cut_size(VertexSet::from_bits(mask));
        if size < best {
            best = size;
            witness = mask;
        }
    }
    (best, witness, subsets)
}

fn solve_fast(g: &Graph) -> (usize, u64, u64) {
    let n = g.order();
    let k = n / 2;
    let lower = g.edge_connectivity();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    // For even order the sides are interchangeable, so pin vertex 0 inside A
    // and enumerate the remaining k-1 choices over vertices 1..n.
    let (iter, shift) = if n % 2 == 0 {
        (RevolvingDoor::new(n - 1, k - 1), true)
    } else {
        (RevolvingDoor::new(n, k), false)
    };

    let mut best = usize::MAX;
    let mut witness = 0u64;
    let mut subsets = 0u64;
    let mut prev = 0u64;
    let mut size = 0usize;
    for raw in iter {
        let mask = if shift { raw << 1 | 1 } else { raw };
        subsets += 1;
        if subsets == 1 {
            size = g.cut_size(VertexSet::from_bits(mask));
        } else {
            // one vertex left the side, one came in
            let diff = prev ^ mask;
            let out_v = (diff & prev).trailing_zeros() as usize;
            let in_v = (diff & mask).trailing_zeros() as usize;
            let mid = prev & !(1 << out_v);
            size = size
                .wrapping_add(deg[in_v])
                .wrapping_sub(deg[out_v])
                .wrapping_sub(2 * (adj[in_v] & mid).count_ones() as usize)
                .wrapping_add(2 * (adj[out_v] & mid).count_ones() as usize);
        }
        prev = mask;
        if size < best {
            best = size;
            witness = mask;
            // any nearly balanced cut matching the global lower bound is
            // optimal; a bridge cut of size 1 is the k' = 1 instance of this
            if best <= lower {
                break;
            }
        }
    }
    (best, witness, subsets)
}

fn solve_branch_bound(g: &Graph) -> (usize, u64, u64) {
    let n = g.order();
    let k = n / 2;
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();

    struct Search<'a> {
        adj: &'a [u64],
        n: usize,
        k: usize,
        best: usize,
        witness: u64,
        leaves: u64,
    }

    impl Search<'_> {
        fn descend(&mut self, v: usize, a_mask: u64, b_mask: u64, cut: usize) {
            if cut >= self.best {
                return;
            }
            let a_count = a_mask.count_ones() as usize;
            if v == self.n {
                self.leaves += 1;
                if a_count == self.k {
                    // cut < best already checked
                    self.best = cut;
                    self.witness = a_mask;
                }
                return;
            }
            let b_count = v - a_count;
            let bit = 1u64 << v;
            if a_count < self.k {
                let added = (self.adj[v] & b_mask).count_ones() as usize;
                self.descend(v + 1, a_mask | bit, b_mask, cut + added);
            }
            if b_count < self.n - self.k {
                let added = (self.adj[v] & a_mask).count_ones() as usize;
                self.descend(v + 1, a_mask, b_mask | bit, cut + added);
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        n,
        k,
        best: usize::MAX,
        witness: 0,
        leaves: 0,
    };
    if n % 2 == 0 {
        // complement symmetry: vertex 0 goes to side A
        search.descend(1, 1, 0, 0);
    } else {
        search.descend(0, 0, 0, 0);
    }
    (search.best, search.witness, search.leaves)
}

/// Tests whether some bridge splits the graph into components whose orders
/// differ by at most one; returns such a bridge when it exists. This is
/// exactly the condition for `σ⁻(G) = 1`.
pub fn rna_one_check(g: &Graph) -> Option<(usize, usize)> {
    let bridges = g.bridges().ok()?;
    for (u, v) in bridges {
        // size of u's side once the bridge is cut
        let without = {
            let mut edges = g.edges();
            edges.retain(|&e| e != (u, v));
            Graph::new(g.order(), &edges).expect("subgraph of a valid graph")
        };
        let side = without.reachable_within(u, without.vertices());
        let a = side.len();
        let b = g.order() - a;
        if a.abs_diff(b) <= 1 {
            return Some((u, v));
        }
    }
    None
}

/// Cut-size patterns for [`verify_no_cut`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutPattern {
    Exact(usize),
    Odd,
    Even,
}

impl CutPattern {
    fn matches(&self, size: usize) -> bool {
        match *self {
            CutPattern::Exact(s) => size == s,
            CutPattern::Odd => size % 2 == 1,
            CutPattern::Even => size % 2 == 0,
        }
    }
}

/// Exhaustively confirms that no nearly balanced cut of the given pattern
/// exists: every `floor(n/2)`-subset is checked. Returns `false` as soon as a
/// matching cut is found.
pub fn verify_no_cut(g: &Graph, pattern: CutPattern) -> Result<bool> {
    if g.order() > VERIFY_MAX_ORDER {
        return Err(Error::EnumerationGuard {
            what: "cut verification",
            order: g.order(),
            guard: VERIFY_MAX_ORDER,
            advice: "override is not supported for exhaustive verification",
        });
    }
    let k = g.order() / 2;
    for mask in LexCombinations::new(g.order(), k) {
        if pattern.matches(g.cut_size(VertexSet::from_bits(mask))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Families with a known closed-form rna number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormFamily {
    /// `σ⁻(P_n) = 1` for paths of order `n >= 2`.
    Path,
    /// `σ⁻(C_n) = 2` for `n >= 3`.
    Cycle,
    /// `σ⁻(K_{1,n}) = ceil(n/2)` for `n >= 1` leaves.
    Star,
    /// `σ⁻(W_n) = ceil((n+4)/2)` for wheels with a rim of `n >= 3` vertices.
    Wheel,
    /// `σ⁻(K_n) = ceil(n/2) * floor(n/2)` for `n >= 2`.
    Complete,
    /// `σ⁻(P(n,1))`: 3 for n = 3, else 4 for even n, 5 for odd n.
    PetersenK1,
    /// `σ⁻(P(n,2))`: 6 for even n >= 8, 7 for odd n >= 7.
    PetersenK2,
}

/// Closed-form value, restricted to the exact parameter range for which the
/// formula is established; no extrapolation.
pub fn closed_form_rna(family: ClosedFormFamily, n: usize) -> Result<usize> {
    use ClosedFormFamily::*;
    match family {
        Path => {
            if n < 2 {
                return Err(Error::OutOfRange {
                    what: "closed form for paths",
                    n,
                    requirement: "n >= 2",
                });
            }
            Ok(1)
        }
        Cycle => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "closed form for cycles",
                    n,
                    requirement: "n >= 3",
                });
            }
            Ok(2)
        }
        Star => {
            if n < 1 {
                return Err(Error::OutOfRange {
                    what: "closed form for stars",
                    n,
                    requirement: "n >= 1 leaves",
                });
            }
            Ok(n.div_ceil(2))
        }
        Wheel => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "closed form for wheels",
                    n,
                    requirement: "a rim of n >= 3 vertices",
                });
            }
            Ok((n + 4).div_ceil(2))
        }
        Complete => {
            if n < 2 {
                return Err(Error::OutOfRange {
                    what: "closed form for complete graphs",
                    n,
                    requirement: "n >= 2",
                });
            }
            Ok(n.div_ceil(2) * (n / 2))
        }
        PetersenK1 => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "closed form for P(n,1)",
                    n,
                    requirement: "n >= 3",
                });
            }
            Ok(match n {
                3 => 3,
                _ if n % 2 == 0 => 4,
                _ => 5,
            })
        }
        PetersenK2 => {
            if n % 2 == 0 && n >= 8 {
                Ok(6)
            } else if n % 2 == 1 && n >= 7 {
                Ok(7)
            } else {
                Err(Error::OutOfRange {
                    what: "closed form for P(n,2)",
                    n,
                    requirement: "even n >= 8 or odd n >= 7",
                })
            }
        }
    }
}

/// The explicit labelings used to establish the closed forms for generalized
/// Petersen graphs. Vertex convention matches
/// [`PetersenDescriptor`](crate::graph::PetersenDescriptor): `u_i` is index
/// `i`, `v_i` is index `n + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofLabelingKind {
    /// `f(u_i) = 2i+1`, `f(v_i) = 2i+2`: all `n` spokes negative, nothing
    /// else. Valid for every `P(n,k)`.
    PetersenUpper,
    /// Even `n`: 4 negative edges on `P(n,1)`.
    PetersenK1Even,
    /// Odd `n >= 5`: 5 negative edges on `P(n,1)`.
    PetersenK1Odd,
    /// Even `n >= 8`: 6 negative edges on `P(n,2)`.
    PetersenK2Even,
    /// Odd `n >= 7`: 7 negative edges on `P(n,2)`.
    PetersenK2Odd,
}

/// Builds the reference labeling for `P(n, ·)` of the given kind.
pub fn proof_labeling(kind: ProofLabelingKind, n: usize) -> Result<ParityLabeling> {
    use ProofLabelingKind::*;
    let mut labels = vec![0usize; 2 * n];
    match kind {
        PetersenUpper => {
            if n < 3 {
                return Err(Error::OutOfRange {
                    what: "spoke labeling",
                    n,
                    requirement: "n >= 3",
                });
            }
            for i in 0..n {
                labels[i] = 2 * i + 1;
                labels[n + i] = 2 * i + 2;
            }
        }
        PetersenK1Even => {
            if n < 4 || n % 2 == 1 {
                return Err(Error::OutOfRange {
                    what: "P(n,1) labeling for even n",
                    n,
                    requirement: "even n >= 4",
                });
            }
            let l = n / 2;
            for i in 0..n {
                labels[i] = if i < l { 2 * i + 2 } else { 2 * i - 2 * l + 1 };
                labels[n + i] = if i < l { 2 * i + 2 * l + 2 } else { 2 * i + 1 };
            }
        }
        PetersenK1Odd => {
            if n < 5 || n % 2 == 0 {
                return Err(Error::OutOfRange {
                    what: "P(n,1) labeling for odd n",
                    n,
                    requirement: "odd n >= 5",
                });
            }
            let l = n / 2;
            for i in 0..n {
                labels[i] = if i <= l { 2 * i + 1 } else { 2 * i - 2 * l };
                labels[n + i] = if i < l {
                    2 * i + 2 * l + 3
                } else {
                    2 * i + 2
                };
            }
        }
        PetersenK2Even => {
            if n < 8 || n % 2 == 1 {
                return Err(Error::OutOfRange {
                    what: "P(n,2) labeling for even n",
                    n,
                    requirement: "even n >= 8",
                });
            }
            let l = n / 2;
            for i in 0..n {
                labels[i] = if i < l { 2 * i + 1 } else { 2 * i - 2 * l + 2 };
                labels[n + i] = if i < l {
                    2 * l + 2 * i + 1
                } else {
                    2 * i + 2
                };
            }
        }
        PetersenK2Odd => {
            if n < 7 || n % 2 == 0 {
                return Err(Error::OutOfRange {
                    what: "P(n,2) labeling for odd n",
                    n,
                    requirement: "odd n >= 7",
                });
            }
            let l = n / 2;
            for i in 0..n {
                labels[i] = if i <= l { 2 * i + 1 } else { 2 * i - 2 * l };
            }
            labels[n] = 4 * l + 2;
            for i in 1..n {
                labels[n + i] = if i <= l { 2 * l + 2 * i + 1 } else { 2 * i };
            }
        }
    }
    ParityLabeling::new(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family_graph, generalized_petersen, Family, Graph};
    use crate::signing::signs_from_labeling;

    #[test]
    fn naive_closed_form_examples() {
        let p5 = family_graph(Family::Path, 5).unwrap();
        assert_eq!(rna_naive(&p5).unwrap().value, 1);

        let k5 = family_graph(Family::Complete, 5).unwrap();
        assert_eq!(rna_naive(&k5).unwrap().value, 6);

        let w6 = family_graph(Family::Wheel, 6).unwrap();
        assert_eq!(rna_naive(&w6).unwrap().value, 5);
    }

    #[test]
    fn naive_witness_is_lexicographically_least() {
        // P4: cuts of size 1 come from {0,1} (and its complement); the
        // witness must be {0,1}, not {2,3}
        let p4 = family_graph(Family::Path, 4).unwrap();
        let r = rna_naive(&p4).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness_side.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn result_invariants_hold() {
        for g in [
            generalized_petersen(5, 2).unwrap(),
            family_graph(Family::Wheel, 7).unwrap(),
            family_graph(Family::Star, 6).unwrap(),
        ] {
            for kind in [SolverKind::Naive, SolverKind::Fast, SolverKind::BranchBound] {
                let r = solve(&g, kind, None).unwrap();
                assert_eq!(r.witness_side.len(), g.order() / 2);
                assert_eq!(g.cut_of(r.witness_side).unwrap().size, r.value);
                let s = signs_from_labeling(&g, &r.witness_labeling).unwrap();
                assert_eq!(s.negative_count(), r.value);
            }
        }
    }

    #[test]
    fn fast_solver_famous_values() {
        let petersen = generalized_petersen(5, 2).unwrap();
        assert_eq!(rna_fast(&petersen).unwrap().value, 5);

        let nauru = generalized_petersen(12, 5).unwrap();
        assert_eq!(rna_fast(&nauru).unwrap().value, 8);
    }

    #[test]
    fn branch_bound_examples() {
        let dodecahedron = generalized_petersen(10, 2).unwrap();
        assert_eq!(rna_branch_bound(&dodecahedron).unwrap().value, 6);

        let k6 = family_graph(Family::Complete, 6).unwrap();
        assert_eq!(rna_branch_bound(&k6).unwrap().value, 9);
    }

    #[test]
    fn solvers_agree_on_trees() {
        // caterpillar with a centroid bridge
        let tree = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (4, 7)],
        )
        .unwrap();
        let naive = rna_naive(&tree).unwrap().value;
        assert_eq!(rna_fast(&tree).unwrap().value, naive);
        assert_eq!(rna_branch_bound(&tree).unwrap().value, naive);
    }

    #[test]
    fn guards_and_validation() {
        let c30 = family_graph(Family::Cycle, 30).unwrap();
        assert!(rna_naive(&c30).unwrap_err().is_capacity());

        let c41 = family_graph(Family::Cycle, 41).unwrap();
        assert!(rna_fast(&c41).unwrap_err().is_capacity());
        // raising the guard lets it through; the early exit at the
        // edge-connectivity bound keeps this cheap
        assert_eq!(solve(&c41, SolverKind::Fast, Some(41)).unwrap().value, 2);

        // the guard can also be lowered
        let c8 = family_graph(Family::Cycle, 8).unwrap();
        assert!(solve(&c8, SolverKind::Naive, Some(6)).unwrap_err().is_capacity());

        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(rna_fast(&disconnected), Err(Error::Disconnected)));

        let k1 = Graph::empty(1).unwrap();
        assert!(rna_fast(&k1).is_err());
    }

    #[test]
    fn fast_subset_count_matches_symmetry_broken_space() {
        // no early exit on K6: sigma is 9, edge connectivity 5
        let k6 = family_graph(Family::Complete, 6).unwrap();
        let r = rna_fast(&k6).unwrap();
        assert_eq!(r.value, 9);
        assert_eq!(r.stats.subsets_examined, 10); // C(5,2)

        let p52 = generalized_petersen(5, 2).unwrap();
        let r = rna_fast(&p52).unwrap();
        assert_eq!(r.stats.subsets_examined, 126); // C(9,4)
    }

    #[test]
    fn rna_one_check_examples() {
        let p4 = family_graph(Family::Path, 4).unwrap();
        assert_eq!(rna_one_check(&p4), Some((1, 2)));

        // triangle with a pendant edge: bridge splits 3 | 1
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(rna_one_check(&paw), None);
        assert_eq!(rna_naive(&paw).unwrap().value, 2);

        let c5 = family_graph(Family::Cycle, 5).unwrap();
        assert_eq!(rna_one_check(&c5), None);
    }

    #[test]
    fn rna_one_matches_solver_value_one() {
        for (g, _) in sample_graphs() {
            if !g.is_connected() || g.order() < 2 {
                continue;
            }
            let is_one = rna_fast(&g).unwrap().value == 1;
            assert_eq!(rna_one_check(&g).is_some(), is_one, "{g:?}");
        }
    }

    fn sample_graphs() -> Vec<(Graph, &'static str)> {
        vec![
            (family_graph(Family::Path, 7).unwrap(), "P7"),
            (family_graph(Family::Cycle, 8).unwrap(), "C8"),
            (family_graph(Family::Star, 5).unwrap(), "K1,5"),
            (family_graph(Family::Wheel, 6).unwrap(), "W6"),
            (generalized_petersen(6, 2).unwrap(), "P(6,2)"),
            (
                Graph::new(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
                    .unwrap(),
                "triangle-bridge-square",
            ),
        ]
    }

    #[test]
    fn verify_no_cut_examples() {
        let p62 = generalized_petersen(6, 2).unwrap();
        assert!(verify_no_cut(&p62, CutPattern::Exact(3)).unwrap());

        let p83 = generalized_petersen(8, 3).unwrap();
        assert!(verify_no_cut(&p83, CutPattern::Odd).unwrap());

        let p72 = generalized_petersen(7, 2).unwrap();
        assert!(verify_no_cut(&p72, CutPattern::Even).unwrap());

        // a path does have a balanced cut of size 1
        let p4 = family_graph(Family::Path, 4).unwrap();
        assert!(!verify_no_cut(&p4, CutPattern::Exact(1)).unwrap());

        let big = family_graph(Family::Cycle, 26).unwrap();
        assert!(verify_no_cut(&big, CutPattern::Odd).is_err());
    }

    #[test]
    fn closed_forms() {
        use ClosedFormFamily::*;
        assert_eq!(closed_form_rna(Path, 9).unwrap(), 1);
        assert_eq!(closed_form_rna(Cycle, 12).unwrap(), 2);
        assert_eq!(closed_form_rna(Star, 7).unwrap(), 4);
        assert_eq!(closed_form_rna(Wheel, 6).unwrap(), 5);
        assert_eq!(closed_form_rna(Complete, 7).unwrap(), 12);
        assert_eq!(closed_form_rna(PetersenK1, 3).unwrap(), 3);
        assert_eq!(closed_form_rna(PetersenK1, 6).unwrap(), 4);
        assert_eq!(closed_form_rna(PetersenK1, 7).unwrap(), 5);
        assert_eq!(closed_form_rna(PetersenK2, 8).unwrap(), 6);
        assert_eq!(closed_form_rna(PetersenK2, 9).unwrap(), 7);

        assert!(closed_form_rna(Path, 1).is_err());
        assert!(closed_form_rna(PetersenK2, 5).is_err());
        assert!(closed_form_rna(PetersenK2, 6).is_err());
    }

    #[test]
    fn proof_labelings_hit_their_bounds() {
        use ProofLabelingKind::*;

        let f = proof_labeling(PetersenUpper, 5).unwrap();
        let g = generalized_petersen(5, 2).unwrap();
        assert_eq!(signs_from_labeling(&g, &f).unwrap().negative_count(), 5);

        let f = proof_labeling(PetersenK1Even, 6).unwrap();
        let g = generalized_petersen(6, 1).unwrap();
        assert_eq!(signs_from_labeling(&g, &f).unwrap().negative_count(), 4);

        let f = proof_labeling(PetersenK1Odd, 7).unwrap();
        let g = generalized_petersen(7, 1).unwrap();
        assert_eq!(signs_from_labeling(&g, &f).unwrap().negative_count(), 5);

        let f = proof_labeling(PetersenK2Even, 8).unwrap();
        let g = generalized_petersen(8, 2).unwrap();
        assert_eq!(signs_from_labeling(&g, &f).unwrap().negative_count(), 6);

        let f = proof_labeling(PetersenK2Odd, 7).unwrap();
        let g = generalized_petersen(7, 2).unwrap();
        assert_eq!(signs_from_labeling(&g, &f).unwrap().negative_count(), 7);

        assert!(proof_labeling(PetersenK1Even, 5).is_err());
        assert!(proof_labeling(PetersenK2Odd, 5).is_err());
        assert!(proof_labeling(PetersenK2Even, 6).is_err());
    }
}
