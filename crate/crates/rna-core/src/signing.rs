//! Parity labelings and the edge signs they induce.
//!
//! A labeling assigns the integers `1..=n` bijectively to the vertices; an
//! edge is positive when its endpoint labels share parity and negative
//! otherwise. Minimizing negative edges over labelings only depends on which
//! vertices receive even labels, so labelings are canonicalized by handing
//! out each parity class in ascending vertex order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A bijection from vertices to `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityLabeling {
    labels: Vec<usize>,
}

impl ParityLabeling {
    /// Validates bijectivity onto `1..=labels.len()`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &x in &labels {
            if x < 1 || x > n || seen[x] {
                return Err(Error::NotBijective { order: n });
            }
            seen[x] = true;
        }
        Ok(ParityLabeling { labels })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn is_even(&self, v: usize) -> bool {
        self.labels[v] % 2 == 0
    }

    /// Vertices holding even labels.
    pub fn even_side(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.is_even(v)).collect()
    }

    /// JSON form `{"labels": [f(0), f(1), ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LabelingJson {
            labels: self.labels.clone(),
        })
        .expect("labeling serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: LabelingJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidJson(e.to_string()))?;
        ParityLabeling::new(raw.labels)
    }
}

#[derive(Serialize, Deserialize)]
struct LabelingJson {
    labels: Vec<usize>,
}

/// A graph's edges partitioned by sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedEdgeSet {
    negative: Vec<(usize, usize)>,
    positive: Vec<(usize, usize)>,
}

impl SignedEdgeSet {
    pub fn negative(&self) -> &[(usize, usize)] {
        &self.negative
    }

    pub fn positive(&self) -> &[(usize, usize)] {
        &self.positive
    }

    pub fn negative_count(&self) -> usize {
        self.negative.len()
    }

    pub fn edge_count(&self) -> usize {
        self.negative.len() + self.positive.len()
    }
}

/// Signs every edge of `g` under the labeling: negative iff the endpoint
/// labels have different parity.
pub fn signs_from_labeling(g: &Graph, f: &ParityLabeling) -> Result<SignedEdgeSet> {
    if f.order() != g.order() {
        return Err(Error::LabelingSizeMismatch {
            order: g.order(),
            got: f.order(),
        });
    }
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for (u, v) in g.edges() {
        if f.is_even(u) == f.is_even(v) {
            positive.push((u, v));
        } else {
            negative.push((u, v));
        }
    }
    Ok(SignedEdgeSet { negative, positive })
}

/// Number of negative edges.
pub fn negative_count(s: &SignedEdgeSet) -> usize {
    s.negative_count()
}

/// Whether the signed graph is balanced: the vertices admit a 2-coloring in
/// which negative edges join the classes and positive edges stay inside one.
/// This is equivalent to every cycle carrying an even number of negative
/// edges. Disconnected graphs are checked per component.
pub fn is_balanced(g: &Graph, s: &SignedEdgeSet) -> bool {
    let n = g.order();
    // sign lookup: bit set means the edge flips the color
    let mut flips = vec![VertexSet::EMPTY; n];
    for &(u, v) in s.negative() {
        flips[u].insert(v);
        flips[v].insert(u);
    }
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in g.neighbors(u).iter() {
                let expected = cu ^ flips[u].contains(w);
                match color[w] {
                    None => {
                        color[w] = Some(expected);
                        queue.push_back(w);
                    }
                    Some(cw) if cw != expected => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// The canonical labeling whose even labels land exactly on `side_even`:
/// vertices in `side_even` receive `2, 4, ..., 2*floor(n/2)` in ascending
/// vertex order, the rest receive `1, 3, ...` ascending. The negative edges
/// of the induced signing are exactly the cut `[side_even : rest]`.
pub fn labeling_from_subset(g: &Graph, side_even: VertexSet) -> Result<ParityLabeling> {
    let n = g.order();
    if !side_even.minus(g.vertices()).is_empty() {
        return Err(Error::VertexOutOfRange {
            vertex: side_even.minus(g.vertices()).first().unwrap(),
            order: n,
        });
    }
    if side_even.len() != n / 2 {
        return Err(Error::SubsetSize {
            expected: n / 2,
            got: side_even.len(),
        });
    }
    let mut labels = vec![0usize; n];
    let mut next_even = 2;
    let mut next_odd = 1;
    for v in 0..n {
        if side_even.contains(v) {
            labels[v] = next_even;
            next_even += 2;
        } else {
            labels[v] = next_odd;
            next_odd += 2;
        }
    }
    ParityLabeling::new(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family_graph, generalized_petersen, Family, PetersenDescriptor};

    #[test]
    fn labeling_validation() {
        assert!(ParityLabeling::new(vec![1, 2, 3]).is_ok());
        assert!(ParityLabeling::new(vec![1, 1, 3]).is_err());
        assert!(ParityLabeling::new(vec![0, 1, 2]).is_err());
        assert!(ParityLabeling::new(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn two_path_has_one_negative() {
        let g = family_graph(Family::Path, 2).unwrap();
        let f = ParityLabeling::new(vec![1, 2]).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative_count(), 1);
    }

    #[test]
    fn four_cycle_mixed_labels() {
        let g = family_graph(Family::Cycle, 4).unwrap();
        let f = ParityLabeling::new(vec![1, 3, 2, 4]).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        // edges 1-3 and 2-4 are positive, 3-2 and 4-1 negative
        assert_eq!(s.negative_count(), 2);
    }

    #[test]
    fn petersen_spoke_labeling() {
        // u_i -> 2i+1, v_i -> 2i+2 makes exactly the spokes negative
        let d = PetersenDescriptor::new(5, 2).unwrap();
        let g = d.graph();
        let mut labels = vec![0; 10];
        for i in 0..5 {
            labels[i] = 2 * i + 1;
            labels[5 + i] = 2 * i + 2;
        }
        let f = ParityLabeling::new(labels).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative(), d.spokes());
        assert_eq!(s.negative_count(), 5);
    }

    #[test]
    fn prism_spoke_labeling_has_three_negatives() {
        let d = PetersenDescriptor::new(3, 1).unwrap();
        let g = d.graph();
        let f = ParityLabeling::new(vec![1, 3, 5, 2, 4, 6]).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative(), d.spokes());
        assert_eq!(s.negative_count(), 3);
    }

    #[test]
    fn all_positive_signing_is_balanced() {
        let g = family_graph(Family::Complete, 5).unwrap();
        let s = SignedEdgeSet {
            negative: Vec::new(),
            positive: g.edges(),
        };
        assert_eq!(s.negative_count(), 0);
        assert!(is_balanced(&g, &s));
    }

    #[test]
    fn odd_negative_cycle_is_unbalanced() {
        let g = family_graph(Family::Cycle, 3).unwrap();
        // hand-built signing with a single negative edge (not parity-induced)
        let s = SignedEdgeSet {
            negative: vec![(0, 1)],
            positive: vec![(0, 2), (1, 2)],
        };
        assert!(!is_balanced(&g, &s));
    }

    #[test]
    fn parity_signings_are_balanced() {
        for (g, f) in [
            (
                generalized_petersen(5, 2).unwrap(),
                ParityLabeling::new((1..=10).rev().collect()).unwrap(),
            ),
            (
                family_graph(Family::Wheel, 6).unwrap(),
                ParityLabeling::new(vec![4, 2, 6, 1, 7, 3, 5]).unwrap(),
            ),
        ] {
            let s = signs_from_labeling(&g, &f).unwrap();
            assert!(is_balanced(&g, &s));
        }
    }

    #[test]
    fn labeling_from_subset_path3() {
        let g = family_graph(Family::Path, 3).unwrap();
        let f = labeling_from_subset(&g, VertexSet::singleton(1)).unwrap();
        assert_eq!(f.labels(), &[1, 2, 3]);
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative_count(), 2);
    }

    #[test]
    fn labeling_from_subset_path4_end_pair() {
        let g = family_graph(Family::Path, 4).unwrap();
        let f = labeling_from_subset(&g, VertexSet::from_iter([0, 1])).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative_count(), 1);
    }

    #[test]
    fn labeling_from_subset_durer_even_side() {
        // the even-labeled side of the reference Durer labeling:
        // u3, u4, u5 and v1, v3, v5 -- its cut has four edges
        let d = PetersenDescriptor::new(6, 2).unwrap();
        let g = d.graph();
        let side = VertexSet::from_iter([3, 4, 5, 7, 9, 11]);
        let f = labeling_from_subset(&g, side).unwrap();
        let s = signs_from_labeling(&g, &f).unwrap();
        assert_eq!(s.negative_count(), 4);
        assert_eq!(
            s.negative(),
            g.cut_of(side).unwrap().crossing_edges.as_slice()
        );
    }

    #[test]
    fn labeling_from_subset_rejects_wrong_size() {
        let g = family_graph(Family::Path, 4).unwrap();
        assert!(matches!(
            labeling_from_subset(&g, VertexSet::singleton(0)),
            Err(Error::SubsetSize {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn labeling_json_round_trip() {
        let f = ParityLabeling::new(vec![2, 1, 4, 3]).unwrap();
        let text = f.to_json();
        assert_eq!(text, "{\"labels\":[2,1,4,3]}");
        assert_eq!(ParityLabeling::from_json(&text).unwrap(), f);
        assert!(ParityLabeling::from_json("{\"labels\":[2,2]}").is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (2..=max_n)
                .prop_flat_map(|n| {
                    let pairs = proptest::collection::vec((0..n, 0..n), 0..3 * n);
                    (Just(n), pairs, proptest::collection::vec(0..n, n))
                })
                .prop_map(|(n, pairs, anchors)| {
                    let mut g = Graph::empty(n).unwrap();
                    // spanning chain keeps it connected, extra pairs add bulk
                    for v in 1..n {
                        g.add_edge(v, anchors[v] % v).unwrap();
                    }
                    for (u, v) in pairs {
                        if u != v {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                    g
                })
        }

        proptest! {
            /// Permuting labels inside each parity class never changes the signs.
            #[test]
            fn sign_depends_only_on_parity_classes(g in arb_connected_graph(10), seed in any::<u64>()) {
                let n = g.order();
                let f = ParityLabeling::new((1..=n).collect()).unwrap();
                let mut evens: Vec<usize> = (1..=n).filter(|x| x % 2 == 0).collect();
                let mut odds: Vec<usize> = (1..=n).filter(|x| x % 2 == 1).collect();
                // deterministic shuffle of each class from the seed
                let mut state = seed | 1;
                let mut shuffle = |v: &mut Vec<usize>| {
                    for i in (1..v.len()).rev() {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        v.swap(i, (state >> 33) as usize % (i + 1));
                    }
                };
                shuffle(&mut evens);
                shuffle(&mut odds);
                let mut ei = 0;
                let mut oi = 0;
                let permuted: Vec<usize> = f.labels().iter().map(|&x| {
                    if x % 2 == 0 { ei += 1; evens[ei - 1] } else { oi += 1; odds[oi - 1] }
                }).collect();
                let f2 = ParityLabeling::new(permuted).unwrap();
                prop_assert_eq!(
                    signs_from_labeling(&g, &f).unwrap(),
                    signs_from_labeling(&g, &f2).unwrap()
                );
            }

            /// Replacing f by n+1-f leaves the negative count unchanged.
            #[test]
            fn negation_symmetry(g in arb_connected_graph(10), f_seed in any::<u64>()) {
                let n = g.order();
                let f = {
                    let mut labels: Vec<usize> = (1..=n).collect();
                    let mut state = f_seed | 1;
                    for i in (1..n).rev() {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        labels.swap(i, (state >> 33) as usize % (i + 1));
                    }
                    ParityLabeling::new(labels).unwrap()
                };
                let negated =
                    ParityLabeling::new(f.labels().iter().map(|&x| n + 1 - x).collect()).unwrap();
                prop_assert_eq!(
                    signs_from_labeling(&g, &f).unwrap().negative_count(),
                    signs_from_labeling(&g, &negated).unwrap().negative_count()
                );
            }

            /// Negative edges of a subset labeling are exactly the subset's cut.
            #[test]
            fn subset_labeling_matches_cut(g in arb_connected_graph(10), seed in any::<u64>()) {
                let n = g.order();
                // shuffle the vertices and take the first floor(n/2) as the even side
                let mut order: Vec<usize> = (0..n).collect();
                let mut state = seed | 1;
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    order.swap(i, (state >> 33) as usize % (i + 1));
                }
                let side: VertexSet = order[..n / 2].iter().copied().collect();
                let f = labeling_from_subset(&g, side).unwrap();
                let s = signs_from_labeling(&g, &f).unwrap();
                let cut = g.cut_of(side).unwrap();
                prop_assert_eq!(s.negative(), cut.crossing_edges.as_slice());
                prop_assert_eq!(s.negative_count(), cut.size);
            }

            /// Every parity signing is balanced.
            #[test]
            fn parity_signings_always_balanced(g in arb_connected_graph(12), f_seed in any::<u64>()) {
                let n = g.order();
                let mut labels: Vec<usize> = (1..=n).collect();
                let mut state = f_seed | 1;
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    labels.swap(i, (state >> 33) as usize % (i + 1));
                }
                let f = ParityLabeling::new(labels).unwrap();
                let s = signs_from_labeling(&g, &f).unwrap();
                prop_assert!(is_balanced(&g, &s));
            }
        }
    }
}
