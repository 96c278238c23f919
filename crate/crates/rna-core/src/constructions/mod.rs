//! Reference graphs and labelings: the six named generalized Petersen graphs
//! with labelings achieving their exact rna numbers, the odd-regular
//! bridge-joined constructions, the order-10 cubic graph with a single
//! negative edge, and a census of small connected cubic graphs.

mod census;

pub use census::{canonical_form, isomorphic};

use crate::error::{Error, Result};
use crate::graph::{cycle_power, Graph, PetersenDescriptor, MAX_ORDER};
use crate::signing::ParityLabeling;

/// The named generalized Petersen graphs treated individually.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamousName {
    Petersen,
    Durer,
    MobiusKantor,
    Dodecahedron,
    Desargues,
    Nauru,
}

impl FamousName {
    pub const ALL: [FamousName; 6] = [
        FamousName::Petersen,
        FamousName::Durer,
        FamousName::MobiusKantor,
        FamousName::Dodecahedron,
        FamousName::Desargues,
        FamousName::Nauru,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamousName::Petersen => "petersen",
            FamousName::Durer => "durer",
            FamousName::MobiusKantor => "mobius-kantor",
            FamousName::Dodecahedron => "dodecahedron",
            FamousName::Desargues => "desargues",
            FamousName::Nauru => "nauru",
        }
    }
}

impl std::str::FromStr for FamousName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "petersen" => Ok(FamousName::Petersen),
            "durer" => Ok(FamousName::Durer),
            "mobius-kantor" => Ok(FamousName::MobiusKantor),
            "dodecahedron" => Ok(FamousName::Dodecahedron),
            "desargues" => Ok(FamousName::Desargues),
            "nauru" => Ok(FamousName::Nauru),
            other => Err(format!(
                "unknown graph name {other:?} (expected petersen, durer, mobius-kantor, \
                 dodecahedron, desargues or nauru)"
            )),
        }
    }
}

/// A named graph, its `P(n,k)` parameters, a reference labeling attaining the
/// rna number, and that number.
#[derive(Clone, Debug)]
pub struct FamousGraphRecord {
    pub name: FamousName,
    pub descriptor: PetersenDescriptor,
    pub labeling: ParityLabeling,
    pub claimed_rna: usize,
}

impl FamousGraphRecord {
    pub fn graph(&self) -> Graph {
        self.descriptor.graph()
    }
}

/// Looks up the reference record for a named graph.
///
/// The labelings are stored as literal tables (the irregular ones cannot be
/// reconstructed from a single formula); the record invariants — transcribed
/// negative count and exact solver value both equal `claimed_rna` — are
/// enforced by the test suite.
pub fn famous(name: FamousName) -> FamousGraphRecord {
    // labels listed as f(u_0..u_{n-1}) then f(v_0..v_{n-1})
    let (n, k, labels, claimed): (usize, usize, Vec<usize>, usize) = match name {
        FamousName::Petersen => (
            5,
            2,
            vec![1, 3, 5, 7, 9, 2, 4, 6, 8, 10],
            5,
        ),
        FamousName::Durer => (
            6,
            2,
            vec![1, 3, 5, 2, 4, 6, 7, 8, 9, 10, 11, 12],
            4,
        ),
        FamousName::MobiusKantor => (
            8,
            3,
            vec![1, 3, 5, 7, 2, 4, 6, 8, 9, 15, 10, 11, 12, 14, 13, 16],
            6,
        ),
        FamousName::Dodecahedron => (
            10,
            2,
            vec![
                1, 3, 5, 7, 9, 2, 4, 6, 8, 10, 11, 13, 15, 17, 19, 12, 14, 16, 18, 20,
            ],
            6,
        ),
        FamousName::Desargues => (
            10,
            3,
            vec![
                1, 3, 5, 7, 9, 2, 4, 6, 8, 10, 11, 13, 12, 15, 17, 14, 16, 19, 18, 20,
            ],
            6,
        ),
        FamousName::Nauru => (
            12,
            5,
            vec![
                1, 3, 5, 2, 4, 6, 13, 15, 17, 14, 16, 18, 7, 9, 11, 8, 10, 12, 19, 21, 23, 20,
                22, 24,
            ],
            8,
        ),
    };
    FamousGraphRecord {
        name,
        descriptor: PetersenDescriptor::new(n, k).expect("table parameters are valid"),
        labeling: ParityLabeling::new(labels).expect("table labelings are bijections"),
        claimed_rna: claimed,
    }
}

/// Half of the `(4n-1)`-regular construction: the cycle power
/// `C_{6n-1}^{2n-1}` plus the near-perfect matching `{v_i v_{i+3n-1}}` for
/// `1 <= i <= 3n-1`. Vertex 0 ends with degree `4n-2`, all others `4n-1`.
pub fn construct_gr(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "G_r construction",
            n,
            requirement: "n >= 1",
        });
    }
    let order = 6 * n - 1;
    if order > MAX_ORDER {
        return Err(Error::Capacity {
            order,
            max: MAX_ORDER,
        });
    }
    let mut g = cycle_power(order, 2 * n - 1)?;
    for i in 1..=3 * n - 1 {
        g.add_edge(i, (i + 3 * n - 1) % order)?;
    }
    Ok(g)
}

/// Two copies of [`construct_gr`] joined at their vertex 0 by a bridge: a
/// `(4n-1)`-regular graph on `12n-2` vertices whose bridge splits it into
/// equal halves, hence rna number 1.
pub fn construct_regular_4nm1(n: usize) -> Result<Graph> {
    let half = construct_gr(n)?;
    if 2 * half.order() > MAX_ORDER {
        return Err(Error::Capacity {
            order: 2 * half.order(),
            max: MAX_ORDER,
        });
    }
    half.join_with_bridge(0, &half, 0)
}

/// Half of the `(4n+1)`-regular construction: the cycle power `C_{4n+3}^{2n}`
/// plus the matching `{v_i v_{i+2n+1}}` for `1 <= i <= 2n+1`. Vertex 0 ends
/// with degree `4n`, all others `4n+1`.
pub fn construct_gs(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "G_s construction",
            n,
            requirement: "n >= 1",
        });
    }
    let order = 4 * n + 3;
    if order > MAX_ORDER {
        return Err(Error::Capacity {
            order,
            max: MAX_ORDER,
        });
    }
    let mut g = cycle_power(order, 2 * n)?;
    for i in 1..=2 * n + 1 {
        g.add_edge(i, (i + 2 * n + 1) % order)?;
    }
    Ok(g)
}

/// Two copies of [`construct_gs`] joined at their vertex 0 by a bridge: a
/// `(4n+1)`-regular graph on `8n+6` vertices with a balanced bridge, hence
/// rna number 1. `8n+6` is the minimum possible order for this degree (see
/// [`min_order_with_balanced_bridge`]).
pub fn construct_regular_4np1(n: usize) -> Result<Graph> {
    let half = construct_gs(n)?;
    if 2 * half.order() > MAX_ORDER {
        return Err(Error::Capacity {
            order: 2 * half.order(),
            max: MAX_ORDER,
        });
    }
    half.join_with_bridge(0, &half, 0)
}

/// Whether a `degree`-regular graph can have a bridge whose removal leaves a
/// component of `side` vertices. Necessary conditions: every non-endpoint of
/// the bridge needs all `degree` neighbors inside the side, and the side's
/// internal degree sum `degree * side - 1` must be even.
pub fn regular_bridge_side_feasible(degree: usize, side: usize) -> bool {
    side > degree && (degree * side) % 2 == 1
}

/// Minimum order of a `degree`-regular graph (odd `degree >= 3`) whose rna
/// number is 1, i.e. that has a bridge splitting it into nearly equal halves.
/// Both sides must be feasible per [`regular_bridge_side_feasible`]; since
/// feasible sides are odd, the sides must in fact be equal, giving
/// `2 * (degree + 2)`. For degree `4n+1` this is `8n+6`, and
/// [`construct_regular_4np1`] attains it.
pub fn min_order_with_balanced_bridge(degree: usize) -> Result<usize> {
    if degree % 2 == 0 || degree < 3 {
        return Err(Error::OutOfRange {
            what: "balanced-bridge order bound",
            n: degree,
            requirement: "odd degree >= 3",
        });
    }
    let side = (degree + 1..).find(|&s| regular_bridge_side_feasible(degree, s)).unwrap();
    Ok(2 * side)
}

/// The order-10 cubic graph whose bundled labeling has exactly one negative
/// edge. Each half is K4 minus an edge, with a fifth vertex attached to the
/// two degree-2 vertices; the halves are joined by the bridge 4-5, which is
/// the unique negative edge (labels 9 and 10).
pub fn fig9_cubic_order10() -> (Graph, ParityLabeling) {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 4),
        (2, 3),
        (3, 4),
        (4, 5), // the bridge
        (5, 6),
        (5, 8),
        (6, 7),
        (6, 9),
        (7, 8),
        (7, 9),
        (8, 9),
    ];
    let g = Graph::new(10, &edges).expect("fixed edge table is valid");
    let f = ParityLabeling::new(vec![1, 3, 5, 7, 9, 10, 4, 2, 8, 6])
        .expect("fixed labeling is a bijection");
    (g, f)
}

/// All connected cubic graphs of the given order up to isomorphism, sorted by
/// canonical form. Only even orders 4..=10 are supported.
pub fn enumerate_cubic(order: usize) -> Result<Vec<Graph>> {
    if order % 2 == 1 {
        return Err(Error::OutOfRange {
            what: "cubic census",
            n: order,
            requirement: "an even order (odd-order cubic graphs do not exist)",
        });
    }
    if !(4..=10).contains(&order) {
        return Err(Error::OutOfRange {
            what: "cubic census",
            n: order,
            requirement: "4 <= order <= 10",
        });
    }
    Ok(census::enumerate_cubic_classes(order))
}
