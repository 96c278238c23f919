//! The verification catalog: every checkable claim gets an id, a default
//! instance range, and a runner producing a machine-comparable report.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use rna_core::constructions::{
    construct_regular_4nm1, construct_regular_4np1, enumerate_cubic, famous, fig9_cubic_order10,
    min_order_with_balanced_bridge, FamousName,
};
use rna_core::graph::{family_graph, generalized_petersen, Family, Graph};
use rna_core::signing::signs_from_labeling;
use rna_core::solver::{
    closed_form_rna, proof_labeling, rna_one_check, solve, verify_no_cut, ClosedFormFamily,
    CutPattern, ProofLabelingKind, SolverKind,
};

#[derive(Serialize, Clone, Debug)]
pub struct Instance {
    pub params: Value,
    pub expected: Value,
    pub computed: Value,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub theorem: String,
    pub instances: Vec<Instance>,
    pub status: Status,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Report {
    fn from_instances(theorem: &str, instances: Vec<Instance>, elapsed: Duration) -> Report {
        let status = if instances.iter().all(|i| i.expected == i.computed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            theorem: theorem.to_string(),
            instances,
            status,
            elapsed,
        }
    }
}

/// Instance-range selection: an optional override of the catalog default plus
/// a parity filter.
#[derive(Clone, Copy, Debug, Default)]
pub struct RangeFilter {
    pub range: Option<(usize, usize)>,
    pub even_only: bool,
    pub odd_only: bool,
}

impl RangeFilter {
    /// Instances to run: the user range (or the default), clamped to the
    /// claim's validity range so oversized or undersized parameters are
    /// silently dropped rather than run into solver guards.
    fn select(
        &self,
        default: std::ops::RangeInclusive<usize>,
        valid: std::ops::RangeInclusive<usize>,
    ) -> Vec<usize> {
        let (lo, hi) = self
            .range
            .unwrap_or_else(|| (*default.start(), *default.end()));
        let lo = lo.max(*valid.start());
        let hi = hi.min(*valid.end());
        (lo..=hi)
            .filter(|n| !(self.even_only && n % 2 == 1))
            .filter(|n| !(self.odd_only && n % 2 == 0))
            .collect()
    }
}

pub const CATALOG: &[&str] = &[
    "thm2.1", "thm2.2", "thm2.3", "thm2.4", "thm2.5", "lem3.2", "lem3.3", "lem3.4", "thm4.2",
    "lem4.3", "thm4.4", "thm4.5", "thm4.6", "ex5.1", "ex5.2", "ex5.3", "ex5.4", "ex5.5", "ex5.6",
    "lem6.2", "lem6.3", "lem6.4", "lem6.5", "lem6.6", "lem6.7", "lem6.8",
];

/// Runs one catalog entry. `jobs` > 1 parallelizes across instances.
pub fn run(id: &str, filter: RangeFilter, quick: bool, jobs: usize) -> Option<Report> {
    let started = Instant::now();
    let instances: Vec<Instance> = match id {
        "thm2.1" => closed_family(Family::Path, ClosedFormFamily::Path, 2..=12, 2..=28, filter, quick, jobs),
        "thm2.2" => closed_family(Family::Cycle, ClosedFormFamily::Cycle, 3..=12, 3..=28, filter, quick, jobs),
        "thm2.3" => closed_family(Family::Star, ClosedFormFamily::Star, 1..=11, 1..=27, filter, quick, jobs),
        "thm2.4" => closed_family(Family::Wheel, ClosedFormFamily::Wheel, 4..=12, 3..=27, filter, quick, jobs),
        "thm2.5" => closed_family(Family::Complete, ClosedFormFamily::Complete, 2..=12, 2..=28, filter, quick, jobs),
        "lem3.2" => forbidden_cuts(CutPattern::Exact(3), 4..=10, 4..=12, filter, quick, jobs),
        "lem3.3" => {
            let mut f = filter;
            f.even_only = true;
            forbidden_cuts(CutPattern::Odd, 4..=10, 4..=12, f, quick, jobs)
        }
        "lem3.4" => {
            let mut f = filter;
            f.odd_only = true;
            forbidden_cuts(CutPattern::Even, 5..=9, 5..=11, f, quick, jobs)
        }
        "thm4.2" => petersen_bounds(filter, quick, jobs),
        "lem4.3" => petersen_exact(1, 3..=3, 3..=3, filter, false, jobs),
        "thm4.4" => petersen_exact(1, 4..=12, 4..=14, filter, quick, jobs),
        "thm4.5" => {
            let mut f = filter;
            f.odd_only = true;
            petersen_exact(2, 7..=11, 7..=13, f, quick, jobs)
        }
        "thm4.6" => {
            let mut f = filter;
            f.even_only = true;
            petersen_exact(2, 8..=12, 8..=14, f, quick, jobs)
        }
        "ex5.1" => famous_example(FamousName::Petersen),
        "ex5.2" => famous_example(FamousName::Durer),
        "ex5.3" => famous_example(FamousName::MobiusKantor),
        "ex5.4" => famous_example(FamousName::Dodecahedron),
        "ex5.5" => famous_example(FamousName::Desargues),
        "ex5.6" => famous_example(FamousName::Nauru),
        "lem6.2" => bridge_construction(false, filter, quick),
        "lem6.3" => cubic_census_entry(4, 1),
        "lem6.4" => cubic_census_entry(6, 2),
        "lem6.5" => cubic_census_entry(8, 5),
        "lem6.6" => order10_witness(),
        "lem6.7" => bridge_construction(true, filter, quick),
        "lem6.8" => minimum_order_entry(filter, quick),
        _ => return None,
    };
    Some(Report::from_instances(id, instances, started.elapsed()))
}

/// Runs the whole catalog in order.
pub fn run_all(quick: bool, jobs: usize) -> Vec<Report> {
    CATALOG
        .iter()
        .map(|id| run(id, RangeFilter::default(), quick, jobs).expect("catalog ids all resolve"))
        .collect()
}

fn par_map<T: Send, O: Send>(
    jobs: usize,
    items: Vec<T>,
    f: impl Fn(T) -> O + Sync + Send,
) -> Vec<O> {
    if jobs <= 1 {
        items.into_iter().map(f).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| items.into_par_iter().map(f).collect())
    }
}

fn fast_value(g: &Graph) -> usize {
    solve(g, SolverKind::Fast, None)
        .expect("catalog instances stay inside solver guards")
        .value
}

fn closed_family(
    family: Family,
    closed: ClosedFormFamily,
    default: std::ops::RangeInclusive<usize>,
    valid: std::ops::RangeInclusive<usize>,
    filter: RangeFilter,
    quick: bool,
    jobs: usize,
) -> Vec<Instance> {
    let default = if quick {
        *default.start()..=(*default.end()).min(8)
    } else {
        default
    };
    let ns = filter.select(default, valid);
    par_map(jobs, ns, |n| {
        let g = family_graph(family, n).expect("catalog range is valid");
        Instance {
            params: json!({ "family": family.name(), "n": n }),
            expected: json!({ "rna": closed_form_rna(closed, n).expect("catalog range") }),
            computed: json!({ "rna": fast_value(&g) }),
        }
    })
}

fn petersen_pairs(ns: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &n in ns {
        for k in 1..n.div_ceil(2) {
            if 2 * k < n {
                out.push((n, k));
            }
        }
    }
    out
}

fn petersen_exact(
    k: usize,
    default: std::ops::RangeInclusive<usize>,
    valid: std::ops::RangeInclusive<usize>,
    filter: RangeFilter,
    quick: bool,
    jobs: usize,
) -> Vec<Instance> {
    let default = if quick {
        *default.start()..=(*default.end()).min(8)
    } else {
        default
    };
    let ns = filter.select(default, valid);
    let closed = if k == 1 {
        ClosedFormFamily::PetersenK1
    } else {
        ClosedFormFamily::PetersenK2
    };
    par_map(jobs, ns, move |n| {
        let g = generalized_petersen(n, k).expect("catalog range is valid");
        Instance {
            params: json!({ "n": n, "k": k }),
            expected: json!({ "rna": closed_form_rna(closed, n).expect("catalog range") }),
            computed: json!({ "rna": fast_value(&g) }),
        }
    })
}

fn petersen_bounds(filter: RangeFilter, quick: bool, jobs: usize) -> Vec<Instance> {
    let default = if quick { 3..=7 } else { 3..=10 };
    let pairs = petersen_pairs(&filter.select(default, 3..=14));
    par_map(jobs, pairs, |(n, k)| {
        let g = generalized_petersen(n, k).expect("catalog range is valid");
        let value = fast_value(&g);
        let spoke = proof_labeling(ProofLabelingKind::PetersenUpper, n).expect("n >= 3");
        let negatives = signs_from_labeling(&g, &spoke)
            .expect("labeling fits")
            .negative_count();
        Instance {
            params: json!({ "n": n, "k": k }),
            expected: json!({ "in_bounds": true, "spoke_negatives": n }),
            computed: json!({
                "in_bounds": (3..=n).contains(&value),
                "spoke_negatives": negatives,
            }),
        }
    })
}

fn forbidden_cuts(
    pattern: CutPattern,
    default: std::ops::RangeInclusive<usize>,
    valid: std::ops::RangeInclusive<usize>,
    filter: RangeFilter,
    quick: bool,
    jobs: usize,
) -> Vec<Instance> {
    let default = if quick {
        *default.start()..=(*default.end()).min(7)
    } else {
        default
    };
    let pairs = petersen_pairs(&filter.select(default, valid));
    let label = match pattern {
        CutPattern::Exact(s) => format!("size-{s}"),
        CutPattern::Odd => "odd".to_string(),
        CutPattern::Even => "even".to_string(),
    };
    par_map(jobs, pairs, move |(n, k)| {
        let g = generalized_petersen(n, k).expect("catalog range is valid");
        Instance {
            params: json!({ "n": n, "k": k, "pattern": label }),
            expected: json!({ "no_such_cut": true }),
            computed: json!({
                "no_such_cut": verify_no_cut(&g, pattern).expect("order within guard")
            }),
        }
    })
}

fn famous_example(name: FamousName) -> Vec<Instance> {
    let rec = famous(name);
    let g = rec.graph();
    let negatives = signs_from_labeling(&g, &rec.labeling)
        .expect("record labeling fits")
        .negative_count();
    vec![Instance {
        params: json!({
            "name": name.as_str(),
            "n": rec.descriptor.n,
            "k": rec.descriptor.k,
        }),
        expected: json!({
            "labeling_negatives": rec.claimed_rna,
            "solver_rna": rec.claimed_rna,
        }),
        computed: json!({
            "labeling_negatives": negatives,
            "solver_rna": fast_value(&g),
        }),
    }]
}

fn bridge_construction(plus: bool, filter: RangeFilter, quick: bool) -> Vec<Instance> {
    let default = if quick { 1..=2 } else { 1..=3 };
    let valid = if plus { 1..=7 } else { 1..=5 };
    filter
        .select(default, valid)
        .into_iter()
        .map(|n| {
            let (g, degree, order) = if plus {
                (
                    construct_regular_4np1(n).expect("catalog range fits capacity"),
                    4 * n + 1,
                    8 * n + 6,
                )
            } else {
                (
                    construct_regular_4nm1(n).expect("catalog range fits capacity"),
                    4 * n - 1,
                    12 * n - 2,
                )
            };
            Instance {
                params: json!({ "n": n }),
                expected: json!({
                    "order": order,
                    "regular": degree,
                    "balanced_bridge": true,
                }),
                computed: json!({
                    "order": g.order(),
                    "regular": g.regularity(),
                    "balanced_bridge": rna_one_check(&g).is_some(),
                }),
            }
        })
        .collect()
}

fn cubic_census_entry(order: usize, classes: usize) -> Vec<Instance> {
    let found = enumerate_cubic(order).expect("supported census order");
    let with_bridge = found.iter().filter(|g| rna_one_check(g).is_some()).count();
    vec![Instance {
        params: json!({ "order": order }),
        expected: json!({ "classes": classes, "with_balanced_bridge": 0 }),
        computed: json!({ "classes": found.len(), "with_balanced_bridge": with_bridge }),
    }]
}

fn order10_witness() -> Vec<Instance> {
    let (g, f) = fig9_cubic_order10();
    let negatives = signs_from_labeling(&g, &f)
        .expect("witness labeling fits")
        .negative_count();
    let witness = Instance {
        params: json!({ "graph": "fig9" }),
        expected: json!({ "order": 10, "cubic": true, "negative_edges": 1, "rna": 1 }),
        computed: json!({
            "order": g.order(),
            "cubic": g.regularity() == Some(3),
            "negative_edges": negatives,
            "rna": fast_value(&g),
        }),
    };
    let census = enumerate_cubic(10).expect("supported census order");
    let hits = census.iter().filter(|g| rna_one_check(g).is_some()).count();
    let census_instance = Instance {
        params: json!({ "order": 10 }),
        expected: json!({ "some_class_with_balanced_bridge": true }),
        computed: json!({ "some_class_with_balanced_bridge": hits >= 1 }),
    };
    vec![witness, census_instance]
}

fn minimum_order_entry(filter: RangeFilter, quick: bool) -> Vec<Instance> {
    let default = if quick { 1..=2 } else { 1..=3 };
    filter
        .select(default, 1..=7)
        .into_iter()
        .map(|n| {
            let degree = 4 * n + 1;
            let g = construct_regular_4np1(n).expect("catalog range fits capacity");
            Instance {
                params: json!({ "n": n, "degree": degree }),
                expected: json!({ "min_order": 8 * n + 6, "construction_order": 8 * n + 6 }),
                computed: json!({
                    "min_order": min_order_with_balanced_bridge(degree).expect("odd degree"),
                    "construction_order": g.order(),
                }),
            }
        })
        .collect()
}
