//! Graph-spec parsing shared by the compute and export commands.

use anyhow::{anyhow, bail, Result};

use rna_core::constructions::{
    construct_gr, construct_gs, construct_regular_4nm1, construct_regular_4np1, famous,
    fig9_cubic_order10, FamousGraphRecord, FamousName,
};
use rna_core::graph::{family_graph, Family, Graph, NameStyle, PetersenDescriptor};
use rna_core::signing::ParityLabeling;

/// A resolved graph together with naming/labeling context.
pub struct ResolvedGraph {
    pub graph: Graph,
    pub describe: String,
    pub names: NameStyle,
    /// Petersen parameters when the spec was a generalized Petersen graph.
    pub petersen: Option<PetersenDescriptor>,
    /// Reference labeling, when the spec carries one (famous graphs, fig9).
    pub reference_labeling: Option<ParityLabeling>,
}

/// Command-line graph selectors; exactly one must be set.
#[derive(clap::Args, Debug, Clone, Default)]
pub struct GraphSpec {
    /// Generalized Petersen graph P(n,k), e.g. --petersen 5,2
    #[arg(long, value_name = "N,K", group = "gspec")]
    pub petersen: Option<String>,

    /// Family member, e.g. --family cycle:8 (path, cycle, star, wheel, complete)
    #[arg(long, value_name = "NAME:N", group = "gspec")]
    pub family: Option<String>,

    /// Named graph: petersen, durer, mobius-kantor, dodecahedron, desargues, nauru
    #[arg(long, value_name = "NAME", group = "gspec")]
    pub famous: Option<String>,

    /// Construction: gr:N, gs:N, reg4nm1:N, reg4np1:N or fig9
    #[arg(long, value_name = "WHICH", group = "gspec")]
    pub construct: Option<String>,

    /// Explicit edge list, e.g. --edges "0-1,1-2" (order = max index + 1)
    #[arg(long, value_name = "LIST", group = "gspec")]
    pub edges: Option<String>,

    /// Graph from a JSON file with schema {"order": n, "edges": [[a,b],...]}
    #[arg(long, value_name = "PATH", group = "gspec")]
    pub json_file: Option<std::path::PathBuf>,
}

impl GraphSpec {
    pub fn resolve(&self) -> Result<ResolvedGraph> {
        if let Some(spec) = &self.petersen {
            let (n, k) = parse_pair(spec, ',')
                .ok_or_else(|| anyhow!("--petersen expects N,K (got {spec:?})"))?;
            let desc = PetersenDescriptor::new(n, k).map_err(core_err)?;
            return Ok(ResolvedGraph {
                graph: desc.graph(),
                describe: format!("P({n},{k})"),
                names: NameStyle::PetersenPairs { n },
                petersen: Some(desc),
                reference_labeling: None,
            });
        }
        if let Some(spec) = &self.family {
            let (name, n) = spec
                .split_once(':')
                .ok_or_else(|| anyhow!("--family expects NAME:N (got {spec:?})"))?;
            let family: Family = name.parse().map_err(|e: String| anyhow!(e))?;
            let n: usize = n.parse().map_err(|_| anyhow!("bad family size {n:?}"))?;
            let graph = family_graph(family, n).map_err(core_err)?;
            return Ok(ResolvedGraph {
                graph,
                describe: format!("{name}:{n}"),
                names: NameStyle::Index,
                petersen: None,
                reference_labeling: None,
            });
        }
        if let Some(name) = &self.famous {
            let name: FamousName = name.parse().map_err(|e: String| anyhow!(e))?;
            let FamousGraphRecord {
                descriptor,
                labeling,
                ..
            } = famous(name);
            return Ok(ResolvedGraph {
                graph: descriptor.graph(),
                describe: format!(
                    "{} = P({},{})",
                    name.as_str(),
                    descriptor.n,
                    descriptor.k
                ),
                names: NameStyle::PetersenPairs { n: descriptor.n },
                petersen: Some(descriptor),
                reference_labeling: Some(labeling),
            });
        }
        if let Some(spec) = &self.construct {
            return resolve_construct(spec);
        }
        if let Some(list) = &self.edges {
            let mut edges = Vec::new();
            let mut max_vertex = 0usize;
            for part in list.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                let (a, b) = parse_pair(part, '-')
                    .ok_or_else(|| anyhow!("bad edge {part:?} (expected A-B)"))?;
                max_vertex = max_vertex.max(a).max(b);
                edges.push((a, b));
            }
            if edges.is_empty() {
                bail!("--edges needs at least one edge");
            }
            let graph = Graph::new(max_vertex + 1, &edges).map_err(core_err)?;
            return Ok(ResolvedGraph {
                describe: "edge list".to_string(),
                graph,
                names: NameStyle::Index,
                petersen: None,
                reference_labeling: None,
            });
        }
        if let Some(path) = &self.json_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| anyhow!(IoFailure(format!("{}: {e}", path.display()))))?;
            let graph = Graph::from_json(&text).map_err(core_err)?;
            return Ok(ResolvedGraph {
                describe: path.display().to_string(),
                graph,
                names: NameStyle::Index,
                petersen: None,
                reference_labeling: None,
            });
        }
        bail!(
            "no graph given: use one of --petersen, --family, --famous, --construct, \
             --edges, --json-file"
        );
    }
}

fn resolve_construct(spec: &str) -> Result<ResolvedGraph> {
    let plain = |graph: Graph, describe: String| ResolvedGraph {
        graph,
        describe,
        names: NameStyle::Index,
        petersen: None,
        reference_labeling: None,
    };
    if spec == "fig9" {
        let (graph, labeling) = fig9_cubic_order10();
        return Ok(ResolvedGraph {
            graph,
            describe: "order-10 cubic bridge witness".into(),
            names: NameStyle::Index,
            petersen: None,
            reference_labeling: Some(labeling),
        });
    }
    let (which, n) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("--construct expects WHICH:N or fig9 (got {spec:?})"))?;
    let n: usize = n.parse().map_err(|_| anyhow!("bad construction size {n:?}"))?;
    let out = match which {
        "gr" => plain(construct_gr(n).map_err(core_err)?, format!("gr:{n}")),
        "gs" => plain(construct_gs(n).map_err(core_err)?, format!("gs:{n}")),
        "reg4nm1" => plain(
            construct_regular_4nm1(n).map_err(core_err)?,
            format!("{}-regular bridge graph", 4 * n - 1),
        ),
        "reg4np1" => plain(
            construct_regular_4np1(n).map_err(core_err)?,
            format!("{}-regular bridge graph", 4 * n + 1),
        ),
        other => bail!("unknown construction {other:?} (gr, gs, reg4nm1, reg4np1, fig9)"),
    };
    Ok(out)
}

fn parse_pair(s: &str, sep: char) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(sep)?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Marker wrapper so main() can map I/O failures to their own exit code.
#[derive(Debug)]
pub struct IoFailure(pub String);

impl std::fmt::Display for IoFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for IoFailure {}

/// Wraps a core error so exit-code classification survives the anyhow chain.
pub fn core_err(e: rna_core::Error) -> anyhow::Error {
    anyhow::Error::new(e)
}
