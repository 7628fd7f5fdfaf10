use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use koenig::constructions::{attach_k2, bullet_kp, non_ke_alpha_plus_family, KpAttach};
use koenig::fixtures::fixture;
use koenig::generators::{
    complete, complete_bipartite, cycle, path, random_bipartite, random_bipartite_with_pm, random_connected_bipartite,
    random_connected_graph, random_graph, random_tree,
};
use koenig::io::{read_edge_list, write_edge_list};
use koenig::{maximum_matching, Graph};

use crate::{emit, limits, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// A named fixture (positional NAME).
    Fixture,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    RandomGraph,
    RandomTree,
    RandomBipartite,
    RandomBipartitePm,
    RandomConnected,
    RandomConnectedBipartite,
    /// `--base` with a clique of order `--p` attached.
    BulletKp,
    /// `--base` with a pendant K2 whose inner vertex sees `--attach`.
    AttachK2,
    /// α⁺-stable non-König-Egerváry graph of order `--n`, core size `--variant`.
    NonKeAlphaPlus,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Fixture name for `fixture`.
    name: Option<String>,
    /// Order (for bipartite kinds with a perfect matching: side size).
    #[arg(long)]
    n: Option<usize>,
    /// First side of a bipartite graph.
    #[arg(long)]
    a: Option<usize>,
    /// Second side of a bipartite graph.
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability for random kinds.
    #[arg(long, default_value_t = 0.3)]
    prob: f64,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of graphs; seeds `seed, seed + 1, ...`, requires `--out DIR`.
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Base graph: a fixture name, `pN`, `cN`, `kN`, `kA,B`, or a file.
    #[arg(long)]
    base: Option<String>,
    /// Clique order for `bullet-kp`.
    #[arg(long)]
    p: Option<usize>,
    /// Attachment: `u,v` (matched edge) or `y` for `bullet-kp`; a vertex list
    /// for `attach-k2`.
    #[arg(long, value_delimiter = ',')]
    attach: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    variant: u8,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: GenKind) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::input(format!("{kind:?} needs --{flag}")))
}

/// `pN`, `cN`, `kN`, `kA,B`, a fixture name, or an edge-list file.
pub fn named_graph(spec: &str) -> Result<Graph, Failure> {
    if let Some(f) = fixture(spec) {
        return Ok(f.graph);
    }
    let number = |s: &str| s.parse::<usize>().ok();
    let mut chars = spec.chars();
    let head = chars.next();
    let rest = chars.as_str();
    match (head, rest.split_once(',')) {
        (Some('k'), Some((a, b))) => {
            if let (Some(a), Some(b)) = (number(a), number(b)) {
                return Ok(complete_bipartite(a, b));
            }
        }
        (Some('p'), None) => {
            if let Some(n) = number(rest) {
                return Ok(path(n));
            }
        }
        (Some('c'), None) => {
            if let Some(n) = number(rest) {
                return Ok(cycle(n)?);
            }
        }
        (Some('k'), None) => {
            if let Some(n) = number(rest) {
                return Ok(complete(n));
            }
        }
        _ => {}
    }
    Ok(read_edge_list(spec)?)
}

fn one(args: &GenerateArgs, seed: Option<u64>) -> Result<Graph, Failure> {
    let kind = args.kind;
    let seed = || need(seed, "seed", kind);
    let n = || need(args.n, "n", kind);
    let l = limits(args.cap)?;
    let g = match kind {
        GenKind::Fixture => {
            let name = args
                .name
                .as_deref()
                .ok_or_else(|| Failure::input("fixture needs a NAME"))?;
            fixture(name)
                .ok_or_else(|| Failure::input(format!("no fixture named `{name}`")))?
                .graph
        }
        GenKind::Path => path(n()?),
        GenKind::Cycle => cycle(n()?)?,
        GenKind::Complete => complete(n()?),
        GenKind::CompleteBipartite => complete_bipartite(need(args.a, "a", kind)?, need(args.b, "b", kind)?),
        GenKind::RandomGraph => random_graph(n()?, args.prob, seed()?)?,
        GenKind::RandomTree => random_tree(n()?, seed()?)?,
        GenKind::RandomBipartite => {
            random_bipartite(need(args.a, "a", kind)?, need(args.b, "b", kind)?, args.prob, seed()?)?
        }
        GenKind::RandomBipartitePm => random_bipartite_with_pm(n()?, args.prob, seed()?)?,
        GenKind::RandomConnected => random_connected_graph(n()?, args.prob, seed()?)?,
        GenKind::RandomConnectedBipartite => random_connected_bipartite(n()?, args.prob, seed()?)?,
        GenKind::BulletKp => {
            let base = named_graph(
                args.base
                    .as_deref()
                    .ok_or_else(|| Failure::input("bullet-kp needs --base"))?,
            )?;
            let p = need(args.p, "p", kind)?;
            let attach = match (args.attach.as_slice(), p) {
                (&[u, v], _) => KpAttach::MatchedEdge(u, v),
                (&[y], _) => KpAttach::Vertex(y),
                (&[], 1 | 2) => {
                    let e = *maximum_matching(&base)
                        .pairs()
                        .first()
                        .ok_or_else(|| Failure::input("base graph has no edges"))?;
                    KpAttach::MatchedEdge(e.0, e.1)
                }
                (&[], _) => KpAttach::Vertex(0),
                _ => return Err(Failure::input("--attach takes one vertex or two")),
            };
            bullet_kp(&base, p, attach, &l)?
        }
        GenKind::AttachK2 => {
            let base = named_graph(
                args.base
                    .as_deref()
                    .ok_or_else(|| Failure::input("attach-k2 needs --base"))?,
            )?;
            attach_k2(&base, &args.attach, &l)?.graph
        }
        GenKind::NonKeAlphaPlus => non_ke_alpha_plus_family(n()?, args.variant, &l)?,
    };
    Ok(g)
}

pub fn run(args: &GenerateArgs) -> Result<(), Failure> {
    if args.count <= 1 {
        return emit(args.out.as_deref(), &write_edge_list(&one(args, args.seed)?));
    }
    let dir = args
        .out
        .as_ref()
        .ok_or_else(|| Failure::input("--count above 1 needs --out DIR"))?;
    let first = args
        .seed
        .ok_or_else(|| Failure::input("--count above 1 needs --seed"))?;
    fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let kind = format!("{:?}", args.kind).to_lowercase();
    for i in 0..args.count {
        let seed = first + i;
        let g = one(args, Some(seed))?;
        emit(Some(&dir.join(format!("{kind}-{seed}.gr"))), &write_edge_list(&g))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("c4").unwrap().size(), 4);
        assert_eq!(named_graph("p3").unwrap().order(), 3);
        assert_eq!(named_graph("k4").unwrap().size(), 6);
        assert_eq!(named_graph("k2,3").unwrap().size(), 6);
        assert_eq!(named_graph("fig4_g1").unwrap().order(), 8);
        assert!(named_graph("no/such/file.gr").is_err());
    }
}
