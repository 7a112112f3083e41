//! Loading pattern and host graphs from the command line, files and the
//! seeded random generator.

use std::fs;
use std::path::Path;

use hombound::graph::edgelist::parse_edge_list;
use hombound::graph::graph6::{emit_graph6, parse_graph6, parse_graph6_stream};
use hombound::graph::random_graph;
use hombound::Graph;

use crate::config::RandomSpec;
use crate::error::CliError;

/// A graph with the string that identifies it in reports.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
}

impl Instance {
    /// Identified by its graph6 string, or by `fallback` when the graph is
    /// too large for the short graph6 form.
    fn new(graph: Graph, fallback: impl FnOnce() -> String) -> Self {
        let id = emit_graph6(&graph).unwrap_or_else(|_| fallback());
        Instance { id, graph }
    }
}

pub fn from_graph6_args(args: &[String]) -> Result<Vec<Instance>, CliError> {
    args.iter()
        .map(|s| {
            let g = parse_graph6(s)
                .map_err(|e| CliError::from_core(e, &format!("graph6 argument {s:?}")))?;
            Ok(Instance::new(g, || s.clone()))
        })
        .collect()
}

/// A file whose first meaningful line is a bare integer is an edge list;
/// anything else is read as a graph6 stream.
pub fn from_file(path: &Path) -> Result<Vec<Instance>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let name = path.display().to_string();
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_edge_list = first.is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit()));
    let graphs = if is_edge_list {
        vec![parse_edge_list(&text).map_err(|e| CliError::from_core(e, &name))?]
    } else {
        parse_graph6_stream(&text).map_err(|e| CliError::from_core(e, &name))?
    };
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| Instance::new(g, || format!("{name}#{i}")))
        .collect())
}

/// Graph `i` is `G(N, p)` drawn with seed `seed + i`.
pub fn from_random(spec: &RandomSpec, seed: u64) -> Result<Vec<Instance>, CliError> {
    (0..spec.count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            let g = random_graph(spec.vertices, &spec.p, s)
                .map_err(|e| CliError::from_core(e, &format!("random graph {i}")))?;
            Ok(Instance::new(g, || {
                format!("random:{},{},{s}", spec.vertices, spec.p)
            }))
        })
        .collect()
}

pub fn collect(
    graph6: &[String],
    file: Option<&Path>,
    random: Option<&RandomSpec>,
    seed: u64,
) -> Result<Vec<Instance>, CliError> {
    let mut out = from_graph6_args(graph6)?;
    if let Some(path) = file {
        out.extend(from_file(path)?);
    }
    if let Some(spec) = random {
        out.extend(from_random(spec, seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hombound::ExactRational;
    use std::io::Write;

    #[test]
    fn detects_file_format() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# triangle\n3\n0 1\n1 2\n0 2").unwrap();
        let v = from_file(f.path()).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].id, "Bw");

        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, ">>graph6<<Bw\nBg\n\nA_").unwrap();
        let ids: Vec<String> = from_file(f.path())
            .unwrap()
            .into_iter()
            .map(|i| i.id)
            .collect();
        assert_eq!(ids, ["Bw", "Bg", "A_"]);
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        let e = from_graph6_args(&["B~".to_string()]).unwrap_err();
        assert_eq!(e.code(), 2);
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "Bw\nB!").unwrap();
        assert_eq!(from_file(f.path()).unwrap_err().code(), 2);
        assert_eq!(
            from_file(Path::new("/nonexistent/graphs.g6"))
                .unwrap_err()
                .code(),
            1
        );
    }

    #[test]
    fn random_corpus_is_seeded() {
        let spec = RandomSpec {
            vertices: 6,
            p: ExactRational::ratio(1, 2).unwrap(),
            count: 4,
        };
        let a: Vec<String> = from_random(&spec, 9)
            .unwrap()
            .into_iter()
            .map(|i| i.id)
            .collect();
        let b: Vec<String> = from_random(&spec, 9)
            .unwrap()
            .into_iter()
            .map(|i| i.id)
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
    }
}
