//! Edge-list text format: a line holding `N`, then one `u v` pair per line
//! with 0-based ids. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut offset = 0;
    for raw in text.split('\n') {
        let line_start = offset;
        offset += raw.len() + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            offset: line_start,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (&mut graph, fields.as_slice()) {
            (None, [n]) => {
                let n = n
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad vertex count {n:?}: {e}")))?;
                graph = Some(Graph::empty(n));
            }
            (None, _) => return Err(err("first line must hold the vertex count".into())),
            (Some(g), [u, v]) => {
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|e| err(format!("bad vertex id {s:?}: {e}")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                g.insert_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            (Some(_), _) => return Err(err(format!("expected `u v`, got {line:?}"))),
        }
    }
    graph.ok_or_else(|| Error::Parse {
        offset: 0,
        message: "missing vertex count".into(),
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_edge_list("# triangle\n3\n\n0 1\n1 2 # closing\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(
            parse_edge_list(&emit_edge_list(&Graph::cycle(5))).unwrap(),
            Graph::cycle(5)
        );
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse_edge_list("3\n0 3\n"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(parse_edge_list("3\n1 1\n").is_err());
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
    }
}
