use std::fmt;
use std::path::Path;

use hrank::mixedgraph::{parse_graph6, parse_mixed_graph, MixedGraph};
use hrank::verify::{enumerate_orientations, OrientationCode};

/// Largest order the structural algorithms accept.
pub const MAX_VERTICES: usize = 64;

/// Malformed or unsupported input; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub struct Loaded {
    /// `path` for mixed-graph files, `path:line#code` for graph6 lines.
    pub label: String,
    pub graph: MixedGraph,
}

/// Reads a mixed-graph file (`MG <n>` header) or a graph6 list. Graph6
/// lines carry no orientation: `orientation` applies one code to every
/// line, otherwise every orientation is enumerated.
pub fn load(
    path: &Path,
    orientation: Option<&OrientationCode>,
    cap_edges: usize,
) -> Result<Vec<Loaded>, InputError> {
    let shown = path.display();
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{shown}: cannot read: {e}")))?;
    let first = text
        .lines()
        .map(str::trim)
        .enumerate()
        .find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mixed_format = first.is_some_and(|(_, l)| l.split_whitespace().next() == Some("MG"));

    let mut out = Vec::new();
    if mixed_format {
        if orientation.is_some() {
            return Err(InputError(format!(
                "{shown}: --orientation applies to graph6 input only"
            )));
        }
        let graph = parse_mixed_graph(&text).map_err(|e| InputError(format!("{shown}: {e}")))?;
        let header_line = first.map_or(1, |(i, _)| i + 1);
        check_order(&shown, header_line, graph.n())?;
        out.push(Loaded {
            label: shown.to_string(),
            graph,
        });
        return Ok(out);
    }

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line, line_no).map_err(|e| InputError(format!("{shown}: {e}")))?;
        check_order(&shown, line_no, g.n())?;
        let graphs: Vec<MixedGraph> = match orientation {
            Some(code) => vec![code
                .decode(&g)
                .map_err(|e| InputError(format!("{shown}: line {line_no}: {e}")))?],
            None => enumerate_orientations(&g, cap_edges)
                .map_err(|e| InputError(format!("{shown}: line {line_no}: {e}")))?
                .collect(),
        };
        for graph in graphs {
            let code = OrientationCode::encode(&graph);
            out.push(Loaded {
                label: format!("{shown}:{line_no}#{code}"),
                graph,
            });
        }
    }
    if out.is_empty() {
        return Err(InputError(format!("{shown}: no graphs found")));
    }
    Ok(out)
}

fn check_order(shown: &impl fmt::Display, line: usize, n: usize) -> Result<(), InputError> {
    if n > MAX_VERTICES {
        return Err(InputError(format!(
            "{shown}: line {line}: graph has {n} vertices; at most {MAX_VERTICES} are supported"
        )));
    }
    Ok(())
}
