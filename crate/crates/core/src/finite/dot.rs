use std::fmt::Write;

use super::FiniteMultigraph;

impl FiniteMultigraph {
    /// Undirected DOT text. Parallel edges become repeated `--` statements,
    /// loops are self-edges, and every edge is labelled with its id.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for inc in self.edges() {
            let (u, v) = inc.endpoints();
            let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", inc.edge());
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::types::{EdgeId, Incidence, VertexId};

    use super::*;

    #[test]
    fn parallel_edges_and_loops() {
        let g = FiniteMultigraph::from_incidences([
            Incidence::new(EdgeId(0), VertexId(0), VertexId(1)),
            Incidence::new(EdgeId(1), VertexId(1), VertexId(0)),
            Incidence::new(EdgeId(2), VertexId(1), VertexId(1)),
        ]);
        let dot = g.to_dot("G");
        assert_eq!(
            dot,
            "graph G {\n  0;\n  1;\n  0 -- 1 [label=\"0\"];\n  0 -- 1 [label=\"1\"];\n  1 -- 1 [label=\"2\"];\n}\n"
        );
    }
}
