//! Plain-text exports. All three formats follow the canonical vertex and edge
//! order and end every line with `\n`.
//!
//! * edge list: `"<|V|> <|E|>"`, then `"<u> <w>"` per edge with `u < w`.
//! * incidence: `"<|V|> <|E|>"`, then one row per vertex of `|E|` space-separated 0/1 digits.
//! * DOT: an undirected `graph G`, nodes `v<i>` labelled `"(a,b)"`, one `--` statement per edge.

use std::io::{self, Write};
use std::str::FromStr;

use super::UnitGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
    IncidenceText,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edges" | "edge-list" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "incidence" => Ok(ExportFormat::IncidenceText),
            other => Err(format!("unknown export format `{other}`")),
        }
    }
}

impl UnitGraph {
    pub fn export<W: Write>(&self, format: ExportFormat, out: W) -> io::Result<()> {
        match format {
            ExportFormat::EdgeList => write_edge_list(self, out),
            ExportFormat::Dot => write_dot(self, out),
            ExportFormat::IncidenceText => write_incidence(self, out),
        }
    }

    pub fn export_to_string(&self, format: ExportFormat) -> String {
        let mut buf = Vec::new();
        self.export(format, &mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("exports are ASCII")
    }
}

pub fn write_edge_list<W: Write>(g: &UnitGraph, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for &(u, w) in g.edges() {
        writeln!(out, "{u} {w}")?;
    }
    out.flush()
}

pub fn write_incidence<W: Write>(g: &UnitGraph, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    let mut line = String::with_capacity(2 * g.edge_count());
    for v in 0..g.vertex_count() {
        line.clear();
        for (e, &(u, w)) in g.edges().iter().enumerate() {
            if e > 0 {
                line.push(' ');
            }
            line.push(if u == v || w == v { '1' } else { '0' });
        }
        writeln!(out, "{line}")?;
    }
    out.flush()
}

pub fn write_dot<W: Write>(g: &UnitGraph, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "graph G {{")?;
    for (i, x) in g.vertices().iter().enumerate() {
        writeln!(out, "    v{i} [label=\"{x}\"];")?;
    }
    for &(u, w) in g.edges() {
        writeln!(out, "    v{u} -- v{w};")?;
    }
    writeln!(out, "}}")?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn graph(n: u64, m: u64) -> UnitGraph {
        UnitGraph::build(RingSpec::new(n, m).unwrap())
    }

    #[test]
    fn edge_list_small() {
        assert_eq!(
            graph(2, 2).export_to_string(ExportFormat::EdgeList),
            "4 2\n0 3\n1 2\n"
        );
    }

    #[test]
    fn incidence_small() {
        assert_eq!(
            graph(2, 2).export_to_string(ExportFormat::IncidenceText),
            "4 2\n1 0\n0 1\n0 1\n1 0\n"
        );
    }

    #[test]
    fn dot_small() {
        let expected = "graph G {\n    v0 [label=\"(0,0)\"];\n    v1 [label=\"(0,1)\"];\n    \
                        v2 [label=\"(1,0)\"];\n    v3 [label=\"(1,1)\"];\n    v0 -- v3;\n    v1 -- v2;\n}\n";
        assert_eq!(graph(2, 2).export_to_string(ExportFormat::Dot), expected);
    }

    #[test]
    fn format_names() {
        assert_eq!("dot".parse(), Ok(ExportFormat::Dot));
        assert!("png".parse::<ExportFormat>().is_err());
    }
}
